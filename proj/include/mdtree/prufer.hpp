#pragma once

#include <span>
#include <vector>

#include "mdtree/tree.hpp"

namespace mdtree {

/// Word of length |alphabet| - 1 over a finite label alphabet; encodes a
/// rooted tree on that alphabet.
class PruferWord {
 public:
  /// Throws ValidationError if a letter is outside `alphabet`, the alphabet
  /// is empty, or the length is not |alphabet| - 1.
  PruferWord(std::vector<Label> alphabet, std::vector<Label> letters);

  std::span<const Label> alphabet() const { return alphabet_; }
  std::span<const Label> letters() const { return letters_; }

  friend bool operator==(const PruferWord&, const PruferWord&) = default;

 private:
  std::vector<Label> alphabet_;
  std::vector<Label> letters_;
};

/// Rooted Prüfer code: repeatedly delete the smallest vertex without
/// children and record its parent, until only the root is left. The last
/// letter is the root, and v occurs once per child of v.
PruferWord encode(const RootedTree& t);

RootedTree decode(const PruferWord& w);

/// Word in [n]^n of a tree on [n+1] in which n+1 is a leaf and 1..k are
/// not. Throws ValidationError naming the first failed membership condition.
std::vector<Label> word_of_fnk_tree(const RootedTree& t, unsigned n, unsigned k);

/// Inverse of word_of_fnk_tree: decodes a word in [n]^n whose image
/// contains [k] over the alphabet [n+1].
RootedTree fnk_tree_of_word(std::span<const Label> word, unsigned n, unsigned k);

/// The label set {1, ..., n}.
std::vector<Label> iota_labels(unsigned n);

}  // namespace mdtree

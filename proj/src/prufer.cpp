#include "mdtree/prufer.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "mdtree/error.hpp"

namespace mdtree {

namespace {

using MinHeap = std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>>;

std::size_t index_in(std::span<const Label> sorted, Label v) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                  sorted.begin());
}

}  // namespace

PruferWord::PruferWord(std::vector<Label> alphabet, std::vector<Label> letters)
    : alphabet_(label_set(alphabet)), letters_(std::move(letters)) {
  if (alphabet_.size() != alphabet.size()) throw ValidationError("alphabet repeats a label");
  if (alphabet_.empty()) throw ValidationError("alphabet is empty");
  if (alphabet_.front() == kNoLabel) throw ValidationError("label 0 is not allowed");
  if (letters_.size() + 1 != alphabet_.size())
    throw ValidationError("word length " + std::to_string(letters_.size()) +
                          " does not match alphabet size " + std::to_string(alphabet_.size()));
  for (Label v : letters_)
    if (!std::binary_search(alphabet_.begin(), alphabet_.end(), v))
      throw ValidationError("letter " + std::to_string(v) + " is not in the alphabet");
}

PruferWord encode(const RootedTree& t) {
  std::span<const Label> labels = t.labels();
  std::vector<std::size_t> remaining(labels.size());
  MinHeap leaves;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    remaining[i] = t.children(labels[i]).size();
    if (remaining[i] == 0) leaves.push(i);
  }
  std::vector<Label> letters;
  letters.reserve(labels.size() - 1);
  while (letters.size() + 1 < labels.size()) {
    std::size_t leaf = leaves.top();
    leaves.pop();
    Label parent = *t.parent(labels[leaf]);
    letters.push_back(parent);
    std::size_t p = index_in(labels, parent);
    if (--remaining[p] == 0) leaves.push(p);
  }
  return PruferWord({labels.begin(), labels.end()}, std::move(letters));
}

RootedTree decode(const PruferWord& w) {
  std::span<const Label> alphabet = w.alphabet();
  std::span<const Label> letters = w.letters();
  if (letters.empty()) return RootedTree(alphabet.front());

  std::vector<std::size_t> remaining(alphabet.size(), 0);
  for (Label v : letters) ++remaining[index_in(alphabet, v)];
  MinHeap leaves;
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (remaining[i] == 0) leaves.push(i);

  std::vector<Edge> edges;
  edges.reserve(letters.size());
  for (Label parent : letters) {
    std::size_t leaf = leaves.top();
    leaves.pop();
    edges.push_back({alphabet[leaf], parent});
    std::size_t p = index_in(alphabet, parent);
    if (--remaining[p] == 0) leaves.push(p);
  }
  return RootedTree(letters.back(), edges);
}

std::vector<Label> iota_labels(unsigned n) {
  std::vector<Label> out(n);
  for (unsigned i = 0; i < n; ++i) out[i] = i + 1;
  return out;
}

std::vector<Label> word_of_fnk_tree(const RootedTree& t, unsigned n, unsigned k) {
  if (k > n) throw ValidationError("k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  if (t.size() != n + 1 || t.labels().front() != 1 || t.max_label() != n + 1)
    throw ValidationError("tree is not on [n+1] for n=" + std::to_string(n));
  if (!t.is_leaf(n + 1)) throw ValidationError("vertex n+1=" + std::to_string(n + 1) + " is not a leaf");
  for (Label i = 1; i <= k; ++i)
    if (t.is_leaf(i)) throw ValidationError("vertex " + std::to_string(i) + " <= k is a leaf");
  PruferWord w = encode(t);
  return {w.letters().begin(), w.letters().end()};
}

RootedTree fnk_tree_of_word(std::span<const Label> word, unsigned n, unsigned k) {
  if (k > n) throw ValidationError("k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  if (word.size() != n)
    throw ValidationError("word length " + std::to_string(word.size()) + " is not n=" + std::to_string(n));
  std::vector<bool> present(n + 1, false);
  for (Label v : word) {
    if (v < 1 || v > n) throw ValidationError("letter " + std::to_string(v) + " is outside [n]");
    present[v] = true;
  }
  for (Label i = 1; i <= k; ++i)
    if (!present[i]) throw ValidationError("letter " + std::to_string(i) + " <= k does not occur");
  return decode(PruferWord(iota_labels(n + 1), {word.begin(), word.end()}));
}

}  // namespace mdtree

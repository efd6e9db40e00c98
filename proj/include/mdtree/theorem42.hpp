#pragma once

#include <vector>

#include "mdtree/tree.hpp"

namespace mdtree {

// Bijection between trees on [n] whose root has l smaller children and
// forests on [n] with l+1 trees in which n is a leaf.
//
// The tree is cut into its alpha cycle; the tree holding n is set aside (and
// passed through phi so that n becomes a leaf); the remaining trees are laid
// out so their roots form a word order-isomorphic to the cycle's root word
// after the largest root, and that word is split into cycles at its
// left-to-right maxima. Each cycle is folded back into a tree with
// alpha_cycle_inv.

/// Number of children of the root that are smaller than the root.
std::size_t smaller_root_children(const RootedTree& t);

/// Positions (0-based) of the left-to-right maxima of `word`.
std::vector<std::size_t> left_to_right_maxima(const std::vector<Label>& word);

/// Forest returned with its trees in ascending root order. Throws
/// ValidationError unless t is a tree on [n] for some n >= 1.
OrderedForest theorem42_map(const RootedTree& t);

/// Inverse of theorem42_map; accepts the trees in any order. Throws
/// ValidationError unless the forest is on [n] and n is a leaf.
RootedTree theorem42_inv(const OrderedForest& forest);

}  // namespace mdtree

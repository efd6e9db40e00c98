#pragma once

#include <span>
#include <vector>

#include "mdtree/tree.hpp"

namespace mdtree {

// Membership-checked wrappers for the sets the bijections connect. Each
// constructor throws ValidationError naming the violated condition.
//
// A vertex is *special* when its label is at most k.

inline bool is_special(Label v, unsigned k) { return v <= k; }

std::size_t count_special(const RootedTree& t, unsigned k);
std::size_t count_special(std::span<const RootedTree> trees, unsigned k);

/// True iff labels == {1, ..., n}.
bool is_initial_segment(std::span<const Label> labels, unsigned n);

/// Tree on [n+1] whose maximal decreasing subtree has k+1 vertices.
class TnkTree {
 public:
  TnkTree(RootedTree tree, unsigned n, unsigned k);
  /// Reads n and k off a tree on [n+1].
  static TnkTree classify(RootedTree tree);

  const RootedTree& tree() const { return tree_; }
  unsigned n() const { return n_; }
  unsigned k() const { return k_; }

  friend bool operator==(const TnkTree&, const TnkTree&) = default;

 private:
  RootedTree tree_;
  unsigned n_;
  unsigned k_;
};

/// Cycle of k+1 minimally rooted trees partitioning [n+1].
class AnkCycle {
 public:
  AnkCycle(TreeCycle cycle, unsigned n, unsigned k);
  static AnkCycle classify(TreeCycle cycle);

  const TreeCycle& cycle() const { return cycle_; }
  unsigned n() const { return n_; }
  unsigned k() const { return k_; }

  friend bool operator==(const AnkCycle&, const AnkCycle&) = default;

 private:
  TreeCycle cycle_;
  unsigned n_;
  unsigned k_;
};

/// Ordered forest on [n] whose last k trees are minimally rooted.
class BnkForest {
 public:
  BnkForest(OrderedForest forest, unsigned n, unsigned k);

  const OrderedForest& forest() const { return forest_; }
  unsigned n() const { return n_; }
  unsigned k() const { return k_; }

  friend bool operator==(const BnkForest&, const BnkForest&) = default;

 private:
  OrderedForest forest_;
  unsigned n_;
  unsigned k_;
};

/// Whether (T_0, ..., T_l) is k-good:
///  - l = 0: T_0 has no special vertex, or T_0 is a single special vertex;
///  - l >= 1: T_1..T_l are minimally rooted, T_0..T_i hold at least i+1
///    special vertices for every i < l, and T_0..T_l hold exactly l.
/// The empty forest is not k-good.
bool is_k_good(const OrderedForest& f, unsigned k);

class KGoodForest {
 public:
  KGoodForest(OrderedForest forest, unsigned k);

  const OrderedForest& forest() const { return forest_; }
  unsigned k() const { return k_; }

  friend bool operator==(const KGoodForest&, const KGoodForest&) = default;

 private:
  OrderedForest forest_;
  unsigned k_;
};

/// Sequence of k-good forests whose vertex sets partition [n].
class CnkSequence {
 public:
  CnkSequence(std::vector<OrderedForest> forests, unsigned n, unsigned k);

  std::span<const OrderedForest> forests() const { return forests_; }
  unsigned n() const { return n_; }
  unsigned k() const { return k_; }

  friend bool operator==(const CnkSequence&, const CnkSequence&) = default;

 private:
  std::vector<OrderedForest> forests_;
  unsigned n_;
  unsigned k_;
};

/// Label-disjoint forests (X, Y) where every tree of Y is minimally rooted
/// and X and Y together hold exactly |Y| special vertices.
class BalancedPair {
 public:
  BalancedPair(OrderedForest x, OrderedForest y, unsigned k);
  static BalancedPair empty(unsigned k) { return BalancedPair({}, {}, k); }

  const OrderedForest& x() const { return x_; }
  const OrderedForest& y() const { return y_; }
  unsigned k() const { return k_; }
  bool is_empty() const { return x_.empty() && y_.empty(); }
  std::vector<Label> labels() const;

  friend bool operator==(const BalancedPair&, const BalancedPair&) = default;

 private:
  OrderedForest x_;
  OrderedForest y_;
  unsigned k_;
};

/// Tree on [n+1] in which n+1 is a leaf and each of 1..k is not.
class FnkTree {
 public:
  FnkTree(RootedTree tree, unsigned n, unsigned k);

  const RootedTree& tree() const { return tree_; }
  unsigned n() const { return n_; }
  unsigned k() const { return k_; }

  friend bool operator==(const FnkTree&, const FnkTree&) = default;

 private:
  RootedTree tree_;
  unsigned n_;
  unsigned k_;
};

}  // namespace mdtree

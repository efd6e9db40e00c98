#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace mdtree {

/// Vertex label. Valid labels are positive; 0 is reserved as "no vertex".
using Label = std::uint32_t;

inline constexpr Label kNoLabel = 0;

struct Edge {
  Label child;
  Label parent;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable labeled rooted tree.
///
/// Children are an unordered set; they are stored (and reported) in
/// ascending label order so that structural equality is plain member
/// equality.
class RootedTree {
 public:
  /// Single-vertex tree.
  explicit RootedTree(Label root);

  /// Builds a tree from `root` and one (child, parent) edge per non-root
  /// vertex. Throws ValidationError unless the edges form a tree on their
  /// endpoints rooted at `root`.
  RootedTree(Label root, std::span<const Edge> edges);

  Label root() const { return root_; }
  std::size_t size() const { return labels_.size(); }
  /// Vertex labels in ascending order.
  std::span<const Label> labels() const { return labels_; }
  Label max_label() const { return labels_.back(); }

  bool contains(Label v) const;
  /// Parent of `v`, or nullopt for the root. Throws if `v` is absent.
  std::optional<Label> parent(Label v) const;
  /// Children of `v` in ascending order. Throws if `v` is absent.
  std::span<const Label> children(Label v) const;
  bool is_leaf(Label v) const { return children(v).empty(); }
  std::size_t depth(Label v) const;
  /// Labels on the path root = u_1, ..., u_i = v.
  std::vector<Label> path_from_root(Label v) const;

  /// Non-root vertices with their parents, ordered by child label.
  std::vector<Edge> edges() const;
  /// The subtree rooted at `v` containing all descendants of `v`.
  RootedTree subtree(Label v) const;

  friend bool operator==(const RootedTree&, const RootedTree&) = default;

 private:
  std::size_t index_of(Label v) const;

  Label root_;
  std::vector<Label> labels_;
  std::vector<Label> parents_;  // aligned with labels_, kNoLabel at the root
  std::vector<std::uint32_t> child_begin_;  // CSR offsets, size() + 1 entries
  std::vector<Label> child_labels_;
};

/// Mutable parent-map used while a bijection rewires a tree.
class TreeBuilder {
 public:
  explicit TreeBuilder(Label root);
  explicit TreeBuilder(const RootedTree& tree);

  Label root() const { return root_; }
  bool contains(Label v) const { return parent_.contains(v); }
  std::size_t size() const { return parent_.size(); }

  /// Adds `child` as a new vertex below the existing vertex `parent`.
  void add_child(Label parent, Label child);
  /// Adds every edge of `tree`; its root must already be a vertex here, and
  /// the two trees are merged at that label.
  void graft(const RootedTree& tree);
  void set_parent(Label v, Label parent);

  std::vector<Label> children(Label v) const;
  std::size_t depth(Label v) const;

  /// Removes the subtree below `v` (inclusive) and returns it as a tree.
  RootedTree detach(Label v);
  RootedTree build() const;

 private:
  Label root_;
  std::map<Label, Label> parent_;  // includes the root, mapped to kNoLabel
};

/// Ordered tuple of label-disjoint rooted trees. May be empty.
class OrderedForest {
 public:
  OrderedForest() = default;
  /// Throws ValidationError if two trees share a label.
  explicit OrderedForest(std::vector<RootedTree> trees);

  std::span<const RootedTree> trees() const { return trees_; }
  std::size_t size() const { return trees_.size(); }
  bool empty() const { return trees_.empty(); }
  const RootedTree& operator[](std::size_t i) const { return trees_[i]; }

  /// Union of the vertex sets, ascending.
  std::vector<Label> labels() const;
  std::size_t vertex_count() const;

  friend bool operator==(const OrderedForest&, const OrderedForest&) = default;

 private:
  std::vector<RootedTree> trees_;
};

/// Cyclic sequence of label-disjoint rooted trees, stored rotated so that
/// the tree holding the largest label comes first.
class TreeCycle {
 public:
  /// Throws ValidationError if `trees` is empty or two trees share a label.
  explicit TreeCycle(std::vector<RootedTree> trees);

  std::span<const RootedTree> trees() const { return trees_; }
  std::size_t size() const { return trees_.size(); }
  std::vector<Label> labels() const;

  /// The same cycle read starting from the tree that contains `v`.
  std::vector<RootedTree> rotated_to(Label v) const;

  friend bool operator==(const TreeCycle&, const TreeCycle&) = default;

 private:
  std::vector<RootedTree> trees_;
};

/// Maximal subtree sharing the root of `t` in which every parent exceeds its
/// children.
RootedTree md_subtree(const RootedTree& t);

/// True iff the root has no smaller child.
bool is_minimally_rooted(const RootedTree& t);

/// For each vertex v of md_subtree(t), in ascending label order, the
/// component rooted at v left after deleting the edges of md_subtree(t).
/// Singleton components are included.
std::vector<RootedTree> hanging_forest(const RootedTree& t);

/// Order-preserving bijection between two equally sized label sets: the
/// i-th smallest source label goes to the i-th smallest target label.
class OrderIsomorphism {
 public:
  OrderIsomorphism(std::span<const Label> source, std::span<const Label> target);

  /// Throws ValidationError if `v` is outside the source set.
  Label operator()(Label v) const;
  RootedTree apply(const RootedTree& t) const;
  OrderedForest apply(const OrderedForest& f) const;
  std::vector<RootedTree> apply(std::span<const RootedTree> trees) const;

 private:
  std::vector<Label> source_;
  std::vector<Label> target_;
};

/// Relabels `shape` through the order isomorphism `source` -> `target`.
/// `source` must contain every vertex of `shape`.
RootedTree relabel_order_iso(const RootedTree& shape, std::span<const Label> source,
                             std::span<const Label> target);
OrderedForest relabel_order_iso(const OrderedForest& shape, std::span<const Label> source,
                                std::span<const Label> target);

/// Sorted, deduplicated copy; the library's representation of label sets.
std::vector<Label> label_set(std::vector<Label> labels);

}  // namespace mdtree

#include "mdtree/tree.hpp"

#include <algorithm>
#include <string>

#include "mdtree/error.hpp"

namespace mdtree {

namespace {

std::string label_str(Label v) { return std::to_string(v); }

}  // namespace

RootedTree::RootedTree(Label root) : RootedTree(root, std::span<const Edge>{}) {}

RootedTree::RootedTree(Label root, std::span<const Edge> edges) : root_(root) {
  if (root == kNoLabel) throw ValidationError("label 0 is not a valid vertex");

  std::vector<Edge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Edge& a, const Edge& b) { return a.child < b.child; });

  labels_.reserve(sorted.size() + 1);
  parents_.reserve(sorted.size() + 1);
  bool root_placed = false;
  for (const Edge& e : sorted) {
    if (e.child == kNoLabel || e.parent == kNoLabel)
      throw ValidationError("label 0 is not a valid vertex");
    if (e.child == root)
      throw ValidationError("root " + label_str(root) + " cannot have a parent");
    if (!labels_.empty() && labels_.back() == e.child)
      throw ValidationError("vertex " + label_str(e.child) + " has two parents");
    if (!root_placed && root < e.child) {
      labels_.push_back(root);
      parents_.push_back(kNoLabel);
      root_placed = true;
    }
    labels_.push_back(e.child);
    parents_.push_back(e.parent);
  }
  if (!root_placed) {
    labels_.push_back(root);
    parents_.push_back(kNoLabel);
  }

  const std::size_t n = labels_.size();
  std::vector<std::uint32_t> parent_index(n, 0);
  std::vector<std::uint32_t> child_count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (parents_[i] == kNoLabel) continue;
    auto it = std::lower_bound(labels_.begin(), labels_.end(), parents_[i]);
    if (it == labels_.end() || *it != parents_[i])
      throw ValidationError("parent " + label_str(parents_[i]) + " of vertex " +
                            label_str(labels_[i]) + " is not a vertex");
    parent_index[i] = static_cast<std::uint32_t>(it - labels_.begin());
    ++child_count[parent_index[i]];
  }

  // Every vertex must reach the root: 0 = unvisited, 1 = on current walk,
  // 2 = known to reach the root.
  std::vector<std::uint8_t> state(n, 0);
  std::vector<std::size_t> walk;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t cur = i;
    walk.clear();
    while (state[cur] == 0 && parents_[cur] != kNoLabel) {
      state[cur] = 1;
      walk.push_back(cur);
      cur = parent_index[cur];
    }
    if (state[cur] == 1)
      throw ValidationError("parent links through vertex " + label_str(labels_[cur]) +
                            " form a cycle");
    for (std::size_t w : walk) state[w] = 2;
    state[cur] = 2;
  }

  child_begin_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) child_begin_[i + 1] = child_begin_[i] + child_count[i];
  child_labels_.resize(n - 1);
  std::vector<std::uint32_t> fill(child_begin_.begin(), child_begin_.end() - 1);
  // labels_ is ascending, so children land in ascending order.
  for (std::size_t i = 0; i < n; ++i) {
    if (parents_[i] == kNoLabel) continue;
    child_labels_[fill[parent_index[i]]++] = labels_[i];
  }
}

std::size_t RootedTree::index_of(Label v) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v)
    throw ValidationError("vertex " + label_str(v) + " is not in the tree");
  return static_cast<std::size_t>(it - labels_.begin());
}

bool RootedTree::contains(Label v) const {
  return std::binary_search(labels_.begin(), labels_.end(), v);
}

std::optional<Label> RootedTree::parent(Label v) const {
  Label p = parents_[index_of(v)];
  if (p == kNoLabel) return std::nullopt;
  return p;
}

std::span<const Label> RootedTree::children(Label v) const {
  std::size_t i = index_of(v);
  return std::span<const Label>(child_labels_).subspan(child_begin_[i],
                                                       child_begin_[i + 1] - child_begin_[i]);
}

std::size_t RootedTree::depth(Label v) const {
  std::size_t d = 0;
  for (Label p = parents_[index_of(v)]; p != kNoLabel; p = parents_[index_of(p)]) ++d;
  return d;
}

std::vector<Label> RootedTree::path_from_root(Label v) const {
  std::vector<Label> path{v};
  for (Label p = parents_[index_of(v)]; p != kNoLabel; p = parents_[index_of(p)])
    path.push_back(p);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Edge> RootedTree::edges() const {
  std::vector<Edge> out;
  out.reserve(labels_.size() - 1);
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (parents_[i] != kNoLabel) out.push_back({labels_[i], parents_[i]});
  return out;
}

RootedTree RootedTree::subtree(Label v) const {
  std::vector<Edge> out;
  std::vector<Label> stack{v};
  while (!stack.empty()) {
    Label u = stack.back();
    stack.pop_back();
    for (Label c : children(u)) {
      out.push_back({c, u});
      stack.push_back(c);
    }
  }
  return RootedTree(v, out);
}

// TreeBuilder

TreeBuilder::TreeBuilder(Label root) : root_(root) { parent_.emplace(root, kNoLabel); }

TreeBuilder::TreeBuilder(const RootedTree& tree) : root_(tree.root()) {
  parent_.emplace(root_, kNoLabel);
  for (const Edge& e : tree.edges()) parent_.emplace(e.child, e.parent);
}

void TreeBuilder::add_child(Label parent, Label child) {
  if (!contains(parent)) throw ValidationError("vertex " + label_str(parent) + " is not present");
  if (!parent_.emplace(child, parent).second)
    throw ValidationError("vertex " + label_str(child) + " is already present");
}

void TreeBuilder::graft(const RootedTree& tree) {
  if (!contains(tree.root()))
    throw ValidationError("graft point " + label_str(tree.root()) + " is not present");
  for (const Edge& e : tree.edges()) {
    if (!parent_.emplace(e.child, e.parent).second)
      throw ValidationError("vertex " + label_str(e.child) + " is already present");
  }
}

void TreeBuilder::set_parent(Label v, Label parent) {
  auto it = parent_.find(v);
  if (it == parent_.end() || !contains(parent))
    throw ValidationError("cannot reparent " + label_str(v) + " under " + label_str(parent));
  it->second = parent;
}

std::vector<Label> TreeBuilder::children(Label v) const {
  std::vector<Label> out;
  for (const auto& [child, parent] : parent_)
    if (parent == v) out.push_back(child);
  return out;
}

std::size_t TreeBuilder::depth(Label v) const {
  std::size_t d = 0;
  for (Label p = parent_.at(v); p != kNoLabel; p = parent_.at(p)) {
    ++d;
    if (d > parent_.size()) throw ValidationError("parent links form a cycle");
  }
  return d;
}

RootedTree TreeBuilder::detach(Label v) {
  if (v == root_) throw ValidationError("cannot detach the root");
  std::vector<Edge> edges;
  std::vector<Label> stack{v};
  while (!stack.empty()) {
    Label u = stack.back();
    stack.pop_back();
    for (Label c : children(u)) {
      edges.push_back({c, u});
      stack.push_back(c);
    }
  }
  parent_.erase(v);
  for (const Edge& e : edges) parent_.erase(e.child);
  return RootedTree(v, edges);
}

RootedTree TreeBuilder::build() const {
  std::vector<Edge> edges;
  edges.reserve(parent_.size());
  for (const auto& [child, parent] : parent_)
    if (parent != kNoLabel) edges.push_back({child, parent});
  return RootedTree(root_, edges);
}

// OrderedForest / TreeCycle

namespace {

std::vector<Label> union_labels(std::span<const RootedTree> trees) {
  std::vector<Label> all;
  for (const RootedTree& t : trees) all.insert(all.end(), t.labels().begin(), t.labels().end());
  std::sort(all.begin(), all.end());
  return all;
}

void require_disjoint(std::span<const RootedTree> trees) {
  std::vector<Label> all = union_labels(trees);
  auto dup = std::adjacent_find(all.begin(), all.end());
  if (dup != all.end()) throw ValidationError("label " + label_str(*dup) + " occurs in two trees");
}

}  // namespace

OrderedForest::OrderedForest(std::vector<RootedTree> trees) : trees_(std::move(trees)) {
  require_disjoint(trees_);
}

std::vector<Label> OrderedForest::labels() const { return union_labels(trees_); }

std::size_t OrderedForest::vertex_count() const {
  std::size_t n = 0;
  for (const RootedTree& t : trees_) n += t.size();
  return n;
}

TreeCycle::TreeCycle(std::vector<RootedTree> trees) : trees_(std::move(trees)) {
  if (trees_.empty()) throw ValidationError("a cycle needs at least one tree");
  require_disjoint(trees_);
  auto lead = std::max_element(trees_.begin(), trees_.end(),
                               [](const RootedTree& a, const RootedTree& b) {
                                 return a.max_label() < b.max_label();
                               });
  std::rotate(trees_.begin(), lead, trees_.end());
}

std::vector<Label> TreeCycle::labels() const { return union_labels(trees_); }

std::vector<RootedTree> TreeCycle::rotated_to(Label v) const {
  auto it = std::find_if(trees_.begin(), trees_.end(),
                         [v](const RootedTree& t) { return t.contains(v); });
  if (it == trees_.end()) throw ValidationError("vertex " + label_str(v) + " is not in the cycle");
  std::vector<RootedTree> out(trees_.begin(), trees_.end());
  std::rotate(out.begin(), out.begin() + (it - trees_.begin()), out.end());
  return out;
}

// Decomposition

RootedTree md_subtree(const RootedTree& t) {
  std::vector<Edge> edges;
  std::vector<Label> stack{t.root()};
  while (!stack.empty()) {
    Label u = stack.back();
    stack.pop_back();
    for (Label c : t.children(u)) {
      if (c > u) break;  // children are ascending
      edges.push_back({c, u});
      stack.push_back(c);
    }
  }
  return RootedTree(t.root(), edges);
}

bool is_minimally_rooted(const RootedTree& t) {
  auto kids = t.children(t.root());
  return kids.empty() || kids.front() > t.root();
}

std::vector<RootedTree> hanging_forest(const RootedTree& t) {
  RootedTree md = md_subtree(t);
  std::vector<RootedTree> out;
  out.reserve(md.size());
  for (Label v : md.labels()) {
    // v keeps its larger children; everything below them is off the MD tree.
    std::vector<Edge> edges;
    std::vector<Label> stack;
    for (Label c : t.children(v)) {
      if (c < v) continue;
      edges.push_back({c, v});
      stack.push_back(c);
    }
    while (!stack.empty()) {
      Label u = stack.back();
      stack.pop_back();
      for (Label c : t.children(u)) {
        edges.push_back({c, u});
        stack.push_back(c);
      }
    }
    out.emplace_back(v, edges);
  }
  return out;
}

// Relabeling

OrderIsomorphism::OrderIsomorphism(std::span<const Label> source, std::span<const Label> target)
    : source_(label_set({source.begin(), source.end()})),
      target_(label_set({target.begin(), target.end()})) {
  if (source_.size() != source.size() || target_.size() != target.size())
    throw ValidationError("relabeling sets must not repeat labels");
  if (source_.size() != target_.size())
    throw ValidationError("relabeling sets differ in size (" + std::to_string(source_.size()) +
                          " vs " + std::to_string(target_.size()) + ")");
}

Label OrderIsomorphism::operator()(Label v) const {
  auto it = std::lower_bound(source_.begin(), source_.end(), v);
  if (it == source_.end() || *it != v)
    throw ValidationError("vertex " + label_str(v) + " is outside the relabeling source set");
  return target_[static_cast<std::size_t>(it - source_.begin())];
}

RootedTree OrderIsomorphism::apply(const RootedTree& t) const {
  std::vector<Edge> edges = t.edges();
  for (Edge& e : edges) e = {(*this)(e.child), (*this)(e.parent)};
  return RootedTree((*this)(t.root()), edges);
}

std::vector<RootedTree> OrderIsomorphism::apply(std::span<const RootedTree> trees) const {
  std::vector<RootedTree> out;
  out.reserve(trees.size());
  for (const RootedTree& t : trees) out.push_back(apply(t));
  return out;
}

OrderedForest OrderIsomorphism::apply(const OrderedForest& f) const {
  return OrderedForest(apply(f.trees()));
}

RootedTree relabel_order_iso(const RootedTree& shape, std::span<const Label> source,
                             std::span<const Label> target) {
  return OrderIsomorphism(source, target).apply(shape);
}

OrderedForest relabel_order_iso(const OrderedForest& shape, std::span<const Label> source,
                                std::span<const Label> target) {
  return OrderIsomorphism(source, target).apply(shape);
}

std::vector<Label> label_set(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

}  // namespace mdtree

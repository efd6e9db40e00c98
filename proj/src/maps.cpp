#include <algorithm>
#include <map>
#include <string>

#include "mdtree/bijections.hpp"
#include "mdtree/error.hpp"
#include "mdtree/text.hpp"
#include "trace_util.hpp"

namespace mdtree {

namespace {

std::string str(Label v) { return std::to_string(v); }

}  // namespace

// alpha

TreeCycle alpha_cycle(const RootedTree& t) {
  RootedTree md = md_subtree(t);
  std::vector<Label> order{md.root()};
  order.reserve(md.size());
  auto labels = md.labels();
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
    if (*it == md.root()) continue;
    auto at = std::find(order.begin(), order.end(), *md.parent(*it));
    order.insert(at + 1, *it);
  }

  std::map<Label, RootedTree> components;
  for (RootedTree& comp : hanging_forest(t)) components.emplace(comp.root(), std::move(comp));
  std::vector<RootedTree> trees;
  trees.reserve(order.size());
  for (Label v : order) trees.push_back(std::move(components.at(v)));
  return TreeCycle(std::move(trees));
}

std::vector<Label> cycle_root_word(const TreeCycle& c) {
  auto trees = c.trees();
  auto lead = std::max_element(trees.begin(), trees.end(),
                               [](const RootedTree& a, const RootedTree& b) { return a.root() < b.root(); });
  std::vector<Label> word;
  word.reserve(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i)
    word.push_back(trees[(static_cast<std::size_t>(lead - trees.begin()) + i) % trees.size()].root());
  return word;
}

RootedTree alpha_cycle_inv(const TreeCycle& c) {
  for (const RootedTree& t : c.trees())
    if (!is_minimally_rooted(t))
      throw ValidationError("tree rooted at " + str(t.root()) + " is not minimally rooted");

  // The root word is a preorder of the decreasing tree with children
  // visited in ascending order, so each root's parent is the nearest
  // earlier root that is larger.
  std::vector<Label> word = cycle_root_word(c);
  TreeBuilder builder(word.front());
  std::vector<Label> larger{word.front()};
  for (std::size_t i = 1; i < word.size(); ++i) {
    while (larger.back() < word[i]) larger.pop_back();
    builder.add_child(larger.back(), word[i]);
    larger.push_back(word[i]);
  }
  for (const RootedTree& t : c.trees()) builder.graft(t);
  return builder.build();
}

AnkCycle alpha(const TnkTree& t, Trace* trace) {
  detail::note(trace, "alpha.md", to_string(md_subtree(t.tree())));
  AnkCycle out(alpha_cycle(t.tree()), t.n(), t.k());
  detail::note(trace, "alpha.roots", "[" + format_label_list(cycle_root_word(out.cycle())) + "]");
  detail::note(trace, "alpha", to_string(out.cycle()));
  return out;
}

TnkTree alpha_inv(const AnkCycle& c, Trace* trace) {
  detail::note(trace, "alpha_inv.roots", "[" + format_label_list(cycle_root_word(c.cycle())) + "]");
  TnkTree out(alpha_cycle_inv(c.cycle()), c.n(), c.k());
  detail::note(trace, "alpha_inv", to_string(out.tree()));
  return out;
}

// phi

RootedTree phi(const RootedTree& t) {
  if (!is_minimally_rooted(t))
    throw ValidationError("phi needs a minimally rooted tree; root " + str(t.root()) +
                          " has a smaller child");
  if (t.size() == 1) return t;

  const Label top = t.max_label();
  const Label root = t.root();
  RootedTree below = t.subtree(top);

  // The rest of t, keeping `top` itself as a leaf.
  std::vector<Edge> rest_edges;
  for (const Edge& e : t.edges())
    if (e.child == top || !below.contains(e.child)) rest_edges.push_back(e);
  RootedTree rest(root, rest_edges);

  RootedTree md = md_subtree(below);
  std::vector<Label> source(md.labels().begin(), md.labels().end());
  std::vector<Label> target = source;
  std::erase(target, top);
  target.push_back(root);

  TreeBuilder builder(relabel_order_iso(md, source, label_set(target)));
  for (const RootedTree& comp : hanging_forest(below))
    if (comp.size() > 1) builder.graft(comp);
  builder.graft(rest);
  return builder.build();
}

RootedTree phi_inv(const RootedTree& t) {
  const Label top = t.max_label();
  if (!t.is_leaf(top))
    throw ValidationError("phi_inv needs the largest label " + str(top) + " to be a leaf");
  if (t.size() == 1) return t;

  RootedTree md = md_subtree(t);
  std::vector<RootedTree> comps = hanging_forest(t);
  auto holder = std::find_if(comps.begin(), comps.end(),
                             [top](const RootedTree& c) { return c.contains(top); });
  const Label root = holder->root();

  std::vector<Label> source(md.labels().begin(), md.labels().end());
  std::vector<Label> target = source;
  std::erase(target, root);
  target.push_back(top);

  TreeBuilder below(relabel_order_iso(md, source, label_set(target)));
  for (const RootedTree& comp : comps)
    if (comp.root() != root && comp.size() > 1) below.graft(comp);

  TreeBuilder builder(*holder);
  builder.graft(below.build());
  return builder.build();
}

// rho

OrderedForest rho(const RootedTree& t) {
  const Label top = t.max_label();
  if (!t.is_leaf(top))
    throw ValidationError("rho needs the largest label " + str(top) + " to be a leaf");
  std::vector<Label> path = t.path_from_root(top);
  std::vector<RootedTree> out;
  out.reserve(path.size() - 1);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    TreeBuilder comp(path[i]);
    for (Label c : t.children(path[i])) {
      if (c == path[i + 1]) continue;
      comp.add_child(path[i], c);
      comp.graft(t.subtree(c));
    }
    out.push_back(comp.build());
  }
  return OrderedForest(std::move(out));
}

RootedTree rho_inv(const OrderedForest& f, Label max_label) {
  if (max_label == kNoLabel) throw ValidationError("label 0 is not allowed");
  if (f.empty()) return RootedTree(max_label);
  auto labels = f.labels();
  if (labels.back() >= max_label)
    throw ValidationError("rho_inv needs " + str(max_label) + " to exceed every label of the forest");
  TreeBuilder builder(f[0]);
  for (std::size_t i = 1; i < f.size(); ++i) {
    builder.add_child(f[i - 1].root(), f[i].root());
    builder.graft(f[i]);
  }
  builder.add_child(f[f.size() - 1].root(), max_label);
  return builder.build();
}

// beta

BnkForest beta(const AnkCycle& c, Trace* trace) {
  const Label top = c.n() + 1;
  std::vector<RootedTree> trees = c.cycle().rotated_to(top);
  RootedTree leafed = phi(trees.front());
  detail::note(trace, "beta.phi", to_string(leafed));
  OrderedForest head = rho(leafed);
  detail::note(trace, "beta.rho", to_string(head));
  std::vector<RootedTree> out(head.trees().begin(), head.trees().end());
  out.insert(out.end(), trees.begin() + 1, trees.end());
  BnkForest result(OrderedForest(std::move(out)), c.n(), c.k());
  detail::note(trace, "beta", to_string(result.forest()));
  return result;
}

AnkCycle beta_inv(const BnkForest& f, Trace* trace) {
  auto trees = f.forest().trees();
  const std::size_t split = trees.size() - f.k();
  OrderedForest head(std::vector<RootedTree>(trees.begin(), trees.begin() + split));
  RootedTree leafed = rho_inv(head, f.n() + 1);
  detail::note(trace, "beta_inv.rho_inv", to_string(leafed));
  std::vector<RootedTree> cycle{phi_inv(leafed)};
  detail::note(trace, "beta_inv.phi_inv", to_string(cycle.front()));
  cycle.insert(cycle.end(), trees.begin() + split, trees.end());
  AnkCycle result(TreeCycle(std::move(cycle)), f.n(), f.k());
  detail::note(trace, "beta_inv", to_string(result.cycle()));
  return result;
}

}  // namespace mdtree

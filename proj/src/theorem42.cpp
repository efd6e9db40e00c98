#include "mdtree/theorem42.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "mdtree/bijections.hpp"
#include "mdtree/error.hpp"
#include "mdtree/sets.hpp"

namespace mdtree {

namespace {

std::size_t rank_in(const std::vector<Label>& sorted, Label v) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

std::vector<Label> roots_of(const std::vector<RootedTree>& trees) {
  std::vector<Label> out;
  out.reserve(trees.size());
  for (const RootedTree& t : trees) out.push_back(t.root());
  return out;
}

}  // namespace

std::size_t smaller_root_children(const RootedTree& t) {
  auto kids = t.children(t.root());
  return static_cast<std::size_t>(std::lower_bound(kids.begin(), kids.end(), t.root()) - kids.begin());
}

std::vector<std::size_t> left_to_right_maxima(const std::vector<Label>& word) {
  std::vector<std::size_t> out;
  Label best = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] > best) {
      out.push_back(i);
      best = word[i];
    }
  }
  return out;
}

OrderedForest theorem42_map(const RootedTree& t) {
  const auto n = static_cast<unsigned>(t.size());
  if (!is_initial_segment(t.labels(), n)) throw ValidationError("tree is not on [n] for n=" + std::to_string(n));

  TreeCycle cycle = alpha_cycle(t);
  const std::vector<Label> word = cycle_root_word(cycle);
  const std::vector<RootedTree> trees = cycle.rotated_to(word.front());

  std::size_t holder = 0;
  while (!trees[holder].contains(n)) ++holder;

  std::vector<RootedTree> rest;
  for (std::size_t i = 0; i < trees.size(); ++i)
    if (i != holder) rest.push_back(trees[i]);
  std::sort(rest.begin(), rest.end(),
            [](const RootedTree& a, const RootedTree& b) { return a.root() < b.root(); });

  // Lay the remaining trees out so their roots are order-isomorphic to
  // word[1..k].
  const std::vector<Label> tail(word.begin() + 1, word.end());
  const std::vector<Label> tail_sorted = label_set(tail);
  std::vector<RootedTree> arranged;
  arranged.reserve(tail.size());
  for (Label r : tail) arranged.push_back(rest[rank_in(tail_sorted, r)]);

  const std::vector<std::size_t> cuts = left_to_right_maxima(tail);
  std::vector<RootedTree> out;
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    std::size_t end = c + 1 < cuts.size() ? cuts[c + 1] : arranged.size();
    std::vector<RootedTree> segment(arranged.begin() + static_cast<std::ptrdiff_t>(cuts[c]),
                                    arranged.begin() + static_cast<std::ptrdiff_t>(end));
    out.push_back(alpha_cycle_inv(TreeCycle(std::move(segment))));
  }
  out.push_back(phi(trees[holder]));
  std::sort(out.begin(), out.end(),
            [](const RootedTree& a, const RootedTree& b) { return a.root() < b.root(); });
  return OrderedForest(std::move(out));
}

RootedTree theorem42_inv(const OrderedForest& forest) {
  const std::vector<Label> labels = forest.labels();
  const auto n = static_cast<unsigned>(labels.size());
  if (n == 0 || !is_initial_segment(labels, n))
    throw ValidationError("forest is not on [n] for n=" + std::to_string(n));

  std::vector<TreeCycle> cycles;
  const RootedTree* top_tree = nullptr;
  for (const RootedTree& t : forest.trees()) {
    if (t.contains(n)) {
      top_tree = &t;
    } else {
      cycles.push_back(alpha_cycle(t));
    }
  }
  if (!top_tree->is_leaf(n)) throw ValidationError("vertex n=" + std::to_string(n) + " is not a leaf");
  RootedTree set_aside = phi_inv(*top_tree);

  std::sort(cycles.begin(), cycles.end(), [](const TreeCycle& a, const TreeCycle& b) {
    return cycle_root_word(a).front() < cycle_root_word(b).front();
  });
  std::vector<RootedTree> arranged;
  for (const TreeCycle& c : cycles) {
    std::vector<RootedTree> part = c.rotated_to(cycle_root_word(c).front());
    arranged.insert(arranged.end(), part.begin(), part.end());
  }

  const std::vector<Label> arranged_roots = roots_of(arranged);
  std::vector<Label> all_roots = arranged_roots;
  all_roots.push_back(set_aside.root());
  all_roots = label_set(all_roots);
  const Label lead = all_roots.back();
  const std::vector<Label> targets(all_roots.begin(), all_roots.end() - 1);
  const std::vector<Label> sources = label_set(arranged_roots);

  std::map<Label, RootedTree> by_root;
  for (const RootedTree& t : arranged) by_root.emplace(t.root(), t);
  by_root.emplace(set_aside.root(), set_aside);

  std::vector<RootedTree> ring{by_root.at(lead)};
  for (Label r : arranged_roots) ring.push_back(by_root.at(targets[rank_in(sources, r)]));
  return alpha_cycle_inv(TreeCycle(std::move(ring)));
}

}  // namespace mdtree

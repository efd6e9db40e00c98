#include "mdtree/sets.hpp"

#include <algorithm>
#include <string>

#include "mdtree/error.hpp"

namespace mdtree {

namespace {

std::string str(unsigned v) { return std::to_string(v); }

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

void require_k_le_n(unsigned n, unsigned k) {
  require(k <= n, "k=" + str(k) + " exceeds n=" + str(n));
}

}  // namespace

std::size_t count_special(const RootedTree& t, unsigned k) {
  auto labels = t.labels();
  return static_cast<std::size_t>(std::upper_bound(labels.begin(), labels.end(), k) - labels.begin());
}

std::size_t count_special(std::span<const RootedTree> trees, unsigned k) {
  std::size_t total = 0;
  for (const RootedTree& t : trees) total += count_special(t, k);
  return total;
}

bool is_initial_segment(std::span<const Label> labels, unsigned n) {
  if (labels.size() != n) return false;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != i + 1) return false;
  return true;
}

TnkTree::TnkTree(RootedTree tree, unsigned n, unsigned k) : tree_(std::move(tree)), n_(n), k_(k) {
  require_k_le_n(n, k);
  require(is_initial_segment(tree_.labels(), n + 1), "tree is not on [n+1] for n=" + str(n));
  std::size_t md = md_subtree(tree_).size();
  require(md == k + 1, "maximal decreasing subtree has " + std::to_string(md) +
                           " vertices, expected k+1=" + str(k + 1));
}

TnkTree TnkTree::classify(RootedTree tree) {
  auto n = static_cast<unsigned>(tree.size() - 1);
  auto k = static_cast<unsigned>(md_subtree(tree).size() - 1);
  return TnkTree(std::move(tree), n, k);
}

AnkCycle::AnkCycle(TreeCycle cycle, unsigned n, unsigned k) : cycle_(std::move(cycle)), n_(n), k_(k) {
  require_k_le_n(n, k);
  require(cycle_.size() == k + 1, "cycle has " + std::to_string(cycle_.size()) +
                                      " trees, expected k+1=" + str(k + 1));
  require(is_initial_segment(cycle_.labels(), n + 1), "cycle is not on [n+1] for n=" + str(n));
  for (const RootedTree& t : cycle_.trees())
    require(is_minimally_rooted(t),
            "tree rooted at " + std::to_string(t.root()) + " is not minimally rooted");
}

AnkCycle AnkCycle::classify(TreeCycle cycle) {
  auto n = static_cast<unsigned>(cycle.labels().size() - 1);
  auto k = static_cast<unsigned>(cycle.size() - 1);
  return AnkCycle(std::move(cycle), n, k);
}

BnkForest::BnkForest(OrderedForest forest, unsigned n, unsigned k)
    : forest_(std::move(forest)), n_(n), k_(k) {
  require_k_le_n(n, k);
  require(is_initial_segment(forest_.labels(), n), "forest is not on [n] for n=" + str(n));
  require(forest_.size() >= k, "forest has fewer than k=" + str(k) + " trees");
  for (std::size_t i = forest_.size() - k; i < forest_.size(); ++i)
    require(is_minimally_rooted(forest_[i]), "tree " + std::to_string(i + 1) +
                                                 " is among the last k but not minimally rooted");
}

bool is_k_good(const OrderedForest& f, unsigned k) {
  if (f.empty()) return false;
  const std::size_t last = f.size() - 1;
  if (last == 0) {
    std::size_t specials = count_special(f[0], k);
    return specials == 0 || (specials == 1 && f[0].size() == 1);
  }
  std::size_t running = 0;
  for (std::size_t i = 0; i <= last; ++i) {
    if (i >= 1 && !is_minimally_rooted(f[i])) return false;
    running += count_special(f[i], k);
    if (i < last && running < i + 1) return false;
  }
  return running == last;
}

KGoodForest::KGoodForest(OrderedForest forest, unsigned k) : forest_(std::move(forest)), k_(k) {
  require(is_k_good(forest_, k_), "forest is not " + str(k) + "-good");
}

CnkSequence::CnkSequence(std::vector<OrderedForest> forests, unsigned n, unsigned k)
    : forests_(std::move(forests)), n_(n), k_(k) {
  require_k_le_n(n, k);
  std::vector<Label> all;
  for (std::size_t i = 0; i < forests_.size(); ++i) {
    require(is_k_good(forests_[i], k), "forest " + std::to_string(i + 1) + " is not " + str(k) + "-good");
    auto labels = forests_[i].labels();
    all.insert(all.end(), labels.begin(), labels.end());
  }
  std::sort(all.begin(), all.end());
  require(is_initial_segment(all, n), "forests do not partition [n] for n=" + str(n));
}

BalancedPair::BalancedPair(OrderedForest x, OrderedForest y, unsigned k)
    : x_(std::move(x)), y_(std::move(y)), k_(k) {
  std::vector<Label> all = labels();
  require(std::adjacent_find(all.begin(), all.end()) == all.end(), "X and Y share a label");
  for (const RootedTree& t : y_.trees())
    require(is_minimally_rooted(t),
            "tree rooted at " + std::to_string(t.root()) + " in Y is not minimally rooted");
  std::size_t specials = count_special(x_.trees(), k) + count_special(y_.trees(), k);
  require(specials == y_.size(), "pair holds " + std::to_string(specials) +
                                     " special vertices but Y has " + std::to_string(y_.size()) +
                                     " trees");
}

std::vector<Label> BalancedPair::labels() const {
  std::vector<Label> all = x_.labels();
  auto ys = y_.labels();
  all.insert(all.end(), ys.begin(), ys.end());
  std::sort(all.begin(), all.end());
  return all;
}

FnkTree::FnkTree(RootedTree tree, unsigned n, unsigned k) : tree_(std::move(tree)), n_(n), k_(k) {
  require_k_le_n(n, k);
  require(is_initial_segment(tree_.labels(), n + 1), "tree is not on [n+1] for n=" + str(n));
  require(tree_.is_leaf(n + 1), "vertex n+1=" + str(n + 1) + " is not a leaf");
  for (Label i = 1; i <= k; ++i)
    require(!tree_.is_leaf(i), "vertex " + std::to_string(i) + " <= k is a leaf");
}

}  // namespace mdtree

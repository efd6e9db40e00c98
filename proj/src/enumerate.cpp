#include "mdtree/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "mdtree/error.hpp"
#include "mdtree/prufer.hpp"
#include "mdtree/sets.hpp"

namespace mdtree {

namespace {

// Subsets of `labels` as (chosen, rest) pairs for every nonempty bitmask.
// When `anchor_first` is set only subsets containing labels[0] are visited.
template <typename F>
void for_each_block(std::span<const Label> labels, bool anchor_first, F&& fn) {
  const std::size_t m = labels.size();
  std::vector<Label> chosen;
  std::vector<Label> rest;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    if (anchor_first && !(mask & 1u)) continue;
    chosen.clear();
    rest.clear();
    for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1u ? chosen : rest).push_back(labels[i]);
    fn(std::span<const Label>(chosen), std::span<const Label>(rest));
  }
}

void ordered_forests(std::span<const Label> remaining, std::vector<RootedTree>& trees,
                     const Visitor<OrderedForest>& visit, bool anchor_first) {
  if (remaining.empty()) {
    visit(OrderedForest(trees));
    return;
  }
  // Copies: the block buffers are reused by the next iteration.
  for_each_block(remaining, anchor_first, [&](std::span<const Label> block, std::span<const Label> rest) {
    const std::vector<Label> rest_copy(rest.begin(), rest.end());
    for_each_rooted_tree(block, [&](const RootedTree& t) {
      trees.push_back(t);
      ordered_forests(rest_copy, trees, visit, anchor_first);
      trees.pop_back();
    });
  });
}

void k_good_sequences(std::span<const Label> remaining, unsigned k, std::vector<OrderedForest>& seq,
                      const Visitor<std::vector<OrderedForest>>& visit) {
  if (remaining.empty()) {
    visit(seq);
    return;
  }
  for_each_block(remaining, false, [&](std::span<const Label> block, std::span<const Label> rest) {
    const std::vector<Label> rest_copy(rest.begin(), rest.end());
    for_each_ordered_forest(block, [&](const OrderedForest& f) {
      if (!is_k_good(f, k)) return;
      seq.push_back(f);
      k_good_sequences(rest_copy, k, seq, visit);
      seq.pop_back();
    });
  });
}

}  // namespace

void for_each_word(std::span<const Label> alphabet, std::size_t length,
                   const Visitor<std::span<const Label>>& visit) {
  if (length > 0 && alphabet.empty()) return;
  std::vector<std::size_t> digits(length, 0);
  std::vector<Label> word(length, length ? alphabet[0] : 0);
  while (true) {
    visit(std::span<const Label>(word));
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (++digits[i] < alphabet.size()) {
        word[i] = alphabet[digits[i]];
        break;
      }
      digits[i] = 0;
      word[i] = alphabet[0];
      if (i == 0) return;
    }
    if (length == 0) return;
  }
}

void for_each_rooted_tree(std::span<const Label> labels, const Visitor<RootedTree>& visit) {
  for_each_rooted_tree(labels, {}, visit);
}

void for_each_rooted_tree(std::span<const Label> labels, std::span<const Label> prefix,
                          const Visitor<RootedTree>& visit) {
  if (labels.empty()) throw ValidationError("cannot enumerate trees on an empty label set");
  const std::vector<Label> alphabet = label_set({labels.begin(), labels.end()});
  const std::size_t length = alphabet.size() - 1;
  if (prefix.size() > length) throw ValidationError("word prefix is longer than the word");
  std::vector<Label> letters(prefix.begin(), prefix.end());
  for_each_word(alphabet, length - prefix.size(), [&](std::span<const Label> suffix) {
    letters.resize(prefix.size());
    letters.insert(letters.end(), suffix.begin(), suffix.end());
    visit(decode(PruferWord(alphabet, letters)));
  });
}

std::vector<RootedTree> all_rooted_trees(std::span<const Label> labels) {
  std::vector<RootedTree> out;
  for_each_rooted_tree(labels, [&](const RootedTree& t) { out.push_back(t); });
  return out;
}

void for_each_ordered_forest(std::span<const Label> labels, const Visitor<OrderedForest>& visit) {
  std::vector<RootedTree> trees;
  const std::vector<Label> sorted = label_set({labels.begin(), labels.end()});
  ordered_forests(sorted, trees, visit, false);
}

void for_each_forest(std::span<const Label> labels, const Visitor<OrderedForest>& visit) {
  std::vector<RootedTree> trees;
  const std::vector<Label> sorted = label_set({labels.begin(), labels.end()});
  ordered_forests(sorted, trees, [&](const OrderedForest& f) {
    std::vector<RootedTree> by_root(f.trees().begin(), f.trees().end());
    std::sort(by_root.begin(), by_root.end(),
              [](const RootedTree& a, const RootedTree& b) { return a.root() < b.root(); });
    visit(OrderedForest(std::move(by_root)));
  }, true);
}

void for_each_k_good_sequence(std::span<const Label> labels, unsigned k,
                              const Visitor<std::vector<OrderedForest>>& visit) {
  std::vector<OrderedForest> seq;
  const std::vector<Label> sorted = label_set({labels.begin(), labels.end()});
  k_good_sequences(sorted, k, seq, visit);
}

void for_each_ank_cycle(unsigned n, unsigned k, const Visitor<TreeCycle>& visit) {
  const std::vector<Label> labels = iota_labels(n + 1);
  for_each_forest(labels, [&](const OrderedForest& f) {
    if (f.size() != k + 1) return;
    std::vector<RootedTree> others;
    const RootedTree* lead = nullptr;
    for (const RootedTree& t : f.trees()) {
      if (!is_minimally_rooted(t)) return;
      if (t.contains(n + 1)) {
        lead = &t;
      } else {
        others.push_back(t);
      }
    }
    std::vector<std::size_t> order(others.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    do {
      std::vector<RootedTree> ring{*lead};
      for (std::size_t i : order) ring.push_back(others[i]);
      visit(TreeCycle(std::move(ring)));
    } while (std::next_permutation(order.begin(), order.end()));
  });
}

void for_each_bnk_forest(unsigned n, unsigned k, const Visitor<OrderedForest>& visit) {
  for_each_ordered_forest(iota_labels(n), [&](const OrderedForest& f) {
    if (f.size() < k) return;
    for (std::size_t i = f.size() - k; i < f.size(); ++i)
      if (!is_minimally_rooted(f[i])) return;
    visit(f);
  });
}

void run_partitioned(std::size_t tasks, unsigned jobs, const std::function<void(std::size_t)>& task) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, tasks));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < tasks; i = next++) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<std::vector<Label>> word_prefixes(std::span<const Label> labels) {
  const std::vector<Label> alphabet = label_set({labels.begin(), labels.end()});
  const std::size_t length = alphabet.empty() ? 0 : alphabet.size() - 1;
  std::vector<std::vector<Label>> out;
  for_each_word(alphabet, std::min<std::size_t>(length, 2), [&](std::span<const Label> w) {
    out.emplace_back(w.begin(), w.end());
  });
  return out;
}

}  // namespace mdtree

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mdtree/tree.hpp"

namespace mdtree {

/// Largest n accepted by the exhaustive sweeps (trees on [n+1]).
inline constexpr unsigned kMaxSweepN = 7;

template <typename T>
using Visitor = std::function<void(const T&)>;

/// Calls `visit` on every word of the given length over `alphabet`, in
/// lexicographic order of alphabet positions.
void for_each_word(std::span<const Label> alphabet, std::size_t length,
                   const Visitor<std::span<const Label>>& visit);

/// Every rooted tree on `labels` exactly once, by decoding each word of
/// labels^(|labels|-1) in lexicographic order. Only words starting with
/// `prefix` are decoded when a prefix is given.
void for_each_rooted_tree(std::span<const Label> labels, const Visitor<RootedTree>& visit);
void for_each_rooted_tree(std::span<const Label> labels, std::span<const Label> prefix,
                          const Visitor<RootedTree>& visit);
std::vector<RootedTree> all_rooted_trees(std::span<const Label> labels);

/// Every ordered forest on `labels` (including the empty forest when
/// `labels` is empty).
void for_each_ordered_forest(std::span<const Label> labels, const Visitor<OrderedForest>& visit);

/// Every (unordered) forest on `labels`, each reported once with its trees
/// in ascending root order.
void for_each_forest(std::span<const Label> labels, const Visitor<OrderedForest>& visit);

/// Every sequence of k-good forests whose vertex sets partition `labels`.
void for_each_k_good_sequence(std::span<const Label> labels, unsigned k,
                              const Visitor<std::vector<OrderedForest>>& visit);

/// Every cycle of k+1 minimally rooted trees partitioning [n+1].
void for_each_ank_cycle(unsigned n, unsigned k, const Visitor<TreeCycle>& visit);

/// Every ordered forest on [n] whose last k trees are minimally rooted.
void for_each_bnk_forest(unsigned n, unsigned k, const Visitor<OrderedForest>& visit);

/// Runs task(0), ..., task(tasks-1) on up to `jobs` threads. Tasks are
/// claimed dynamically, so callers must store results per task index and
/// merge them in index order for scheduling-independent output.
void run_partitioned(std::size_t tasks, unsigned jobs, const std::function<void(std::size_t)>& task);

/// Splits the words of labels^(|labels|-1) into disjoint prefix classes for
/// run_partitioned. The split does not depend on the worker count.
std::vector<std::vector<Label>> word_prefixes(std::span<const Label> labels);

}  // namespace mdtree

#include "mdtree/counts.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "mdtree/enumerate.hpp"
#include "mdtree/error.hpp"
#include "mdtree/prufer.hpp"
#include "mdtree/theorem42.hpp"
#include "mdtree/tree.hpp"

namespace mdtree {

namespace {

// |MD(t)| without materializing the subtree.
std::size_t md_size(const RootedTree& t) {
  std::size_t count = 0;
  std::vector<Label> stack{t.root()};
  while (!stack.empty()) {
    const Label v = stack.back();
    stack.pop_back();
    ++count;
    for (Label c : t.children(v)) {
      if (c > v) break;
      stack.push_back(c);
    }
  }
  return count;
}

BigInt power(unsigned base, unsigned exp) {
  BigInt out = 1;
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

std::string str(const BigInt& x) { return x.str(); }

std::string str(const BigRational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

std::string_view route_name(CountRoute route) {
  switch (route) {
    case CountRoute::trees:
      return "trees";
    case CountRoute::words:
      return "words";
    case CountRoute::bijection_image:
      return "bijection-image";
  }
  return "trees";
}

std::string to_csv(const CountTable& table) {
  std::ostringstream os;
  os << "n,k,count,route\n";
  for (std::size_t n = 0; n < table.rows.size(); ++n)
    for (std::size_t k = 0; k < table.rows[n].size(); ++k)
      os << n << ',' << k << ',' << table.rows[n][k] << ',' << route_name(table.route) << '\n';
  return os.str();
}

std::vector<std::uint64_t> count_tnk(unsigned n, unsigned jobs) {
  if (n > kMaxSweepN) throw ValidationError("n=" + std::to_string(n) + " exceeds the sweep bound " +
                                            std::to_string(kMaxSweepN));
  const std::vector<Label> labels = iota_labels(n + 1);
  const std::vector<std::vector<Label>> prefixes = word_prefixes(labels);
  std::vector<std::vector<std::uint64_t>> partial(prefixes.size(), std::vector<std::uint64_t>(n + 1, 0));
  run_partitioned(prefixes.size(), jobs, [&](std::size_t i) {
    for_each_rooted_tree(labels, prefixes[i], [&](const RootedTree& t) { ++partial[i][md_size(t) - 1]; });
  });
  std::vector<std::uint64_t> row(n + 1, 0);
  for (const auto& p : partial)
    for (unsigned k = 0; k <= n; ++k) row[k] += p[k];
  return row;
}

CountTable count_tnk_table(unsigned n_max, unsigned jobs) {
  CountTable table{n_max, CountRoute::trees, {}};
  for (unsigned n = 0; n <= n_max; ++n) table.rows.push_back(count_tnk(n, jobs));
  return table;
}

std::vector<std::uint64_t> count_fnk_row(unsigned n) {
  if (n > kMaxSweepN) throw ValidationError("n=" + std::to_string(n) + " exceeds the sweep bound " +
                                            std::to_string(kMaxSweepN));
  // A word counts towards every k below its smallest missing letter.
  std::vector<std::uint64_t> by_missing(n + 2, 0);
  const std::vector<Label> alphabet = iota_labels(n);
  std::vector<bool> seen(n + 2);
  for_each_word(alphabet, n, [&](std::span<const Label> w) {
    std::fill(seen.begin(), seen.end(), false);
    for (Label x : w) seen[x] = true;
    unsigned missing = 1;
    while (missing <= n && seen[missing]) ++missing;
    ++by_missing[missing];
  });
  std::vector<std::uint64_t> row(n + 1, 0);
  for (unsigned k = 0; k <= n; ++k)
    for (unsigned m = k + 1; m <= n + 1; ++m) row[k] += by_missing[m];
  return row;
}

std::uint64_t count_fnk(unsigned n, unsigned k) {
  if (k > n) throw ValidationError("k must not exceed n");
  return count_fnk_row(n)[k];
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (unsigned i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

BigInt fnk_inclusion_exclusion(unsigned n, unsigned k) {
  BigInt total = 0;
  for (unsigned i = 0; i <= k; ++i) {
    BigInt term = binomial(k, i) * power(n - i, n);
    total += (i % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

IdentityReport check_power_identity(const std::vector<std::uint64_t>& row, unsigned n, unsigned m) {
  BigInt lhs = 0;
  for (unsigned k = 0; k < row.size(); ++k) lhs += binomial(m + k, k) * row[k];
  const BigInt rhs = power(n + m + 1, n);
  return {"power", n, m, str(lhs), str(rhs), lhs == rhs};
}

IdentityReport check_power_identity(unsigned n, unsigned m) { return check_power_identity(count_tnk(n), n, m); }

IdentityReport check_harmonic_identity(const std::vector<std::uint64_t>& row, unsigned n) {
  if (n == 0) throw ValidationError("the harmonic sum needs n >= 1");
  BigRational lhs = 0;
  for (unsigned k = 1; k < row.size(); ++k) lhs += BigRational(BigInt(row[k]), BigInt(k));
  const BigRational rhs(power(n, n));
  return {"harmonic", n, 0, str(lhs), str(rhs), lhs == rhs};
}

IdentityReport check_harmonic_identity(unsigned n) { return check_harmonic_identity(count_tnk(n), n); }

IdentityReport check_forest_count(unsigned n) {
  std::uint64_t count = 0;
  for_each_ordered_forest(iota_labels(n), [&](const OrderedForest&) { ++count; });
  const BigInt rhs = power(n, n);
  return {"forests", n, 0, std::to_string(count), str(rhs), BigInt(count) == rhs};
}

std::vector<IdentityReport> check_forest_split(const std::vector<std::uint64_t>& row, unsigned n) {
  std::vector<std::uint64_t> by_last(n + 1, 0);
  for_each_ordered_forest(iota_labels(n), [&](const OrderedForest& f) {
    if (!f.empty()) ++by_last[md_size(f[f.size() - 1])];
  });
  std::vector<IdentityReport> out;
  for (unsigned k = 1; k <= n && k < row.size(); ++k) {
    const BigInt lhs = BigInt(by_last[k]) * k;
    out.push_back({"forests-by-k", n, k, str(lhs), std::to_string(row[k]), lhs == BigInt(row[k])});
  }
  return out;
}

std::vector<RefinedCell> count_refined(unsigned n) {
  if (n == 0 || n > kMaxSweepN)
    throw ValidationError("refined counts need 1 <= n <= " + std::to_string(kMaxSweepN));
  std::map<std::pair<unsigned, unsigned>, std::pair<std::uint64_t, std::uint64_t>> cells;
  const std::vector<Label> labels = iota_labels(n);
  for_each_rooted_tree(labels, [&](const RootedTree& t) {
    const auto l = static_cast<unsigned>(smaller_root_children(t));
    const auto k = static_cast<unsigned>(md_size(t) - 1);
    ++cells[{l, k}].first;
  });
  for_each_forest(labels, [&](const OrderedForest& f) {
    unsigned k = 0;
    for (const RootedTree& t : f.trees()) {
      if (t.contains(n)) {
        if (!t.is_leaf(n)) return;
      } else {
        k += static_cast<unsigned>(md_size(t));
      }
    }
    ++cells[{static_cast<unsigned>(f.size() - 1), k}].second;
  });
  std::vector<RefinedCell> out;
  for (const auto& [key, value] : cells) out.push_back({n, key.first, key.second, value.first, value.second});
  return out;
}

std::string to_csv(const std::vector<RefinedCell>& cells) {
  std::ostringstream os;
  os << "n,l,k,A,B\n";
  for (const RefinedCell& c : cells) os << c.n << ',' << c.l << ',' << c.k << ',' << c.a << ',' << c.b << '\n';
  return os.str();
}

std::vector<IdentityReport> check_refined_marginals(const std::vector<RefinedCell>& cells, unsigned n) {
  std::vector<IdentityReport> out;
  for (unsigned l = 0; l < n; ++l) {
    std::uint64_t sum = 0;
    for (const RefinedCell& c : cells)
      if (c.n == n && c.l == l) sum += c.a;
    const BigInt expected = binomial(n - 1, l) * power(n - 1, n - 1 - l);
    out.push_back({"marginal", n, l, std::to_string(sum), str(expected), BigInt(sum) == expected});
  }
  return out;
}

}  // namespace mdtree

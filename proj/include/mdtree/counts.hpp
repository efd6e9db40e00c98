#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mdtree {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class CountRoute { trees, words, bijection_image };
std::string_view route_name(CountRoute route);

/// rows[n][k] = a(n,k) for 0 <= k <= n <= n_max.
struct CountTable {
  unsigned n_max = 0;
  CountRoute route = CountRoute::trees;
  std::vector<std::vector<std::uint64_t>> rows;
};

/// CSV with header `n,k,count,route`.
std::string to_csv(const CountTable& table);

/// (a(n,0), ..., a(n,n)) by classifying every tree on [n+1] by |MD| - 1.
std::vector<std::uint64_t> count_tnk(unsigned n, unsigned jobs = 1);
CountTable count_tnk_table(unsigned n_max, unsigned jobs = 1);

/// Words in [n]^n whose image contains [k], by direct enumeration. The row
/// form makes one pass and returns the counts for every k.
std::uint64_t count_fnk(unsigned n, unsigned k);
std::vector<std::uint64_t> count_fnk_row(unsigned n);

/// sum_{i=0..k} (-1)^i C(k,i) (n-i)^n, an independent check on count_fnk.
BigInt fnk_inclusion_exclusion(unsigned n, unsigned k);

BigInt binomial(unsigned n, unsigned k);

/// `param` is m for the power identity, k for forests-by-k, l for the
/// refined marginals, and 0 otherwise.
struct IdentityReport {
  std::string name;
  unsigned n = 0;
  unsigned param = 0;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

/// sum_k C(m+k,k) a(n,k) against (n+m+1)^n. `row` is count_tnk(n).
IdentityReport check_power_identity(const std::vector<std::uint64_t>& row, unsigned n, unsigned m);
IdentityReport check_power_identity(unsigned n, unsigned m);

/// sum_{k>=1} a(n,k)/k against n^n, in exact rationals. Requires n >= 1.
IdentityReport check_harmonic_identity(const std::vector<std::uint64_t>& row, unsigned n);
IdentityReport check_harmonic_identity(unsigned n);

/// Number of ordered forests on [n] by enumeration, against n^n.
IdentityReport check_forest_count(unsigned n);

/// For every k >= 1: k times the number of ordered forests on [n] whose last
/// tree has |MD| = k, against a(n,k). One report per k.
std::vector<IdentityReport> check_forest_split(const std::vector<std::uint64_t>& row, unsigned n);

/// One row of the refined table.
struct RefinedCell {
  unsigned n = 0;
  unsigned l = 0;
  unsigned k = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
};

/// A(n,l,k): trees on [n] whose root has l smaller children and |MD| = k+1.
/// B(n,l,k): forests on [n] with l+1 trees, n a leaf, and the trees without
/// n having MD sizes summing to k. Every cell where either side is nonzero.
std::vector<RefinedCell> count_refined(unsigned n);

/// CSV with header `n,l,k,A,B`.
std::string to_csv(const std::vector<RefinedCell>& cells);

/// sum_k A(n,l,k) against C(n-1,l) (n-1)^(n-1-l), one report per l.
std::vector<IdentityReport> check_refined_marginals(const std::vector<RefinedCell>& cells, unsigned n);

}  // namespace mdtree

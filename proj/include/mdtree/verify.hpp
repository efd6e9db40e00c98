#pragma once

#include <string>
#include <vector>

#include "mdtree/counts.hpp"

namespace mdtree {

/// Largest n for which the sweep also enumerates the cycle, forest and
/// sequence sets directly.
inline constexpr unsigned kFiveWayMaxN = 4;

struct VerifyReport {
  /// `OK n=.. k=.. ...` per (n,k) and `FAIL n=.. k=.. object=.. reason=..`
  /// per violation, followed by one `DONE` line.
  std::vector<std::string> lines;
  CountTable trees;
  CountTable image;
  CountTable words;
  std::size_t failures = 0;

  bool ok() const { return failures == 0; }
  std::string text() const;
  /// The three tables under a single `n,k,count,route` header.
  std::string csv() const;
};

/// For each n <= n_max and k <= n: enumerates T(n,k), pushes every tree
/// through compose_t_to_f, checks the image lies in F(n,k) without
/// collisions, compares the three counts, and checks the roundtrip. For
/// n <= kFiveWayMaxN the cycle, forest and sequence sets are counted too.
/// The report does not depend on `jobs`.
VerifyReport verify_sweep(unsigned n_max, unsigned jobs = 1);

}  // namespace mdtree

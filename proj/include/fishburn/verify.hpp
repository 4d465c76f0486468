#pragma once

// Exhaustive verification suites, shared by the CLI and the tests. Each
// suite stops at the first failure and reports it in canonical text form.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "fishburn/enumeration.hpp"

namespace fishburn {

struct VerifyReport {
  bool passed = true;
  /// Number of individual checks that ran.
  std::size_t checked = 0;
  /// Description of the first failure; empty when passed.
  std::string counterexample;
};

/// Psi, hat, Lambda and the sorting form of Lambda^-1 on every ascent
/// sequence of length <= max_n; Lambda^-1 o Lambda on R_n filtered from S_n;
/// Omega in both directions for n <= min(max_n, 6).
VerifyReport verify_roundtrips(int max_n, const BruteForceCaps& caps = {});

/// The statistics dictionary on every ascent sequence of length <= max_n.
VerifyReport verify_stats(int max_n);

/// Product formula against the table, the functional equation through t^N,
/// sum of F_n against F(t; u, 1) and the low-order terms of F.
VerifyReport verify_series(int N);

/// The polynomial identity for S at m = 1..5, the kernel-method solution
/// through (t^N, u^J) and vanishing at the kernel root.
VerifyReport verify_kernel(int J, int N);

/// Every fixed-point-free involution on <= 2 max_n points: I_2n membership
/// tests agree, nesting removal equals Omega^-1 o Omega, keeps Omega and is
/// independent of the order in which nestings are removed.
VerifyReport verify_nestings(int max_n);

/// Every result reachable by removing neighbour nestings in any order.
std::set<ChordInvolution> all_nesting_removal_results(const ChordInvolution& c);

std::optional<VerifyReport> run_suite(std::string_view name, int max_n, const BruteForceCaps& caps = {});

}  // namespace fishburn

#pragma once

// Exact enumeration through generating functions: the product formula for
// p_n, the ascent/last-entry table and the trivariate series built from it,
// and checks of the functional equation and its kernel-method solution.

#include <vector>

#include "fishburn/truncated_series.hpp"

namespace fishburn {

/// p_0..p_N: coefficients of sum_n prod_{i=1}^n (1 - (1-t)^i).
std::vector<BigInt> p_series(int N);

/// counts[n][a][l]: ascent sequences of length n with a ascents ending in l.
/// Length 0 contributes the empty sequence at (a, l) = (0, 0).
struct CountTable {
  std::vector<std::vector<std::vector<BigInt>>> counts;

  int max_length() const { return static_cast<int>(counts.size()) - 1; }
  BigInt total(int n) const;
};

CountTable count_table(int N);

/// F(t; u, v) = sum counts[n][a][l] t^n u^a v^l, placed in the given box.
TruncatedSeries F_from_table(const CountTable& table, Dims dims);
/// F - 1: non-empty sequences only.
TruncatedSeries G_from_table(const CountTable& table, Dims dims);

/// (v - 1 - t v (1 - u)) G(u, v) - [t (v - 1) - t G(u, 1) + t u v^2 G(u v, 1)].
/// G must be exact in v.
TruncatedSeries functional_equation_residual(const TruncatedSeries& G);

/// Residual for the table-derived G through t^N.
TruncatedSeries verify_functional_equation(int N);

/// The kernel v - 1 - t v (1 - u) evaluated at v = 1 / (1 - t + t u), and
/// the right-hand side of the equation at the same point, through t^N.
/// Both vanish.
TruncatedSeries kernel_at_root(int N);
TruncatedSeries equation_at_root(int N);

/// F_n(t; u) as an exact polynomial: t-degree up to n + n(n+1)/2, u-degree n.
TruncatedSeries F_n_polynomial(int n);

/// Lowest power of t with a nonzero coefficient; -1 for the zero series.
int t_valuation(const TruncatedSeries& s);

/// S(t; u) as a k-sum minus its closed polynomial form, through (t^N, u^N).
TruncatedSeries S_identity_residual(int m, int N);

/// The k-sum for F(t; u, 1) minus the table-derived F(t; u, 1), through
/// (t^N, u^J).
TruncatedSeries kernel_solution_residual(int J, int N);

/// Number of barred-pattern avoiders of length n with k right-to-left
/// minima: binom(binom(k,2) + n - 1, n - k).
BigInt barred_by_k(int n, int k);
/// Sum over k = 1..n; 1 for n = 0.
BigInt count_barred_avoiders(int n);

}  // namespace fishburn

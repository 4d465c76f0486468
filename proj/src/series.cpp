#include "fishburn/series.hpp"

#include <stdexcept>

namespace fishburn {

namespace {

using Poly = std::vector<BigInt>;

Poly poly_mul(const Poly& a, const Poly& b, std::size_t cap = SIZE_MAX) {
  if (a.empty() || b.empty()) return {};
  Poly out(std::min(a.size() + b.size() - 1, cap), BigInt(0));
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void poly_add_scaled(Poly& acc, const Poly& p, const BigInt& c) {
  if (acc.size() < p.size()) acc.resize(p.size(), BigInt(0));
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += c * p[i];
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// (1 - t)^e.
Poly one_minus_t_pow(int e) {
  Poly out(static_cast<std::size_t>(e) + 1);
  for (int k = 0; k <= e; ++k) {
    out[static_cast<std::size_t>(k)] = binomial(static_cast<unsigned long>(e), static_cast<unsigned long>(k));
    if (k % 2 == 1) out[static_cast<std::size_t>(k)] = -out[static_cast<std::size_t>(k)];
  }
  return out;
}

/// 1 - (1 - t)^e.
Poly one_minus_q_pow(int e) {
  Poly out = one_minus_t_pow(e);
  for (auto& c : out) c = -c;
  out[0] += 1;
  return out;
}

struct Generators {
  TruncatedSeries one, t, u, v;
  explicit Generators(Dims d)
      : one(TruncatedSeries::constant(d, 1)),
        t(TruncatedSeries::monomial(d, 1, 0, 0)),
        u(TruncatedSeries::monomial(d, 0, 1, 0)),
        v(TruncatedSeries::monomial(d, 0, 0, 1)) {}
};

TruncatedSeries rhs(const TruncatedSeries& G) {
  const Generators g(G.dims());
  const TruncatedSeries G1 = G.at_v_one().resized(G.dims());
  const TruncatedSeries Guv1 = G1.substitute_u_uv();
  return g.t * (g.v - g.one) - g.t * G1 + g.t * g.u * g.v * g.v * Guv1;
}

/// 1 / (1 - t + t u), in a box with no v.
TruncatedSeries kernel_root(Dims d) {
  const Generators g(d);
  return (g.one - g.t + g.t * g.u).reciprocal();
}

}  // namespace

std::vector<BigInt> p_series(int N) {
  if (N < 0) throw std::invalid_argument("negative order");
  const auto cap = static_cast<std::size_t>(N) + 1;
  Poly sum(cap, BigInt(0));
  Poly prod{BigInt(1)};
  poly_add_scaled(sum, prod, 1);
  // The n-th product is O(t^n), so n <= N suffices.
  for (int n = 1; n <= N; ++n) {
    prod = poly_mul(prod, one_minus_q_pow(n), cap);
    poly_add_scaled(sum, prod, 1);
  }
  sum.resize(cap);
  return sum;
}

BigInt CountTable::total(int n) const {
  BigInt acc = 0;
  for (const auto& row : counts[static_cast<std::size_t>(n)]) {
    for (const auto& c : row) acc += c;
  }
  return acc;
}

CountTable count_table(int N) {
  if (N < 0) throw std::invalid_argument("negative length");
  const auto side = static_cast<std::size_t>(N) + 1;
  CountTable table;
  table.counts.assign(side, std::vector<std::vector<BigInt>>(side, std::vector<BigInt>(side, BigInt(0))));
  table.counts[0][0][0] = 1;
  if (N >= 1) table.counts[1][0][0] = 1;
  for (int n = 1; n < N; ++n) {
    const auto& cur = table.counts[static_cast<std::size_t>(n)];
    auto& next = table.counts[static_cast<std::size_t>(n) + 1];
    for (int a = 0; a < n; ++a) {
      for (int l = 0; l < n; ++l) {
        const BigInt& c = cur[static_cast<std::size_t>(a)][static_cast<std::size_t>(l)];
        if (c == 0) continue;
        for (int i = 0; i <= a + 1; ++i) {
          const int a2 = i <= l ? a : a + 1;
          next[static_cast<std::size_t>(a2)][static_cast<std::size_t>(i)] += c;
        }
      }
    }
  }
  return table;
}

TruncatedSeries F_from_table(const CountTable& table, Dims dims) {
  TruncatedSeries F(dims);
  for (int n = 0; n <= std::min(dims.t, table.max_length()); ++n) {
    const auto& layer = table.counts[static_cast<std::size_t>(n)];
    for (int a = 0; a <= std::min(dims.u, table.max_length()); ++a) {
      for (int l = 0; l <= std::min(dims.v, table.max_length()); ++l) {
        F.at(n, a, l) = layer[static_cast<std::size_t>(a)][static_cast<std::size_t>(l)];
      }
    }
  }
  return F;
}

TruncatedSeries G_from_table(const CountTable& table, Dims dims) {
  TruncatedSeries G = F_from_table(table, dims);
  G.at(0, 0, 0) -= 1;
  return G;
}

TruncatedSeries functional_equation_residual(const TruncatedSeries& G) {
  const Generators g(G.dims());
  const TruncatedSeries kernel = g.v - g.one - g.t * g.v + g.t * g.u * g.v;
  return kernel * G - rhs(G);
}

TruncatedSeries verify_functional_equation(int N) {
  const Dims d{N, N, N + 1};
  return functional_equation_residual(G_from_table(count_table(N), d));
}

TruncatedSeries kernel_at_root(int N) {
  const Dims d{N, N, 1};
  const Generators g(d);
  const TruncatedSeries kernel = g.v - g.one - g.t * g.v + g.t * g.u * g.v;
  return kernel.substitute_v(kernel_root(Dims{N, N, 0}).resized(d));
}

TruncatedSeries equation_at_root(int N) {
  // u-degree is capped at N, so v-degree of the right-hand side is at most
  // N + 2 and the substitution below is exact.
  const Dims d{N, N, N + 2};
  const TruncatedSeries r = rhs(G_from_table(count_table(N), d));
  return r.substitute_v(kernel_root(Dims{N, N, 0}).resized(d));
}

TruncatedSeries F_n_polynomial(int n) {
  if (n < 0) throw std::invalid_argument("negative index");
  const int tdeg = n + n * (n + 1) / 2;
  TruncatedSeries out(Dims{tdeg, n, 0});
  for (int l = 0; l <= n; ++l) {
    Poly B;
    for (int m = l; m <= n; ++m) {
      Poly term = one_minus_t_pow(m - l);
      for (int i = m - l + 1; i <= m; ++i) term = poly_mul(term, one_minus_q_pow(i));
      BigInt c = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(m));
      if ((n - m) % 2 == 1) c = -c;
      poly_add_scaled(B, term, c);
    }
    // (u - 1)^(n - l) u^l = sum_r binom(n-l, r) (-1)^(n-l-r) u^(r+l).
    for (int r = 0; r <= n - l; ++r) {
      BigInt a = binomial(static_cast<unsigned long>(n - l), static_cast<unsigned long>(r));
      if ((n - l - r) % 2 == 1) a = -a;
      for (std::size_t i = 0; i < B.size(); ++i) {
        if (B[i] != 0) out.at(static_cast<int>(i), r + l) += a * B[i];
      }
    }
  }
  return out;
}

int t_valuation(const TruncatedSeries& s) {
  const Dims d = s.dims();
  for (int i = 0; i <= d.t; ++i) {
    for (int j = 0; j <= d.u; ++j) {
      for (int k = 0; k <= d.v; ++k) {
        if (s.coeff(i, j, k) != 0) return i;
      }
    }
  }
  return -1;
}

TruncatedSeries S_identity_residual(int m, int N) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  const Dims d{N, N, 0};
  const Generators g(d);
  const TruncatedSeries q = g.one - g.t;
  const TruncatedSeries um1 = g.u - g.one;

  // Only k <= N + 1 survive the u^(k-1) factor.
  TruncatedSeries sum(d);
  TruncatedSeries inv_prod = g.one;
  const TruncatedSeries lead = um1.pow(static_cast<unsigned>(m));
  for (int k = 1; k <= N + 1; ++k) {
    const TruncatedSeries Dk = g.u - um1 * q.pow(static_cast<unsigned>(k));
    inv_prod = inv_prod * Dk.reciprocal();
    sum += lead * g.u.pow(static_cast<unsigned>(k - 1)) * q.pow(static_cast<unsigned>(m * k)) * inv_prod;
  }

  TruncatedSeries closed(d);
  for (int j = 0; j <= m - 1; ++j) {
    TruncatedSeries term = um1.pow(static_cast<unsigned>(j)) * g.u.pow(static_cast<unsigned>(m - 1 - j)) *
                           q.pow(static_cast<unsigned>(j));
    for (int i = j + 1; i <= m - 1; ++i) term = term * (g.one - q.pow(static_cast<unsigned>(i)));
    closed -= term;
  }
  return sum - closed;
}

TruncatedSeries kernel_solution_residual(int J, int N) {
  const Dims d{N, J, 0};
  const Generators g(d);
  const TruncatedSeries q = g.one - g.t;
  const TruncatedSeries um1 = g.u - g.one;

  TruncatedSeries sum(d);
  TruncatedSeries inv_prod = g.one;
  for (int k = 1; k <= J + 1; ++k) {
    const TruncatedSeries qk = q.pow(static_cast<unsigned>(k));
    const TruncatedSeries inv_Dk = (g.u - um1 * qk).reciprocal();
    inv_prod = inv_prod * inv_Dk;
    sum += (g.one - g.u) * g.u.pow(static_cast<unsigned>(k - 1)) * qk * inv_Dk * inv_prod;
  }
  return sum - F_from_table(count_table(N), Dims{N, J, N}).at_v_one();
}

BigInt barred_by_k(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  return binomial(static_cast<unsigned long>(k) * static_cast<unsigned long>(k - 1) / 2 + static_cast<unsigned long>(n) - 1,
                  static_cast<unsigned long>(n - k));
}

BigInt count_barred_avoiders(int n) {
  if (n < 0) throw std::invalid_argument("negative length");
  if (n == 0) return 1;
  BigInt total = 0;
  for (int k = 1; k <= n; ++k) total += barred_by_k(n, k);
  return total;
}

}  // namespace fishburn

#include <doctest.h>

#include "fishburn/enumeration.hpp"
#include "fishburn/series.hpp"

using namespace fishburn;

namespace {

std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("series arithmetic") {
  const Dims d{4, 2, 2};
  const auto one = TruncatedSeries::constant(d, 1);
  const auto t = TruncatedSeries::monomial(d, 1, 0, 0);
  const auto u = TruncatedSeries::monomial(d, 0, 1, 0);
  const auto v = TruncatedSeries::monomial(d, 0, 0, 1);
  const auto geo = (one - t).reciprocal();
  for (int i = 0; i <= 4; ++i) CHECK(geo.coeff(i) == 1);
  CHECK((geo * (one - t)) == one);
  CHECK((one + u).pow(3).coeff(0, 2) == 3);
  CHECK((one + u).pow(3).coeff(0, 3) == 0);
  CHECK((one + t).pow(3).coeff(2) == 3);
  CHECK((one - u * v).reciprocal().coeff(0, 2, 2) == 1);
  CHECK((one - t - u * t).reciprocal() * (one - t - u * t) == one);
  CHECK_THROWS_AS((t + t).reciprocal(), std::domain_error);
  CHECK((u * v).substitute_u_uv() == u * v * v);
  CHECK((u * v + v * v).at_v_one() == (u + one).resized(Dims{4, 2, 0}));
  CHECK(TruncatedSeries::monomial(d, 5, 0, 0).is_zero());
  CHECK(t.coeff(9) == 0);
  CHECK_THROWS_AS(t + TruncatedSeries(Dims{1, 1, 1}), std::invalid_argument);
  // v -> 1 + t in a flat box
  const auto vt = (v * v).substitute_v((one + t).resized(Dims{4, 2, 2}));
  CHECK(vt == (one + t * 2 + t * t).resized(Dims{4, 2, 0}));
  CHECK((-(t * 3)).coeff(1) == -3);
  CHECK(t.to_string() == "1*t^1");
  CHECK(TruncatedSeries(d).to_string() == "0");
}

TEST_CASE("product formula coefficients") {
  CHECK(p_series(8) == big({1, 1, 2, 5, 15, 53, 217, 1014, 5335}));
  CHECK(p_series(0) == big({1}));
  CHECK(p_series(1) == big({1, 1}));
  const auto table = count_table(10);
  const auto p = p_series(10);
  CHECK(p[9] == table.total(9));
  CHECK(p[10] == table.total(10));
  CHECK(p[9] == 31240);
  CHECK(p[10] == 201608);
  CHECK(p_series(20)[20] == count_table(20).total(20));
}

TEST_CASE("count table") {
  const auto table = count_table(8);
  CHECK(table.counts[1][0][0] == 1);
  CHECK(table.total(1) == 1);
  for (int n = 0; n <= 8; ++n) CHECK(table.total(n) == BigInt(static_cast<unsigned long>(count_family(Family::AscentSequences, static_cast<std::size_t>(n)))));
  // rows by (asc, last) against enumeration
  for (int n = 1; n <= 7; ++n) {
    std::vector<std::vector<long>> direct(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    for_each_ascent_sequence(static_cast<std::size_t>(n), [&](const AscentSequence& x) {
      ++direct[static_cast<std::size_t>(x.ascents())][static_cast<std::size_t>(x.entries().back())];
    });
    for (int a = 0; a < n; ++a) {
      for (int l = 0; l < n; ++l) {
        CHECK(table.counts[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)][static_cast<std::size_t>(l)] ==
              direct[static_cast<std::size_t>(a)][static_cast<std::size_t>(l)]);
      }
    }
  }
  const auto F = F_from_table(table, Dims{8, 8, 8});
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j <= 8; ++j) {
      for (int k = 0; k <= 8; ++k) CHECK(F.coeff(i, j, k) >= 0);
    }
  }
  CHECK(F.coeff(0) == 1);
  CHECK(F.coeff(1) == 1);
  CHECK(F.coeff(2) == 1);
  CHECK(F.coeff(2, 1, 1) == 1);
  CHECK(F.coeff(3) == 1);
  CHECK(F.coeff(3, 1, 1) == 2);
  CHECK(F.coeff(3, 1, 0) == 1);
  CHECK(F.coeff(3, 2, 2) == 1);
  CHECK(F.resized(Dims{3, 8, 8}).to_string() == "1 + 1*t^1 + 1*t^2 + 1*t^2*u^1*v^1 + 1*t^3 + 1*t^3*u^1 + 2*t^3*u^1*v^1 + 1*t^3*u^2*v^2");
}

TEST_CASE("functional equation") {
  for (int N = 0; N <= 12; ++N) CHECK(verify_functional_equation(N).is_zero());
  const Dims d{8, 8, 9};
  auto G = G_from_table(count_table(8), d);
  CHECK(functional_equation_residual(G).is_zero());
  G.at(5, 2, 1) += 1;
  CHECK_FALSE(functional_equation_residual(G).is_zero());
}

TEST_CASE("kernel root") {
  CHECK(kernel_at_root(8).is_zero());
  CHECK(equation_at_root(8).is_zero());
}

TEST_CASE("the polynomials F_n") {
  CHECK(F_n_polynomial(0) == TruncatedSeries::constant(Dims{0, 0, 0}, 1));
  const Dims flat{10, 10, 0};
  TruncatedSeries sum(flat);
  for (int n = 0; n <= 10; ++n) {
    const auto Fn = F_n_polynomial(n);
    const int val = t_valuation(Fn);
    CHECK((val == -1 || val >= n));
    sum += Fn.resized(flat);
  }
  CHECK(sum == F_from_table(count_table(10), Dims{10, 10, 10}).at_v_one());
  // F_5(t; 1) is the fifth summand of the product formula
  const auto F5 = F_n_polynomial(5);
  const Dims d5{F5.dims().t, 0, 0};
  TruncatedSeries at_one(d5);
  for (int i = 0; i <= d5.t; ++i) {
    for (int j = 0; j <= 5; ++j) at_one.at(i) += F5.coeff(i, j);
  }
  const auto one = TruncatedSeries::constant(d5, 1);
  const auto q = one - TruncatedSeries::monomial(d5, 1, 0, 0);
  TruncatedSeries prod = one;
  for (unsigned i = 1; i <= 5; ++i) prod = prod * (one - q.pow(i));
  CHECK(at_one == prod);
}

TEST_CASE("polynomial identity for S") {
  for (int m = 1; m <= 5; ++m) CHECK(S_identity_residual(m, 8).is_zero());
}

TEST_CASE("kernel-method solution") {
  CHECK(kernel_solution_residual(4, 8).is_zero());
  CHECK(kernel_solution_residual(0, 8).is_zero());
  CHECK(kernel_solution_residual(2, 3).is_zero());
}

TEST_CASE("barred counts") {
  CHECK(count_barred_avoiders(0) == 1);
  const std::vector<long> totals{1, 2, 5, 14, 43};
  for (int n = 1; n <= 5; ++n) CHECK(count_barred_avoiders(n) == totals[static_cast<std::size_t>(n - 1)]);
  CHECK(barred_by_k(5, 1) == 1);
  CHECK(barred_by_k(5, 2) == 10);
  CHECK(barred_by_k(5, 3) == 21);
  CHECK(barred_by_k(5, 4) == 10);
  CHECK(barred_by_k(5, 5) == 1);
  for (int n = 1; n <= 10; ++n) CHECK(barred_by_k(n, n) == 1);
  CHECK_THROWS_AS(barred_by_k(3, 4), std::invalid_argument);
}

#include "fishburn/verify.hpp"

#include <functional>

#include "fishburn/bijections.hpp"
#include "fishburn/series.hpp"
#include "fishburn/statistics.hpp"
#include "fishburn/text.hpp"

namespace fishburn {

namespace {

/// Records one check; returns false once a failure has been recorded.
bool expect(VerifyReport& r, bool ok, const std::function<std::string()>& describe) {
  ++r.checked;
  if (!ok && r.passed) {
    r.passed = false;
    r.counterexample = describe();
  }
  return r.passed;
}

std::string describe_stats(const StatRecord& s) {
  std::string out = "n=" + std::to_string(s.size) + " min=" + std::to_string(s.minimal) +
                    " srank=" + std::to_string(s.srank) + " rank=" + std::to_string(s.rank) +
                    " max=" + std::to_string(s.maximal) + " comp=" + std::to_string(s.components);
  const auto poly = [](const QPolynomial& p) {
    std::vector<int> c(p.coefficients().begin(), p.coefficients().end());
    return format_entries(c);
  };
  return out + " lambda=" + poly(s.levels) + " lambda_bar=" + poly(s.maximal_levels);
}

bool low_order_terms_match(const TruncatedSeries& F) {
  // 1 + t + (1 + uv) t^2 + (1 + 2uv + u + u^2 v^2) t^3
  TruncatedSeries expected(Dims{3, F.dims().u, F.dims().v});
  expected.at(0, 0, 0) = 1;
  expected.at(1, 0, 0) = 1;
  expected.at(2, 0, 0) = 1;
  expected.at(2, 1, 1) = 1;
  expected.at(3, 0, 0) = 1;
  expected.at(3, 1, 1) = 2;
  expected.at(3, 1, 0) = 1;
  expected.at(3, 2, 2) = 1;
  return F.resized(expected.dims()) == expected;
}

}  // namespace

VerifyReport verify_roundtrips(int max_n, const BruteForceCaps& caps) {
  VerifyReport r;
  for (int n = 1; n <= max_n && r.passed; ++n) {
    for_each_ascent_sequence(static_cast<std::size_t>(n), [&](const AscentSequence& x) {
      if (!r.passed) return;
      const auto text = format_sequence(x);
      const Poset p = psi_inv(x);
      if (!expect(r, psi(p) == x, [&] { return "psi(psi_inv(x)) != x for x = " + text; })) return;
      const auto m = hat(x);
      if (!expect(r, hat_inv(m) == x, [&] { return "hat_inv(hat(x)) != x for x = " + text; })) return;
      if (!expect(r, is_modified_ascent_sequence(m.entries()),
                  [&] { return "hat(x) fails the modified characterization for x = " + text; }))
        return;
      const auto pi = lambda_inv(x);
      if (!expect(r, lambda_inv_by_sorting(x) == pi,
                  [&] { return "insertion and sorting disagree for x = " + text; }))
        return;
      if (!expect(r, lambda(pi) == x, [&] { return "lambda(lambda_inv(x)) != x for x = " + text; })) return;
      if (!expect(r, lambda_via_sites(pi) == x, [&] { return "site reading of lambda fails for x = " + text; }))
        return;
      if (!expect(r, poset_to_perm(p) == pi, [&] { return "poset_to_perm(psi_inv(x)) != lambda_inv(x) for x = " + text; }))
        return;
      const auto labels = canonical_labelling(p);
      for (int c = 1; c <= n && r.passed; ++c) {
        expect(r, p.level(labels.element[static_cast<std::size_t>(c - 1)]) == m[static_cast<std::size_t>(c - 1)],
               [&] { return "canonical label " + std::to_string(c) + " off its level for x = " + text; });
      }
      expect(r, poset_from_relations(poset_to_relations(p)) == p,
             [&] { return "relation roundtrip fails for psi_inv(" + text + ")"; });
    });
  }
  for (int n = 1; n <= std::min(max_n, caps.r_permutations) && r.passed; ++n) {
    for_each_permutation(static_cast<std::size_t>(n), [&](const Permutation& pi) {
      if (!r.passed || !in_R(pi)) return;
      expect(r, lambda_inv(lambda(pi)) == pi,
             [&] { return "lambda_inv(lambda(pi)) != pi for pi = " + format_permutation(pi); });
    });
  }
  for (int n = 1; n <= std::min({max_n, 6, caps.involutions}) && r.passed; ++n) {
    for_each_perfect_matching(static_cast<std::size_t>(n), [&](const ChordInvolution& c) {
      if (!r.passed || !in_I2n(c)) return;
      expect(r, omega_inv(omega(c)) == c,
             [&] { return "omega_inv(omega(c)) != c for c = " + format_involution(c); });
    });
    for_each_poset(static_cast<std::size_t>(n), [&](const Poset& p) {
      if (!r.passed) return;
      const auto c = omega_inv(p);
      if (!expect(r, in_I2n(c), [&] { return "omega_inv leaves I_2n for " + format_poset(p); })) return;
      expect(r, isomorphic(omega(c), p), [&] { return "omega(omega_inv(P)) !~ P for " + format_poset(p); });
    });
  }
  return r;
}

VerifyReport verify_stats(int max_n) {
  VerifyReport r;
  for (int n = 0; n <= max_n && r.passed; ++n) {
    for_each_ascent_sequence(static_cast<std::size_t>(n), [&](const AscentSequence& x) {
      if (!r.passed) return;
      const auto sx = stats_of_sequence(x);
      if (n == 0) {
        expect(r, sx == StatRecord{}, [&] { return "empty sequence has nonzero statistics"; });
        return;
      }
      const auto sp = stats_of_perm(lambda_inv(x));
      const auto sP = stats_of_poset(psi_inv(x));
      expect(r, sx == sp && sx == sP, [&] {
        return "dictionary fails for x = " + format_sequence(x) + ": sequence {" + describe_stats(sx) +
               "} permutation {" + describe_stats(sp) + "} poset {" + describe_stats(sP) + "}";
      });
      expect(r, sx.levels.evaluate(1) == n && sx.levels.evaluate(0) == sx.minimal,
             [&] { return "lambda(1) or lambda(0) wrong for x = " + format_sequence(x); });
    });
  }
  return r;
}

VerifyReport verify_series(int N) {
  VerifyReport r;
  const auto p = p_series(N);
  const auto table = count_table(N);
  for (int n = 0; n <= N && r.passed; ++n) {
    expect(r, p[static_cast<std::size_t>(n)] == table.total(n), [&] {
      return "p_" + std::to_string(n) + ": product formula " + p[static_cast<std::size_t>(n)].get_str() +
             " vs table " + table.total(n).get_str();
    });
  }
  if (!r.passed) return r;
  const auto residual = verify_functional_equation(N);
  if (!expect(r, residual.is_zero(), [&] { return "functional equation residual: " + residual.to_string(); }))
    return r;
  if (N >= 3) {
    const auto F = F_from_table(table, Dims{N, N, N});
    if (!expect(r, low_order_terms_match(F), [&] { return "low-order terms of F differ"; })) return r;
  }
  const int M = std::min(N, 10);
  const Dims flat{M, M, 0};
  TruncatedSeries sum(flat);
  for (int n = 0; n <= M && r.passed; ++n) {
    const auto Fn = F_n_polynomial(n);
    const int val = t_valuation(Fn);
    if (!expect(r, val == -1 || val >= n, [&] { return "F_" + std::to_string(n) + " is not a multiple of t^n"; }))
      return r;
    // F_n(t; 1) = prod (1 - (1-t)^i), whose coefficients sum into p.
    TruncatedSeries at_one(Dims{Fn.dims().t, 0, 0});
    for (int i = 0; i <= Fn.dims().t; ++i) {
      for (int j = 0; j <= Fn.dims().u; ++j) at_one.at(i) += Fn.coeff(i, j);
    }
    TruncatedSeries prod = TruncatedSeries::constant(at_one.dims(), 1);
    for (int i = 1; i <= n; ++i) {
      TruncatedSeries f = TruncatedSeries::constant(at_one.dims(), 1);
      const TruncatedSeries q = f - TruncatedSeries::monomial(at_one.dims(), 1, 0, 0);
      prod = prod * (f - q.pow(static_cast<unsigned>(i)));
    }
    if (!expect(r, at_one == prod, [&] { return "F_" + std::to_string(n) + "(t;1) differs from the product"; }))
      return r;
    sum += Fn.resized(flat);
  }
  const auto F1 = F_from_table(count_table(M), Dims{M, M, M}).at_v_one();
  expect(r, sum == F1, [&] { return "sum of F_n differs from F(t;u,1): " + (sum - F1).to_string(); });
  return r;
}

VerifyReport verify_kernel(int J, int N) {
  VerifyReport r;
  for (int m = 1; m <= 5 && r.passed; ++m) {
    const auto res = S_identity_residual(m, N);
    expect(r, res.is_zero(), [&] { return "polynomial identity fails at m = " + std::to_string(m) + ": " + res.to_string(); });
  }
  if (!r.passed) return r;
  const auto res = kernel_solution_residual(J, N);
  if (!expect(r, res.is_zero(), [&] { return "kernel solution residual: " + res.to_string(); })) return r;
  const auto k = kernel_at_root(N);
  if (!expect(r, k.is_zero(), [&] { return "kernel does not vanish at its root: " + k.to_string(); })) return r;
  const auto e = equation_at_root(N);
  expect(r, e.is_zero(), [&] { return "right-hand side does not vanish at the kernel root: " + e.to_string(); });
  return r;
}

std::set<ChordInvolution> all_nesting_removal_results(const ChordInvolution& c) {
  std::set<ChordInvolution> results;
  std::set<ChordInvolution> seen;
  std::function<void(const ChordInvolution&)> walk = [&](const ChordInvolution& cur) {
    if (!seen.insert(cur).second) return;
    bool any = false;
    const int points = static_cast<int>(cur.points());
    for (int i = 1; i < points; ++i) {
      const int a = cur.partner(i);
      const int b = cur.partner(i + 1);
      if (a == i + 1) continue;
      const bool both_open = cur.opens(i) && cur.opens(i + 1);
      const bool both_close = !cur.opens(i) && !cur.opens(i + 1);
      if ((both_open && b < a) || (both_close && b < a)) {
        any = true;
        walk(cur.swap_neighbours(i));
      }
    }
    if (!any) results.insert(cur);
  };
  walk(c);
  return results;
}

VerifyReport verify_nestings(int max_n) {
  VerifyReport r;
  for (int n = 1; n <= max_n && r.passed; ++n) {
    for_each_perfect_matching(static_cast<std::size_t>(n), [&](const ChordInvolution& c) {
      if (!r.passed) return;
      const auto text = format_involution(c);
      const bool descent = in_I2n(c);
      const bool runs = satisfies_run_monotonicity(c);
      const bool no_nesting = !find_neighbour_nesting(c).has_value();
      if (!expect(r, descent == runs && runs == no_nesting,
                  [&] { return "membership tests disagree for " + text; }))
        return;
      std::size_t steps = 0;
      const auto cleaned = remove_neighbour_nestings(c, &steps);
      if (!expect(r, cleaned == omega_inv(omega(c)),
                  [&] { return "nesting removal differs from omega_inv(omega(c)) for " + text; }))
        return;
      if (!expect(r, isomorphic(omega(cleaned), omega(c)), [&] { return "nesting removal changed omega for " + text; })) return;
      if (!expect(r, count_crossings(cleaned) >= count_crossings(c) + steps,
                  [&] { return "crossings did not grow with every swap for " + text; }))
        return;
      if (descent) {
        if (!expect(r, cleaned == c, [&] { return "nesting removal moved an element of I_2n: " + text; })) return;
      }
      const auto all = all_nesting_removal_results(c);
      expect(r, all.size() == 1, [&] { return "nesting removal depends on order for " + text; });
    });
  }
  return r;
}

std::optional<VerifyReport> run_suite(std::string_view name, int max_n, const BruteForceCaps& caps) {
  if (name == "roundtrips") return verify_roundtrips(max_n, caps);
  if (name == "stats") return verify_stats(max_n);
  if (name == "series") return verify_series(max_n);
  if (name == "kernel") return verify_kernel(4, max_n);
  if (name == "nestings") return verify_nestings(max_n);
  return std::nullopt;
}

}  // namespace fishburn

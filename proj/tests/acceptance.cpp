// Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include "fishburn/bijections.hpp"
#include "fishburn/enumeration.hpp"
#include "fishburn/patterns.hpp"
#include "fishburn/series.hpp"
#include "fishburn/statistics.hpp"
#include "fishburn/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fishburn;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Outcome counting_concordance() {
  Outcome o;
  const std::vector<long> expected{1, 1, 2, 5, 15, 53, 217, 1014, 5335};
  const auto product = p_series(8);
  const auto table = count_table(8);
  for (int n = 0; n <= 8; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const BigInt want = expected[i];
    o.require(product[i] == want, "product formula at n=" + std::to_string(n));
    o.require(table.total(n) == want, "ascent DP at n=" + std::to_string(n));
    o.require(oracle::ascent_sequences(n).size() == static_cast<std::size_t>(expected[i]),
              "brute-force ascent sequences at n=" + std::to_string(n));
    o.require(count_family(Family::AscentSequences, i) == static_cast<std::size_t>(expected[i]),
              "ascent sequence enumeration at n=" + std::to_string(n));
    std::size_t r = 0;
    for (const auto& e : oracle::permutations(n)) r += oracle::in_R(e) ? 1 : 0;
    o.require(r == static_cast<std::size_t>(expected[i]), "filtered R_n at n=" + std::to_string(n));
    o.require(count_family(Family::RPermutations, i) == static_cast<std::size_t>(expected[i]),
              "library R_n at n=" + std::to_string(n));
    if (n <= 6) {
      o.require(count_family(Family::Involutions, i) == static_cast<std::size_t>(expected[i]),
                "filtered I_2n at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome worked_examples() {
  Outcome o;
  const auto x = validate_ascent_sequence({0, 1, 0, 1, 3, 1, 1, 2});
  const auto pi = validate_permutation({3, 1, 7, 6, 4, 8, 2, 5});
  o.require(lambda(validate_permutation({6, 1, 8, 3, 2, 5, 4, 7})) == validate_ascent_sequence({0, 1, 1, 2, 2, 0, 3, 1}),
            "Lambda(61832547)");
  o.require(hat(x).entries() == std::vector<int>{0, 3, 0, 1, 4, 1, 1, 2}, "hat(0,1,0,1,3,1,1,2)");
  o.require(lambda_inv(x) == pi, "Lambda^-1 by insertion");
  o.require(lambda_inv_by_sorting(x) == pi, "Lambda^-1 by sorting");
  o.require(active_sites(pi).gaps == std::vector<int>{0, 2, 5, 6, 7, 8}, "active sites of 31764825");
  o.require(psi(poset_from_relations(fixtures::removal_poset())) == x, "Psi of the removal example");
  o.require(psi_inv(validate_ascent_sequence({0, 1, 2, 3, 1, 0, 1, 2})) ==
                poset_from_relations(fixtures::addition_poset()),
            "Psi^-1 of the addition example");
  const auto c = validate_involution(fixtures::chord_example);
  o.require(omega(c) == poset_from_relations(fixtures::chord_example_poset()), "Omega of the chord example");
  o.require(omega_inv(omega(c)) == c, "Omega^-1 recovers the chord example");
  return o;
}

Outcome roundtrips() {
  Outcome o;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& pi : r_permutations(n)) o.require(lambda_inv(lambda(pi)) == pi, "Lambda roundtrip");
    for_each_ascent_sequence(n, [&](const AscentSequence& x) {
      o.require(psi(psi_inv(x)) == x, "Psi roundtrip");
      o.require(hat_inv(hat(x)) == x, "hat roundtrip");
    });
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& c : i_involutions(n)) o.require(omega_inv(omega(c)) == c, "Omega^-1 o Omega");
    for_each_poset(n, [&](const Poset& p) { o.require(isomorphic(omega(omega_inv(p)), p), "Omega o Omega^-1"); });
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_perfect_matching(n, [&](const ChordInvolution& c) {
      o.require(remove_neighbour_nestings(c) == omega_inv(omega(c)), "nesting removal");
    });
  }
  return o;
}

Outcome statistics_dictionary() {
  Outcome o;
  const auto report = verify_stats(8);
  o.require(report.passed, report.counterexample);
  const StatRecord expected{8, 2, 2, 4, 2, 1, QPolynomial({2, 3, 1, 1, 1}), QPolynomial({0, 0, 1, 0, 1})};
  const auto x = validate_ascent_sequence({0, 1, 0, 1, 3, 1, 1, 2});
  o.require(stats_of_sequence(x) == expected, "worked record from the sequence");
  o.require(stats_of_perm(lambda_inv(x)) == expected, "worked record from the permutation");
  o.require(stats_of_poset(psi_inv(x)) == expected, "worked record from the poset");
  return o;
}

Outcome series_identities() {
  Outcome o;
  o.require(verify_functional_equation(12).is_zero(), "functional equation through t^12");
  const Dims flat{10, 10, 0};
  TruncatedSeries sum(flat);
  for (int n = 0; n <= 10; ++n) {
    const auto Fn = F_n_polynomial(n);
    const int val = t_valuation(Fn);
    o.require(val == -1 || val >= n, "F_" + std::to_string(n) + " divisible by t^n");
    sum += Fn.resized(flat);
  }
  o.require(sum == F_from_table(count_table(10), Dims{10, 10, 10}).at_v_one(), "sum of F_n equals F(t;u,1)");
  for (int m = 1; m <= 5; ++m) o.require(S_identity_residual(m, 8).is_zero(), "S identity at m=" + std::to_string(m));
  o.require(kernel_solution_residual(4, 8).is_zero(), "kernel solution through u^4, t^8");
  const auto F = F_from_table(count_table(3), Dims{3, 3, 3});
  TruncatedSeries low(Dims{3, 3, 3});
  low.at(0, 0, 0) = 1;
  low.at(1, 0, 0) = 1;
  low.at(2, 0, 0) = 1;
  low.at(2, 1, 1) = 1;
  low.at(3, 0, 0) = 1;
  low.at(3, 1, 1) = 2;
  low.at(3, 1, 0) = 1;
  low.at(3, 2, 2) = 1;
  o.require(F == low, "low-order terms of F(t;u,v)");
  return o;
}

Outcome barred_counts() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    std::vector<long> by_k(static_cast<std::size_t>(n) + 1, 0);
    long brute = 0;
    for_each_permutation(static_cast<std::size_t>(n), [&](const Permutation& pi) {
      if (!avoids_barred(pi)) return;
      ++brute;
      const int k = right_to_left_minima(pi);
      ++by_k[static_cast<std::size_t>(k)];
      o.require(count_ascents(pi.entries()) == k - 1, "rmin - 1 = asc on avoiders");
    });
    long self = 0;
    for_each_ascent_sequence(static_cast<std::size_t>(n), [&](const AscentSequence& x) { self += is_self_modified(x) ? 1 : 0; });
    const auto tag = " at n=" + std::to_string(n);
    o.require(count_barred_avoiders(n) == brute, "binomial total vs brute force" + tag);
    o.require(self == brute, "self-modified count vs brute force" + tag);
    for (int k = 1; k <= n; ++k) {
      o.require(barred_by_k(n, k) == by_k[static_cast<std::size_t>(k)], "by-k split" + tag);
    }
  }
  return o;
}

Outcome regression_41523() {
  Outcome o;
  bool rejected = false;
  try {
    poset_from_relations(fixtures::dot_diagram_41523());
  } catch (const NotTwoPlusTwoFree&) {
    rejected = true;
  }
  o.require(rejected, "dot diagram of 41523 accepted");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"counting concordance p_0..p_8 across five methods", counting_concordance},
      {"worked examples reproduced exactly", worked_examples},
      {"exhaustive roundtrip suites", roundtrips},
      {"statistics dictionary for |x| <= 8 and the worked record", statistics_dictionary},
      {"series identities", series_identities},
      {"barred-pattern avoider counts for n <= 8", barred_counts},
      {"41523 dot diagram rejected as not (2+2)-free", regression_41523},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << " (" << ms << " ms)";
    if (!o.ok) std::cout << ": " << o.detail;
    std::cout << '\n';
    failures += o.ok ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}

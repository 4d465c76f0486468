#include <doctest.h>

#include <map>
#include <set>

#include "fishburn/bijections.hpp"
#include "fishburn/enumeration.hpp"
#include "fishburn/statistics.hpp"
#include "fixtures.hpp"

using namespace fishburn;

namespace {

AscentSequence seq(std::vector<int> e) { return validate_ascent_sequence(std::move(e)); }
Permutation perm(std::vector<int> e) { return validate_permutation(std::move(e)); }
ModifiedAscentSequence modseq(std::vector<int> e) { return validate_modified_ascent_sequence(std::move(e)); }

/// Statistics of a poset read straight off its relation matrix.
StatRecord stats_from_relations(const RelationMatrix& r) {
  const int n = static_cast<int>(r.size());
  StatRecord s;
  s.size = n;
  std::vector<int> down(static_cast<std::size_t>(n), 0);
  std::vector<bool> maximal(static_cast<std::size_t>(n), true);
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      if (r.less(x, y)) {
        ++down[static_cast<std::size_t>(y - 1)];
        maximal[static_cast<std::size_t>(x - 1)] = false;
      }
    }
  }
  std::set<int> sizes(down.begin(), down.end());
  const auto level = [&](int x) {
    return static_cast<int>(std::distance(sizes.begin(), sizes.find(down[static_cast<std::size_t>(x - 1)])));
  };
  s.rank = static_cast<int>(sizes.size()) - 1;
  s.srank = n;
  for (int x = 1; x <= n; ++x) {
    s.minimal += down[static_cast<std::size_t>(x - 1)] == 0 ? 1 : 0;
    s.levels.add_term(static_cast<std::size_t>(level(x)));
    if (maximal[static_cast<std::size_t>(x - 1)]) {
      ++s.maximal;
      s.srank = std::min(s.srank, level(x));
      s.maximal_levels.add_term(static_cast<std::size_t>(level(x)));
    }
  }
  // components: cut between elements sorted by level when everything
  // below the cut is below everything above it
  s.components = 1;
  for (int j = 0; j < s.rank; ++j) {
    bool cut = true;
    for (int x = 1; x <= n && cut; ++x) {
      for (int y = 1; y <= n && cut; ++y) {
        if (level(x) <= j && level(y) > j) cut = r.less(x, y);
      }
    }
    s.components += cut ? 1 : 0;
  }
  return s;
}

}  // namespace

TEST_CASE("the worked statistics record") {
  const auto x = seq({0, 1, 0, 1, 3, 1, 1, 2});
  const StatRecord expected{8, 2, 2, 4, 2, 1, QPolynomial({2, 3, 1, 1, 1}), QPolynomial({0, 0, 1, 0, 1})};
  CHECK(stats_of_sequence(x) == expected);
  CHECK(stats_of_perm(lambda_inv(x)) == expected);
  CHECK(stats_of_poset(poset_from_relations(fixtures::removal_poset())) == expected);
  CHECK(perm({3, 1, 7, 6, 4, 8, 2, 5}).inverse() == perm({2, 7, 1, 5, 8, 4, 3, 6}));
  CHECK(count_ascents(perm({2, 7, 1, 5, 8, 4, 3, 6}).entries()) == 4);
}

TEST_CASE("one-element statistics") {
  const StatRecord expected{1, 1, 0, 0, 1, 1, QPolynomial({1}), QPolynomial({1})};
  CHECK(stats_of_sequence(seq({0})) == expected);
  CHECK(stats_of_perm(perm({1})) == expected);
  CHECK_THROWS_AS(stats_of_perm(perm({3, 2, 5, 4, 1})), NotInR);
}

TEST_CASE("q-polynomials") {
  QPolynomial q;
  CHECK(q.coefficients().empty());
  q.add_term(3, 2);
  q.add_term(0);
  CHECK(q.coefficients() == std::vector<std::int64_t>{1, 0, 0, 2});
  CHECK(q.evaluate(2) == 17);
  q.add_term(3, -2);
  CHECK(q == QPolynomial({1}));
  CHECK(q.at(7) == 0);
}

TEST_CASE("components and direct sums") {
  CHECK(components(modseq({0, 2, 0, 1, 3, 3})) == std::vector<int>{4, 2});
  CHECK(direct_sum(modseq({0, 2, 0, 1}), modseq({0, 0})) == modseq({0, 2, 0, 1, 3, 3}));
  CHECK(components(perm({3, 1, 4, 2, 6, 5})) == std::vector<int>{4, 2});
  CHECK(direct_sum(perm({3, 1, 4, 2}), perm({2, 1})) == perm({3, 1, 4, 2, 6, 5}));
  CHECK(direct_sum(ModifiedAscentSequence{}, modseq({0, 1})) == modseq({0, 1}));
  CHECK(direct_sum(Permutation{}, perm({2, 1})) == perm({2, 1}));
  const auto single = poset_from_relations(RelationMatrix(1));
  CHECK(direct_sum(Poset{}, single) == single);
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
    }
    const auto chain = poset_from_relations(fixtures::relations(static_cast<std::size_t>(n), pairs));
    CHECK(components(chain) == std::vector<int>(static_cast<std::size_t>(n), 1));
    CHECK(components(Permutation::identity(static_cast<std::size_t>(n))).size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("component counts add under direct sums") {
  std::map<int, std::vector<AscentSequence>> by_size;
  for (int n = 1; n <= 6; ++n) by_size[n] = ascent_sequences(static_cast<std::size_t>(n));
  for (int na = 1; na <= 6; ++na) {
    for (int nb = 1; na + nb <= 7; ++nb) {
      for (const auto& a : by_size[na]) {
        for (const auto& b : by_size[nb]) {
          const auto m = direct_sum(hat(a), hat(b));
          CHECK(is_modified_ascent_sequence(m.entries()));
          CHECK(components(m).size() == components(hat(a)).size() + components(hat(b)).size());
          const auto pi = direct_sum(lambda_inv(a), lambda_inv(b));
          CHECK(in_R(pi));
          CHECK(components(pi).size() == components(lambda_inv(a)).size() + components(lambda_inv(b)).size());
          const auto p = direct_sum(psi_inv(a), psi_inv(b));
          CHECK_NOTHROW(poset_from_relations(poset_to_relations(p)));
          CHECK(components(p).size() == components(psi_inv(a)).size() + components(psi_inv(b)).size());
        }
      }
    }
  }
}

TEST_CASE("the statistics dictionary holds for every ascent sequence up to length 8") {
  for (int n = 1; n <= 8; ++n) {
    for_each_ascent_sequence(static_cast<std::size_t>(n), [&](const AscentSequence& x) {
      const auto s = stats_of_sequence(x);
      const auto p = psi_inv(x);
      CHECK(stats_of_perm(lambda_inv(x)) == s);
      CHECK(stats_of_poset(p) == s);
      CHECK(s.levels.evaluate(1) == n);
      CHECK(s.levels.evaluate(0) == s.minimal);
      CHECK(s.maximal_levels.evaluate(1) == s.maximal);
      if (n <= 6) CHECK(stats_from_relations(poset_to_relations(p)) == s);
    });
  }
}

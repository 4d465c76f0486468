#include <doctest.h>

#include "fishburn/bijections.hpp"
#include "fishburn/enumeration.hpp"
#include "fishburn/text.hpp"
#include "fixtures.hpp"

using namespace fishburn;

TEST_CASE("ascent sequence text") {
  const auto x = parse_sequence("[0,1,0,2]");
  CHECK(x.entries() == std::vector<int>{0, 1, 0, 2});
  CHECK(format_sequence(x) == "[0,1,0,2]");
  CHECK(parse_sequence(" [0, 1] ").entries() == std::vector<int>{0, 1});
  CHECK(format_sequence(parse_sequence("[]")) == "[]");
  CHECK_THROWS_AS(parse_sequence("0,1"), ParseError);
  CHECK_THROWS_AS(parse_sequence("[0,,1]"), ParseError);
  CHECK_THROWS_AS(parse_sequence("[0,x]"), ParseError);
  CHECK_THROWS_AS(parse_sequence("[0,2]"), NotAscentSequence);
  CHECK(format_modified(parse_modified("[0,3,0,1,4,1,1,2]")) == "[0,3,0,1,4,1,1,2]");
  CHECK_THROWS_AS(parse_modified("[0,1,0,1]"), NotModified);
}

TEST_CASE("permutation text") {
  CHECK(format_permutation(parse_permutation("3 1 7 6 4 8 2 5")) == "3 1 7 6 4 8 2 5");
  CHECK(parse_permutation("  2\t1 ").entries() == std::vector<int>{2, 1});
  CHECK(parse_permutation("").empty());
  CHECK_THROWS_AS(parse_permutation("1 1"), NotPermutation);
  CHECK_THROWS_AS(parse_permutation("1 a"), ParseError);
}

TEST_CASE("poset text") {
  const auto p = poset_from_relations(fixtures::chord_example_poset());
  CHECK(format_poset(p) == R"({"n":5,"relations":[[1,4],[1,5],[2,4],[2,5],[3,5],[4,5]]})");
  CHECK(parse_poset(format_poset(p)) == p);
  CHECK(parse_poset(R"({"relations":[],"n":2})").size() == 2);
  CHECK_THROWS_AS(parse_poset("{"), ParseError);
  CHECK_THROWS_AS(parse_poset(R"({"n":2})"), ParseError);
  CHECK_THROWS_AS(parse_poset(R"({"n":2,"relations":[[1,3]]})"), ParseError);
  CHECK_THROWS_AS(parse_poset(R"({"n":2,"relations":[[1]]})"), ParseError);
  CHECK_THROWS_AS(parse_poset(R"({"n":3,"relations":[[1,2],[2,3]]})"), NotPartialOrder);
  CHECK_THROWS_AS(parse_poset(R"({"n":4,"relations":[[1,2],[3,4]]})"), NotTwoPlusTwoFree);
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_poset(n, [&](const Poset& q) { CHECK(parse_poset(format_poset(q)) == q); });
  }
}

TEST_CASE("involution text") {
  const auto c = parse_involution("[(1,4),(2,5),(3,7),(6,8),(9,10)]");
  CHECK(c.partners() == fixtures::chord_example);
  CHECK(format_involution(c) == "[(1,4),(2,5),(3,7),(6,8),(9,10)]");
  CHECK(parse_involution("4 5 7 1 2 8 3 6 10 9") == c);
  CHECK(parse_involution("[(4,1),(5,2),(3,7),(6,8),(10,9)]") == c);
  CHECK(parse_involution("[ (1,2) ]").chords_count() == 1);
  CHECK(format_involution(parse_involution("[]")) == "[]");
  CHECK_THROWS_AS(parse_involution("[(1,2),(2,3)]"), NotInvolution);
  CHECK_THROWS_AS(parse_involution("[(1,5)]"), NotInvolution);
  CHECK_THROWS_AS(parse_involution("[(1,1)]"), HasFixedPoint);
  CHECK_THROWS_AS(parse_involution("[(1,2)(3,4)]"), ParseError);
  CHECK_THROWS_AS(parse_involution("[(1,2,3)]"), ParseError);
  CHECK_THROWS_AS(parse_involution("2 1 3"), NotInvolution);
}

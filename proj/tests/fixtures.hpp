#pragma once

// Worked examples. Posets only drawn as pictures were reconstructed by hand
// from their described construction; they are listed by strict relations.

#include <utility>
#include <vector>

#include "fishburn/objects.hpp"

namespace fixtures {

inline fishburn::RelationMatrix relations(std::size_t n, const std::vector<std::pair<int, int>>& pairs) {
  fishburn::RelationMatrix r(n);
  for (const auto& [a, b] : pairs) r.set_less(a, b);
  return r;
}

/// Downsets given per element; builds the relation x < y for x in D(y).
inline fishburn::RelationMatrix from_downsets(const std::vector<std::vector<int>>& down) {
  fishburn::RelationMatrix r(down.size());
  for (std::size_t y = 0; y < down.size(); ++y) {
    for (int x : down[y]) r.set_less(x, static_cast<int>(y) + 1);
  }
  return r;
}

// Elements a..h are 1..8.
inline fishburn::RelationMatrix labelled_levels_poset() {
  return from_downsets({
      {2, 3, 4, 6, 7, 8},  // a
      {},                  // b
      {6, 7, 8},           // c
      {6, 7, 8},           // d
      {8},                 // e
      {8},                 // f
      {8},                 // g
      {},                  // h
  });
}

/// Poset whose removal sequence gives (0,1,0,1,3,1,1,2); element i is the
/// i-th one added.
inline fishburn::RelationMatrix removal_poset() {
  return relations(8, {{1, 2}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {2, 5}, {3, 2},
                       {3, 5}, {3, 8}, {4, 5}, {6, 2}, {6, 5}, {7, 2}, {7, 5}});
}

/// Poset built by the additions 1,2,3,1,0,1,2.
inline fishburn::RelationMatrix addition_poset() {
  return from_downsets({
      {},
      {1, 6, 7},
      {1, 2, 6, 7},
      {1, 2, 3, 6, 7},
      {1, 6, 7},
      {},
      {1},
      {1, 6},
  });
}

inline const std::vector<int> chord_example{4, 5, 7, 1, 2, 8, 3, 6, 10, 9};

/// Interval order of chord_example, chords numbered by opener.
inline fishburn::RelationMatrix chord_example_poset() {
  return relations(5, {{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}, {4, 5}});
}

/// Product order on the points (i, pi_i) of pi = 41523.
inline fishburn::RelationMatrix dot_diagram_41523() {
  const std::vector<int> pi{4, 1, 5, 2, 3};
  fishburn::RelationMatrix r(5);
  for (int a = 1; a <= 5; ++a) {
    for (int b = 1; b <= 5; ++b) {
      if (a < b && pi[static_cast<std::size_t>(a - 1)] < pi[static_cast<std::size_t>(b - 1)]) r.set_less(a, b);
    }
  }
  return r;
}

}  // namespace fixtures

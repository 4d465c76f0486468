#pragma once

// The four object families and their validation: ascent sequences (plus the
// modified variant), permutations, unlabeled (2+2)-free posets stored through
// their chain of strict downsets, and fixed-point-free involutions.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fishburn/errors.hpp"

namespace fishburn {

/// Tag for constructors that skip validation. Only use it on values that are
/// valid by construction.
struct Trusted {
  explicit Trusted() = default;
};
inline constexpr Trusted trusted{};

/// Number of indices j with xs[j] < xs[j+1].
int count_ascents(std::span<const int> xs);

/// Ascent positions, 1-based: the j with xs[j] < xs[j+1].
std::vector<int> ascent_positions(std::span<const int> xs);

class AscentSequence {
 public:
  AscentSequence() = default;
  AscentSequence(std::vector<int> entries, Trusted) : entries_(std::move(entries)) {}

  const std::vector<int>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int ascents() const { return count_ascents(entries_); }

  friend auto operator<=>(const AscentSequence&, const AscentSequence&) = default;

 private:
  std::vector<int> entries_;
};

/// Throws NotAscentSequence naming the first (1-based) violating index.
AscentSequence validate_ascent_sequence(std::vector<int> entries);

bool is_ascent_sequence(std::span<const int> entries);

class ModifiedAscentSequence {
 public:
  ModifiedAscentSequence() = default;
  ModifiedAscentSequence(std::vector<int> entries, Trusted) : entries_(std::move(entries)) {}

  const std::vector<int>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }

  friend auto operator<=>(const ModifiedAscentSequence&, const ModifiedAscentSequence&) = default;

 private:
  std::vector<int> entries_;
};

/// Recursive characterization of modified ascent sequences: either the last
/// entry is at most its predecessor and the prefix is modified, or it is a
/// fresh value in (y_{n-1}, 1 + asc(prefix)] and the prefix with every entry
/// >= y_n decremented is modified. Independent of the hat map itself.
bool is_modified_ascent_sequence(std::span<const int> entries);

/// One-line permutation of {1..n}.
class Permutation {
 public:
  Permutation() = default;
  Permutation(std::vector<int> entries, Trusted) : entries_(std::move(entries)) {}

  const std::vector<int>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  /// 0-based access.
  int operator[](std::size_t i) const { return entries_[i]; }

  Permutation inverse() const;
  static Permutation identity(std::size_t n);

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

Permutation validate_permutation(std::vector<int> entries);

/// Direct test for membership in R_n: no ascent pi_i < pi_{i+1} with
/// pi_i - 1 to the right of it.
bool in_R(const Permutation& pi);

/// Lexicographically minimal (i, k), 1-based, with pi_i < pi_{i+1} and
/// pi_k = pi_i - 1 for k > i + 1.
std::optional<std::pair<int, int>> find_R_violation(const Permutation& pi);

using ElementSet = std::vector<bool>;

/// Strict order on elements 1..n. Interchange form for posets.
class RelationMatrix {
 public:
  RelationMatrix() = default;
  explicit RelationMatrix(std::size_t n) : n_(n), less_(n * n, false) {}

  std::size_t size() const noexcept { return n_; }
  /// Elements are 1-based.
  bool less(int a, int b) const { return less_[index(a, b)]; }
  void set_less(int a, int b, bool value = true) { less_[index(a, b)] = value; }

  /// Pairs (a, b) with a < b, lexicographically sorted.
  std::vector<std::pair<int, int>> pairs() const;

  RelationMatrix transposed() const;

  friend bool operator==(const RelationMatrix&, const RelationMatrix&) = default;

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a - 1) * n_ + static_cast<std::size_t>(b - 1);
  }

  std::size_t n_ = 0;
  std::vector<bool> less_;
};

/// A (2+2)-free poset on elements 1..n in level form: the strict downsets
/// form a chain D_0 = {} < D_1 < ... < D_k and element x sits at level i
/// iff its strict downset is D_i. Every level is occupied.
///
/// Equality is labeled equality. Use `isomorphic` (bijections.hpp) for
/// unlabeled comparison.
class Poset {
 public:
  /// The empty poset.
  Poset() = default;

  /// Validates the level/downset invariants; throws Error on violation.
  Poset(std::vector<int> levels, std::vector<ElementSet> downsets);

  std::size_t size() const noexcept { return levels_.size(); }
  /// Highest level k; -1 for the empty poset.
  int rank() const noexcept { return static_cast<int>(downsets_.size()) - 1; }
  /// Level of element x (1-based).
  int level(int x) const { return levels_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& levels() const noexcept { return levels_; }
  const ElementSet& downset(int level) const { return downsets_[static_cast<std::size_t>(level)]; }
  const std::vector<ElementSet>& downsets() const noexcept { return downsets_; }

  bool less(int a, int b) const;
  bool is_maximal(int x) const;
  /// Elements at level i, ascending.
  std::vector<int> level_members(int i) const;
  std::vector<std::size_t> level_sizes() const;
  /// Minimum level containing a maximal element; -1 when empty.
  int srank() const;
  int count_minimal() const;
  int count_maximal() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::vector<int> levels_;
  std::vector<ElementSet> downsets_;
};

/// Computes strict downsets, orders them by inclusion and assigns levels.
/// Throws NotPartialOrder or NotTwoPlusTwoFree. The witness {x, x', y, y'}
/// uses the lexicographically least incomparable pair (x, y) whose downset
/// differences are both nonempty, and the least x', y' in those differences.
Poset poset_from_relations(const RelationMatrix& rel);

RelationMatrix poset_to_relations(const Poset& p);

/// Fixed-point-free involution on {1..2n} as a partner array.
class ChordInvolution {
 public:
  ChordInvolution() = default;
  ChordInvolution(std::vector<int> partner, Trusted) : partner_(std::move(partner)) {}

  /// Number of points 2n.
  std::size_t points() const noexcept { return partner_.size(); }
  /// Number of chords n.
  std::size_t chords_count() const noexcept { return partner_.size() / 2; }
  /// 1-based.
  int partner(int i) const { return partner_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& partners() const noexcept { return partner_; }
  bool opens(int i) const { return partner(i) > i; }
  /// Chords (opener, closer), sorted by opener.
  std::vector<std::pair<int, int>> chords() const;
  /// Reflection across a vertical line: i -> 2n + 1 - i.
  ChordInvolution mirror() const;
  /// Conjugation by the transposition (i, i+1).
  ChordInvolution swap_neighbours(int i) const;

  friend auto operator<=>(const ChordInvolution&, const ChordInvolution&) = default;

 private:
  std::vector<int> partner_;
};

/// Throws NotInvolution (odd length, out-of-range values, pi(pi(i)) != i)
/// or HasFixedPoint.
ChordInvolution validate_involution(std::vector<int> partner);

/// Descent condition: pi_i > pi_{i+1} implies pi_i > i >= pi_{i+1}.
bool in_I2n(const ChordInvolution& c);

/// Opening runs have increasing partners and so do closing runs.
bool satisfies_run_monotonicity(const ChordInvolution& c);

/// First i (1-based) where the chords at i and i+1 are nested.
std::optional<int> find_neighbour_nesting(const ChordInvolution& c);

}  // namespace fishburn

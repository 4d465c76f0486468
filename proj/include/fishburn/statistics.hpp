#pragma once

// Statistics shared by the three representations, and the direct sum on
// modified ascent sequences, permutations and posets.

#include <cstdint>
#include <vector>

#include "fishburn/objects.hpp"

namespace fishburn {

/// Dense polynomial in q; coefficient i multiplies q^i. Trailing zeros are
/// trimmed, so equal polynomials compare equal.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<std::int64_t> coefficients);

  void add_term(std::size_t power, std::int64_t coefficient = 1);
  const std::vector<std::int64_t>& coefficients() const noexcept { return coefficients_; }
  std::int64_t at(std::size_t power) const;
  std::int64_t evaluate(std::int64_t q) const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void trim();
  std::vector<std::int64_t> coefficients_;
};

/// One row of the statistics dictionary. The same record is produced from
/// the ascent sequence, the permutation and the poset.
struct StatRecord {
  int size = 0;
  int minimal = 0;     ///< zeros(x) = lmin(pi) = min(P)
  int srank = 0;       ///< last(x) = b(pi) = srank(P)
  int rank = 0;        ///< asc(x) = asc(pi^-1) = rank(P)
  int maximal = 0;     ///< rmax(hat x) = rmax(pi) = max(P)
  int components = 0;  ///< comp(hat x) = comp(pi) = comp(P)
  QPolynomial levels;          ///< lambda(P) = chi(hat x) = delta(pi)
  QPolynomial maximal_levels;  ///< the same restricted to maxima

  friend bool operator==(const StatRecord&, const StatRecord&) = default;
};

StatRecord stats_of_sequence(const AscentSequence& x);
/// Throws NotInR.
StatRecord stats_of_perm(const Permutation& pi);
StatRecord stats_of_poset(const Poset& p);

/// Right-to-left maxima: entries with nothing strictly larger to their right.
std::vector<bool> right_to_left_maxima(const std::vector<int>& xs);
int left_to_right_minima(const Permutation& pi);

/// Sizes of the maximal direct-sum decomposition.
std::vector<int> components(const ModifiedAscentSequence& m);
std::vector<int> components(const Permutation& pi);
std::vector<int> components(const Poset& p);

/// x (+) y = x y' with y' = y + 1 + max(x).
ModifiedAscentSequence direct_sum(const ModifiedAscentSequence& a, const ModifiedAscentSequence& b);
/// pi (+) sigma = pi sigma' with sigma' = sigma + |pi|.
Permutation direct_sum(const Permutation& a, const Permutation& b);
/// Ordinal sum: every element of a below every element of b; b's elements
/// are relabelled |a| + 1 .. |a| + |b|.
Poset direct_sum(const Poset& a, const Poset& b);

}  // namespace fishburn

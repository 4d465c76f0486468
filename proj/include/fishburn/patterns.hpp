#pragma once

// Bivincular patterns (sigma, X, Y): occurrences of sigma whose positions are
// adjacent across every gap in X and whose values are adjacent across every
// gap in Y. Gap 0 and gap k refer to the borders of the text permutation.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fishburn/objects.hpp"

namespace fishburn {

struct BivincularPattern {
  Permutation sigma;
  std::set<int> X;  ///< position adjacencies, subset of [0, k]
  std::set<int> Y;  ///< value adjacencies, subset of [0, k]

  std::size_t size() const noexcept { return sigma.size(); }

  friend bool operator==(const BivincularPattern&, const BivincularPattern&) = default;
};

/// Throws Error when X or Y leaves [0, |sigma|].
BivincularPattern make_pattern(Permutation sigma, std::set<int> X, std::set<int> Y);

/// (231, {1}, {1}); its avoiders are R.
BivincularPattern r_pattern();

/// Occurrence positions (1-based, increasing) of the first occurrence found
/// in lexicographic order of position tuples.
std::optional<std::vector<int>> find_occurrence(const Permutation& pi, const BivincularPattern& p);

bool contains(const Permutation& pi, const BivincularPattern& p);

/// (sigma o tau, X_p delta Y_q, Y_p delta X_q). Throws LengthMismatch.
BivincularPattern compose(const BivincularPattern& p, const BivincularPattern& q);
/// (sigma^-1, Y, X).
BivincularPattern inverse(const BivincularPattern& p);
/// (sigma^r, k - X, Y).
BivincularPattern reverse(const BivincularPattern& p);
/// (sigma^c, X, k - Y).
BivincularPattern complement(const BivincularPattern& p);

Permutation reverse(const Permutation& pi);
Permutation complement(const Permutation& pi);

/// Every pattern of length k: k! * 4^(k+1) of them.
std::vector<BivincularPattern> all_patterns(std::size_t k);

/// "231|X={1}|Y={1}". Letters are concatenated digits when every letter is
/// a single digit, comma-separated otherwise.
std::string format_pattern(const BivincularPattern& p);
/// Inverse of format_pattern; throws ParseError.
BivincularPattern parse_pattern(std::string_view text);

/// Every 231 occurrence pi_i pi_j pi_k (pi_k < pi_i < pi_j) extends to an
/// occurrence pi_i pi_l pi_j pi_k pi_m of 31524 with i < l < j and k < m.
bool avoids_barred(const Permutation& pi);

/// hat(x) == x.
bool is_self_modified_by_hat(const AscentSequence& x);
/// Every entry either does not exceed its predecessor or is one more than
/// the running maximum.
bool is_self_modified_closed_form(const AscentSequence& x);
/// Computes both checks; throws std::logic_error if they disagree.
bool is_self_modified(const AscentSequence& x);

/// Number of right-to-left minima.
int right_to_left_minima(const Permutation& pi);

}  // namespace fishburn

#pragma once

// Canonical text forms. Formatting is byte-exact; parsing throws ParseError
// for malformed text and the family's validation error for invalid objects.

#include <string>
#include <string_view>
#include <vector>

#include "fishburn/objects.hpp"

namespace fishburn {

/// "[0,1,0,2]"; "[]" when empty.
std::string format_entries(const std::vector<int>& entries);
/// Parses "[a,b,...]". Whitespace around entries is tolerated.
std::vector<int> parse_entries(std::string_view text);

std::string format_sequence(const AscentSequence& x);
AscentSequence parse_sequence(std::string_view text);

std::string format_modified(const ModifiedAscentSequence& m);
ModifiedAscentSequence parse_modified(std::string_view text);

/// "3 1 7 6 4 8 2 5".
std::string format_permutation(const Permutation& pi);
Permutation parse_permutation(std::string_view text);

/// {"n":8,"relations":[[a,b],...]}: a < b, pairs sorted.
std::string format_poset(const Poset& p);
/// The relations must already form a strict order; no closure is taken.
Poset parse_poset(std::string_view text);

/// "[(1,4),(2,5),(3,7),(6,8),(9,10)]", chords sorted by opener.
std::string format_involution(const ChordInvolution& c);
/// Accepts the chord list above or one-line notation "4 5 7 1 2 8 3 6 10 9".
ChordInvolution parse_involution(std::string_view text);

}  // namespace fishburn

#pragma once

// Exhaustive enumeration of the four families. Every stream is in canonical
// order: lexicographic order of the associated ascent sequence.
//
// R_n and I_2n are produced by filtering all permutations of [n] and all
// fixed-point-free involutions of [2n]. Those oracles are factorial time and
// refuse sizes above their caps.

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "fishburn/objects.hpp"

namespace fishburn {

enum class Family { AscentSequences, Posets, RPermutations, Involutions };

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);

struct BruteForceCaps {
  int r_permutations = 9;
  int involutions = 6;

  /// Defaults, with FISHBURN_MAX_BRUTE_N overriding both caps when set.
  static BruteForceCaps from_environment();
};

void for_each_ascent_sequence(std::size_t n, const std::function<void(const AscentSequence&)>& visit);
std::vector<AscentSequence> ascent_sequences(std::size_t n);

/// Posets psi_inv(x) for every ascent sequence x of length n.
void for_each_poset(std::size_t n, const std::function<void(const Poset&)>& visit);

/// Lexicographic order on permutations of [n].
void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit);

/// All fixed-point-free involutions on 2n points, lexicographic in the
/// partner array.
void for_each_perfect_matching(std::size_t n, const std::function<void(const ChordInvolution&)>& visit);

/// R_n filtered from S_n, sorted by lambda. Throws BruteForceCapExceeded.
std::vector<Permutation> r_permutations(std::size_t n, const BruteForceCaps& caps = {});

/// I_2n filtered from all perfect matchings, sorted by psi(omega(.)).
/// Throws BruteForceCapExceeded.
std::vector<ChordInvolution> i_involutions(std::size_t n, const BruteForceCaps& caps = {});

/// Size of a family at n by enumeration.
std::size_t count_family(Family f, std::size_t n, const BruteForceCaps& caps = {});

}  // namespace fishburn

#pragma once

// Bijections between ascent sequences, R-permutations, (2+2)-free posets and
// involutions without neighbour nestings, plus the hat map.

#include <cstddef>
#include <vector>

#include "fishburn/objects.hpp"

namespace fishburn {

/// Active sites of a permutation in R. `gaps` holds the gap index (0 = before
/// the first entry, n = after the last) of each active site, left to right;
/// the site with label i is gaps[i].
struct ActiveSiteProfile {
  std::vector<int> gaps;
  /// Label of the site just left of the maximum entry.
  int b = 0;
  /// Number of active sites.
  int s = 0;
};

/// Throws NotInR.
ActiveSiteProfile active_sites(const Permutation& pi);

/// Deletion of the maximum, recording the label of the active site it
/// occupied. Throws NotInR (lexicographically least witness).
AscentSequence lambda(const Permutation& pi);

/// Reads the modified sequence off the active-site gaps of pi and undoes
/// the hat map. Agrees with `lambda`.
AscentSequence lambda_via_sites(const Permutation& pi);

/// Insertion of n into active site x_n, step by step.
Permutation lambda_inv(const AscentSequence& x);

/// Sorts the pairs (hat(x)_i, i) by first coordinate ascending, ties by i
/// descending, and reads the second coordinates.
Permutation lambda_inv_by_sorting(const AscentSequence& x);

ModifiedAscentSequence hat(const AscentSequence& x);

/// Throws NotModified unless hat(result) == m.
AscentSequence hat_inv(const ModifiedAscentSequence& m);

/// Validates through hat_inv; throws NotModified.
ModifiedAscentSequence validate_modified_ascent_sequence(std::vector<int> entries);

/// canonical[x - 1] is the canonical label of element x: the element
/// removed first gets n, the next n - 1, and so on.
struct CanonicalLabelling {
  std::vector<int> canonical;
  /// element[c - 1] is the element whose canonical label is c.
  std::vector<int> element;
};

/// Repeated removal: Rem1 takes the maximal element of level srank with the
/// largest label, Rem2 drops a lone top level, Rem3 detaches
/// D_{i+1} \ D_i before dropping a lone level i. Requires n >= 1.
AscentSequence psi(const Poset& p);

CanonicalLabelling canonical_labelling(const Poset& p);

/// Builds the poset by Add1/Add2/Add3 insertions; element i is the i-th
/// inserted one. Requires n >= 1.
Poset psi_inv(const AscentSequence& x);

/// Unlabeled equality, decided through psi.
bool isomorphic(const Poset& a, const Poset& b);

/// Relabels p by a permutation: element x becomes relabel[x - 1].
Poset relabel(const Poset& p, const std::vector<int>& relabel);

/// Levels 0..rank concatenated, each read in decreasing canonical label.
Permutation poset_to_perm(const Poset& p);

/// Order reversal. Keeps labels.
Poset dual(const Poset& p);

/// Interval order of the chords [opener, closer]; chord i (by opener) is
/// element i. Defined for every fixed-point-free involution.
Poset omega(const ChordInvolution& c);

/// The unique involution without neighbour nestings with omega(result)
/// isomorphic to p.
ChordInvolution omega_inv(const Poset& p);

/// Conjugates by (i, i+1) at the leftmost neighbour nesting until none is
/// left. Returns the number of swaps through `steps` when non-null.
ChordInvolution remove_neighbour_nestings(const ChordInvolution& c, std::size_t* steps = nullptr);

/// Number of crossing chord pairs.
std::size_t count_crossings(const ChordInvolution& c);

}  // namespace fishburn

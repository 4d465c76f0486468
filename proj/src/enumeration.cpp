#include "fishburn/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "fishburn/bijections.hpp"

namespace fishburn {

namespace {

void extend(std::vector<int>& prefix, int asc, std::size_t n,
            const std::function<void(const AscentSequence&)>& visit) {
  if (prefix.size() == n) {
    visit(AscentSequence(prefix, trusted));
    return;
  }
  const int last = prefix.back();
  for (int v = 0; v <= asc + 1; ++v) {
    prefix.push_back(v);
    extend(prefix, v > last ? asc + 1 : asc, n, visit);
    prefix.pop_back();
  }
}

void match_from(std::vector<int>& partner, std::size_t first_free,
                const std::function<void(const ChordInvolution&)>& visit) {
  while (first_free < partner.size() && partner[first_free] != 0) ++first_free;
  if (first_free == partner.size()) {
    visit(ChordInvolution(partner, trusted));
    return;
  }
  for (std::size_t j = first_free + 1; j < partner.size(); ++j) {
    if (partner[j] != 0) continue;
    partner[first_free] = static_cast<int>(j) + 1;
    partner[j] = static_cast<int>(first_free) + 1;
    match_from(partner, first_free + 1, visit);
    partner[first_free] = 0;
    partner[j] = 0;
  }
}

void check_cap(std::size_t n, int cap) {
  if (static_cast<long long>(n) > cap) throw BruteForceCapExceeded(static_cast<int>(n), cap);
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  if (name == "ascseq") return Family::AscentSequences;
  if (name == "posets") return Family::Posets;
  if (name == "perms" || name == "perms_R") return Family::RPermutations;
  if (name == "involutions" || name == "involutions_I") return Family::Involutions;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::AscentSequences: return "ascseq";
    case Family::Posets: return "posets";
    case Family::RPermutations: return "perms";
    case Family::Involutions: return "involutions";
  }
  return "?";
}

BruteForceCaps BruteForceCaps::from_environment() {
  BruteForceCaps caps;
  if (const char* env = std::getenv("FISHBURN_MAX_BRUTE_N"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && v >= 0) {
      caps.r_permutations = static_cast<int>(v);
      caps.involutions = static_cast<int>(v);
    }
  }
  return caps;
}

void for_each_ascent_sequence(std::size_t n, const std::function<void(const AscentSequence&)>& visit) {
  if (n == 0) {
    visit(AscentSequence{});
    return;
  }
  std::vector<int> prefix{0};
  prefix.reserve(n);
  extend(prefix, 0, n, visit);
}

std::vector<AscentSequence> ascent_sequences(std::size_t n) {
  std::vector<AscentSequence> out;
  for_each_ascent_sequence(n, [&](const AscentSequence& x) { out.push_back(x); });
  return out;
}

void for_each_poset(std::size_t n, const std::function<void(const Poset&)>& visit) {
  for_each_ascent_sequence(n, [&](const AscentSequence& x) { visit(psi_inv(x)); });
}

void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<int>(i) + 1;
  do {
    visit(Permutation(e, trusted));
  } while (std::next_permutation(e.begin(), e.end()));
}

void for_each_perfect_matching(std::size_t n, const std::function<void(const ChordInvolution&)>& visit) {
  std::vector<int> partner(2 * n, 0);
  match_from(partner, 0, visit);
}

std::vector<Permutation> r_permutations(std::size_t n, const BruteForceCaps& caps) {
  check_cap(n, caps.r_permutations);
  std::vector<std::pair<AscentSequence, Permutation>> keyed;
  for_each_permutation(n, [&](const Permutation& pi) {
    if (in_R(pi)) keyed.emplace_back(lambda(pi), pi);
  });
  std::sort(keyed.begin(), keyed.end());
  std::vector<Permutation> out;
  out.reserve(keyed.size());
  for (auto& [key, pi] : keyed) out.push_back(std::move(pi));
  return out;
}

std::vector<ChordInvolution> i_involutions(std::size_t n, const BruteForceCaps& caps) {
  check_cap(n, caps.involutions);
  std::vector<std::pair<AscentSequence, ChordInvolution>> keyed;
  for_each_perfect_matching(n, [&](const ChordInvolution& c) {
    if (in_I2n(c)) keyed.emplace_back(n == 0 ? AscentSequence{} : psi(omega(c)), c);
  });
  std::sort(keyed.begin(), keyed.end());
  std::vector<ChordInvolution> out;
  out.reserve(keyed.size());
  for (auto& [key, c] : keyed) out.push_back(std::move(c));
  return out;
}

std::size_t count_family(Family f, std::size_t n, const BruteForceCaps& caps) {
  std::size_t count = 0;
  switch (f) {
    case Family::AscentSequences:
      for_each_ascent_sequence(n, [&](const AscentSequence&) { ++count; });
      return count;
    case Family::Posets:
      for_each_poset(n, [&](const Poset&) { ++count; });
      return count;
    case Family::RPermutations:
      check_cap(n, caps.r_permutations);
      for_each_permutation(n, [&](const Permutation& pi) { count += in_R(pi) ? 1 : 0; });
      return count;
    case Family::Involutions:
      check_cap(n, caps.involutions);
      for_each_perfect_matching(n, [&](const ChordInvolution& c) { count += in_I2n(c) ? 1 : 0; });
      return count;
  }
  return count;
}

}  // namespace fishburn

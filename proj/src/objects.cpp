#include "fishburn/objects.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace fishburn {

int count_ascents(std::span<const int> xs) {
  int a = 0;
  for (std::size_t j = 1; j < xs.size(); ++j) {
    if (xs[j - 1] < xs[j]) ++a;
  }
  return a;
}

std::vector<int> ascent_positions(std::span<const int> xs) {
  std::vector<int> out;
  for (std::size_t j = 1; j < xs.size(); ++j) {
    if (xs[j - 1] < xs[j]) out.push_back(static_cast<int>(j));
  }
  return out;
}

namespace {

// 1-based index of the first violation, 0 if none.
std::size_t first_ascent_violation(std::span<const int> xs) {
  int asc = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const int bound = i == 0 ? 0 : 1 + asc;
    if (xs[i] < 0 || xs[i] > bound) return i + 1;
    if (i > 0 && xs[i - 1] < xs[i]) ++asc;
  }
  return 0;
}

bool is_subset(const ElementSet& a, const ElementSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

std::size_t cardinality(const ElementSet& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), true));
}

int least_member_of_difference(const ElementSet& a, const ElementSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return static_cast<int>(i) + 1;
  }
  return 0;
}

}  // namespace

AscentSequence validate_ascent_sequence(std::vector<int> entries) {
  if (const auto bad = first_ascent_violation(entries); bad != 0) throw NotAscentSequence(bad);
  return AscentSequence(std::move(entries), trusted);
}

bool is_ascent_sequence(std::span<const int> entries) {
  return first_ascent_violation(entries) == 0;
}

bool is_modified_ascent_sequence(std::span<const int> y) {
  const std::size_t n = y.size();
  if (n == 0) return true;
  if (n == 1) return y[0] == 0;
  if (y[n - 1] < 0) return false;
  const auto prefix = y.first(n - 1);
  if (y[n - 1] <= y[n - 2]) return is_modified_ascent_sequence(prefix);
  if (y[n - 1] > 1 + count_ascents(prefix)) return false;
  if (std::find(prefix.begin(), prefix.end(), y[n - 1]) != prefix.end()) return false;
  std::vector<int> reduced(prefix.begin(), prefix.end());
  for (int& v : reduced) {
    if (v >= y[n - 1]) --v;
  }
  return is_modified_ascent_sequence(reduced);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    inv[static_cast<std::size_t>(entries_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv), trusted);
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<int>(i) + 1;
  return Permutation(std::move(e), trusted);
}

Permutation validate_permutation(std::vector<int> entries) {
  const auto n = entries.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : entries) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw NotPermutation("value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) throw NotPermutation("repeated value " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(entries), trusted);
}

std::optional<std::pair<int, int>> find_R_violation(const Permutation& pi) {
  const auto n = pi.size();
  std::vector<std::size_t> pos(n + 1);
  for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(pi[i])] = i;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (pi[i] < pi[i + 1] && pi[i] > 1) {
      const auto k = pos[static_cast<std::size_t>(pi[i] - 1)];
      if (k > i + 1) return std::pair{static_cast<int>(i) + 1, static_cast<int>(k) + 1};
    }
  }
  return std::nullopt;
}

bool in_R(const Permutation& pi) { return !find_R_violation(pi).has_value(); }

std::vector<std::pair<int, int>> RelationMatrix::pairs() const {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(n_);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (less(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

RelationMatrix RelationMatrix::transposed() const {
  RelationMatrix t(n_);
  const int n = static_cast<int>(n_);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) t.set_less(a, b, less(b, a));
  }
  return t;
}

Poset::Poset(std::vector<int> levels, std::vector<ElementSet> downsets)
    : levels_(std::move(levels)), downsets_(std::move(downsets)) {
  const auto n = levels_.size();
  if (n == 0) {
    if (!downsets_.empty()) throw Error("invalid poset: downsets given for empty poset");
    return;
  }
  if (downsets_.empty()) throw Error("invalid poset: missing D_0");
  const int k = rank();
  for (const auto& d : downsets_) {
    if (d.size() != n) throw Error("invalid poset: downset of wrong width");
  }
  if (cardinality(downsets_[0]) != 0) throw Error("invalid poset: D_0 is not empty");
  for (std::size_t i = 1; i < downsets_.size(); ++i) {
    if (!is_subset(downsets_[i - 1], downsets_[i]) ||
        cardinality(downsets_[i - 1]) == cardinality(downsets_[i])) {
      throw Error("invalid poset: downset chain not strictly increasing at level " + std::to_string(i));
    }
  }
  std::vector<bool> occupied(static_cast<std::size_t>(k) + 1, false);
  for (int l : levels_) {
    if (l < 0 || l > k) throw Error("invalid poset: level out of range");
    occupied[static_cast<std::size_t>(l)] = true;
  }
  if (std::find(occupied.begin(), occupied.end(), false) != occupied.end()) {
    throw Error("invalid poset: empty level");
  }
  for (int i = 0; i <= k; ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      if (downsets_[static_cast<std::size_t>(i)][x] && levels_[x] >= i) {
        throw Error("invalid poset: element " + std::to_string(x + 1) + " lies in D_" +
                    std::to_string(i) + " but not below level " + std::to_string(i));
      }
    }
  }
}

bool Poset::less(int a, int b) const {
  return downsets_[static_cast<std::size_t>(level(b))][static_cast<std::size_t>(a - 1)];
}

bool Poset::is_maximal(int x) const {
  // x is below something iff it lies in the top downset.
  return !downsets_.back()[static_cast<std::size_t>(x - 1)];
}

std::vector<int> Poset::level_members(int i) const {
  std::vector<int> out;
  for (std::size_t x = 0; x < levels_.size(); ++x) {
    if (levels_[x] == i) out.push_back(static_cast<int>(x) + 1);
  }
  return out;
}

std::vector<std::size_t> Poset::level_sizes() const {
  std::vector<std::size_t> sizes(downsets_.size(), 0);
  for (int l : levels_) ++sizes[static_cast<std::size_t>(l)];
  return sizes;
}

int Poset::srank() const {
  int best = -1;
  for (std::size_t x = 0; x < levels_.size(); ++x) {
    if (is_maximal(static_cast<int>(x) + 1) && (best < 0 || levels_[x] < best)) best = levels_[x];
  }
  return best;
}

int Poset::count_minimal() const {
  return static_cast<int>(std::count(levels_.begin(), levels_.end(), 0));
}

int Poset::count_maximal() const {
  if (levels_.empty()) return 0;
  return static_cast<int>(levels_.size() - cardinality(downsets_.back()));
}

Poset poset_from_relations(const RelationMatrix& rel) {
  const int n = static_cast<int>(rel.size());
  for (int a = 1; a <= n; ++a) {
    if (rel.less(a, a)) throw NotPartialOrder("element " + std::to_string(a) + " is below itself");
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (!rel.less(a, b)) continue;
      for (int c = 1; c <= n; ++c) {
        if (rel.less(b, c) && !rel.less(a, c)) {
          throw NotPartialOrder("missing " + std::to_string(a) + "<" + std::to_string(c) +
                                " implied by " + std::to_string(a) + "<" + std::to_string(b) + "<" +
                                std::to_string(c));
        }
      }
    }
  }

  std::vector<ElementSet> down(static_cast<std::size_t>(n), ElementSet(static_cast<std::size_t>(n), false));
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (rel.less(a, b)) down[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = true;
    }
  }

  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      const auto& dx = down[static_cast<std::size_t>(x - 1)];
      const auto& dy = down[static_cast<std::size_t>(y - 1)];
      if (!is_subset(dx, dy) && !is_subset(dy, dx)) {
        throw NotTwoPlusTwoFree({x, least_member_of_difference(dx, dy), y, least_member_of_difference(dy, dx)});
      }
    }
  }

  // Downsets form a chain, so cardinality orders them.
  std::map<std::size_t, ElementSet> by_size;
  for (const auto& d : down) by_size.emplace(cardinality(d), d);
  std::vector<ElementSet> chain;
  std::map<std::size_t, int> level_of_size;
  for (auto& [size, d] : by_size) {
    level_of_size[size] = static_cast<int>(chain.size());
    chain.push_back(d);
  }
  std::vector<int> levels(static_cast<std::size_t>(n));
  for (std::size_t x = 0; x < levels.size(); ++x) levels[x] = level_of_size[cardinality(down[x])];
  return Poset(std::move(levels), std::move(chain));
}

RelationMatrix poset_to_relations(const Poset& p) {
  const int n = static_cast<int>(p.size());
  RelationMatrix rel(p.size());
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) rel.set_less(a, b, p.less(a, b));
  }
  return rel;
}

std::vector<std::pair<int, int>> ChordInvolution::chords() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= static_cast<int>(points()); ++i) {
    if (opens(i)) out.emplace_back(i, partner(i));
  }
  return out;
}

ChordInvolution ChordInvolution::mirror() const {
  const int m = static_cast<int>(points());
  std::vector<int> p(partner_.size());
  for (int i = 1; i <= m; ++i) p[static_cast<std::size_t>(m - i)] = m + 1 - partner(i);
  return ChordInvolution(std::move(p), trusted);
}

ChordInvolution ChordInvolution::swap_neighbours(int i) const {
  const auto s = [i](int v) { return v == i ? i + 1 : v == i + 1 ? i : v; };
  std::vector<int> p(partner_.size());
  for (int j = 1; j <= static_cast<int>(points()); ++j) p[static_cast<std::size_t>(s(j) - 1)] = s(partner(j));
  return ChordInvolution(std::move(p), trusted);
}

ChordInvolution validate_involution(std::vector<int> partner) {
  const int m = static_cast<int>(partner.size());
  if (m % 2 != 0) throw NotInvolution("odd number of points " + std::to_string(m));
  for (int i = 1; i <= m; ++i) {
    const int p = partner[static_cast<std::size_t>(i - 1)];
    if (p < 1 || p > m) throw NotInvolution("value " + std::to_string(p) + " out of range");
  }
  for (int i = 1; i <= m; ++i) {
    const int p = partner[static_cast<std::size_t>(i - 1)];
    if (partner[static_cast<std::size_t>(p - 1)] != i) {
      throw NotInvolution("pi(pi(" + std::to_string(i) + ")) != " + std::to_string(i));
    }
  }
  for (int i = 1; i <= m; ++i) {
    if (partner[static_cast<std::size_t>(i - 1)] == i) throw HasFixedPoint(i);
  }
  return ChordInvolution(std::move(partner), trusted);
}

bool in_I2n(const ChordInvolution& c) {
  const int m = static_cast<int>(c.points());
  for (int i = 1; i < m; ++i) {
    const int a = c.partner(i);
    const int b = c.partner(i + 1);
    if (a > b && !(a > i && i >= b)) return false;
  }
  return true;
}

bool satisfies_run_monotonicity(const ChordInvolution& c) {
  const int m = static_cast<int>(c.points());
  for (int i = 1; i < m; ++i) {
    if (c.opens(i) == c.opens(i + 1) && c.partner(i) > c.partner(i + 1)) return false;
  }
  return true;
}

std::optional<int> find_neighbour_nesting(const ChordInvolution& c) {
  const int m = static_cast<int>(c.points());
  for (int i = 1; i < m; ++i) {
    const int a = c.partner(i);
    const int b = c.partner(i + 1);
    // Two openers: (i, a) encloses (i+1, b) when b < a.
    if (a > i + 1 && b > i + 1 && b < a) return i;
    // Two closers: (b, i+1) encloses (a, i) when b < a.
    if (a < i && b < i && b < a) return i;
  }
  return std::nullopt;
}

}  // namespace fishburn

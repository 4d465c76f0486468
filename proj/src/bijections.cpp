#include "fishburn/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace fishburn {

namespace {

// Active gaps of a one-line word that is known to lie in R.
std::vector<int> active_gaps(const std::vector<int>& word) {
  const auto n = word.size();
  std::vector<std::size_t> pos(n + 1);
  for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(word[i])] = i;
  std::vector<int> gaps{0};
  for (std::size_t g = 1; g < n; ++g) {
    const int v = word[g - 1];
    if (v == 1 || pos[static_cast<std::size_t>(v - 1)] < g - 1) gaps.push_back(static_cast<int>(g));
  }
  if (n > 0) gaps.push_back(static_cast<int>(n));
  return gaps;
}

void require_R(const Permutation& pi) {
  if (const auto bad = find_R_violation(pi)) throw NotInR(bad->first, bad->second);
}

// Mutable level form used by the removal and addition operations.
struct WorkingPoset {
  std::vector<bool> alive;
  std::vector<int> level;
  std::vector<ElementSet> chain;

  int rank() const { return static_cast<int>(chain.size()) - 1; }

  bool maximal(std::size_t x) const { return alive[x] && !chain.back()[x]; }

  int srank() const {
    int best = -1;
    for (std::size_t x = 0; x < alive.size(); ++x) {
      if (maximal(x) && (best < 0 || level[x] < best)) best = level[x];
    }
    return best;
  }

  std::size_t level_count(int i) const {
    std::size_t c = 0;
    for (std::size_t x = 0; x < alive.size(); ++x) {
      if (alive[x] && level[x] == i) ++c;
    }
    return c;
  }
};

WorkingPoset working_copy(const Poset& p) {
  WorkingPoset w;
  w.alive.assign(p.size(), true);
  w.level = p.levels();
  w.chain = p.downsets();
  return w;
}

struct Removal {
  std::size_t element;
  int site;
};

// One application of Rem1/Rem2/Rem3; checks the rank law of the removal.
Removal remove_one(WorkingPoset& w) {
  const int i = w.srank();
  const int rank_before = w.rank();
  std::size_t victim = w.alive.size();
  for (std::size_t x = w.alive.size(); x-- > 0;) {
    if (w.maximal(x) && w.level[x] == i) {
      victim = x;
      break;
    }
  }
  if (w.level_count(i) > 1) {
    w.alive[victim] = false;
  } else if (i == w.rank()) {
    w.alive[victim] = false;
    w.chain.pop_back();
  } else {
    const auto ui = static_cast<std::size_t>(i);
    ElementSet detached(w.alive.size(), false);
    for (std::size_t x = 0; x < detached.size(); ++x) detached[x] = w.chain[ui + 1][x] && !w.chain[ui][x];
    for (std::size_t j = ui + 1; j < w.chain.size(); ++j) {
      for (std::size_t x = 0; x < detached.size(); ++x) {
        if (detached[x]) w.chain[j][x] = false;
      }
    }
    w.chain.erase(w.chain.begin() + static_cast<std::ptrdiff_t>(ui) + 1);
    w.alive[victim] = false;
    for (std::size_t x = 0; x < w.alive.size(); ++x) {
      if (w.alive[x] && w.level[x] > i) --w.level[x];
    }
  }
  const int expected = i <= w.srank() ? rank_before : rank_before - 1;
  if (w.rank() != expected) throw std::logic_error("removal broke the rank law");
  return {victim, i};
}

// One application of Add1/Add2/Add3 for a new element `fresh`; checks the
// srank and rank law of the addition.
void add_one(WorkingPoset& w, std::size_t fresh, int i) {
  const int s = w.srank();
  const int k = w.rank();
  const auto ui = static_cast<std::size_t>(i);
  if (i <= s) {
    w.level[fresh] = i;
  } else if (i == k + 1) {
    ElementSet everything(w.alive.size(), false);
    for (std::size_t x = 0; x < everything.size(); ++x) everything[x] = w.alive[x];
    w.chain.push_back(std::move(everything));
    w.level[fresh] = i;
  } else {
    ElementSet lifted(w.alive.size(), false);
    for (std::size_t x = 0; x < lifted.size(); ++x) lifted[x] = w.maximal(x) && w.level[x] < i;
    std::vector<ElementSet> chain(w.chain.begin(), w.chain.begin() + static_cast<std::ptrdiff_t>(ui) + 1);
    for (std::size_t j = ui; j < w.chain.size(); ++j) {
      ElementSet d = w.chain[j];
      for (std::size_t x = 0; x < d.size(); ++x) d[x] = d[x] || lifted[x];
      chain.push_back(std::move(d));
    }
    w.chain = std::move(chain);
    for (std::size_t x = 0; x < w.alive.size(); ++x) {
      if (w.alive[x] && w.level[x] >= i) ++w.level[x];
    }
    w.level[fresh] = i;
  }
  w.alive[fresh] = true;
  if (w.srank() != i || w.rank() != (i <= s ? k : k + 1)) {
    throw std::logic_error("addition broke the srank/rank law");
  }
}

std::pair<AscentSequence, CanonicalLabelling> remove_all(const Poset& p) {
  const auto n = p.size();
  if (n == 0) return {AscentSequence{}, CanonicalLabelling{}};
  WorkingPoset w = working_copy(p);
  std::vector<int> x(n, 0);
  CanonicalLabelling labels{std::vector<int>(n, 0), std::vector<int>(n, 0)};
  for (std::size_t remaining = n; remaining > 1; --remaining) {
    const auto [element, site] = remove_one(w);
    x[remaining - 1] = site;
    labels.canonical[element] = static_cast<int>(remaining);
    labels.element[remaining - 1] = static_cast<int>(element) + 1;
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (w.alive[e]) {
      labels.canonical[e] = 1;
      labels.element[0] = static_cast<int>(e) + 1;
    }
  }
  return {AscentSequence(std::move(x), trusted), std::move(labels)};
}

}  // namespace

ActiveSiteProfile active_sites(const Permutation& pi) {
  require_R(pi);
  ActiveSiteProfile profile;
  profile.gaps = active_gaps(pi.entries());
  profile.s = static_cast<int>(profile.gaps.size());
  const auto& e = pi.entries();
  if (!e.empty()) {
    const auto max_pos = static_cast<int>(std::max_element(e.begin(), e.end()) - e.begin());
    const auto it = std::find(profile.gaps.begin(), profile.gaps.end(), max_pos);
    profile.b = static_cast<int>(it - profile.gaps.begin());
  }
  return profile;
}

AscentSequence lambda(const Permutation& pi) {
  require_R(pi);
  const auto n = pi.size();
  std::vector<int> x(n, 0);
  std::vector<int> word = pi.entries();
  for (auto m = static_cast<int>(n); m >= 2; --m) {
    const auto it = std::find(word.begin(), word.end(), m);
    const auto gap = static_cast<int>(it - word.begin());
    word.erase(it);
    const auto gaps = active_gaps(word);
    const auto site = std::find(gaps.begin(), gaps.end(), gap);
    if (site == gaps.end()) throw std::logic_error("maximum sits in an inactive site");
    x[static_cast<std::size_t>(m - 1)] = static_cast<int>(site - gaps.begin());
  }
  return AscentSequence(std::move(x), trusted);
}

AscentSequence lambda_via_sites(const Permutation& pi) {
  const auto profile = active_sites(pi);
  std::vector<int> modified(pi.size(), 0);
  for (std::size_t label = 0; label + 1 < profile.gaps.size(); ++label) {
    for (int g = profile.gaps[label]; g < profile.gaps[label + 1]; ++g) {
      modified[static_cast<std::size_t>(pi[static_cast<std::size_t>(g)] - 1)] = static_cast<int>(label);
    }
  }
  return hat_inv(ModifiedAscentSequence(std::move(modified), trusted));
}

Permutation lambda_inv(const AscentSequence& x) {
  std::vector<int> word;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i == 0) {
      word.push_back(1);
      continue;
    }
    const auto gaps = active_gaps(word);
    word.insert(word.begin() + gaps[static_cast<std::size_t>(x[i])], static_cast<int>(i) + 1);
  }
  return Permutation(std::move(word), trusted);
}

Permutation lambda_inv_by_sorting(const AscentSequence& x) {
  const auto m = hat(x);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < m.size(); ++i) pairs.emplace_back(m[i], -(static_cast<int>(i) + 1));
  std::sort(pairs.begin(), pairs.end());
  std::vector<int> word;
  for (const auto& [top, bottom] : pairs) word.push_back(-bottom);
  return Permutation(std::move(word), trusted);
}

ModifiedAscentSequence hat(const AscentSequence& x) {
  std::vector<int> y = x.entries();
  for (int a : ascent_positions(x.entries())) {
    const int pivot = y[static_cast<std::size_t>(a)];
    for (int j = 0; j < a - 1; ++j) {
      if (y[static_cast<std::size_t>(j)] >= pivot) ++y[static_cast<std::size_t>(j)];
    }
  }
  return ModifiedAscentSequence(std::move(y), trusted);
}

AscentSequence hat_inv(const ModifiedAscentSequence& m) {
  std::vector<int> y = m.entries();
  const auto asc = ascent_positions(m.entries());
  for (auto it = asc.rbegin(); it != asc.rend(); ++it) {
    const int a = *it;
    const int pivot = y[static_cast<std::size_t>(a)];
    for (int j = 0; j < a - 1; ++j) {
      if (y[static_cast<std::size_t>(j)] > pivot) --y[static_cast<std::size_t>(j)];
    }
  }
  if (!is_ascent_sequence(y)) throw NotModified();
  AscentSequence x(std::move(y), trusted);
  if (hat(x) != m) throw NotModified();
  return x;
}

ModifiedAscentSequence validate_modified_ascent_sequence(std::vector<int> entries) {
  ModifiedAscentSequence m(std::move(entries), trusted);
  (void)hat_inv(m);
  return m;
}

AscentSequence psi(const Poset& p) { return remove_all(p).first; }

CanonicalLabelling canonical_labelling(const Poset& p) { return remove_all(p).second; }

Poset psi_inv(const AscentSequence& x) {
  const auto n = x.size();
  if (n == 0) return Poset{};
  WorkingPoset w;
  w.alive.assign(n, false);
  w.level.assign(n, 0);
  w.alive[0] = true;
  w.chain.assign(1, ElementSet(n, false));
  for (std::size_t m = 1; m < n; ++m) add_one(w, m, x[m]);
  return Poset(std::move(w.level), std::move(w.chain));
}

bool isomorphic(const Poset& a, const Poset& b) {
  return a.size() == b.size() && psi(a) == psi(b);
}

Poset relabel(const Poset& p, const std::vector<int>& relabel) {
  const auto n = p.size();
  std::vector<int> levels(n);
  std::vector<ElementSet> chain(p.downsets().size(), ElementSet(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    const auto y = static_cast<std::size_t>(relabel[x] - 1);
    levels[y] = p.levels()[x];
    for (std::size_t j = 0; j < chain.size(); ++j) chain[j][y] = p.downsets()[j][x];
  }
  return Poset(std::move(levels), std::move(chain));
}

Permutation poset_to_perm(const Poset& p) {
  const auto labels = canonical_labelling(p);
  std::vector<int> word;
  for (int i = 0; i <= p.rank(); ++i) {
    std::vector<int> block;
    for (int x : p.level_members(i)) block.push_back(labels.canonical[static_cast<std::size_t>(x - 1)]);
    std::sort(block.rbegin(), block.rend());
    word.insert(word.end(), block.begin(), block.end());
  }
  return Permutation(std::move(word), trusted);
}

Poset dual(const Poset& p) { return poset_from_relations(poset_to_relations(p).transposed()); }

Poset omega(const ChordInvolution& c) {
  const auto chords = c.chords();
  RelationMatrix rel(chords.size());
  for (std::size_t a = 0; a < chords.size(); ++a) {
    for (std::size_t b = 0; b < chords.size(); ++b) {
      if (chords[a].second < chords[b].first) rel.set_less(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
    }
  }
  return poset_from_relations(rel);
}

ChordInvolution omega_inv(const Poset& p) {
  const auto n = p.size();
  if (n == 0) return ChordInvolution{};
  const Poset d = dual(p);
  const int k = p.rank();
  if (d.rank() != k) throw std::logic_error("dual changed the rank");
  const auto uk = static_cast<std::size_t>(k);

  // pair_count[i][j]: elements at level i in p and level j in the dual.
  std::vector<std::vector<std::size_t>> pair_count(uk + 1, std::vector<std::size_t>(uk + 1, 0));
  for (int x = 1; x <= static_cast<int>(n); ++x) {
    ++pair_count[static_cast<std::size_t>(p.level(x))][static_cast<std::size_t>(d.level(x))];
  }
  const auto up = p.level_sizes();
  const auto down = d.level_sizes();

  // Word o^{m_0} c^{n_k} o^{m_1} c^{n_{k-1}} ... o^{m_k} c^{n_0}.
  std::vector<std::vector<int>> openers(uk + 1);
  std::vector<std::vector<int>> closers(uk + 1);  // by dual level
  int position = 1;
  for (std::size_t r = 0; r <= uk; ++r) {
    for (std::size_t t = 0; t < up[r]; ++t) openers[r].push_back(position++);
    for (std::size_t t = 0; t < down[uk - r]; ++t) closers[uk - r].push_back(position++);
  }

  std::vector<int> partner(2 * n, 0);
  std::vector<std::size_t> next_closer(uk + 1, 0);
  for (std::size_t i = 0; i <= uk; ++i) {
    std::size_t t = 0;
    for (std::size_t j = uk + 1; j-- > 0;) {
      for (std::size_t c = 0; c < pair_count[i][j]; ++c, ++t) {
        const int open = openers[i][t];
        const int close = closers[j][next_closer[j]++];
        partner[static_cast<std::size_t>(open - 1)] = close;
        partner[static_cast<std::size_t>(close - 1)] = open;
      }
    }
  }
  return validate_involution(std::move(partner));
}

ChordInvolution remove_neighbour_nestings(const ChordInvolution& c, std::size_t* steps) {
  ChordInvolution cur = c;
  std::size_t count = 0;
  while (const auto i = find_neighbour_nesting(cur)) {
    cur = cur.swap_neighbours(*i);
    ++count;
  }
  if (steps != nullptr) *steps = count;
  return cur;
}

std::size_t count_crossings(const ChordInvolution& c) {
  const auto chords = c.chords();
  std::size_t crossings = 0;
  for (std::size_t a = 0; a < chords.size(); ++a) {
    for (std::size_t b = a + 1; b < chords.size(); ++b) {
      if (chords[a].first < chords[b].first && chords[b].first < chords[a].second &&
          chords[a].second < chords[b].second) {
        ++crossings;
      }
    }
  }
  return crossings;
}

}  // namespace fishburn

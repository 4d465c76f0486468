#include "fishburn/statistics.hpp"

#include <algorithm>

#include "fishburn/bijections.hpp"

namespace fishburn {

QPolynomial::QPolynomial(std::vector<std::int64_t> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

void QPolynomial::add_term(std::size_t power, std::int64_t coefficient) {
  if (coefficients_.size() <= power) coefficients_.resize(power + 1, 0);
  coefficients_[power] += coefficient;
  trim();
}

std::int64_t QPolynomial::at(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : 0;
}

std::int64_t QPolynomial::evaluate(std::int64_t q) const {
  std::int64_t acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

void QPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

std::vector<bool> right_to_left_maxima(const std::vector<int>& xs) {
  std::vector<bool> out(xs.size(), false);
  int best = -1;
  bool any = false;
  for (std::size_t i = xs.size(); i-- > 0;) {
    if (!any || xs[i] >= best) {
      out[i] = true;
      best = xs[i];
      any = true;
    }
  }
  return out;
}

int left_to_right_minima(const Permutation& pi) {
  int count = 0;
  int best = static_cast<int>(pi.size()) + 1;
  for (int v : pi.entries()) {
    if (v < best) {
      ++count;
      best = v;
    }
  }
  return count;
}

namespace {

std::vector<int> sizes_from_cuts(const std::vector<std::size_t>& cuts, std::size_t n) {
  std::vector<int> sizes;
  std::size_t prev = 0;
  for (std::size_t c : cuts) {
    sizes.push_back(static_cast<int>(c - prev));
    prev = c;
  }
  if (n > 0) sizes.push_back(static_cast<int>(n - prev));
  return sizes;
}

}  // namespace

std::vector<int> components(const ModifiedAscentSequence& m) {
  const auto& e = m.entries();
  const auto n = e.size();
  std::vector<int> suffix_min(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix_min[i] = i + 1 == n ? e[i] : std::min(e[i], suffix_min[i + 1]);
  std::vector<std::size_t> cuts;
  int prefix_max = -1;
  for (std::size_t l = 1; l < n; ++l) {
    prefix_max = std::max(prefix_max, e[l - 1]);
    if (suffix_min[l] > prefix_max) cuts.push_back(l);
  }
  return sizes_from_cuts(cuts, n);
}

std::vector<int> components(const Permutation& pi) {
  std::vector<std::size_t> cuts;
  int prefix_max = 0;
  for (std::size_t l = 1; l < pi.size(); ++l) {
    prefix_max = std::max(prefix_max, pi[l - 1]);
    if (prefix_max == static_cast<int>(l)) cuts.push_back(l);
  }
  return sizes_from_cuts(cuts, pi.size());
}

std::vector<int> components(const Poset& p) {
  const auto sizes = p.level_sizes();
  std::vector<std::size_t> cuts;
  std::size_t below = 0;
  for (int j = 0; j < p.rank(); ++j) {
    below += sizes[static_cast<std::size_t>(j)];
    const auto& next = p.downset(j + 1);
    if (static_cast<std::size_t>(std::count(next.begin(), next.end(), true)) == below) cuts.push_back(below);
  }
  return sizes_from_cuts(cuts, p.size());
}

ModifiedAscentSequence direct_sum(const ModifiedAscentSequence& a, const ModifiedAscentSequence& b) {
  std::vector<int> e = a.entries();
  const int shift = a.empty() ? 0 : 1 + *std::max_element(e.begin(), e.end());
  for (int v : b.entries()) e.push_back(v + shift);
  return ModifiedAscentSequence(std::move(e), trusted);
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> e = a.entries();
  const int shift = static_cast<int>(a.size());
  for (int v : b.entries()) e.push_back(v + shift);
  return Permutation(std::move(e), trusted);
}

Poset direct_sum(const Poset& a, const Poset& b) {
  if (a.size() == 0) return b;
  if (b.size() == 0) return a;
  const auto na = a.size();
  const auto n = na + b.size();
  std::vector<int> levels = a.levels();
  for (int l : b.levels()) levels.push_back(l + a.rank() + 1);
  std::vector<ElementSet> chain;
  for (const auto& d : a.downsets()) {
    ElementSet wide(n, false);
    std::copy(d.begin(), d.end(), wide.begin());
    chain.push_back(std::move(wide));
  }
  for (const auto& d : b.downsets()) {
    ElementSet wide(n, false);
    std::fill(wide.begin(), wide.begin() + static_cast<std::ptrdiff_t>(na), true);
    std::copy(d.begin(), d.end(), wide.begin() + static_cast<std::ptrdiff_t>(na));
    chain.push_back(std::move(wide));
  }
  return Poset(std::move(levels), std::move(chain));
}

StatRecord stats_of_sequence(const AscentSequence& x) {
  StatRecord r;
  const auto& e = x.entries();
  r.size = static_cast<int>(x.size());
  r.minimal = static_cast<int>(std::count(e.begin(), e.end(), 0));
  r.srank = e.empty() ? 0 : e.back();
  r.rank = x.ascents();
  const auto m = hat(x);
  const auto maxima = right_to_left_maxima(m.entries());
  r.maximal = static_cast<int>(std::count(maxima.begin(), maxima.end(), true));
  r.components = static_cast<int>(components(m).size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    r.levels.add_term(static_cast<std::size_t>(m[i]));
    if (maxima[i]) r.maximal_levels.add_term(static_cast<std::size_t>(m[i]));
  }
  return r;
}

StatRecord stats_of_perm(const Permutation& pi) {
  const auto profile = active_sites(pi);
  StatRecord r;
  r.size = static_cast<int>(pi.size());
  r.minimal = left_to_right_minima(pi);
  r.srank = profile.b;
  const auto inv = pi.inverse();
  r.rank = count_ascents(inv.entries());
  const auto maxima = right_to_left_maxima(pi.entries());
  r.maximal = static_cast<int>(std::count(maxima.begin(), maxima.end(), true));
  r.components = static_cast<int>(components(pi).size());
  // Gap segment i runs from active site i to active site i + 1.
  for (std::size_t i = 0; i + 1 < profile.gaps.size(); ++i) {
    const int d = profile.gaps[i + 1] - profile.gaps[i];
    if (d > 0) r.levels.add_term(i, d);
    int dbar = 0;
    for (int g = profile.gaps[i]; g < profile.gaps[i + 1]; ++g) dbar += maxima[static_cast<std::size_t>(g)] ? 1 : 0;
    if (dbar > 0) r.maximal_levels.add_term(i, dbar);
  }
  return r;
}

StatRecord stats_of_poset(const Poset& p) {
  StatRecord r;
  r.size = static_cast<int>(p.size());
  r.minimal = p.count_minimal();
  r.srank = p.size() == 0 ? 0 : p.srank();
  r.rank = p.size() == 0 ? 0 : p.rank();
  r.maximal = p.count_maximal();
  r.components = static_cast<int>(components(p).size());
  for (int x = 1; x <= static_cast<int>(p.size()); ++x) {
    r.levels.add_term(static_cast<std::size_t>(p.level(x)));
    if (p.is_maximal(x)) r.maximal_levels.add_term(static_cast<std::size_t>(p.level(x)));
  }
  return r;
}

}  // namespace fishburn

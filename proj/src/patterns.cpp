#include "fishburn/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "fishburn/bijections.hpp"

namespace fishburn {

namespace {

std::set<int> mirror_gaps(const std::set<int>& gaps, int k) {
  std::set<int> out;
  for (int g : gaps) out.insert(k - g);
  return out;
}

std::set<int> symmetric_difference(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::string format_set(const std::set<int>& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

int parse_int(std::string_view text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("bad integer '" + std::string(text) + "'");
  }
  return v;
}

std::set<int> parse_set(std::string_view text, char name) {
  if (text.size() < 4 || text[0] != name || text[1] != '=' || text[2] != '{' || text.back() != '}') {
    throw ParseError(std::string("expected ") + name + "={...}, got '" + std::string(text) + "'");
  }
  std::set<int> out;
  std::string_view body = text.substr(3, text.size() - 4);
  while (!body.empty()) {
    const auto comma = body.find(',');
    out.insert(parse_int(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

BivincularPattern make_pattern(Permutation sigma, std::set<int> X, std::set<int> Y) {
  const int k = static_cast<int>(sigma.size());
  for (const auto* s : {&X, &Y}) {
    for (int g : *s) {
      if (g < 0 || g > k) throw Error("adjacency gap " + std::to_string(g) + " outside [0," + std::to_string(k) + "]");
    }
  }
  return BivincularPattern{std::move(sigma), std::move(X), std::move(Y)};
}

BivincularPattern r_pattern() { return make_pattern(validate_permutation({2, 3, 1}), {1}, {1}); }

std::optional<std::vector<int>> find_occurrence(const Permutation& pi, const BivincularPattern& p) {
  const int n = static_cast<int>(pi.size());
  const int k = static_cast<int>(p.size());
  // pos[t], val[t] for pattern letter t in 1..k; borders at 0 and k + 1.
  std::vector<int> pos(static_cast<std::size_t>(k) + 2, 0);
  std::vector<int> val(static_cast<std::size_t>(k) + 2, 0);
  pos.back() = n + 1;
  val.back() = n + 1;
  // letter_of_rank[y] is the pattern letter carrying value rank y.
  std::vector<int> letter_of_rank(static_cast<std::size_t>(k) + 2, 0);
  letter_of_rank.back() = k + 1;
  for (int t = 1; t <= k; ++t) letter_of_rank[static_cast<std::size_t>(p.sigma[static_cast<std::size_t>(t - 1)])] = t;

  // Value adjacency across gap y is decidable once both neighbouring ranks
  // are assigned (letters 0 and k + 1 are always assigned).
  const auto values_ok = [&](int assigned) {
    for (int y : p.Y) {
      const int a = letter_of_rank[static_cast<std::size_t>(y)];
      const int b = letter_of_rank[static_cast<std::size_t>(y + 1)];
      const bool known_a = a == 0 || a == k + 1 || a <= assigned;
      const bool known_b = b == 0 || b == k + 1 || b <= assigned;
      if (known_a && known_b && val[static_cast<std::size_t>(b)] != val[static_cast<std::size_t>(a)] + 1) return false;
    }
    return true;
  };

  std::function<bool(int)> place = [&](int t) -> bool {
    if (t > k) {
      if (p.X.contains(k) && pos[static_cast<std::size_t>(k)] + 1 != n + 1) return false;
      return values_ok(k);
    }
    const int lo = pos[static_cast<std::size_t>(t - 1)] + 1;
    const int hi = p.X.contains(t - 1) ? std::min(lo, n) : n;
    for (int q = lo; q <= hi; ++q) {
      const int v = pi[static_cast<std::size_t>(q - 1)];
      bool ok = true;
      for (int s = 1; s < t && ok; ++s) {
        const bool text_less = val[static_cast<std::size_t>(s)] < v;
        const bool pattern_less = p.sigma[static_cast<std::size_t>(s - 1)] < p.sigma[static_cast<std::size_t>(t - 1)];
        ok = text_less == pattern_less;
      }
      if (!ok) continue;
      pos[static_cast<std::size_t>(t)] = q;
      val[static_cast<std::size_t>(t)] = v;
      if (values_ok(t) && place(t + 1)) return true;
    }
    return false;
  };

  if (!place(1)) return std::nullopt;
  return std::vector<int>(pos.begin() + 1, pos.end() - 1);
}

bool contains(const Permutation& pi, const BivincularPattern& p) { return find_occurrence(pi, p).has_value(); }

BivincularPattern compose(const BivincularPattern& p, const BivincularPattern& q) {
  if (p.size() != q.size()) throw LengthMismatch(p.size(), q.size());
  std::vector<int> prod(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    prod[i] = p.sigma[static_cast<std::size_t>(q.sigma[i] - 1)];
  }
  return BivincularPattern{Permutation(std::move(prod), trusted), symmetric_difference(p.X, q.Y),
                           symmetric_difference(p.Y, q.X)};
}

BivincularPattern inverse(const BivincularPattern& p) { return BivincularPattern{p.sigma.inverse(), p.Y, p.X}; }

BivincularPattern reverse(const BivincularPattern& p) {
  const int k = static_cast<int>(p.size());
  return BivincularPattern{reverse(p.sigma), mirror_gaps(p.X, k), p.Y};
}

BivincularPattern complement(const BivincularPattern& p) {
  const int k = static_cast<int>(p.size());
  return BivincularPattern{complement(p.sigma), p.X, mirror_gaps(p.Y, k)};
}

Permutation reverse(const Permutation& pi) {
  std::vector<int> e(pi.entries().rbegin(), pi.entries().rend());
  return Permutation(std::move(e), trusted);
}

Permutation complement(const Permutation& pi) {
  const int n = static_cast<int>(pi.size());
  std::vector<int> e = pi.entries();
  for (int& v : e) v = n + 1 - v;
  return Permutation(std::move(e), trusted);
}

std::vector<BivincularPattern> all_patterns(std::size_t k) {
  std::vector<BivincularPattern> out;
  const unsigned subsets = 1u << (k + 1);
  const auto to_set = [](unsigned mask) {
    std::set<int> s;
    for (int g = 0; mask != 0; ++g, mask >>= 1) {
      if (mask & 1u) s.insert(g);
    }
    return s;
  };
  std::vector<int> e(k);
  for (std::size_t i = 0; i < k; ++i) e[i] = static_cast<int>(i) + 1;
  do {
    for (unsigned xm = 0; xm < subsets; ++xm) {
      for (unsigned ym = 0; ym < subsets; ++ym) {
        out.push_back(BivincularPattern{Permutation(e, trusted), to_set(xm), to_set(ym)});
      }
    }
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

std::string format_pattern(const BivincularPattern& p) {
  const bool compact = p.size() < 10;
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!compact && i > 0) out += ",";
    out += std::to_string(p.sigma[i]);
  }
  return out + "|X=" + format_set(p.X) + "|Y=" + format_set(p.Y);
}

BivincularPattern parse_pattern(std::string_view text) {
  const auto bar1 = text.find('|');
  const auto bar2 = bar1 == std::string_view::npos ? bar1 : text.find('|', bar1 + 1);
  if (bar2 == std::string_view::npos) throw ParseError("pattern must look like 231|X={1}|Y={1}");
  const auto letters = text.substr(0, bar1);
  std::vector<int> sigma;
  if (letters.find(',') != std::string_view::npos) {
    std::string_view rest = letters;
    while (true) {
      const auto comma = rest.find(',');
      sigma.push_back(parse_int(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  } else {
    for (char c : letters) {
      if (c < '0' || c > '9') throw ParseError("bad pattern letter '" + std::string(1, c) + "'");
      sigma.push_back(c - '0');
    }
  }
  auto X = parse_set(text.substr(bar1 + 1, bar2 - bar1 - 1), 'X');
  auto Y = parse_set(text.substr(bar2 + 1), 'Y');
  try {
    return make_pattern(validate_permutation(std::move(sigma)), std::move(X), std::move(Y));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

bool avoids_barred(const Permutation& pi) {
  const int n = static_cast<int>(pi.size());
  const auto at = [&](int i) { return pi[static_cast<std::size_t>(i)]; };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (at(j) < at(i)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (!(at(k) < at(i))) continue;
        bool low = false;
        for (int l = i + 1; l < j && !low; ++l) low = at(l) < at(k);
        if (!low) return false;
        bool high = false;
        for (int m = k + 1; m < n && !high; ++m) high = at(i) < at(m) && at(m) < at(j);
        if (!high) return false;
      }
    }
  }
  return true;
}

bool is_self_modified_by_hat(const AscentSequence& x) { return hat(x).entries() == x.entries(); }

bool is_self_modified_closed_form(const AscentSequence& x) {
  if (x.empty()) return true;
  if (x[0] != 0) return false;
  int running_max = x[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] > x[i - 1] && x[i] != running_max + 1) return false;
    running_max = std::max(running_max, x[i]);
  }
  return true;
}

bool is_self_modified(const AscentSequence& x) {
  const bool direct = is_self_modified_by_hat(x);
  if (direct != is_self_modified_closed_form(x)) {
    throw std::logic_error("self-modified characterizations disagree");
  }
  return direct;
}

int right_to_left_minima(const Permutation& pi) {
  int count = 0;
  int best = static_cast<int>(pi.size()) + 1;
  for (std::size_t i = pi.size(); i-- > 0;) {
    if (pi[i] < best) {
      ++count;
      best = pi[i];
    }
  }
  return count;
}

}  // namespace fishburn

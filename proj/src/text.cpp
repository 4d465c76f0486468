#include "fishburn/text.hpp"

#include <charconv>
#include "json.hpp"

#include "fishburn/bijections.hpp"

namespace fishburn {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int to_int(std::string_view text) {
  text = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("bad integer '" + std::string(text) + "'");
  }
  return v;
}

std::vector<int> split_ints(std::string_view body, char sep) {
  std::vector<int> out;
  if (trim(body).empty()) return out;
  while (true) {
    const auto cut = body.find(sep);
    out.push_back(to_int(body.substr(0, cut)));
    if (cut == std::string_view::npos) break;
    body.remove_prefix(cut + 1);
  }
  return out;
}

}  // namespace

std::string format_entries(const std::vector<int>& entries) {
  std::string out = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(entries[i]);
  }
  return out + "]";
}

std::vector<int> parse_entries(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("expected [a,b,...], got '" + std::string(text) + "'");
  }
  return split_ints(text.substr(1, text.size() - 2), ',');
}

std::string format_sequence(const AscentSequence& x) { return format_entries(x.entries()); }

AscentSequence parse_sequence(std::string_view text) { return validate_ascent_sequence(parse_entries(text)); }

std::string format_modified(const ModifiedAscentSequence& m) { return format_entries(m.entries()); }

ModifiedAscentSequence parse_modified(std::string_view text) {
  return validate_modified_ascent_sequence(parse_entries(text));
}

std::string format_permutation(const Permutation& pi) {
  std::string out;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(pi[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> e;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r' || text[i] == '\n')) ++i;
    std::size_t j = i;
    while (j < text.size() && !(text[j] == ' ' || text[j] == '\t' || text[j] == '\r' || text[j] == '\n')) ++j;
    if (j > i) e.push_back(to_int(text.substr(i, j - i)));
    i = j;
  }
  return validate_permutation(std::move(e));
}

std::string format_poset(const Poset& p) {
  nlohmann::ordered_json j;
  j["n"] = p.size();
  j["relations"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : poset_to_relations(p).pairs()) j["relations"].push_back({a, b});
  return j.dump();
}

Poset parse_poset(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad poset JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("relations") ||
      !j["relations"].is_array()) {
    throw ParseError("poset JSON needs integer \"n\" and array \"relations\"");
  }
  const auto n = j["n"].get<long long>();
  if (n < 0) throw ParseError("poset size must be nonnegative");
  RelationMatrix rel(static_cast<std::size_t>(n));
  for (const auto& pair : j["relations"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
      throw ParseError("each relation must be a pair [a,b]");
    }
    const auto a = pair[0].get<long long>();
    const auto b = pair[1].get<long long>();
    if (a < 1 || a > n || b < 1 || b > n) throw ParseError("relation element outside 1..n");
    rel.set_less(static_cast<int>(a), static_cast<int>(b));
  }
  return poset_from_relations(rel);
}

std::string format_involution(const ChordInvolution& c) {
  std::string out = "[";
  bool first = true;
  for (const auto& [a, b] : c.chords()) {
    if (!first) out += ',';
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    first = false;
  }
  return out + "]";
}

ChordInvolution parse_involution(std::string_view text) {
  text = trim(text);
  if (text.empty() || text.front() != '[') return validate_involution(parse_permutation(text).entries());
  if (text.back() != ']') throw ParseError("expected [(a,b),...], got '" + std::string(text) + "'");
  std::string_view body = trim(text.substr(1, text.size() - 2));
  std::vector<std::pair<int, int>> chords;
  while (!body.empty()) {
    if (body.front() != '(') throw ParseError("expected '(' in chord list");
    const auto close = body.find(')');
    if (close == std::string_view::npos) throw ParseError("unterminated chord");
    const auto pair = split_ints(body.substr(1, close - 1), ',');
    if (pair.size() != 2) throw ParseError("a chord has exactly two endpoints");
    chords.emplace_back(pair[0], pair[1]);
    body = trim(body.substr(close + 1));
    if (!body.empty()) {
      if (body.front() != ',') throw ParseError("expected ',' between chords");
      body = trim(body.substr(1));
    }
  }
  const auto points = 2 * chords.size();
  std::vector<int> partner(points, 0);
  for (const auto& [a, b] : chords) {
    for (int v : {a, b}) {
      if (v < 1 || static_cast<std::size_t>(v) > points) throw NotInvolution("endpoint outside 1..2n");
      if (partner[static_cast<std::size_t>(v - 1)] != 0) throw NotInvolution("endpoint used twice");
    }
    if (a == b) throw HasFixedPoint(a);
    partner[static_cast<std::size_t>(a - 1)] = b;
    partner[static_cast<std::size_t>(b - 1)] = a;
  }
  return validate_involution(std::move(partner));
}

}  // namespace fishburn

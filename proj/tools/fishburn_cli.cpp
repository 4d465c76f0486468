// fishburn: command-line front end. Every command is a thin adapter over the
// library; objects travel one per line in their canonical text form.
//
// Exit codes: 0 success, 1 data or verification failure, 2 usage error,
// 3 brute-force cap exceeded.

#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <string>

#include "fishburn/bijections.hpp"
#include "fishburn/enumeration.hpp"
#include "fishburn/patterns.hpp"
#include "fishburn/series.hpp"
#include "fishburn/statistics.hpp"
#include "fishburn/text.hpp"
#include "fishburn/verify.hpp"
#include "json.hpp"

namespace fb = fishburn;

namespace {

constexpr int kOk = 0;
constexpr int kDataError = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<fb::BigInt>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += sep;
    out += xs[i].get_str();
  }
  return out;
}

void print_counts(const std::vector<fb::BigInt>& xs, bool json) {
  std::cout << (json ? "[" + join(xs, ",") + "]" : join(xs, ",")) << '\n';
}

// ---- conversion through the ascent sequence ----

const std::vector<std::string> kFormats{"ascseq", "modseq", "perm", "poset", "involution"};

fb::AscentSequence to_sequence(const std::string& fmt, const std::string& line) {
  if (fmt == "ascseq") return fb::parse_sequence(line);
  if (fmt == "modseq") return fb::hat_inv(fb::parse_modified(line));
  if (fmt == "perm") return fb::lambda(fb::parse_permutation(line));
  if (fmt == "poset") {
    const auto p = fb::parse_poset(line);
    return p.size() == 0 ? fb::AscentSequence{} : fb::psi(p);
  }
  const auto c = fb::parse_involution(line);
  return c.points() == 0 ? fb::AscentSequence{} : fb::psi(fb::omega(c));
}

std::string from_sequence(const std::string& fmt, const fb::AscentSequence& x) {
  if (fmt == "ascseq") return fb::format_sequence(x);
  if (fmt == "modseq") return fb::format_modified(fb::hat(x));
  if (fmt == "perm") return fb::format_permutation(fb::lambda_inv(x));
  if (x.empty()) throw fb::Error("conversion to " + fmt + " needs n >= 1");
  if (fmt == "poset") return fb::format_poset(fb::psi_inv(x));
  return fb::format_involution(fb::omega_inv(fb::psi_inv(x)));
}

fb::Family family_or_usage(const std::string& name) {
  const auto f = fb::parse_family(name);
  if (!f) throw UsageError("unknown object family '" + name + "'");
  return *f;
}

// ---- commands ----

int cmd_count(const std::string& object, int n, const std::string& by, bool json) {
  const auto caps = fb::BruteForceCaps::from_environment();
  if (object == "barred") {
    if (by.empty()) {
      print_counts({fb::count_barred_avoiders(n)}, json);
    } else if (by == "rlmin") {
      std::vector<fb::BigInt> row;
      for (int k = 1; k <= n; ++k) row.push_back(fb::barred_by_k(n, k));
      print_counts(row, json);
    } else {
      throw UsageError("barred counts split only by rlmin");
    }
    return kOk;
  }
  const auto family = family_or_usage(object);
  const bool closed = family == fb::Family::AscentSequences || family == fb::Family::Posets;
  if (by.empty()) {
    if (closed) {
      print_counts({fb::count_table(n).total(n)}, json);
    } else {
      print_counts({fb::BigInt(static_cast<unsigned long>(fb::count_family(family, static_cast<std::size_t>(n), caps)))},
                   json);
    }
    return kOk;
  }
  if (by == "asc") {
    std::vector<fb::BigInt> row(static_cast<std::size_t>(std::max(n, 1)), fb::BigInt(0));
    if (closed) {
      const auto table = fb::count_table(n);
      for (std::size_t a = 0; a < row.size(); ++a) {
        for (const auto& c : table.counts[static_cast<std::size_t>(n)][a]) row[a] += c;
      }
    } else if (family == fb::Family::RPermutations) {
      for (const auto& pi : fb::r_permutations(static_cast<std::size_t>(n), caps)) {
        row[static_cast<std::size_t>(fb::stats_of_perm(pi).rank)] += 1;
      }
    } else {
      for (const auto& c : fb::i_involutions(static_cast<std::size_t>(n), caps)) {
        if (n > 0) row[static_cast<std::size_t>(fb::stats_of_poset(fb::omega(c)).rank)] += 1;
        else row[0] += 1;
      }
    }
    print_counts(row, json);
    return kOk;
  }
  if (by == "rlmin" && family == fb::Family::RPermutations) {
    std::vector<fb::BigInt> row(static_cast<std::size_t>(n), fb::BigInt(0));
    for (const auto& pi : fb::r_permutations(static_cast<std::size_t>(n), caps)) {
      row[static_cast<std::size_t>(fb::right_to_left_minima(pi) - 1)] += 1;
    }
    print_counts(row, json);
    return kOk;
  }
  throw UsageError("--by " + by + " is not available for " + object);
}

int cmd_convert(const std::string& from, const std::string& to) {
  int status = kOk;
  std::string line;
  for (int lineno = 1; std::getline(std::cin, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      std::cout << from_sequence(to, to_sequence(from, line)) << '\n';
    } catch (const fb::Error& e) {
      std::cerr << "line " << lineno << ": " << e.what() << '\n';
      status = kDataError;
    }
  }
  return status;
}

int cmd_enumerate(const std::string& object, int n, bool brute) {
  const auto caps = fb::BruteForceCaps::from_environment();
  const auto family = family_or_usage(object);
  const auto size = static_cast<std::size_t>(n);
  if (brute && family == fb::Family::RPermutations) {
    for (const auto& pi : fb::r_permutations(size, caps)) std::cout << fb::format_permutation(pi) << '\n';
    return kOk;
  }
  if (brute && family == fb::Family::Involutions) {
    for (const auto& c : fb::i_involutions(size, caps)) std::cout << fb::format_involution(c) << '\n';
    return kOk;
  }
  fb::for_each_ascent_sequence(size, [&](const fb::AscentSequence& x) {
    switch (family) {
      case fb::Family::AscentSequences: std::cout << fb::format_sequence(x) << '\n'; break;
      case fb::Family::Posets:
        std::cout << (x.empty() ? fb::format_poset(fb::Poset{}) : fb::format_poset(fb::psi_inv(x))) << '\n';
        break;
      case fb::Family::RPermutations: std::cout << fb::format_permutation(fb::lambda_inv(x)) << '\n'; break;
      case fb::Family::Involutions:
        std::cout << (x.empty() ? std::string("[]") : fb::format_involution(fb::omega_inv(fb::psi_inv(x)))) << '\n';
        break;
    }
  });
  return kOk;
}

nlohmann::ordered_json stats_json(const fb::StatRecord& s) {
  nlohmann::ordered_json j;
  j["n"] = s.size;
  j["min"] = s.minimal;
  j["srank"] = s.srank;
  j["rank"] = s.rank;
  j["max"] = s.maximal;
  j["comp"] = s.components;
  j["lambda"] = s.levels.coefficients();
  j["lambda_bar"] = s.maximal_levels.coefficients();
  return j;
}

int cmd_stats(const std::string& from) {
  int status = kOk;
  std::string line;
  for (int lineno = 1; std::getline(std::cin, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      fb::StatRecord s;
      if (from == "perm") {
        s = fb::stats_of_perm(fb::parse_permutation(line));
      } else if (from == "poset") {
        s = fb::stats_of_poset(fb::parse_poset(line));
      } else if (from == "involution") {
        s = fb::stats_of_poset(fb::omega(fb::parse_involution(line)));
      } else {
        s = fb::stats_of_sequence(to_sequence(from, line));
      }
      std::cout << stats_json(s).dump() << '\n';
    } catch (const fb::Error& e) {
      std::cerr << "line " << lineno << ": " << e.what() << '\n';
      status = kDataError;
    }
  }
  return status;
}

int cmd_series(int order, const std::string& by, bool json) {
  if (by.empty()) {
    const auto p = fb::p_series(order);
    if (json) {
      print_counts(p, true);
    } else {
      for (const auto& c : p) std::cout << c.get_str() << '\n';
    }
    return kOk;
  }
  if (by != "asc") throw UsageError("series splits only by asc");
  const auto table = fb::count_table(order);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int n = 0; n <= order; ++n) {
    std::vector<fb::BigInt> row(static_cast<std::size_t>(std::max(n, 1)), fb::BigInt(0));
    for (std::size_t a = 0; a < row.size(); ++a) {
      for (const auto& c : table.counts[static_cast<std::size_t>(n)][a]) row[a] += c;
    }
    if (json) {
      std::cout << (n == 0 ? "[" : ",") << "[" << join(row, ",") << "]";
    } else {
      std::cout << join(row, ",") << '\n';
    }
  }
  if (json) std::cout << "]\n";
  return kOk;
}

int cmd_contains(const std::string& pattern_text) {
  const auto pattern = fb::parse_pattern(pattern_text);
  int status = kOk;
  std::string line;
  for (int lineno = 1; std::getline(std::cin, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto occ = fb::find_occurrence(fb::parse_permutation(line), pattern);
      if (occ) {
        std::cout << "yes " << fb::format_entries(*occ) << '\n';
      } else {
        std::cout << "no\n";
      }
    } catch (const fb::Error& e) {
      std::cerr << "line " << lineno << ": " << e.what() << '\n';
      status = kDataError;
    }
  }
  return status;
}

int cmd_avoiders(const std::string& pattern_text, int n, bool count_only) {
  const auto caps = fb::BruteForceCaps::from_environment();
  if (n > caps.r_permutations) throw fb::BruteForceCapExceeded(n, caps.r_permutations);
  const bool barred = pattern_text == "barred";
  std::optional<fb::BivincularPattern> pattern;
  if (!barred) pattern = fb::parse_pattern(pattern_text);
  std::size_t count = 0;
  fb::for_each_permutation(static_cast<std::size_t>(n), [&](const fb::Permutation& pi) {
    const bool avoids = barred ? fb::avoids_barred(pi) : !fb::contains(pi, *pattern);
    if (!avoids) return;
    ++count;
    if (!count_only) std::cout << fb::format_permutation(pi) << '\n';
  });
  if (count_only) std::cout << count << '\n';
  return kOk;
}

int cmd_verify(const std::string& suite, int max_n) {
  const std::map<std::string, int> defaults{
      {"roundtrips", 7}, {"stats", 8}, {"series", 12}, {"kernel", 8}, {"nestings", 4}};
  const auto it = defaults.find(suite);
  if (it == defaults.end()) throw UsageError("unknown suite '" + suite + "'");
  const int limit = max_n >= 0 ? max_n : it->second;
  const auto report = fb::run_suite(suite, limit, fb::BruteForceCaps::from_environment());
  if (report->passed) {
    std::cout << "PASS " << suite << " (" << report->checked << " checks, max-n " << limit << ")\n";
    return kOk;
  }
  std::cout << "FAIL " << suite << ": " << report->counterexample << '\n';
  return kDataError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ascent sequences, (2+2)-free posets, R-permutations and I_2n involutions"};
  app.require_subcommand(1);

  std::string object, by, from, to, pattern, suite;
  int n = 0;
  int order = 20;
  int max_n = -1;
  bool json = false;
  bool brute = false;
  bool count_only = false;

  const std::vector<std::string> families{"ascseq", "posets", "perms", "perms_R", "involutions", "involutions_I"};
  auto families_and_barred = families;
  families_and_barred.push_back("barred");

  auto* count = app.add_subcommand("count", "Count a family at size n");
  count->add_option("--object", object, "ascseq|posets|perms|involutions|barred")
      ->required()
      ->check(CLI::IsMember(families_and_barred));
  count->add_option("--n", n, "Size")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--by", by, "Split by asc or rlmin")->check(CLI::IsMember({"asc", "rlmin"}));
  count->add_flag("--json", json, "Emit a JSON array");

  auto* convert = app.add_subcommand("convert", "Convert objects read one per line from standard input");
  convert->add_option("--from", from, "ascseq|modseq|perm|poset|involution")->required()->check(CLI::IsMember(kFormats));
  convert->add_option("--to", to, "ascseq|modseq|perm|poset|involution")->required()->check(CLI::IsMember(kFormats));

  auto* enumerate = app.add_subcommand("enumerate", "List a family at size n in canonical order");
  enumerate->add_option("--object", object, "ascseq|posets|perms|involutions")
      ->required()
      ->check(CLI::IsMember(families));
  enumerate->add_option("--n", n, "Size")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--brute", brute, "Filter all permutations or matchings instead of using the bijections");

  auto* stats = app.add_subcommand("stats", "Statistics of objects read one per line from standard input");
  stats->add_option("--from", from, "ascseq|modseq|perm|poset|involution")->required()->check(CLI::IsMember(kFormats));

  auto* series = app.add_subcommand("series", "Coefficients p_0..p_N, or rows split by ascents");
  series->add_option("--order", order, "Truncation order N")->check(CLI::NonNegativeNumber);
  series->add_option("--by", by, "Split by asc")->check(CLI::IsMember({"asc"}));
  series->add_flag("--json", json, "Emit a JSON array");

  auto* contains = app.add_subcommand("contains", "Test permutations from standard input for a pattern");
  contains->add_option("--pattern", pattern, "Pattern such as 231|X={1}|Y={1}")->required();

  auto* avoiders = app.add_subcommand("avoiders", "List permutations of size n avoiding a pattern");
  avoiders->add_option("--pattern", pattern, "Bivincular pattern, or 'barred'")->required();
  avoiders->add_option("--n", n, "Size")->required()->check(CLI::NonNegativeNumber);
  avoiders->add_flag("--count", count_only, "Print only the number of avoiders");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "roundtrips|stats|series|kernel|nestings")
      ->required()
      ->check(CLI::IsMember({"roundtrips", "stats", "series", "kernel", "nestings"}));
  verify->add_option("--max-n", max_n, "Size bound (t-order for series and kernel)")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*count) return cmd_count(object, n, by, json);
    if (*convert) return cmd_convert(from, to);
    if (*enumerate) return cmd_enumerate(object, n, brute);
    if (*stats) return cmd_stats(from);
    if (*series) return cmd_series(order, by, json);
    if (*contains) return cmd_contains(pattern);
    if (*avoiders) return cmd_avoiders(pattern, n, count_only);
    if (*verify) return cmd_verify(suite, max_n);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const fb::BruteForceCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCap;
  } catch (const fb::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const fb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}

// Command-line front end: counts, tables, Wilf classes, cut-pair classes and Dyck
// paths, and the verification suites.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
// 3 no closed form available for --method formula.

#include "altwords/counting.hpp"
#include "altwords/formulas.hpp"
#include "altwords/structure.hpp"
#include "altwords/table_io.hpp"
#include "altwords/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace {

using namespace altwords;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kNoClosedForm = 3;

int run_count(const std::string& pattern_text, int k, int n, const std::string& orientation_text,
              const std::string& method) {
  const auto pattern = VincularPattern::parse(pattern_text);
  const auto orientation = parse_orientation(orientation_text);
  const bool brute = method == "brute" || method == "both";
  const bool formula = method == "formula" || method == "both";

  ExactInt counted = 0;
  if (brute) {
    counted = count_avoiders(k, n, pattern, orientation);
    std::cout << "brute:   " << counted << "\n";
  }
  if (!formula) return kOk;

  // Formulas are stated for up-down words; down-up words map over by complement.
  const auto up_down_pattern = orientation == Orientation::UpDown ? pattern : complement(pattern);
  const auto predicted = predicted_count(up_down_pattern, k, n);
  if (!predicted.closed_form) {
    std::cout << "formula: none for " << pattern.to_string() << " at n=" << n << " (class "
              << predicted.wilf_class << ", " << predicted.rule << ")\n";
    if (!brute) return kNoClosedForm;
    std::cout << "verdict: NO-FORMULA\n";
    return kNoClosedForm;
  }
  std::cout << "formula: " << predicted.value << "  [class " << predicted.wilf_class << ": " << predicted.rule
            << "]\n";
  if (!brute) return kOk;
  const bool match = predicted.value == counted;
  std::cout << "verdict: " << (match ? "MATCH" : "MISMATCH") << "\n";
  return match ? kOk : kMismatch;
}

int run_table(const std::string& pattern_text, int k_max, int n_max, const std::string& orientation_text,
              const std::string& format_text) {
  const auto table = build_table(VincularPattern::parse(pattern_text), parse_orientation(orientation_text), k_max,
                                 n_max);
  std::cout << format_table(table, parse_output_format(format_text));
  return kOk;
}

std::string join(const std::vector<VincularPattern>& block) {
  std::string out;
  for (const auto& p : block) out += (out.empty() ? "" : " ") + p.to_string();
  return out;
}

int run_wilf(int k_max, int n_max_even, int n_max_odd, const std::string& parity_text,
             const std::vector<std::string>& pattern_texts) {
  std::vector<VincularPattern> patterns;
  if (pattern_texts.empty()) {
    const auto all = all_patterns();
    patterns.assign(all.begin(), all.end());
  } else {
    for (const auto& text : pattern_texts) patterns.push_back(VincularPattern::parse(text));
  }

  std::vector<Parity> parities;
  if (parity_text != "odd") parities.push_back(Parity::Even);
  if (parity_text != "even") parities.push_back(Parity::Odd);

  int status = kOk;
  for (Parity parity : parities) {
    const bool even = parity == Parity::Even;
    const int n_max = even ? n_max_even : n_max_odd;
    std::cout << (even ? "even" : "odd") << " lengths (k <= " << k_max << ", n <= " << n_max << ")\n";
    const auto blocks = wilf_partition(patterns, Orientation::UpDown, k_max, n_max, parity);

    bool finer = false;
    bool coarser = false;
    std::map<char, std::size_t> letter_block_count;
    for (const auto& block : blocks) {
      std::set<char> letters;
      for (const auto& p : block) letters.insert(wilf_class(p, parity));
      for (char c : letters) ++letter_block_count[c];
      coarser = coarser || letters.size() > 1;
      std::string label(letters.begin(), letters.end());
      std::cout << "  [" << label << "] " << join(block) << "\n";
    }
    for (const auto& [letter, count] : letter_block_count) finer = finer || count > 1;

    const char* verdict = finer ? "MISMATCH" : (coarser ? "INCONCLUSIVE" : "MATCH");
    std::cout << "  verdict: " << verdict << "\n";
    if (finer) status = kMismatch;
  }
  return status;
}

int run_classes(int k, int i, bool list_members) {
  const auto classes = enumerate_classes(k);
  std::cout << classes.size() << " classes for k=" << k << "\n";
  ExactInt total = 0;
  for (const auto& f : classes) {
    const auto path = class_to_dyck(f);
    std::cout << f.to_string() << "  " << (path.steps().empty() ? "(empty)" : path.steps())
              << "  valleys=" << valleys(path);
    if (i > 0) {
      const auto count = class_word_count(f, i);
      total += count;
      std::cout << "  words(i=" << i << ")=" << count;
    }
    std::cout << "\n";
    if (list_members && i > 0) {
      for (const auto& w : class_members(f, i)) std::cout << "    " << w.to_string() << "\n";
    }
  }
  if (i > 0) std::cout << "total words of length " << 2 * i << ": " << total << "\n";
  return kOk;
}

CutClass parse_class(const std::string& text, int k) {
  CutClass f{k, {}};
  std::string body = text;
  std::erase_if(body, [](char c) { return c == '{' || c == '}' || c == ' '; });
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.size() != 2) throw std::invalid_argument("class pairs are written as two digits, e.g. 34,23");
    f.pairs.push_back({item[0] - '0', item[1] - '0'});
  }
  validate(f);
  return f;
}

int run_dyck(int k, const std::string& path_text, const std::string& class_text) {
  if (!path_text.empty()) {
    const std::string steps = path_text == "-" ? "" : path_text;
    const auto f = dyck_to_class(DyckPath(steps), k);
    std::cout << f.to_string() << "\n";
  } else {
    const auto path = class_to_dyck(parse_class(class_text, k));
    std::cout << path.steps() << "\n";
  }
  return kOk;
}

int run_verify(const std::string& suite) {
  bool all_passed = true;
  for (const auto& report : run_suites(suite)) {
    std::printf("%-10s %s  %zu checks  %.2fs\n", report.name.c_str(), report.passed() ? "PASS" : "FAIL",
                report.checks, report.seconds);
    for (const auto& failure : report.failures) std::printf("    %s\n", failure.c_str());
    all_passed = all_passed && report.passed();
  }
  return all_passed ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern avoidance in alternating words"};
  app.require_subcommand(1);

  std::string pattern;
  std::string orientation = "up-down";
  int k = 0;
  int n = 0;
  std::string method = "brute";
  auto* count = app.add_subcommand("count", "Count alternating words avoiding a pattern");
  count->add_option("pattern", pattern, "Pattern, e.g. 1-32, 132, 1-2-3")->required();
  count->add_option("--k", k, "Alphabet size")->required()->check(CLI::PositiveNumber);
  count->add_option("--n", n, "Word length")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--orientation", orientation, "up-down or down-up");
  count->add_option("--method", method, "brute, formula or both")
      ->check(CLI::IsMember({"brute", "formula", "both"}));

  int k_max = 5;
  int n_max = 9;
  std::string format = "plain";
  auto* table = app.add_subcommand("table", "Print N^p_{k,n} for 2 <= k <= k_max, 0 <= n <= n_max");
  table->add_option("pattern", pattern)->required();
  table->add_option("k_max", k_max)->required()->check(CLI::Range(2, 64));
  table->add_option("n_max", n_max)->required()->check(CLI::NonNegativeNumber);
  table->add_option("--orientation", orientation, "up-down or down-up");
  table->add_option("--format", format, "plain, csv or json")->check(CLI::IsMember({"plain", "csv", "json"}));

  int wilf_k_max = 5;
  int n_max_even = 8;
  int n_max_odd = 9;
  std::string parity = "both";
  std::vector<std::string> wilf_patterns;
  auto* wilf = app.add_subcommand("wilf", "Empirical Wilf classes compared with the class table");
  wilf->add_option("--k-max", wilf_k_max)->check(CLI::Range(2, 64));
  wilf->add_option("--n-max-even", n_max_even)->check(CLI::NonNegativeNumber);
  wilf->add_option("--n-max-odd", n_max_odd)->check(CLI::NonNegativeNumber);
  wilf->add_option("--parity", parity, "even, odd or both")->check(CLI::IsMember({"even", "odd", "both"}));
  wilf->add_option("--patterns", wilf_patterns, "Restrict to these patterns")->delimiter(',');

  int class_k = 0;
  int class_i = 0;
  bool list_members = false;
  auto* classes = app.add_subcommand("classes", "Cut-pair classes of 123-avoiding up-down words");
  classes->add_option("k", class_k)->required()->check(CLI::Range(2, 64));
  classes->add_option("--i", class_i, "Half-length for word counts")->check(CLI::NonNegativeNumber);
  classes->add_flag("--list-members", list_members, "Print the words of each class (needs --i)");
  classes->add_flag("--dyck", "Show Dyck paths (always on)");

  std::string path_text;
  std::string class_text;
  auto* dyck = app.add_subcommand("dyck", "Convert between a Dyck path and a cut-pair class");
  dyck->add_option("--k", class_k)->required()->check(CLI::Range(2, 64));
  auto* path_opt = dyck->add_option("--path", path_text, "U/D string, '-' for the empty path");
  auto* class_opt = dyck->add_option("--class", class_text, "Cut-pairs, e.g. 34,23 or {} ");
  path_opt->excludes(class_opt);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"tables", "wilf", "bijection", "formulas", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (count->parsed()) return run_count(pattern, k, n, orientation, method);
    if (table->parsed()) return run_table(pattern, k_max, n_max, orientation, format);
    if (wilf->parsed()) return run_wilf(wilf_k_max, n_max_even, n_max_odd, parity, wilf_patterns);
    if (classes->parsed()) return run_classes(class_k, class_i, list_members);
    if (dyck->parsed()) {
      if (path_opt->count() + class_opt->count() != 1) {
        std::cerr << "dyck: give exactly one of --path or --class\n";
        return kUsage;
      }
      return run_dyck(class_k, path_text, class_text);
    }
    if (verify->parsed()) return run_verify(suite);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

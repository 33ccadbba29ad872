#include "altwords/verify.hpp"

#include "altwords/counting.hpp"
#include "altwords/formulas.hpp"
#include "altwords/reference_tables.hpp"
#include "altwords/structure.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

namespace altwords {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) : start_(std::chrono::steady_clock::now()) { report_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++report_.checks;
    if (!ok) report_.failures.push_back(what);
  }

  SuiteReport finish() {
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  SuiteReport report_;
  std::chrono::steady_clock::time_point start_;
};

std::string at(int k, int n) { return "(k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")"; }

}  // namespace

SuiteReport verify_tables() {
  Recorder rec("tables");
  struct Case {
    const char* pattern;
    const std::array<std::array<std::uint64_t, 10>, 4>* expected;
  };
  for (const Case& c : {Case{"132", &reference::kConsecutive132}, Case{"312", &reference::kConsecutive312}}) {
    const auto table = build_table(VincularPattern::parse(c.pattern), Orientation::UpDown, 5, 9);
    for (int k = 2; k <= 5; ++k) {
      for (int n = 0; n <= 9; ++n) {
        const auto expected = (*c.expected)[k - 2][n];
        rec.expect(table.at(k, n) == expected, std::string(c.pattern) + " " + at(k, n) + ": got " +
                                                   table.at(k, n).str() + ", expected " +
                                                   std::to_string(expected));
      }
    }
  }
  return rec.finish();
}

SuiteReport verify_wilf() {
  Recorder rec("wilf");
  const auto patterns = all_patterns();
  const std::vector<VincularPattern> list(patterns.begin(), patterns.end());
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    const char* label = parity == Parity::Even ? "even" : "odd";
    const int n_max = parity == Parity::Even ? 8 : 9;
    const auto blocks = wilf_partition(list, Orientation::UpDown, 5, n_max, parity);

    std::map<char, std::set<std::string>> expected;
    for (const auto& p : list) expected[wilf_class(p, parity)].insert(p.to_string());
    std::set<std::set<std::string>> expected_blocks;
    for (const auto& [letter, members] : expected) expected_blocks.insert(members);

    std::set<std::set<std::string>> actual_blocks;
    for (const auto& block : blocks) {
      std::set<std::string> names;
      for (const auto& p : block) names.insert(p.to_string());
      actual_blocks.insert(names);
      rec.expect(expected_blocks.count(names) == 1,
                 std::string(label) + ": empirical block starting " + block.front().to_string() +
                     " does not match a class");
    }
    rec.expect(actual_blocks == expected_blocks, std::string(label) + ": partition differs from the class table");
  }
  return rec.finish();
}

SuiteReport verify_bijection() {
  Recorder rec("bijection");
  for (int k = 2; k <= 8; ++k) {
    const auto classes = enumerate_classes(k);
    rec.expect(classes.size() == catalan(k - 2), "k=" + std::to_string(k) + ": class count is not Catalan");
    std::map<std::size_t, long> census;
    for (const auto& f : classes) {
      const auto path = class_to_dyck(f);
      rec.expect(dyck_to_class(path, k) == f, "k=" + std::to_string(k) + ": round trip fails for " + f.to_string());
      rec.expect(valleys(path) == f.pairs.size(), "k=" + std::to_string(k) + ": valley count differs for " +
                                                      f.to_string());
      ++census[f.pairs.size()];
    }
    for (const auto& [j, count] : census) {
      rec.expect(narayana(k - 2, static_cast<long>(j)) == count,
                 "k=" + std::to_string(k) + ": " + std::to_string(j) + "-pair census is not Narayana");
    }
  }

  const auto p123 = VincularPattern::parse("1-2-3");
  for (int k = 2; k <= 5; ++k) {
    const auto classes = enumerate_classes(k);
    for (int i = 1; i <= 4; ++i) {
      std::map<std::string, std::set<Word>> by_class;
      const auto words = avoiders(k, 2 * i, p123, Orientation::UpDown);
      for (const auto& w : words) by_class[class_of(w).to_string()].insert(w);
      ExactInt summed = 0;
      std::size_t covered = 0;
      for (const auto& f : classes) {
        const auto members = class_members(f, i);
        const std::set<Word> generated(members.begin(), members.end());
        const auto it = by_class.find(f.to_string());
        const std::set<Word> observed = it == by_class.end() ? std::set<Word>{} : it->second;
        covered += observed.size();
        rec.expect(generated == observed, "k=" + std::to_string(k) + ", i=" + std::to_string(i) +
                                              ": members of " + f.to_string() + " differ from enumeration");
        summed += class_word_count(f, i);
      }
      rec.expect(covered == words.size(), "k=" + std::to_string(k) + ", i=" + std::to_string(i) +
                                              ": words outside the enumerated classes");
      rec.expect(summed == words.size() && summed == n123_even(k, i),
                 "k=" + std::to_string(k) + ", i=" + std::to_string(i) + ": class sizes do not add up");
    }
  }
  return rec.finish();
}

SuiteReport verify_formulas() {
  Recorder rec("formulas");
  for (const auto& p : all_patterns()) {
    for (int k = 2; k <= 5; ++k) {
      for (int n = 0; n <= 9; ++n) {
        const auto predicted = predicted_count(p, k, n);
        const auto counted = count_avoiders(k, n, p, Orientation::UpDown);
        rec.expect(predicted.value == counted, p.to_string() + " " + at(k, n) + ": formula " +
                                                   predicted.value.str() + ", enumeration " + counted.str());
      }
    }
  }
  for (int k = 3; k <= 8; ++k) {
    for (int i = 1; i <= 10; ++i) {
      rec.expect(n123_even(k, i) == n123_even_narayana_sum(k, i), "n123 " + at(k, 2 * i));
    }
  }
  for (int k = 2; k <= 8; ++k) {
    for (int i = 0; i <= 8; ++i) rec.expect(a_even(k, i) == a_even_by_recurrence(k, i), "A_even " + at(k, 2 * i));
  }
  for (int k = 2; k <= 6; ++k) {
    const auto g132 = gf_coefficients(GfFamily::Consecutive132, k, 12);
    const auto g312 = gf_coefficients(GfFamily::Consecutive312, k, 12);
    for (int n = 0; n <= 12; ++n) {
      const ExactInt a = n % 2 == 0 ? a_even(k, n / 2) : a_odd(k, n / 2);
      rec.expect(g132[static_cast<std::size_t>(n)] == a, "132 series " + at(k, n));
      rec.expect(g312[static_cast<std::size_t>(n)] == n312(k, n), "312 series " + at(k, n));
    }
  }
  const auto p123 = VincularPattern::parse("123");
  for (int k = 2; k <= 5; ++k) {
    for (int l = 0; l <= 10; ++l) {
      std::uint64_t total = 0;
      for_each_alternating(k, static_cast<std::size_t>(l), Orientation::UpDown, [&](auto) { ++total; });
      rec.expect(m_count(k, l) == total, "M " + at(k, l) + " vs all up-down words");
      rec.expect(m_count(k, l) == count_avoiders(k, l, p123, Orientation::UpDown), "M " + at(k, l) + " vs 123");
    }
  }
  return rec.finish();
}

std::vector<SuiteReport> run_suites(std::string_view which) {
  std::vector<SuiteReport> out;
  const bool all = which == "all";
  if (!all && which != "tables" && which != "wilf" && which != "bijection" && which != "formulas") {
    throw std::invalid_argument("unknown suite '" + std::string(which) + "'");
  }
  if (all || which == "tables") out.push_back(verify_tables());
  if (all || which == "wilf") out.push_back(verify_wilf());
  if (all || which == "bijection") out.push_back(verify_bijection());
  if (all || which == "formulas") out.push_back(verify_formulas());
  return out;
}

}  // namespace altwords

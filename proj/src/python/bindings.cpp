#include "altwords/counting.hpp"
#include "altwords/formulas.hpp"
#include "altwords/structure.hpp"
#include "altwords/table_io.hpp"
#include "altwords/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace altwords;

namespace {

py::int_ to_py(const ExactInt& value) {
  const std::string digits = value.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

VincularPattern pattern_arg(const std::string& text) { return VincularPattern::parse(text); }

std::vector<int> letters(const Word& w) { return {w.letters().begin(), w.letters().end()}; }

CutClass class_arg(int k, const std::vector<std::pair<int, int>>& pairs) {
  CutClass f{k, {}};
  for (const auto& [b, t] : pairs) f.pairs.push_back({b, t});
  validate(f);
  return f;
}

std::vector<std::pair<int, int>> class_pairs(const CutClass& f) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : f.pairs) out.emplace_back(p.bottom, p.top);
  return out;
}

Parity parity_arg(const std::string& text) {
  if (text == "even") return Parity::Even;
  if (text == "odd") return Parity::Odd;
  throw std::invalid_argument("parity must be 'even' or 'odd'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pattern avoidance in alternating words";

  // words
  m.def("is_alternating", [](const std::vector<int>& w, const std::string& o) {
    return is_alternating(std::span<const int>(w), parse_orientation(o));
  }, py::arg("word"), py::arg("orientation") = "up-down");
  m.def("alternating_words", [](int k, int n, const std::string& o) {
    std::vector<std::vector<int>> out;
    for (const auto& w : enumerate_alternating(k, static_cast<std::size_t>(n), parse_orientation(o))) {
      out.push_back(letters(w));
    }
    return out;
  }, py::arg("k"), py::arg("n"), py::arg("orientation") = "up-down");

  // patterns and counting
  m.def("count_occurrences", [](const std::vector<int>& w, const std::string& p) {
    return count_occurrences(std::span<const int>(w), pattern_arg(p));
  }, py::arg("word"), py::arg("pattern"));
  m.def("avoids", [](const std::vector<int>& w, const std::string& p) {
    return avoids(std::span<const int>(w), pattern_arg(p));
  }, py::arg("word"), py::arg("pattern"));
  m.def("count_avoiders", [](int k, int n, const std::string& p, const std::string& o) {
    return to_py(count_avoiders(k, n, pattern_arg(p), parse_orientation(o)));
  }, py::arg("k"), py::arg("n"), py::arg("pattern"), py::arg("orientation") = "up-down");
  m.def("avoiders", [](int k, int n, const std::string& p, const std::string& o) {
    std::vector<std::vector<int>> out;
    for (const auto& w : avoiders(k, n, pattern_arg(p), parse_orientation(o))) out.push_back(letters(w));
    return out;
  }, py::arg("k"), py::arg("n"), py::arg("pattern"), py::arg("orientation") = "up-down");
  m.def("table", [](const std::string& p, int k_max, int n_max, const std::string& o) {
    const auto t = build_table(pattern_arg(p), parse_orientation(o), k_max, n_max);
    py::dict out;
    for (int k = t.k_min(); k <= t.k_max(); ++k) {
      for (int n = 0; n <= t.n_max(); ++n) out[py::make_tuple(k, n)] = to_py(t.at(k, n));
    }
    return out;
  }, py::arg("pattern"), py::arg("k_max"), py::arg("n_max"), py::arg("orientation") = "up-down");
  m.def("table_text", [](const std::string& p, int k_max, int n_max, const std::string& format,
                         const std::string& o) {
    return format_table(build_table(pattern_arg(p), parse_orientation(o), k_max, n_max),
                        parse_output_format(format));
  }, py::arg("pattern"), py::arg("k_max"), py::arg("n_max"), py::arg("format") = "plain",
     py::arg("orientation") = "up-down");
  m.def("wilf_partition", [](const std::vector<std::string>& names, int k_max, int n_max, const std::string& parity) {
    std::vector<VincularPattern> patterns;
    for (const auto& s : names) patterns.push_back(pattern_arg(s));
    std::vector<std::vector<std::string>> out;
    for (const auto& block : wilf_partition(patterns, Orientation::UpDown, k_max, n_max, parity_arg(parity))) {
      auto& names_out = out.emplace_back();
      for (const auto& p : block) names_out.push_back(p.to_string());
    }
    return out;
  }, py::arg("patterns"), py::arg("k_max"), py::arg("n_max"), py::arg("parity"));
  m.def("all_patterns", [] {
    std::vector<std::string> out;
    for (const auto& p : all_patterns()) out.push_back(p.to_string());
    return out;
  });

  // formulas
  m.def("binomial", [](long n, long k) { return to_py(binomial(n, k)); });
  m.def("catalan", [](long n) { return to_py(catalan(n)); });
  m.def("narayana", [](long n, long k) { return to_py(narayana(n, k)); });
  m.def("stirling2", [](long n, long k) { return to_py(stirling2(n, k)); });
  m.def("n123_even", [](int k, int i) { return to_py(n123_even(k, i)); });
  m.def("m_count", [](int k, int l) { return to_py(m_count(k, l)); });
  m.def("a_even", [](int k, int i) { return to_py(a_even(k, i)); });
  m.def("a_odd", [](int k, int i) { return to_py(a_odd(k, i)); });
  m.def("b_odd", [](int k, int i) { return to_py(b_odd(k, i)); });
  m.def("b_even", [](int k, int i) { return to_py(b_even(k, i)); });
  m.def("count_1_23_odd", [](int k, int i) { return to_py(count_1_23_odd(k, i)); });
  m.def("count_3_21", [](int k, int n) { return to_py(count_3_21(k, n)); });
  m.def("gf_coefficients", [](const std::string& family, int k, std::size_t max_exponent) {
    GfFamily f;
    if (family == "132") {
      f = GfFamily::Consecutive132;
    } else if (family == "312") {
      f = GfFamily::Consecutive312;
    } else {
      throw std::invalid_argument("family must be '132' or '312'");
    }
    const auto series = gf_coefficients(f, k, max_exponent);
    py::list out;
    for (const auto& c : series.coefficients()) out.append(to_py(c));
    return out;
  }, py::arg("family"), py::arg("k"), py::arg("max_exponent"));
  m.def("wilf_class", [](const std::string& p, const std::string& parity) {
    return std::string(1, wilf_class(pattern_arg(p), parity_arg(parity)));
  }, py::arg("pattern"), py::arg("parity"));
  m.def("predicted_count", [](const std::string& p, int k, int n) {
    const auto r = predicted_count(pattern_arg(p), k, n);
    py::dict out;
    out["value"] = to_py(r.value);
    out["closed_form"] = r.closed_form;
    out["wilf_class"] = std::string(1, r.wilf_class);
    out["rule"] = r.rule;
    return out;
  }, py::arg("pattern"), py::arg("k"), py::arg("n"));

  // structure
  m.def("cut_pairs", [](const std::vector<int>& w, int k) { return class_pairs(class_of(Word(w, k))); },
        py::arg("word"), py::arg("k"));
  m.def("enumerate_classes", [](int k) {
    std::vector<std::vector<std::pair<int, int>>> out;
    for (const auto& f : enumerate_classes(k)) out.push_back(class_pairs(f));
    return out;
  });
  m.def("class_to_dyck", [](int k, const std::vector<std::pair<int, int>>& pairs) {
    return class_to_dyck(class_arg(k, pairs)).steps();
  }, py::arg("k"), py::arg("pairs"));
  m.def("dyck_to_class", [](const std::string& path, int k) {
    return class_pairs(dyck_to_class(DyckPath(path), k));
  }, py::arg("path"), py::arg("k"));
  m.def("valleys", [](const std::string& path) { return valleys(DyckPath(path)); });
  m.def("class_word_count", [](int k, const std::vector<std::pair<int, int>>& pairs, int i) {
    return to_py(class_word_count(class_arg(k, pairs), i));
  }, py::arg("k"), py::arg("pairs"), py::arg("i"));
  m.def("class_members", [](int k, const std::vector<std::pair<int, int>>& pairs, int i) {
    std::vector<std::vector<int>> out;
    for (const auto& w : class_members(class_arg(k, pairs), i)) out.push_back(letters(w));
    return out;
  }, py::arg("k"), py::arg("pairs"), py::arg("i"));

  m.def("verify", [](const std::string& suite) {
    py::dict out;
    for (const auto& r : run_suites(suite)) {
      py::dict entry;
      entry["passed"] = r.passed();
      entry["checks"] = r.checks;
      entry["failures"] = r.failures;
      entry["seconds"] = r.seconds;
      out[py::str(r.name)] = entry;
    }
    return out;
  }, py::arg("suite") = "all");
}

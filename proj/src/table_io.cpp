#include "altwords/table_io.hpp"

#include "altwords/formulas.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace altwords {

using nlohmann::json;

OutputFormat parse_output_format(std::string_view text) {
  if (text == "plain" || text == "text") return OutputFormat::Plain;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format '" + std::string(text) + "'");
}

bool seed_convention_differs(const VincularPattern& p, Orientation o, int n) {
  return n == 1 && o == Orientation::UpDown && wilf_class(p, Parity::Odd) == 'D';
}

std::string to_plain(const CountTable& table) {
  std::vector<std::vector<std::string>> cells;
  bool any_flag = false;
  std::vector<std::string> header{"k\\n"};
  for (int n = 0; n <= table.n_max(); ++n) header.push_back(std::to_string(n));
  cells.push_back(header);
  for (int k = table.k_min(); k <= table.k_max(); ++k) {
    std::vector<std::string> row{std::to_string(k)};
    for (int n = 0; n <= table.n_max(); ++n) {
      std::string cell = table.at(k, n).str();
      if (seed_convention_differs(table.pattern(), table.orientation(), n)) {
        cell += '*';
        any_flag = true;
      }
      row.push_back(cell);
    }
    cells.push_back(row);
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }

  std::ostringstream out;
  out << "pattern " << table.pattern().to_string() << ", " << to_string(table.orientation()) << "\n";
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << "\n";
  }
  if (any_flag) out << "* actual count k; the 312 recurrence is seeded with B_{k,1} = k - 1\n";
  return out.str();
}

std::string to_csv(const CountTable& table) {
  std::ostringstream out;
  out << "k,n,count\n";
  for (int k = table.k_min(); k <= table.k_max(); ++k) {
    for (int n = 0; n <= table.n_max(); ++n) out << k << ',' << n << ',' << table.at(k, n).str() << "\n";
  }
  return out.str();
}

namespace {

json count_to_json(const ExactInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return value.convert_to<std::uint64_t>();
  }
  return value.str();
}

ExactInt count_from_json(const json& value) {
  if (value.is_number_unsigned()) return ExactInt(value.get<std::uint64_t>());
  if (value.is_number_integer()) return ExactInt(value.get<std::int64_t>());
  if (value.is_string()) return ExactInt(value.get<std::string>());
  throw std::invalid_argument("count must be an integer or a decimal string");
}

}  // namespace

std::string to_json(const CountTable& table) {
  json entries = json::array();
  for (int k = table.k_min(); k <= table.k_max(); ++k) {
    for (int n = 0; n <= table.n_max(); ++n) {
      entries.push_back({{"k", k},
                         {"n", n},
                         {"count", count_to_json(table.at(k, n))},
                         {"seed_convention_differs",
                          seed_convention_differs(table.pattern(), table.orientation(), n)}});
    }
  }
  json doc{{"pattern", table.pattern().to_string()},
           {"orientation", std::string(to_string(table.orientation()))},
           {"entries", entries}};
  return doc.dump(2) + "\n";
}

CountTable table_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const auto pattern = VincularPattern::parse(doc.at("pattern").get<std::string>());
    const auto orientation = parse_orientation(doc.at("orientation").get<std::string>());
    std::map<std::pair<int, int>, ExactInt> values;
    for (const auto& entry : doc.at("entries")) {
      values[{entry.at("k").get<int>(), entry.at("n").get<int>()}] = count_from_json(entry.at("count"));
    }
    if (values.empty()) throw std::invalid_argument("table has no entries");
    int k_min = std::numeric_limits<int>::max();
    int k_max = std::numeric_limits<int>::min();
    int n_max = 0;
    for (const auto& [key, value] : values) {
      k_min = std::min(k_min, key.first);
      k_max = std::max(k_max, key.first);
      n_max = std::max(n_max, key.second);
    }
    CountTable table(pattern, orientation, k_min, k_max, n_max);
    if (values.size() != static_cast<std::size_t>(k_max - k_min + 1) * static_cast<std::size_t>(n_max + 1)) {
      throw std::invalid_argument("table grid is incomplete");
    }
    for (const auto& [key, value] : values) table.set(key.first, key.second, value);
    return table;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed table JSON: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("table entry out of range: ") + e.what());
  }
}

std::string format_table(const CountTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv:
      return to_csv(table);
    case OutputFormat::Json:
      return to_json(table);
    case OutputFormat::Plain:
      break;
  }
  return to_plain(table);
}

}  // namespace altwords

#pragma once

#include "altwords/counting.hpp"

#include <string>
#include <string_view>

namespace altwords {

enum class OutputFormat { Plain, Csv, Json };

OutputFormat parse_output_format(std::string_view text);

/// True for the length-1 entries of patterns counted by the 312 recurrence, whose
/// seed B_{k,1} = k - 1 is one less than the actual count k.
bool seed_convention_differs(const VincularPattern& p, Orientation o, int n);

/// Grid with one row per k and one column per n; flagged entries carry a '*'.
std::string to_plain(const CountTable& table);
/// Header "k,n,count" followed by one row per entry, k-major.
std::string to_csv(const CountTable& table);
/// {"pattern", "orientation", "entries": [{"k", "n", "count", "seed_convention_differs"}]}
std::string to_json(const CountTable& table);
/// Reads the to_json layout back. Throws std::invalid_argument on malformed input or
/// an incomplete grid.
CountTable table_from_json(std::string_view text);

std::string format_table(const CountTable& table, OutputFormat format);

}  // namespace altwords

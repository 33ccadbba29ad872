#pragma once

#include "altwords/word.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace altwords {

/// A length-3 pattern with distinct letters. glue[i] requires pattern positions
/// i and i + 1 to land on adjacent positions of the host word.
///
/// Text syntax: dash-separated blocks of digits, letters inside a block glued.
/// "1-2-3" is the classical pattern 123, "132" the consecutive pattern, "1-32" has
/// the last two letters adjacent and "13-2" the first two.
struct VincularPattern {
  std::array<int, 3> letters{1, 2, 3};
  std::array<bool, 2> glue{false, false};

  static VincularPattern parse(std::string_view text);
  std::string to_string() const;

  bool is_classical() const { return !glue[0] && !glue[1]; }
  bool is_consecutive() const { return glue[0] && glue[1]; }

  friend bool operator==(const VincularPattern&, const VincularPattern&) = default;
  friend auto operator<=>(const VincularPattern&, const VincularPattern&) = default;
};

/// Pattern whose occurrences are the reversals of occurrences of p.
VincularPattern reverse(const VincularPattern& p);
/// Letters x -> 4 - x, glue unchanged.
VincularPattern complement(const VincularPattern& p);

/// All 24 length-3 patterns with distinct letters: for each letter order, the
/// classical form, both one-dash forms and the consecutive form.
std::array<VincularPattern, 24> all_patterns();

namespace detail {

/// Generic occurrence search for a pattern of any length with adjacency flags
/// (glue.size() == pattern.size() - 1). If `last` is set, only occurrences whose
/// final letter sits at host index *last are considered (and host indices beyond it
/// are ignored). `on_match` returns false to stop the search.
template <class OnMatch>
void for_each_occurrence(std::span<const int> host, std::span<const int> pattern,
                         std::span<const bool> glue, std::ptrdiff_t last, OnMatch&& on_match) {
  const std::size_t m = pattern.size();
  if (m == 0 || host.size() < m) return;
  const std::size_t limit = last >= 0 ? static_cast<std::size_t>(last) + 1 : host.size();
  std::array<std::size_t, 8> chosen{};
  bool stop = false;
  auto place = [&](auto& self, std::size_t q, std::size_t from) -> void {
    if (stop) return;
    std::size_t lo = from;
    std::size_t hi = limit;  // exclusive
    if (q > 0 && glue[q - 1]) hi = std::min(hi, from + 1);
    if (q + 1 == m && last >= 0) {
      if (static_cast<std::size_t>(last) < lo || static_cast<std::size_t>(last) >= hi) return;
      lo = static_cast<std::size_t>(last);
      hi = lo + 1;
    }
    // Leave room for the remaining pattern positions.
    if (limit < m - q) return;
    hi = std::min(hi, limit - (m - q - 1));
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const int x = host[idx];
      bool ok = true;
      for (std::size_t r = 0; r < q && ok; ++r) {
        const int y = host[chosen[r]];
        ok = (pattern[r] < pattern[q]) ? (y < x) : (y > x);
      }
      if (!ok) continue;
      chosen[q] = idx;
      if (q + 1 == m) {
        if (!on_match(std::span<const std::size_t>(chosen.data(), m))) {
          stop = true;
          return;
        }
      } else {
        self(self, q + 1, idx + 1);
        if (stop) return;
      }
    }
  };
  place(place, 0, 0);
}

}  // namespace detail

std::uint64_t count_occurrences(std::span<const int> host, const VincularPattern& p);
inline std::uint64_t count_occurrences(const Word& w, const VincularPattern& p) {
  return count_occurrences(w.letters(), p);
}

bool avoids(std::span<const int> host, const VincularPattern& p);
inline bool avoids(const Word& w, const VincularPattern& p) { return avoids(w.letters(), p); }

/// True iff some occurrence of p ends exactly at the last letter of `host`.
/// A prefix that avoids p stays avoiding after one extension exactly when this is
/// false for the extended prefix.
bool occurs_at_end(std::span<const int> host, const VincularPattern& p);

}  // namespace altwords

#include "altwords/pattern.hpp"

#include <stdexcept>

namespace altwords {

VincularPattern VincularPattern::parse(std::string_view text) {
  VincularPattern p;
  std::size_t count = 0;
  bool block_start = true;
  std::array<bool, 4> seen{};
  for (char c : text) {
    if (c == '-') {
      if (block_start) throw std::invalid_argument("pattern '" + std::string(text) + "': empty block");
      block_start = true;
      continue;
    }
    if (c < '1' || c > '3') {
      throw std::invalid_argument("pattern '" + std::string(text) + "': letters must be 1, 2 or 3");
    }
    if (count == 3) throw std::invalid_argument("pattern '" + std::string(text) + "': longer than 3");
    const int letter = c - '0';
    if (seen[letter]) throw std::invalid_argument("pattern '" + std::string(text) + "': repeated letter");
    seen[letter] = true;
    if (count > 0) p.glue[count - 1] = !block_start;
    p.letters[count++] = letter;
    block_start = false;
  }
  if (block_start) throw std::invalid_argument("pattern '" + std::string(text) + "': empty block");
  if (count != 3) throw std::invalid_argument("pattern '" + std::string(text) + "': need exactly 1, 2, 3");
  return p;
}

std::string VincularPattern::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i > 0 && !glue[i - 1]) out += '-';
    out += static_cast<char>('0' + letters[i]);
  }
  return out;
}

VincularPattern reverse(const VincularPattern& p) {
  return {{p.letters[2], p.letters[1], p.letters[0]}, {p.glue[1], p.glue[0]}};
}

VincularPattern complement(const VincularPattern& p) {
  return {{4 - p.letters[0], 4 - p.letters[1], 4 - p.letters[2]}, p.glue};
}

std::array<VincularPattern, 24> all_patterns() {
  static constexpr std::array<std::array<int, 3>, 6> orders{
      {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
  static constexpr std::array<std::array<bool, 2>, 4> glues{
      {{true, true}, {false, true}, {true, false}, {false, false}}};
  std::array<VincularPattern, 24> out;
  std::size_t i = 0;
  for (const auto& g : glues) {
    for (const auto& letters : orders) out[i++] = {letters, g};
  }
  return out;
}

std::uint64_t count_occurrences(std::span<const int> host, const VincularPattern& p) {
  std::uint64_t count = 0;
  detail::for_each_occurrence(host, p.letters, p.glue, -1, [&](auto) {
    ++count;
    return true;
  });
  return count;
}

bool avoids(std::span<const int> host, const VincularPattern& p) {
  bool found = false;
  detail::for_each_occurrence(host, p.letters, p.glue, -1, [&](auto) {
    found = true;
    return false;
  });
  return !found;
}

bool occurs_at_end(std::span<const int> host, const VincularPattern& p) {
  if (host.size() < 3) return false;
  bool found = false;
  detail::for_each_occurrence(host, p.letters, p.glue, static_cast<std::ptrdiff_t>(host.size()) - 1,
                              [&](auto) {
                                found = true;
                                return false;
                              });
  return found;
}

}  // namespace altwords

#pragma once

// Independent reference implementations used only by the tests. Everything here is
// deliberately naive: raw k^n products, triple loops, exhaustive bit strings.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

// Every word in [k]^n, lexicographic.
inline std::vector<std::vector<int>> all_words(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  while (true) {
    out.push_back(w);
    int pos = n - 1;
    while (pos >= 0 && w[static_cast<std::size_t>(pos)] == k) w[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++w[static_cast<std::size_t>(pos)];
  }
  return out;
}

inline bool up_down(const std::vector<int>& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (i % 2 == 0 && !(w[i] < w[i + 1])) return false;
    if (i % 2 == 1 && !(w[i] > w[i + 1])) return false;
  }
  return true;
}

inline bool down_up(const std::vector<int>& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (i % 2 == 0 && !(w[i] > w[i + 1])) return false;
    if (i % 2 == 1 && !(w[i] < w[i + 1])) return false;
  }
  return true;
}

inline std::vector<std::vector<int>> up_down_words(int k, int n) {
  std::vector<std::vector<int>> out;
  for (auto& w : all_words(k, n)) {
    if (up_down(w)) out.push_back(w);
  }
  return out;
}

// Triple loop over all index triples; glue[j] forces positions j and j+1 adjacent.
inline std::uint64_t occurrences(const std::vector<int>& w, std::array<int, 3> p, std::array<bool, 2> glue) {
  std::uint64_t count = 0;
  const std::size_t n = w.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        if (glue[0] && b != a + 1) continue;
        if (glue[1] && c != b + 1) continue;
        const std::array<int, 3> x{w[a], w[b], w[c]};
        bool ok = true;
        for (int s = 0; s < 3; ++s) {
          for (int t = 0; t < 3; ++t) {
            if (p[s] < p[t] && !(x[s] < x[t])) ok = false;
          }
        }
        if (ok) ++count;
      }
    }
  }
  return count;
}

inline std::uint64_t count_up_down_avoiders(int k, int n, std::array<int, 3> p, std::array<bool, 2> glue) {
  std::uint64_t count = 0;
  for (auto& w : up_down_words(k, n)) {
    if (occurrences(w, p, glue) == 0) ++count;
  }
  return count;
}

// All Dyck paths of semi-length n, by filtering every U/D string.
inline std::vector<std::string> dyck_paths(int n) {
  std::vector<std::string> out;
  const int len = 2 * n;
  for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
    std::string s;
    int height = 0;
    bool ok = true;
    for (int i = len - 1; i >= 0 && ok; --i) {
      const bool up = (bits >> i) & 1u;
      s += up ? 'U' : 'D';
      height += up ? 1 : -1;
      ok = height >= 0;
    }
    if (ok && height == 0) out.push_back(s);
  }
  return out;
}

inline std::uint64_t pascal(int n, int m) {
  if (n < 0 || m < 0 || m > n) return 0;
  std::vector<std::uint64_t> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(r + 1), 1);
    for (int c = 1; c < r; ++c) next[static_cast<std::size_t>(c)] = row[static_cast<std::size_t>(c - 1)] + row[static_cast<std::size_t>(c)];
    row = next;
  }
  return row[static_cast<std::size_t>(m)];
}

// Set partitions of [n] into exactly m blocks, counted through restricted growth strings.
inline std::uint64_t set_partitions(int n, int m) {
  std::uint64_t count = 0;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto go = [&](auto& self, int pos, int blocks) -> void {
    if (pos == n) {
      if (blocks == m) ++count;
      return;
    }
    for (int b = 0; b <= blocks && b < m; ++b) {
      rgs[static_cast<std::size_t>(pos)] = b;
      self(self, pos + 1, std::max(blocks, b + 1));
    }
  };
  go(go, 0, 0);
  return count;
}

}  // namespace oracle

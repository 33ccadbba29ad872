#include "altwords/counting.hpp"

#include <cstdint>
#include <stdexcept>

namespace altwords {

namespace {

void check_args(int k, int n) {
  if (k < 1) throw std::invalid_argument("alphabet size must be positive");
  if (n < 0) throw std::invalid_argument("length must be nonnegative");
}

}  // namespace

ExactInt count_avoiders(int k, int n, const VincularPattern& p, Orientation o) {
  check_args(k, n);
  std::uint64_t count = 0;
  for_each_alternating(
      k, static_cast<std::size_t>(n), o,
      [&](std::span<const int> prefix) { return !occurs_at_end(prefix, p); },
      [&](std::span<const int>) { ++count; });
  return count;
}

std::vector<Word> avoiders(int k, int n, const VincularPattern& p, Orientation o) {
  check_args(k, n);
  std::vector<Word> out;
  for_each_alternating(
      k, static_cast<std::size_t>(n), o,
      [&](std::span<const int> prefix) { return !occurs_at_end(prefix, p); },
      [&](std::span<const int> w) { out.emplace_back(std::vector<int>(w.begin(), w.end()), k); });
  return out;
}

CountTable::CountTable(VincularPattern pattern, Orientation orientation, int k_min, int k_max, int n_max)
    : pattern_(pattern), orientation_(orientation), k_min_(k_min), k_max_(k_max), n_max_(n_max) {
  if (k_min < 1 || k_max < k_min || n_max < 0) throw std::invalid_argument("CountTable: bad ranges");
  entries_.assign(static_cast<std::size_t>(k_max - k_min + 1) * static_cast<std::size_t>(n_max + 1), 0);
}

std::size_t CountTable::index(int k, int n) const {
  if (k < k_min_ || k > k_max_ || n < 0 || n > n_max_) {
    throw std::out_of_range("CountTable: (" + std::to_string(k) + ", " + std::to_string(n) +
                            ") outside table");
  }
  return static_cast<std::size_t>(k - k_min_) * static_cast<std::size_t>(n_max_ + 1) +
         static_cast<std::size_t>(n);
}

const ExactInt& CountTable::at(int k, int n) const { return entries_[index(k, n)]; }

void CountTable::set(int k, int n, ExactInt value) { entries_[index(k, n)] = std::move(value); }

CountTable build_table(const VincularPattern& p, Orientation o, int k_max, int n_max) {
  if (k_max < 2) throw std::invalid_argument("build_table: k_max must be at least 2");
  CountTable table(p, o, 2, k_max, n_max);
  for (int k = 2; k <= k_max; ++k) {
    for (int n = 0; n <= n_max; ++n) table.set(k, n, count_avoiders(k, n, p, o));
  }
  return table;
}

std::optional<std::pair<int, int>> first_disagreement(const CountTable& a, const CountTable& b,
                                                      Parity parity) {
  const int k_lo = std::max(a.k_min(), b.k_min());
  const int k_hi = std::min(a.k_max(), b.k_max());
  const int n_hi = std::min(a.n_max(), b.n_max());
  const int n_lo = parity == Parity::Even ? 0 : 1;
  for (int k = k_lo; k <= k_hi; ++k) {
    for (int n = n_lo; n <= n_hi; n += 2) {
      if (a.at(k, n) != b.at(k, n)) return std::pair{k, n};
    }
  }
  return std::nullopt;
}

std::vector<std::vector<VincularPattern>> wilf_partition(const std::vector<VincularPattern>& patterns,
                                                         Orientation o, int k_max, int n_max,
                                                         Parity parity) {
  if (patterns.empty()) throw std::invalid_argument("wilf_partition: no patterns");
  std::vector<std::vector<VincularPattern>> blocks;
  std::vector<CountTable> representatives;
  for (const auto& p : patterns) {
    CountTable table = build_table(p, o, k_max, n_max);
    bool placed = false;
    for (std::size_t b = 0; b < blocks.size() && !placed; ++b) {
      if (!first_disagreement(representatives[b], table, parity)) {
        blocks[b].push_back(p);
        placed = true;
      }
    }
    if (!placed) {
      blocks.push_back({p});
      representatives.push_back(std::move(table));
    }
  }
  return blocks;
}

}  // namespace altwords

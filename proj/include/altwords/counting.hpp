#pragma once

#include "altwords/exact.hpp"
#include "altwords/pattern.hpp"
#include "altwords/word.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace altwords {

/// Number of alternating words of length n over [k] with orientation o that avoid p.
/// Depth-first enumeration; a prefix containing p is never extended.
ExactInt count_avoiders(int k, int n, const VincularPattern& p, Orientation o);

/// The avoiders themselves, in lexicographic order.
std::vector<Word> avoiders(int k, int n, const VincularPattern& p, Orientation o);

/// Exact counts N^p_{k,n} for 2 <= k <= k_max and 0 <= n <= n_max.
class CountTable {
 public:
  CountTable(VincularPattern pattern, Orientation orientation, int k_min, int k_max, int n_max);

  const VincularPattern& pattern() const { return pattern_; }
  Orientation orientation() const { return orientation_; }
  int k_min() const { return k_min_; }
  int k_max() const { return k_max_; }
  int n_max() const { return n_max_; }

  const ExactInt& at(int k, int n) const;
  void set(int k, int n, ExactInt value);

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  std::size_t index(int k, int n) const;

  VincularPattern pattern_;
  Orientation orientation_;
  int k_min_;
  int k_max_;
  int n_max_;
  std::vector<ExactInt> entries_;
};

CountTable build_table(const VincularPattern& p, Orientation o, int k_max, int n_max);

enum class Parity { Even, Odd };

/// First (k, n) with n of the given parity where the two tables differ.
std::optional<std::pair<int, int>> first_disagreement(const CountTable& a, const CountTable& b,
                                                      Parity parity);

/// Groups patterns whose tables agree on every (k, n) of the given parity in range.
/// Blocks and their members keep the order of first appearance in `patterns`.
std::vector<std::vector<VincularPattern>> wilf_partition(const std::vector<VincularPattern>& patterns,
                                                         Orientation o, int k_max, int n_max,
                                                         Parity parity);

}  // namespace altwords

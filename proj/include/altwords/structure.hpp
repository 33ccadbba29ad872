#pragma once

#include "altwords/exact.hpp"
#include "altwords/word.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace altwords {

// Cut-pair structure of 123-avoiding up-down words of even length.
//
// Such a word b1 t1 b2 t2 ... bi ti has weakly decreasing bottoms and tops. After
// collapsing runs of equal (b, t) pairs, a pair is a cut-pair when 1 < b < k-1,
// 2 < t < k, b exceeds every later bottom and t is below every earlier top. Words
// with the same cut-pairs form a class; the classes for alphabet [k] are in
// bijection with Dyck paths of semi-length k-2, cut-pairs corresponding to valleys.

struct CutPair {
  int bottom = 0;
  int top = 0;

  friend bool operator==(const CutPair&, const CutPair&) = default;
  friend auto operator<=>(const CutPair&, const CutPair&) = default;
};

/// Cut-pairs in left-to-right order; strictly decreasing in both coordinates.
struct CutClass {
  int k = 2;
  std::vector<CutPair> pairs;

  /// "{}" or "{34,23}" for k <= 9; pairs are written "(3,4)" for larger k.
  std::string to_string() const;

  friend bool operator==(const CutClass&, const CutClass&) = default;
};

/// Throws std::invalid_argument unless the chain fits alphabet [k].
void validate(const CutClass& f);

/// A balanced U/D sequence whose prefixes never have more D than U.
class DyckPath {
 public:
  DyckPath() = default;
  /// Throws std::invalid_argument on letters other than U/D or a non-Dyck sequence.
  explicit DyckPath(std::string steps);

  const std::string& steps() const { return steps_; }
  std::size_t semi_length() const { return steps_.size() / 2; }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::string steps_;
};

/// Number of DU factors.
std::size_t valleys(const DyckPath& path);

/// True iff w is up-down of even length with weakly decreasing bottoms and tops,
/// which characterizes 123-avoidance for such words.
bool is_123_avoiding_even_updown(const Word& w);

/// Throws std::invalid_argument for words outside S^{123}_{k,2i}.
std::vector<CutPair> cut_pairs(const Word& w);
CutClass class_of(const Word& w);

/// All classes for alphabet [k] (k >= 2), ordered by number of pairs and then
/// lexicographically on the pair list. There are C_{k-2} of them.
std::vector<CutClass> enumerate_classes(int k);

DyckPath class_to_dyck(const CutClass& f);
/// Inverse of class_to_dyck; the path must have semi-length k - 2.
CutClass dyck_to_class(const DyckPath& path, int k);

/// The 2k-3 pairs (b, t) along the path of the class, from (k-1, k) down to (1, 2).
/// Every word of the class is a concatenation of these pairs in this order, each
/// repeated any number of times, cut-pairs at least once.
std::vector<CutPair> pair_chain(const CutClass& f);

/// binom(2k-4+i-j, 2k-4) for a class with j pairs; 0 when j > i.
ExactInt class_word_count(const CutClass& f, int i);

/// Words of length 2i in the class, in lexicographic order.
std::vector<Word> class_members(const CutClass& f, int i);

}  // namespace altwords

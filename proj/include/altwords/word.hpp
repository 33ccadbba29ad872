#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace altwords {

enum class Orientation { UpDown, DownUp };

Orientation opposite(Orientation o);
std::string_view to_string(Orientation o);
Orientation parse_orientation(std::string_view text);

/// A word over the alphabet [k] = {1, ..., k}. Letters are stored 1-based.
class Word {
 public:
  Word() = default;
  /// Throws std::invalid_argument if k < 1 or any letter lies outside 1..k.
  Word(std::vector<int> letters, int alphabet_size);

  /// Accepts "1,2,1,4" always and the compact digit form "1214" when k <= 9.
  static Word parse(std::string_view text, int alphabet_size);

  int alphabet_size() const { return k_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const int> letters() const { return letters_; }
  int operator[](std::size_t i) const { return letters_[i]; }

  /// Compact digits for k <= 9, comma-separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_ <=> b.letters_; c != 0) return c;
    return a.k_ <=> b.k_;
  }

 private:
  std::vector<int> letters_;
  int k_ = 1;
};

/// Up-down words satisfy w1 < w2 > w3 < ...; down-up words the reverse chain.
/// Words of length 0 and 1 are alternating in both orientations.
bool is_alternating(std::span<const int> letters, Orientation o);
inline bool is_alternating(const Word& w, Orientation o) { return is_alternating(w.letters(), o); }

/// Relation required between positions i and i + 1: true for "<".
inline bool rises_after(std::size_t i, Orientation o) {
  return (i % 2 == 0) == (o == Orientation::UpDown);
}

Word complement(const Word& w);
Word reverse(const Word& w);

struct BottomsTops {
  std::vector<int> bottoms;
  std::vector<int> tops;
};

/// Splits an alternating word into its local minima and maxima. For up-down words
/// the bottoms sit at odd (1-based) positions. Throws std::invalid_argument if w is
/// not alternating in orientation o.
BottomsTops bottoms_tops(const Word& w, Orientation o);

/// Lazy lexicographic stream of the alternating words of length n over [k].
/// Each step extends the previous word in place; no raw k^n filtering happens.
class AlternatingWords {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Word;
    using difference_type = std::ptrdiff_t;
    using pointer = const Word*;
    using reference = const Word&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class AlternatingWords;
    iterator(int k, std::size_t n, Orientation o);
    bool fill_from(std::size_t pos);

    std::vector<int> buf_;
    Word current_;
    int k_ = 1;
    Orientation o_ = Orientation::UpDown;
    bool done_ = true;
  };

  AlternatingWords(int k, std::size_t n, Orientation o);

  iterator begin() const { return iterator(k_, n_, o_); }
  iterator end() const { return iterator(); }

 private:
  int k_;
  std::size_t n_;
  Orientation o_;
};

inline AlternatingWords enumerate_alternating(int k, std::size_t n, Orientation o) {
  return AlternatingWords(k, n, o);
}

/// Depth-first visitor over alternating words. `keep(prefix)` is consulted after
/// every extension; returning false prunes that branch. `visit(word)` receives each
/// complete word of length n whose prefixes were all kept.
template <class Keep, class Visit>
void for_each_alternating(int k, std::size_t n, Orientation o, Keep&& keep, Visit&& visit) {
  std::vector<int> buf(n);
  auto extend = [&](auto& self, std::size_t pos) -> void {
    if (pos == n) {
      visit(std::span<const int>(buf));
      return;
    }
    int lo = 1;
    int hi = k;
    if (pos > 0) {
      if (rises_after(pos - 1, o)) {
        lo = buf[pos - 1] + 1;
      } else {
        hi = buf[pos - 1] - 1;
      }
    }
    for (int v = lo; v <= hi; ++v) {
      buf[pos] = v;
      if (keep(std::span<const int>(buf.data(), pos + 1))) self(self, pos + 1);
    }
  };
  extend(extend, 0);
}

/// Visits every alternating word of length n over [k] in lexicographic order.
template <class Visit>
void for_each_alternating(int k, std::size_t n, Orientation o, Visit&& visit) {
  for_each_alternating(
      k, n, o, [](std::span<const int>) { return true; }, std::forward<Visit>(visit));
}

}  // namespace altwords

#include "altwords/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace altwords {

namespace {

std::string pair_text(const CutPair& p, int k) {
  if (k <= 9) return std::to_string(p.bottom) + std::to_string(p.top);
  return "(" + std::to_string(p.bottom) + "," + std::to_string(p.top) + ")";
}

std::vector<CutPair> word_pairs(const Word& w) {
  std::vector<CutPair> pairs;
  for (std::size_t j = 0; j + 1 < w.size(); j += 2) pairs.push_back({w[j], w[j + 1]});
  return pairs;
}

}  // namespace

std::string CutClass::to_string() const {
  std::string out = "{";
  for (std::size_t m = 0; m < pairs.size(); ++m) {
    if (m > 0) out += ',';
    out += pair_text(pairs[m], k);
  }
  return out + "}";
}

void validate(const CutClass& f) {
  if (f.k < 2) throw std::invalid_argument("cut class: alphabet size must be at least 2");
  for (std::size_t m = 0; m < f.pairs.size(); ++m) {
    const auto& p = f.pairs[m];
    if (!(1 < p.bottom && p.bottom < f.k - 1 && 2 < p.top && p.top < f.k && p.bottom < p.top)) {
      throw std::invalid_argument("cut class " + f.to_string() + ": pair out of bounds");
    }
    if (m > 0 && !(p.bottom < f.pairs[m - 1].bottom && p.top < f.pairs[m - 1].top)) {
      throw std::invalid_argument("cut class " + f.to_string() + ": pairs must strictly decrease");
    }
  }
}

DyckPath::DyckPath(std::string steps) : steps_(std::move(steps)) {
  long height = 0;
  for (char c : steps_) {
    if (c == 'U') {
      ++height;
    } else if (c == 'D') {
      if (--height < 0) throw std::invalid_argument("Dyck path '" + steps_ + "' goes below the axis");
    } else {
      throw std::invalid_argument("Dyck path '" + steps_ + "': steps must be U or D");
    }
  }
  if (height != 0) throw std::invalid_argument("Dyck path '" + steps_ + "' does not return to the axis");
}

std::size_t valleys(const DyckPath& path) {
  const auto& s = path.steps();
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) count += (s[i] == 'D' && s[i + 1] == 'U');
  return count;
}

bool is_123_avoiding_even_updown(const Word& w) {
  if (w.size() % 2 != 0 || !is_alternating(w, Orientation::UpDown)) return false;
  for (std::size_t j = 2; j + 1 < w.size(); j += 2) {
    if (w[j] > w[j - 2] || w[j + 1] > w[j - 1]) return false;
  }
  return true;
}

std::vector<CutPair> cut_pairs(const Word& w) {
  if (!is_123_avoiding_even_updown(w)) {
    throw std::invalid_argument("cut_pairs: " + w.to_string() +
                                " is not a 123-avoiding up-down word of even length");
  }
  const int k = w.alphabet_size();
  auto pairs = word_pairs(w);
  // Equal pairs are adjacent because both coordinates are weakly decreasing.
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  std::vector<CutPair> cuts;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    const auto [b, t] = pairs[j];
    if (!(1 < b && b < k - 1 && 2 < t && t < k)) continue;
    bool bottom_ok = std::all_of(pairs.begin() + static_cast<long>(j) + 1, pairs.end(),
                                 [&](const CutPair& later) { return b > later.bottom; });
    bool top_ok = std::all_of(pairs.begin(), pairs.begin() + static_cast<long>(j),
                              [&](const CutPair& earlier) { return t < earlier.top; });
    if (bottom_ok && top_ok) cuts.push_back(pairs[j]);
  }
  return cuts;
}

CutClass class_of(const Word& w) { return CutClass{w.alphabet_size(), cut_pairs(w)}; }

std::vector<CutClass> enumerate_classes(int k) {
  if (k < 2) throw std::invalid_argument("enumerate_classes: need k >= 2");
  std::vector<CutClass> out;
  CutClass current{k, {}};
  auto extend = [&](auto& self, int b_limit, int t_limit) -> void {
    out.push_back(current);
    for (int b = 2; b < b_limit; ++b) {
      for (int t = std::max(3, b + 1); t < t_limit; ++t) {
        current.pairs.push_back({b, t});
        self(self, b, t);
        current.pairs.pop_back();
      }
    }
  };
  extend(extend, k - 1, k);
  std::sort(out.begin(), out.end(), [](const CutClass& a, const CutClass& b) {
    if (a.pairs.size() != b.pairs.size()) return a.pairs.size() < b.pairs.size();
    return a.pairs < b.pairs;
  });
  return out;
}

DyckPath class_to_dyck(const CutClass& f) {
  validate(f);
  std::string steps;
  int prev_bottom = f.k - 1;
  int prev_top = f.k;
  for (const auto& p : f.pairs) {
    steps.append(static_cast<std::size_t>(prev_bottom - p.bottom), 'U');
    steps.append(static_cast<std::size_t>(prev_top - p.top), 'D');
    prev_bottom = p.bottom;
    prev_top = p.top;
  }
  steps.append(static_cast<std::size_t>(prev_bottom - 1), 'U');
  steps.append(static_cast<std::size_t>(prev_top - 2), 'D');
  return DyckPath(std::move(steps));
}

CutClass dyck_to_class(const DyckPath& path, int k) {
  if (k < 2 || path.semi_length() != static_cast<std::size_t>(k - 2)) {
    throw std::invalid_argument("dyck_to_class: path " + path.steps() + " must have semi-length k - 2 = " +
                                std::to_string(k - 2));
  }
  CutClass f{k, {}};
  const auto& s = path.steps();
  int ups = 0;
  int downs = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    s[i] == 'U' ? ++ups : ++downs;
    // A valley ends each up/down run except the last one.
    if (s[i] == 'D' && i + 1 < s.size() && s[i + 1] == 'U') f.pairs.push_back({k - 1 - ups, k - downs});
  }
  return f;
}

std::vector<CutPair> pair_chain(const CutClass& f) {
  const auto path = class_to_dyck(f);
  std::vector<CutPair> chain{{f.k - 1, f.k}};
  for (char step : path.steps()) {
    CutPair next = chain.back();
    (step == 'U' ? next.bottom : next.top) -= 1;
    chain.push_back(next);
  }
  return chain;
}

ExactInt class_word_count(const CutClass& f, int i) {
  validate(f);
  const long j = static_cast<long>(f.pairs.size());
  if (i < 0 || j > i) return 0;
  return binomial(2L * f.k - 4 + i - j, 2L * f.k - 4);
}

std::vector<Word> class_members(const CutClass& f, int i) {
  validate(f);
  if (i < 0) throw std::invalid_argument("class_members: length must be nonnegative");
  const auto chain = pair_chain(f);
  std::vector<std::size_t> mandatory;
  for (const auto& cut : f.pairs) {
    mandatory.push_back(static_cast<std::size_t>(std::find(chain.begin(), chain.end(), cut) - chain.begin()));
  }

  std::vector<Word> out;
  std::vector<int> letters;
  // Slots along the chain are used in nondecreasing order. A larger chain index is a
  // lexicographically smaller pair, so candidates are tried from the largest index down.
  auto extend = [&](auto& self, std::size_t placed, std::size_t from, std::size_t need) -> void {
    if (placed == static_cast<std::size_t>(i)) {
      if (need == mandatory.size()) out.emplace_back(letters, f.k);
      return;
    }
    const std::size_t hi = need < mandatory.size() ? mandatory[need] : chain.size() - 1;
    for (std::size_t c = hi + 1; c-- > from;) {
      const std::size_t next_need = (need < mandatory.size() && c == mandatory[need]) ? need + 1 : need;
      if (static_cast<std::size_t>(i) - placed - 1 < mandatory.size() - next_need) continue;
      letters.push_back(chain[c].bottom);
      letters.push_back(chain[c].top);
      self(self, placed + 1, c, next_need);
      letters.resize(letters.size() - 2);
    }
  };
  extend(extend, 0, 0, 0);
  return out;
}

}  // namespace altwords

#include "altwords/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace altwords {

Orientation opposite(Orientation o) {
  return o == Orientation::UpDown ? Orientation::DownUp : Orientation::UpDown;
}

std::string_view to_string(Orientation o) { return o == Orientation::UpDown ? "up-down" : "down-up"; }

Orientation parse_orientation(std::string_view text) {
  if (text == "up-down" || text == "updown" || text == "ud") return Orientation::UpDown;
  if (text == "down-up" || text == "downup" || text == "du") return Orientation::DownUp;
  throw std::invalid_argument("unknown orientation '" + std::string(text) + "'");
}

Word::Word(std::vector<int> letters, int alphabet_size) : letters_(std::move(letters)), k_(alphabet_size) {
  if (k_ < 1) throw std::invalid_argument("alphabet size must be positive");
  for (int letter : letters_) {
    if (letter < 1 || letter > k_) {
      throw std::invalid_argument("letter " + std::to_string(letter) + " outside alphabet [1, " +
                                  std::to_string(k_) + "]");
    }
  }
}

namespace {

int parse_letter(std::string_view token) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw std::invalid_argument("malformed letter '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Word Word::parse(std::string_view text, int alphabet_size) {
  std::vector<int> letters;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      auto comma = text.find(',', start);
      letters.push_back(parse_letter(text.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else if (alphabet_size <= 9) {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument(std::string("malformed letter '") + c + "'");
      letters.push_back(c - '0');
    }
  } else if (!text.empty()) {
    // Without commas a word over a large alphabet is a single letter.
    letters.push_back(parse_letter(text));
  }
  return Word(std::move(letters), alphabet_size);
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (k_ > 9) {
      if (i > 0) out += ',';
      out += std::to_string(letters_[i]);
    } else {
      out += static_cast<char>('0' + letters_[i]);
    }
  }
  return out;
}

bool is_alternating(std::span<const int> letters, Orientation o) {
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    bool ok = rises_after(i, o) ? letters[i] < letters[i + 1] : letters[i] > letters[i + 1];
    if (!ok) return false;
  }
  return true;
}

Word complement(const Word& w) {
  std::vector<int> out(w.letters().begin(), w.letters().end());
  for (int& letter : out) letter = w.alphabet_size() + 1 - letter;
  return Word(std::move(out), w.alphabet_size());
}

Word reverse(const Word& w) {
  std::vector<int> out(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(out), w.alphabet_size());
}

BottomsTops bottoms_tops(const Word& w, Orientation o) {
  if (!is_alternating(w, o)) {
    throw std::invalid_argument("bottoms_tops: " + w.to_string() + " is not " +
                                std::string(to_string(o)));
  }
  BottomsTops out;
  // Up-down: even 0-based indices are valleys. Down-up: odd ones.
  std::size_t first_bottom = o == Orientation::UpDown ? 0 : 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    ((i % 2 == first_bottom % 2) ? out.bottoms : out.tops).push_back(w[i]);
  }
  return out;
}

AlternatingWords::AlternatingWords(int k, std::size_t n, Orientation o) : k_(k), n_(n), o_(o) {
  if (k < 1) throw std::invalid_argument("alphabet size must be positive");
}

AlternatingWords::iterator::iterator(int k, std::size_t n, Orientation o)
    : buf_(n), k_(k), o_(o), done_(false) {
  if (!fill_from(0)) {
    done_ = true;
    return;
  }
  current_ = Word(buf_, k_);
}

namespace {

// Admissible range for position pos given the letter before it and the requirement
// that the following step can still be taken.
std::pair<int, int> admissible(const std::vector<int>& buf, std::size_t pos, int k, Orientation o) {
  int lo = 1;
  int hi = k;
  if (pos > 0) {
    if (rises_after(pos - 1, o)) {
      lo = buf[pos - 1] + 1;
    } else {
      hi = buf[pos - 1] - 1;
    }
  }
  if (pos + 1 < buf.size()) {
    if (rises_after(pos, o)) {
      hi = std::min(hi, k - 1);
    } else {
      lo = std::max(lo, 2);
    }
  }
  return {lo, hi};
}

}  // namespace

bool AlternatingWords::iterator::fill_from(std::size_t pos) {
  for (; pos < buf_.size(); ++pos) {
    auto [lo, hi] = admissible(buf_, pos, k_, o_);
    if (lo > hi) return false;
    buf_[pos] = lo;
  }
  return true;
}

AlternatingWords::iterator& AlternatingWords::iterator::operator++() {
  if (done_) return *this;
  for (std::size_t pos = buf_.size(); pos-- > 0;) {
    auto [lo, hi] = admissible(buf_, pos, k_, o_);
    if (buf_[pos] < hi) {
      ++buf_[pos];
      // Every admissible letter leaves the greedy completion feasible.
      fill_from(pos + 1);
      current_ = Word(buf_, k_);
      return *this;
    }
  }
  done_ = true;
  return *this;
}

}  // namespace altwords

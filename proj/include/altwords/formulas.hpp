#pragma once

#include "altwords/counting.hpp"
#include "altwords/exact.hpp"
#include "altwords/pattern.hpp"
#include "altwords/power_series.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace altwords {

// 123-avoiding up-down words of length 2i over [k].

/// (1/(i+1)) binom(i+k-2, i) binom(i+k-1, i). The value is checked against
/// n123_even_narayana_sum and a mismatch throws std::logic_error.
ExactInt n123_even(int k, int i);
/// sum_{j=0}^{k-2} N_{k-2,j} binom(2k-4+i-j, 2k-4): the class-by-class count.
/// The j = k - 2 term vanishes except at k = 2.
ExactInt n123_even_narayana_sum(int k, int i);

/// Number of up-down words of length l over [k] (no length-3 consecutive monotone
/// factor can occur in them). Recurrence in k with M_{k,0}=1, M_{k,1}=k, M_{2,l}=1.
ExactInt m_count(int k, int l);

// Up-down words avoiding the consecutive pattern 132.

/// A_{k,2i} = S(k+i-1, k-1).
ExactInt a_even(int k, int i);
/// A_{k,2i} from A_{k,2i} = A_{k-1,2i} + (k-1) A_{k,2i-2}.
ExactInt a_even_by_recurrence(int k, int i);
/// A_{k,2i+1} = sum_{j=2}^{k} A_{j,2i} for i >= 1; a_odd(k, 0) = k.
ExactInt a_odd(int k, int i);

// Up-down words avoiding the consecutive pattern 312.

/// B_{k,2i+1} = B_{k-1,2i+1} + (k-1) B_{k,2i-1}, B_{1,2i+1} = 0. b_odd(k, 0) is the
/// bookkeeping value B_{k,1} = k - 1, one less than the number of length-1 words.
ExactInt b_odd(int k, int i);
/// B_{k,2i} = sum_{j=2}^{k} b_odd(j, i-1) for i >= 1 (which gives binom(k,2) at i = 1).
ExactInt b_even(int k, int i);
/// True count of 312-avoiding up-down words of length n, i.e. k at n = 1.
ExactInt n312(int k, int n);

enum class GfFamily { Consecutive132, Consecutive312 };

/// Truncated generating function sum_n N^p_{k,n} x^n built from the product form
///   132: sum_{j=1}^{k} (x + [j=k]) / prod_{m=1}^{j-1} (1 - m x^2)
///   312: 1 + x + sum_{j=2}^{k} sum_{i=1}^{j-1} (x^2 + x [j=k]) / prod_{m=i}^{j-1} (1 - m x^2)
/// with every factor expanded as a geometric series. Throws for k < 2.
PowerSeries gf_coefficients(GfFamily family, int k, std::size_t max_exponent);

/// Up-down words of length 2i+1 avoiding 1-23:
///   A_{k,2i+1} + sum_{j=1}^{k-1} binom(k-j, 2) A_{k-j+1, 2i-2}.
ExactInt count_1_23_odd(int k, int i);

/// Up-down words of length n avoiding 3-21. Odd n: equal to the 312 count at the same
/// length. Even n >= 4:
///   N^{312}_{k,n} + sum_{j=2}^{k} binom(j-1, 2) (N^{312}_{j,n-3} - [n = 4])
/// where N^{312}_{j,1} = j. n = 0 gives 1; n = 2 is counted by enumeration.
ExactInt count_3_21(int k, int n);

// Wilf classes and the formula dispatch.

/// Letter class of a pattern for one length parity. Letters A..N, K, L follow the
/// standard overview table for the 18 non-classical patterns. Classical letters are
/// not in that table: five classical patterns are N at even length, 321 gets its own
/// letter P, and at odd length 1-3-2, 2-3-1 fall in G while 1-2-3, 2-1-3, 3-1-2, 3-2-1
/// fall in H.
/// The odd-length classical letters are observed by enumeration (k <= 7, n <= 13),
/// not proved. G, H and P have no closed form.
struct WilfEntry {
  std::string_view pattern;
  char even;
  char odd;
  bool from_overview_table;
};

const std::array<WilfEntry, 24>& wilf_catalog();
char wilf_class(const VincularPattern& p, Parity parity);

struct Prediction {
  ExactInt value;
  /// False when no closed form is known and the value came from enumeration.
  bool closed_form = true;
  char wilf_class = '?';
  std::string rule;
};

/// Count of up-down words of length n over [k] avoiding p, routed through the
/// pattern's Wilf class to its formula. k >= 2, n >= 0.
Prediction predicted_count(const VincularPattern& p, int k, int n);

}  // namespace altwords

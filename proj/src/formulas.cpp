#include "altwords/formulas.hpp"

#include <stdexcept>
#include <vector>

namespace altwords {

namespace {

void require(bool condition, const char* what) {
  if (!condition) throw std::invalid_argument(what);
}

using Grid = std::vector<std::vector<ExactInt>>;

Grid make_grid(int rows, int cols) {
  return Grid(static_cast<std::size_t>(rows) + 1, std::vector<ExactInt>(static_cast<std::size_t>(cols) + 1, 0));
}

// B_{kk, 2ii+1} for 1 <= kk <= k, 0 <= ii <= i, with B_{kk,1} = kk - 1.
Grid b_odd_table(int k, int i) {
  Grid b = make_grid(k, i);
  for (int kk = 1; kk <= k; ++kk) {
    b[kk][0] = kk - 1;
    for (int ii = 1; ii <= i; ++ii) b[kk][ii] = kk == 1 ? ExactInt(0) : ExactInt(b[kk - 1][ii] + (kk - 1) * b[kk][ii - 1]);
  }
  return b;
}

}  // namespace

ExactInt n123_even_narayana_sum(int k, int i) {
  require(k >= 2 && i >= 0, "n123_even_narayana_sum: need k >= 2, i >= 0");
  ExactInt total = 0;
  // j = k - 2 only contributes at k = 2, where the single empty class has N_{0,0} = 1
  for (int j = 0; j <= k - 2; ++j) total += narayana(k - 2, j) * binomial(2 * k - 4 + i - j, 2 * k - 4);
  return total;
}

ExactInt n123_even(int k, int i) {
  require(k >= 2 && i >= 0, "n123_even: need k >= 2, i >= 0");
  ExactInt closed = divide_exact(binomial(i + k - 2, i) * binomial(i + k - 1, i), i + 1);
  const ExactInt summed = n123_even_narayana_sum(k, i);
  if (summed != closed) {
    throw std::logic_error("n123_even: closed form " + closed.str() + " != class sum " + summed.str());
  }
  return closed;
}

ExactInt m_count(int k, int l) {
  require(k >= 2 && l >= 0, "m_count: need k >= 2, l >= 0");
  Grid m = make_grid(k, l);
  for (int kk = 2; kk <= k; ++kk) {
    for (int ll = 0; ll <= l; ++ll) {
      if (ll == 0) {
        m[kk][ll] = 1;
      } else if (ll == 1) {
        m[kk][ll] = kk;
      } else if (kk == 2) {
        m[kk][ll] = 1;
      } else {
        ExactInt value = m[kk - 1][ll];
        for (int ii = 0; ii <= (ll - 1) / 2; ++ii) value += m[kk - 1][2 * ii] * m[kk][ll - 2 * ii - 1];
        if (ll % 2 == 0) value -= m[kk - 1][ll - 2];
        m[kk][ll] = value;
      }
    }
  }
  return m[k][l];
}

ExactInt a_even(int k, int i) {
  require(k >= 1 && i >= 0, "a_even: need k >= 1, i >= 0");
  return stirling2(k + i - 1, k - 1);
}

ExactInt a_even_by_recurrence(int k, int i) {
  require(k >= 2 && i >= 0, "a_even_by_recurrence: need k >= 2, i >= 0");
  Grid a = make_grid(k, i);
  for (int kk = 2; kk <= k; ++kk) {
    for (int ii = 0; ii <= i; ++ii) {
      a[kk][ii] = (kk == 2 || ii == 0) ? ExactInt(1) : ExactInt(a[kk - 1][ii] + (kk - 1) * a[kk][ii - 1]);
    }
  }
  return a[k][i];
}

ExactInt a_odd(int k, int i) {
  require(k >= 1 && i >= 0, "a_odd: need k >= 1, i >= 0");
  if (i == 0) return k;
  ExactInt total = 0;
  for (int j = 2; j <= k; ++j) total += a_even(j, i);
  return total;
}

ExactInt b_odd(int k, int i) {
  require(k >= 1 && i >= 0, "b_odd: need k >= 1, i >= 0");
  return b_odd_table(k, i)[k][i];
}

ExactInt b_even(int k, int i) {
  require(k >= 1 && i >= 0, "b_even: need k >= 1, i >= 0");
  if (i == 0) return 1;
  Grid b = b_odd_table(k, i - 1);
  ExactInt total = 0;
  for (int j = 2; j <= k; ++j) total += b[j][i - 1];
  return total;
}

ExactInt n312(int k, int n) {
  require(k >= 1 && n >= 0, "n312: need k >= 1, n >= 0");
  if (n == 0) return 1;
  if (n == 1) return k;
  return n % 2 == 1 ? b_odd(k, (n - 1) / 2) : b_even(k, n / 2);
}

PowerSeries gf_coefficients(GfFamily family, int k, std::size_t max_exponent) {
  require(k >= 2, "gf_coefficients: need k >= 2");
  const auto x = PowerSeries::monomial(1, 1, max_exponent);
  const auto x2 = PowerSeries::monomial(1, 2, max_exponent);
  const auto one = PowerSeries::constant(1, max_exponent);
  // prod_{m=lo}^{hi} 1 / (1 - m x^2)
  auto inverse_product = [&](int lo, int hi) {
    PowerSeries s = one;
    for (int m = lo; m <= hi; ++m) s *= PowerSeries::geometric(m, 2, max_exponent);
    return s;
  };

  PowerSeries total(max_exponent);
  if (family == GfFamily::Consecutive132) {
    for (int j = 1; j <= k; ++j) {
      PowerSeries numerator = j == k ? x + one : x;
      total += numerator * inverse_product(1, j - 1);
    }
  } else {
    total = one + x;
    for (int j = 2; j <= k; ++j) {
      PowerSeries numerator = j == k ? x2 + x : x2;
      for (int i = 1; i <= j - 1; ++i) total += numerator * inverse_product(i, j - 1);
    }
  }
  return total;
}

ExactInt count_1_23_odd(int k, int i) {
  require(k >= 2 && i >= 1, "count_1_23_odd: need k >= 2, i >= 1");
  ExactInt total = a_odd(k, i);
  for (int j = 1; j <= k - 1; ++j) total += binomial(k - j, 2) * a_even(k - j + 1, i - 1);
  return total;
}

ExactInt count_3_21(int k, int n) {
  require(k >= 2 && n >= 0, "count_3_21: need k >= 2, n >= 0");
  if (n % 2 == 1) return n312(k, n);
  if (n == 0) return 1;
  if (n == 2) return count_avoiders(k, 2, VincularPattern::parse("3-21"), Orientation::UpDown);
  ExactInt total = n312(k, n);
  const int delta = n == 4 ? 1 : 0;
  for (int j = 2; j <= k; ++j) total += binomial(j - 1, 2) * (n312(j, n - 3) - delta);
  return total;
}

const std::array<WilfEntry, 24>& wilf_catalog() {
  static const std::array<WilfEntry, 24> catalog{{
      {"123", 'K', 'L', true},   {"132", 'A', 'B', true},   {"213", 'A', 'D', true},
      {"231", 'C', 'B', true},   {"312", 'C', 'D', true},   {"321", 'K', 'L', true},
      {"1-23", 'A', 'F', true},  {"1-32", 'A', 'B', true},  {"2-13", 'N', 'H', true},
      {"2-31", 'N', 'G', true},  {"3-12", 'C', 'D', true},  {"3-21", 'E', 'D', true},
      {"12-3", 'A', 'D', true},  {"13-2", 'N', 'G', true},  {"21-3", 'A', 'D', true},
      {"23-1", 'C', 'B', true},  {"31-2", 'N', 'H', true},  {"32-1", 'E', 'F', true},
      {"1-2-3", 'N', 'H', false}, {"1-3-2", 'N', 'G', false}, {"2-1-3", 'N', 'H', false},
      {"2-3-1", 'N', 'G', false}, {"3-1-2", 'N', 'H', false}, {"3-2-1", 'P', 'H', false},
  }};
  return catalog;
}

char wilf_class(const VincularPattern& p, Parity parity) {
  const std::string name = p.to_string();
  for (const auto& entry : wilf_catalog()) {
    if (entry.pattern == name) return parity == Parity::Even ? entry.even : entry.odd;
  }
  throw std::invalid_argument("wilf_class: unknown pattern " + name);
}

Prediction predicted_count(const VincularPattern& p, int k, int n) {
  require(k >= 2 && n >= 0, "predicted_count: need k >= 2, n >= 0");
  const Parity parity = n % 2 == 0 ? Parity::Even : Parity::Odd;
  const int half = n / 2;
  Prediction out;
  out.wilf_class = wilf_class(p, parity);
  switch (out.wilf_class) {
    case 'A':
      out.value = a_even(k, half);
      out.rule = "S(k+i-1, k-1)";
      break;
    case 'B':
      out.value = a_odd(k, half);
      out.rule = "sum_{j=2}^{k} A_{j,2i}";
      break;
    case 'C':
      out.value = b_even(k, half);
      out.rule = "sum_{j=2}^{k} B_{j,2i-1}";
      break;
    case 'D':
      out.value = n312(k, n);
      out.rule = n == 1 ? "k (length-1 words)" : "B_{k,2i+1} recurrence";
      break;
    case 'E':
      out.value = count_3_21(k, n);
      out.closed_form = n != 2;
      out.rule = n == 2 ? "enumeration (no closed form below length 4)" : "N^312 plus binomial correction";
      break;
    case 'F':
      out.value = n == 1 ? ExactInt(k) : count_1_23_odd(k, half);
      out.rule = n == 1 ? "k (length-1 words)" : "A_{k,2i+1} + sum binom(k-j,2) A_{k-j+1,2i-2}";
      break;
    case 'N':
      out.value = n123_even(k, half);
      out.rule = "Narayana N_{k+i-1,i}";
      break;
    case 'K':
    case 'L':
      out.value = m_count(k, n);
      out.rule = "M_{k,l} recurrence";
      break;
    default:
      out.value = count_avoiders(k, n, p, Orientation::UpDown);
      out.closed_form = false;
      out.rule = "enumeration (no closed form)";
      break;
  }
  return out;
}

}  // namespace altwords

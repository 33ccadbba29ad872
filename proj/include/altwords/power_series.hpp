#pragma once

#include "altwords/exact.hpp"

#include <cstddef>
#include <vector>

namespace altwords {

/// Formal power series truncated after x^max_exponent. Coefficient index equals the
/// exponent. Binary operations require equal truncation orders.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t max_exponent);
  PowerSeries(std::vector<ExactInt> coefficients, std::size_t max_exponent);

  static PowerSeries constant(const ExactInt& c, std::size_t max_exponent);
  /// c * x^exponent (zero if exponent exceeds the order).
  static PowerSeries monomial(const ExactInt& c, std::size_t exponent, std::size_t max_exponent);
  /// 1 / (1 - ratio * x^step) = sum_j ratio^j x^(step j).
  static PowerSeries geometric(const ExactInt& ratio, std::size_t step, std::size_t max_exponent);

  std::size_t max_exponent() const { return coeffs_.size() - 1; }
  const ExactInt& operator[](std::size_t exponent) const { return coeffs_[exponent]; }
  const std::vector<ExactInt>& coefficients() const { return coeffs_; }

  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator-=(const PowerSeries& other);
  PowerSeries& operator*=(const PowerSeries& other);
  PowerSeries& operator*=(const ExactInt& scalar);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const PowerSeries& b) { return a *= b; }
  friend PowerSeries operator*(PowerSeries a, const ExactInt& s) { return a *= s; }

  /// Multiplicative inverse; the constant term must be +1 or -1 so the result stays
  /// integral. Throws std::domain_error otherwise.
  PowerSeries reciprocal() const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  void require_same_order(const PowerSeries& other) const;

  std::vector<ExactInt> coeffs_;
};

}  // namespace altwords

#include "altwords/power_series.hpp"

#include <stdexcept>

namespace altwords {

PowerSeries::PowerSeries(std::size_t max_exponent) : coeffs_(max_exponent + 1, 0) {}

PowerSeries::PowerSeries(std::vector<ExactInt> coefficients, std::size_t max_exponent)
    : coeffs_(std::move(coefficients)) {
  coeffs_.resize(max_exponent + 1, 0);
}

PowerSeries PowerSeries::constant(const ExactInt& c, std::size_t max_exponent) {
  return monomial(c, 0, max_exponent);
}

PowerSeries PowerSeries::monomial(const ExactInt& c, std::size_t exponent, std::size_t max_exponent) {
  PowerSeries s(max_exponent);
  if (exponent <= max_exponent) s.coeffs_[exponent] = c;
  return s;
}

PowerSeries PowerSeries::geometric(const ExactInt& ratio, std::size_t step, std::size_t max_exponent) {
  if (step == 0) throw std::invalid_argument("geometric: step must be positive");
  PowerSeries s(max_exponent);
  ExactInt power = 1;
  for (std::size_t e = 0; e <= max_exponent; e += step) {
    s.coeffs_[e] = power;
    power *= ratio;
  }
  return s;
}

void PowerSeries::require_same_order(const PowerSeries& other) const {
  if (other.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("PowerSeries: order mismatch");
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  require_same_order(other);
  for (std::size_t e = 0; e < coeffs_.size(); ++e) coeffs_[e] += other.coeffs_[e];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
  require_same_order(other);
  for (std::size_t e = 0; e < coeffs_.size(); ++e) coeffs_[e] -= other.coeffs_[e];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& other) {
  require_same_order(other);
  std::vector<ExactInt> product(coeffs_.size(), 0);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0) continue;
    for (std::size_t b = 0; a + b < coeffs_.size(); ++b) product[a + b] += coeffs_[a] * other.coeffs_[b];
  }
  coeffs_ = std::move(product);
  return *this;
}

PowerSeries& PowerSeries::operator*=(const ExactInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

PowerSeries PowerSeries::reciprocal() const {
  const ExactInt& a0 = coeffs_[0];
  if (a0 != 1 && a0 != -1) throw std::domain_error("PowerSeries::reciprocal: constant term must be a unit");
  PowerSeries inv(max_exponent());
  inv.coeffs_[0] = a0;  // 1/a0 == a0 for a0 = +-1
  for (std::size_t e = 1; e < coeffs_.size(); ++e) {
    ExactInt acc = 0;
    for (std::size_t j = 1; j <= e; ++j) acc += coeffs_[j] * inv.coeffs_[e - j];
    inv.coeffs_[e] = -acc * a0;
  }
  return inv;
}

}  // namespace altwords

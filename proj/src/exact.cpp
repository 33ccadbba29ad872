#include "altwords/exact.hpp"

#include <stdexcept>
#include <vector>

namespace altwords {

ExactInt binomial(long n, long m) {
  if (n < 0 || m < 0 || m > n) return 0;
  if (m > n - m) m = n - m;
  ExactInt result = 1;
  // Each partial product result * (n - m + j) / j is itself a binomial coefficient.
  for (long j = 1; j <= m; ++j) {
    result *= (n - m + j);
    result /= j;
  }
  return result;
}

ExactInt divide_exact(const ExactInt& numerator, const ExactInt& denominator) {
  if (denominator == 0) throw std::logic_error("divide_exact: division by zero");
  ExactInt quotient;
  ExactInt remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error("divide_exact: " + numerator.str() + " is not divisible by " +
                           denominator.str());
  }
  return quotient;
}

ExactInt catalan(long n) {
  if (n < 0) return 0;
  return divide_exact(binomial(2 * n, n), n + 1);
}

ExactInt narayana(long n, long m) {
  if (n == 0 && m == 0) return 1;
  if (n < 1 || m < 0 || m > n - 1) return 0;
  return divide_exact(binomial(n, m) * binomial(n - 1, m), m + 1);
}

ExactInt stirling2(long n, long m) {
  if (n < 0 || m < 0 || m > n) return 0;
  // Row-by-row over n, keeping columns 0..m.
  std::vector<ExactInt> row(static_cast<std::size_t>(m) + 1, 0);
  row[0] = 1;
  for (long r = 1; r <= n; ++r) {
    for (long c = std::min(r, m); c >= 1; --c) {
      row[c] = row[c - 1] + c * row[c];
    }
    row[0] = 0;
  }
  return row[m];
}

}  // namespace altwords

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace altwords {

/// Arbitrary-precision signed integer used for every count in the library.
using ExactInt = boost::multiprecision::cpp_int;

inline std::string to_string(const ExactInt& value) { return value.str(); }

/// Binomial coefficient; zero when m < 0, m > n, or n < 0.
ExactInt binomial(long n, long m);

/// C_n = binom(2n, n) / (n + 1).
ExactInt catalan(long n);

/// N_{n,m} = binom(n, m) binom(n - 1, m) / (m + 1), the number of Dyck paths of
/// semi-length n with m valleys. N_{0,0} = 1 (the empty path); out of range gives 0.
ExactInt narayana(long n, long m);

/// Stirling numbers of the second kind via S(n,m) = S(n-1,m-1) + m S(n-1,m).
ExactInt stirling2(long n, long m);

/// Exact division that throws std::logic_error if the remainder is nonzero.
ExactInt divide_exact(const ExactInt& numerator, const ExactInt& denominator);

}  // namespace altwords

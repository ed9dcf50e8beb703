#pragma once

#include <cstdint>

#include "mao/rational.hpp"

namespace mao {

/// (x)_k = x(x-1)...(x-k+1), with (x)_0 = 1.
Rational falling_factorial(const Rational& x, unsigned k);
Integer falling_factorial(const Integer& x, unsigned k);
Integer falling_factorial(long x, unsigned k);

/// C(n, k); zero when k < 0 or k > n.
Integer binomial(unsigned n, long k);

Integer factorial(unsigned n);

// Stirling numbers of the second kind are only needed to convert factorial
// moments to raw moments, so the table is capped.
inline constexpr unsigned kStirlingMaxN = 8;

/// S(n, k) for n <= kStirlingMaxN; throws std::invalid_argument beyond.
Integer stirling2(unsigned n, unsigned k);

}  // namespace mao

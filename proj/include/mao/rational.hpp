#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mao {

// Exact arithmetic backing for every formula path.  Integer is an
// arbitrary-precision integer, Rational an arbitrary-precision fraction.
using Integer = mpz_class;
using Rational = mpq_class;

/// Which arithmetic produced a result.
enum class NumericMode { exact, floating };

inline const char* to_string(NumericMode m) {
    return m == NumericMode::exact ? "exact" : "float";
}

/// Round-to-nearest conversion (the only lossy step on the exact path).
inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(const Integer& z) { return z.get_d(); }

/// Exact binary-rational representation of a double.
inline Rational rational_from_double(double x) {
    Rational q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

/// Decimal string with the given number of significant digits.
std::string to_decimal_string(const Rational& q, int sig_digits = 12);

class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mao

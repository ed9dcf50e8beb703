#include "mao/combinatorics.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace mao {

Rational falling_factorial(const Rational& x, unsigned k) {
    Rational out = 1;
    Rational factor = x;
    for (unsigned i = 0; i < k; ++i) {
        out *= factor;
        factor -= 1;
    }
    return out;
}

Integer falling_factorial(const Integer& x, unsigned k) {
    Integer out = 1;
    Integer factor = x;
    for (unsigned i = 0; i < k; ++i) {
        out *= factor;
        factor -= 1;
    }
    return out;
}

Integer falling_factorial(long x, unsigned k) {
    return falling_factorial(Integer(x), k);
}

Integer binomial(unsigned n, long k) {
    if (k < 0 || k > static_cast<long>(n)) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
    return out;
}

Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

namespace {

std::array<std::array<Integer, kStirlingMaxN + 1>, kStirlingMaxN + 1> build_stirling_table() {
    std::array<std::array<Integer, kStirlingMaxN + 1>, kStirlingMaxN + 1> s{};
    s[0][0] = 1;
    for (unsigned n = 1; n <= kStirlingMaxN; ++n) {
        s[n][0] = 0;
        for (unsigned k = 1; k <= n; ++k)
            s[n][k] = s[n - 1][k - 1] + Integer(k) * s[n - 1][k];
    }
    return s;
}

}  // namespace

Integer stirling2(unsigned n, unsigned k) {
    static const auto table = build_stirling_table();
    if (n > kStirlingMaxN) {
        std::ostringstream msg;
        msg << "stirling2: n = " << n << " exceeds table bound " << kStirlingMaxN;
        throw std::invalid_argument(msg.str());
    }
    if (k > n) return 0;
    return table[n][k];
}

std::string to_decimal_string(const Rational& q, int sig_digits) {
    if (q == 0) return "0";
    mp_exp_t exp10 = 0;
    mpf_class f(q, 64 + static_cast<unsigned>(sig_digits) * 4);
    std::string digits = f.get_str(exp10, 10, static_cast<size_t>(sig_digits));
    bool neg = !digits.empty() && digits[0] == '-';
    if (neg) digits.erase(0, 1);
    // get_str trims trailing zeros; restore them so the significant-digit
    // count is as requested.
    if (digits.size() < static_cast<size_t>(sig_digits))
        digits.append(static_cast<size_t>(sig_digits) - digits.size(), '0');
    std::ostringstream out;
    if (neg) out << '-';
    if (exp10 <= 0) {
        out << "0.";
        for (mp_exp_t i = 0; i < -exp10; ++i) out << '0';
        out << digits;
    } else if (static_cast<size_t>(exp10) >= digits.size()) {
        out << digits;
        for (size_t i = digits.size(); i < static_cast<size_t>(exp10); ++i) out << '0';
    } else {
        out << digits.substr(0, static_cast<size_t>(exp10)) << '.'
            << digits.substr(static_cast<size_t>(exp10));
    }
    return out.str();
}

}  // namespace mao

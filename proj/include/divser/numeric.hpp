#pragma once

// Exact arbitrary-precision integer/rational layer. Thin aliases over GMP's
// C++ interface plus the formatting helpers the rest of the library shares.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace divser {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt bigint_from_string(const std::string& s) {
    BigInt n;
    if (mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0) {
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    }
    return n;
}

inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, unsigned long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Canonical form: "p/q" with q omitted when it equals 1. Round-trips exactly.
inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
    q.canonicalize();
    return q;
}

inline Rational abs_rational(const Rational& q) {
    Rational r;
    mpq_abs(r.get_mpq_t(), q.get_mpq_t());
    return r;
}

inline void require_positive(const BigInt& n, const char* what) {
    if (n <= 0) {
        throw std::invalid_argument(std::string(what) + " must be a positive integer, got " +
                                    n.get_str());
    }
}

inline void require_positive(long long n, const char* what) {
    if (n <= 0) {
        throw std::invalid_argument(std::string(what) + " must be a positive integer, got " +
                                    std::to_string(n));
    }
}

} // namespace divser

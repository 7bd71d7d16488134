#pragma once

// Arbitrary-precision real numbers with explicit per-value working precision.
// Wraps MPFR; precision travels with each value, so concurrent evaluations at
// different precisions never interact through hidden global state.

#include <mpfr.h>

#include "divser/numeric.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace divser {

class BigReal {
public:
    static constexpr long kMinDigits = 20;
    static constexpr long kDefaultDigits = 50;

    explicit BigReal(long digits = kDefaultDigits) : digits_(clamp_digits(digits)) {
        mpfr_init2(v_, bits_for(digits_));
        mpfr_set_ui(v_, 0, MPFR_RNDN);
    }

    BigReal(const BigReal& o) : digits_(o.digits_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigReal(BigReal&& o) noexcept : digits_(o.digits_) {
        v_[0] = o.v_[0];
        mpfr_init2(o.v_, MPFR_PREC_MIN);
    }

    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
            digits_ = o.digits_;
        }
        return *this;
    }

    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) {
            mpfr_swap(v_, o.v_);
            digits_ = o.digits_;
        }
        return *this;
    }

    ~BigReal() { mpfr_clear(v_); }

    static BigReal of(double x, long digits = kDefaultDigits) {
        BigReal r(digits);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }

    static BigReal of(long x, long digits = kDefaultDigits) {
        BigReal r(digits);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }

    static BigReal of(unsigned long x, long digits = kDefaultDigits) {
        BigReal r(digits);
        mpfr_set_ui(r.v_, x, MPFR_RNDN);
        return r;
    }

    static BigReal of(const BigInt& x, long digits = kDefaultDigits) {
        BigReal r(digits);
        mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    static BigReal of(const Rational& x, long digits = kDefaultDigits) {
        BigReal r(digits);
        mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
        return r;
    }

    static BigReal pi(long digits) {
        BigReal r(digits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    static BigReal log2_value(long digits) {
        BigReal r(digits);
        mpfr_const_log2(r.v_, MPFR_RNDN);
        return r;
    }

    // zeta(s) from the underlying arbitrary-precision layer. Treated as an
    // oracle constant alongside pi and log 2.
    static BigReal zeta_constant(double s, long digits) {
        BigReal r(digits);
        BigReal arg = of(s, digits);
        mpfr_zeta(r.v_, arg.v_, MPFR_RNDN);
        return r;
    }

    long precision_digits() const { return digits_; }

    BigReal round_to(long digits) const {
        BigReal r(digits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    // Scientific notation with `sig` significant digits, e.g. "1.6449e+00".
    std::string to_string(long sig = -1) const {
        if (sig < 0) sig = digits_;
        if (mpfr_nan_p(v_)) return "nan";
        if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
        if (mpfr_zero_p(v_)) return "0";
        mpfr_exp_t exp = 0;
        char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(sig), v_, MPFR_RNDN);
        std::string digits(raw);
        mpfr_free_str(raw);
        std::string sign;
        if (!digits.empty() && digits[0] == '-') {
            sign = "-";
            digits.erase(0, 1);
        }
        std::string mant = digits.substr(0, 1);
        if (digits.size() > 1) mant += "." + digits.substr(1);
        char expbuf[32];
        std::snprintf(expbuf, sizeof(expbuf), "e%+03ld", static_cast<long>(exp - 1));
        return sign + mant + expbuf;
    }

    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.digits_, b.digits_));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.digits_, b.digits_));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.digits_, b.digits_));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.digits_, b.digits_));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    BigReal operator-() const {
        BigReal r(digits_);
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigReal& operator+=(const BigReal& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    BigReal& operator-=(const BigReal& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    BigReal& operator*=(const BigReal& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    BigReal& operator/=(const BigReal& o) {
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const BigReal& a, const BigReal& b) {
        return mpfr_lessequal_p(a.v_, b.v_);
    }
    friend bool operator>=(const BigReal& a, const BigReal& b) {
        return mpfr_greaterequal_p(a.v_, b.v_);
    }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_); }

    friend BigReal abs(const BigReal& a) {
        BigReal r(a.digits_);
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend BigReal cos(const BigReal& a) {
        BigReal r(a.digits_);
        mpfr_cos(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend BigReal sin(const BigReal& a) {
        BigReal r(a.digits_);
        mpfr_sin(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend BigReal log(const BigReal& a) {
        BigReal r(a.digits_);
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    // a^e for real exponent; a > 0 expected.
    friend BigReal pow(const BigReal& a, const BigReal& e) {
        BigReal r(std::max(a.digits_, e.digits_));
        mpfr_pow(r.v_, a.v_, e.v_, MPFR_RNDN);
        return r;
    }

    friend BigReal pow_si(const BigReal& a, long e) {
        BigReal r(a.digits_);
        mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }

    friend BigReal exp2(const BigReal& a) {
        BigReal r(a.digits_);
        mpfr_exp2(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    // Nearest integer (round-half-away); used by the Ramanujan direct oracle.
    BigInt round_to_integer() const {
        BigReal t(digits_);
        mpfr_round(t.v_, v_);
        BigInt z;
        mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
        return z;
    }

    // floor(-log10 |x|): the "digits correct" count when x is an absolute error.
    long floor_neg_log10_abs() const {
        if (mpfr_zero_p(v_)) throw std::domain_error("floor_neg_log10_abs of zero");
        BigReal t(std::max<long>(digits_, 30));
        mpfr_abs(t.v_, v_, MPFR_RNDN);
        mpfr_log10(t.v_, t.v_, MPFR_RNDN);
        mpfr_neg(t.v_, t.v_, MPFR_RNDN);
        mpfr_floor(t.v_, t.v_);
        return mpfr_get_si(t.v_, MPFR_RNDN);
    }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    static long clamp_digits(long digits) { return std::max(digits, kMinDigits); }

    static mpfr_prec_t bits_for(long digits) {
        // 10^digits needs digits*log2(10) bits; a few extra guard the last place.
        return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 8);
    }

    mpfr_t v_;
    long digits_;
};

// 10^-k as a tolerance value.
inline BigReal pow10(long k, long digits = BigReal::kDefaultDigits) {
    BigReal r = BigReal::of(10L, digits);
    return pow_si(r, k);
}

// Absolute error helpers shared by convergence profiling and the CLI.
inline long digits_correct(const BigReal& abs_error, long cap) {
    if (abs_error.is_zero()) return cap;
    long d = abs_error.floor_neg_log10_abs();
    return std::min(std::max(d, -99L), cap);
}

} // namespace divser

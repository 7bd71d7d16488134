#pragma once

// Arbitrary-precision evaluators for zeta(s) in several representations:
// the defining Dirichlet series with an integral tail correction, the
// alternating (eta) series, the central-binomial accelerations, the
// Srivastava recursive series, and the dilogarithm value at 1/2. Every
// evaluator reports a truncation bound that dominates its true error.

#include "divser/arith.hpp"
#include "divser/bigreal.hpp"
#include "divser/numeric.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace divser {

struct ZetaValue {
    BigReal value;        // series value including any tail correction
    BigReal bound;        // dominates |value - zeta(s)|
    BigReal partial_sum;  // plain truncated sum, no correction
    bool slow_convergence = false;
};

namespace detail {

inline BigReal power_term(unsigned long n, double s, long work) {
    BigReal base = BigReal::of(n, work);
    BigReal expo = BigReal::of(-s, work);
    return pow(base, expo);
}

} // namespace detail

// zeta(s) = sum n^-s for s > 1, truncated at `terms` with the integral tail
// correction M^(1-s)/(s-1). Error bound: M^-s plus working rounding.
inline ZetaValue zeta_direct(double s, long precision = BigReal::kDefaultDigits,
                             unsigned long terms = 1000) {
    if (!(s > 1.0)) throw std::domain_error("zeta_direct requires s > 1");
    if (terms < 1) throw std::invalid_argument("terms must be >= 1");
    const long work = precision + 10;
    BigReal sum(work);
    for (unsigned long n = 1; n <= terms; ++n) {
        sum += detail::power_term(n, s, work);
    }
    BigReal m = BigReal::of(terms, work);
    BigReal correction = pow(m, BigReal::of(1.0 - s, work)) / BigReal::of(s - 1.0, work);
    BigReal bound = pow(m, BigReal::of(-s, work)) + pow10(-precision, work);
    ZetaValue out{(sum + correction).round_to(precision), bound.round_to(precision),
                  sum.round_to(precision), false};
    return out;
}

// zeta(s) = (1 - 2^(1-s))^-1 * sum (-1)^(n-1) n^-s for s > 0, s != 1.
inline ZetaValue zeta_alternating(double s, long precision = BigReal::kDefaultDigits,
                                  unsigned long terms = 1000) {
    if (!(s > 0.0)) throw std::domain_error("zeta_alternating requires s > 0");
    if (s == 1.0) throw std::domain_error("zeta_alternating is undefined at s = 1");
    if (terms < 1) throw std::invalid_argument("terms must be >= 1");
    const long work = precision + 10;
    BigReal eta(work);
    for (unsigned long n = 1; n <= terms; ++n) {
        BigReal t = detail::power_term(n, s, work);
        if (n % 2 == 0) eta -= t;
        else eta += t;
    }
    BigReal prefactor =
        BigReal::of(1L, work) - exp2(BigReal::of(1.0 - s, work)); // 1 - 2^(1-s)
    BigReal eta_tail = detail::power_term(terms + 1, s, work);    // alternating series bound
    BigReal value = eta / prefactor;
    BigReal bound = eta_tail / abs(prefactor) + pow10(-precision, work);
    return ZetaValue{value.round_to(precision), bound.round_to(precision),
                     eta.round_to(precision), s <= 1.0};
}

// Accelerated central-binomial series, exact rational partial sums:
//   zeta(2) = 3   * sum 1/(C(2n,n) n^2)
//   zeta(3) = 5/2 * sum (-1)^(n-1)/(C(2n,n) n^3)
//   zeta(4) = 36/17 * sum 1/(C(2n,n) n^4)
inline Rational zeta_cb(int s, unsigned long terms) {
    if (terms < 1) throw std::invalid_argument("terms must be >= 1");
    Rational prefactor;
    bool alternating = false;
    switch (s) {
        case 2: prefactor = make_rational(3, 1); break;
        case 3: prefactor = make_rational(5, 2); alternating = true; break;
        case 4: prefactor = make_rational(36, 17); break;
        default: throw std::domain_error("zeta_cb supports s in {2,3,4} only");
    }
    Rational sum(0);
    BigInt binom = 2; // C(2,1)
    for (unsigned long n = 1; n <= terms; ++n) {
        BigInt npow;
        mpz_ui_pow_ui(npow.get_mpz_t(), n, static_cast<unsigned long>(s));
        Rational term = make_rational(BigInt(1), binom * npow);
        if (alternating && n % 2 == 0) sum -= term;
        else sum += term;
        // C(2(n+1), n+1) = C(2n, n) * 2(2n+1)/(n+1)
        binom = binom * 2 * (2 * n + 1) / (n + 1);
    }
    return prefactor * sum;
}

struct CsEstimate {
    BigReal value;
    std::vector<Rational> convergents; // continued-fraction convergents, denominators < 10^6
};

enum class CbVariant { plain, alternating };

namespace detail {

// Continued-fraction convergents of x, stopping before denominators reach
// 10^6 (enough to recognise 3, 5/2, 36/17 without overclaiming).
inline std::vector<Rational> cf_convergents(const BigReal& x, long digits) {
    std::vector<Rational> out;
    BigReal rem = x;
    BigInt h0 = 1, h1 = 0, k0 = 0, k1 = 1; // h1/k1 is the previous convergent
    BigReal eps = pow10(-(digits - 5), digits);
    for (int i = 0; i < 64; ++i) {
        BigReal fl(digits + 10);
        mpfr_floor(fl.raw(), rem.raw());
        BigInt a;
        mpfr_get_z(a.get_mpz_t(), fl.raw(), MPFR_RNDN);
        BigInt h = a * h0 + h1;
        BigInt k = a * k0 + k1;
        if (i > 0 && k >= 1000000) break;
        out.push_back(make_rational(h, k));
        h1 = h0; h0 = h;
        k1 = k0; k0 = k;
        BigReal frac = rem - fl;
        if (frac < eps) break;
        rem = BigReal::of(1L, digits + 10) / frac;
    }
    return out;
}

} // namespace detail

// Empirical estimate of c_s in the conjectural family
// zeta(s) = c_s * sum (+-1)^(n-1) / (C(2n,n) n^s).
inline CsEstimate estimate_cs(int s, CbVariant variant, unsigned long terms = 60,
                              long precision = BigReal::kDefaultDigits) {
    if (s < 2) throw std::domain_error("estimate_cs requires s >= 2");
    if (terms < 1) throw std::invalid_argument("terms must be >= 1");
    const long work = precision + 10;
    Rational sum(0);
    BigInt binom = 2;
    for (unsigned long n = 1; n <= terms; ++n) {
        BigInt npow;
        mpz_ui_pow_ui(npow.get_mpz_t(), n, static_cast<unsigned long>(s));
        Rational term = make_rational(BigInt(1), binom * npow);
        if (variant == CbVariant::alternating && n % 2 == 0) sum -= term;
        else sum += term;
        binom = binom * 2 * (2 * n + 1) / (n + 1);
    }
    BigReal estimate = BigReal::zeta_constant(s, work) / BigReal::of(sum, work);
    CsEstimate out{estimate.round_to(precision), detail::cf_convergents(estimate, precision)};
    return out;
}

// Srivastava's recursive representation:
//   zeta(s) = (2^s - 2)^-1 * sum_{n>=1} (s+1)_{2n} / (2n)! * zeta(s+2n) / 4^n.
// Inner zeta values come from zeta_direct at high arguments where the direct
// series converges quickly; their reported bounds are propagated into the
// returned bound alongside the geometric outer tail.
inline ZetaValue zeta_srivastava(double s, unsigned long outer_terms = 50,
                                 long precision = BigReal::kDefaultDigits) {
    if (!(s > 0.0)) throw std::domain_error("zeta_srivastava requires s > 0");
    if (outer_terms < 1) throw std::invalid_argument("outer_terms must be >= 1");
    const long work = precision + 10;
    BigReal two_pow_s = exp2(BigReal::of(s, work));
    BigReal denom = two_pow_s - BigReal::of(2L, work);
    if (abs(denom) < pow10(-6, work)) {
        throw std::domain_error("zeta_srivastava: 2^s too close to 2");
    }
    // the direct inner series needs 10^(digits/arg) terms; 22 digits keeps the
    // n = 1 argument affordable while staying far below the test tolerances
    const double inner_digits = std::min<double>(static_cast<double>(precision) + 2.0, 22.0);
    auto inner_zeta = [&](double arg) {
        auto m = static_cast<unsigned long>(std::pow(10.0, inner_digits / arg)) + 2;
        if (m > 400000) m = 400000;
        return zeta_direct(arg, work, m);
    };
    BigReal sum(work), inner_error(work);
    // ratio_n = t_n / t_(n-1) on the factorial part: (s+2n-1)(s+2n)/(4 (2n-1)(2n))
    BigReal factorial_part = BigReal::of(1L, work);
    BigReal last_term(work);
    for (unsigned long n = 1; n <= outer_terms; ++n) {
        BigReal num = BigReal::of(s + 2.0 * n - 1.0, work) * BigReal::of(s + 2.0 * n, work);
        BigReal den = BigReal::of(4.0 * (2.0 * n - 1.0) * (2.0 * n), work);
        factorial_part *= num / den;
        ZetaValue inner = inner_zeta(s + 2.0 * n);
        last_term = factorial_part * inner.value;
        sum += last_term;
        inner_error += factorial_part * inner.bound;
    }
    // ratios decrease toward 1/4 and the zeta factors decrease toward 1, so
    // the next ratio bounds the geometric outer tail
    unsigned long n1 = outer_terms + 1;
    BigReal q = BigReal::of(s + 2.0 * n1 - 1.0, work) * BigReal::of(s + 2.0 * n1, work) /
                BigReal::of(4.0 * (2.0 * n1 - 1.0) * (2.0 * n1), work);
    BigReal tail = abs(last_term) * q / (BigReal::of(1L, work) - q);
    BigReal value = sum / denom;
    BigReal bound = (tail + inner_error) / abs(denom) + pow10(-precision, work);
    return ZetaValue{value.round_to(precision), bound.round_to(precision),
                     value.round_to(precision), false};
}

// Exact rational partial sum of sum 2^-n / n^2 (the polylogarithm at 1/2).
inline Rational dilog_half(unsigned long terms) {
    if (terms < 1) throw std::invalid_argument("terms must be >= 1");
    Rational sum(0);
    BigInt pow2 = 2;
    for (unsigned long n = 1; n <= terms; ++n) {
        sum += make_rational(BigInt(1), pow2 * (n * n));
        pow2 *= 2;
    }
    return sum;
}

// Closed form zeta(2)/2 - log(2)^2/2 the dilogarithm sum converges to.
inline BigReal dilog_half_target(long precision = BigReal::kDefaultDigits) {
    const long work = precision + 10;
    BigReal pi = BigReal::pi(work);
    BigReal log2 = BigReal::log2_value(work);
    BigReal zeta2 = pi * pi / BigReal::of(6L, work);
    return (zeta2 / BigReal::of(2L, work) - log2 * log2 / BigReal::of(2L, work))
        .round_to(precision);
}

enum class LeshchinerFamily { odd, even };

struct LeshchinerResult {
    LeshchinerFamily family;
    Rational z;
    unsigned long k_terms = 0;
    unsigned long n_terms = 0;
    BigReal lhs;            // sum_k zeta_M(2k+m) z^2k, the geometric-series form
    BigReal lhs_damped;     // variant carrying the even family's (1 - 2^-k) factor
    BigReal middle;         // sum_{n<=M} 1/(n^m (1 - z^2/n^2))
    BigReal binomial_rhs;   // right side transcribed literally
    BigReal dev_lhs_middle; // provably zero up to the z^2K tail
    BigReal dev_damped_middle;
    BigReal dev_middle_binomial;
};

// Checks the Leshchiner generating-function families at rational z in (0,1).
// All three forms are evaluated independently; deviations are returned as
// data. Only |lhs - middle| is expected to vanish (same inner truncation on
// both sides makes the identity a finite geometric-series rearrangement).
inline LeshchinerResult leshchiner_check(LeshchinerFamily family, const Rational& z,
                                         unsigned long k_terms, unsigned long n_terms,
                                         long precision = BigReal::kDefaultDigits) {
    Rational zz = abs_rational(z);
    if (!(zz < Rational(1))) throw std::domain_error("leshchiner_check requires |z| < 1");
    if (k_terms < 1 || n_terms < 1) throw std::invalid_argument("term counts must be >= 1");
    const long work = precision + 10;
    const int m = family == LeshchinerFamily::odd ? 3 : 2;

    BigReal zr = BigReal::of(z, work);
    BigReal z2 = zr * zr;

    // (a) generating-function left side from zeta_direct partial sums
    BigReal lhs(work), lhs_damped(work);
    BigReal zpow = BigReal::of(1L, work);
    for (unsigned long k = 0; k < k_terms; ++k) {
        BigReal zeta_m = zeta_direct(static_cast<double>(2 * k + m), work, n_terms).partial_sum;
        lhs += zeta_m * zpow;
        if (family == LeshchinerFamily::even) {
            BigReal damp = BigReal::of(1L, work) -
                           exp2(BigReal::of(-static_cast<double>(k), work)); // 1 - 2^-k
            lhs_damped += damp * zeta_m * zpow;
        } else {
            lhs_damped += zeta_m * zpow;
        }
        zpow *= z2;
    }

    // (b) middle form
    BigReal middle(work);
    for (unsigned long n = 1; n <= n_terms; ++n) {
        BigReal nn = BigReal::of(n, work);
        BigReal denom = pow_si(nn, m) * (BigReal::of(1L, work) - z2 / (nn * nn));
        middle += BigReal::of(1L, work) / denom;
    }

    // (c) binomial right side with the half-minus-geometric bracket and the
    //     running product over (1 - z^2/m^2)
    BigReal rhs(work);
    BigReal product = BigReal::of(1L, work); // prod_{m<n} (1 - z^2/m^2)
    BigInt binom = 2;
    for (unsigned long n = 1; n <= k_terms; ++n) {
        BigReal nn = BigReal::of(n, work);
        BigReal geom = BigReal::of(2L, work) / (BigReal::of(1L, work) - z2 / (nn * nn));
        BigReal half = BigReal::of(Rational(1, 2), work);
        BigReal bracket = family == LeshchinerFamily::odd ? half - geom : -half + geom;
        BigReal term = bracket * product /
                       (BigReal::of(BigInt(binom), work) * pow_si(nn, 3));
        if (n % 2 == 0) rhs -= term;
        else rhs += term;
        product *= BigReal::of(1L, work) - z2 / (nn * nn);
        binom = binom * 2 * (2 * n + 1) / (n + 1);
    }

    LeshchinerResult out{family,
                         z,
                         k_terms,
                         n_terms,
                         lhs.round_to(precision),
                         lhs_damped.round_to(precision),
                         middle.round_to(precision),
                         rhs.round_to(precision),
                         abs(lhs - middle).round_to(precision),
                         abs(lhs_damped - middle).round_to(precision),
                         abs(middle - rhs).round_to(precision)};
    return out;
}

} // namespace divser

#pragma once

// Exact verification of the nonlinear multiplicative identities relating
// sigma_s(N)/N^s to sigma(N)/N through a product over the prime powers
// exactly dividing N, plus the series built from them.

#include "divser/arith.hpp"
#include "divser/numeric.hpp"
#include "divser/series.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace divser {

struct IdentityReport {
    std::string identity;
    BigInt N;
    int s = 0;
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

// prod over p^alpha || N of
//   (p^{(s-1)(a+1)} + p^{(s-2)(a+1)} + ... + p^{a+1} + 1)
//   / (p^{(s-1)a + s-1} + ... + p^{(s-1)a + 1} + p^{(s-1)a})
inline Rational lemma5_product(const BigInt& N, int s) {
    require_positive(N, "N");
    if (s < 2) throw std::domain_error("lemma5_product requires s >= 2");
    if (s > 64) throw std::domain_error("lemma5_product: s capped at 64");
    Rational product(1);
    for (const auto& [p, alpha] : factorize(N).factors) {
        BigInt pa1; // p^(alpha+1)
        mpz_pow_ui(pa1.get_mpz_t(), p.get_mpz_t(), alpha + 1);
        BigInt num = 0, geom = 1;
        for (int j = 0; j < s; ++j) {
            num += geom; // p^(j(alpha+1))
            geom *= pa1;
        }
        BigInt den_geom = 0, pj = 1;
        for (int j = 0; j < s; ++j) {
            den_geom += pj; // p^j
            pj *= p;
        }
        BigInt shift; // p^((s-1) alpha)
        mpz_pow_ui(shift.get_mpz_t(), p.get_mpz_t(),
                   static_cast<unsigned long>(s - 1) * alpha);
        product *= make_rational(num, shift * den_geom);
    }
    return product;
}

// sigma_s(N)/N^s == (sigma(N)/N) * lemma5_product(N, s), in exact arithmetic.
inline IdentityReport verify_lemma5(const BigInt& N, int s) {
    IdentityReport rep;
    rep.identity = "lemma5";
    rep.N = N;
    rep.s = s;
    rep.lhs = sigma_ratio_target(static_cast<unsigned>(s), N);
    rep.rhs = sigma_ratio_target(1, N) * lemma5_product(N, s);
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

enum class Lemma6Variant { ii, iii }; // ii targets sigma_2, iii targets sigma_3

// 3 * (specialised product) * sum_{n<=terms} n^-2 sum_{d|n} C(2d,d)^-1 c_{n/d}(N)
inline Rational eval_lemma6(Lemma6Variant variant, const BigInt& N, std::uint64_t terms) {
    int s = variant == Lemma6Variant::ii ? 2 : 3;
    Rational product = lemma5_product(N, s);
    Rational series = convolved_series_partial_sum(WeightKind::central_binomial, 2, N, terms);
    return Rational(3) * product * series;
}

// The specialised s = 2, 3 product forms, written out independently of the
// general product so the check has two distinct routes.
inline Rational eq22_product(const BigInt& N, int s) {
    require_positive(N, "N");
    if (s != 2 && s != 3) throw std::domain_error("eq22_product: s must be 2 or 3");
    Rational product(1);
    for (const auto& [p, alpha] : factorize(N).factors) {
        BigInt pa, pa1, pa2;
        mpz_pow_ui(pa.get_mpz_t(), p.get_mpz_t(), alpha);      // p^a
        mpz_pow_ui(pa1.get_mpz_t(), p.get_mpz_t(), alpha + 1); // p^(a+1)
        if (s == 2) {
            product *= make_rational(pa1 + 1, pa1 + pa);
        } else {
            mpz_pow_ui(pa2.get_mpz_t(), p.get_mpz_t(), 2 * (alpha + 1)); // p^(2a+2)
            BigInt den = pa2 + pa * pa1 + pa * pa; // p^(2a+2) + p^(2a+1) + p^(2a)
            product *= make_rational(pa2 + pa1 + 1, den);
        }
    }
    return product;
}

// Checks both specialised forms against the general product and the sigma ratios.
inline std::pair<IdentityReport, IdentityReport> verify_eq22(const BigInt& N) {
    std::pair<IdentityReport, IdentityReport> out;
    for (int s : {2, 3}) {
        IdentityReport rep;
        rep.identity = s == 2 ? "eq22-sigma2" : "eq22-sigma3";
        rep.N = N;
        rep.s = s;
        rep.lhs = sigma_ratio_target(static_cast<unsigned>(s), N);
        Rational specialised = eq22_product(N, s);
        rep.rhs = sigma_ratio_target(1, N) * specialised;
        rep.equal = rep.lhs == rep.rhs && specialised == lemma5_product(N, s);
        (s == 2 ? out.first : out.second) = rep;
    }
    return out;
}

} // namespace divser

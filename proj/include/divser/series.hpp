#pragma once

// Truncated evaluation of the divisor-function series: the convolved
// coefficients a_n = sum_{d|n} w(d) c_{n/d}(N) and the partial sums
// sum_{n<=T} a_n / n^m, kept exactly rational throughout.
//
// The evaluation engine swaps the summation order,
//   sum_{n<=T} n^-m sum_{d|n} w(d) c_{n/d}(N)
//     = sum_{k<=T} c_k(N)/k^m * V(floor(T/k)),  V(D) = sum_{d<=D} w(d)/d^m,
// walks the O(sqrt T) distinct quotients, tree-sums the Ramanujan blocks and
// binary-splits the weight sums, so a T = 10^5 evaluation stays exact without
// ever forming the quadratic number of divisor terms.

#include "divser/arith.hpp"
#include "divser/bigreal.hpp"
#include "divser/numeric.hpp"
#include "divser/ramanujan.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace divser {

enum class WeightKind {
    central_binomial,             // w(d) = 1/C(2d,d)
    alternating_central_binomial, // w(d) = (-1)^(d-1)/C(2d,d)
    geometric_half,               // w(d) = 2^-d
    squarefree,                   // w(d) = mu(d)^2
};

inline std::string to_string(WeightKind w) {
    switch (w) {
        case WeightKind::central_binomial: return "cb";
        case WeightKind::alternating_central_binomial: return "alt-cb";
        case WeightKind::geometric_half: return "geom-half";
        case WeightKind::squarefree: return "sqfree";
    }
    return "?";
}

inline WeightKind weight_from_string(const std::string& s) {
    if (s == "cb") return WeightKind::central_binomial;
    if (s == "alt-cb" || s == "altcb") return WeightKind::alternating_central_binomial;
    if (s == "geom-half" || s == "geom") return WeightKind::geometric_half;
    if (s == "sqfree" || s == "squarefree") return WeightKind::squarefree;
    throw std::invalid_argument("unknown weight kind: '" + s + "'");
}

enum class Thm1Variant { i, ii, iii };

namespace detail {

// ---- generic exact summation helpers ----

// Balanced tree sum of leaf(lo..hi); keeps intermediate denominators near
// the lcm scale of the subrange instead of the full range.
template <typename Leaf>
Rational tree_sum(std::uint64_t lo, std::uint64_t hi, Leaf&& leaf) {
    if (lo > hi) return Rational(0);
    if (hi - lo < 8) {
        Rational s(0);
        for (std::uint64_t k = lo; k <= hi; ++k) s += leaf(k);
        return s;
    }
    std::uint64_t mid = lo + (hi - lo) / 2;
    return tree_sum(lo, mid, leaf) + tree_sum(mid + 1, hi, leaf);
}

// Binary splitting for hypergeometric-style sums: t_{d+1} = t_d * p(d)/q(d).
// ratio(d) writes p_d and q_d as small integers.
struct PQT {
    BigInt p, q, t;
};

using RatioFn = std::function<void(std::uint64_t d, BigInt& p, BigInt& q)>;

inline PQT bsplit_rec(std::uint64_t lo, std::uint64_t hi, const RatioFn& ratio) {
    if (hi - lo == 1) {
        PQT r;
        ratio(lo, r.p, r.q);
        r.t = r.q;
        return r;
    }
    std::uint64_t mid = lo + (hi - lo) / 2;
    PQT a = bsplit_rec(lo, mid, ratio);
    PQT b = bsplit_rec(mid, hi, ratio);
    PQT r;
    r.p = a.p * b.p;
    r.q = a.q * b.q;
    r.t = a.t * b.q + a.p * b.t;
    return r;
}

// Sum of t_d for d in [a, b] given the leading term t_a, together with the
// ratio product needed to continue past b. Returns (sum, step) with
// step = prod_{d=a}^{b} p_d/q_d, so t_{b+1} = t_a * step.
inline std::pair<Rational, Rational> bsplit_sum(std::uint64_t a, std::uint64_t b,
                                                const Rational& t_a, const RatioFn& ratio) {
    PQT r = bsplit_rec(a, b + 1, ratio);
    Rational sum = t_a * make_rational(r.t, r.q);
    Rational step = make_rational(r.p, r.q);
    return {std::move(sum), std::move(step)};
}

// ---- weight plumbing ----

inline BigInt pow_ui(std::uint64_t base, unsigned exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

// First weight term w(a)/a^m for the hypergeometric weights.
inline Rational weight_leading_term(WeightKind w, unsigned m, std::uint64_t a) {
    switch (w) {
        case WeightKind::central_binomial:
        case WeightKind::alternating_central_binomial: {
            BigInt binom;
            mpz_bin_uiui(binom.get_mpz_t(), 2 * a, a);
            Rational t = make_rational(BigInt(1), binom * pow_ui(a, m));
            if (w == WeightKind::alternating_central_binomial && a % 2 == 0) t = -t;
            return t;
        }
        case WeightKind::geometric_half: {
            BigInt den;
            mpz_ui_pow_ui(den.get_mpz_t(), 2, a);
            return make_rational(BigInt(1), den * pow_ui(a, m));
        }
        case WeightKind::squarefree:
            throw std::logic_error("squarefree weight is not hypergeometric");
    }
    throw std::logic_error("unreachable");
}

inline RatioFn weight_ratio(WeightKind w, unsigned m) {
    switch (w) {
        case WeightKind::central_binomial:
        case WeightKind::alternating_central_binomial: {
            // 1/C grows by (d+1)/(2(2d+1)); 1/d^m by (d/(d+1))^m
            bool alt = w == WeightKind::alternating_central_binomial;
            return [m, alt](std::uint64_t d, BigInt& p, BigInt& q) {
                mpz_ui_pow_ui(p.get_mpz_t(), d, m);
                BigInt dp1m;
                mpz_ui_pow_ui(dp1m.get_mpz_t(), d + 1, m - 1);
                q = dp1m * 2 * (2 * d + 1);
                if (alt) p = -p;
            };
        }
        case WeightKind::geometric_half:
            return [m](std::uint64_t d, BigInt& p, BigInt& q) {
                mpz_ui_pow_ui(p.get_mpz_t(), d, m);
                mpz_ui_pow_ui(q.get_mpz_t(), d + 1, m);
                q *= 2;
            };
        case WeightKind::squarefree:
            throw std::logic_error("squarefree weight is not hypergeometric");
    }
    throw std::logic_error("unreachable");
}

// Exact w(d) for the per-n (divisor enumeration) paths.
inline Rational weight_value(WeightKind w, std::uint64_t d) {
    switch (w) {
        case WeightKind::central_binomial:
        case WeightKind::alternating_central_binomial: {
            BigInt binom;
            mpz_bin_uiui(binom.get_mpz_t(), 2 * d, d);
            Rational t = make_rational(BigInt(1), binom);
            if (w == WeightKind::alternating_central_binomial && d % 2 == 0) t = -t;
            return t;
        }
        case WeightKind::geometric_half: {
            BigInt den;
            mpz_ui_pow_ui(den.get_mpz_t(), 2, d);
            return make_rational(BigInt(1), den);
        }
        case WeightKind::squarefree: {
            return Rational(mobius(BigInt(static_cast<unsigned long>(d))) == 0 ? 0 : 1);
        }
    }
    throw std::logic_error("unreachable");
}

} // namespace detail

// sum_{n<=terms} n^-m sum_{d|n} w(d) c_{n/d}(N), exactly rational.
inline Rational convolved_series_partial_sum(WeightKind weight, unsigned m, const BigInt& N,
                                             std::uint64_t terms) {
    require_positive(N, "N");
    if (terms < 1) throw std::invalid_argument("terms must be >= 1");
    if (m < 2 || m > 8) throw std::invalid_argument("series exponent out of range");
    if (terms > 2000000) throw std::invalid_argument("terms beyond supported range");
    const auto T = static_cast<std::uint32_t>(terms);

    SieveTables tables = build_sieve(T);
    std::vector<std::int64_t> c = ramanujan_row(N, T, tables);

    struct Block {
        std::uint64_t k1, k2, q;
    };
    std::vector<Block> blocks;
    for (std::uint64_t k = 1; k <= terms;) {
        std::uint64_t q = terms / k;
        std::uint64_t k2 = terms / q;
        blocks.push_back({k, k2, q});
        k = k2 + 1;
    }

    // V(q) at the distinct quotients, walked in ascending q (reverse blocks)
    std::vector<Rational> v_for_block(blocks.size());
    {
        Rational v(0);
        std::uint64_t next_d = 1;
        Rational lead; // current t_{next_d} for hypergeometric weights
        bool have_lead = false;
        detail::RatioFn ratio;
        const bool hypergeometric = weight != WeightKind::squarefree;
        if (hypergeometric) ratio = detail::weight_ratio(weight, m);
        for (size_t bi = blocks.size(); bi-- > 0;) {
            std::uint64_t q = blocks[bi].q;
            if (q >= next_d) {
                if (hypergeometric) {
                    if (!have_lead) {
                        lead = detail::weight_leading_term(weight, m, next_d);
                        have_lead = true;
                    }
                    auto [delta, step] = detail::bsplit_sum(next_d, q, lead, ratio);
                    v += delta;
                    lead *= step;
                } else {
                    const auto& mu = tables.mu;
                    v += detail::tree_sum(next_d, q, [&](std::uint64_t d) {
                        if (mu[d] == 0) return Rational(0);
                        return make_rational(BigInt(1), detail::pow_ui(d, m));
                    });
                }
                next_d = q + 1;
            }
            v_for_block[bi] = v;
        }
    }

    // combine: sum over blocks of V(q) * sum_{k in block} c_k / k^m
    return detail::tree_sum(0, blocks.size() - 1, [&](std::uint64_t bi) -> Rational {
        const Block& blk = blocks[bi];
        Rational r = detail::tree_sum(blk.k1, blk.k2, [&](std::uint64_t k) {
            std::int64_t ck = c[k - 1];
            if (ck == 0) return Rational(0);
            return make_rational(BigInt(static_cast<long>(ck)), detail::pow_ui(k, m));
        });
        r *= v_for_block[bi];
        return r;
    });
}

// a_n = sum_{d|n} w(d) c_{n/d}(N); every Ramanujan factor goes through the
// Hoelder identity.
inline Rational convolved_coefficient(std::uint64_t n, const BigInt& N, WeightKind weight) {
    require_positive(static_cast<long long>(n), "n");
    require_positive(N, "N");
    Rational sum(0);
    for (const BigInt& d : divisors(BigInt(static_cast<unsigned long>(n)))) {
        std::uint64_t du = mpz_get_ui(d.get_mpz_t());
        BigInt k = BigInt(static_cast<unsigned long>(n / du));
        BigInt c = ramanujan_hoelder(k, N);
        if (c == 0) continue;
        sum += detail::weight_value(weight, du) * Rational(c);
    }
    return sum;
}

// Extreme values of the central-binomial coefficient a_n over N:
// phi-weighted when n | N, mu-weighted when gcd(n, N) = 1.
inline std::pair<Rational, Rational> coefficient_extremes(std::uint64_t n) {
    require_positive(static_cast<long long>(n), "n");
    Rational max_sum(0), min_sum(0);
    for (const BigInt& d : divisors(BigInt(static_cast<unsigned long>(n)))) {
        std::uint64_t du = mpz_get_ui(d.get_mpz_t());
        BigInt k = BigInt(static_cast<unsigned long>(n / du));
        Factorization fk = factorize(k);
        Rational w = detail::weight_value(WeightKind::central_binomial, du);
        max_sum += w * Rational(totient_from_factorization(fk));
        int mu = mobius_from_factorization(fk);
        if (mu != 0) min_sum += w * Rational(mu);
    }
    return {max_sum, min_sum};
}

namespace detail {

inline void thm1_parameters(Thm1Variant v, WeightKind& weight, unsigned& m, Rational& prefactor) {
    switch (v) {
        case Thm1Variant::i:
            weight = WeightKind::central_binomial;
            m = 2;
            prefactor = make_rational(3, 1);
            return;
        case Thm1Variant::ii:
            weight = WeightKind::alternating_central_binomial;
            m = 3;
            prefactor = make_rational(5, 2);
            return;
        case Thm1Variant::iii:
            weight = WeightKind::central_binomial;
            m = 4;
            prefactor = make_rational(36, 17);
            return;
    }
    throw std::logic_error("unreachable");
}

} // namespace detail

// The accelerated divisor series (thm1-i/ii/iii); targets sigma_s(N)/N^s for
// s = 1, 2, 3.
inline Rational eval_theorem1(Thm1Variant variant, const BigInt& N, std::uint64_t terms) {
    WeightKind weight;
    unsigned m = 0;
    Rational prefactor;
    detail::thm1_parameters(variant, weight, m, prefactor);
    return prefactor * convolved_series_partial_sum(weight, m, N, terms);
}

// Exact target sigma_s(N)/N^s.
inline Rational sigma_ratio_target(unsigned s, const BigInt& N) {
    require_positive(N, "N");
    BigInt ns;
    mpz_pow_ui(ns.get_mpz_t(), N.get_mpz_t(), s);
    return make_rational(sigma(s, N), ns);
}

// Per-n contributions a_n / n^m of a thm1 variant (without prefactor).
inline std::vector<std::pair<std::uint64_t, Rational>> expansion_terms(Thm1Variant variant,
                                                                       const BigInt& N,
                                                                       std::uint64_t terms) {
    require_positive(N, "N");
    if (terms < 1) throw std::invalid_argument("terms must be >= 1");
    WeightKind weight;
    unsigned m = 0;
    Rational prefactor;
    detail::thm1_parameters(variant, weight, m, prefactor);
    std::vector<std::pair<std::uint64_t, Rational>> out;
    out.reserve(terms);
    for (std::uint64_t n = 1; n <= terms; ++n) {
        Rational a_n = convolved_coefficient(n, N, weight);
        out.emplace_back(n, a_n / Rational(detail::pow_ui(n, m)));
    }
    return out;
}

// Baseline Ramanujan series (the zeta(s)-prefactored expansion):
// zeta(s) * sum_{k<=terms} c_k(N)/k^s at working precision.
inline BigReal eval_ramanujan_baseline(int s, const BigInt& N, std::uint64_t terms,
                                       long precision = BigReal::kDefaultDigits) {
    if (s < 2) throw std::domain_error("baseline series requires s >= 2");
    require_positive(N, "N");
    if (terms < 1 || terms > 10000000) throw std::invalid_argument("terms out of range");
    const long work = precision + 10;
    const auto T = static_cast<std::uint32_t>(terms);
    SieveTables tables = build_sieve(T);
    std::vector<std::int64_t> c = ramanujan_row(N, T, tables);
    BigReal sum(work);
    BigReal term(work);
    for (std::uint64_t k = 1; k <= terms; ++k) {
        if (c[k - 1] == 0) continue;
        BigInt ks = detail::pow_ui(k, static_cast<unsigned>(s));
        mpfr_set_si(term.raw(), static_cast<long>(c[k - 1]), MPFR_RNDN);
        mpfr_div_z(term.raw(), term.raw(), ks.get_mpz_t(), MPFR_RNDN);
        sum += term;
    }
    return (BigReal::zeta_constant(s, work) * sum).round_to(precision);
}

// lemma3 series: sum n^-2 sum_{d|n} 2^-d c_{n/d}(N).
inline Rational eval_lemma3(const BigInt& N, std::uint64_t terms) {
    return convolved_series_partial_sum(WeightKind::geometric_half, 2, N, terms);
}

// (1 - 6 log(2)^2 / pi^2) * sigma(N) / (2N)
inline BigReal lemma3_target(const BigInt& N, long precision = BigReal::kDefaultDigits) {
    const long work = precision + 10;
    BigReal pi = BigReal::pi(work);
    BigReal log2 = BigReal::log2_value(work);
    BigReal constant =
        BigReal::of(1L, work) - BigReal::of(6L, work) * log2 * log2 / (pi * pi);
    BigReal ratio = BigReal::of(sigma_ratio_target(1, N), work);
    return (constant * ratio / BigReal::of(2L, work)).round_to(precision);
}

// lemma4 series: sum n^-2 sum_{d|n} mu(d)^2 c_{n/d}(N).
inline Rational eval_lemma4(const BigInt& N, std::uint64_t terms) {
    return convolved_series_partial_sum(WeightKind::squarefree, 2, N, terms);
}

// (90 / pi^4) * sigma(N) / N
inline BigReal lemma4_target(const BigInt& N, long precision = BigReal::kDefaultDigits) {
    const long work = precision + 10;
    BigReal pi = BigReal::pi(work);
    BigReal constant = BigReal::of(90L, work) / pow_si(pi, 4);
    BigReal ratio = BigReal::of(sigma_ratio_target(1, N), work);
    return (constant * ratio).round_to(precision);
}

} // namespace divser

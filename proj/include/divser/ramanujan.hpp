#pragma once

// Ramanujan sums c_k(N). Production path is the Hoelder identity
// c_k(N) = mu(k/e) * phi(k) / phi(k/e) with e = gcd(k, N); the direct
// exponential-sum evaluation exists to cross-check it.

#include "divser/arith.hpp"
#include "divser/bigreal.hpp"
#include "divser/numeric.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace divser {

inline BigInt ramanujan_hoelder(const BigInt& k, const BigInt& n) {
    require_positive(k, "k");
    require_positive(n, "n");
    BigInt e;
    mpz_gcd(e.get_mpz_t(), k.get_mpz_t(), n.get_mpz_t());
    BigInt ke = k / e;
    Factorization fk = factorize(k);
    Factorization fke = factorize(ke);
    int mu = mobius_from_factorization(fke);
    if (mu == 0) return 0;
    BigInt value = totient_from_factorization(fk) / totient_from_factorization(fke);
    return mu < 0 ? -value : value;
}

// Sieve-backed row c_1(n) .. c_{k_max}(n); matches ramanujan_hoelder entrywise.
inline std::vector<std::int64_t> ramanujan_row(const BigInt& n, std::uint32_t k_max,
                                               const SieveTables& t) {
    require_positive(n, "n");
    if (k_max == 0 || t.limit < k_max) throw std::invalid_argument("sieve too small for k_max");
    std::vector<std::int64_t> row(k_max + 1, 0);
    for (std::uint32_t k = 1; k <= k_max; ++k) {
        unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), k);
        std::uint32_t e = r == 0 ? k : std::gcd(k, static_cast<std::uint32_t>(r));
        std::uint32_t ke = k / e;
        int mu = t.mu[ke];
        row[k] = mu == 0 ? 0 : mu * (t.phi[k] / t.phi[ke]);
    }
    row.erase(row.begin());
    return row;
}

inline std::vector<std::int64_t> ramanujan_row(const BigInt& n, std::uint32_t k_max) {
    return ramanujan_row(n, k_max, build_sieve(k_max));
}

// Direct definition: sum over u coprime to k of exp(-2 pi i u N / k). The
// real part is summed as cos; the sine part and the distance to the nearest
// integer must both vanish to 10^-(precision/2) or the call fails loudly.
inline BigInt ramanujan_direct(unsigned long k, const BigInt& n,
                               long precision = BigReal::kDefaultDigits) {
    require_positive(static_cast<long long>(k), "k");
    require_positive(n, "n");
    const long work = precision + 10;
    BigReal two_pi_over_k =
        BigReal::of(2L, work) * BigReal::pi(work) / BigReal::of(static_cast<unsigned long>(k), work);
    BigReal cos_sum(work), sin_sum(work), cos_v(work), sin_v(work);
    unsigned long n_mod_k = mpz_fdiv_ui(n.get_mpz_t(), k);
    for (unsigned long u = 1; u <= k; ++u) {
        if (std::gcd(u, k) != 1) continue;
        // angle = 2 pi (u N mod k) / k, with the product reduced mod k first
        unsigned long m = detail::mulmod_u64(u, n_mod_k, k);
        BigReal angle = two_pi_over_k * BigReal::of(static_cast<unsigned long>(m), work);
        mpfr_sin_cos(sin_v.raw(), cos_v.raw(), angle.raw(), MPFR_RNDN);
        cos_sum += cos_v;
        sin_sum -= sin_v;
    }
    BigReal guard = pow10(-precision / 2, work);
    if (!(abs(sin_sum) < guard)) {
        throw std::runtime_error("ramanujan_direct: imaginary part fails the rounding guard");
    }
    BigInt nearest = cos_sum.round_to_integer();
    if (!(abs(cos_sum - BigReal::of(nearest, work)) < guard)) {
        throw std::runtime_error("ramanujan_direct: real part fails the rounding guard");
    }
    return nearest;
}

} // namespace divser

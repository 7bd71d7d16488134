#pragma once

// Desk-scale verification suites behind the CLI `verify` command. Each suite
// runs a batch of identity checks and reports counts plus diagnostics; hard
// failures are collected, informational deviations (the Leshchiner binomial
// forms) are reported without failing.

#include "divser/arith.hpp"
#include "divser/bigreal.hpp"
#include "divser/identities.hpp"
#include "divser/numeric.hpp"
#include "divser/ramanujan.hpp"
#include "divser/series.hpp"
#include "divser/zeta.hpp"

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace divser {

struct SuiteResult {
    std::string suite;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> notes; // first failures and informational lines

    bool ok() const { return failures == 0; }

    void fail(const std::string& message) {
        ++failures;
        if (notes.size() < 16) notes.push_back("FAIL " + message);
    }
};

// Hoelder identity against the direct exponential sum over the full desk
// grid, plus the divisibility/coprimality specialisations and periodicity.
inline SuiteResult run_suite_ramanujan(std::uint32_t grid = 200,
                                       long precision = BigReal::kDefaultDigits) {
    SuiteResult r{"ramanujan"};
    SieveTables tables = build_sieve(grid);
    for (std::uint32_t n = 1; n <= grid; ++n) {
        BigInt N(static_cast<unsigned long>(n));
        std::vector<std::int64_t> row = ramanujan_row(N, grid, tables);
        for (std::uint32_t k = 1; k <= grid; ++k) {
            BigInt direct = ramanujan_direct(k, N, precision);
            ++r.checks;
            if (direct != row[k - 1]) {
                std::ostringstream msg;
                msg << "c_" << k << "(" << n << "): hoelder " << row[k - 1] << " != direct "
                    << direct.get_str();
                r.fail(msg.str());
            }
            // k | n  =>  c_k(n) = phi(k);  gcd(k,n) = 1  =>  c_k(n) = mu(k)
            ++r.checks;
            if (n % k == 0 && row[k - 1] != tables.phi[k]) {
                r.fail("divisor case phi mismatch at k=" + std::to_string(k) +
                       " n=" + std::to_string(n));
            } else if (std::gcd(k, n) == 1 && row[k - 1] != tables.mu[k]) {
                r.fail("coprime case mu mismatch at k=" + std::to_string(k) +
                       " n=" + std::to_string(n));
            }
        }
    }
    // periodicity in n
    for (std::uint32_t k = 1; k <= grid; ++k) {
        for (std::uint32_t n = 1; n <= grid; ++n) {
            ++r.checks;
            BigInt a = ramanujan_hoelder(BigInt(k), BigInt(n));
            BigInt b = ramanujan_hoelder(BigInt(k), BigInt(n + k));
            if (a != b) {
                r.fail("periodicity c_" + std::to_string(k) + " at n=" + std::to_string(n));
            }
        }
    }
    return r;
}

// Cross-oracle agreement between the zeta representations, prefactor
// recovery, the dilogarithm value and truncation-bound soundness.
inline SuiteResult run_suite_zeta(long precision = BigReal::kDefaultDigits) {
    SuiteResult r{"zeta"};
    const long work = precision + 10;
    BigReal tol_cross = pow10(-10, work);
    BigReal tol_prefactor = pow10(-12, work);

    // term counts documented here: direct/alternating need M with M^-s below
    // 1e-11; the accelerated series need only a few dozen terms
    for (int s : {2, 3, 4}) {
        unsigned long m_direct = s == 2 ? 400000 : (s == 3 ? 5000 : 800);
        std::vector<std::pair<std::string, BigReal>> values;
        values.emplace_back("direct", zeta_direct(s, work, m_direct).value);
        values.emplace_back("alternating", zeta_alternating(s, work, m_direct).value);
        values.emplace_back("cb", BigReal::of(zeta_cb(s, 60), work));
        values.emplace_back("srivastava", zeta_srivastava(s, 50, work).value);
        for (size_t i = 0; i < values.size(); ++i) {
            for (size_t j = i + 1; j < values.size(); ++j) {
                ++r.checks;
                if (!(abs(values[i].second - values[j].second) < tol_cross)) {
                    r.fail("zeta(" + std::to_string(s) + ") " + values[i].first +
                           " vs " + values[j].first);
                }
            }
        }
    }

    // prefactor recovery by the empirical estimator
    {
        const Rational expected[] = {make_rational(3, 1), make_rational(5, 2),
                                     make_rational(36, 17)};
        const CbVariant variants[] = {CbVariant::plain, CbVariant::alternating,
                                      CbVariant::plain};
        for (int i = 0; i < 3; ++i) {
            int s = i + 2;
            CsEstimate est = estimate_cs(s, variants[i], 60, work);
            ++r.checks;
            if (!(abs(est.value - BigReal::of(expected[i], work)) < tol_prefactor)) {
                r.fail("estimate_cs(" + std::to_string(s) + ") off target");
            }
        }
    }

    // zeta_cb at 40 terms against the constant layer, 1e-20
    {
        BigReal pi = BigReal::pi(work);
        BigReal z2 = pi * pi / BigReal::of(6L, work);
        BigReal z4 = pow_si(pi, 4) / BigReal::of(90L, work);
        BigReal tol = pow10(-20, work);
        ++r.checks;
        if (!(abs(BigReal::of(zeta_cb(2, 40), work) - z2) < tol)) r.fail("zeta_cb(2,40)");
        ++r.checks;
        if (!(abs(BigReal::of(zeta_cb(4, 40), work) - z4) < tol)) r.fail("zeta_cb(4,40)");
    }

    // dilogarithm at 1/2
    {
        ++r.checks;
        BigReal v = BigReal::of(dilog_half(60), work);
        if (!(abs(v - dilog_half_target(work)) < pow10(-17, work))) r.fail("dilog_half(60)");
    }

    // truncation-bound soundness: doubling terms moves the value by at most
    // the previously reported bound (even term counts keep the alternating
    // errors on one side)
    {
        for (double s : {2.0, 2.5, 3.0, 4.0, 6.0, 10.0}) {
            for (unsigned long m : {10ul, 100ul, 1000ul}) {
                ZetaValue a = zeta_direct(s, work, m);
                ZetaValue b = zeta_direct(s, work, 2 * m);
                ++r.checks;
                if (!(abs(a.value - b.value) <= a.bound)) {
                    r.fail("direct bound unsound at s=" + std::to_string(s));
                }
                ZetaValue c = zeta_alternating(s, work, m);
                ZetaValue d = zeta_alternating(s, work, 2 * m);
                ++r.checks;
                if (!(abs(c.value - d.value) <= c.bound)) {
                    r.fail("alternating bound unsound at s=" + std::to_string(s));
                }
            }
        }
        for (double s : {2.0, 3.0}) {
            ZetaValue a = zeta_srivastava(s, 25, work);
            ZetaValue b = zeta_srivastava(s, 50, work);
            ++r.checks;
            if (!(abs(a.value - b.value) <= a.bound)) {
                r.fail("srivastava bound unsound at s=" + std::to_string(s));
            }
        }
    }
    return r;
}

// verify_lemma5 over N <= limit, s in {2..6}, plus the verify_eq22
// specialisations.
inline SuiteResult run_suite_lemma5(std::uint32_t limit = 10000) {
    SuiteResult r{"lemma5"};
    for (std::uint32_t n = 1; n <= limit; ++n) {
        BigInt N(static_cast<unsigned long>(n));
        for (int s = 2; s <= 6; ++s) {
            ++r.checks;
            IdentityReport rep = verify_lemma5(N, s);
            if (!rep.equal) {
                r.fail("lemma5 N=" + std::to_string(n) + " s=" + std::to_string(s));
            }
        }
        if (n <= 1000) {
            auto [a, b] = verify_eq22(N);
            ++r.checks;
            if (!a.equal) r.fail("eq22 sigma2 N=" + std::to_string(n));
            ++r.checks;
            if (!b.equal) r.fail("eq22 sigma3 N=" + std::to_string(n));
        }
    }
    // prime specialisation (p^2+1)/(p^2+p), symbolically
    SieveTables tables = build_sieve(100);
    for (std::uint32_t p = 2; p < 100; ++p) {
        if (tables.spf[p] != p) continue;
        ++r.checks;
        Rational expected = make_rational(BigInt(p) * p + 1, BigInt(p) * p + p);
        if (lemma5_product(BigInt(p), 2) != expected) {
            r.fail("prime specialisation p=" + std::to_string(p));
        }
    }
    return r;
}

// Leshchiner generating functions: the geometric-series equality is a hard
// assertion; the damped-form and binomial-side deviations are data.
inline SuiteResult run_suite_leshchiner(long precision = BigReal::kDefaultDigits) {
    SuiteResult r{"leshchiner"};
    const long work = precision + 10;
    BigReal tol = pow10(-12, work);
    for (LeshchinerFamily family : {LeshchinerFamily::odd, LeshchinerFamily::even}) {
        LeshchinerResult res =
            leshchiner_check(family, make_rational(1, 2), 40, 10000, work);
        std::string name = family == LeshchinerFamily::odd ? "odd" : "even";
        ++r.checks;
        if (!(res.dev_lhs_middle < tol)) {
            r.fail("leshchiner " + name + ": generating function vs middle form");
        }
        r.notes.push_back("leshchiner " + name + " deviations at z=1/2: |lhs-middle|=" +
                          res.dev_lhs_middle.to_string(3) + " |damped-middle|=" +
                          res.dev_damped_middle.to_string(3) + " |middle-binomial|=" +
                          res.dev_middle_binomial.to_string(3));
    }
    return r;
}

inline std::vector<SuiteResult> run_suites(const std::string& which,
                                           long precision = BigReal::kDefaultDigits) {
    std::vector<SuiteResult> out;
    if (which == "all" || which == "ramanujan") out.push_back(run_suite_ramanujan(200, precision));
    if (which == "all" || which == "zeta") out.push_back(run_suite_zeta(precision));
    if (which == "all" || which == "lemma5") out.push_back(run_suite_lemma5());
    if (which == "all" || which == "leshchiner") out.push_back(run_suite_leshchiner(precision));
    if (out.empty()) throw std::invalid_argument("unknown suite: '" + which + "'");
    return out;
}

} // namespace divser

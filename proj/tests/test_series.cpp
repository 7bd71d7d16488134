#include "divser/series.hpp"

#include "divser/profile.hpp"
#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

using namespace divser;

TEST_CASE("convolved coefficient examples", "[series]") {
    for (unsigned long N : {1ul, 7ul, 100ul}) {
        CHECK(convolved_coefficient(1, N, WeightKind::central_binomial) == make_rational(1, 2));
    }
    // a_2 at N = 1: (1/2) c_2(1) + (1/6) c_1(1) = -1/2 + 1/6
    CHECK(convolved_coefficient(2, 1, WeightKind::central_binomial) == make_rational(-1, 3));
    // a_4 at N = 4: (1/2) c_4(4) + (1/6) c_2(4) + (1/70) c_1(4) = 1 + 1/6 + 1/70
    Rational expected = make_rational(1, 1) + make_rational(1, 6) + make_rational(1, 70);
    CHECK(convolved_coefficient(4, 4, WeightKind::central_binomial) == expected);
}

TEST_CASE("coefficient extremes examples", "[series]") {
    auto [max1, min1] = coefficient_extremes(1);
    CHECK(max1 == make_rational(1, 2));
    CHECK(min1 == make_rational(1, 2));
    auto [max2, min2] = coefficient_extremes(2);
    CHECK(max2 == make_rational(2, 3));
    CHECK(min2 == make_rational(-1, 3));
    auto [max3, min3] = coefficient_extremes(3);
    CHECK(max3 == make_rational(21, 20));
    CHECK(min3 == make_rational(-9, 20));
}

TEST_CASE("extremes bound the convolved coefficient", "[series]") {
    for (std::uint64_t n = 1; n <= 100; ++n) {
        auto [mx, mn] = coefficient_extremes(n);
        // n | N forces the phi-weighted maximum
        CHECK(convolved_coefficient(n, n, WeightKind::central_binomial) == mx);
        CHECK(convolved_coefficient(n, 3 * n, WeightKind::central_binomial) == mx);
        // gcd(n, N) = 1 forces the mu-weighted minimum
        CHECK(convolved_coefficient(n, 1, WeightKind::central_binomial) == mn);
        CHECK(convolved_coefficient(n, n + 1, WeightKind::central_binomial) == mn);
    }
}

TEST_CASE("thm1 single-term examples", "[series]") {
    CHECK(eval_theorem1(Thm1Variant::i, 6, 1) == make_rational(3, 2));
    CHECK(eval_theorem1(Thm1Variant::ii, 1, 1) == make_rational(5, 4));
}

TEST_CASE("thm1 approaches its divisor targets", "[series]") {
    // sigma(1)/1 = 1
    Rational v1 = eval_theorem1(Thm1Variant::i, 1, 20000);
    CHECK(abs_rational(v1 - sigma_ratio_target(1, 1)) < make_rational(1, 1000000));
    // sigma_2(4)/16 = 21/16
    Rational v2 = eval_theorem1(Thm1Variant::ii, 4, 5000);
    CHECK(abs_rational(v2 - make_rational(21, 16)) < make_rational(1, 100000000));
}

TEST_CASE("block engine equals the divisor-sum route", "[series]") {
    for (Thm1Variant variant : {Thm1Variant::i, Thm1Variant::ii, Thm1Variant::iii}) {
        for (unsigned long N : {1ul, 6ul, 12ul, 50ul}) {
            Rational direct(0);
            for (const auto& [n, t] : expansion_terms(variant, N, 200)) direct += t;
            WeightKind w;
            unsigned m;
            Rational prefactor;
            detail::thm1_parameters(variant, w, m, prefactor);
            CHECK(prefactor * direct == eval_theorem1(variant, N, 200));
        }
    }
    // same dual route for the lemma3/lemma4 weights
    for (unsigned long N : {1ul, 6ul, 28ul}) {
        Rational g(0), s(0);
        for (std::uint64_t n = 1; n <= 150; ++n) {
            g += convolved_coefficient(n, N, WeightKind::geometric_half) /
                 Rational(detail::pow_ui(n, 2));
            s += convolved_coefficient(n, N, WeightKind::squarefree) /
                 Rational(detail::pow_ui(n, 2));
        }
        CHECK(g == eval_lemma3(N, 150));
        CHECK(s == eval_lemma4(N, 150));
    }
}

TEST_CASE("thm1 equals the Cauchy-Dirichlet reconstruction", "[series]") {
    // independent reconstruction from the central-binomial zeta coefficients
    // and the Ramanujan coefficients, truncated to dk <= T
    SieveTables tables = build_sieve(500);
    for (unsigned long N = 1; N <= 50; ++N) {
        auto c = ramanujan_row(N, 500, tables);
        Rational oracle = oracles::cauchy_dirichlet(2, 500, c, false);
        CHECK(Rational(3) * oracle == eval_theorem1(Thm1Variant::i, N, 500));
    }
    for (unsigned long N : {1ul, 6ul, 30ul, 50ul}) {
        Rational oracle_alt = oracles::cauchy_dirichlet(3, 300, ramanujan_row(N, 300), true);
        CHECK(make_rational(5, 2) * oracle_alt == eval_theorem1(Thm1Variant::ii, N, 300));
    }
}

TEST_CASE("baseline and thm1 share targets for s in 2..4", "[series]") {
    const long digits = 50;
    for (int s : {2, 3, 4}) {
        for (unsigned long N : {3ul, 7ul, 20ul}) {
            Rational target = sigma_ratio_target(static_cast<unsigned>(s - 1), N);
            BigReal baseline = eval_ramanujan_baseline(s, N, 30000, digits);
            BigReal err = abs(baseline - BigReal::of(target, digits));
            CHECK(err < BigReal::of(0.001, digits));
            Thm1Variant variant = s == 2 ? Thm1Variant::i
                                         : (s == 3 ? Thm1Variant::ii : Thm1Variant::iii);
            Rational accel = eval_theorem1(variant, N, 3000);
            CHECK(abs_rational(accel - target) < make_rational(1, 1000));
        }
    }
}

TEST_CASE("expansion terms reproduce the displayed brackets", "[series]") {
    for (unsigned long N : {1ul, 2ul, 6ul, 12ul, 16ul}) {
        auto terms = expansion_terms(Thm1Variant::i, N, 4);
        REQUIRE(terms.size() == 4);
        Rational c2(ramanujan_hoelder(2, N)), c3(ramanujan_hoelder(3, N)),
            c4(ramanujan_hoelder(4, N));
        Rational half = make_rational(1, 2);
        CHECK(terms[0].second == half);
        CHECK(terms[1].second == (half * c2 + make_rational(1, 6)) / Rational(4));
        CHECK(terms[2].second == (half * c3 + make_rational(1, 20)) / Rational(9));
        CHECK(terms[3].second ==
              (half * c4 + make_rational(1, 6) * c2 + make_rational(1, 70)) / Rational(16));
    }
    // spec'd single entries
    auto t1 = expansion_terms(Thm1Variant::i, 1, 2);
    CHECK(t1[1].second == make_rational(-1, 12));
    auto t2 = expansion_terms(Thm1Variant::i, 2, 2);
    CHECK(t2[1].second == make_rational(1, 6));
}

TEST_CASE("ramanujan baseline series", "[series]") {
    const long digits = 50;
    BigReal one = BigReal::of(1L, digits);
    CHECK(abs(eval_ramanujan_baseline(2, 1, 50000, digits) - one) < BigReal::of(0.001, digits));
    CHECK(abs(eval_ramanujan_baseline(2, 6, 50000, digits) - BigReal::of(2L, digits)) <
          BigReal::of(0.001, digits));
    BigReal target34 = BigReal::of(make_rational(21, 16), digits);
    CHECK(abs(eval_ramanujan_baseline(3, 4, 20000, digits) - target34) <
          BigReal::of(1e-6, digits));
    CHECK_THROWS_AS(eval_ramanujan_baseline(1, 1, 10, digits), std::domain_error);
}

TEST_CASE("lemma3 and lemma4 series", "[series]") {
    CHECK(eval_lemma3(1, 1) == make_rational(1, 2));
    CHECK(eval_lemma4(1, 1) == Rational(1));

    const long digits = 50;
    // limits at a moderate truncation
    CHECK(abs(BigReal::of(eval_lemma3(1, 20000), digits) - lemma3_target(1, digits)) <
          BigReal::of(1e-4, digits));
    CHECK(abs(BigReal::of(eval_lemma4(28, 20000), digits) - lemma4_target(28, digits)) <
          BigReal::of(1e-4, digits));
    // sigma(6)/6 = 2 doubles the N = 1 limit
    BigReal two_limits = BigReal::of(2L, digits) * lemma3_target(1, digits);
    CHECK(abs(lemma3_target(6, digits) - two_limits) < pow10(-40, digits));
}

TEST_CASE("convergence profile single point", "[series]") {
    SeriesId id;
    id.tag = SeriesId::Tag::thm1_i;
    ConvergenceProfile p = convergence_profile(id, 1, {1});
    REQUIRE(p.samples.size() == 1);
    CHECK(p.samples[0].value == make_rational(3, 2));
    CHECK(p.target == Rational(1));
    CHECK(abs(p.samples[0].abs_error - BigReal::of(make_rational(1, 2), 50)) <
          pow10(-40, 50));
    CHECK(p.samples[0].digits_correct == 0);
}

TEST_CASE("convergence profile improves along the grid", "[series]") {
    SeriesId thm1;
    thm1.tag = SeriesId::Tag::thm1_i;
    ConvergenceProfile p = convergence_profile(thm1, 1, {10, 100, 1000});
    REQUIRE(p.samples.size() == 3);
    CHECK(p.samples[0].digits_correct < p.samples[1].digits_correct);
    CHECK(p.samples[1].digits_correct < p.samples[2].digits_correct);

    SeriesId baseline;
    baseline.tag = SeriesId::Tag::ramanujan_baseline;
    baseline.s = 2;
    ConvergenceProfile b = convergence_profile(baseline, 1, {10, 100, 1000});
    CHECK(b.samples[0].digits_correct <= b.samples[2].digits_correct);
    // the baseline error tracks the tail of sum mu(k)/k^2, roughly 1/T
    CHECK(b.samples[2].abs_error < BigReal::of(0.01, 50));
    CHECK(BigReal::of(1e-7, 50) < b.samples[2].abs_error);
}

TEST_CASE("series id parsing", "[series]") {
    CHECK(SeriesId::parse("thm1-i").name() == "thm1-i");
    CHECK(SeriesId::parse("lemma6-ii").name() == "lemma6-ii");
    CHECK(SeriesId::parse("ramanujan-baseline-2").name() == "ramanujan-baseline-2");
    CHECK(SeriesId::parse("ramanujan-baseline(3)").name() == "ramanujan-baseline-3");
    CHECK_THROWS_AS(SeriesId::parse("thm1-iv"), std::invalid_argument);
}

TEST_CASE("series input validation", "[series]") {
    CHECK_THROWS_AS(eval_theorem1(Thm1Variant::i, 0, 10), std::invalid_argument);
    CHECK_THROWS_AS(eval_theorem1(Thm1Variant::i, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(convolved_coefficient(0, 1, WeightKind::central_binomial),
                    std::invalid_argument);
}

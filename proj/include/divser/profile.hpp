#pragma once

// Convergence profiling: evaluate a named series on a truncation grid and
// record absolute errors and digits-correct against its exact target.

#include "divser/bigreal.hpp"
#include "divser/identities.hpp"
#include "divser/numeric.hpp"
#include "divser/series.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace divser {

struct SeriesId {
    enum class Tag { thm1_i, thm1_ii, thm1_iii, lemma3, lemma4, ramanujan_baseline, lemma6_ii,
                     lemma6_iii };
    Tag tag = Tag::thm1_i;
    int s = 2; // baseline exponent, used only by ramanujan_baseline

    std::string name() const {
        switch (tag) {
            case Tag::thm1_i: return "thm1-i";
            case Tag::thm1_ii: return "thm1-ii";
            case Tag::thm1_iii: return "thm1-iii";
            case Tag::lemma3: return "lemma3";
            case Tag::lemma4: return "lemma4";
            case Tag::ramanujan_baseline: return "ramanujan-baseline-" + std::to_string(s);
            case Tag::lemma6_ii: return "lemma6-ii";
            case Tag::lemma6_iii: return "lemma6-iii";
        }
        return "?";
    }

    static SeriesId parse(const std::string& text) {
        SeriesId id;
        if (text == "thm1-i") id.tag = Tag::thm1_i;
        else if (text == "thm1-ii") id.tag = Tag::thm1_ii;
        else if (text == "thm1-iii") id.tag = Tag::thm1_iii;
        else if (text == "lemma3") id.tag = Tag::lemma3;
        else if (text == "lemma4") id.tag = Tag::lemma4;
        else if (text == "lemma6-ii") id.tag = Tag::lemma6_ii;
        else if (text == "lemma6-iii") id.tag = Tag::lemma6_iii;
        else if (text.rfind("ramanujan-baseline", 0) == 0) {
            id.tag = Tag::ramanujan_baseline;
            std::string rest = text.substr(18);
            if (rest.empty()) id.s = 2;
            else if (rest.size() >= 2 && (rest[0] == '-' || rest[0] == '(')) {
                std::string digits = rest.substr(1);
                if (!digits.empty() && digits.back() == ')') digits.pop_back();
                id.s = std::stoi(digits);
            } else {
                throw std::invalid_argument("unknown series: '" + text + "'");
            }
            if (id.s < 2) throw std::invalid_argument("baseline exponent must be >= 2");
        } else {
            throw std::invalid_argument("unknown series: '" + text + "'");
        }
        return id;
    }
};

struct ConvergenceSample {
    std::uint64_t terms = 0;
    bool exact = true;          // whether `value` is an exact rational
    Rational value;             // valid when exact
    BigReal value_real;         // valid when !exact
    BigReal abs_error;
    long digits_correct = 0;
};

struct ConvergenceProfile {
    SeriesId series;
    BigInt n_input;
    bool target_exact = true;
    Rational target;            // valid when target_exact
    BigReal target_real;        // always populated (target at working precision)
    long precision = BigReal::kDefaultDigits;
    std::vector<ConvergenceSample> samples;
};

namespace detail {

struct SeriesEvaluation {
    bool exact = true;
    Rational value;
    BigReal value_real;
};

inline SeriesEvaluation evaluate_series(const SeriesId& id, const BigInt& N, std::uint64_t terms,
                                        long precision) {
    SeriesEvaluation ev;
    switch (id.tag) {
        case SeriesId::Tag::thm1_i: ev.value = eval_theorem1(Thm1Variant::i, N, terms); break;
        case SeriesId::Tag::thm1_ii: ev.value = eval_theorem1(Thm1Variant::ii, N, terms); break;
        case SeriesId::Tag::thm1_iii: ev.value = eval_theorem1(Thm1Variant::iii, N, terms); break;
        case SeriesId::Tag::lemma3: ev.value = eval_lemma3(N, terms); break;
        case SeriesId::Tag::lemma4: ev.value = eval_lemma4(N, terms); break;
        case SeriesId::Tag::lemma6_ii: ev.value = eval_lemma6(Lemma6Variant::ii, N, terms); break;
        case SeriesId::Tag::lemma6_iii:
            ev.value = eval_lemma6(Lemma6Variant::iii, N, terms);
            break;
        case SeriesId::Tag::ramanujan_baseline:
            ev.exact = false;
            ev.value_real = eval_ramanujan_baseline(id.s, N, terms, precision);
            break;
    }
    return ev;
}

struct SeriesTarget {
    bool exact = true;
    Rational target;
    BigReal target_real;
};

inline SeriesTarget series_target(const SeriesId& id, const BigInt& N, long precision) {
    SeriesTarget t;
    switch (id.tag) {
        case SeriesId::Tag::thm1_i: t.target = sigma_ratio_target(1, N); break;
        case SeriesId::Tag::thm1_ii: t.target = sigma_ratio_target(2, N); break;
        case SeriesId::Tag::thm1_iii: t.target = sigma_ratio_target(3, N); break;
        case SeriesId::Tag::lemma6_ii: t.target = sigma_ratio_target(2, N); break;
        case SeriesId::Tag::lemma6_iii: t.target = sigma_ratio_target(3, N); break;
        case SeriesId::Tag::ramanujan_baseline:
            t.target = sigma_ratio_target(static_cast<unsigned>(id.s - 1), N);
            break;
        case SeriesId::Tag::lemma3:
            t.exact = false;
            t.target_real = lemma3_target(N, precision);
            break;
        case SeriesId::Tag::lemma4:
            t.exact = false;
            t.target_real = lemma4_target(N, precision);
            break;
    }
    if (t.exact) t.target_real = BigReal::of(t.target, precision + 10).round_to(precision);
    return t;
}

} // namespace detail

inline ConvergenceProfile convergence_profile(const SeriesId& id, const BigInt& N,
                                              std::vector<std::uint64_t> term_grid,
                                              long precision = BigReal::kDefaultDigits) {
    require_positive(N, "N");
    if (term_grid.empty()) throw std::invalid_argument("term grid must be nonempty");
    std::sort(term_grid.begin(), term_grid.end());
    term_grid.erase(std::unique(term_grid.begin(), term_grid.end()), term_grid.end());
    const long work = precision + 10;
    ConvergenceProfile profile;
    profile.series = id;
    profile.n_input = N;
    profile.precision = precision;
    detail::SeriesTarget target = detail::series_target(id, N, precision);
    profile.target_exact = target.exact;
    profile.target = target.target;
    profile.target_real = target.target_real;

    for (std::uint64_t terms : term_grid) {
        detail::SeriesEvaluation ev = detail::evaluate_series(id, N, terms, precision);
        ConvergenceSample sample;
        sample.terms = terms;
        sample.exact = ev.exact;
        BigReal value_real =
            ev.exact ? BigReal::of(ev.value, work) : ev.value_real.round_to(work);
        if (ev.exact) sample.value = ev.value;
        sample.value_real = value_real.round_to(precision);
        if (ev.exact && target.exact) {
            // both sides rational: the error itself is exact, no cancellation
            sample.abs_error =
                BigReal::of(abs_rational(ev.value - target.target), work).round_to(precision);
        } else {
            BigReal target_real = target.exact ? BigReal::of(target.target, work)
                                               : target.target_real.round_to(work);
            sample.abs_error = abs(value_real - target_real).round_to(precision);
        }
        sample.digits_correct = digits_correct(sample.abs_error, precision);
        profile.samples.push_back(std::move(sample));
    }
    return profile;
}

} // namespace divser

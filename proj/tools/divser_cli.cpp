// divser: compute, evaluate, benchmark and verify the rapidly convergent
// divisor-function series and the zeta-function series behind them.

#include "divser/divser.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace divser;

struct CommonOptions {
    std::string format = "plain"; // plain | csv | report
    long precision = BigReal::kDefaultDigits;
    std::string out_path;
    long decimal = -1; // when >= 0, rationals are rendered as decimals
};

void add_common(CLI::App* cmd, CommonOptions& opt, const char* default_format) {
    opt.format = default_format;
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"plain", "csv", "report"}));
    cmd->add_option("--precision", opt.precision, "working precision in decimal digits")
        ->check(CLI::Range(20l, 10000l));
    cmd->add_option("--out", opt.out_path, "write output to a file instead of stdout");
    cmd->add_option("--decimal", opt.decimal,
                    "render exact rationals as decimals with this many digits");
}

void emit(const CommonOptions& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + opt.out_path);
    out << text;
}

std::string render_rational(const Rational& q, const CommonOptions& opt) {
    if (opt.decimal >= 0) return rational_to_decimal(q, std::max(opt.decimal, 2l));
    return rational_to_string(q);
}

void emit_value_doc(const CommonOptions& opt, ReportDocument doc, const std::string& plain) {
    doc.precision = opt.precision;
    if (opt.format == "csv") emit(opt, to_csv(doc));
    else if (opt.format == "report") emit(opt, to_report(doc));
    else emit(opt, plain + "\n");
}

std::vector<std::string> profile_row(const ConvergenceProfile& p, const ConvergenceSample& s,
                                     const CommonOptions& opt) {
    std::string value = s.exact ? render_rational(s.value, opt) : s.value_real.to_string();
    std::string target = p.target_exact ? render_rational(p.target, opt)
                                        : p.target_real.to_string();
    return {p.series.name(),      p.n_input.get_str(),        std::to_string(s.terms),
            value,                target,                     s.abs_error.to_string(3),
            std::to_string(s.digits_correct)};
}

const std::vector<std::string> kProfileHeader = {"series", "N",         "terms",
                                                 "value",  "target",    "abs_error",
                                                 "digits_correct"};

int run(int argc, char** argv) {
    CLI::App app{"rapidly convergent series of the divisor functions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    // ---- sigma ----
    auto* sigma_cmd = app.add_subcommand("sigma", "sum of divisors sigma_s(n)");
    std::string sigma_n;
    unsigned sigma_s = 1;
    CommonOptions sigma_opt;
    sigma_cmd->add_option("--n", sigma_n, "argument n >= 1")->required();
    sigma_cmd->add_option("--s", sigma_s, "exponent s >= 0");
    add_common(sigma_cmd, sigma_opt, "plain");

    // ---- cksum ----
    auto* cksum_cmd = app.add_subcommand("cksum", "Ramanujan sum c_k(n)");
    std::string cksum_k, cksum_n;
    CommonOptions cksum_opt;
    cksum_cmd->add_option("--k", cksum_k, "modulus k >= 1")->required();
    cksum_cmd->add_option("--n", cksum_n, "argument n >= 1")->required();
    add_common(cksum_cmd, cksum_opt, "plain");

    // ---- coeff ----
    auto* coeff_cmd = app.add_subcommand("coeff", "convolved coefficient a_n");
    std::uint64_t coeff_n = 1;
    std::string coeff_N = "1";
    std::string coeff_weight = "cb";
    CommonOptions coeff_opt;
    coeff_cmd->add_option("--n", coeff_n, "coefficient index n >= 1")->required();
    coeff_cmd->add_option("--N", coeff_N, "divisor-function argument N >= 1")->required();
    coeff_cmd->add_option("--weight", coeff_weight, "cb | alt-cb | geom-half | sqfree");
    add_common(coeff_cmd, coeff_opt, "plain");

    // ---- eval ----
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a series at a truncation");
    std::string eval_series = "thm1-i";
    std::string eval_N = "1";
    std::uint64_t eval_terms = 1000;
    CommonOptions eval_opt;
    eval_cmd->add_option("--series", eval_series,
                         "thm1-i|thm1-ii|thm1-iii|lemma3|lemma4|lemma6-ii|lemma6-iii|"
                         "ramanujan-baseline-<s>")
        ->required();
    eval_cmd->add_option("--N", eval_N, "divisor-function argument N >= 1")->required();
    eval_cmd->add_option("--terms", eval_terms, "number of outer terms");
    add_common(eval_cmd, eval_opt, "report");

    // ---- bench ----
    auto* bench_cmd = app.add_subcommand("bench", "convergence benchmark table");
    std::vector<std::string> bench_series;
    std::vector<std::string> bench_N;
    std::string bench_grid = "10,100,1000,10000";
    CommonOptions bench_opt;
    bench_cmd->add_option("--series", bench_series, "series tags (repeatable)");
    bench_cmd->add_option("--N", bench_N, "divisor-function arguments (repeatable)");
    bench_cmd->add_option("--grid", bench_grid, "comma-separated truncation grid");
    add_common(bench_cmd, bench_opt, "csv");

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run the identity verification suites");
    std::string verify_suite = "all";
    CommonOptions verify_opt;
    verify_cmd->add_option("--suite", verify_suite, "all|ramanujan|zeta|lemma5|leshchiner")
        ->check(CLI::IsMember({"all", "ramanujan", "zeta", "lemma5", "leshchiner"}));
    add_common(verify_cmd, verify_opt, "plain");

    // ---- scan-multiperfect ----
    auto* scan_cmd = app.add_subcommand("scan-multiperfect",
                                        "find N <= limit with sigma(N) = ratio * N");
    std::uint64_t scan_limit = 10000;
    std::uint64_t scan_ratio = 2;
    CommonOptions scan_opt;
    scan_cmd->add_option("--limit", scan_limit, "scan bound")->required();
    scan_cmd->add_option("--ratio", scan_ratio, "integer abundancy ratio >= 2")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{64}));
    add_common(scan_cmd, scan_opt, "plain");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // usage error
    }

    if (sigma_cmd->parsed()) {
        BigInt n = bigint_from_string(sigma_n);
        BigInt value = sigma(sigma_s, n);
        ReportDocument doc;
        doc.command = "sigma";
        doc.parameters = {{"n", n.get_str()}, {"s", std::to_string(sigma_s)}};
        doc.header = {"n", "s", "value"};
        doc.rows = {{n.get_str(), std::to_string(sigma_s), value.get_str()}};
        emit_value_doc(sigma_opt, std::move(doc), value.get_str());
        return 0;
    }

    if (cksum_cmd->parsed()) {
        BigInt k = bigint_from_string(cksum_k);
        BigInt n = bigint_from_string(cksum_n);
        BigInt value = ramanujan_hoelder(k, n);
        ReportDocument doc;
        doc.command = "cksum";
        doc.parameters = {{"k", k.get_str()}, {"n", n.get_str()}};
        doc.header = {"k", "n", "value"};
        doc.rows = {{k.get_str(), n.get_str(), value.get_str()}};
        emit_value_doc(cksum_opt, std::move(doc), value.get_str());
        return 0;
    }

    if (coeff_cmd->parsed()) {
        BigInt N = bigint_from_string(coeff_N);
        WeightKind weight = weight_from_string(coeff_weight);
        Rational value = convolved_coefficient(coeff_n, N, weight);
        std::string rendered = render_rational(value, coeff_opt);
        ReportDocument doc;
        doc.command = "coeff";
        doc.parameters = {{"n", std::to_string(coeff_n)},
                          {"N", N.get_str()},
                          {"weight", to_string(weight)}};
        doc.header = {"n", "N", "weight", "value"};
        doc.rows = {{std::to_string(coeff_n), N.get_str(), to_string(weight), rendered}};
        emit_value_doc(coeff_opt, std::move(doc), rendered);
        return 0;
    }

    if (eval_cmd->parsed()) {
        SeriesId id = SeriesId::parse(eval_series);
        BigInt N = bigint_from_string(eval_N);
        ConvergenceProfile profile =
            convergence_profile(id, N, {eval_terms}, eval_opt.precision);
        ReportDocument doc;
        doc.command = "eval";
        doc.precision = eval_opt.precision;
        doc.parameters = {{"series", id.name()},
                          {"N", N.get_str()},
                          {"terms", std::to_string(eval_terms)}};
        doc.header = kProfileHeader;
        doc.rows = {profile_row(profile, profile.samples.front(), eval_opt)};
        if (eval_opt.format == "plain") {
            std::ostringstream plain;
            const auto& s = profile.samples.front();
            plain << "value: " << (s.exact ? render_rational(s.value, eval_opt)
                                           : s.value_real.to_string());
            plain << "\ntarget: " << (profile.target_exact
                                          ? render_rational(profile.target, eval_opt)
                                          : profile.target_real.to_string());
            plain << "\nabs_error: " << s.abs_error.to_string(3);
            plain << "\ndigits_correct: " << s.digits_correct;
            emit_value_doc(eval_opt, std::move(doc), plain.str());
        } else {
            emit_value_doc(eval_opt, std::move(doc), "");
        }
        return 0;
    }

    if (bench_cmd->parsed()) {
        if (bench_series.empty()) bench_series = {"thm1-i", "ramanujan-baseline-2"};
        if (bench_N.empty()) bench_N = {"1", "6", "12"};
        std::vector<std::uint64_t> grid;
        std::stringstream gs(bench_grid);
        std::string tok;
        while (std::getline(gs, tok, ',')) {
            if (!tok.empty()) grid.push_back(std::stoull(tok));
        }
        if (grid.empty() || bench_series.empty() || bench_N.empty()) {
            std::cerr << "bench: series, N and grid must all be nonempty\n";
            return 2;
        }
        std::vector<SeriesId> ids;
        for (const auto& s : bench_series) ids.push_back(SeriesId::parse(s));
        ReportDocument doc;
        doc.command = "bench";
        doc.precision = bench_opt.precision;
        std::string series_param, n_param;
        for (const auto& s : bench_series) series_param += (series_param.empty() ? "" : ";") + s;
        for (const auto& s : bench_N) n_param += (n_param.empty() ? "" : ";") + s;
        doc.parameters = {{"series", series_param}, {"N", n_param}, {"grid", bench_grid}};
        doc.header = kProfileHeader;
        struct Key {
            std::string series;
            BigInt n;
            std::uint64_t terms;
            std::vector<std::string> row;
        };
        std::vector<Key> keyed;
        for (const auto& id : ids) {
            for (const auto& nstr : bench_N) {
                BigInt N = bigint_from_string(nstr);
                ConvergenceProfile p = convergence_profile(id, N, grid, bench_opt.precision);
                for (const auto& s : p.samples) {
                    keyed.push_back({id.name(), N, s.terms, profile_row(p, s, bench_opt)});
                }
            }
        }
        std::sort(keyed.begin(), keyed.end(), [](const Key& a, const Key& b) {
            if (a.series != b.series) return a.series < b.series;
            if (a.n != b.n) return a.n < b.n;
            return a.terms < b.terms;
        });
        for (auto& k : keyed) doc.rows.push_back(std::move(k.row));
        if (bench_opt.format == "report") emit(bench_opt, to_report(doc));
        else emit(bench_opt, to_csv(doc));
        return 0;
    }

    if (verify_cmd->parsed()) {
        std::vector<SuiteResult> results = run_suites(verify_suite, verify_opt.precision);
        std::ostringstream out;
        bool all_ok = true;
        for (const auto& r : results) {
            out << "suite " << r.suite << ": " << r.checks << " checks, " << r.failures
                << " failures " << (r.ok() ? "[ok]" : "[FAILED]") << "\n";
            for (const auto& note : r.notes) out << "  " << note << "\n";
            all_ok = all_ok && r.ok();
        }
        emit(verify_opt, out.str());
        return all_ok ? 0 : 1;
    }

    if (scan_cmd->parsed()) {
        std::vector<std::uint64_t> sums = sigma_table(scan_limit);
        ReportDocument doc;
        doc.command = "scan-multiperfect";
        doc.parameters = {{"limit", std::to_string(scan_limit)},
                          {"ratio", std::to_string(scan_ratio)}};
        doc.header = {"N", "sigma", "ratio"};
        std::ostringstream plain;
        for (std::uint64_t n = 1; n <= scan_limit; ++n) {
            if (sums[n] == scan_ratio * n) {
                doc.rows.push_back({std::to_string(n), std::to_string(sums[n]),
                                    std::to_string(scan_ratio)});
                plain << n << "\n";
            }
        }
        if (scan_opt.format == "csv") emit(scan_opt, to_csv(doc));
        else if (scan_opt.format == "report") emit(scan_opt, to_report(doc));
        else emit(scan_opt, plain.str());
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

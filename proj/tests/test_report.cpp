#include "divser/report.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace divser;

namespace {

ReportDocument sample_doc() {
    ReportDocument doc;
    doc.command = "bench";
    doc.parameters = {{"grid", "10;100"}, {"N", "1"}};
    doc.header = {"series", "N", "terms", "value"};
    doc.rows = {
        {"thm1-i", "1", "10", "1577467/1587600"},
        {"thm1-i", "1", "100", "-3/2"},
        {"ramanujan-baseline-2", "1", "10", "9.9207e-01"},
    };
    doc.precision = 50;
    return doc;
}

} // namespace

TEST_CASE("csv round-trip preserves rows exactly", "[report]") {
    ReportDocument doc = sample_doc();
    CsvTable parsed = parse_csv(to_csv(doc));
    CHECK(parsed.header == doc.header);
    REQUIRE(parsed.rows.size() == doc.rows.size());
    for (size_t i = 0; i < doc.rows.size(); ++i) CHECK(parsed.rows[i] == doc.rows[i]);
    // rational strings parse back to the same rational
    CHECK(rational_from_string(parsed.rows[0][3]) == make_rational(1577467, 1587600));
}

TEST_CASE("serialisation is deterministic", "[report]") {
    ReportDocument doc = sample_doc();
    CHECK(to_csv(doc) == to_csv(doc));
    CHECK(to_report(doc) == to_report(doc));
}

TEST_CASE("report format carries the full document", "[report]") {
    std::string text = to_report(sample_doc());
    CHECK(text.find("command: bench") != std::string::npos);
    CHECK(text.find("tool_version: ") != std::string::npos);
    CHECK(text.find("precision: 50") != std::string::npos);
    CHECK(text.find("param.grid: 10;100") != std::string::npos);
    CHECK(text.find("series,N,terms,value") != std::string::npos);
}

TEST_CASE("csv rejects unsafe fields and ragged rows", "[report]") {
    ReportDocument doc = sample_doc();
    doc.rows[0][0] = "a,b";
    CHECK_THROWS_AS(to_csv(doc), std::invalid_argument);
    doc = sample_doc();
    doc.rows[0].pop_back();
    CHECK_THROWS_AS(to_csv(doc), std::invalid_argument);
}

TEST_CASE("rational serialisation stays exact", "[report]") {
    Rational q = make_rational(BigInt("123456789012345678901234567890"), BigInt(7));
    std::string s = rational_to_string(q);
    CHECK(rational_from_string(s) == q);
    CHECK(rational_to_string(Rational(2)) == "2");
    CHECK(rational_to_string(make_rational(-5, 4)) == "-5/4");
}

TEST_CASE("decimal rendering has the requested digit count", "[report]") {
    std::string d = rational_to_decimal(make_rational(1, 3), 10);
    CHECK(d.substr(0, 12) == "3.333333333e");
    CHECK(rational_to_decimal(make_rational(3, 2), 5).substr(0, 7) == "1.5000e");
}

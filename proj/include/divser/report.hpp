#pragma once

// Machine-readable report documents. Two serialisations: bare CSV (header +
// rows) and a structured text format carrying the full document. Exact
// rationals are serialised as "p/q" strings and round-trip losslessly.

#include "divser/bigreal.hpp"
#include "divser/numeric.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace divser {

inline constexpr const char* kToolVersion = "0.1.0";

struct ReportDocument {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    long precision = BigReal::kDefaultDigits;
    std::string tool_version = kToolVersion;
};

namespace detail {

inline void require_csv_safe(const std::string& field) {
    if (field.find_first_of(",\n\r") != std::string::npos) {
        throw std::invalid_argument("field not CSV-safe: '" + field + "'");
    }
}

} // namespace detail

inline std::string to_csv(const ReportDocument& doc) {
    std::ostringstream out;
    for (size_t i = 0; i < doc.header.size(); ++i) {
        detail::require_csv_safe(doc.header[i]);
        out << (i ? "," : "") << doc.header[i];
    }
    out << "\n";
    for (const auto& row : doc.rows) {
        if (row.size() != doc.header.size()) {
            throw std::invalid_argument("row width does not match header");
        }
        for (size_t i = 0; i < row.size(); ++i) {
            detail::require_csv_safe(row[i]);
            out << (i ? "," : "") << row[i];
        }
        out << "\n";
    }
    return out.str();
}

inline std::string to_report(const ReportDocument& doc) {
    std::ostringstream out;
    out << "# divser report\n";
    out << "command: " << doc.command << "\n";
    out << "tool_version: " << doc.tool_version << "\n";
    out << "precision: " << doc.precision << "\n";
    for (const auto& [key, value] : doc.parameters) {
        out << "param." << key << ": " << value << "\n";
    }
    out << "\n";
    out << to_csv(doc);
    return out.str();
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline CsvTable parse_csv(const std::string& text) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (line.back() == ',') fields.emplace_back();
        if (first) {
            table.header = std::move(fields);
            first = false;
        } else {
            table.rows.push_back(std::move(fields));
        }
    }
    return table;
}

// Decimal rendering of an exact rational with `digits` significant digits.
inline std::string rational_to_decimal(const Rational& q, long digits) {
    return BigReal::of(q, digits + 10).round_to(digits).to_string(digits);
}

} // namespace divser

#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "sharpsob/constants.hpp"
#include "sharpsob/verify.hpp"

namespace sharpsob {

/// Column order of the constants table. Rational columns serialize as
/// exact "p/q" strings, radical columns in canonical exact text, and the
/// decimal columns at the requested precision.
inline const std::vector<std::string>& constants_csv_header() {
    static const std::vector<std::string> header = {
        "k",          "c_exact",       "c_squared",
        "c_decimal",  "landau_l1",     "landau_deriv_l2_sq",
        "kalyabin_lower", "kalyabin_upper_decimal", "galerkin_check"};
    return header;
}

inline std::string constants_csv(const std::vector<ConstantsRow>& rows, int digits) {
    std::ostringstream out;
    const auto& header = constants_csv_header();
    for (size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (const ConstantsRow& r : rows) {
        out << r.k << "," << r.c_exact.exact_string() << "," << to_string(r.c_squared) << ","
            << r.decimal << "," << to_string(r.landau_l1) << ","
            << to_string(r.landau_deriv_l2_sq) << "," << r.kalyabin_lower.exact_string() << ","
            << r.kalyabin_upper.decimal(digits) << "," << to_string(r.galerkin_check) << "\n";
    }
    return out.str();
}

inline nlohmann::json constants_json(const std::vector<ConstantsRow>& rows, int digits) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ConstantsRow& r : rows) {
        arr.push_back({{"k", r.k},
                       {"c_exact", r.c_exact.exact_string()},
                       {"c_squared", to_string(r.c_squared)},
                       {"c_decimal", r.decimal},
                       {"landau_l1", to_string(r.landau_l1)},
                       {"landau_deriv_l2_sq", to_string(r.landau_deriv_l2_sq)},
                       {"kalyabin_lower", r.kalyabin_lower.exact_string()},
                       {"kalyabin_upper_decimal", r.kalyabin_upper.decimal(digits)},
                       {"galerkin_check", to_string(r.galerkin_check)}});
    }
    return arr;
}

inline nlohmann::json report_json(const VerifyReport& report) {
    nlohmann::json cases = nlohmann::json::array();
    for (const CheckCase& c : report.cases) {
        nlohmann::json item = {{"id", c.id},
                               {"status", c.pass ? "pass" : "fail"},
                               {"exact", c.exact}};
        if (!c.witness.empty()) item["witness"] = c.witness;
        cases.push_back(std::move(item));
    }
    return {{"suite", report.suite},
            {"k", report.k},
            {"cases", std::move(cases)},
            {"pass", report.pass()},
            {"elapsed_ms", report.elapsed_ms}};
}

inline std::string report_csv(const VerifyReport& report) {
    std::ostringstream out;
    out << "id,status,exact,witness\n";
    for (const CheckCase& c : report.cases) {
        std::string witness = c.witness;
        for (char& ch : witness)
            if (ch == ',') ch = ';';
        out << c.id << "," << (c.pass ? "pass" : "fail") << ","
            << (c.exact ? "true" : "false") << "," << witness << "\n";
    }
    return out.str();
}

inline std::string report_text(const VerifyReport& report) {
    std::ostringstream out;
    out << "suite " << report.suite << " (k=" << report.k << ")\n";
    for (const CheckCase& c : report.cases) {
        out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id
            << (c.exact ? "" : " (float)");
        if (!c.witness.empty()) out << "  witness: " << c.witness;
        out << "\n";
    }
    out << (report.pass() ? "all checks passed" : "FAILURES present") << " in "
        << report.elapsed_ms << " ms\n";
    return out.str();
}

/// Parses a CSV document into cells; no quoting is used by the emitters.
inline std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (line.back() == ',') cells.push_back("");
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace sharpsob

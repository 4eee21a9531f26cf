#pragma once

// Reference tables in CSV form (`q,k,r_or_b,h_K,g_coeffs,f_coeffs,s,u`, one
// row per field, empty cells where the table prints nothing) and a row-wise
// diff against computed reports.

#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quartic/report.hpp"

namespace quartic {

struct GoldenRow {
    std::int64_t q = 0, k = 0, r_or_b = 0;
    std::int64_t h_K = 0;
    std::optional<IntPoly> g, f;
    std::optional<std::int64_t> s;
    std::optional<BigInt> u;
};

inline std::vector<GoldenRow> read_golden(std::istream& in, const std::string& source = "<golden>") {
    std::vector<GoldenRow> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (lineno == 1 && line.rfind("q,", 0) == 0) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        while (cells.size() < 8) cells.emplace_back();
        const std::string where = source + ":" + std::to_string(lineno);
        if (cells.size() != 8) throw std::invalid_argument(where + ": expected 8 columns");
        try {
            GoldenRow r;
            r.q = std::stoll(cells[0]);
            r.k = std::stoll(cells[1]);
            r.r_or_b = std::stoll(cells[2]);
            r.h_K = std::stoll(cells[3]);
            if (!cells[4].empty()) r.g = IntPoly::parse_coeff_list(cells[4]);
            if (!cells[5].empty()) r.f = IntPoly::parse_coeff_list(cells[5]);
            if (!cells[6].empty()) r.s = std::stoll(cells[6]);
            if (!cells[7].empty()) r.u = BigInt(cells[7]);
            rows.push_back(std::move(r));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(where + ": " + e.what());
        }
    }
    return rows;
}

inline std::vector<GoldenRow> load_golden(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open golden table " + path);
    return read_golden(in, path);
}

/// Human-readable differences; empty when the reports reproduce the table.
/// Polynomials computed for rows the table leaves blank are not differences.
inline std::vector<std::string> diff_against_golden(const std::vector<FieldReport>& reports,
                                                    const std::vector<GoldenRow>& golden) {
    std::vector<std::string> out;
    if (reports.size() != golden.size()) {
        out.push_back("row count: computed " + std::to_string(reports.size()) + ", table " +
                      std::to_string(golden.size()));
    }
    const std::size_t n = std::min(reports.size(), golden.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& r = reports[i];
        const auto& g = golden[i];
        const std::string tag = "row " + std::to_string(i + 1) + " (" + std::to_string(g.q) + "," +
                                std::to_string(g.k) + "," + std::to_string(g.r_or_b) + ")";
        if (r.q != g.q || r.k != g.k || r.r_or_b != g.r_or_b) {
            out.push_back(tag + ": computed parameters (" + std::to_string(r.q) + "," + std::to_string(r.k) + "," +
                          std::to_string(r.r_or_b) + ")");
            continue;
        }
        if (r.h_K != g.h_K) {
            out.push_back(tag + ": h_K computed " + (r.h_K ? std::to_string(*r.h_K) : std::string("?")) +
                          ", table " + std::to_string(g.h_K));
        }
        if (g.g && r.g != g.g) out.push_back(tag + ": g differs");
        if (g.f && r.f != g.f) out.push_back(tag + ": f differs");
        if (g.s && (!r.witness || r.witness->s != *g.s || r.witness->u != *g.u)) {
            out.push_back(tag + ": witness computed " +
                          (r.witness ? "(" + std::to_string(r.witness->s) + "," + r.witness->u.get_str() + ")"
                                     : std::string("none")) +
                          ", table (" + std::to_string(*g.s) + "," + g.u->get_str() + ")");
        }
        if (!g.s && r.witness) out.push_back(tag + ": computed a witness for a row the table marks ineligible");
    }
    return out;
}

}  // namespace quartic

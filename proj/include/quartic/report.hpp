#pragma once

// Per-field eligibility pipeline, parameter-grid sweeps, and serialisation of
// the resulting rows as CSV, JSON, or a LaTeX longtable.

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "quartic/class_number.hpp"
#include "quartic/errors.hpp"
#include "quartic/fields.hpp"
#include "quartic/witness.hpp"

namespace quartic {

enum class Family { Biquadratic, Cyclic };

inline const char* to_string(Family f) { return f == Family::Biquadratic ? "biquadratic" : "cyclic"; }

inline Family family_from_string(const std::string& s) {
    if (s == "biquadratic" || s == "biq") return Family::Biquadratic;
    if (s == "cyclic" || s == "cyc") return Family::Cyclic;
    throw std::invalid_argument("unknown family '" + s + "'");
}

enum class ClassNumberSource { ComputedKuroda, Fixture, Undetermined };

inline const char* to_string(ClassNumberSource s) {
    switch (s) {
        case ClassNumberSource::ComputedKuroda: return "computed-kuroda";
        case ClassNumberSource::Fixture: return "fixture";
        case ClassNumberSource::Undetermined: return "undetermined";
    }
    return "?";
}

inline ClassNumberSource class_number_source_from_string(const std::string& s) {
    if (s == "computed-kuroda") return ClassNumberSource::ComputedKuroda;
    if (s == "fixture") return ClassNumberSource::Fixture;
    if (s == "undetermined") return ClassNumberSource::Undetermined;
    throw std::invalid_argument("unknown class-number source '" + s + "'");
}

/// One table row. Optional fields are absent when an earlier stage failed
/// (invalid parameters, unknown class number, ineligible field).
struct FieldReport {
    Family family = Family::Biquadratic;
    std::int64_t q = 0, k = 0, r_or_b = 0;
    std::optional<BigInt> conductor;
    std::optional<BigInt> discriminant;
    std::optional<std::int64_t> h_K;
    ClassNumberSource h_K_source = ClassNumberSource::Undetermined;
    bool eligible = false;
    std::optional<IntPoly> g;
    std::optional<IntPoly> f;
    std::optional<WitnessPair> witness;
    std::vector<std::string> diagnostics;

    friend bool operator==(const FieldReport& a, const FieldReport& b) {
        const auto same_witness = [](const std::optional<WitnessPair>& x, const std::optional<WitnessPair>& y) {
            if (x.has_value() != y.has_value()) return false;
            return !x || (x->s == y->s && x->u == y->u && x->ell == y->ell);
        };
        return a.family == b.family && a.q == b.q && a.k == b.k && a.r_or_b == b.r_or_b &&
               a.conductor == b.conductor && a.discriminant == b.discriminant && a.h_K == b.h_K &&
               a.h_K_source == b.h_K_source && a.eligible == b.eligible && a.g == b.g && a.f == b.f &&
               same_witness(a.witness, b.witness) && a.diagnostics == b.diagnostics;
    }
};

struct PipelineOptions {
    const ClassNumberFixture* fixture = nullptr;  // cyclic family only
    std::int64_t search_bound = kDefaultSearchBound;
};

namespace detail {

template <class Spec>
void fill_field_data(FieldReport& rep, const Spec& spec) {
    rep.conductor = conductor(spec);
    rep.discriminant = discriminant(spec);
    rep.g = min_poly_K(spec);
    rep.f = min_poly_H(spec);
}

template <class Spec>
void fill_witness(FieldReport& rep, const Spec& spec, const PipelineOptions& opt) {
    rep.eligible = rep.h_K && *rep.h_K == 2;
    if (!rep.eligible) {
        rep.diagnostics.push_back("h_K = " + std::to_string(*rep.h_K) + " is not 2");
        return;
    }
    rep.witness = compute_witness(spec, opt.search_bound);
}

}  // namespace detail

/// Runs every hypothesis check for one parameter triple. Throws
/// HypothesisViolation for invalid parameters, UnknownClassNumber for a cyclic
/// field with no fixture entry, SearchExhausted if no witness is found.
inline FieldReport build_report(Family family, std::int64_t q, std::int64_t k, std::int64_t r_or_b,
                                const PipelineOptions& opt = {}) {
    FieldReport rep;
    rep.family = family;
    rep.q = q;
    rep.k = k;
    rep.r_or_b = r_or_b;
    if (family == Family::Biquadratic) {
        const auto spec = validate_biquadratic(q, k, r_or_b);
        detail::fill_field_data(rep, spec);
        rep.h_K = class_number_biquadratic(spec);
        rep.h_K_source = ClassNumberSource::ComputedKuroda;
        detail::fill_witness(rep, spec, opt);
    } else {
        const auto spec = validate_cyclic(q, k, r_or_b);
        detail::fill_field_data(rep, spec);
        if (opt.fixture == nullptr) throw UnknownClassNumber("no class-number fixture supplied for the cyclic family");
        rep.h_K = class_number_cyclic(spec, *opt.fixture);
        rep.h_K_source = ClassNumberSource::Fixture;
        detail::fill_witness(rep, spec, opt);
    }
    return rep;
}

/// Same pipeline, but failures become diagnostics on the returned row.
inline FieldReport build_report_lenient(Family family, std::int64_t q, std::int64_t k, std::int64_t r_or_b,
                                        const PipelineOptions& opt = {}) {
    try {
        return build_report(family, q, k, r_or_b, opt);
    } catch (const HypothesisViolation& e) {
        FieldReport rep;
        rep.family = family;
        rep.q = q;
        rep.k = k;
        rep.r_or_b = r_or_b;
        rep.diagnostics = e.failures();
        return rep;
    } catch (const UnknownClassNumber& e) {
        FieldReport rep;
        rep.family = family;
        rep.q = q;
        rep.k = k;
        rep.r_or_b = r_or_b;
        detail::fill_field_data(rep, validate_cyclic(q, k, r_or_b));
        rep.diagnostics.push_back(std::string("class number unknown: ") + e.what());
        return rep;
    } catch (const SearchExhausted& e) {
        FieldReport rep;
        rep.family = family;
        rep.q = q;
        rep.k = k;
        rep.r_or_b = r_or_b;
        rep.diagnostics.push_back(std::string("witness search exhausted: ") + e.what());
        return rep;
    }
}

struct BiquadraticRanges {
    std::int64_t q_min = 0, q_max = -1;
    std::int64_t kr_min = 0, kr_max = -1;
};

struct CyclicRanges {
    std::int64_t q_min = 0, q_max = -1;
    std::int64_t k_min = 0, k_max = -1;
    std::int64_t b_min = 0, b_max = -1;
    std::optional<std::int64_t> root_max;  // bound on sqrt(k - b^2)
};

/// The ranges behind the printed biquadratic table.
inline BiquadraticRanges table1_ranges() { return {29, 41, 29, 100}; }

/// The printed cyclic table uses k = b^2 + c^2 with odd c <= 9 rather than
/// its stated k-range; these ranges reproduce it row for row.
inline CyclicRanges table2_ranges() { return {17, 41, 17, 337, 4, 16, 9}; }

struct ParamTriple {
    std::int64_t q, k, x;
};

namespace detail {

inline std::vector<std::int64_t> primes_1_mod_4(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t p : primes_in_range(lo, hi)) {
        if (p % 4 == 1) out.push_back(p);
    }
    return out;
}

}  // namespace detail

/// (q, {k < r}) with distinct q-roles as distinct rows, ordered by (q, k, r).
inline std::vector<ParamTriple> enumerate_grid(const BiquadraticRanges& R) {
    std::vector<ParamTriple> out;
    const auto qs = detail::primes_1_mod_4(R.q_min, R.q_max);
    const auto ks = detail::primes_1_mod_4(R.kr_min, R.kr_max);
    for (std::int64_t q : qs) {
        for (std::size_t i = 0; i < ks.size(); ++i) {
            if (ks[i] == q) continue;
            for (std::size_t j = i + 1; j < ks.size(); ++j) {
                if (ks[j] == q) continue;
                out.push_back({q, ks[i], ks[j]});
            }
        }
    }
    return out;
}

/// Ordered by (q, b, k), the layout of the printed cyclic table.
inline std::vector<ParamTriple> enumerate_grid(const CyclicRanges& R) {
    std::vector<ParamTriple> out;
    const auto qs = detail::primes_1_mod_4(R.q_min, R.q_max);
    const auto ks = detail::primes_1_mod_4(R.k_min, R.k_max);
    const std::int64_t b_start = std::max<std::int64_t>(4, (R.b_min + 3) / 4 * 4);
    for (std::int64_t q : qs) {
        for (std::int64_t b = b_start; b <= R.b_max; b += 4) {
            for (std::int64_t k : ks) {
                if (k == q || k <= b * b) continue;
                const auto root = is_perfect_square(k - b * b);
                if (!root) continue;
                if (R.root_max && *root > *R.root_max) continue;
                out.push_back({q, k, b});
            }
        }
    }
    return out;
}

/// Reports for every tuple, computed on `workers` threads and returned in
/// enumeration order, so output does not depend on scheduling.
inline std::vector<FieldReport> run_grid(Family family, const std::vector<ParamTriple>& tuples,
                                         const PipelineOptions& opt, unsigned workers = 1) {
    std::vector<FieldReport> out(tuples.size());
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t i = next++; i < tuples.size(); i = next++) {
            const auto& t = tuples[i];
            out[i] = build_report_lenient(family, t.q, t.k, t.x, opt);
        }
    };
    workers = std::max(1U, workers);
    if (workers == 1) {
        work();
        return out;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    pool.clear();  // joins
    return out;
}

inline std::vector<FieldReport> search_grid(const BiquadraticRanges& R, const PipelineOptions& opt = {},
                                            unsigned workers = 1) {
    return run_grid(Family::Biquadratic, enumerate_grid(R), opt, workers);
}

inline std::vector<FieldReport> search_grid(const CyclicRanges& R, const PipelineOptions& opt = {},
                                            unsigned workers = 1) {
    return run_grid(Family::Cyclic, enumerate_grid(R), opt, workers);
}

// ---------------------------------------------------------------------------
// Serialisation

enum class Format { Csv, Json, Latex };

inline Format format_from_string(const std::string& s) {
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    if (s == "latex") return Format::Latex;
    throw std::invalid_argument("unknown output format '" + s + "' (expected csv, json, latex)");
}

inline constexpr const char* kCsvHeader =
    "family,q,k,r_or_b,conductor,discriminant,h_K,h_K_source,eligible,g_coeffs,f_coeffs,s,u";

inline std::string emit_csv(const std::vector<FieldReport>& reports) {
    std::string out = kCsvHeader;
    out += '\n';
    const auto opt_big = [](const std::optional<BigInt>& v) { return v ? v->get_str() : std::string(); };
    for (const auto& r : reports) {
        out += to_string(r.family);
        out += ',' + std::to_string(r.q) + ',' + std::to_string(r.k) + ',' + std::to_string(r.r_or_b);
        out += ',' + opt_big(r.conductor) + ',' + opt_big(r.discriminant);
        out += ',' + (r.h_K ? std::to_string(*r.h_K) : std::string());
        out += ',' + std::string(to_string(r.h_K_source));
        out += r.eligible ? ",true" : ",false";
        out += ',' + (r.g ? r.g->coeff_list() : std::string());
        out += ',' + (r.f ? r.f->coeff_list() : std::string());
        out += ',' + (r.witness ? std::to_string(r.witness->s) : std::string());
        out += ',' + (r.witness ? r.witness->u.get_str() : std::string());
        out += '\n';
    }
    return out;
}

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson big_to_json(const BigInt& v) {
    if (v.fits_slong_p()) return ojson(static_cast<std::int64_t>(v.get_si()));
    return ojson(v.get_str());
}

inline BigInt big_from_json(const ojson& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline ojson poly_to_json(const std::optional<IntPoly>& p) {
    if (!p) return nullptr;
    ojson arr = ojson::array();
    for (const auto& c : p->coefficients()) arr.push_back(big_to_json(c));
    return arr;
}

inline std::optional<IntPoly> poly_from_json(const ojson& j) {
    if (j.is_null()) return std::nullopt;
    std::vector<BigInt> c;
    for (const auto& v : j) c.push_back(big_from_json(v));
    return IntPoly(std::move(c));
}

inline ojson report_to_json(const FieldReport& r) {
    ojson o;
    o["family"] = to_string(r.family);
    o["q"] = r.q;
    o["k"] = r.k;
    o["r_or_b"] = r.r_or_b;
    o["conductor"] = r.conductor ? big_to_json(*r.conductor) : ojson(nullptr);
    o["discriminant"] = r.discriminant ? big_to_json(*r.discriminant) : ojson(nullptr);
    o["h_K"] = r.h_K ? ojson(*r.h_K) : ojson(nullptr);
    o["h_K_source"] = to_string(r.h_K_source);
    o["eligible"] = r.eligible;
    o["g_coeffs"] = poly_to_json(r.g);
    o["f_coeffs"] = poly_to_json(r.f);
    o["s"] = r.witness ? ojson(r.witness->s) : ojson(nullptr);
    o["u"] = r.witness ? big_to_json(r.witness->u) : ojson(nullptr);
    o["ell"] = r.witness ? big_to_json(r.witness->ell) : ojson(nullptr);
    o["diagnostics"] = r.diagnostics;
    return o;
}

inline FieldReport report_from_json(const ojson& o) {
    FieldReport r;
    r.family = family_from_string(o.at("family").get<std::string>());
    r.q = o.at("q").get<std::int64_t>();
    r.k = o.at("k").get<std::int64_t>();
    r.r_or_b = o.at("r_or_b").get<std::int64_t>();
    if (!o.at("conductor").is_null()) r.conductor = big_from_json(o.at("conductor"));
    if (!o.at("discriminant").is_null()) r.discriminant = big_from_json(o.at("discriminant"));
    if (!o.at("h_K").is_null()) r.h_K = o.at("h_K").get<std::int64_t>();
    r.h_K_source = class_number_source_from_string(o.at("h_K_source").get<std::string>());
    r.eligible = o.at("eligible").get<bool>();
    r.g = poly_from_json(o.at("g_coeffs"));
    r.f = poly_from_json(o.at("f_coeffs"));
    if (!o.at("s").is_null()) {
        WitnessPair w;
        w.s = o.at("s").get<std::int64_t>();
        w.u = big_from_json(o.at("u"));
        w.ell = big_from_json(o.at("ell"));
        w.conditions_verified = {true, true, true};
        r.witness = w;
    }
    r.diagnostics = o.at("diagnostics").get<std::vector<std::string>>();
    return r;
}

}  // namespace detail

/// A JSON array, one compact object per line.
inline std::string emit_json(const std::vector<FieldReport>& reports) {
    std::string out = "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        out += i ? ",\n" : "\n";
        out += detail::report_to_json(reports[i]).dump();
    }
    out += reports.empty() ? "]\n" : "\n]\n";
    return out;
}

inline std::vector<FieldReport> parse_json(const std::string& text) {
    const auto doc = detail::ojson::parse(text);
    if (!doc.is_array()) throw std::invalid_argument("report JSON must be an array");
    std::vector<FieldReport> out;
    for (const auto& o : doc) out.push_back(detail::report_from_json(o));
    return out;
}

/// Polynomial in the tables' compact style: `y^8-428y^6+38462y^4`.
inline std::string latex_poly(const IntPoly& p, const std::string& var) {
    std::string s = p.to_string(var);
    std::string out;
    for (char ch : s) {
        if (ch != ' ') out += ch;
    }
    return out;
}

/// Longtable with the column layout (parameters, h_K, f over g, (s,u)).
/// Polynomials and witnesses are printed for eligible rows only.
inline std::string emit_latex(const std::vector<FieldReport>& reports) {
    std::ostringstream os;
    const bool cyclic = !reports.empty() && reports.front().family == Family::Cyclic;
    os << "\\begin{longtable}{cccc}\n";
    os << (cyclic ? "$(q,k,b)$" : "$(q,k,r)$") << " & $h_K$ & $f(y),\\,g(x)$ & $(s,u)$\\\\\n\\hline\n\\endhead\n";
    for (const auto& r : reports) {
        os << "$(" << r.q << ", " << r.k << ", " << r.r_or_b << ")$&";
        os << (r.h_K ? "$" + std::to_string(*r.h_K) + "$" : std::string("?")) << "&";
        if (r.eligible && r.f && r.g && r.witness) {
            os << "$" << latex_poly(*r.f, "y") << "$&$(" << r.witness->s << "," << r.witness->u.get_str()
               << ")$\\\\\n";
            os << "&&$" << latex_poly(*r.g, "x") << "$&\\\\\n";
        } else {
            os << " &\\\\\n";
        }
    }
    os << "\\end{longtable}\n";
    return os.str();
}

inline std::string emit(const std::vector<FieldReport>& reports, Format fmt) {
    switch (fmt) {
        case Format::Csv: return emit_csv(reports);
        case Format::Json: return emit_json(reports);
        case Format::Latex: return emit_latex(reports);
    }
    throw std::invalid_argument("unknown format");
}

inline std::string emit(const std::vector<FieldReport>& reports, const std::string& fmt) {
    return emit(reports, format_from_string(fmt));
}

// ---------------------------------------------------------------------------
// Run configuration: `key = value` lines, `#` comments.
//   search_bound  largest candidate for the witness prime s (default 10^6)
//   workers       grid worker threads (default 1)
// QUARTIC_WORKERS in the environment overrides `workers`; it changes
// resources only, never results.

struct RunConfig {
    std::int64_t search_bound = kDefaultSearchBound;
    unsigned workers = 1;

    static RunConfig parse(std::istream& in, const std::string& source = "<config>") {
        RunConfig cfg;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            const auto eq = line.find('=');
            const auto trim = [](std::string s) {
                const auto b = s.find_first_not_of(" \t\r");
                if (b == std::string::npos) return std::string();
                return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
            };
            if (trim(line).empty()) continue;
            const std::string where = source + ":" + std::to_string(lineno);
            if (eq == std::string::npos) throw std::invalid_argument(where + ": expected key = value");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            long long v = 0;
            try {
                std::size_t pos = 0;
                v = std::stoll(value, &pos);
                if (pos != value.size()) throw std::invalid_argument(value);
            } catch (const std::exception&) {
                throw std::invalid_argument(where + ": '" + value + "' is not an integer");
            }
            if (key == "search_bound") {
                if (v < 3) throw std::invalid_argument(where + ": search_bound must be >= 3");
                cfg.search_bound = v;
            } else if (key == "workers") {
                if (v < 1) throw std::invalid_argument(where + ": workers must be >= 1");
                cfg.workers = static_cast<unsigned>(v);
            } else {
                throw std::invalid_argument(where + ": unknown key '" + key + "'");
            }
        }
        return cfg;
    }

    static RunConfig load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open config file " + path);
        return parse(in, path);
    }

    void apply_environment() {
        if (const char* w = std::getenv("QUARTIC_WORKERS")) {
            const long v = std::strtol(w, nullptr, 10);
            if (v >= 1) workers = static_cast<unsigned>(v);
        }
    }
};

}  // namespace quartic

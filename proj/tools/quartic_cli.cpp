// Command-line front end: hypothesis checks, grid searches, witness audits,
// Motzkin ladders, and regeneration of the two reference tables.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quartic/errors.hpp"
#include "quartic/golden.hpp"
#include "quartic/motzkin.hpp"
#include "quartic/report.hpp"
#include "quartic/witness.hpp"

#ifndef QUARTIC_DEFAULT_FIXTURE
#define QUARTIC_DEFAULT_FIXTURE ""
#endif

namespace {

using namespace quartic;

int code(ExitCode c) { return static_cast<int>(c); }

struct Common {
    std::string format = "csv";
    std::string config;
    unsigned workers = 0;  // 0: take from config / environment
    std::int64_t search_bound = 0;
    std::string fixture = QUARTIC_DEFAULT_FIXTURE;

    RunConfig resolve() const {
        RunConfig cfg = config.empty() ? RunConfig{} : RunConfig::load(config);
        cfg.apply_environment();
        if (workers > 0) cfg.workers = workers;
        if (search_bound > 0) cfg.search_bound = search_bound;
        return cfg;
    }
};

void add_common(CLI::App* app, Common& c, bool with_fixture) {
    app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json", "latex"}));
    app->add_option("--config", c.config, "key=value configuration file")->check(CLI::ExistingFile);
    app->add_option("--workers", c.workers, "Worker threads (resources only)")->check(CLI::PositiveNumber);
    app->add_option("--search-bound", c.search_bound, "Largest candidate for the witness prime s")
        ->check(CLI::Range(std::int64_t{3}, std::int64_t{1} << 40));
    if (with_fixture) app->add_option("--fixture", c.fixture, "Cyclic class-number fixture");
}

std::optional<ClassNumberFixture> load_fixture(const std::string& path) {
    if (path.empty()) return std::nullopt;
    return ClassNumberFixture::load(path);
}

struct Params {
    std::int64_t q = 0, k = 0, x = 0;
};

void print_audit(const ConditionReport& rep) {
    std::cout << "ell=" << rep.ell.get_str() << '\n';
    for (std::size_t i = 0; i < 3; ++i) {
        std::cout << "condition (" << i + 1 << "): " << (rep.passed[i] ? "pass" : "FAIL") << "  " << rep.detail[i]
                  << '\n';
    }
}

template <class Spec>
int run_witness(const Spec& spec, const std::optional<std::string>& u_text, std::int64_t bound) {
    if (u_text) {
        const BigInt u(*u_text);
        const auto rep = audit_conditions(u, spec);
        std::cout << "u=" << u.get_str() << '\n';
        print_audit(rep);
        if (!rep.all()) {
            std::size_t first = 0;
            while (rep.passed[first]) ++first;
            throw ConditionFailure("(" + std::to_string(first + 1) + ")", rep.detail[first]);
        }
        return code(ExitCode::Success);
    }
    const auto w = compute_witness(spec, bound);
    std::cout << "s=" << w.s << " u=" << w.u.get_str() << '\n';
    print_audit(audit_conditions(w.u, spec));
    return code(ExitCode::Success);
}

int compare_tables(const std::vector<FieldReport>& rows, const std::string& golden_path) {
    const auto diffs = diff_against_golden(rows, load_golden(golden_path));
    for (const auto& d : diffs) std::cerr << "diff: " << d << '\n';
    std::cerr << (diffs.empty() ? "table matches " : "table differs from ") << golden_path << '\n';
    return diffs.empty() ? code(ExitCode::Success) : code(ExitCode::InternalError);
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Quartic fields with non-principal Euclidean ideals: checks, searches, tables"};
    app.require_subcommand(1);

    // check
    Common check_opts;
    Params check_p;
    auto* check = app.add_subcommand("check", "Run the eligibility pipeline for one field");
    check->require_subcommand(1);
    auto* check_biq = check->add_subcommand("biq", "K = Q(sqrt q, sqrt(kr))");
    check_biq->add_option("--q", check_p.q)->required();
    check_biq->add_option("--k", check_p.k)->required();
    check_biq->add_option("--r", check_p.x)->required();
    add_common(check_biq, check_opts, true);
    auto* check_cyc = check->add_subcommand("cyc", "K = Q(sqrt(q(k + b sqrt k)))");
    check_cyc->add_option("--q", check_p.q)->required();
    check_cyc->add_option("--k", check_p.k)->required();
    check_cyc->add_option("--b", check_p.x)->required();
    add_common(check_cyc, check_opts, true);

    // search
    Common search_opts;
    BiquadraticRanges biq_ranges;
    CyclicRanges cyc_ranges;
    std::int64_t root_max = 0;
    auto* search = app.add_subcommand("search", "Sweep a parameter grid");
    search->require_subcommand(1);
    auto* search_biq = search->add_subcommand("biq", "Biquadratic family");
    search_biq->add_option("--q-min", biq_ranges.q_min)->required();
    search_biq->add_option("--q-max", biq_ranges.q_max)->required();
    search_biq->add_option("--kr-min", biq_ranges.kr_min)->required();
    search_biq->add_option("--kr-max", biq_ranges.kr_max)->required();
    add_common(search_biq, search_opts, true);
    auto* search_cyc = search->add_subcommand("cyc", "Cyclic family");
    search_cyc->add_option("--q-min", cyc_ranges.q_min)->required();
    search_cyc->add_option("--q-max", cyc_ranges.q_max)->required();
    search_cyc->add_option("--k-min", cyc_ranges.k_min)->required();
    search_cyc->add_option("--k-max", cyc_ranges.k_max)->required();
    search_cyc->add_option("--b-min", cyc_ranges.b_min)->required();
    search_cyc->add_option("--b-max", cyc_ranges.b_max)->required();
    search_cyc->add_option("--root-max", root_max, "Largest sqrt(k - b^2)")->check(CLI::PositiveNumber);
    add_common(search_cyc, search_opts, true);

    // witness
    Common witness_opts;
    Params witness_p;
    std::optional<std::string> witness_u;
    auto* witness = app.add_subcommand("witness", "Witness pair (s, u) and its condition audit");
    witness->require_subcommand(1);
    auto* witness_biq = witness->add_subcommand("biq", "Biquadratic family");
    witness_biq->add_option("--q", witness_p.q)->required();
    witness_biq->add_option("--k", witness_p.k)->required();
    witness_biq->add_option("--r", witness_p.x)->required();
    witness_biq->add_option("--u", witness_u, "Audit this u instead of constructing one");
    add_common(witness_biq, witness_opts, false);
    auto* witness_cyc = witness->add_subcommand("cyc", "Cyclic family");
    witness_cyc->add_option("--q", witness_p.q)->required();
    witness_cyc->add_option("--k", witness_p.k)->required();
    witness_cyc->add_option("--b", witness_p.x)->required();
    witness_cyc->add_option("--u", witness_u, "Audit this u instead of constructing one");
    add_common(witness_cyc, witness_opts, false);

    // motzkin
    std::int64_t mz_c = 1, mz_n = 64, mz_window = 0, mz_samples = 0;
    int mz_cap = 16;
    auto* motzkin = app.add_subcommand("motzkin", "Motzkin ladder for the ideal cZ of Z");
    motzkin->add_option("--c", mz_c)->check(CLI::PositiveNumber);
    motzkin->add_option("--n-max", mz_n)->check(CLI::PositiveNumber);
    motzkin->add_option("--level-cap", mz_cap)->check(CLI::NonNegativeNumber);
    motzkin->add_option("--audit-window", mz_window, "Representative window (default |z| <= n)");
    motzkin->add_option("--samples", mz_samples, "Random Euclidean-property checks")
        ->check(CLI::NonNegativeNumber);

    // tables
    Common table_opts;
    std::string compare_path;
    auto* table1 = app.add_subcommand("table1", "Regenerate the biquadratic table");
    add_common(table1, table_opts, false);
    table1->add_option("--compare", compare_path, "Golden CSV to diff against")->check(CLI::ExistingFile);
    auto* table2 = app.add_subcommand("table2", "Regenerate the cyclic table");
    add_common(table2, table_opts, true);
    table2->add_option("--compare", compare_path, "Golden CSV to diff against")->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : code(ExitCode::Usage);
    }

    if (check->parsed()) {
        const auto cfg = check_opts.resolve();
        const bool biq = check_biq->parsed();
        const auto fixture = biq ? std::nullopt : load_fixture(check_opts.fixture);
        PipelineOptions opt{fixture ? &*fixture : nullptr, cfg.search_bound};
        const auto rep = build_report(biq ? Family::Biquadratic : Family::Cyclic, check_p.q, check_p.k, check_p.x, opt);
        std::cout << emit({rep}, check_opts.format);
        for (const auto& d : rep.diagnostics) std::cerr << "note: " << d << '\n';
        return code(ExitCode::Success);
    }
    if (search->parsed()) {
        const auto cfg = search_opts.resolve();
        const auto fixture = load_fixture(search_opts.fixture);
        PipelineOptions opt{fixture ? &*fixture : nullptr, cfg.search_bound};
        if (root_max > 0) cyc_ranges.root_max = root_max;
        const auto rows = search_biq->parsed() ? search_grid(biq_ranges, opt, cfg.workers)
                                               : search_grid(cyc_ranges, opt, cfg.workers);
        std::cout << emit(rows, search_opts.format);
        return code(ExitCode::Success);
    }
    if (witness->parsed()) {
        const auto cfg = witness_opts.resolve();
        if (witness_biq->parsed()) {
            return run_witness(validate_biquadratic(witness_p.q, witness_p.k, witness_p.x), witness_u,
                               cfg.search_bound);
        }
        return run_witness(validate_cyclic(witness_p.q, witness_p.k, witness_p.x), witness_u, cfg.search_bound);
    }
    if (motzkin->parsed()) {
        const auto L = build_ladder(mz_c, mz_n, mz_cap, mz_window);
        std::cout << "n,level,verdict\n";
        for (std::int64_t n = 1; n <= mz_n; ++n) {
            const auto v = psi(L, n);
            std::cout << n << ',' << (v.level ? std::to_string(*v.level) : std::string()) << ','
                      << to_string(v.verdict) << '\n';
        }
        if (mz_samples > 0) {
            const auto rep = euclidean_property_check(L, mz_samples);
            std::cerr << "euclidean property: " << rep.samples << " samples, " << rep.violations << " violations\n";
            if (rep.violations > 0) return code(ExitCode::InternalError);
        }
        return code(ExitCode::Success);
    }
    if (table1->parsed() || table2->parsed()) {
        const auto cfg = table_opts.resolve();
        std::vector<FieldReport> rows;
        if (table1->parsed()) {
            rows = search_grid(table1_ranges(), {nullptr, cfg.search_bound}, cfg.workers);
        } else {
            const auto fixture = load_fixture(table_opts.fixture);
            rows = search_grid(table2_ranges(), {fixture ? &*fixture : nullptr, cfg.search_bound}, cfg.workers);
        }
        std::cout << emit(rows, table_opts.format);
        if (!compare_path.empty()) return compare_tables(rows, compare_path);
        return code(ExitCode::Success);
    }
    return code(ExitCode::Usage);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const quartic::HypothesisViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return code(ExitCode::HypothesisViolation);
    } catch (const quartic::ConditionFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return code(ExitCode::HypothesisViolation);
    } catch (const quartic::UnknownClassNumber& e) {
        std::cerr << "error: " << e.what() << '\n';
        return code(ExitCode::UnknownClassNumber);
    } catch (const quartic::SearchExhausted& e) {
        std::cerr << "error: " << e.what() << '\n';
        return code(ExitCode::SearchExhausted);
    } catch (const quartic::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return code(ExitCode::InternalError);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return code(ExitCode::Usage);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return code(ExitCode::InternalError);
    }
}

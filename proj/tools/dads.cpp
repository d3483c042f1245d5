// dads: exact computation with discrete algebraic dynamical systems:
// polynomial operators in the shift over GF(p), duality pairings, and
// behaviors Ker R(X) at finite truncation.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dads/behavior.hpp"
#include "dads/io.hpp"
#include "dads/lawcheck.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitMathDomain = 4;

dads::Exponent parse_exponent_arg(const std::string& text) {
    std::vector<std::uint64_t> coords;
    std::string token;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (token.empty()) throw dads::ParseError("empty exponent coordinate");
            try {
                coords.push_back(std::stoull(token));
            } catch (const std::exception&) {
                throw dads::ParseError("invalid exponent coordinate: " + token);
            }
            token.clear();
        } else if (ch >= '0' && ch <= '9') {
            token.push_back(ch);
        } else if (ch != ' ' && ch != '[' && ch != ']') {
            throw dads::ParseError(std::string("unexpected character in exponent: ") + ch);
        }
    }
    if (coords.empty()) throw dads::ParseError("exponent needs at least one coordinate");
    return dads::Exponent(std::move(coords));
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DADS_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw dads::ParseError("DADS_SEED is not an unsigned integer");
        }
    }
    return 42;
}

int cmd_solve(const std::string& system_path, std::int64_t bound, const std::string& out_path) {
    dads::AutoregressiveSystem sys(dads::io::system_from_json(dads::io::load_json_file(system_path)));
    dads::BehaviorSlice slice = dads::solve_behavior(sys, bound);
    bool certified = dads::certify(slice);
    dads::io::write_json_file(out_path, dads::io::slice_to_json(slice, certified));
    std::cout << "dim " << slice.dim() << " bound " << slice.bound << " certificate "
              << (certified ? "verified" : "failed") << "\n";
    return certified ? kExitOk : kExitCheckFailure;
}

int cmd_apply(const std::string& system_path, const std::string& series_path,
              const std::string& out_path) {
    dads::PolyMatrix R = dads::io::system_from_json(dads::io::load_json_file(system_path));
    dads::SeriesVector w = dads::io::series_from_json(dads::io::load_json_file(series_path));
    dads::SeriesVector result = dads::apply(R, w);
    dads::io::write_json_file(out_path, dads::io::series_to_json(result));
    std::cout << "bound " << result.bound() << "\n";
    return kExitOk;
}

int cmd_shift(const std::string& beta_text, const std::string& series_path,
              const std::string& out_path) {
    dads::Exponent beta = parse_exponent_arg(beta_text);
    dads::SeriesVector w = dads::io::series_from_json(dads::io::load_json_file(series_path));
    if (beta.vars() != w.vars())
        throw dads::MathError("shift exponent length does not match the series variables");
    std::vector<dads::TruncatedSeries> comps;
    for (std::size_t i = 0; i < w.size(); ++i) comps.push_back(dads::shift(beta, w[i]));
    dads::SeriesVector result{std::move(comps)};
    dads::io::write_json_file(out_path, dads::io::series_to_json(result));
    std::cout << "bound " << result.bound() << "\n";
    return kExitOk;
}

int cmd_member(const std::string& system_path, const std::string& series_path) {
    dads::AutoregressiveSystem sys(dads::io::system_from_json(dads::io::load_json_file(system_path)));
    dads::SeriesVector w = dads::io::series_from_json(dads::io::load_json_file(series_path));
    dads::Membership verdict = dads::is_member(sys, w);
    if (verdict.pass) {
        std::cout << "pass up to degree " << verdict.checked_degree << "\n";
        return kExitOk;
    }
    const auto& [component, exponent, value] = *verdict.first_violation;
    std::cout << "fail at component " << component << " exponent [";
    for (std::size_t i = 0; i < exponent.vars(); ++i) std::cout << (i ? "," : "") << exponent[i];
    std::cout << "] value " << value.v << " (checked up to degree " << verdict.checked_degree
              << ")\n";
    return kExitCheckFailure;
}

int cmd_orth_polys(const std::string& gens_path, std::int64_t bound, const std::string& out_path) {
    std::vector<dads::PolyVector> gens =
        dads::io::rows_from_json(dads::io::load_json_file(gens_path));
    dads::BehaviorSlice slice = dads::orthogonal_of_polys(gens, bound);
    bool certified = dads::certify(slice);
    dads::io::write_json_file(out_path, dads::io::slice_to_json(slice, certified));
    std::cout << "dim " << slice.dim() << " bound " << slice.bound << "\n";
    return kExitOk;
}

int cmd_orth_series(const std::string& slice_path, std::int64_t max_degree,
                    const std::string& out_path) {
    dads::io::SliceData data = dads::io::slice_from_json(dads::io::load_json_file(slice_path));
    if (data.basis.empty()) throw dads::MathError("slice file carries an empty basis");
    std::vector<dads::PolyVector> annihilators =
        dads::orthogonal_of_series(data.basis, max_degree);
    if (annihilators.empty()) {
        // no nonzero annihilator of that degree; emit a single zero row so
        // the output stays schema-valid
        annihilators.push_back(dads::PolyVector::zero(data.field, data.r, data.l));
    }
    dads::io::write_json_file(out_path,
                              dads::io::system_to_json(dads::PolyMatrix::from_rows(annihilators)));
    std::cout << "count " << annihilators.size() << " degree " << max_degree << "\n";
    return kExitOk;
}

int cmd_pair(const std::string& poly_path, const std::string& series_path, bool full,
             const std::string& out_path) {
    dads::PolyMatrix d = dads::io::system_from_json(dads::io::load_json_file(poly_path));
    if (d.k() != 1) throw dads::MathError("pairing expects a single row vector (k = 1)");
    dads::SeriesVector w = dads::io::series_from_json(dads::io::load_json_file(series_path));
    if (full) {
        dads::TruncatedSeries z = dads::pairing_series(d.row(0), w);
        dads::io::write_json_file(out_path,
                                  dads::io::series_to_json(dads::SeriesVector({z})));
        std::cout << "bound " << z.bound() << "\n";
    } else {
        dads::Fp value = dads::pairing_scalar(d.row(0), w);
        dads::io::write_json_file(out_path, dads::io::scalar_to_json(w.field(), value));
        std::cout << "value " << value.v << "\n";
    }
    return kExitOk;
}

int cmd_check(const std::string& suite, std::uint64_t seed, std::uint64_t trials,
              const std::string& dump_dir, bool transpose_debug) {
    std::vector<dads::LawOutcome> results =
        dads::run_suite(suite, seed, trials, transpose_debug);
    bool all_pass = true;
    for (const dads::LawOutcome& r : results) {
        std::cout << "law " << r.law << ": trials=" << r.trials << " failures=" << r.failures
                  << "\n";
        if (r.pass()) continue;
        all_pass = false;
        std::cout << "  first failure at trial " << r.first_failure_trial << ": " << r.note
                  << "\n";
        for (const auto& [suffix, content] : r.artifacts) {
            std::string path = dump_dir + "/counterexample_" + r.law + "_" + suffix + ".json";
            dads::io::write_json_file(path, content);
            std::cout << "  counterexample written: " << path << "\n";
        }
    }
    std::cout << "RESULT: " << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact shift-operator algebra and behaviors over GF(p)"};
    app.require_subcommand(1);

    std::string system_path, series_path, poly_path, out_path, beta_text;
    std::int64_t bound = 0;
    std::int64_t max_degree = 0;

    CLI::App* solve = app.add_subcommand("solve", "solve Ker R(X) at a truncation bound");
    solve->add_option("-R,--system", system_path, "system file")->required();
    solve->add_option("-D,--bound", bound, "truncation bound")->required();
    solve->add_option("-o,--out", out_path, "output slice file")->required();

    CLI::App* apply = app.add_subcommand("apply", "apply R(X) to a series vector");
    apply->add_option("-R,--system", system_path, "system file")->required();
    apply->add_option("-W,--series", series_path, "series file")->required();
    apply->add_option("-o,--out", out_path, "output series file")->required();

    CLI::App* shift = app.add_subcommand("shift", "shift a series vector by X^beta");
    shift->add_option("-b,--by", beta_text, "shift exponent, e.g. 1,0")->required();
    shift->add_option("-W,--series", series_path, "series file")->required();
    shift->add_option("-o,--out", out_path, "output series file")->required();

    CLI::App* member = app.add_subcommand("member", "test membership in Ker R(X)");
    member->add_option("-R,--system", system_path, "system file")->required();
    member->add_option("-W,--series", series_path, "series file")->required();

    CLI::App* orth = app.add_subcommand("orth", "orthogonals in either direction");
    orth->require_subcommand(1);
    CLI::App* orth_polys = orth->add_subcommand("polys", "behavior slice orthogonal to polynomial rows");
    orth_polys->add_option("-P,--gens", poly_path, "generator file (system schema)")->required();
    orth_polys->add_option("-D,--bound", bound, "truncation bound")->required();
    orth_polys->add_option("-o,--out", out_path, "output slice file")->required();
    CLI::App* orth_series = orth->add_subcommand("series", "polynomial annihilators of a slice");
    orth_series->add_option("-Q,--slice", series_path, "slice file")->required();
    orth_series->add_option("-d,--degree", max_degree, "annihilator degree bound")->required();
    orth_series->add_option("-o,--out", out_path, "output generator file")->required();

    CLI::App* pair = app.add_subcommand("pair", "pair a polynomial row with a series vector");
    pair->add_option("-d,--poly", poly_path, "row vector file (system schema, k = 1)")->required();
    pair->add_option("-W,--series", series_path, "series file")->required();
    pair->add_option("-o,--out", out_path, "output file")->required();
    bool full = false;
    pair->add_flag("--full", full, "emit the full series pairing instead of its constant term");

    CLI::App* check = app.add_subcommand("check", "seeded randomized law suites");
    std::string suite = "all";
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    std::string dump_dir = ".";
    bool transpose_debug = false;
    check->add_option("--suite", suite, "adjoint|module|shift|perp|quotient|all")
        ->default_val("all");
    check->add_option("--trials", trials, "trials per law")->default_val(100);
    CLI::Option* seed_opt = check->add_option("--seed", seed, "master seed");
    check->add_option("--dump-dir", dump_dir, "directory for counterexample files")
        ->default_val(".");
    check->add_flag("--debug-transpose", transpose_debug,
                    "deliberately transpose the matrix convention (negative control)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve) return cmd_solve(system_path, bound, out_path);
        if (*apply) return cmd_apply(system_path, series_path, out_path);
        if (*shift) return cmd_shift(beta_text, series_path, out_path);
        if (*member) return cmd_member(system_path, series_path);
        if (*orth_polys) return cmd_orth_polys(poly_path, bound, out_path);
        if (*orth_series) return cmd_orth_series(series_path, max_degree, out_path);
        if (*pair) return cmd_pair(poly_path, series_path, full, out_path);
        if (*check) {
            std::uint64_t effective_seed = seed_opt->count() > 0 ? seed : default_seed();
            return cmd_check(suite, effective_seed, trials, dump_dir, transpose_debug);
        }
    } catch (const dads::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dads::MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathDomain;
    }
    return kExitUsage;
}

#include "dads/lawcheck.hpp"

#include <sstream>

#include "dads/behavior.hpp"
#include "dads/io.hpp"

namespace dads {

namespace {

std::uint32_t pick_vars(TrialRng& rng, const std::vector<std::uint32_t>& choices) {
    return choices[rng.below(choices.size())];
}

LawOutcome make_outcome(std::string law, std::uint64_t trials) {
    LawOutcome out;
    out.law = std::move(law);
    out.trials = trials;
    return out;
}

void record_failure(LawOutcome& out, std::uint64_t trial, const std::string& note,
                    std::vector<std::pair<std::string, nlohmann::json>> artifacts) {
    ++out.failures;
    if (out.first_failure_trial < 0) {
        out.first_failure_trial = static_cast<std::int64_t>(trial);
        out.note = note;
        out.artifacts = std::move(artifacts);
    }
}

nlohmann::json poly_vector_file(const PolyVector& v) {
    return io::system_to_json(PolyMatrix::from_rows({v}));
}

nlohmann::json gens_file(const std::vector<PolyVector>& gens) {
    return io::system_to_json(PolyMatrix::from_rows(gens));
}

}  // namespace

LawOutcome check_adjoint_scalar(const OperatorLawParams& p, std::uint64_t seed,
                                std::uint64_t trials) {
    LawOutcome out = make_outcome("adjoint-scalar", trials);
    Field f(p.modulus);
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng(trial_seed(seed, t));
        std::size_t r = pick_vars(rng, p.var_counts);
        Polynomial c = random_polynomial(rng, f, r, p.max_degree);
        Polynomial d = random_polynomial(rng, f, r, p.max_degree);
        TruncatedSeries w = random_series(rng, f, r, p.bound);
        Fp lhs = pairing_scalar(c * d, w);
        Fp rhs = pairing_scalar(c, apply(d, w));
        if (lhs != rhs) {
            std::ostringstream os;
            os << "pairing of c*d against W is " << lhs.v << " but pairing of c against d o W is "
               << rhs.v;
            record_failure(out, t, os.str(),
                           {{"c", poly_vector_file(PolyVector({c}))},
                            {"d", poly_vector_file(PolyVector({d}))},
                            {"W", io::series_to_json(SeriesVector({w}))}});
        }
    }
    return out;
}

LawOutcome check_adjoint_matrix(const OperatorLawParams& p, std::uint64_t seed,
                                std::uint64_t trials) {
    LawOutcome out = make_outcome("adjoint-matrix", trials);
    Field f(p.modulus);
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng(trial_seed(seed, t));
        std::size_t r = pick_vars(rng, p.var_counts);
        std::size_t k = 1 + rng.below(p.max_dim);
        std::size_t l = p.transpose_adjoint ? k : 1 + rng.below(p.max_dim);
        PolyVector c = random_poly_vector(rng, f, r, k, p.max_degree);
        PolyMatrix R = random_poly_matrix(rng, f, r, k, l, p.max_degree);
        SeriesVector w = random_series_vector(rng, f, r, l, p.bound);
        PolyMatrix acting = p.transpose_adjoint ? R.transposed() : R;
        Fp lhs = pairing_scalar(c * R, w);
        Fp rhs = pairing_scalar(c, apply(acting, w));
        if (lhs != rhs) {
            std::ostringstream os;
            os << "pairing of c*R against W is " << lhs.v << " but pairing of c against R o W is "
               << rhs.v;
            record_failure(out, t, os.str(),
                           {{"c", poly_vector_file(c)},
                            {"R", io::system_to_json(R)},
                            {"W", io::series_to_json(w)}});
        }
    }
    return out;
}

LawOutcome check_shift_composition(const OperatorLawParams& p, std::uint64_t seed,
                                   std::uint64_t trials) {
    LawOutcome out = make_outcome("shift-composition", trials);
    Field f(p.modulus);
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng(trial_seed(seed, t));
        std::size_t r = pick_vars(rng, p.var_counts);
        Exponent alpha = random_exponent(rng, r, p.max_degree);
        Exponent beta = random_exponent(rng, r, p.max_degree);
        TruncatedSeries w = random_series(rng, f, r, p.bound);
        TruncatedSeries joint = shift(alpha.plus(beta), w);
        TruncatedSeries nested = shift(alpha, shift(beta, w));
        if (!equal_on_common_ball(joint, nested)) {
            record_failure(out, t, "shift by alpha+beta disagrees with nested shifts",
                           {{"W", io::series_to_json(SeriesVector({w}))}});
        }
    }
    return out;
}

LawOutcome check_module_identity(const OperatorLawParams& p, std::uint64_t seed,
                                 std::uint64_t trials) {
    LawOutcome out = make_outcome("module-identity", trials);
    Field f(p.modulus);
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng(trial_seed(seed, t));
        std::size_t r = pick_vars(rng, p.var_counts);
        TruncatedSeries w = random_series(rng, f, r, p.bound);
        Polynomial one = Polynomial::constant(f, r, f.one());
        if (apply(one, w) != w)
            record_failure(out, t, "1 o W differs from W",
                           {{"W", io::series_to_json(SeriesVector({w}))}});
    }
    return out;
}

LawOutcome check_module_distributive(const OperatorLawParams& p, std::uint64_t seed,
                                     std::uint64_t trials) {
    LawOutcome out = make_outcome("module-distributive", trials);
    Field f(p.modulus);
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng(trial_seed(seed, t));
        std::size_t r = pick_vars(rng, p.var_counts);
        Polynomial d = random_polynomial(rng, f, r, p.max_degree);
        Polynomial e = random_polynomial(rng, f, r, p.max_degree);
        TruncatedSeries w = random_series(rng, f, r, p.bound);
        TruncatedSeries lhs = apply(d + e, w);
        TruncatedSeries rhs = apply(d, w) + apply(e, w);
        if (!equal_on_common_ball(lhs, rhs))
            record_failure(out, t, "(d+e) o W differs from d o W + e o W",
                           {{"d", poly_vector_file(PolyVector({d}))},
                            {"e", poly_vector_file(PolyVector({e}))},
                            {"W", io::series_to_json(SeriesVector({w}))}});
    }
    return out;
}

LawOutcome check_module_associative(const OperatorLawParams& p, std::uint64_t seed,
                                    std::uint64_t trials) {
    LawOutcome out = make_outcome("module-associative", trials);
    Field f(p.modulus);
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng(trial_seed(seed, t));
        std::size_t r = pick_vars(rng, p.var_counts);
        Polynomial d = random_polynomial(rng, f, r, p.max_degree);
        Polynomial e = random_polynomial(rng, f, r, p.max_degree);
        TruncatedSeries w = random_series(rng, f, r, p.bound);
        TruncatedSeries lhs = apply(d * e, w);
        TruncatedSeries rhs = apply(d, apply(e, w));
        if (!equal_on_common_ball(lhs, rhs))
            record_failure(out, t, "(d*e) o W differs from d o (e o W)",
                           {{"d", poly_vector_file(PolyVector({d}))},
                            {"e", poly_vector_file(PolyVector({e}))},
                            {"W", io::series_to_json(SeriesVector({w}))}});
    }
    return out;
}

LawOutcome check_bilinearity(const OperatorLawParams& p, std::uint64_t seed,
                             std::uint64_t trials) {
    LawOutcome out = make_outcome("bilinearity", trials);
    Field f(p.modulus);
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng(trial_seed(seed, t));
        std::size_t r = pick_vars(rng, p.var_counts);
        std::size_t k = 1 + rng.below(p.max_dim);
        std::size_t l = 1 + rng.below(p.max_dim);
        PolyMatrix R = random_poly_matrix(rng, f, r, k, l, p.max_degree);
        PolyMatrix S = random_poly_matrix(rng, f, r, k, l, p.max_degree);
        SeriesVector w = random_series_vector(rng, f, r, l, p.bound);
        SeriesVector v = random_series_vector(rng, f, r, l, p.bound);
        Fp a = random_scalar(rng, f), b = random_scalar(rng, f);

        // additivity in the matrix argument
        PolyMatrix sum = PolyMatrix::zero(f, r, k, l);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < l; ++j) sum.entry(i, j) = R.entry(i, j) + S.entry(i, j);
        bool left = equal_on_common_ball(apply(sum, w), apply(R, w) + apply(S, w));

        // F-linearity in the series argument
        bool right = equal_on_common_ball(apply(R, scale(a, w) + scale(b, v)),
                                          scale(a, apply(R, w)) + scale(b, apply(R, v)));
        if (!left || !right)
            record_failure(out, t,
                           left ? "R o (aW + bV) is not linear in the series argument"
                                : "(R + S) o W is not additive in the matrix argument",
                           {{"R", io::system_to_json(R)},
                            {"S", io::system_to_json(S)},
                            {"W", io::series_to_json(w)},
                            {"V", io::series_to_json(v)}});
    }
    return out;
}

LawOutcome check_kernel_certificate(const KernelLawParams& p, std::uint64_t seed,
                                    std::uint64_t trials) {
    LawOutcome out = make_outcome("kernel-certificate", trials);
    Field f(p.modulus);
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng(trial_seed(seed, t));
        std::size_t r = pick_vars(rng, p.var_counts);
        std::size_t k = 1 + rng.below(p.max_dim);
        std::size_t l = 1 + rng.below(p.max_dim);
        PolyMatrix R = random_poly_matrix(rng, f, r, k, l, p.max_degree);
        BehaviorSlice slice = solve_behavior(AutoregressiveSystem(R), p.bound);
        bool ok = certify(slice);
        if (ok && !slice.basis.empty()) {
            // basis vectors must be independent as coefficient vectors
            DenseMatrix m = coefficient_matrix(f, r, l, slice.bound, slice.basis);
            ok = rank(m) == slice.dim();
        }
        if (!ok)
            record_failure(out, t, "slice basis fails the kernel certificate",
                           {{"R", io::system_to_json(R)}});
    }
    return out;
}

LawOutcome check_triple_perp(const PerpLawParams& p, std::uint64_t seed, std::uint64_t trials) {
    LawOutcome out = make_outcome("triple-perp", trials);
    Field f(p.modulus);
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng(trial_seed(seed, t));
        std::size_t r = pick_vars(rng, p.var_counts);
        std::size_t l = 1 + rng.below(p.max_l);
        std::size_t count = 1 + rng.below(p.max_gens);
        std::vector<PolyVector> gens = random_generators(rng, f, r, l, count, p.max_degree);
        TriplePerpReport report = triple_perp_check(gens, p.bound, p.annihilator_degree);
        if (!report.pass) {
            std::ostringstream os;
            os << "first perp dim " << report.first_perp_dim << ", third perp dim "
               << report.third_perp_dim << ", spans "
               << (report.spans_equal ? "equal" : "differ") << ", P in double perp: "
               << (report.generators_in_double_perp ? "yes" : "no");
            record_failure(out, t, os.str(), {{"P", gens_file(gens)}});
        }
    }
    return out;
}

LawOutcome check_redundant_generators(const PerpLawParams& p, std::uint64_t seed,
                                      std::uint64_t trials) {
    LawOutcome out = make_outcome("redundant-generators", trials);
    Field f(p.modulus);
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng(trial_seed(seed, t));
        std::size_t r = pick_vars(rng, p.var_counts);
        std::size_t l = 1 + rng.below(p.max_l);
        std::size_t count = 1 + rng.below(p.max_gens);
        std::vector<PolyVector> gens = random_generators(rng, f, r, l, count, p.max_degree);

        BehaviorSlice base = orthogonal_of_polys(gens, p.bound);
        DenseMatrix base_mat = coefficient_matrix(f, r, l, p.bound, base.basis);

        // polynomial combination q = sum_i c_i * gens_i: its sound equations
        // can only sharpen the slice, never grow it. The extra row may raise
        // the stacked degree and so shorten the equation window; solve with
        // just enough extra bound that both systems constrain the same
        // window, then check containment on the base ball.
        PolyVector extra = PolyVector::zero(f, r, l);
        for (const auto& g : gens) {
            Polynomial c = random_polynomial(rng, f, r, 1);
            PolyVector scaled = g;
            for (std::size_t j = 0; j < l; ++j) scaled[j] = c * g[j];
            extra = extra + scaled;
        }
        std::vector<PolyVector> extended = gens;
        extended.push_back(extra);
        std::int64_t base_deg = base.system.symbol_degree;
        std::int64_t ext_deg = std::max<std::int64_t>(base_deg, operator_degree(extra));
        BehaviorSlice sharpened = orthogonal_of_polys(extended, p.bound + (ext_deg - base_deg));
        bool contained = true;
        for (const auto& v : sharpened.basis) {
            std::vector<SeriesVector> one{v.restricted(p.bound)};
            DenseMatrix row = coefficient_matrix(f, r, l, p.bound, one);
            std::vector<Fp> vec(row.cols());
            for (std::size_t j = 0; j < row.cols(); ++j) vec[j] = row.at(0, j);
            if (!in_row_span(base_mat, vec)) {
                contained = false;
                break;
            }
        }

        // constant combination: the added equations are combinations of the
        // existing ones at every window point, so the slice is unchanged
        PolyVector constant_combo = PolyVector::zero(f, r, l);
        for (const auto& g : gens) constant_combo = constant_combo + scale(random_scalar(rng, f), g);
        std::vector<PolyVector> extended0 = gens;
        extended0.push_back(constant_combo);
        BehaviorSlice same = orthogonal_of_polys(extended0, p.bound);
        bool unchanged = row_span_equal(coefficient_matrix(f, r, l, p.bound, same.basis),
                                        base_mat);

        if (!contained || !unchanged)
            record_failure(out, t,
                           contained ? "constant combination changed the orthogonal slice"
                                     : "module combination grew the orthogonal slice",
                           {{"P", gens_file(gens)},
                            {"extra", poly_vector_file(contained ? constant_combo : extra)}});
    }
    return out;
}

LawOutcome check_quotient_pairing(const QuotientLawParams& p, std::uint64_t seed,
                                  std::uint64_t trials) {
    LawOutcome out = make_outcome("quotient-pairing", trials);
    Field f(p.modulus);
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng(trial_seed(seed, t));
        std::size_t r = pick_vars(rng, p.var_counts);
        std::size_t l = 1 + rng.below(p.max_l);
        std::size_t count = 1 + rng.below(p.max_gens);
        std::vector<PolyVector> gens = random_generators(rng, f, r, l, count, p.max_degree);
        CheckVerdict v = quotient_pairing_check(gens, p.bound, 1, trial_seed(seed, t));
        if (!v.pass) record_failure(out, t, v.detail, {{"P", gens_file(gens)}});
    }
    return out;
}

std::vector<LawOutcome> run_suite(const std::string& suite, std::uint64_t seed,
                                  std::uint64_t trials, bool transpose_debug) {
    OperatorLawParams op;
    op.transpose_adjoint = transpose_debug;
    KernelLawParams kp;
    PerpLawParams pp;
    QuotientLawParams qp;

    std::vector<LawOutcome> results;
    bool known = false;
    if (suite == "adjoint" || suite == "all") {
        known = true;
        results.push_back(check_adjoint_scalar(op, seed, trials));
        results.push_back(check_adjoint_matrix(op, seed, trials));
    }
    if (suite == "shift" || suite == "all") {
        known = true;
        results.push_back(check_shift_composition(op, seed, trials));
    }
    if (suite == "module" || suite == "all") {
        known = true;
        results.push_back(check_module_identity(op, seed, trials));
        results.push_back(check_module_distributive(op, seed, trials));
        results.push_back(check_module_associative(op, seed, trials));
        results.push_back(check_bilinearity(op, seed, trials));
    }
    if (suite == "perp" || suite == "all") {
        known = true;
        results.push_back(check_triple_perp(pp, seed, trials));
        results.push_back(check_redundant_generators(pp, seed, trials));
    }
    if (suite == "quotient" || suite == "all") {
        known = true;
        results.push_back(check_quotient_pairing(qp, seed, trials));
    }
    if (suite == "all") results.push_back(check_kernel_certificate(kp, seed, trials));
    if (!known) throw MathError("unknown check suite: " + suite);
    return results;
}

}  // namespace dads

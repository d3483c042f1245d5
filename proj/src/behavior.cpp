#include "dads/behavior.hpp"

#include <algorithm>
#include <sstream>

#include "dads/random.hpp"

namespace dads {

namespace {

std::string exponent_str(const Exponent& e) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < e.vars(); ++i) os << (i ? "," : "") << e[i];
    os << "]";
    return os.str();
}

std::vector<Fp> series_row(const SeriesVector& v, std::int64_t bound, std::size_t slots) {
    // column of coefficient (lambda, a) is lambda * |ball| + rank(a)
    const Field& f = v.field();
    std::size_t n = static_cast<std::size_t>(ball_size(v.vars(), bound));
    std::vector<Fp> row(slots, f.zero());
    for (std::size_t lambda = 0; lambda < v.size(); ++lambda) {
        for (const auto& [e, c] : v[lambda].coeffs()) {
            if (e.degree() > static_cast<std::uint64_t>(bound)) break;  // graded order
            row[lambda * n + rank_of(e)] = c;
        }
    }
    return row;
}

std::vector<Fp> poly_row(const PolyVector& p, std::int64_t max_degree, std::size_t slots) {
    const Field& f = p.field();
    std::size_t n = static_cast<std::size_t>(ball_size(p.vars(), max_degree));
    std::vector<Fp> row(slots, f.zero());
    for (std::size_t lambda = 0; lambda < p.size(); ++lambda) {
        for (const auto& [e, c] : p[lambda].terms()) {
            if (e.degree() > static_cast<std::uint64_t>(max_degree))
                throw MathError("generator degree exceeds the coefficient window");
            row[lambda * n + rank_of(e)] = c;
        }
    }
    return row;
}

}  // namespace

BehaviorSlice solve_behavior(const AutoregressiveSystem& sys, std::int64_t bound) {
    if (bound < sys.symbol_degree)
        throw MathError("truncation bound is smaller than the system degree");
    const Field& f = sys.field();
    const std::size_t r = sys.vars(), k = sys.k(), l = sys.l();

    const std::vector<Exponent> ball = degree_ball(r, bound);
    const std::size_t n = ball.size();
    const std::vector<Exponent> eq_ball = degree_ball(r, bound - sys.symbol_degree);

    // unknowns ordered by (lambda, rank); equations by (row, rank)
    DenseMatrix m(f, k * eq_ball.size(), l * n);
    std::size_t row = 0;
    for (std::size_t kappa = 0; kappa < k; ++kappa) {
        for (const Exponent& a : eq_ball) {
            for (std::size_t lambda = 0; lambda < l; ++lambda) {
                for (const auto& [beta, c] : sys.R.entry(kappa, lambda).terms()) {
                    std::size_t col = lambda * n + rank_of(a.plus(beta));
                    m.at(row, col) = f.add(m.at(row, col), c);
                }
            }
            ++row;
        }
    }

    std::vector<SeriesVector> basis;
    for (const std::vector<Fp>& v : nullspace(m)) {
        std::vector<TruncatedSeries> comps;
        comps.reserve(l);
        for (std::size_t lambda = 0; lambda < l; ++lambda) {
            TruncatedSeries s(f, r, bound);
            for (std::size_t i = 0; i < n; ++i)
                if (v[lambda * n + i] != f.zero()) s.set_coeff(ball[i], v[lambda * n + i]);
            comps.push_back(std::move(s));
        }
        basis.emplace_back(std::move(comps));
    }
    return BehaviorSlice{sys, bound, std::move(basis)};
}

bool certify(const BehaviorSlice& slice) {
    for (const SeriesVector& v : slice.basis)
        if (!apply(slice.system.R, v).is_zero()) return false;
    return true;
}

Membership is_member(const AutoregressiveSystem& sys, const SeriesVector& w) {
    if (w.bound() < sys.symbol_degree)
        throw MathError("series bound too small for a membership test");
    SeriesVector residual = apply(sys.R, w);
    Membership verdict;
    verdict.checked_degree = residual.bound();
    verdict.pass = residual.is_zero();
    if (!verdict.pass) {
        for (std::size_t kappa = 0; kappa < residual.size(); ++kappa) {
            if (residual[kappa].is_zero()) continue;
            const auto& [e, c] = *residual[kappa].coeffs().begin();
            verdict.first_violation = {kappa, e, c};
            break;
        }
    }
    return verdict;
}

BehaviorSlice orthogonal_of_polys(const std::vector<PolyVector>& gens, std::int64_t bound) {
    if (gens.empty()) throw MathError("orthogonal of an empty generating set");
    return solve_behavior(AutoregressiveSystem(PolyMatrix::from_rows(gens)), bound);
}

std::vector<PolyVector> orthogonal_of_series(const std::vector<SeriesVector>& q,
                                             std::int64_t max_degree) {
    if (q.empty()) throw MathError("orthogonal of an empty series family");
    const Field& f = q.front().field();
    const std::size_t r = q.front().vars(), l = q.front().size();
    const std::int64_t bound = q.front().bound();
    for (const auto& w : q)
        if (w.field() != f || w.vars() != r || w.size() != l || w.bound() != bound)
            throw MathError("series family members disagree in shape or bound");
    if (max_degree < 0) throw MathError("negative annihilator degree");
    if (max_degree > bound) throw MathError("annihilator degree exceeds the series bound");

    const std::vector<Exponent> supp = degree_ball(r, max_degree);
    const std::size_t n = supp.size();
    const std::vector<Exponent> eq_ball = degree_ball(r, bound - max_degree);

    DenseMatrix m(f, q.size() * eq_ball.size(), l * n);
    std::size_t row = 0;
    for (const SeriesVector& w : q) {
        for (const Exponent& a : eq_ball) {
            for (std::size_t lambda = 0; lambda < l; ++lambda)
                for (std::size_t j = 0; j < n; ++j)
                    m.at(row, lambda * n + j) = w[lambda].coeff(a.plus(supp[j]));
            ++row;
        }
    }

    std::vector<PolyVector> basis;
    for (const std::vector<Fp>& v : nullspace(m)) {
        std::vector<Polynomial> comps;
        comps.reserve(l);
        for (std::size_t lambda = 0; lambda < l; ++lambda) {
            Polynomial p(f, r);
            for (std::size_t j = 0; j < n; ++j)
                if (v[lambda * n + j] != f.zero()) p.add_term(supp[j], v[lambda * n + j]);
            comps.push_back(std::move(p));
        }
        basis.emplace_back(std::move(comps));
    }
    return basis;
}

std::vector<PolyVector> full_poly_basis(const Field& field, std::size_t vars, std::size_t l,
                                        std::int64_t max_degree) {
    std::vector<PolyVector> out;
    for (std::size_t lambda = 0; lambda < l; ++lambda) {
        for (const Exponent& e : degree_ball(vars, max_degree)) {
            PolyVector v = PolyVector::zero(field, vars, l);
            v[lambda] = Polynomial::monomial(field, e, field.one());
            out.push_back(std::move(v));
        }
    }
    return out;
}

DenseMatrix coefficient_matrix(const Field& field, std::size_t vars, std::size_t l,
                               std::int64_t bound, const std::vector<SeriesVector>& rows) {
    std::size_t slots = l * static_cast<std::size_t>(ball_size(vars, bound));
    DenseMatrix m(field, rows.size(), slots);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].bound() < bound)
            throw MathError("series bound too small for the coefficient window");
        std::vector<Fp> row = series_row(rows[i], bound, slots);
        for (std::size_t j = 0; j < slots; ++j) m.at(i, j) = row[j];
    }
    return m;
}

DenseMatrix coefficient_matrix(const Field& field, std::size_t vars, std::size_t l,
                               std::int64_t max_degree, const std::vector<PolyVector>& rows) {
    std::size_t slots = l * static_cast<std::size_t>(ball_size(vars, max_degree));
    DenseMatrix m(field, rows.size(), slots);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<Fp> row = poly_row(rows[i], max_degree, slots);
        for (std::size_t j = 0; j < slots; ++j) m.at(i, j) = row[j];
    }
    return m;
}

TriplePerpReport triple_perp_check(const std::vector<PolyVector>& gens, std::int64_t bound,
                                   std::int64_t max_degree) {
    if (gens.empty()) throw MathError("triple-perp check of an empty generating set");
    const Field& f = gens.front().field();
    const std::size_t r = gens.front().vars(), l = gens.front().size();
    std::int64_t gen_degree = 0;
    for (const auto& g : gens) gen_degree = std::max(gen_degree, g.degree());
    if (max_degree < gen_degree)
        throw MathError("annihilator degree must cover the generators");
    if (max_degree > bound) throw MathError("annihilator degree exceeds the truncation bound");

    BehaviorSlice first = orthogonal_of_polys(gens, bound);

    std::vector<PolyVector> second = first.basis.empty()
                                         ? full_poly_basis(f, r, l, max_degree)
                                         : orthogonal_of_series(first.basis, max_degree);

    TriplePerpReport report;
    report.first_perp_dim = first.dim();
    report.second_perp_dim = second.size();

    // P subset P-perp-perp, on the max_degree window
    DenseMatrix second_mat = coefficient_matrix(f, r, l, max_degree, second);
    report.generators_in_double_perp = true;
    for (const auto& g : gens) {
        if (!in_row_span(second_mat, poly_row(g, max_degree, second_mat.cols()))) {
            report.generators_in_double_perp = false;
            break;
        }
    }

    // Third perp at the largest bound whose equation window stays inside
    // the ball on which the second perp was certified.
    BehaviorSlice third = [&] {
        if (second.empty()) {
            // annihilator of {0}: kernel of a single zero row
            PolyMatrix zero_row = PolyMatrix::zero(f, r, 1, l);
            return solve_behavior(AutoregressiveSystem(zero_row), bound - max_degree);
        }
        std::int64_t second_degree = 0;
        for (const auto& p : second) second_degree = std::max(second_degree, p.degree());
        return orthogonal_of_polys(second, bound - max_degree + second_degree);
    }();
    report.third_perp_dim = third.dim();
    report.comparison_bound = third.bound;

    std::vector<SeriesVector> first_restricted;
    first_restricted.reserve(first.basis.size());
    for (const auto& v : first.basis) first_restricted.push_back(v.restricted(third.bound));

    report.spans_equal =
        row_span_equal(coefficient_matrix(f, r, l, third.bound, first_restricted),
                       coefficient_matrix(f, r, l, third.bound, third.basis));
    report.pass = report.spans_equal && report.generators_in_double_perp;
    return report;
}

CheckVerdict shift_invariance_check(const BehaviorSlice& slice) {
    const std::int64_t g = slice.system.symbol_degree;
    if (slice.bound < g + 1)
        throw MathError("slice bound too small to test shift invariance");
    const std::size_t r = slice.system.vars();
    for (std::size_t b = 0; b < slice.basis.size(); ++b) {
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<std::uint64_t> unit(r, 0);
            unit[i] = 1;
            Exponent beta{std::move(unit)};
            std::vector<TruncatedSeries> comps;
            comps.reserve(slice.basis[b].size());
            for (std::size_t lambda = 0; lambda < slice.basis[b].size(); ++lambda)
                comps.push_back(shift(beta, slice.basis[b][lambda]));
            Membership m = is_member(slice.system, SeriesVector(std::move(comps)));
            if (!m.pass) {
                std::ostringstream os;
                os << "basis vector " << b << " shifted by " << exponent_str(beta)
                   << " leaves the slice (violation at component "
                   << std::get<0>(*m.first_violation) << ", exponent "
                   << exponent_str(std::get<1>(*m.first_violation)) << ")";
                return {false, os.str()};
            }
        }
    }
    return {true, "all unit shifts of all basis vectors remain members"};
}

CheckVerdict quotient_pairing_check(const std::vector<PolyVector>& gens, std::int64_t bound,
                                    std::uint64_t trials, std::uint64_t seed) {
    BehaviorSlice slice = orthogonal_of_polys(gens, bound);
    PolyMatrix stacked = PolyMatrix::from_rows(gens);
    const std::int64_t g = operator_degree(stacked);
    const Field& f = stacked.field();

    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng(trial_seed(seed, t));
        PolyVector c = random_poly_vector(rng, f, stacked.vars(), stacked.k(), 2);
        PolyVector q = c * stacked;
        std::int64_t sound = bound - g - operator_degree(c);
        for (const SeriesVector& w : slice.basis) {
            TruncatedSeries z = pairing_series(q, w);
            std::int64_t window = std::min(z.bound(), sound);
            if (!z.restricted(window).is_zero()) {
                std::ostringstream os;
                os << "trial " << t << ": pairing of a module element against a slice "
                   << "basis vector is nonzero on the certified ball (degree " << window
                   << ")";
                return {false, os.str()};
            }
        }
    }
    return {true, "pairing vanishes on <P> x slice for all trials"};
}

}  // namespace dads

#include "dads/shiftop.hpp"

#include <algorithm>

namespace dads {

TruncatedSeries shift(const Exponent& beta, const TruncatedSeries& w) {
    if (beta.vars() != w.vars()) throw MathError("shift exponent arity mismatch");
    std::uint64_t step = beta.degree();
    if (step > static_cast<std::uint64_t>(w.bound() + 1))
        throw MathError("shift degree exceeds the series' valid ball");
    std::int64_t out_bound = w.bound() - static_cast<std::int64_t>(step);
    TruncatedSeries out(w.field(), w.vars(), out_bound);
    // sparse walk: the stored coefficient at gamma lands at gamma - beta
    for (const auto& [gamma, c] : w.coeffs()) {
        auto a = gamma.minus_dominated(beta);
        if (a) out.set_coeff(*a, c);
    }
    return out;
}

TruncatedSeries apply(const Polynomial& d, const TruncatedSeries& w) {
    if (d.vars() != w.vars()) throw MathError("operator variable-count mismatch");
    if (d.field() != w.field()) throw MathError("operator field mismatch");
    std::int64_t g = operator_degree(d);
    if (g > w.bound() + 1) throw MathError("operator degree exceeds the series' valid ball");
    std::int64_t out_bound = w.bound() - g;
    TruncatedSeries out(w.field(), w.vars(), out_bound);
    if (out_bound < 0) return out;
    const Field& f = w.field();
    // accumulate the shifted copies d_beta * (X^beta o W)
    for (const auto& [beta, c] : d.terms()) {
        for (const auto& [gamma, v] : w.coeffs()) {
            auto a = gamma.minus_dominated(beta);
            if (!a) continue;
            if (a->degree() > static_cast<std::uint64_t>(out_bound)) continue;
            out.accumulate(*a, f.mul(c, v));
        }
    }
    return out;
}

SeriesVector apply(const PolyMatrix& R, const SeriesVector& w) {
    if (R.l() != w.size()) throw MathError("matrix columns do not match series vector length");
    if (R.field() != w.field() || R.vars() != w.vars())
        throw MathError("matrix/series field or variable-count mismatch");
    std::int64_t g = operator_degree(R);
    if (g > w.bound() + 1) throw MathError("matrix degree exceeds the series' valid ball");
    std::int64_t out_bound = w.bound() - g;
    std::vector<TruncatedSeries> comps;
    comps.reserve(R.k());
    for (std::size_t kappa = 0; kappa < R.k(); ++kappa) {
        TruncatedSeries acc(w.field(), w.vars(), w.bound());
        for (std::size_t lambda = 0; lambda < R.l(); ++lambda)
            acc = acc + apply(R.entry(kappa, lambda), w[lambda]);
        comps.push_back(acc.restricted(out_bound));
    }
    return SeriesVector(std::move(comps));
}

Fp pairing_scalar(const PolyVector& d, const SeriesVector& w) {
    if (d.size() != w.size()) throw MathError("pairing length mismatch");
    if (d.field() != w.field() || d.vars() != w.vars())
        throw MathError("pairing field or variable-count mismatch");
    const Field& f = w.field();
    Fp acc = f.zero();
    for (std::size_t lambda = 0; lambda < d.size(); ++lambda)
        for (const auto& [e, c] : d[lambda].terms())
            acc = f.add(acc, f.mul(c, w[lambda].coeff(e)));  // coeff() rejects reads off the ball
    return acc;
}

Fp pairing_scalar(const Polynomial& d, const TruncatedSeries& w) {
    return pairing_scalar(PolyVector({d}), SeriesVector({w}));
}

TruncatedSeries pairing_series(const PolyVector& d, const SeriesVector& w) {
    if (d.size() != w.size()) throw MathError("pairing length mismatch");
    if (d.field() != w.field() || d.vars() != w.vars())
        throw MathError("pairing field or variable-count mismatch");
    std::int64_t g = operator_degree(d);
    if (g > w.bound() + 1) throw MathError("pairing degree exceeds the series' valid ball");
    TruncatedSeries acc(w.field(), w.vars(), w.bound());
    for (std::size_t lambda = 0; lambda < d.size(); ++lambda)
        acc = acc + apply(d[lambda], w[lambda]);
    return acc.restricted(w.bound() - g);
}

bool equal_on_common_ball(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.field() != b.field() || a.vars() != b.vars()) return false;
    std::int64_t m = std::min(a.bound(), b.bound());
    return a.restricted(m) == b.restricted(m);
}

bool equal_on_common_ball(const SeriesVector& a, const SeriesVector& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!equal_on_common_ball(a[i], b[i])) return false;
    return true;
}

}  // namespace dads

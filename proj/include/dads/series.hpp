#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dads/exponent.hpp"
#include "dads/field.hpp"

namespace dads {

/// Formal power series over GF(p) known exactly on the total-degree ball
/// |a| <= bound. Outside the ball the series is *unknown*, not zero:
/// reading there is an error. bound == -1 means nothing is known.
class TruncatedSeries {
public:
    TruncatedSeries(Field field, std::size_t vars, std::int64_t bound);

    /// Y^e at the given bound; e must lie inside the ball.
    static TruncatedSeries monomial(Field field, const Exponent& e, std::int64_t bound);

    /// Tabulates f on the whole ball.
    template <class F>
    static TruncatedSeries from_function(Field field, std::size_t vars, std::int64_t bound,
                                         F&& f) {
        TruncatedSeries w(field, vars, bound);
        for (const Exponent& e : degree_ball(vars, bound)) w.set_coeff(e, f(e));
        return w;
    }

    const Field& field() const { return field_; }
    std::size_t vars() const { return r_; }
    std::int64_t bound() const { return bound_; }
    const std::map<Exponent, Fp, GrlexLess>& coeffs() const { return coeffs_; }

    /// Exact coefficient at e; querying outside the valid ball is an error
    /// (the value there is unknown, never silently 0).
    Fp coeff(const Exponent& e) const;

    void set_coeff(const Exponent& e, Fp c);
    void accumulate(const Exponent& e, Fp c);

    bool is_zero() const { return coeffs_.empty(); }

    /// The same series on a smaller ball.
    TruncatedSeries restricted(std::int64_t new_bound) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.field_ == b.field_ && a.r_ == b.r_ && a.bound_ == b.bound_ &&
               a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

private:
    void check_inside(const Exponent& e) const;

    Field field_;
    std::size_t r_;
    std::int64_t bound_;
    std::map<Exponent, Fp, GrlexLess> coeffs_;
};

/// Sum is valid where both operands are: result bound = min of inputs.
TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(Fp c, const TruncatedSeries& a);

/// Element of A^l: l series sharing field, variable count and bound.
class SeriesVector {
public:
    explicit SeriesVector(std::vector<TruncatedSeries> components);
    static SeriesVector zero(Field field, std::size_t vars, std::size_t l, std::int64_t bound);

    std::size_t size() const { return comps_.size(); }
    const TruncatedSeries& operator[](std::size_t i) const { return comps_[i]; }
    const Field& field() const { return comps_.front().field(); }
    std::size_t vars() const { return comps_.front().vars(); }
    std::int64_t bound() const { return comps_.front().bound(); }

    bool is_zero() const;
    SeriesVector restricted(std::int64_t new_bound) const;

    friend bool operator==(const SeriesVector& a, const SeriesVector& b) {
        return a.comps_ == b.comps_;
    }
    friend bool operator!=(const SeriesVector& a, const SeriesVector& b) { return !(a == b); }

private:
    std::vector<TruncatedSeries> comps_;
};

SeriesVector operator+(const SeriesVector& a, const SeriesVector& b);
SeriesVector scale(Fp c, const SeriesVector& a);

}  // namespace dads

#include "dads/series.hpp"

#include <algorithm>
#include <string>

namespace dads {

TruncatedSeries::TruncatedSeries(Field field, std::size_t vars, std::int64_t bound)
    : field_(field), r_(vars), bound_(bound) {
    if (bound_ < -1) throw MathError("series bound must be >= -1");
    if (bound_ > (std::int64_t{1} << 62)) throw MathError("series bound is unreasonably large");
}

TruncatedSeries TruncatedSeries::monomial(Field field, const Exponent& e, std::int64_t bound) {
    TruncatedSeries w(field, e.vars(), bound);
    w.set_coeff(e, field.one());
    return w;
}

void TruncatedSeries::check_inside(const Exponent& e) const {
    if (e.vars() != r_) throw MathError("series exponent arity mismatch");
    std::uint64_t d = e.degree();
    if (bound_ < 0 || d > static_cast<std::uint64_t>(bound_))
        throw MathError("coefficient at degree " + std::to_string(d) +
                        " is outside the valid ball (bound " + std::to_string(bound_) + ")");
}

Fp TruncatedSeries::coeff(const Exponent& e) const {
    check_inside(e);
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? field_.zero() : it->second;
}

void TruncatedSeries::set_coeff(const Exponent& e, Fp c) {
    check_inside(e);
    if (c.v >= field_.modulus()) throw MathError("coefficient not reduced mod p");
    if (c == field_.zero()) coeffs_.erase(e);
    else coeffs_[e] = c;
}

void TruncatedSeries::accumulate(const Exponent& e, Fp c) {
    check_inside(e);
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        if (c != field_.zero()) coeffs_.emplace(e, c);
        return;
    }
    it->second = field_.add(it->second, c);
    if (it->second == field_.zero()) coeffs_.erase(it);
}

TruncatedSeries TruncatedSeries::restricted(std::int64_t new_bound) const {
    if (new_bound > bound_) throw MathError("cannot extend a series beyond its valid ball");
    TruncatedSeries out(field_, r_, new_bound);
    if (new_bound < 0) return out;
    for (const auto& [e, c] : coeffs_) {
        if (e.degree() > static_cast<std::uint64_t>(new_bound)) break;  // graded order
        out.coeffs_.emplace(e, c);
    }
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.field() != b.field()) throw MathError("series field mismatch");
    if (a.vars() != b.vars()) throw MathError("series variable-count mismatch");
    std::int64_t bound = std::min(a.bound(), b.bound());
    TruncatedSeries out = a.restricted(bound);
    if (bound < 0) return out;
    for (const auto& [e, c] : b.coeffs()) {
        if (e.degree() > static_cast<std::uint64_t>(bound)) break;
        out.accumulate(e, c);
    }
    return out;
}

TruncatedSeries scale(Fp c, const TruncatedSeries& a) {
    TruncatedSeries out(a.field(), a.vars(), a.bound());
    if (c == a.field().zero()) return out;
    for (const auto& [e, v] : a.coeffs()) out.set_coeff(e, a.field().mul(c, v));
    return out;
}

SeriesVector::SeriesVector(std::vector<TruncatedSeries> components)
    : comps_(std::move(components)) {
    if (comps_.empty()) throw MathError("series vector must have length >= 1");
    for (const auto& w : comps_) {
        if (w.field() != comps_.front().field()) throw MathError("series vector field mismatch");
        if (w.vars() != comps_.front().vars())
            throw MathError("series vector variable-count mismatch");
        if (w.bound() != comps_.front().bound())
            throw MathError("series vector components must share one bound");
    }
}

SeriesVector SeriesVector::zero(Field field, std::size_t vars, std::size_t l,
                                std::int64_t bound) {
    return SeriesVector(std::vector<TruncatedSeries>(l, TruncatedSeries(field, vars, bound)));
}

bool SeriesVector::is_zero() const {
    for (const auto& w : comps_)
        if (!w.is_zero()) return false;
    return true;
}

SeriesVector SeriesVector::restricted(std::int64_t new_bound) const {
    std::vector<TruncatedSeries> out;
    out.reserve(comps_.size());
    for (const auto& w : comps_) out.push_back(w.restricted(new_bound));
    return SeriesVector(std::move(out));
}

SeriesVector operator+(const SeriesVector& a, const SeriesVector& b) {
    if (a.size() != b.size()) throw MathError("series vector length mismatch");
    std::vector<TruncatedSeries> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return SeriesVector(std::move(out));
}

SeriesVector scale(Fp c, const SeriesVector& a) {
    std::vector<TruncatedSeries> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(scale(c, a[i]));
    return SeriesVector(std::move(out));
}

}  // namespace dads

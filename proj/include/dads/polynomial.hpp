#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dads/exponent.hpp"
#include "dads/field.hpp"

namespace dads {

/// Sparse multivariate polynomial over GF(p) in r variables. Terms are
/// kept in a map ordered by graded-lex, so iteration (and serialization)
/// is canonical; no zero coefficient is ever stored.
class Polynomial {
public:
    Polynomial(Field field, std::size_t vars) : field_(field), r_(vars) {}

    static Polynomial constant(Field field, std::size_t vars, Fp c);
    static Polynomial monomial(Field field, const Exponent& e, Fp c);

    const Field& field() const { return field_; }
    std::size_t vars() const { return r_; }
    const std::map<Exponent, Fp, GrlexLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    /// Total degree; -1 for the zero polynomial.
    std::int64_t degree() const;

    /// Coefficient at e (zero when absent).
    Fp coeff(const Exponent& e) const;

    /// Accumulates c onto the coefficient at e, dropping it if the sum
    /// cancels to zero.
    void add_term(const Exponent& e, Fp c);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.r_ == b.r_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    Field field_;
    std::size_t r_;
    std::map<Exponent, Fp, GrlexLess> terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial scale(Fp c, const Polynomial& a);
Polynomial operator-(const Polynomial& a);

/// Row vector in D^l.
class PolyVector {
public:
    explicit PolyVector(std::vector<Polynomial> components);
    static PolyVector zero(Field field, std::size_t vars, std::size_t l);

    std::size_t size() const { return comps_.size(); }
    const Polynomial& operator[](std::size_t i) const { return comps_[i]; }
    Polynomial& operator[](std::size_t i) { return comps_[i]; }
    const Field& field() const { return comps_.front().field(); }
    std::size_t vars() const { return comps_.front().vars(); }

    bool is_zero() const;
    /// Max component degree; -1 when all components vanish.
    std::int64_t degree() const;

    friend bool operator==(const PolyVector& a, const PolyVector& b) {
        return a.comps_ == b.comps_;
    }
    friend bool operator!=(const PolyVector& a, const PolyVector& b) { return !(a == b); }

private:
    std::vector<Polynomial> comps_;
};

PolyVector operator+(const PolyVector& a, const PolyVector& b);
PolyVector scale(Fp c, const PolyVector& a);

/// k x l matrix over D. Rows act on series vectors; a row vector c in D^k
/// acts on the matrix by c * R (the left-module convention: c is a row,
/// the product lives in D^l).
class PolyMatrix {
public:
    PolyMatrix(std::size_t k, std::size_t l, std::vector<Polynomial> row_major);
    static PolyMatrix from_rows(std::vector<PolyVector> rows);
    static PolyMatrix identity(Field field, std::size_t vars, std::size_t n);
    static PolyMatrix zero(Field field, std::size_t vars, std::size_t k, std::size_t l);

    std::size_t k() const { return k_; }
    std::size_t l() const { return l_; }
    const Field& field() const { return entries_.front().field(); }
    std::size_t vars() const { return entries_.front().vars(); }

    const Polynomial& entry(std::size_t i, std::size_t j) const { return entries_[i * l_ + j]; }
    Polynomial& entry(std::size_t i, std::size_t j) { return entries_[i * l_ + j]; }
    PolyVector row(std::size_t i) const;

    /// Max degree over all entries; -1 for the zero matrix.
    std::int64_t max_degree() const;

    PolyMatrix transposed() const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.k_ == b.k_ && a.l_ == b.l_ && a.entries_ == b.entries_;
    }

private:
    std::size_t k_, l_;
    std::vector<Polynomial> entries_;
};

/// c(X) * R(X) for a row vector c in D^k: component j is sum_i c_i R_ij.
PolyVector operator*(const PolyVector& c, const PolyMatrix& R);

}  // namespace dads

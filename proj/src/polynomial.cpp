#include "dads/polynomial.hpp"

namespace dads {

namespace {

void require_compatible(const Polynomial& a, const Polynomial& b) {
    if (a.field() != b.field()) throw MathError("polynomial field mismatch");
    if (a.vars() != b.vars()) throw MathError("polynomial variable-count mismatch");
}

}  // namespace

Polynomial Polynomial::constant(Field field, std::size_t vars, Fp c) {
    Polynomial p(field, vars);
    p.add_term(Exponent::zeros(vars), c);
    return p;
}

Polynomial Polynomial::monomial(Field field, const Exponent& e, Fp c) {
    Polynomial p(field, e.vars());
    p.add_term(e, c);
    return p;
}

std::int64_t Polynomial::degree() const {
    if (terms_.empty()) return -1;
    // graded order: the last term has maximal degree
    return static_cast<std::int64_t>(terms_.rbegin()->first.degree());
}

Fp Polynomial::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
}

void Polynomial::add_term(const Exponent& e, Fp c) {
    if (e.vars() != r_) throw MathError("term exponent arity mismatch");
    if (c.v >= field_.modulus()) throw MathError("coefficient not reduced mod p");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != field_.zero()) terms_.emplace(e, c);
        return;
    }
    it->second = field_.add(it->second, c);
    if (it->second == field_.zero()) terms_.erase(it);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_compatible(a, b);
    Polynomial out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, c);
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_compatible(a, b);
    const Field& f = a.field();
    Polynomial out(f, a.vars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            out.add_term(ea.plus(eb), f.mul(ca, cb));
    return out;
}

Polynomial scale(Fp c, const Polynomial& a) {
    const Field& f = a.field();
    Polynomial out(f, a.vars());
    for (const auto& [e, v] : a.terms()) out.add_term(e, f.mul(c, v));
    return out;
}

Polynomial operator-(const Polynomial& a) { return scale(a.field().neg(a.field().one()), a); }

PolyVector::PolyVector(std::vector<Polynomial> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw MathError("polynomial vector must have length >= 1");
    for (const auto& p : comps_) require_compatible(comps_.front(), p);
}

PolyVector PolyVector::zero(Field field, std::size_t vars, std::size_t l) {
    return PolyVector(std::vector<Polynomial>(l, Polynomial(field, vars)));
}

bool PolyVector::is_zero() const {
    for (const auto& p : comps_)
        if (!p.is_zero()) return false;
    return true;
}

std::int64_t PolyVector::degree() const {
    std::int64_t d = -1;
    for (const auto& p : comps_) d = std::max(d, p.degree());
    return d;
}

PolyVector operator+(const PolyVector& a, const PolyVector& b) {
    if (a.size() != b.size()) throw MathError("polynomial vector length mismatch");
    std::vector<Polynomial> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return PolyVector(std::move(out));
}

PolyVector scale(Fp c, const PolyVector& a) {
    std::vector<Polynomial> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(scale(c, a[i]));
    return PolyVector(std::move(out));
}

PolyMatrix::PolyMatrix(std::size_t k, std::size_t l, std::vector<Polynomial> row_major)
    : k_(k), l_(l), entries_(std::move(row_major)) {
    if (k_ == 0 || l_ == 0) throw MathError("polynomial matrix must have k,l >= 1");
    if (entries_.size() != k_ * l_) throw MathError("polynomial matrix entry count mismatch");
    for (const auto& p : entries_) require_compatible(entries_.front(), p);
}

PolyMatrix PolyMatrix::from_rows(std::vector<PolyVector> rows) {
    if (rows.empty()) throw MathError("polynomial matrix must have k,l >= 1");
    std::size_t l = rows.front().size();
    std::vector<Polynomial> entries;
    entries.reserve(rows.size() * l);
    for (const auto& row : rows) {
        if (row.size() != l) throw MathError("polynomial matrix rows have unequal lengths");
        for (std::size_t j = 0; j < l; ++j) entries.push_back(row[j]);
    }
    return PolyMatrix(rows.size(), l, std::move(entries));
}

PolyMatrix PolyMatrix::identity(Field field, std::size_t vars, std::size_t n) {
    PolyMatrix m = zero(field, vars, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.entry(i, i) = Polynomial::constant(field, vars, field.one());
    return m;
}

PolyMatrix PolyMatrix::zero(Field field, std::size_t vars, std::size_t k, std::size_t l) {
    return PolyMatrix(k, l, std::vector<Polynomial>(k * l, Polynomial(field, vars)));
}

PolyVector PolyMatrix::row(std::size_t i) const {
    std::vector<Polynomial> out(entries_.begin() + i * l_, entries_.begin() + (i + 1) * l_);
    return PolyVector(std::move(out));
}

std::int64_t PolyMatrix::max_degree() const {
    std::int64_t d = -1;
    for (const auto& p : entries_) d = std::max(d, p.degree());
    return d;
}

PolyMatrix PolyMatrix::transposed() const {
    std::vector<Polynomial> out;
    out.reserve(entries_.size());
    for (std::size_t j = 0; j < l_; ++j)
        for (std::size_t i = 0; i < k_; ++i) out.push_back(entry(i, j));
    return PolyMatrix(l_, k_, std::move(out));
}

PolyVector operator*(const PolyVector& c, const PolyMatrix& R) {
    if (c.size() != R.k()) throw MathError("row vector length does not match matrix rows");
    if (c.field() != R.field() || c.vars() != R.vars())
        throw MathError("vector/matrix field or variable-count mismatch");
    std::vector<Polynomial> out;
    out.reserve(R.l());
    for (std::size_t j = 0; j < R.l(); ++j) {
        Polynomial acc(c.field(), c.vars());
        for (std::size_t i = 0; i < c.size(); ++i) acc = acc + c[i] * R.entry(i, j);
        out.push_back(std::move(acc));
    }
    return PolyVector(std::move(out));
}

}  // namespace dads

#include "dads/linalg.hpp"

#include <utility>

namespace dads {

DenseMatrix matrix_from_rows(const Field& field, std::size_t cols,
                             const std::vector<std::vector<Fp>>& rows) {
    DenseMatrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw MathError("matrix rows have unequal lengths");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::size_t rref_in_place(DenseMatrix& m, std::vector<std::size_t>* pivots) {
    const Field& f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m.at(pivot, col) == f.zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < cols; ++j)
                std::swap(m.at(pivot, j), m.at(rank, j));
        Fp scale = f.inv(m.at(rank, col));
        for (std::size_t j = col; j < cols; ++j)
            m.at(rank, j) = f.mul(scale, m.at(rank, j));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            Fp factor = m.at(i, col);
            if (factor == f.zero()) continue;
            for (std::size_t j = col; j < cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(rank, j)));
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

std::size_t rank(DenseMatrix m) { return rref_in_place(m); }

std::vector<std::vector<Fp>> nullspace(const DenseMatrix& m) {
    const Field& f = m.field();
    DenseMatrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t rk = rref_in_place(r, &pivots);

    std::vector<bool> is_pivot(r.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Fp>> basis;
    for (std::size_t j = 0; j < r.cols(); ++j) {
        if (is_pivot[j]) continue;
        std::vector<Fp> v(r.cols(), f.zero());
        v[j] = f.one();
        for (std::size_t i = 0; i < rk; ++i) v[pivots[i]] = f.neg(r.at(i, j));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Fp>> solve(const DenseMatrix& m, const std::vector<Fp>& rhs) {
    if (rhs.size() != m.rows()) throw MathError("solve: rhs length mismatch");
    const Field& f = m.field();
    DenseMatrix aug(f, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    std::vector<std::size_t> pivots;
    std::size_t rk = rref_in_place(aug, &pivots);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Fp> x(m.cols(), f.zero());
    for (std::size_t i = 0; i < rk; ++i) x[pivots[i]] = aug.at(i, m.cols());
    return x;
}

bool row_span_equal(DenseMatrix a, DenseMatrix b) {
    if (a.cols() != b.cols() || a.field() != b.field()) return false;
    std::size_t ra = rref_in_place(a);
    std::size_t rb = rref_in_place(b);
    if (ra != rb) return false;
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

bool in_row_span(const DenseMatrix& m, const std::vector<Fp>& v) {
    if (v.size() != m.cols()) throw MathError("in_row_span: length mismatch");
    DenseMatrix ext(m.field(), m.rows() + 1, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) ext.at(i, j) = m.at(i, j);
    for (std::size_t j = 0; j < m.cols(); ++j) ext.at(m.rows(), j) = v[j];
    return rank(ext) == rank(m);
}

}  // namespace dads

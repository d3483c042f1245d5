#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dads/field.hpp"

namespace dads {

/// Dense row-major matrix over GF(p). Purely a carrier for exact
/// elimination; no sparse tricks.
class DenseMatrix {
public:
    DenseMatrix(Field field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), e_(rows * cols) {}

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Fp& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    Fp at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.e_ == b.e_;
    }

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Fp> e_;
};

DenseMatrix matrix_from_rows(const Field& field, std::size_t cols,
                             const std::vector<std::vector<Fp>>& rows);

/// In-place reduced row echelon form. Pivots are chosen left to right,
/// first nonzero row from the top, so the result is deterministic.
/// Returns the rank; pivot columns are appended to *pivots if given.
std::size_t rref_in_place(DenseMatrix& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(DenseMatrix m);

/// Basis of {v : M v = 0}. Free variable j contributes the vector with a 1
/// in position j and the pivot entries solved from the RREF, giving the
/// canonical reduced basis, ordered by j.
std::vector<std::vector<Fp>> nullspace(const DenseMatrix& m);

/// One solution of M x = b with all free variables set to 0, or nullopt if
/// the system is inconsistent.
std::optional<std::vector<Fp>> solve(const DenseMatrix& m, const std::vector<Fp>& rhs);

/// Row spans compared as subspaces: RREF of both stacks must agree on the
/// nonzero rows.
bool row_span_equal(DenseMatrix a, DenseMatrix b);

/// True iff v lies in the row span of m.
bool in_row_span(const DenseMatrix& m, const std::vector<Fp>& v);

}  // namespace dads

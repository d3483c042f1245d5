#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dads/linalg.hpp"
#include "dads/shiftop.hpp"

namespace dads {

/// Kernel representation: the system Ker R(X) of all series vectors
/// annihilated by the rows of R acting in the shift.
struct AutoregressiveSystem {
    explicit AutoregressiveSystem(PolyMatrix matrix)
        : R(std::move(matrix)), symbol_degree(operator_degree(R)) {}

    PolyMatrix R;
    std::int64_t symbol_degree;  // max entry degree, clamped to >= 0

    std::size_t k() const { return R.k(); }
    std::size_t l() const { return R.l(); }
    std::size_t vars() const { return R.vars(); }
    const Field& field() const { return R.field(); }
};

/// Finite-window shadow of a behavior: a basis of the kernel trajectories
/// truncated at the given bound. Basis vectors are independent over GF(p)
/// and each one satisfies R o V = 0 on the ball bound - symbol_degree.
struct BehaviorSlice {
    AutoregressiveSystem system;
    std::int64_t bound;
    std::vector<SeriesVector> basis;

    std::size_t dim() const { return basis.size(); }
};

/// Verdict of a membership test; a pass certifies R o W = 0 only up to the
/// checked degree.
struct Membership {
    bool pass = false;
    std::int64_t checked_degree = -1;
    // (component, exponent, value) of the first violated coefficient
    std::optional<std::tuple<std::size_t, Exponent, Fp>> first_violation;
};

struct CheckVerdict {
    bool pass = false;
    std::string detail;
};

/// Solves R(X) o W = 0 at truncation D: unknowns are the coefficients
/// W_{lambda,a} with |a| <= D ordered by (lambda, graded-lex rank), one
/// equation per (row, a) with |a| <= D - symbol_degree, basis from the
/// canonical nullspace. Requires D >= symbol_degree.
BehaviorSlice solve_behavior(const AutoregressiveSystem& sys, std::int64_t bound);

/// Re-checks the kernel certificate apply(R, V) = 0 for every basis vector.
bool certify(const BehaviorSlice& slice);

Membership is_member(const AutoregressiveSystem& sys, const SeriesVector& w);

/// P^perp at truncation: stacks the generators as matrix rows and solves.
BehaviorSlice orthogonal_of_polys(const std::vector<PolyVector>& gens, std::int64_t bound);

/// Truncation-sound over-approximation of the annihilator of Q: all
/// p in D^l of degree <= max_degree whose pairing with every W in Q
/// vanishes on the checkable ball bound(Q) - max_degree.
std::vector<PolyVector> orthogonal_of_series(const std::vector<SeriesVector>& q,
                                             std::int64_t max_degree);

/// All unit monomial vectors (component, exponent) with |exponent| <=
/// max_degree: the annihilator of the zero subspace.
std::vector<PolyVector> full_poly_basis(const Field& field, std::size_t vars, std::size_t l,
                                        std::int64_t max_degree);

/// Coefficient matrix of a family of series vectors over the ball
/// |a| <= bound, one row per vector, columns ordered by (component, rank).
DenseMatrix coefficient_matrix(const Field& field, std::size_t vars, std::size_t l,
                               std::int64_t bound, const std::vector<SeriesVector>& rows);

/// Coefficient matrix of a family of polynomial vectors over the ball
/// |a| <= max_degree.
DenseMatrix coefficient_matrix(const Field& field, std::size_t vars, std::size_t l,
                               std::int64_t max_degree, const std::vector<PolyVector>& rows);

struct TriplePerpReport {
    bool pass = false;
    bool spans_equal = false;
    bool generators_in_double_perp = false;
    std::int64_t comparison_bound = -1;
    std::size_t first_perp_dim = 0;
    std::size_t second_perp_dim = 0;
    std::size_t third_perp_dim = 0;
};

/// Executable form of the triple-orthogonal law: the first and third perp
/// of P generate the same slice, and P embeds in its double perp. All
/// verdicts hold up to the stated comparison bound.
TriplePerpReport triple_perp_check(const std::vector<PolyVector>& gens, std::int64_t bound,
                                   std::int64_t max_degree);

/// Verifies the slice is closed under every unit shift, certifying the
/// D-submodule property on the window.
CheckVerdict shift_invariance_check(const BehaviorSlice& slice);

/// Verifies the quotient pairing is well defined: for random combinations
/// q = c * R_P, the series pairing of q against every slice basis vector
/// vanishes on the certified ball.
CheckVerdict quotient_pairing_check(const std::vector<PolyVector>& gens, std::int64_t bound,
                                    std::uint64_t trials, std::uint64_t seed);

}  // namespace dads

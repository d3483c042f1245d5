#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "dads/errors.hpp"

namespace dads {

/// Multi-index a = (a_1, ..., a_r) of a monomial X^a / Y^a.
class Exponent {
public:
    explicit Exponent(std::vector<std::uint64_t> coords) : c_(std::move(coords)) {}
    Exponent(std::initializer_list<std::uint64_t> coords) : c_(coords) {}

    static Exponent zeros(std::size_t r) { return Exponent(std::vector<std::uint64_t>(r, 0)); }

    std::size_t vars() const { return c_.size(); }
    std::uint64_t operator[](std::size_t i) const { return c_[i]; }
    const std::vector<std::uint64_t>& coords() const { return c_; }

    /// Total degree |a|; overflow is a reported error.
    std::uint64_t degree() const;

    /// Componentwise sum, overflow-checked.
    Exponent plus(const Exponent& o) const;

    /// a - b when b <= a componentwise, otherwise nullopt ("not dominated").
    std::optional<Exponent> minus_dominated(const Exponent& o) const;

    friend bool operator==(const Exponent& a, const Exponent& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Exponent& a, const Exponent& b) { return a.c_ != b.c_; }

private:
    std::vector<std::uint64_t> c_;
};

/// Graded lexicographic order: grade by total degree, break ties
/// lexicographically with X_1 most significant, so within one degree class
/// (d,0,...,0) comes first and (0,...,0,d) last. This is the total order
/// realizing the rank bijection below.
bool grlex_less(const Exponent& a, const Exponent& b);

struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const { return grlex_less(a, b); }
};

/// C(n, k), exact; throws MathError when the value does not fit 64 bits.
std::uint64_t checked_binomial(std::uint64_t n, std::uint64_t k);

/// Number of exponents with |a| <= degree_bound in r variables
/// (0 for a negative bound).
std::uint64_t ball_size(std::size_t r, std::int64_t degree_bound);

/// Rank of a under graded-lex: the unique order isomorphism
/// (N^r, grlex) -> (N, <) for the order above.
std::uint64_t rank_of(const Exponent& a);

/// Inverse of rank_of: the index-th exponent in graded-lex order.
Exponent exponent_at_rank(std::size_t r, std::uint64_t index);

/// First n exponents in graded-lex order.
std::vector<Exponent> window(std::size_t r, std::size_t n);

/// All exponents with |a| <= degree_bound, in graded-lex order. Under
/// graded-lex every total-degree ball is an initial window, so the two
/// enumerations agree.
std::vector<Exponent> degree_ball(std::size_t r, std::int64_t degree_bound);

}  // namespace dads

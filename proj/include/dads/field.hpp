#pragma once

#include <cstdint>

#include "dads/errors.hpp"

namespace dads {

/// Element of GF(p), stored as the canonical representative in [0, p).
/// The modulus lives in the Field context, not in the element.
struct Fp {
    std::uint32_t v = 0;

    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
    friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }
};

/// Prime field GF(p) with 2 <= p < 2^31. Primality is verified at
/// construction (trial division); every operation is exact.
class Field {
public:
    explicit Field(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    Fp zero() const { return Fp{0}; }
    Fp one() const { return Fp{1}; }

    /// Reduces an arbitrary signed integer into [0, p).
    Fp from_int(std::int64_t x) const;

    Fp add(Fp a, Fp b) const {
        std::uint64_t s = std::uint64_t(a.v) + b.v;
        if (s >= p_) s -= p_;
        return Fp{static_cast<std::uint32_t>(s)};
    }

    Fp sub(Fp a, Fp b) const { return add(a, neg(b)); }

    Fp neg(Fp a) const { return Fp{a.v == 0 ? 0 : p_ - a.v}; }

    Fp mul(Fp a, Fp b) const {
        return Fp{static_cast<std::uint32_t>(std::uint64_t(a.v) * b.v % p_)};
    }

    /// Multiplicative inverse; inv(0) is a division-by-zero error.
    Fp inv(Fp a) const;

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

private:
    std::uint32_t p_;
};

}  // namespace dads

#include "dads/field.hpp"

#include <string>

namespace dads {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    if (p % 3 == 0) return p == 3;
    for (std::uint64_t d = 5; d * d <= p; d += 6) {
        if (p % d == 0 || p % (d + 2) == 0) return false;
    }
    return true;
}

}  // namespace

Field::Field(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31))
        throw MathError("field modulus " + std::to_string(p) + " exceeds 2^31 - 1");
    if (!is_prime(p))
        throw MathError("field modulus " + std::to_string(p) + " is not prime");
}

Fp Field::from_int(std::int64_t x) const {
    std::int64_t m = x % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    return Fp{static_cast<std::uint32_t>(m)};
}

Fp Field::inv(Fp a) const {
    if (a.v == 0) throw MathError("division by zero in GF(p)");
    // Extended Euclid on (a, p); p prime, so gcd is 1.
    std::int64_t r0 = a.v, r1 = p_;
    std::int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return from_int(s0);
}

}  // namespace dads

#include "dads/exponent.hpp"

#include <limits>

namespace dads {

namespace {

constexpr std::uint64_t kMax64 = std::numeric_limits<std::uint64_t>::max();

// C(n, k) saturating to UINT64_MAX instead of throwing; used for the
// degree-class search in exponent_at_rank where "too big" just means
// "past the target".
std::uint64_t sat_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t m = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= m; ++i) {
        // result = result * (n - m + i) / i, exact at every step
        unsigned __int128 wide = static_cast<unsigned __int128>(result) * (n - m + i);
        wide /= i;
        if (wide > kMax64) return kMax64;
        result = static_cast<std::uint64_t>(wide);
    }
    return result;
}

}  // namespace

std::uint64_t checked_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t m = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= m; ++i) {
        result = result * (n - m + i) / i;
        if (result > kMax64) throw MathError("binomial coefficient overflows 64 bits");
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t Exponent::degree() const {
    std::uint64_t d = 0;
    for (std::uint64_t x : c_)
        if (__builtin_add_overflow(d, x, &d)) throw MathError("exponent degree overflow");
    return d;
}

Exponent Exponent::plus(const Exponent& o) const {
    if (o.vars() != vars()) throw MathError("exponent arity mismatch");
    std::vector<std::uint64_t> out(vars());
    for (std::size_t i = 0; i < vars(); ++i)
        if (__builtin_add_overflow(c_[i], o.c_[i], &out[i]))
            throw MathError("exponent coordinate overflow");
    return Exponent(std::move(out));
}

std::optional<Exponent> Exponent::minus_dominated(const Exponent& o) const {
    if (o.vars() != vars()) throw MathError("exponent arity mismatch");
    std::vector<std::uint64_t> out(vars());
    for (std::size_t i = 0; i < vars(); ++i) {
        if (o.c_[i] > c_[i]) return std::nullopt;
        out[i] = c_[i] - o.c_[i];
    }
    return Exponent(std::move(out));
}

bool grlex_less(const Exponent& a, const Exponent& b) {
    std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.vars() && i < b.vars(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];  // larger leading coordinate ranks earlier
    }
    return false;
}

std::uint64_t ball_size(std::size_t r, std::int64_t degree_bound) {
    if (degree_bound < 0) return 0;
    return checked_binomial(static_cast<std::uint64_t>(degree_bound) + r, r);
}

std::uint64_t rank_of(const Exponent& a) {
    const std::size_t r = a.vars();
    if (r == 0) throw MathError("rank of a 0-variable exponent");
    std::uint64_t d = a.degree();
    if (r == 1) return d;

    // exponents of strictly smaller degree
    std::uint64_t rank = (d == 0) ? 0 : checked_binomial(d - 1 + r, r);

    // position within the degree class, one coordinate at a time
    std::uint64_t s = d;
    for (std::size_t i = 0; i + 1 < r; ++i) {
        std::size_t m = r - i;  // variables still undecided
        if (s > a[i]) {
            std::uint64_t ahead = checked_binomial(s - a[i] - 1 + (m - 1), m - 1);
            if (__builtin_add_overflow(rank, ahead, &rank))
                throw MathError("monomial rank overflows 64 bits");
        }
        s -= a[i];
    }
    return rank;
}

Exponent exponent_at_rank(std::size_t r, std::uint64_t index) {
    if (r == 0) throw MathError("exponent with 0 variables");
    if (r == 1) return Exponent({index});

    // smallest d with C(d + r, r) > index
    std::uint64_t lo = 0, hi = 1;
    while (sat_binomial(hi + r, r) <= index) {
        lo = hi + 1;
        hi = hi * 2 + 1;
    }
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (sat_binomial(mid + r, r) > index) hi = mid;
        else lo = mid + 1;
    }
    std::uint64_t d = lo;
    std::uint64_t rem = index - (d == 0 ? 0 : checked_binomial(d - 1 + r, r));

    std::vector<std::uint64_t> coords(r);
    std::uint64_t s = d;
    for (std::size_t i = 0; i + 1 < r; ++i) {
        std::size_t m = r - i;
        // #elements of the class whose i-th coordinate is >= j equals
        // C(s - j + m - 1, m - 1); binary-search the coordinate.
        std::uint64_t jlo = 0, jhi = s;
        while (jlo < jhi) {
            std::uint64_t jmid = jlo + (jhi - jlo + 1) / 2;
            std::uint64_t ge = sat_binomial(s - jmid + m - 1, m - 1);
            if (rem < ge) jlo = jmid;
            else jhi = jmid - 1;
        }
        std::uint64_t j = jlo;
        std::uint64_t ge_next = (j + 1 > s) ? 0 : sat_binomial(s - (j + 1) + m - 1, m - 1);
        rem -= ge_next;
        coords[i] = j;
        s -= j;
    }
    coords[r - 1] = s;
    return Exponent(std::move(coords));
}

std::vector<Exponent> window(std::size_t r, std::size_t n) {
    std::vector<Exponent> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(exponent_at_rank(r, i));
    return out;
}

std::vector<Exponent> degree_ball(std::size_t r, std::int64_t degree_bound) {
    return window(r, static_cast<std::size_t>(ball_size(r, degree_bound)));
}

}  // namespace dads

#pragma once

#include <cstdint>

#include "dads/polynomial.hpp"
#include "dads/series.hpp"

namespace dads {

/// Deterministic generator (splitmix64). Identical seeds give identical
/// streams on every platform; no std distribution is involved anywhere.
class TrialRng {
public:
    explicit TrialRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

private:
    std::uint64_t state_;
};

/// Per-trial seed derived from (master seed, trial index), so parallel and
/// serial suite runs agree.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    TrialRng mix(master ^ ((index + 1) * 0xA0761D6478BD642Full));
    mix.next();
    return mix.next();
}

Fp random_scalar(TrialRng& rng, const Field& field);
Fp random_nonzero_scalar(TrialRng& rng, const Field& field);
Exponent random_exponent(TrialRng& rng, std::size_t vars, std::uint64_t max_degree);

/// Up to four random terms of degree <= max_degree; may come out zero.
Polynomial random_polynomial(TrialRng& rng, const Field& field, std::size_t vars,
                             std::uint64_t max_degree);
Polynomial random_nonzero_polynomial(TrialRng& rng, const Field& field, std::size_t vars,
                                     std::uint64_t max_degree);
PolyVector random_poly_vector(TrialRng& rng, const Field& field, std::size_t vars,
                              std::size_t l, std::uint64_t max_degree);
PolyMatrix random_poly_matrix(TrialRng& rng, const Field& field, std::size_t vars,
                              std::size_t k, std::size_t l, std::uint64_t max_degree);

/// Dense on the whole ball |a| <= bound.
TruncatedSeries random_series(TrialRng& rng, const Field& field, std::size_t vars,
                              std::int64_t bound);
SeriesVector random_series_vector(TrialRng& rng, const Field& field, std::size_t vars,
                                  std::size_t l, std::int64_t bound);

/// Generating sets with at least one nonzero element.
std::vector<PolyVector> random_generators(TrialRng& rng, const Field& field, std::size_t vars,
                                          std::size_t l, std::size_t count,
                                          std::uint64_t max_degree);

}  // namespace dads

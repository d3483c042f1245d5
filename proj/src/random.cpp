#include "dads/random.hpp"

namespace dads {

Fp random_scalar(TrialRng& rng, const Field& field) {
    return Fp{static_cast<std::uint32_t>(rng.below(field.modulus()))};
}

Fp random_nonzero_scalar(TrialRng& rng, const Field& field) {
    return Fp{static_cast<std::uint32_t>(1 + rng.below(field.modulus() - 1))};
}

Exponent random_exponent(TrialRng& rng, std::size_t vars, std::uint64_t max_degree) {
    std::uint64_t remaining = rng.below(max_degree + 1);
    std::vector<std::uint64_t> coords(vars, 0);
    for (std::size_t i = 0; i + 1 < vars; ++i) {
        coords[i] = rng.below(remaining + 1);
        remaining -= coords[i];
    }
    coords[vars - 1] = remaining;
    return Exponent(std::move(coords));
}

Polynomial random_polynomial(TrialRng& rng, const Field& field, std::size_t vars,
                             std::uint64_t max_degree) {
    Polynomial p(field, vars);
    std::uint64_t terms = 1 + rng.below(4);
    for (std::uint64_t t = 0; t < terms; ++t)
        p.add_term(random_exponent(rng, vars, max_degree), random_scalar(rng, field));
    return p;
}

Polynomial random_nonzero_polynomial(TrialRng& rng, const Field& field, std::size_t vars,
                                     std::uint64_t max_degree) {
    for (;;) {
        Polynomial p = random_polynomial(rng, field, vars, max_degree);
        if (!p.is_zero()) return p;
    }
}

PolyVector random_poly_vector(TrialRng& rng, const Field& field, std::size_t vars,
                              std::size_t l, std::uint64_t max_degree) {
    std::vector<Polynomial> comps;
    comps.reserve(l);
    for (std::size_t i = 0; i < l; ++i)
        comps.push_back(random_polynomial(rng, field, vars, max_degree));
    return PolyVector(std::move(comps));
}

PolyMatrix random_poly_matrix(TrialRng& rng, const Field& field, std::size_t vars,
                              std::size_t k, std::size_t l, std::uint64_t max_degree) {
    std::vector<Polynomial> entries;
    entries.reserve(k * l);
    for (std::size_t i = 0; i < k * l; ++i)
        entries.push_back(random_polynomial(rng, field, vars, max_degree));
    return PolyMatrix(k, l, std::move(entries));
}

TruncatedSeries random_series(TrialRng& rng, const Field& field, std::size_t vars,
                              std::int64_t bound) {
    TruncatedSeries w(field, vars, bound);
    for (const Exponent& e : degree_ball(vars, bound))
        w.set_coeff(e, random_scalar(rng, field));
    return w;
}

SeriesVector random_series_vector(TrialRng& rng, const Field& field, std::size_t vars,
                                  std::size_t l, std::int64_t bound) {
    std::vector<TruncatedSeries> comps;
    comps.reserve(l);
    for (std::size_t i = 0; i < l; ++i) comps.push_back(random_series(rng, field, vars, bound));
    return SeriesVector(std::move(comps));
}

std::vector<PolyVector> random_generators(TrialRng& rng, const Field& field, std::size_t vars,
                                          std::size_t l, std::size_t count,
                                          std::uint64_t max_degree) {
    for (;;) {
        std::vector<PolyVector> gens;
        gens.reserve(count);
        for (std::size_t i = 0; i < count; ++i)
            gens.push_back(random_poly_vector(rng, field, vars, l, max_degree));
        for (const auto& g : gens)
            if (!g.is_zero()) return gens;
    }
}

}  // namespace dads

#pragma once

#include "dads/polynomial.hpp"
#include "dads/series.hpp"

namespace dads {

/// Degree used for bound propagation: applying an operator of degree g to
/// data valid on the ball D leaves a result valid on D - g. The zero
/// polynomial clamps to 0 (its output, the zero series, is known on the
/// whole input ball).
inline std::int64_t operator_degree(const Polynomial& d) { return std::max<std::int64_t>(0, d.degree()); }
inline std::int64_t operator_degree(const PolyVector& d) { return std::max<std::int64_t>(0, d.degree()); }
inline std::int64_t operator_degree(const PolyMatrix& R) { return std::max<std::int64_t>(0, R.max_degree()); }

/// The shift by beta: output coefficient at a is W_{a+beta}, valid on the
/// ball bound(W) - |beta|.
TruncatedSeries shift(const Exponent& beta, const TruncatedSeries& w);

/// Polynomial operator in the shift: coefficient at a is
/// sum_beta d_beta W_{a+beta}; result bound = bound(W) - deg d.
TruncatedSeries apply(const Polynomial& d, const TruncatedSeries& w);

/// Componentwise matrix action: component kappa is
/// sum_lambda apply(R_{kappa,lambda}, W_lambda), all components restricted
/// to the uniform bound bound(W) - max entry degree.
SeriesVector apply(const PolyMatrix& R, const SeriesVector& w);

/// Scalar pairing <d, W>: sum over lambda and over the support of d_lambda
/// of d_{lambda,a} W_{lambda,a}. Every exponent of d must lie inside W's
/// valid ball, otherwise unknown coefficients would be read.
Fp pairing_scalar(const PolyVector& d, const SeriesVector& w);
Fp pairing_scalar(const Polynomial& d, const TruncatedSeries& w);

/// Series pairing <d, W> = sum_lambda d_lambda o W_lambda; its constant
/// term is the scalar pairing.
TruncatedSeries pairing_series(const PolyVector& d, const SeriesVector& w);

/// Equality on the intersection of the valid balls.
bool equal_on_common_ball(const TruncatedSeries& a, const TruncatedSeries& b);
bool equal_on_common_ball(const SeriesVector& a, const SeriesVector& b);

}  // namespace dads

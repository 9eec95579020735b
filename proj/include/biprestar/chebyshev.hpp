#pragma once

// Chebyshev polynomials of the first (T_n) and second (U_n) kind and their
// generating functions. Evaluation uses the three-term recurrence; the
// argument must satisfy |t| < 1.

#include <cstddef>

#include "biprestar/series.hpp"

namespace biprestar::chebyshev {

// Throws ErrorCode::ArgOutOfRange unless |t| < 1.
void require_argument(double t);

double u_eval(std::size_t n, double t);
double t_eval(std::size_t n, double t);

// 1/(1 - 2tz + z^2) = sum U_n(t) z^n, truncated at `order`.
TruncatedSeries phi_series(double t, std::size_t order);

// (1 - tz)/(1 - 2tz + z^2) = sum T_n(t) z^n, truncated at `order`.
TruncatedSeries t_generating_series(double t, std::size_t order);

// Monomial coefficients of T_n and U_n as polynomials in t (order n).
TruncatedSeries t_polynomial(std::size_t n);
TruncatedSeries u_polynomial(std::size_t n);

}  // namespace biprestar::chebyshev

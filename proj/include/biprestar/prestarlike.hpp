#pragma once

// Prestarlike convolution F = s * f with s(z) = z/(1-z)^{2(1-alpha)}, its
// inverse-side counterpart G = s * f^{-1}, and the operator
//
//   L_lambda[F] = (1 - lambda) zF'/F + lambda (1 + zF''/F')
//
// whose subordination to 1/(1 - 2tz + z^2) defines the bi-prestarlike class.

#include <cstddef>

#include "biprestar/series.hpp"

namespace biprestar {

// Order of prestarlikeness, 0 <= alpha < 1.
class PrestarlikeOrder {
 public:
  explicit PrestarlikeOrder(double alpha);
  double value() const noexcept { return alpha_; }

 private:
  double alpha_;
};

// Convex-combination weight lambda in [0, 1].
class OperatorWeight {
 public:
  explicit OperatorWeight(double lambda);
  double value() const noexcept { return lambda_; }

 private:
  double lambda_;
};

namespace prestarlike {

// Psi_n(alpha) = prod_{k=2}^{n} (k - 2 alpha) / (n - 1)!; n >= 2.
double psi(std::size_t n, PrestarlikeOrder alpha);

// s(z) = z + sum_{n>=2} Psi_n(alpha) z^n up to `order`.
TruncatedSeries extremal_series(PrestarlikeOrder alpha, std::size_t order);

// s * f for normalized f.
TruncatedSeries transform_f(const TruncatedSeries& f, PrestarlikeOrder alpha);

// s * g with g = f^{-1}, f = z + a2 z^2 + a3 z^3 + 0 z^4 + ...:
//   w - Psi_2 a2 w^2 + Psi_3 (2 a2^2 - a3) w^3 + ...
// Coefficients past w^3 come from series reversion.
TruncatedSeries transform_g(Complex a2, Complex a3, PrestarlikeOrder alpha,
                            std::size_t order = 3);

// L_lambda[F] for normalized F of order N; result has order N - 1.
TruncatedSeries operator_l(const TruncatedSeries& F, OperatorWeight lambda);

}  // namespace prestarlike
}  // namespace biprestar

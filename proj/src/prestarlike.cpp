#include "biprestar/prestarlike.hpp"

#include <cmath>
#include <string>

#include "biprestar/error.hpp"

namespace biprestar {

PrestarlikeOrder::PrestarlikeOrder(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::RangeError,
                "alpha must lie in [0, 1), got " + std::to_string(alpha));
  }
}

OperatorWeight::OperatorWeight(double lambda) : lambda_(lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(ErrorCode::RangeError,
                "lambda must lie in [0, 1], got " + std::to_string(lambda));
  }
}

namespace prestarlike {

double psi(std::size_t n, PrestarlikeOrder alpha) {
  if (n < 2) {
    throw Error(ErrorCode::BadIndex,
                "Psi_n is defined for n >= 2, got " + std::to_string(n));
  }
  // Pair each factor (k - 2 alpha) with (k - 1) from the factorial.
  double value = 1.0;
  for (std::size_t k = 2; k <= n; ++k) {
    value *= (static_cast<double>(k) - 2.0 * alpha.value()) /
             static_cast<double>(k - 1);
  }
  return value;
}

TruncatedSeries extremal_series(PrestarlikeOrder alpha, std::size_t order) {
  TruncatedSeries s = TruncatedSeries::identity(order);
  for (std::size_t n = 2; n <= s.order(); ++n) s[n] = psi(n, alpha);
  return s;
}

TruncatedSeries transform_f(const TruncatedSeries& f, PrestarlikeOrder alpha) {
  if (!f.is_normalized()) {
    throw Error(ErrorCode::NotNormalized,
                "prestarlike transform requires a normalized series");
  }
  return hadamard(extremal_series(alpha, f.order()), f);
}

TruncatedSeries transform_g(Complex a2, Complex a3, PrestarlikeOrder alpha,
                            std::size_t order) {
  if (order < 3) {
    throw Error(ErrorCode::BadIndex, "transform_g needs order >= 3");
  }
  const double psi2 = psi(2, alpha);
  const double psi3 = psi(3, alpha);
  TruncatedSeries g(order);
  g[1] = 1.0;
  g[2] = -psi2 * a2;
  g[3] = psi3 * (2.0 * a2 * a2 - a3);
  if (order > 3) {
    const TruncatedSeries tail = hadamard(
        extremal_series(alpha, order),
        revert(TruncatedSeries::normalized(a2, a3, order)));
    for (std::size_t n = 4; n <= order; ++n) g[n] = tail[n];
  }
  return g;
}

TruncatedSeries operator_l(const TruncatedSeries& F, OperatorWeight lambda) {
  if (!F.is_normalized()) {
    throw Error(ErrorCode::NotNormalized,
                "operator L requires a normalized series");
  }
  if (F.order() < 2) {
    throw Error(ErrorCode::BadIndex, "operator L needs order >= 2");
  }
  const TruncatedSeries d1 = derivative(F);
  const TruncatedSeries d2 = derivative(d1);

  const TruncatedSeries starlike = div(d1.times_z(), F);  // zF'/F
  TruncatedSeries convex = div(d2.times_z(), d1);          // zF''/F'
  convex[0] += 1.0;

  const double w = lambda.value();
  return add(scale(starlike, 1.0 - w), scale(convex, w));
}

}  // namespace prestarlike
}  // namespace biprestar

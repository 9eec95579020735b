#include "biprestar/chebyshev.hpp"

#include <cmath>
#include <string>

#include "biprestar/error.hpp"

namespace biprestar::chebyshev {

void require_argument(double t) {
  if (!(std::abs(t) < 1.0)) {
    throw Error(ErrorCode::ArgOutOfRange,
                "Chebyshev argument must satisfy |t| < 1, got " +
                    std::to_string(t));
  }
}

namespace {

double recurrence(std::size_t n, double t, double first) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = first;
  for (std::size_t k = 2; k <= n; ++k) {
    const double next = 2.0 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

TruncatedSeries polynomial(std::size_t n, Complex first_linear) {
  // P_0 = 1, P_1 = first_linear * t, P_k = 2t P_{k-1} - P_{k-2}.
  TruncatedSeries prev = TruncatedSeries::constant(1.0, n);
  if (n == 0) return prev;
  TruncatedSeries cur(n);
  cur[1] = first_linear;
  for (std::size_t k = 2; k <= n; ++k) {
    TruncatedSeries next = scale(cur.times_z().truncated(n), 2.0) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

double u_eval(std::size_t n, double t) {
  require_argument(t);
  return recurrence(n, t, 2.0 * t);
}

double t_eval(std::size_t n, double t) {
  require_argument(t);
  return recurrence(n, t, t);
}

TruncatedSeries phi_series(double t, std::size_t order) {
  require_argument(t);
  TruncatedSeries s(order);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n == 0) s[n] = 1.0;
    else if (n == 1) s[n] = 2.0 * t;
    else s[n] = 2.0 * t * s[n - 1] - s[n - 2];
  }
  return s;
}

TruncatedSeries t_generating_series(double t, std::size_t order) {
  require_argument(t);
  // Multiply the U-generating series by the numerator 1 - tz.
  TruncatedSeries numerator(order);
  numerator[0] = 1.0;
  if (order >= 1) numerator[1] = -t;
  return mul(numerator, phi_series(t, order));
}

TruncatedSeries t_polynomial(std::size_t n) { return polynomial(n, 1.0); }
TruncatedSeries u_polynomial(std::size_t n) { return polynomial(n, 2.0); }

}  // namespace biprestar::chebyshev

#include "biprestar/series.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "biprestar/error.hpp"

namespace biprestar {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::initializer_list<Complex> coeffs)
    : coeffs_(coeffs) {
  if (coeffs_.empty()) coeffs_.emplace_back();
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back();
}

TruncatedSeries TruncatedSeries::constant(Complex value, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
  TruncatedSeries s(std::max<std::size_t>(order, 1));
  s.coeffs_[1] = 1.0;
  return s;
}

TruncatedSeries TruncatedSeries::normalized(Complex a2, Complex a3,
                                            std::size_t order) {
  TruncatedSeries s(std::max<std::size_t>(order, 3));
  s.coeffs_[1] = 1.0;
  s.coeffs_[2] = a2;
  s.coeffs_[3] = a3;
  return s;
}

bool TruncatedSeries::is_normalized(double tol) const noexcept {
  return std::abs(coeff(0)) <= tol && std::abs(coeff(1) - 1.0) <= tol &&
         order() >= 1;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  TruncatedSeries s(order);
  for (std::size_t n = 0; n <= order; ++n) s.coeffs_[n] = coeff(n);
  return s;
}

TruncatedSeries TruncatedSeries::times_z() const {
  TruncatedSeries s(order() + 1);
  std::copy(coeffs_.begin(), coeffs_.end(), s.coeffs_.begin() + 1);
  return s;
}

namespace {

std::size_t common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  return std::min(a.order(), b.order());
}

// Drops the constant term: a(z)/z, order N-1.
TruncatedSeries shift_down(const TruncatedSeries& a) {
  TruncatedSeries s(a.order() - 1);
  for (std::size_t n = 0; n < a.order(); ++n) s[n] = a[n + 1];
  return s;
}

}  // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries s(common_order(a, b));
  for (std::size_t n = 0; n <= s.order(); ++n) s[n] = a[n] + b[n];
  return s;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries s(common_order(a, b));
  for (std::size_t n = 0; n <= s.order(); ++n) s[n] = a[n] - b[n];
  return s;
}

TruncatedSeries scale(const TruncatedSeries& a, Complex factor) {
  TruncatedSeries s(a.order());
  for (std::size_t n = 0; n <= s.order(); ++n) s[n] = factor * a[n];
  return s;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries s(common_order(a, b));
  for (std::size_t n = 0; n <= s.order(); ++n) {
    Complex acc{};
    for (std::size_t k = 0; k <= n; ++k) acc += a[k] * b[n - k];
    s[n] = acc;
  }
  return s;
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b[0] == Complex{}) {
    if (a[0] != Complex{} || b.order() == 0 || a.order() == 0 ||
        b[1] == Complex{}) {
      throw Error(ErrorCode::DivisionBySingular,
                  "series division by a series with vanishing leading term");
    }
    return div(shift_down(a), shift_down(b));
  }
  TruncatedSeries q(common_order(a, b));
  const Complex inv = 1.0 / b[0];
  for (std::size_t n = 0; n <= q.order(); ++n) {
    Complex acc = a[n];
    for (std::size_t k = 1; k <= n; ++k) acc -= b[k] * q[n - k];
    q[n] = acc * inv;
  }
  return q;
}

TruncatedSeries derivative(const TruncatedSeries& a) {
  if (a.order() == 0) return TruncatedSeries(0);
  TruncatedSeries s(a.order() - 1);
  for (std::size_t n = 0; n <= s.order(); ++n)
    s[n] = static_cast<double>(n + 1) * a[n + 1];
  return s;
}

TruncatedSeries hadamard(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries s(common_order(a, b));
  for (std::size_t n = 0; n <= s.order(); ++n) s[n] = a[n] * b[n];
  return s;
}

TruncatedSeries compose(const TruncatedSeries& outer,
                        const TruncatedSeries& inner) {
  if (inner[0] != Complex{}) {
    throw Error(ErrorCode::CompositionConstantTerm,
                "inner series of a composition must vanish at the origin");
  }
  const std::size_t order = common_order(outer, inner);
  // Horner in the inner series.
  TruncatedSeries acc = TruncatedSeries::constant(outer[order], order);
  for (std::size_t k = order; k-- > 0;) {
    acc = mul(acc, inner.truncated(order));
    acc[0] += outer[k];
  }
  return acc;
}

TruncatedSeries revert(const TruncatedSeries& a) {
  if (!a.is_normalized()) {
    throw Error(ErrorCode::NotNormalized,
                "reversion requires a(0) = 0 and a'(0) = 1");
  }
  const std::size_t order = a.order();
  TruncatedSeries b = TruncatedSeries::identity(order);
  // a(b(w)) has coefficient n equal to b_n plus terms in b_2..b_{n-1}.
  for (std::size_t n = 2; n <= order; ++n) {
    const TruncatedSeries residual = compose(a, b);
    b[n] -= residual[n];
  }
  return b;
}

double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::max(a.order(), b.order());
  double worst = 0.0;
  for (std::size_t n = 0; n <= order; ++n)
    worst = std::max(worst, std::abs(a.coeff(n) - b.coeff(n)));
  return worst;
}

bool approx_equal(const TruncatedSeries& a, const TruncatedSeries& b,
                  double tol) {
  return max_abs_diff(a, b) <= tol;
}

}  // namespace biprestar

#pragma once

// Truncated power series with complex coefficients.
//
// A TruncatedSeries of order N stores the coefficients of 1, z, ..., z^N.
// Binary operations truncate at the smaller of the two operand orders.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace biprestar {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 5;
inline constexpr double kSeriesTolerance = 1e-10;

class TruncatedSeries {
 public:
  // Zero series of the given order.
  explicit TruncatedSeries(std::size_t order = 0);
  TruncatedSeries(std::initializer_list<Complex> coeffs);
  explicit TruncatedSeries(std::vector<Complex> coeffs);

  static TruncatedSeries constant(Complex value, std::size_t order);
  // z + 0 z^2 + ... at the given order (order >= 1).
  static TruncatedSeries identity(std::size_t order);
  // z + a2 z^2 + a3 z^3, zero-padded to `order` (order >= 3).
  static TruncatedSeries normalized(Complex a2, Complex a3,
                                    std::size_t order = 3);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  const Complex& operator[](std::size_t n) const { return coeffs_.at(n); }
  Complex& operator[](std::size_t n) { return coeffs_.at(n); }

  // Coefficient n, or zero past the truncation order.
  Complex coeff(std::size_t n) const noexcept {
    return n < coeffs_.size() ? coeffs_[n] : Complex{};
  }

  // f(0) = 0 and f'(0) = 1 within tol.
  bool is_normalized(double tol = 1e-12) const noexcept;

  TruncatedSeries truncated(std::size_t order) const;
  // Multiplication by z; raises the order by one.
  TruncatedSeries times_z() const;

 private:
  std::vector<Complex> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, Complex factor);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Quotient a/b. Accepts b(0) != 0, or a(0) = b(0) = 0 with b'(0) != 0, in
// which case the common factor z is cancelled and the result order drops by
// one. Throws ErrorCode::DivisionBySingular otherwise.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries derivative(const TruncatedSeries& a);
TruncatedSeries hadamard(const TruncatedSeries& a, const TruncatedSeries& b);

// outer(inner(z)); inner(0) must be exactly zero.
TruncatedSeries compose(const TruncatedSeries& outer,
                        const TruncatedSeries& inner);

// Compositional inverse of a normalized series.
TruncatedSeries revert(const TruncatedSeries& a);

bool approx_equal(const TruncatedSeries& a, const TruncatedSeries& b,
                  double tol = kSeriesTolerance);
double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b);

inline TruncatedSeries operator+(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return mul(a, b);
}
inline TruncatedSeries operator*(Complex k, const TruncatedSeries& a) {
  return scale(a, k);
}
inline TruncatedSeries operator/(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return div(a, b);
}

}  // namespace biprestar

#include <catch_amalgamated.hpp>

#include <cmath>

#include "biprestar/chebyshev.hpp"
#include "biprestar/error.hpp"
#include "biprestar/prestarlike.hpp"
#include "biprestar/series.hpp"
#include "test_support.hpp"

using namespace biprestar;
using biprestar::testing::Gen;

namespace {

bool throws_code(auto&& fn, ErrorCode code) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("add is coefficientwise up to the common order", "[series]") {
  CHECK(approx_equal(add({1.0, 1.0}, {1.0, -1.0}), {2.0, 0.0}, 0.0));
  CHECK(approx_equal(add({0.0, 1.0, 1.0}, TruncatedSeries(2)), {0.0, 1.0, 1.0}, 0.0));
  CHECK(approx_equal(add({0.0, 1.0, 2.0}, {0.0, 1.0, 3.0}), {0.0, 2.0, 5.0}, 0.0));
  CHECK(add(TruncatedSeries(5), TruncatedSeries(3)).order() == 3);
}

TEST_CASE("mul truncates the Cauchy product", "[series]") {
  CHECK(approx_equal(mul({1.0, 1.0, 0.0}, {1.0, -1.0, 0.0}), {1.0, 0.0, -1.0}, 0.0));
  CHECK(approx_equal(mul({0.0, 1.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}),
                     {0.0, 0.0, 1.0, 0.0}, 0.0));

  // Phi(z,t) times its denominator 1 - 2tz + z^2 leaves 1.
  for (double t : {-0.7, 0.1, 0.5, 0.93}) {
    const std::size_t order = 12;
    TruncatedSeries denom(order);
    denom[0] = 1.0;
    denom[1] = -2.0 * t;
    denom[2] = 1.0;
    const TruncatedSeries prod = mul(chebyshev::phi_series(t, order), denom);
    CHECK(approx_equal(prod, TruncatedSeries::constant(1.0, order), 1e-12));
  }
}

TEST_CASE("div handles unit and double-zero denominators", "[series]") {
  CHECK(approx_equal(div({0.0, 1.0}, {0.0, 1.0}), {1.0}, 0.0));
  CHECK(approx_equal(div({1.0, 0.0, 0.0, 0.0}, {1.0, -1.0, 0.0, 0.0}),
                     {1.0, 1.0, 1.0, 1.0}, 1e-15));

  // zF'/F for F = z + 2z^2: z(1 + 4z)/(z + 2z^2) = (1 + 4z)(1 - 2z + ...).
  const TruncatedSeries F{0.0, 1.0, 2.0};
  const TruncatedSeries q = div(derivative(F).times_z(), F);
  CHECK(q.order() == 1);
  CHECK(approx_equal(q, {1.0, 2.0}, 1e-15));
}

TEST_CASE("div rejects singular denominators", "[series][errors]") {
  CHECK(throws_code([] { div({1.0, 1.0}, {0.0, 1.0}); },
                    ErrorCode::DivisionBySingular));
  CHECK(throws_code([] { div({0.0, 1.0, 1.0}, {0.0, 0.0, 1.0}); },
                    ErrorCode::DivisionBySingular));
}

TEST_CASE("derivative is termwise", "[series]") {
  CHECK(approx_equal(derivative({0.0, 1.0, 1.0}), {1.0, 2.0}, 0.0));
  CHECK(approx_equal(derivative({5.0}), {0.0}, 0.0));
  CHECK(derivative(TruncatedSeries(4)).order() == 3);

  // dT_n/dt = n U_{n-1}(t) as polynomials in t.
  for (std::size_t n = 1; n <= 6; ++n) {
    const TruncatedSeries dt = derivative(chebyshev::t_polynomial(n));
    const TruncatedSeries un = scale(chebyshev::u_polynomial(n - 1),
                                     static_cast<double>(n));
    CHECK(approx_equal(dt, un, 1e-12));
  }
}

TEST_CASE("hadamard multiplies coefficientwise", "[series]") {
  CHECK(approx_equal(hadamard({0.0, 1.0, 2.0}, {0.0, 1.0, 3.0}), {0.0, 1.0, 6.0}, 0.0));
  const TruncatedSeries s = prestarlike::extremal_series(PrestarlikeOrder(0.3), 5);
  CHECK(approx_equal(hadamard(s, TruncatedSeries::identity(5)),
                     TruncatedSeries::identity(5), 0.0));

  const Complex a2{0.3, -0.2}, a3{-0.1, 0.4};
  const TruncatedSeries f = TruncatedSeries::normalized(a2, a3);
  const TruncatedSeries sf =
      hadamard(prestarlike::extremal_series(PrestarlikeOrder(0.0), 3), f);
  CHECK(approx_equal(sf, {0.0, 1.0, 2.0 * a2, 3.0 * a3}, 1e-15));
}

TEST_CASE("compose substitutes the inner series", "[series]") {
  CHECK(approx_equal(compose({1.0, 1.0, 0.0}, {0.0, 0.0, 1.0}), {1.0, 0.0, 1.0}, 0.0));
  CHECK(approx_equal(compose({3.0, 1.0, 2.0}, TruncatedSeries(2)),
                     TruncatedSeries::constant(3.0, 2), 0.0));

  // Phi(cz, t): direct substitution gives U_n(t) c^n.
  const double t = 0.37;
  const Complex c{0.4, -0.6};
  TruncatedSeries inner(4);
  inner[1] = c;
  const TruncatedSeries out = compose(chebyshev::phi_series(t, 4), inner);
  const double u[] = {1.0, 2 * t, 4 * t * t - 1, 8 * t * t * t - 4 * t,
                      16 * t * t * t * t - 12 * t * t + 1};
  for (std::size_t n = 0; n <= 4; ++n)
    CHECK(std::abs(out[n] - u[n] * std::pow(c, static_cast<int>(n))) < 1e-14);

  CHECK(throws_code([] { compose({1.0, 1.0}, {0.5, 1.0}); },
                    ErrorCode::CompositionConstantTerm));
}

TEST_CASE("revert inverts normalized series", "[series]") {
  CHECK(approx_equal(revert(TruncatedSeries::identity(5)),
                     TruncatedSeries::identity(5), 0.0));

  const TruncatedSeries r = revert(TruncatedSeries::normalized(0.1, 0.02));
  CHECK(approx_equal(r, {0.0, 1.0, -0.1, 0.0}, 1e-16));

  Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    const Complex a2 = gen.complex_in_box(1.0), a3 = gen.complex_in_box(1.0);
    const TruncatedSeries b = revert(TruncatedSeries::normalized(a2, a3));
    CHECK(std::abs(b[2] + a2) < 1e-14);
    CHECK(std::abs(b[3] - (2.0 * a2 * a2 - a3)) < 1e-12);
  }

  CHECK(throws_code([] { revert({0.0, 2.0, 1.0}); }, ErrorCode::NotNormalized));
  CHECK(throws_code([] { revert({1.0, 1.0, 1.0}); }, ErrorCode::NotNormalized));
}

TEST_CASE("series properties", "[series][property]") {
  Gen gen(2024);
  for (int i = 0; i < 1000; ++i) {
    const TruncatedSeries f = gen.normalized_series(kDefaultOrder);
    CHECK(approx_equal(compose(f, revert(f)), TruncatedSeries::identity(kDefaultOrder),
                       1e-10));

    const TruncatedSeries a = gen.series(kDefaultOrder);
    TruncatedSeries b = gen.series(kDefaultOrder);
    b[0] += 3.0;  // keep b(0) away from zero
    CHECK(approx_equal(mul(div(a, b), b), a, 1e-12));

    // Double-zero case: the product reproduces a through order N - 1.
    TruncatedSeries az = gen.series(kDefaultOrder), bz = gen.series(kDefaultOrder);
    az[0] = 0.0;
    bz[0] = 0.0;
    bz[1] += 3.0;
    CHECK(approx_equal(mul(div(az, bz), bz), az.truncated(kDefaultOrder - 1), 1e-12));

    const TruncatedSeries c = gen.series(kDefaultOrder);
    CHECK(approx_equal(hadamard(a, c), hadamard(c, a), 0.0));
    // Associativity is exact only where products round exactly: use
    // Gaussian integers.
    auto integral = [&gen](std::size_t order) {
      TruncatedSeries s(order);
      for (std::size_t n = 0; n <= order; ++n)
        s[n] = {std::round(gen.uniform(-50, 50)), std::round(gen.uniform(-50, 50))};
      return s;
    };
    const TruncatedSeries x = integral(kDefaultOrder), y = integral(kDefaultOrder),
                          w = integral(kDefaultOrder);
    CHECK(approx_equal(hadamard(hadamard(x, y), w), hadamard(x, hadamard(y, w)),
                       0.0));

    const TruncatedSeries lhs = derivative(mul(a, b));
    const TruncatedSeries rhs =
        add(mul(derivative(a), b), mul(a, derivative(b)));
    CHECK(approx_equal(lhs, rhs, 1e-12));
  }
}

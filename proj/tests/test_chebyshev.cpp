#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "biprestar/chebyshev.hpp"
#include "biprestar/error.hpp"

using namespace biprestar;
using namespace biprestar::chebyshev;

namespace {

std::vector<double> t_grid() {
  std::vector<double> grid;
  for (int i = 0; i < 50; ++i) grid.push_back(-0.99 + 1.98 * i / 49.0);
  return grid;
}

// Trigonometric definitions, independent of the recurrence.
double u_trig(std::size_t n, double t) {
  return std::sin((n + 1) * std::acos(t)) / std::sqrt(1.0 - t * t);
}
double t_trig(std::size_t n, double t) { return std::cos(n * std::acos(t)); }

}  // namespace

TEST_CASE("low-degree U_n match the explicit polynomials", "[chebyshev]") {
  for (double t : {-0.8, -0.25, 0.0, 0.3, 0.5, 0.9}) {
    CHECK(u_eval(0, t) == 1.0);
    CHECK(u_eval(1, t) == 2.0 * t);
    CHECK(u_eval(2, t) == Catch::Approx(4 * t * t - 1).margin(1e-15));
    CHECK(u_eval(3, t) == Catch::Approx(8 * t * t * t - 4 * t).margin(1e-15));
  }
  CHECK(u_eval(2, 0.5) == 0.0);
  CHECK(u_eval(3, 0.5) == -1.0);
}

TEST_CASE("T_n matches cos(n arccos t)", "[chebyshev]") {
  CHECK(t_eval(0, 0.3) == 1.0);
  for (double t : {-0.6, 0.2, 0.7})
    CHECK(t_eval(2, t) == Catch::Approx(2 * t * t - 1).margin(1e-15));
  CHECK(std::abs(t_eval(5, 0.7) - t_trig(5, 0.7)) < 1e-12);
}

TEST_CASE("arguments outside (-1, 1) are rejected", "[chebyshev][errors]") {
  for (double t : {1.0, -1.0, 1.5, std::nan("")}) {
    CHECK_THROWS_AS(u_eval(2, t), Error);
    CHECK_THROWS_AS(t_eval(2, t), Error);
    CHECK_THROWS_AS(phi_series(t, 3), Error);
    CHECK_THROWS_AS(t_generating_series(t, 3), Error);
  }
  try {
    u_eval(1, 1.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ArgOutOfRange);
  }
}

TEST_CASE("generating series", "[chebyshev]") {
  const double t = 0.37;
  const TruncatedSeries phi2 = phi_series(t, 2);
  CHECK(phi2.order() == 2);
  CHECK(phi2[0] == 1.0);
  CHECK(phi2[1] == 2 * t);
  CHECK(std::abs(phi2[2] - (4 * t * t - 1)) < 1e-15);

  const TruncatedSeries phi0 = phi_series(0.0, 4);
  const double expected[] = {1, 0, -1, 0, 1};
  for (std::size_t n = 0; n <= 4; ++n) CHECK(phi0[n] == expected[n]);

  const TruncatedSeries tg = t_generating_series(0.6, 3);
  CHECK(tg[0] == 1.0);
  CHECK(std::abs(tg[1] - 0.6) < 1e-15);
  const TruncatedSeries tg4 = t_generating_series(0.4, 10);
  for (std::size_t n = 0; n <= 10; ++n)
    CHECK(std::abs(tg4[n] - t_eval(n, 0.4)) < 1e-12);
}

TEST_CASE("Chebyshev identities over a grid", "[chebyshev][property]") {
  for (double t : t_grid()) {
    const TruncatedSeries phi = phi_series(t, 20);
    for (std::size_t n = 0; n <= 20; ++n) {
      CHECK(std::abs(phi[n] - u_eval(n, t)) <= 1e-12);
      CHECK(std::abs(u_eval(n, t) - u_trig(n, t)) <= 1e-10);
      CHECK(std::abs(t_eval(n, t) - t_trig(n, t)) <= 1e-10);
    }
    for (std::size_t n = 2; n <= 20; ++n) {
      CHECK(u_eval(n, t) == 2 * t * u_eval(n - 1, t) - u_eval(n - 2, t));
      CHECK(std::abs(t_eval(n, t) - (u_eval(n, t) - t * u_eval(n - 1, t))) <= 1e-11);
      CHECK(std::abs(2 * t_eval(n, t) - (u_eval(n, t) - u_eval(n - 2, t))) <= 1e-11);
    }
  }
}

TEST_CASE("polynomial coefficients evaluate to the recurrence", "[chebyshev]") {
  for (std::size_t n = 0; n <= 8; ++n) {
    const TruncatedSeries tp = t_polynomial(n), up = u_polynomial(n);
    for (double t : {-0.5, 0.1, 0.8}) {
      Complex tv{}, uv{};
      for (std::size_t k = n + 1; k-- > 0;) {
        tv = tv * t + tp[k];
        uv = uv * t + up[k];
      }
      CHECK(std::abs(tv - t_eval(n, t)) < 1e-12);
      CHECK(std::abs(uv - u_eval(n, t)) < 1e-12);
    }
  }
}

#include <catch_amalgamated.hpp>

#include <cmath>

#include "biprestar/error.hpp"
#include "biprestar/prestarlike.hpp"
#include "test_support.hpp"

using namespace biprestar;
using namespace biprestar::prestarlike;
using biprestar::testing::Gen;

namespace {

// Direct product prod_{k=2}^n (k - 2 alpha) / (n-1)!.
double psi_oracle(int n, double alpha) {
  double num = 1.0, fact = 1.0;
  for (int k = 2; k <= n; ++k) num *= k - 2.0 * alpha;
  for (int k = 2; k <= n - 1; ++k) fact *= k;
  return num / fact;
}

}  // namespace

TEST_CASE("strong parameter types enforce their ranges", "[prestarlike][errors]") {
  CHECK_NOTHROW(PrestarlikeOrder(0.0));
  CHECK_THROWS_AS(PrestarlikeOrder(1.0), Error);
  CHECK_THROWS_AS(PrestarlikeOrder(-0.1), Error);
  CHECK_NOTHROW(OperatorWeight(1.0));
  CHECK_THROWS_AS(OperatorWeight(1.5), Error);
}

TEST_CASE("psi values", "[prestarlike]") {
  CHECK(psi(2, PrestarlikeOrder(0.0)) == 2.0);
  CHECK(psi(3, PrestarlikeOrder(0.0)) == 3.0);
  for (std::size_t n = 2; n <= 10; ++n) CHECK(psi(n, PrestarlikeOrder(0.5)) == 1.0);
  for (double alpha : {0.0, 0.1, 0.37, 0.75, 0.99}) {
    CHECK(psi(2, PrestarlikeOrder(alpha)) == Catch::Approx(2 - 2 * alpha).epsilon(1e-15));
    for (int n = 2; n <= 12; ++n)
      CHECK(psi(n, PrestarlikeOrder(alpha)) ==
            Catch::Approx(psi_oracle(n, alpha)).epsilon(1e-13));
  }
  try {
    psi(1, PrestarlikeOrder(0.2));
    FAIL("expected BadIndex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadIndex);
  }
}

TEST_CASE("extremal series", "[prestarlike]") {
  CHECK(approx_equal(extremal_series(PrestarlikeOrder(0.5), 4),
                     {0.0, 1.0, 1.0, 1.0, 1.0}, 0.0));
  CHECK(approx_equal(extremal_series(PrestarlikeOrder(0.0), 3),
                     {0.0, 1.0, 2.0, 3.0}, 0.0));
  CHECK(extremal_series(PrestarlikeOrder(0.8), 5)[1] == 1.0);
}

TEST_CASE("transform_f is the Hadamard product with s", "[prestarlike]") {
  CHECK(approx_equal(transform_f(TruncatedSeries::identity(3), PrestarlikeOrder(0.3)),
                     TruncatedSeries::identity(3), 0.0));
  const TruncatedSeries f = TruncatedSeries::normalized({0.2, 0.1}, {-0.3, 0.5});
  CHECK(approx_equal(transform_f(f, PrestarlikeOrder(0.5)), f, 0.0));
  CHECK(approx_equal(transform_f({0.0, 1.0, 1.0}, PrestarlikeOrder(0.0)),
                     {0.0, 1.0, 2.0}, 0.0));
  CHECK_THROWS_AS(transform_f({0.0, 2.0, 1.0}, PrestarlikeOrder(0.0)), Error);

  // Dividing out Psi_n recovers f.
  Gen gen(5);
  const TruncatedSeries g = gen.normalized_series(5);
  const PrestarlikeOrder alpha(0.3);
  const TruncatedSeries F = transform_f(g, alpha);
  for (std::size_t n = 2; n <= 5; ++n)
    CHECK(std::abs(F[n] / psi(n, alpha) - g[n]) < 1e-15);
}

TEST_CASE("transform_g is s convolved with the inverse", "[prestarlike]") {
  CHECK(approx_equal(transform_g(0.0, 0.0, PrestarlikeOrder(0.4), 3),
                     TruncatedSeries::identity(3), 0.0));
  const Complex a2{0.3, 0.1}, a3{-0.2, 0.25};
  CHECK(approx_equal(transform_g(a2, a3, PrestarlikeOrder(0.5), 3),
                     {0.0, 1.0, -a2, 2.0 * a2 * a2 - a3}, 1e-15));
  CHECK_THROWS_AS(transform_g(a2, a3, PrestarlikeOrder(0.5), 2), Error);

  Gen gen(17);
  for (int i = 0; i < 200; ++i) {
    const Complex b2 = gen.complex_in_box(1.0), b3 = gen.complex_in_box(1.0);
    const PrestarlikeOrder alpha(gen.uniform(0.0, 0.99));
    for (std::size_t order : {3u, 5u}) {
      const TruncatedSeries oracle =
          hadamard(extremal_series(alpha, order),
                   revert(TruncatedSeries::normalized(b2, b3, order)));
      CHECK(approx_equal(transform_g(b2, b3, alpha, order), oracle, 1e-12));
    }
  }
}

TEST_CASE("operator L on simple inputs", "[prestarlike]") {
  for (double lambda : {0.0, 0.4, 1.0}) {
    const TruncatedSeries L = operator_l(TruncatedSeries::identity(4), OperatorWeight(lambda));
    CHECK(approx_equal(L, TruncatedSeries::constant(1.0, 3), 1e-15));
  }
  // lambda = 0, F = z + 2 a2 z^2: zF'/F = (1 + 4 a2 z)/(1 + 2 a2 z) = 1 + 2 a2 z + ...
  const Complex a2{0.35, -0.15};
  const TruncatedSeries L = operator_l({0.0, 1.0, 2.0 * a2}, OperatorWeight(0.0));
  CHECK(std::abs(L[1] - 2.0 * a2) < 1e-15);

  CHECK_THROWS_AS(operator_l({0.0, 0.5, 1.0}, OperatorWeight(0.0)), Error);
}

TEST_CASE("operator L coefficient relations", "[prestarlike][property]") {
  Gen gen(99);
  for (int i = 0; i < 500; ++i) {
    const double lambda = gen.uniform(0.0, 1.0);
    const PrestarlikeOrder alpha(gen.uniform(0.0, 0.99));
    const Complex a2 = gen.complex_in_box(0.8), a3 = gen.complex_in_box(0.8);
    const double p2 = psi(2, alpha), p3 = psi(3, alpha);
    const OperatorWeight w(lambda);

    const TruncatedSeries F =
        transform_f(TruncatedSeries::normalized(a2, a3, 5), alpha);
    const TruncatedSeries L = operator_l(F, w);
    CHECK(std::abs(L[0] - 1.0) < 1e-12);
    CHECK(std::abs(L[1] - (1 + lambda) * p2 * a2) < 1e-10);
    CHECK(std::abs(L[2] - (2 * (1 + 2 * lambda) * p3 * a3 -
                           (1 + 3 * lambda) * p2 * p2 * a2 * a2)) < 1e-10);

    // Inverse side.
    const TruncatedSeries LG = operator_l(transform_g(a2, a3, alpha, 5), w);
    CHECK(std::abs(LG[1] + (1 + lambda) * p2 * a2) < 1e-10);
    CHECK(std::abs(LG[2] - ((4 * (1 + 2 * lambda) * p3 - (1 + 3 * lambda) * p2 * p2) *
                                a2 * a2 -
                            2 * (1 + 2 * lambda) * p3 * a3)) < 1e-10);

    // Convex combination in lambda.
    const TruncatedSeries L0 = operator_l(F, OperatorWeight(0.0));
    const TruncatedSeries L1 = operator_l(F, OperatorWeight(1.0));
    CHECK(approx_equal(L, add(scale(L0, 1 - lambda), scale(L1, lambda)), 1e-12));
  }
}

TEST_CASE("operator L for real positive coefficients", "[prestarlike][property]") {
  Gen gen(7);
  for (int i = 0; i < 200; ++i) {
    const double lambda = gen.uniform(0, 1);
    const PrestarlikeOrder alpha(gen.uniform(0, 0.99));
    const double a2 = gen.uniform(0, 1), a3 = gen.uniform(0, 1);
    const TruncatedSeries L = operator_l(
        transform_f(TruncatedSeries::normalized(a2, a3), alpha), OperatorWeight(lambda));
    CHECK(std::abs(L[1] - (1 + lambda) * psi(2, alpha) * a2) < 1e-10);
  }
}

#include "biprestar/bounds.hpp"

#include <cmath>
#include <sstream>

#include "biprestar/error.hpp"

namespace biprestar {

ClassParams::ClassParams(double lambda, double alpha, double t)
    : lambda_(lambda), alpha_(alpha), t_(t) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(ErrorCode::RangeError, "lambda must lie in [0, 1]");
  }
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::RangeError, "alpha must lie in [0, 1)");
  }
  if (!(t > 0.0 && t < 1.0)) {
    throw Error(ErrorCode::RangeError, "t must lie in (0, 1)");
  }
}

namespace bounds {

const char* to_string(FeketeBranch branch) noexcept {
  return branch == FeketeBranch::Flat ? "flat" : "slope";
}

namespace {

// Radicand (lambda^2+5 lambda+2) Psi_2^2 - 2(1+2 lambda) Psi_3.
double exclusion_radicand(double lambda, double psi2, double psi3) {
  return (lambda * lambda + 5.0 * lambda + 2.0) * psi2 * psi2 -
         2.0 * (1.0 + 2.0 * lambda) * psi3;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Ties within a few ulps of the cutoff resolve to the flat branch.
constexpr double kBranchTieTolerance = 1e-12;

}  // namespace

ClassConstants constants(const ClassParams& p) {
  const double lambda = p.lambda();
  const double t = p.t();
  ClassConstants c;
  c.psi2 = prestarlike::psi(2, p.order());
  c.psi3 = prestarlike::psi(3, p.order());
  c.u1 = 2.0 * t;
  c.u2 = 4.0 * t * t - 1.0;
  c.first_order = (1.0 + lambda) * c.psi2;
  c.third_weight = 2.0 * (1.0 + 2.0 * lambda) * c.psi3;
  c.square_weight = (1.0 + 3.0 * lambda) * c.psi2 * c.psi2;
  c.denominator = -exclusion_radicand(lambda, c.psi2, c.psi3) * 4.0 * t * t +
                  c.first_order * c.first_order;
  return c;
}

std::optional<double> exclusion_t(OperatorWeight lambda,
                                  PrestarlikeOrder alpha) {
  const double psi2 = prestarlike::psi(2, alpha);
  const double psi3 = prestarlike::psi(3, alpha);
  const double radicand = exclusion_radicand(lambda.value(), psi2, psi3);
  if (!(radicand > 0.0)) return std::nullopt;
  return (1.0 + lambda.value()) * psi2 / (2.0 * std::sqrt(radicand));
}

void require_nondegenerate(const ClassParams& p) {
  const double d = constants(p).denominator;
  if (std::abs(d) < kDegeneracyTolerance) {
    const auto excl = exclusion_t(p.weight(), p.order());
    std::string msg = "degenerate parameters: |a2| denominator vanishes";
    if (excl) msg += " (excluded t = " + format_double(*excl) + ")";
    throw DegenerateDenominator(msg, d, excl);
  }
}

double a2_bound(const ClassParams& p) {
  require_nondegenerate(p);
  const double t = p.t();
  return 2.0 * t * std::sqrt(2.0 * t) /
         std::sqrt(std::abs(constants(p).denominator));
}

double a3_bound(const ClassParams& p) {
  const ClassConstants c = constants(p);
  const double t = p.t();
  return 4.0 * t * t / (c.first_order * c.first_order) +
         2.0 * t / c.third_weight;
}

double h_mu(const ClassParams& p, double mu) {
  require_nondegenerate(p);
  const ClassConstants c = constants(p);
  const double bracket = (c.third_weight - c.square_weight) * c.u1 * c.u1 -
                         c.first_order * c.first_order * c.u2;
  return (1.0 - mu) * c.u1 * c.u1 / (2.0 * bracket);
}

double fekete_threshold(const ClassParams& p) {
  const ClassConstants c = constants(p);
  const double t = p.t();
  const double lambda = p.lambda();
  const double numer =
      c.first_order * c.first_order / (4.0 * t * t) + c.third_weight -
      (lambda * lambda + 5.0 * lambda + 2.0) * c.psi2 * c.psi2;
  return std::abs(numer) / c.third_weight;
}

FeketeSzegoReport fekete_szego_bound(const ClassParams& p, double mu) {
  require_nondegenerate(p);
  const ClassConstants c = constants(p);
  const double t = p.t();

  FeketeSzegoReport r;
  r.mu = mu;
  r.h_mu = h_mu(p, mu);
  r.threshold = fekete_threshold(p);

  // Proof form: compare |h(mu)| with 1/(4(1+2 lambda) Psi_3).
  const double cutoff = 1.0 / (2.0 * c.third_weight);
  const double h_abs = std::abs(r.h_mu);
  const bool flat = h_abs <= cutoff * (1.0 + kBranchTieTolerance);

  // Statement form must agree except on ties.
  const double dist = std::abs(mu - 1.0);
  const bool flat_closed_form =
      dist <= r.threshold * (1.0 + kBranchTieTolerance);
  if (flat != flat_closed_form) {
    const bool near_tie =
        std::abs(dist - r.threshold) <= 1e-9 * std::max(1.0, r.threshold);
    if (!near_tie) {
      throw Error(ErrorCode::InternalConsistency,
                  "Fekete-Szego branch selectors disagree at mu = " +
                      format_double(mu));
    }
  }

  r.branch = flat ? FeketeBranch::Flat : FeketeBranch::Slope;
  r.value = flat ? t / ((1.0 + 2.0 * p.lambda()) * c.psi3)
                 : 8.0 * std::abs(1.0 - mu) * t * t * t /
                       std::abs(c.denominator);
  return r;
}

BoundReport bound_report(const ClassParams& p) {
  BoundReport r;
  const ClassConstants c = constants(p);
  r.denominator = c.denominator;
  r.a3_bound = a3_bound(p);
  r.exclusion_t = exclusion_t(p.weight(), p.order());
  r.degenerate = std::abs(c.denominator) < kDegeneracyTolerance;
  if (!r.degenerate) r.a2_bound = a2_bound(p);
  return r;
}

std::string class_name(const ClassParams& p) {
  std::ostringstream os;
  os.precision(17);
  if (p.lambda() == 0.0 && p.alpha() == 0.5) {
    os << "S*_Sigma(1/2, Phi(z,t))";
  } else if (p.lambda() == 0.0) {
    os << "PS*_Sigma(" << p.alpha() << ", Phi(z,t))";
  } else if (p.lambda() == 1.0) {
    os << "K*_Sigma(" << p.alpha() << ", Phi(z,t))";
  } else {
    os << "R_Sigma(" << p.lambda() << ", " << p.alpha() << ", Phi(z,t))";
  }
  return os.str();
}

}  // namespace bounds
}  // namespace biprestar

#pragma once

// Closed-form coefficient bounds for the bi-prestarlike class
// R_Sigma(lambda, alpha, Phi(z,t)):
//
//   |a2| <= 2t sqrt(2t) / sqrt|D|,
//   |a3| <= 4t^2 / ((1+lambda)^2 Psi_2^2) + t / ((1+2 lambda) Psi_3),
//
// with D = [2(1+2 lambda) Psi_3 - (lambda^2+5 lambda+2) Psi_2^2] 4t^2
//          + (1+lambda)^2 Psi_2^2,
// and the Fekete-Szego bound on |a3 - mu a2^2| for real mu.

#include <optional>
#include <string>

#include "biprestar/prestarlike.hpp"

namespace biprestar {

// (lambda, alpha, t) with lambda in [0,1], alpha in [0,1), t in (0,1).
class ClassParams {
 public:
  ClassParams(double lambda, double alpha, double t);

  double lambda() const noexcept { return lambda_; }
  double alpha() const noexcept { return alpha_; }
  double t() const noexcept { return t_; }

  OperatorWeight weight() const { return OperatorWeight(lambda_); }
  PrestarlikeOrder order() const { return PrestarlikeOrder(alpha_); }

  bool operator==(const ClassParams&) const = default;

 private:
  double lambda_;
  double alpha_;
  double t_;
};

namespace bounds {

inline constexpr double kDegeneracyTolerance = 1e-12;

// Quantities shared by every bound at one parameter point.
struct ClassConstants {
  double psi2 = 0;
  double psi3 = 0;
  double u1 = 0;  // U_1(t) = 2t
  double u2 = 0;  // U_2(t) = 4t^2 - 1
  // (1 + lambda) Psi_2: coefficient of a2 in the z-term of L[F].
  double first_order = 0;
  // 2 (1 + 2 lambda) Psi_3: coefficient of a3 in the z^2-term of L[F].
  double third_weight = 0;
  // (1 + 3 lambda) Psi_2^2: coefficient of a2^2 in the z^2-term of L[F].
  double square_weight = 0;
  // D above (signed). Equals (B - C) U_1^2 - A^2 U_2 with A, B, C the three
  // weights above.
  double denominator = 0;
};

ClassConstants constants(const ClassParams& p);

enum class FeketeBranch { Flat, Slope };
const char* to_string(FeketeBranch branch) noexcept;

struct BoundReport {
  std::optional<double> a2_bound;  // empty when degenerate
  double a3_bound = 0;
  std::optional<double> exclusion_t;
  bool degenerate = false;
  double denominator = 0;
};

struct FeketeSzegoReport {
  double mu = 0;
  double value = 0;
  FeketeBranch branch = FeketeBranch::Flat;
  double h_mu = 0;
  double threshold = 0;  // cutoff on |mu - 1|
};

// The t at which D vanishes for (lambda, alpha), present only when
// (lambda^2+5 lambda+2) Psi_2^2 - 2(1+2 lambda) Psi_3 > 0.
std::optional<double> exclusion_t(OperatorWeight lambda,
                                  PrestarlikeOrder alpha);

// Throws DegenerateDenominator when |D| < kDegeneracyTolerance.
void require_nondegenerate(const ClassParams& p);

double a2_bound(const ClassParams& p);
double a3_bound(const ClassParams& p);
double h_mu(const ClassParams& p, double mu);
// Closed-form cutoff on |mu - 1| separating the flat and slope branches.
double fekete_threshold(const ClassParams& p);
FeketeSzegoReport fekete_szego_bound(const ClassParams& p, double mu);

// Never throws on degeneracy; sets the flag instead.
BoundReport bound_report(const ClassParams& p);

// Human-readable class name resolved from (lambda, alpha).
std::string class_name(const ClassParams& p);

}  // namespace bounds
}  // namespace biprestar

#pragma once

// Empirical certification of the coefficient bounds.
//
// A class member satisfies L[F] = Phi(u(z), t) and L[G] = Phi(v(w), t) for
// Schwarz functions u = c1 z + c2 z^2 + ..., v = d1 w + d2 w^2 + ....
// Matching coefficients through second order gives four relations in
// (a2, a3); the verifier samples admissible (c1, c2, d1, d2), reconstructs
// the coefficients the way the bound derivation does, and compares them
// with the closed forms in bounds.hpp.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biprestar/bounds.hpp"
#include "biprestar/series.hpp"

namespace biprestar::verifier {

// paper:      |c_j|, |d_j| <= 1 and d1 = -c1.
// pick:       additionally |c2| <= 1 - |c1|^2 and |d2| <= 1 - |d1|^2.
// consistent: pick constraints, with d2 fixed by (c1, c2) so that all four
//             coefficient relations hold simultaneously.
enum class SampleMode { Paper, Pick, Consistent };

const char* to_string(SampleMode mode) noexcept;
SampleMode parse_mode(const std::string& name);

struct SchwarzSample {
  Complex c1;
  Complex c2;
  Complex d1;
  Complex d2;
  SampleMode mode = SampleMode::Paper;
};

struct ReconstructedCoeffs {
  Complex a2_sq;  // from the summed second-order relations
  Complex a3;     // a2^2 eliminated through 2(1+lambda)^2 Psi_2^2 a2^2 = U_1^2 (c1^2 + d1^2)
  Complex a2;     // principal square root of a2_sq
  // a2_sq + U_1 (c2 - d2) / (4(1+2 lambda) Psi_3): a3 before that
  // elimination. The Fekete-Szego functional is bounded in this form.
  Complex a3_difference;
};

inline constexpr double kAdmissibilityTolerance = 1e-12;
inline constexpr double kViolationTolerance = 1e-9;
inline constexpr double kProofRelationTolerance = 1e-9;
inline constexpr std::size_t kMaxRecordedViolations = 64;

// d2 forced by the coefficient relations for given (c1, c2), d1 = -c1.
Complex consistent_d2(Complex c1, Complex c2, const ClassParams& p);

// Constraint check for the sample's own mode. Consistent mode needs params.
bool is_admissible(const SchwarzSample& s,
                   const std::optional<ClassParams>& p = std::nullopt,
                   double tol = kAdmissibilityTolerance);

// Throws ErrorCode::InconsistentSample unless d1 = -c1 (within tol).
void require_antipodal(const SchwarzSample& s,
                       double tol = kAdmissibilityTolerance);

// Deterministic sample stream: a fixed set of boundary witnesses with
// unit-modulus or zero entries, followed by random samples. Element i of the
// stream depends only on (mode, seed, i, params).
class SchwarzSampler {
 public:
  SchwarzSampler(SampleMode mode, std::uint64_t seed,
                 std::optional<ClassParams> params = std::nullopt);

  SampleMode mode() const noexcept { return mode_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t boundary_count() const noexcept { return boundary_.size(); }

  SchwarzSample at(std::uint64_t index) const;

 private:
  SchwarzSample random_sample(std::uint64_t index) const;

  SampleMode mode_;
  std::uint64_t seed_;
  std::optional<ClassParams> params_;
  std::vector<SchwarzSample> boundary_;
};

// Boundary witnesses followed by `count` random samples.
std::vector<SchwarzSample> sample_schwarz(
    SampleMode mode, std::uint64_t seed, std::size_t count,
    const std::optional<ClassParams>& params = std::nullopt);

ReconstructedCoeffs reconstruct(const SchwarzSample& s, const ClassParams& p);

// U_1 [(h(mu) + k) c2 + (h(mu) - k) d2], k = 1/(4(1+2 lambda) Psi_3).
Complex fekete_from_sample(const SchwarzSample& s, const ClassParams& p,
                           double mu);

// Largest coefficient mismatch through second order between L[F], L[G] and
// Phi(u), Phi(v), with F = s * f, G = s * f^{-1}, f = z + a2 z^2 + a3 z^3.
// The sign of a2 is taken to match (1+lambda) Psi_2 a2 = U_1 c1.
double proof_relation_residual(const SchwarzSample& s, const ClassParams& p,
                               const ReconstructedCoeffs& coeffs,
                               std::size_t order = 3);
bool proof_relation_check(const SchwarzSample& s, const ClassParams& p,
                          std::size_t order = 3);
bool proof_relation_check(const SchwarzSample& s, const ClassParams& p,
                          const ReconstructedCoeffs& coeffs,
                          std::size_t order = 3);

enum class Functional { A2, A3, FeketeSzego };
const char* to_string(Functional f) noexcept;

struct Violation {
  std::uint64_t index = 0;
  SchwarzSample sample;
  Functional functional = Functional::A2;
  double observed = 0;
  double bound = 0;
};

struct Extremum {
  double ratio = 0;  // observed / bound
  double observed = 0;
  std::uint64_t index = 0;
  SchwarzSample sample;
};

struct VerifyReport {
  explicit VerifyReport(const ClassParams& p) : params(p) {}

  ClassParams params;
  std::optional<double> mu;
  SampleMode mode = SampleMode::Paper;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  double a2_bound = 0;
  double a3_bound = 0;
  std::optional<double> fekete_bound;
  Extremum a2;
  Extremum a3;
  std::optional<Extremum> fekete;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;  // first kMaxRecordedViolations by index

  double max_ratio_a2() const noexcept { return a2.ratio; }
  double max_ratio_a3() const noexcept { return a3.ratio; }
  double max_ratio_fs() const noexcept { return fekete ? fekete->ratio : 0.0; }
  bool certified() const noexcept { return violation_count == 0; }
};

// Combines two partial reports over disjoint index ranges. Associative and
// commutative: maxima break ties by the smaller index.
VerifyReport merge(VerifyReport a, const VerifyReport& b);

struct VerifyOptions {
  unsigned workers = 1;
  // Multiplies the |a2| bound; values below 1 serve as a harness self-test.
  double a2_bound_scale = 1.0;
};

VerifyReport verify_bounds(const ClassParams& p, std::optional<double> mu,
                           SampleMode mode, std::uint64_t seed,
                           std::size_t count, const VerifyOptions& options = {});

// Random restarts plus coordinatewise refinement in polar coordinates over
// paper-mode samples, maximizing each functional separately. `budget` is the
// number of random restarts per functional.
VerifyReport tightness_search(const ClassParams& p, std::optional<double> mu,
                              std::size_t budget, std::uint64_t seed);

}  // namespace biprestar::verifier

#include "biprestar/verifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <thread>

#include "biprestar/chebyshev.hpp"
#include "biprestar/error.hpp"
#include "biprestar/prestarlike.hpp"
#include "biprestar/rng.hpp"

namespace biprestar::verifier {

const char* to_string(SampleMode mode) noexcept {
  switch (mode) {
    case SampleMode::Paper: return "paper";
    case SampleMode::Pick: return "pick";
    case SampleMode::Consistent: return "consistent";
  }
  return "unknown";
}

SampleMode parse_mode(const std::string& name) {
  if (name == "paper") return SampleMode::Paper;
  if (name == "pick") return SampleMode::Pick;
  if (name == "consistent") return SampleMode::Consistent;
  throw Error(ErrorCode::RangeError, "unknown sampling mode '" + name + "'");
}

const char* to_string(Functional f) noexcept {
  switch (f) {
    case Functional::A2: return "a2";
    case Functional::A3: return "a3";
    case Functional::FeketeSzego: return "fekete";
  }
  return "unknown";
}

Complex consistent_d2(Complex c1, Complex c2, const ClassParams& p) {
  const bounds::ClassConstants k = bounds::constants(p);
  const Complex a2 = k.u1 * c1 / k.first_order;
  const Complex a2_sq = a2 * a2;
  const Complex a3 =
      (k.u1 * c2 + k.u2 * c1 * c1 + k.square_weight * a2_sq) / k.third_weight;
  const Complex d1 = -c1;
  return ((2.0 * k.third_weight - k.square_weight) * a2_sq -
          k.third_weight * a3 - k.u2 * d1 * d1) /
         k.u1;
}

void require_antipodal(const SchwarzSample& s, double tol) {
  if (std::abs(s.c1 + s.d1) > tol) {
    throw Error(ErrorCode::InconsistentSample,
                "Schwarz sample violates c1 = -d1");
  }
}

bool is_admissible(const SchwarzSample& s,
                   const std::optional<ClassParams>& p, double tol) {
  if (std::abs(s.c1 + s.d1) > tol) return false;
  for (const Complex& c : {s.c1, s.c2, s.d1, s.d2}) {
    if (std::abs(c) > 1.0 + tol) return false;
  }
  if (s.mode == SampleMode::Paper) return true;
  if (std::abs(s.c2) > 1.0 - std::norm(s.c1) + tol) return false;
  if (std::abs(s.d2) > 1.0 - std::norm(s.d1) + tol) return false;
  if (s.mode == SampleMode::Pick) return true;
  if (!p) return false;
  return std::abs(s.d2 - consistent_d2(s.c1, s.c2, *p)) <= 1e-10;
}

namespace {

constexpr std::array<Complex, 5> kCorners = {
    Complex{0, 0}, Complex{1, 0}, Complex{-1, 0}, Complex{0, 1},
    Complex{0, -1}};

// Consistent-mode rejection attempts before falling back to c1 = 0.
constexpr int kMaxConsistentAttempts = 64;

Complex random_in_disk(CounterRng& rng, double radius) {
  if (radius <= 0.0) return {};
  const double u = rng.uniform();
  const double theta = 2.0 * std::numbers::pi * rng.uniform();
  // A quarter of the draws land on the boundary circle.
  const double r = u < 0.25 ? radius : radius * std::sqrt((u - 0.25) / 0.75);
  return std::polar(r, theta);
}

double pick_cap(Complex c1) {
  const double cap = 1.0 - std::norm(c1);
  return cap < kAdmissibilityTolerance ? 0.0 : cap;
}

}  // namespace

SchwarzSampler::SchwarzSampler(SampleMode mode, std::uint64_t seed,
                               std::optional<ClassParams> params)
    : mode_(mode), seed_(seed), params_(params) {
  if (mode == SampleMode::Consistent && !params) {
    throw Error(ErrorCode::RangeError,
                "consistent sampling needs class parameters");
  }
  for (const Complex& c1 : kCorners) {
    for (const Complex& c2 : kCorners) {
      if (mode == SampleMode::Consistent) {
        SchwarzSample s{c1, c2, -c1, consistent_d2(c1, c2, *params_), mode};
        if (is_admissible(s, params_)) boundary_.push_back(s);
        continue;
      }
      for (const Complex& d2 : kCorners) {
        SchwarzSample s{c1, c2, -c1, d2, mode};
        if (is_admissible(s, params_)) boundary_.push_back(s);
      }
    }
  }
}

SchwarzSample SchwarzSampler::at(std::uint64_t index) const {
  if (index < boundary_.size()) return boundary_[index];
  return random_sample(index);
}

SchwarzSample SchwarzSampler::random_sample(std::uint64_t index) const {
  CounterRng rng(seed_, index);
  SchwarzSample s;
  s.mode = mode_;
  switch (mode_) {
    case SampleMode::Paper:
      s.c1 = random_in_disk(rng, 1.0);
      s.c2 = random_in_disk(rng, 1.0);
      s.d2 = random_in_disk(rng, 1.0);
      break;
    case SampleMode::Pick:
      s.c1 = random_in_disk(rng, 1.0);
      s.c2 = random_in_disk(rng, pick_cap(s.c1));
      s.d2 = random_in_disk(rng, pick_cap(s.c1));
      break;
    case SampleMode::Consistent: {
      bool accepted = false;
      for (int attempt = 0; attempt < kMaxConsistentAttempts; ++attempt) {
        s.c1 = random_in_disk(rng, 1.0);
        s.c2 = random_in_disk(rng, pick_cap(s.c1));
        s.d2 = consistent_d2(s.c1, s.c2, *params_);
        if (std::abs(s.d2) <= pick_cap(s.c1)) {
          accepted = true;
          break;
        }
      }
      if (!accepted) {
        // With c1 = 0 the relations force d2 = -c2, always admissible.
        s.c1 = 0.0;
        s.d2 = consistent_d2(s.c1, s.c2, *params_);
      }
      break;
    }
  }
  s.d1 = -s.c1;
  return s;
}

std::vector<SchwarzSample> sample_schwarz(
    SampleMode mode, std::uint64_t seed, std::size_t count,
    const std::optional<ClassParams>& params) {
  const SchwarzSampler sampler(mode, seed, params);
  std::vector<SchwarzSample> out;
  const std::uint64_t total = sampler.boundary_count() + count;
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(sampler.at(i));
  return out;
}

namespace {

ReconstructedCoeffs reconstruct_with(const SchwarzSample& s,
                                     const bounds::ClassConstants& k) {
  ReconstructedCoeffs r;
  const double u1 = k.u1;
  r.a2_sq = u1 * u1 * u1 * (s.c2 + s.d2) / (2.0 * k.denominator);
  r.a3 = u1 * u1 * (s.c1 * s.c1 + s.d1 * s.d1) /
             (2.0 * k.first_order * k.first_order) +
         u1 * (s.c2 - s.d2) / (2.0 * k.third_weight);
  r.a3_difference = r.a2_sq + u1 * (s.c2 - s.d2) / (2.0 * k.third_weight);
  r.a2 = std::sqrt(r.a2_sq);
  return r;
}

}  // namespace

ReconstructedCoeffs reconstruct(const SchwarzSample& s, const ClassParams& p) {
  require_antipodal(s);
  bounds::require_nondegenerate(p);
  return reconstruct_with(s, bounds::constants(p));
}

Complex fekete_from_sample(const SchwarzSample& s, const ClassParams& p,
                           double mu) {
  const double h = bounds::h_mu(p, mu);
  const double k = 1.0 / (2.0 * bounds::constants(p).third_weight);
  return 2.0 * p.t() * ((h + k) * s.c2 + (h - k) * s.d2);
}

double proof_relation_residual(const SchwarzSample& s, const ClassParams& p,
                               const ReconstructedCoeffs& coeffs,
                               std::size_t order) {
  order = std::max<std::size_t>(order, 3);
  const bounds::ClassConstants k = bounds::constants(p);

  // Choose the root of a2_sq matching the first-order relation.
  const Complex target = k.u1 * s.c1 / k.first_order;
  const Complex a2 = std::abs(coeffs.a2 - target) <= std::abs(coeffs.a2 + target)
                         ? coeffs.a2
                         : -coeffs.a2;

  const TruncatedSeries f = TruncatedSeries::normalized(a2, coeffs.a3, order);
  const TruncatedSeries F = prestarlike::transform_f(f, p.order());
  const TruncatedSeries G =
      prestarlike::transform_g(a2, coeffs.a3, p.order(), order);
  const TruncatedSeries lhs_f = prestarlike::operator_l(F, p.weight());
  const TruncatedSeries lhs_g = prestarlike::operator_l(G, p.weight());

  const std::size_t rhs_order = order - 1;
  const TruncatedSeries phi = chebyshev::phi_series(p.t(), rhs_order);
  TruncatedSeries u(rhs_order), v(rhs_order);
  u[1] = s.c1;
  u[2] = s.c2;
  v[1] = s.d1;
  v[2] = s.d2;
  const TruncatedSeries rhs_f = compose(phi, u);
  const TruncatedSeries rhs_g = compose(phi, v);

  double worst = 0.0;
  for (std::size_t n = 0; n <= 2; ++n) {
    worst = std::max(worst, std::abs(lhs_f[n] - rhs_f[n]));
    worst = std::max(worst, std::abs(lhs_g[n] - rhs_g[n]));
  }
  return worst;
}

bool proof_relation_check(const SchwarzSample& s, const ClassParams& p,
                          const ReconstructedCoeffs& coeffs,
                          std::size_t order) {
  return proof_relation_residual(s, p, coeffs, order) <=
         kProofRelationTolerance;
}

bool proof_relation_check(const SchwarzSample& s, const ClassParams& p,
                          std::size_t order) {
  return proof_relation_check(s, p, reconstruct(s, p), order);
}

namespace {

bool better(const Extremum& a, const Extremum& b) {
  if (a.ratio != b.ratio) return a.ratio > b.ratio;
  return a.index < b.index;
}

void offer(Extremum& best, double observed, double bound, std::uint64_t index,
           const SchwarzSample& s, bool& seen) {
  Extremum e{observed / bound, observed, index, s};
  if (!seen || better(e, best)) best = e;
  seen = true;
}

// Bounds and per-sample evaluation shared by verify and tightness search.
struct Evaluator {
  ClassParams params;
  std::optional<double> mu;
  bounds::ClassConstants k;
  double a2_bound;
  double a3_bound;
  std::optional<double> fs_bound;

  Evaluator(const ClassParams& p, std::optional<double> mu_in,
            double a2_scale)
      : params(p),
        mu(mu_in),
        k(bounds::constants(p)),
        a2_bound(bounds::a2_bound(p) * a2_scale),
        a3_bound(bounds::a3_bound(p)) {
    if (mu) fs_bound = bounds::fekete_szego_bound(p, *mu).value;
  }

  double observe(Functional f, const ReconstructedCoeffs& r) const {
    switch (f) {
      case Functional::A2: return std::sqrt(std::abs(r.a2_sq));
      case Functional::A3: return std::abs(r.a3);
      case Functional::FeketeSzego:
        return std::abs(r.a3_difference - *mu * r.a2_sq);
    }
    return 0.0;
  }

  double bound(Functional f) const {
    switch (f) {
      case Functional::A2: return a2_bound;
      case Functional::A3: return a3_bound;
      case Functional::FeketeSzego: return *fs_bound;
    }
    return 0.0;
  }
};

VerifyReport empty_report(const Evaluator& ev, SampleMode mode,
                          std::uint64_t seed) {
  VerifyReport r(ev.params);
  r.mu = ev.mu;
  r.mode = mode;
  r.seed = seed;
  r.a2_bound = ev.a2_bound;
  r.a3_bound = ev.a3_bound;
  r.fekete_bound = ev.fs_bound;
  if (ev.mu) r.fekete = Extremum{};
  return r;
}

struct Accumulator {
  VerifyReport report;
  bool seen_a2 = false;
  bool seen_a3 = false;
  bool seen_fs = false;

  void add(const Evaluator& ev, std::uint64_t index, const SchwarzSample& s) {
    const ReconstructedCoeffs r = reconstruct_with(s, ev.k);
    ++report.samples;
    check(ev, Functional::A2, r, index, s, report.a2, seen_a2);
    check(ev, Functional::A3, r, index, s, report.a3, seen_a3);
    if (ev.mu) check(ev, Functional::FeketeSzego, r, index, s,
                     *report.fekete, seen_fs);
  }

  void check(const Evaluator& ev, Functional f, const ReconstructedCoeffs& r,
             std::uint64_t index, const SchwarzSample& s, Extremum& best,
             bool& seen) {
    const double observed = ev.observe(f, r);
    const double bound = ev.bound(f);
    offer(best, observed, bound, index, s, seen);
    if (observed > bound + kViolationTolerance) {
      ++report.violation_count;
      if (report.violations.size() < kMaxRecordedViolations)
        report.violations.push_back({index, s, f, observed, bound});
    }
  }
};

}  // namespace

VerifyReport merge(VerifyReport a, const VerifyReport& b) {
  if (a.samples == 0) {
    a.a2 = b.a2;
    a.a3 = b.a3;
    a.fekete = b.fekete;
  } else if (b.samples > 0) {
    if (better(b.a2, a.a2)) a.a2 = b.a2;
    if (better(b.a3, a.a3)) a.a3 = b.a3;
    if (a.fekete && b.fekete && better(*b.fekete, *a.fekete))
      a.fekete = b.fekete;
  }
  a.samples += b.samples;
  a.violation_count += b.violation_count;
  a.violations.insert(a.violations.end(), b.violations.begin(),
                      b.violations.end());
  std::sort(a.violations.begin(), a.violations.end(),
            [](const Violation& x, const Violation& y) {
              if (x.index != y.index) return x.index < y.index;
              return x.functional < y.functional;
            });
  if (a.violations.size() > kMaxRecordedViolations)
    a.violations.resize(kMaxRecordedViolations);
  return a;
}

VerifyReport verify_bounds(const ClassParams& p, std::optional<double> mu,
                           SampleMode mode, std::uint64_t seed,
                           std::size_t count, const VerifyOptions& options) {
  const Evaluator ev(p, mu, options.a2_bound_scale);
  const SchwarzSampler sampler(mode, seed, p);
  const std::uint64_t total = sampler.boundary_count() + count;

  const unsigned workers = std::max(1u, options.workers);
  std::vector<VerifyReport> partial(workers, empty_report(ev, mode, seed));

  auto run_range = [&](unsigned w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    Accumulator acc{empty_report(ev, mode, seed)};
    for (std::uint64_t i = begin; i < end; ++i) acc.add(ev, i, sampler.at(i));
    partial[w] = std::move(acc.report);
  };

  if (workers == 1) {
    run_range(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run_range, w);
    for (auto& th : threads) th.join();
  }

  VerifyReport out = empty_report(ev, mode, seed);
  for (const auto& part : partial) out = merge(std::move(out), part);
  return out;
}

namespace {

// Polar parameterization of a paper-mode sample: (r, theta) for c1, c2, d2.
using Coordinates = std::array<double, 6>;

SchwarzSample from_coordinates(const Coordinates& x) {
  SchwarzSample s;
  s.c1 = std::polar(std::clamp(x[0], 0.0, 1.0), x[1]);
  s.c2 = std::polar(std::clamp(x[2], 0.0, 1.0), x[3]);
  s.d2 = std::polar(std::clamp(x[4], 0.0, 1.0), x[5]);
  s.d1 = -s.c1;
  s.mode = SampleMode::Paper;
  return s;
}

Coordinates to_coordinates(const SchwarzSample& s) {
  return {std::abs(s.c1), std::arg(s.c1), std::abs(s.c2),
          std::arg(s.c2), std::abs(s.d2), std::arg(s.d2)};
}

constexpr int kMaxRefinementSweeps = 200;
constexpr double kMinStep = 1e-10;

}  // namespace

VerifyReport tightness_search(const ClassParams& p, std::optional<double> mu,
                              std::size_t budget, std::uint64_t seed) {
  const Evaluator ev(p, mu, 1.0);
  const SchwarzSampler sampler(SampleMode::Paper, seed, p);
  Accumulator acc{empty_report(ev, SampleMode::Paper, seed)};
  std::uint64_t evaluation = 0;

  std::vector<Functional> targets = {Functional::A2, Functional::A3};
  if (mu) targets.push_back(Functional::FeketeSzego);

  auto score = [&](Functional f, const SchwarzSample& s) {
    acc.add(ev, evaluation++, s);
    return ev.observe(f, reconstruct_with(s, ev.k));
  };

  // Boundary witnesses are scored once; restarts refine random points.
  for (std::size_t i = 0; i < sampler.boundary_count(); ++i)
    acc.add(ev, evaluation++, sampler.at(i));

  for (const Functional f : targets) {
    for (std::size_t restart = 0; restart < budget; ++restart) {
      const std::uint64_t stream =
          sampler.boundary_count() +
          static_cast<std::uint64_t>(f) * budget + restart;
      Coordinates x = to_coordinates(sampler.at(stream));
      double best = score(f, from_coordinates(x));
      Coordinates step = {0.25, 0.5, 0.25, 0.5, 0.25, 0.5};
      for (int sweep = 0; sweep < kMaxRefinementSweeps; ++sweep) {
        bool improved = false;
        for (std::size_t c = 0; c < x.size(); ++c) {
          for (const double dir : {1.0, -1.0}) {
            Coordinates trial = x;
            trial[c] += dir * step[c];
            if (c % 2 == 0) trial[c] = std::clamp(trial[c], 0.0, 1.0);
            const double value = score(f, from_coordinates(trial));
            if (value > best) {
              best = value;
              x = trial;
              improved = true;
              break;
            }
          }
        }
        if (!improved) {
          for (double& h : step) h *= 0.5;
          if (step[0] < kMinStep) break;
        }
      }
    }
  }
  return acc.report;
}

}  // namespace biprestar::verifier

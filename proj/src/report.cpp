#include "biprestar/report.hpp"

namespace biprestar::report {

using nlohmann::json;

namespace {

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json optional_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json extremum_json(const verifier::Extremum& e) {
  return {{"ratio", e.ratio},
          {"observed", e.observed},
          {"index", e.index},
          {"sample", sample_json(e.sample)}};
}

}  // namespace

json params_json(const ClassParams& p, std::optional<double> mu) {
  json j = {{"lambda", p.lambda()}, {"alpha", p.alpha()}, {"t", p.t()}};
  if (mu) j["mu"] = *mu;
  return j;
}

json bounds_json(const ClassParams& p, const bounds::BoundReport& b) {
  return {{"class", bounds::class_name(p)},
          {"a2_bound", optional_json(b.a2_bound)},
          {"a3_bound", b.a3_bound},
          {"exclusion_t", optional_json(b.exclusion_t)},
          {"degenerate", b.degenerate},
          {"denominator", b.denominator}};
}

json fekete_json(const bounds::FeketeSzegoReport& f) {
  return {{"mu", f.mu},
          {"value", f.value},
          {"branch", bounds::to_string(f.branch)},
          {"h_mu", f.h_mu},
          {"threshold", f.threshold}};
}

json sample_json(const verifier::SchwarzSample& s) {
  return {{"c1", complex_json(s.c1)},
          {"c2", complex_json(s.c2)},
          {"d1", complex_json(s.d1)},
          {"d2", complex_json(s.d2)},
          {"mode", verifier::to_string(s.mode)}};
}

json verify_json(const verifier::VerifyReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"index", v.index},
                          {"functional", verifier::to_string(v.functional)},
                          {"observed", v.observed},
                          {"bound", v.bound},
                          {"sample", sample_json(v.sample)}});
  }
  json j = {{"params", params_json(r.params, r.mu)},
            {"mode", verifier::to_string(r.mode)},
            {"seed", r.seed},
            {"samples", r.samples},
            {"a2_bound", r.a2_bound},
            {"a3_bound", r.a3_bound},
            {"fekete_bound", optional_json(r.fekete_bound)},
            {"max_ratio_a2", r.max_ratio_a2()},
            {"max_ratio_a3", r.max_ratio_a3()},
            {"max_ratio_fs", r.fekete ? json(r.max_ratio_fs()) : json(nullptr)},
            {"extremum_a2", extremum_json(r.a2)},
            {"extremum_a3", extremum_json(r.a3)},
            {"violation_count", r.violation_count},
            {"violations", violations},
            {"certified", r.certified()}};
  if (r.fekete) j["extremum_fs"] = extremum_json(*r.fekete);
  return j;
}

json meta_json(std::optional<std::uint64_t> seed) {
  json j = {{"version", kVersion}};
  j["seed"] = seed ? json(*seed) : json(nullptr);
  return j;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace biprestar::report

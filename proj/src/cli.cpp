#include "biprestar/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "biprestar/bounds.hpp"
#include "biprestar/error.hpp"
#include "biprestar/report.hpp"
#include "biprestar/verifier.hpp"

namespace biprestar::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 1;

struct RunConfig {
  std::optional<double> lambda;
  std::optional<double> alpha;
  std::optional<double> t;
  std::optional<double> mu;
  std::string mode = "paper";
  std::optional<std::uint64_t> seed;
  std::size_t count = 100000;
  unsigned workers = 0;
  bool corrupt_a2 = false;
  std::string sweep_axis;
  double from = 0;
  double to = 0;
  std::size_t steps = 0;
  std::string format;
  std::string out_path;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string fmt_optional(const std::optional<double>& v) {
  return v ? fmt17(*v) : std::string();
}

// RFC 4180: quote fields containing separators, quotes or line breaks.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_field(fields[i]);
  }
  return line + "\r\n";
}

std::string table(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows)
    os << std::left << std::setw(static_cast<int>(width + 2)) << k << v
       << '\n';
  return os.str();
}

ClassParams require_params(const RunConfig& cfg) {
  if (!cfg.lambda || !cfg.alpha || !cfg.t)
    throw UsageError("--lambda, --alpha and --t are required");
  return ClassParams(*cfg.lambda, *cfg.alpha, *cfg.t);
}

std::uint64_t resolve_seed(const RunConfig& cfg) {
  if (cfg.seed) return *cfg.seed;
  if (const char* env = std::getenv("BIPRESTAR_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("BIPRESTAR_SEED must be an unsigned integer");
  }
  return kDefaultSeed;
}

unsigned resolve_workers(const RunConfig& cfg) {
  if (cfg.workers > 0) return cfg.workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

void emit(const std::string& content, const RunConfig& cfg,
          std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + cfg.out_path);
  file << content;
}

std::string degenerate_message(const ClassParams& p) {
  const auto excl = bounds::exclusion_t(p.weight(), p.order());
  std::string msg = "degenerate parameters: the |a2| denominator vanishes at t = " +
                    fmt17(p.t());
  if (excl) msg += " (excluded t = " + fmt17(*excl) + ")";
  return msg;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ClassParams p = require_params(cfg);
  const bounds::BoundReport b = bounds::bound_report(p);
  const std::string format = cfg.format.empty() ? "table" : cfg.format;

  if (format == "json") {
    json doc = {{"params", report::params_json(p, std::nullopt)},
                {"bounds", report::bounds_json(p, b)},
                {"meta", report::meta_json(std::nullopt)}};
    emit(report::dump(doc), cfg, out);
  } else if (format == "csv") {
    std::string s = csv_row({"class", "lambda", "alpha", "t", "a2_bound",
                             "a3_bound", "exclusion_t", "degenerate"});
    s += csv_row({bounds::class_name(p), fmt17(p.lambda()), fmt17(p.alpha()),
                  fmt17(p.t()), fmt_optional(b.a2_bound), fmt17(b.a3_bound),
                  fmt_optional(b.exclusion_t),
                  b.degenerate ? "true" : "false"});
    emit(s, cfg, out);
  } else {
    emit(table({{"class", bounds::class_name(p)},
                {"lambda", fmt17(p.lambda())},
                {"alpha", fmt17(p.alpha())},
                {"t", fmt17(p.t())},
                {"a2_bound", b.a2_bound ? fmt17(*b.a2_bound) : "undefined"},
                {"a3_bound", fmt17(b.a3_bound)},
                {"exclusion_t", b.exclusion_t ? fmt17(*b.exclusion_t) : "none"},
                {"degenerate", b.degenerate ? "true" : "false"}}),
         cfg, out);
  }
  if (b.degenerate) {
    err << "error: " << degenerate_message(p) << '\n';
    return kDegenerate;
  }
  return kSuccess;
}

int cmd_fekete(const RunConfig& cfg, std::ostream& out) {
  const ClassParams p = require_params(cfg);
  if (!cfg.mu) throw UsageError("--mu is required");
  const bounds::FeketeSzegoReport f = bounds::fekete_szego_bound(p, *cfg.mu);
  const std::string format = cfg.format.empty() ? "table" : cfg.format;

  if (format == "json") {
    json doc = {{"params", report::params_json(p, cfg.mu)},
                {"bounds", report::bounds_json(p, bounds::bound_report(p))},
                {"fekete", report::fekete_json(f)},
                {"meta", report::meta_json(std::nullopt)}};
    emit(report::dump(doc), cfg, out);
  } else if (format == "csv") {
    std::string s = csv_row({"lambda", "alpha", "t", "mu", "value", "branch",
                             "threshold", "h_mu"});
    s += csv_row({fmt17(p.lambda()), fmt17(p.alpha()), fmt17(p.t()),
                  fmt17(f.mu), fmt17(f.value), bounds::to_string(f.branch),
                  fmt17(f.threshold), fmt17(f.h_mu)});
    emit(s, cfg, out);
  } else {
    emit(table({{"class", bounds::class_name(p)},
                {"mu", fmt17(f.mu)},
                {"value", fmt17(f.value)},
                {"branch", bounds::to_string(f.branch)},
                {"threshold", fmt17(f.threshold)},
                {"h_mu", fmt17(f.h_mu)}}),
         cfg, out);
  }
  return kSuccess;
}

std::vector<ClassParams> default_grid() {
  std::vector<ClassParams> grid;
  for (double lambda : {0.0, 0.5, 1.0})
    for (double alpha : {0.0, 0.25, 0.5})
      for (double t : {0.2, 0.5, 0.8}) grid.emplace_back(lambda, alpha, t);
  return grid;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const verifier::SampleMode mode = verifier::parse_mode(cfg.mode);
  const std::uint64_t seed = resolve_seed(cfg);
  verifier::VerifyOptions options;
  options.workers = resolve_workers(cfg);
  options.a2_bound_scale = cfg.corrupt_a2 ? 0.5 : 1.0;

  const bool grid_run = !cfg.lambda && !cfg.alpha && !cfg.t;
  std::vector<ClassParams> points =
      grid_run ? default_grid() : std::vector<ClassParams>{require_params(cfg)};
  std::vector<std::optional<double>> mus;
  if (cfg.mu) mus = {cfg.mu};
  else if (grid_run) mus = {0.0, 0.5, 1.0, 2.0};
  else mus = {std::nullopt};

  std::vector<verifier::VerifyReport> reports;
  for (const ClassParams& p : points) {
    bounds::require_nondegenerate(p);
    for (const auto& mu : mus)
      reports.push_back(
          verifier::verify_bounds(p, mu, mode, seed, cfg.count, options));
  }

  std::uint64_t violations = 0;
  for (const auto& r : reports) violations += r.violation_count;

  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format == "json") {
    json doc;
    if (!grid_run) {
      const auto& r = reports.front();
      doc["params"] = report::params_json(r.params, r.mu);
      doc["bounds"] = report::bounds_json(r.params, bounds::bound_report(r.params));
      if (r.mu)
        doc["fekete"] =
            report::fekete_json(bounds::fekete_szego_bound(r.params, *r.mu));
      doc["verify"] = report::verify_json(r);
    } else {
      json runs = json::array();
      for (const auto& r : reports) runs.push_back(report::verify_json(r));
      doc["verify"] = {{"runs", runs},
                       {"violation_count", violations},
                       {"certified", violations == 0}};
    }
    doc["meta"] = report::meta_json(seed);
    emit(report::dump(doc), cfg, out);
  } else if (format == "csv") {
    std::string s = csv_row({"lambda", "alpha", "t", "mu", "mode", "seed",
                             "samples", "max_ratio_a2", "max_ratio_a3",
                             "max_ratio_fs", "violations"});
    for (const auto& r : reports) {
      s += csv_row({fmt17(r.params.lambda()), fmt17(r.params.alpha()),
                    fmt17(r.params.t()), fmt_optional(r.mu),
                    verifier::to_string(r.mode), std::to_string(r.seed),
                    std::to_string(r.samples), fmt17(r.max_ratio_a2()),
                    fmt17(r.max_ratio_a3()),
                    r.fekete ? fmt17(r.max_ratio_fs()) : std::string(),
                    std::to_string(r.violation_count)});
    }
    emit(s, cfg, out);
  } else {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << "lambda=" << fmt17(r.params.lambda())
         << " alpha=" << fmt17(r.params.alpha()) << " t=" << fmt17(r.params.t())
         << " mu=" << (r.mu ? fmt17(*r.mu) : std::string("-"))
         << " samples=" << r.samples << " ratio_a2=" << fmt17(r.max_ratio_a2())
         << " ratio_a3=" << fmt17(r.max_ratio_a3());
      if (r.fekete) os << " ratio_fs=" << fmt17(r.max_ratio_fs());
      os << " violations=" << r.violation_count << '\n';
    }
    emit(os.str(), cfg, out);
  }

  if (violations > 0) {
    err << "verification failed: " << violations << " bound violation(s)\n";
    return kViolation;
  }
  return kSuccess;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const std::string& axis = cfg.sweep_axis;
  if (axis != "lambda" && axis != "alpha" && axis != "t" && axis != "mu")
    throw UsageError("--sweep must be one of lambda, alpha, t, mu");
  if (cfg.steps < 2) throw UsageError("--steps must be at least 2");
  if (!(cfg.from < cfg.to)) throw UsageError("--from must be less than --to");

  RunConfig base = cfg;
  std::vector<double> values(cfg.steps);
  for (std::size_t i = 0; i < cfg.steps; ++i) {
    values[i] = i + 1 == cfg.steps
                    ? cfg.to
                    : cfg.from + (cfg.to - cfg.from) * static_cast<double>(i) /
                                     static_cast<double>(cfg.steps - 1);
  }

  struct Row {
    double value;
    ClassParams params;
    std::optional<double> mu;
    bounds::BoundReport bounds;
    std::optional<bounds::FeketeSzegoReport> fekete;
  };
  std::vector<Row> rows;
  for (double v : values) {
    RunConfig point = base;
    if (axis == "lambda") point.lambda = v;
    else if (axis == "alpha") point.alpha = v;
    else if (axis == "t") point.t = v;
    else point.mu = v;
    const ClassParams p = require_params(point);
    Row row{v, p, point.mu, bounds::bound_report(p), std::nullopt};
    if (point.mu && !row.bounds.degenerate)
      row.fekete = bounds::fekete_szego_bound(p, *point.mu);
    rows.push_back(std::move(row));
  }
  const bool with_mu = axis == "mu" || cfg.mu.has_value();

  const std::string format = cfg.format.empty() ? "table" : cfg.format;
  if (format == "json") {
    json jrows = json::array();
    for (const Row& r : rows) {
      json j = {{"value", r.value},
                {"a2_bound", r.bounds.a2_bound ? json(*r.bounds.a2_bound)
                                               : json(nullptr)},
                {"a3_bound", r.bounds.a3_bound},
                {"degenerate", r.bounds.degenerate}};
      if (with_mu) {
        j["fekete"] = r.fekete ? json(r.fekete->value) : json(nullptr);
        j["branch"] = r.fekete ? json(bounds::to_string(r.fekete->branch))
                               : json(nullptr);
      }
      jrows.push_back(std::move(j));
    }
    json params = {{"lambda", cfg.lambda ? json(*cfg.lambda) : json(nullptr)},
                   {"alpha", cfg.alpha ? json(*cfg.alpha) : json(nullptr)},
                   {"t", cfg.t ? json(*cfg.t) : json(nullptr)}};
    if (cfg.mu) params["mu"] = *cfg.mu;
    json doc = {{"params", params},
                {"sweep", {{"axis", axis}, {"rows", jrows}}},
                {"meta", report::meta_json(std::nullopt)}};
    emit(report::dump(doc), cfg, out);
    return kSuccess;
  }

  std::vector<std::string> header = {axis, "a2_bound", "a3_bound"};
  if (with_mu) {
    header.push_back("fekete");
    header.push_back("branch");
  }
  header.push_back("degenerate");
  std::vector<std::vector<std::string>> cells;
  for (const Row& r : rows) {
    std::vector<std::string> c = {fmt17(r.value), fmt_optional(r.bounds.a2_bound),
                                  fmt17(r.bounds.a3_bound)};
    if (with_mu) {
      c.push_back(r.fekete ? fmt17(r.fekete->value) : std::string());
      c.push_back(r.fekete ? bounds::to_string(r.fekete->branch) : "");
    }
    c.push_back(r.bounds.degenerate ? "true" : "false");
    cells.push_back(std::move(c));
  }

  std::string s;
  if (format == "csv") {
    s = csv_row(header);
    for (const auto& c : cells) s += csv_row(c);
  } else {
    std::ostringstream os;
    for (const auto& h : header) os << std::left << std::setw(24) << h;
    os << '\n';
    for (const auto& c : cells) {
      for (const auto& v : c) os << std::left << std::setw(24) << (v.empty() ? "-" : v);
      os << '\n';
    }
    s = os.str();
  }
  emit(s, cfg, out);
  return kSuccess;
}

void add_class_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--lambda", cfg.lambda, "Operator weight lambda in [0,1]");
  sub->add_option("--alpha", cfg.alpha, "Prestarlike order alpha in [0,1)");
  sub->add_option("--t", cfg.t, "Chebyshev parameter t in (0,1)");
  sub->add_option("--mu", cfg.mu, "Real Fekete-Szego parameter mu");
}

void add_output_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  sub->add_option("--out", cfg.out_path, "Write output to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Coefficient bounds for bi-prestarlike classes associated with "
               "Chebyshev polynomials",
               "biprestar"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "Bounds on |a2| and |a3|");
  add_class_options(bounds_cmd, cfg);
  add_output_options(bounds_cmd, cfg);

  CLI::App* fekete_cmd =
      app.add_subcommand("fekete", "Fekete-Szego bound on |a3 - mu a2^2|");
  add_class_options(fekete_cmd, cfg);
  add_output_options(fekete_cmd, cfg);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Sample Schwarz coefficients and certify the bounds");
  add_class_options(verify_cmd, cfg);
  add_output_options(verify_cmd, cfg);
  verify_cmd->add_option("--mode", cfg.mode, "Sampling mode")
      ->check(CLI::IsMember({"paper", "pick", "consistent"}));
  verify_cmd->add_option("--seed", cfg.seed,
                         "RNG seed (default: $BIPRESTAR_SEED or 1)");
  verify_cmd->add_option("--count", cfg.count,
                         "Random samples per run, after the boundary set");
  verify_cmd->add_option("--workers", cfg.workers,
                         "Worker threads (0 = hardware concurrency)");
  verify_cmd->add_flag("--corrupt-a2-bound", cfg.corrupt_a2,
                       "Self-test: halve the |a2| bound");

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Tabulate bounds along one parameter");
  add_class_options(sweep_cmd, cfg);
  add_output_options(sweep_cmd, cfg);
  sweep_cmd->add_option("--sweep", cfg.sweep_axis, "Axis: lambda, alpha, t, mu")
      ->required();
  sweep_cmd->add_option("--from", cfg.from, "First value")->required();
  sweep_cmd->add_option("--to", cfg.to, "Last value")->required();
  sweep_cmd->add_option("--steps", cfg.steps, "Number of values (>= 2)")
      ->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (bounds_cmd->parsed()) return cmd_bounds(cfg, out, err);
    if (fekete_cmd->parsed()) return cmd_fekete(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(cfg, out);
  } catch (const DegenerateDenominator& e) {
    err << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace biprestar::cli

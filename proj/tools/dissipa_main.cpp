#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dissipa/errors.hpp"
#include "dissipa/evolution.hpp"
#include "dissipa/io.hpp"
#include "dissipa/models.hpp"

namespace {

using dissipa::Config;
using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitStrictFailed = 2;
constexpr int kExitCouplingFailed = 3;
constexpr int kExitSymmetrizabilityFailed = 4;
constexpr int kExitInternal = 5;

struct CommonArgs {
  std::string model;
  std::string config_path;
  std::string out_dir = ".";
  std::string format = "csv";
  std::uint64_t seed = dissipa::kDefaultSeed;
  double grid_r_min = 0.0;  // 0 = config/default
  double grid_r_max = 0.0;
  int grid_per_decade = 0;
  int grid_directions = 0;
  double tol_strict = 0.0;
  double tol_coupling = -1.0;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--model", a.model, "model name or coefficient-system document path");
  cmd->add_option("--config", a.config_path, "key-value config file");
  cmd->add_option("--out", a.out_dir, "output directory");
  cmd->add_option("--format", a.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", a.seed, "seed for randomized certificates");
  cmd->add_option("--grid.r-min", a.grid_r_min, "smallest radius");
  cmd->add_option("--grid.r-max", a.grid_r_max, "largest radius");
  cmd->add_option("--grid.per-decade", a.grid_per_decade, "radii per decade");
  cmd->add_option("--grid.directions", a.grid_directions, "number of sphere directions");
  cmd->add_option("--tol.strict", a.tol_strict, "strict-dissipativity margin tolerance");
  cmd->add_option("--tol.coupling", a.tol_coupling, "genuine-coupling tolerance");
}

Config effective_config(const CommonArgs& a) {
  Config cfg;
  if (!a.config_path.empty()) cfg = dissipa::load_config(a.config_path);
  if (!a.model.empty()) cfg["model"] = a.model;
  if (a.grid_r_min > 0.0) cfg["grid.r_min"] = dissipa::format_double(a.grid_r_min);
  if (a.grid_r_max > 0.0) cfg["grid.r_max"] = dissipa::format_double(a.grid_r_max);
  if (a.grid_per_decade > 0) cfg["grid.per_decade"] = std::to_string(a.grid_per_decade);
  if (a.grid_directions > 0) cfg["grid.directions"] = std::to_string(a.grid_directions);
  if (a.tol_strict > 0.0) cfg["tol.strict"] = dissipa::format_double(a.tol_strict);
  if (a.tol_coupling >= 0.0) cfg["tol.coupling"] = dissipa::format_double(a.tol_coupling);
  if (a.seed != dissipa::kDefaultSeed) cfg["seed"] = std::to_string(a.seed);
  if (a.format != "csv") cfg["format"] = a.format;
  return cfg;
}

dissipa::ModelBundle resolve_model(const Config& cfg) {
  const std::string name = dissipa::config_string(cfg, "model", "");
  if (name.empty()) throw std::invalid_argument("no model given (--model or config 'model')");
  const auto names = dissipa::model_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) {
    std::map<std::string, double> overrides;
    for (const auto& [key, value] : cfg) {
      if (key.rfind("params.", 0) != 0) continue;
      auto v = dissipa::parse_double(value);
      if (!v) throw std::invalid_argument("config key '" + key + "': bad number");
      overrides[key.substr(7)] = *v;
    }
    if (name == "efk-md") overrides["d"] = dissipa::config_double(cfg, "d", 2.0);
    return dissipa::build_by_name(name, overrides);
  }
  if (std::filesystem::exists(name)) {
    std::ifstream in(name);
    std::ostringstream buf;
    buf << in.rdbuf();
    dissipa::ModelBundle out{std::filesystem::path(name).stem().string(),
                             dissipa::CoefficientSystem::from_document(buf.str()), std::nullopt,
                             nullptr, {}};
    // File-based systems carry no symmetrizer; try the identity, then a
    // constant Friedrichs witness.
    const int n = out.system.state_dim();
    const auto probe = dissipa::make_grid(out.system.space_dim(), 0.1, 10.0, 3, 4).points;
    if (dissipa::verify_symmetrizer(out.system, dissipa::identity_symmetrizer(n), probe).pass) {
      out.symmetrizer = dissipa::identity_symmetrizer(n);
    } else if (auto cert = dissipa::friedrichs_feasibility(out.system);
               cert.verdict == dissipa::Feasibility::Feasible) {
      const dissipa::Matrix s = *cert.witness;
      dissipa::SymmetrizerFn fn{[s](const dissipa::FrequencyPoint&) { return s; },
                                "constant Friedrichs witness", true};
      if (dissipa::verify_symmetrizer(out.system, fn, probe).pass) out.symmetrizer = fn;
    }
    return out;
  }
  throw std::invalid_argument("model '" + name + "' is neither a known name nor a file");
}

dissipa::FrequencyGrid grid_from_config(const Config& cfg, int d) {
  const double r_min = dissipa::config_double(cfg, "grid.r_min", 1e-3);
  const double r_max = dissipa::config_double(cfg, "grid.r_max", 1e3);
  const int per_decade = dissipa::config_int(cfg, "grid.per_decade", 16);
  const int dirs =
      dissipa::config_int(cfg, "grid.directions", dissipa::default_direction_count(d));
  return dissipa::make_grid(d, r_min, r_max, per_decade, dirs);
}

json provenance(const Config& cfg) {
  json p;
  p["tool"] = "dissipa";
  p["version"] = kVersion;
  p["config_hash"] = dissipa::config_hash(cfg);
  p["seed"] = dissipa::config_int(cfg, "seed", static_cast<int>(dissipa::kDefaultSeed));
  return p;
}

void emit(const CommonArgs& a, const std::string& name, const std::string& content) {
  std::filesystem::create_directories(a.out_dir);
  const std::string path = (std::filesystem::path(a.out_dir) / name).string();
  dissipa::write_file(path, content);
  std::cout << "wrote " << path << "\n";
}

json feasibility_json(const dissipa::FeasibilityCertificate& cert) {
  json j;
  j["verdict"] = dissipa::to_string(cert.verdict);
  j["null_space_dim"] = cert.null_space_dim;
  if (!cert.forced_constraints.empty()) j["detail"] = cert.forced_constraints;
  if (!cert.forced_zero_entries.empty()) {
    json entries = json::array();
    for (auto [i, k] : cert.forced_zero_entries)
      entries.push_back("s" + std::to_string(i + 1) + std::to_string(k + 1));
    j["forced_zero_entries"] = entries;
  }
  if (cert.witness) {
    json w = json::array();
    for (Eigen::Index i = 0; i < cert.witness->rows(); ++i)
      for (Eigen::Index k = 0; k < cert.witness->cols(); ++k)
        w.push_back((*cert.witness)(i, k));
    j["witness_row_major"] = w;
  }
  return j;
}

int cmd_analyze(const CommonArgs& a) {
  const Config cfg = effective_config(a);
  dissipa::ModelBundle bundle = resolve_model(cfg);
  const auto& sys = bundle.system;
  const dissipa::FrequencyGrid grid = grid_from_config(cfg, sys.space_dim());
  const double tol_strict = dissipa::config_double(cfg, "tol.strict", 1e-9);
  const auto seed =
      static_cast<std::uint64_t>(dissipa::config_int(cfg, "seed", dissipa::kDefaultSeed));

  json report;
  report["schema_version"] = 1;
  report["provenance"] = provenance(cfg);
  report["model"] = {{"name", bundle.name},
                     {"n", sys.state_dim()},
                     {"d", sys.space_dim()},
                     {"m", sys.max_order()}};
  json verdicts;
  int exit_code = kExitOk;

  const auto friedrichs = dissipa::friedrichs_feasibility(sys, seed);
  verdicts["friedrichs"] = feasibility_json(friedrichs);

  // Without a symmetrizer the pipeline cannot proceed; certify the obstruction.
  if (!bundle.symmetrizer) {
    json pw = json::array();
    bool any_feasible = false;
    for (double r : dissipa::log_radii(0.5, 100.0, 2)) {
      const auto p = dissipa::FrequencyPoint::from_polar(
          r, dissipa::sphere_directions(sys.space_dim(), 8).front());
      auto cert = dissipa::pointwise_symmetrizer_feasibility(sys, p, seed);
      json one = feasibility_json(cert);
      one["radius"] = r;
      any_feasible |= cert.verdict == dissipa::Feasibility::Feasible;
      pw.push_back(std::move(one));
    }
    verdicts["symmetrizer"] = "none";
    verdicts["pointwise_symmetrizer"] = std::move(pw);
    report["verdicts"] = std::move(verdicts);
    report["exit_code"] = kExitSymmetrizabilityFailed;
    emit(a, "report.json", report.dump(2) + "\n");
    std::cout << "symmetrizability: no symbol symmetrizer (pointwise certificates in report)"
              << (any_feasible ? " -- feasible at some sampled radii" : "") << "\n";
    return kExitSymmetrizabilityFailed;
  }

  const auto sym_report = dissipa::verify_symmetrizer(sys, *bundle.symmetrizer, grid.points);
  verdicts["symmetrizer"] =
      json{{"label", bundle.symmetrizer->label},
           {"constant_in_xi", bundle.symmetrizer->claims_friedrichs},
           {"pass", sym_report.pass},
           {"max_sa_asymmetry", sym_report.max_sa_asymmetry},
           {"max_sb_asymmetry", sym_report.max_sb_asymmetry},
           {"min_sb_eig", sym_report.min_sb_eig}};
  if (!sym_report.pass) {
    report["verdicts"] = std::move(verdicts);
    report["exit_code"] = kExitSymmetrizabilityFailed;
    emit(a, "report.json", report.dump(2) + "\n");
    std::cout << "symmetrizer verification failed: " << sym_report.first_failure->reason << "\n";
    return kExitSymmetrizabilityFailed;
  }

  // Genuine coupling across the grid.
  dissipa::CouplingTols ctols;
  ctols.coupling_tol = dissipa::config_double(cfg, "tol.coupling", -1.0);
  bool all_coupled = true;
  double min_theta_tilde = std::numeric_limits<double>::infinity();
  std::optional<dissipa::CouplingVerdict> failed_verdict;
  dissipa::FrequencyPoint failed_at;
  for (const auto& p : grid.points) {
    const auto sp = dissipa::symmetrize(sys, *bundle.symmetrizer, p);
    const auto verdict = dissipa::genuine_coupling(sp, ctols);
    min_theta_tilde = std::min(min_theta_tilde, verdict.theta_tilde);
    if (!verdict.coupled && all_coupled) {
      all_coupled = false;
      failed_verdict = verdict;
      failed_at = p;
    }
  }
  json coupling{{"coupled", all_coupled}, {"min_theta_tilde", min_theta_tilde}};
  if (failed_verdict && failed_verdict->witness) {
    json w;
    w["mu"] = failed_verdict->witness->mu;
    w["radius"] = failed_at.radius;
    json psi = json::array(), omega = json::array();
    for (Eigen::Index i = 0; i < failed_verdict->witness->psi.size(); ++i)
      psi.push_back(failed_verdict->witness->psi[i]);
    for (Eigen::Index i = 0; i < failed_at.direction.size(); ++i)
      omega.push_back(failed_at.direction[i]);
    w["psi"] = psi;
    w["omega"] = omega;
    coupling["witness"] = std::move(w);
  }
  verdicts["coupling"] = std::move(coupling);

  // Sweep with compensator margins, strictness, classification.
  dissipa::SweepOptions sopts;
  sopts.strategy = dissipa::CompensatorStrategy::DrazinOrReference;
  sopts.reference = bundle.reference_compensator;
  const auto records = dissipa::sweep(sys, bundle.symmetrizer, grid, sopts);

  double min_theta = std::numeric_limits<double>::infinity();
  std::map<double, double> theta_profile;
  for (const auto& r : records) {
    if (!r.theta) continue;
    min_theta = std::min(min_theta, *r.theta);
    auto [it, inserted] = theta_profile.emplace(r.at.radius, *r.theta);
    if (!inserted) it->second = std::min(it->second, *r.theta);
  }
  json profile = json::array();
  for (auto [r, th] : theta_profile) profile.push_back({{"radius", r}, {"min_theta", th}});
  report["compensator"] = {{"min_theta", min_theta},
                           {"barred", !sys.has_relaxation()},
                           {"profile_by_radius", std::move(profile)}};

  const auto strict = dissipa::certify_strict(records, tol_strict);
  verdicts["strict"] = {{"pass", strict.pass},
                        {"worst_radius", strict.worst.at.radius},
                        {"worst_max_re", strict.worst.max_re}};

  // Pointwise decay-envelope self-check with the per-point compensator
  // margin as the rate function (only meaningful when coupling holds).
  if (all_coupled && min_theta > 0.0) {
    const bool barred = !sys.has_relaxation();
    dissipa::EnvelopeSpec spec;
    spec.kind = barred ? dissipa::EnvelopeSpec::Kind::RelaxationFree
                       : dissipa::EnvelopeSpec::Kind::Full;
    const auto& symmetrizer = *bundle.symmetrizer;
    const auto& reference = bundle.reference_compensator;
    spec.margin_fn = [&sys, &symmetrizer, &reference, barred](const dissipa::FrequencyPoint& p) {
      const auto sp = dissipa::symmetrize(sys, symmetrizer, p);
      const dissipa::Matrix b_eff =
          barred ? dissipa::Matrix(sp.b_s / (p.radius * p.radius)) : sp.b_s;
      try {
        return dissipa::drazin_compensator(sp.a_s, b_eff).theta;
      } catch (const dissipa::ConditioningError&) {
        if (reference) return dissipa::validate_compensator(reference(p), sp.a_s, b_eff).theta;
        throw;
      }
    };
    dissipa::EnvelopeOptions eopts;
    eopts.depth_levels = {1.0, 4.0};
    eopts.vectors_per_point = 2;
    eopts.seed = seed;
    const auto envelope = dissipa::verify_envelope(
        sys, symmetrizer, spec,
        dissipa::make_grid(sys.space_dim(), 1e-2, 1e2, 3,
                           sys.space_dim() == 1 ? 2 : 6),
        eopts);
    report["envelope"] = {{"kind", barred ? "relaxation-free" : "full"},
                          {"c_fit", envelope.c_fit},
                          {"k_fit", envelope.k_fit},
                          {"violations", envelope.violations},
                          {"samples", envelope.samples}};
  }

  if (strict.pass) {
    try {
      const auto cls = dissipa::classify_type(records);
      verdicts["classification"] = {{"p", cls.p},
                                    {"q", cls.q},
                                    {"kind", dissipa::to_string(cls.kind)},
                                    {"low_slope", cls.low_slope},
                                    {"high_slope", cls.high_slope},
                                    {"c_fit", cls.c_fit}};
    } catch (const dissipa::ClassificationError& e) {
      verdicts["classification"] = {{"error", e.what()},
                                    {"low_slope", e.low_slope},
                                    {"high_slope", e.high_slope}};
    } catch (const std::invalid_argument& e) {
      // Grid too small/coarse for type fitting; the other verdicts stand.
      verdicts["classification"] = {{"error", e.what()}};
    }
  }

  if (!strict.pass) exit_code = kExitStrictFailed;
  if (!all_coupled) exit_code = kExitCouplingFailed;

  // Smoothness diagnostic for the eigenprojections of A_S along one ray
  // (pointwise clustering cannot prove smoothness; the jump is monitored).
  try {
    const double jump = dissipa::projection_jump_diagnostic(
        sys, *bundle.symmetrizer, grid.directions.front(),
        dissipa::log_radii(dissipa::config_double(cfg, "grid.r_min", 1e-3),
                           dissipa::config_double(cfg, "grid.r_max", 1e3), 16));
    report["diagnostics"] = {{"projection_max_jump", jump}};
  } catch (const std::exception& e) {
    report["diagnostics"] = {{"projection_max_jump_error", e.what()}};
  }

  report["verdicts"] = std::move(verdicts);
  report["exit_code"] = exit_code;
  emit(a, "report.json", report.dump(2) + "\n");

  std::cout << "model " << bundle.name << ": symmetrizer pass, coupling "
            << (all_coupled ? "holds" : "FAILS") << ", strict dissipativity "
            << (strict.pass ? "holds" : "FAILS") << "\n";
  return exit_code;
}

int cmd_sweep(const CommonArgs& a) {
  const Config cfg = effective_config(a);
  dissipa::ModelBundle bundle = resolve_model(cfg);
  const auto& sys = bundle.system;
  const dissipa::FrequencyGrid grid = grid_from_config(cfg, sys.space_dim());

  dissipa::SweepOptions sopts;
  if (bundle.symmetrizer) {
    sopts.strategy = dissipa::CompensatorStrategy::DrazinOrReference;
    sopts.reference = bundle.reference_compensator;
  }
  const auto records = dissipa::sweep(sys, bundle.symmetrizer, grid, sopts);

  if (dissipa::config_string(cfg, "format", a.format) == "json") {
    json out;
    out["schema_version"] = 1;
    out["provenance"] = provenance(cfg);
    json rows = json::array();
    for (const auto& r : records) {
      json row;
      json xi = json::array();
      for (Eigen::Index i = 0; i < r.at.xi.size(); ++i) xi.push_back(r.at.xi[i]);
      row["xi"] = xi;
      row["radius"] = r.at.radius;
      json re = json::array(), im = json::array();
      for (Eigen::Index i = 0; i < r.eigenvalues.size(); ++i) {
        re.push_back(r.eigenvalues[i].real());
        im.push_back(r.eigenvalues[i].imag());
      }
      row["re_lambda"] = re;
      row["im_lambda"] = im;
      row["max_re"] = r.max_re;
      if (r.theta) row["theta"] = *r.theta;
      if (!r.ok) row["error"] = r.message;
      rows.push_back(std::move(row));
    }
    out["records"] = std::move(rows);
    emit(a, "sweep.json", out.dump(2) + "\n");
  } else {
    emit(a, "sweep.csv", dissipa::sweep_csv(records, sys.space_dim(), sys.state_dim()));
  }
  return kExitOk;
}

int cmd_simulate(const CommonArgs& a) {
  const Config cfg = effective_config(a);
  dissipa::ModelBundle bundle = resolve_model(cfg);
  const auto& sys = bundle.system;
  if (!bundle.symmetrizer)
    throw std::invalid_argument("simulate needs a model with a symmetrizer");

  const double t_min = dissipa::config_double(cfg, "times.t_min", 1.0);
  const double t_max = dissipa::config_double(cfg, "times.t_max", 1e4);
  const int t_per_decade = dissipa::config_int(cfg, "times.per_decade", 5);
  std::vector<double> times = dissipa::log_radii(t_min, t_max, t_per_decade);
  times.insert(times.begin(), 0.0);

  dissipa::InitialData init;
  const std::string profile = dissipa::config_string(cfg, "init.profile", "gaussian");
  if (profile == "gaussian") init.profile = dissipa::InitialData::Profile::Gaussian;
  else if (profile == "compact-bump") init.profile = dissipa::InitialData::Profile::CompactBump;
  else if (profile == "inverse-poly") init.profile = dissipa::InitialData::Profile::InversePoly;
  else throw std::invalid_argument("init.profile must be gaussian|compact-bump|inverse-poly");
  init.amplitude = dissipa::config_double(cfg, "init.amplitude", 1.0);
  init.width = dissipa::config_double(cfg, "init.width", 1.0);

  dissipa::QuadratureOptions qopts;
  qopts.r_min = dissipa::config_double(cfg, "quad.r_min", qopts.r_min);
  qopts.r_max = dissipa::config_double(cfg, "quad.r_max", qopts.r_max);
  qopts.points_per_decade = dissipa::config_int(cfg, "quad.per_decade", qopts.points_per_decade);
  qopts.directions = dissipa::config_int(cfg, "quad.directions", 0);
  qopts.weighted_component = bundle.symmetrizer->claims_friedrichs ? -1 : 0;
  const int ell = dissipa::config_int(cfg, "ell", 0);

  const auto series = dissipa::l2_decay(sys, *bundle.symmetrizer, init, ell, times, qopts);
  emit(a, "decay.csv", dissipa::decay_csv(series.times, series.norms, series.running_rate));

  json out;
  out["schema_version"] = 1;
  out["provenance"] = provenance(cfg);
  out["model"] = bundle.name;
  out["ell"] = ell;
  out["fitted_rate"] = series.fitted_rate;
  out["doubling_error"] = series.doubling_error;
  out["l1_surrogate"] = series.l1_surrogate;
  emit(a, "decay_summary.json", out.dump(2) + "\n");
  std::cout << "fitted decay rate (ell = " << ell << "): " << series.fitted_rate << "\n";
  return kExitOk;
}

int cmd_asymptotics(const CommonArgs& a) {
  const Config cfg = effective_config(a);
  dissipa::ModelBundle bundle = resolve_model(cfg);
  const auto& sys = bundle.system;
  if (sys.space_dim() != 1)
    throw std::invalid_argument("asymptotics needs a 1-D model (dnsf1d, efk1d, heat, ...)");

  const double r_min = dissipa::config_double(cfg, "grid.r_min", 1e2);
  const double r_max = dissipa::config_double(cfg, "grid.r_max", 1e4);
  const int per_decade = dissipa::config_int(cfg, "grid.per_decade", 32);
  const int direction = dissipa::config_int(cfg, "direction", 1);
  const std::vector<int> orders = {3, 2, 1, 0, -1, -2};

  const auto fit = dissipa::asymptotic_fit(sys, direction, orders,
                                           dissipa::log_radii(r_min, r_max, per_decade));

  // Closed-form coefficients where the model has them.
  auto param = [&](const char* key, double fallback) {
    return dissipa::config_double(cfg, std::string("params.") + key, fallback);
  };
  auto closed_form = [&](const dissipa::BranchFit& b, int order) -> std::optional<double> {
    if (bundle.name == "heat")
      return order == 2 ? std::optional<double>(param("diffusivity", 1.0)) : 0.0;
    if (bundle.name != "dnsf1d") return std::nullopt;
    const double rho = param("rho", 1.0), theta = param("theta", 1.0);
    const double mu = param("mu", 1.0), alpha = param("alpha", 1.0);
    const double tau4 = param("tau4", 1.0);
    const double c3 = (8.0 / (9.0 * rho)) * tau4 * std::sqrt(1.5 / theta);
    const bool dispersive = std::abs(b.coefficients.at(3)) > 0.5 * c3;
    if (dispersive) {
      if (order == 3) return b.coefficients.at(3).real() > 0 ? c3 : -c3;
      if (order == 2) return (2.0 / 3.0) * mu / rho + alpha / (3.0 * rho);
      return std::nullopt;
    }
    if (order >= -1) return 0.0;
    if (order == -2) return (9.0 / 16.0) * rho * alpha * theta * theta / (tau4 * tau4);
    return std::nullopt;
  };

  std::string csv = "branch,order,re,im,closed_form,residual\n";
  for (std::size_t b = 0; b < fit.branches.size(); ++b) {
    for (const auto& [order, coef] : fit.branches[b].coefficients) {
      const auto expect = closed_form(fit.branches[b], order);
      csv += std::to_string(b + 1) + "," + std::to_string(order) + "," +
             dissipa::format_double(coef.real()) + "," + dissipa::format_double(coef.imag()) +
             "," + (expect ? dissipa::format_double(*expect) : std::string("")) + "," +
             dissipa::format_double(fit.branches[b].residual) + "\n";
    }
  }
  emit(a, "asymptotics.csv", csv);

  std::cout << "branch coefficients (order: value):\n";
  for (std::size_t b = 0; b < fit.branches.size(); ++b) {
    std::cout << "  branch " << b + 1 << ":";
    for (const auto& [order, coef] : fit.branches[b].coefficients) {
      std::cout << "  (" << order << ": " << dissipa::format_double(coef.real());
      if (std::abs(coef.imag()) > 1e-9) std::cout << (coef.imag() > 0 ? "+" : "") <<
          dissipa::format_double(coef.imag()) << "i";
      std::cout << ")";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_list_models() {
  for (const auto& name : dissipa::model_names()) {
    const auto bundle = dissipa::build_by_name(name);
    std::cout << name << ": n=" << bundle.system.state_dim()
              << " d=" << bundle.system.space_dim() << " m=" << bundle.system.max_order()
              << (bundle.symmetrizer ? "" : " (no symbol symmetrizer)") << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dissipative-structure analysis of constant-coefficient evolution systems"};
  app.require_subcommand(1);

  CommonArgs analyze_args, sweep_args, simulate_args, asym_args;
  auto* analyze = app.add_subcommand("analyze", "full verdict pipeline and JSON report");
  add_common(analyze, analyze_args);
  auto* sweep = app.add_subcommand("sweep", "raw dispersion sweep dump");
  add_common(sweep, sweep_args);
  auto* simulate = app.add_subcommand("simulate", "L2 decay series from initial data");
  add_common(simulate, simulate_args);
  auto* asym = app.add_subcommand("asymptotics", "1-D high-frequency eigenvalue expansion");
  add_common(asym, asym_args);
  app.add_subcommand("list-models", "names of the built-in models");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(analyze_args);
    if (sweep->parsed()) return cmd_sweep(sweep_args);
    if (simulate->parsed()) return cmd_simulate(simulate_args);
    if (asym->parsed()) return cmd_asymptotics(asym_args);
    return cmd_list_models();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

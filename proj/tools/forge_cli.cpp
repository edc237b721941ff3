#include "forge_cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>
#include <vector>

#include "mandelstam/dispersion.hpp"
#include "mandelstam/fixpoint.hpp"
#include "mandelstam/froissart.hpp"
#include "mandelstam/mellin.hpp"
#include "mandelstam/partialwave.hpp"
#include "mandelstam/regge.hpp"
#include "mandelstam/threading.hpp"

namespace mandelstam::cli {
namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

GridSpec grid_from_json(const json& j, GridSpec def) {
  if (j.is_object()) {
    def.lo = j.value("lo", def.lo);
    def.hi = j.value("hi", def.hi);
    def.n = j.value("n", def.n);
    def.log_spaced = j.value("log", def.log_spaced);
  }
  if (!(def.lo > 0.0) || !(def.hi > def.lo) || def.n < 2)
    throw std::invalid_argument("grid: need 0 < lo < hi and n >= 2");
  return def;
}

Trajectory trajectory_from_json(const json& j) {
  const std::string type = j.value("type", "fixed");
  if (type == "fixed") return Trajectory::fixed_pole(j.value("alpha0", 1.0));
  if (type == "rising")
    return Trajectory::rising(j.value("alpha_inf", -0.7), j.value("a", 0.3),
                              j.value("p", 2.0));
  throw std::invalid_argument("trajectory: unknown type " + type);
}

ResidueSpec residue_from_json(const json& j) {
  std::vector<double> zeros;
  if (j.contains("ghost_zeros"))
    zeros = j.at("ghost_zeros").get<std::vector<double>>();
  return ResidueSpec(j.value("a", 1.0), j.value("q", 2.0), zeros);
}

KhuriPoleSpec khuri_from_json(const json& j) {
  KhuriPoleSpec spec;
  spec.sigma = j.value("sigma", 0.8);
  const double alpha_inf = j.value("alpha_inf", -0.7);
  spec.alpha0 = make_alpha0(spec.sigma, alpha_inf);
  const double chi_level = j.value("chi_level", 0.05);
  if (!(chi_level > 0.0))
    throw std::invalid_argument("khuri: chi_level must be positive");
  spec.chi = [chi_level](double) { return chi_level; };
  const double beta_level = j.value("beta_level", 1.0);
  spec.beta = [beta_level](complex) { return complex(beta_level); };
  spec.t1 = j.value("t1", 20.0);
  spec.n_daughters = j.value("n_daughters", 2);
  spec.gamma1 = j.value("gamma1", 2.5);
  spec.ghost_killing = j.value("ghost_killing", false);
  spec.validate();
  return spec;
}

} // namespace

BuiltAmplitude make_amplitude(const json& recipe, const std::string& out_dir) {
  if (!recipe.is_object() || !recipe.contains("kind"))
    throw std::invalid_argument("amplitude recipe: missing kind");
  const std::string kind = recipe.at("kind").get<std::string>();
  BuiltAmplitude out;
  out.params = recipe;

  if (kind == "mandelstam") {
    const double v = recipe.value("v", 4.0), w = recipe.value("w", 16.0);
    const double alpha = recipe.value("alpha", -1.5);
    const double delta = recipe.value("delta", 2.0);
    const double sigma = recipe.value("sigma", 0.5);
    const double mu = recipe.value("mu", 0.5);
    const double scale = recipe.value("scale", 1.0);
    const int nx = recipe.value("nx", 64), ny = recipe.value("ny", 64);
    const double xmax = recipe.value("xmax", 1e4);
    const double ymax = recipe.value("ymax", 1e4);
    if (!(scale >= 0.0) || nx < 8 || ny < 8)
      throw std::invalid_argument("mandelstam: need scale >= 0, nx,ny >= 8");
    SpectralGrid2D psi = build_positive_template(v, w, alpha, delta, sigma, mu,
                                                 scale, nx, ny, xmax, ymax);
    out.model = std::make_shared<MandelstamAmplitude>(std::move(psi));
    out.tag = "mandelstam";
    return out;
  }

  if (kind == "regge" || kind == "fixed-pole" || kind == "double-pole") {
    Trajectory tr = recipe.contains("trajectory")
                        ? trajectory_from_json(recipe.at("trajectory"))
                        : Trajectory::fixed_pole(1.0);
    ResidueSpec res = recipe.contains("residue")
                          ? residue_from_json(recipe.at("residue"))
                          : ResidueSpec(1.0, 2.0);
    const bool double_pole =
        kind == "double-pole" || recipe.value("double_pole", false);
    ReggeModel model(tr, res, BumpWeight(17.0, 18.0), double_pole);
    out.model = std::make_shared<ReggeAmplitude>(std::move(model));
    out.tag = double_pole ? "double-pole" : (tr.fixed() ? "fixed-pole" : "rising");
    return out;
  }

  if (kind == "froissart") {
    FroissartSpec spec;
    spec.gamma = CutTrajectory(recipe.value("kappa", 0.8));
    spec.rho = BumpWeight(recipe.value("rho_lo", 0.3), recipe.value("rho_hi", 0.9));
    spec.beta = ResidueSpec(recipe.value("beta_a", 1.0), recipe.value("beta_q", 2.0));
    spec.p = recipe.value("p", 0.5);
    spec.validate(); // invariant name propagates in the exception message
    out.model = std::make_shared<FroissartAmplitude>(FroissartModel(spec));
    out.tag = "froissart";
    return out;
  }

  if (kind == "khuri") {
    auto spec = std::make_shared<KhuriPoleSpec>(khuri_from_json(recipe));
    out.model = std::make_shared<LambdaAmplitude>(
        [spec](complex s, complex t) {
          return regge_reconstruct_symmetric(*spec, s, t);
        },
        "khuri");
    out.tag = "khuri";
    out.params["intercept"] = intercept(*spec);
    return out;
  }

  if (kind == "fixpoint") {
    const std::string path =
        recipe.value("checkpoint", out_dir + "/checkpoint.bin");
    const FixpointState st = read_checkpoint(path);
    out.model = std::make_shared<FixpointAmplitude>(st);
    out.tag = "fixpoint";
    out.params = json{{"kind", "fixpoint"}, {"checkpoint", path},
                      {"iteration", st.iteration}};
    return out;
  }

  throw std::invalid_argument("amplitude recipe: unknown kind " + kind);
}

int cmd_build(const json& config, const CliOptions& opts) {
  const BuiltAmplitude built =
      make_amplitude(config.at("amplitude"), opts.out_dir);
  json artifact{{"kind", built.params.value("kind", built.tag)},
                {"tag", built.tag},
                {"parameters", built.params}};

  // sampled cache: forward boundary values on the configured grid
  const GridSpec grid = grid_from_json(config.value("grid", json::object()),
                                       GridSpec{4.5, 1e3, 16, true});
  const double t0 = config.value("cache_t", -0.5);
  json cache = json::array();
  for (double s : grid.points()) {
    // the pole-ansatz reconstruction is defined on the real s axis only
    const complex f = built.tag == "khuri"
                          ? built.model->value(complex(s, 0.0), t0)
                          : built.model->boundary_value(s, t0, Side::Plus);
    cache.push_back(json{{"s", s}, {"re", f.real()}, {"im", f.imag()}});
  }
  artifact["cache"] = json{{"t", t0}, {"forward", cache}};

  if (built.tag == "mandelstam") {
    const auto& amp = dynamic_cast<const MandelstamAmplitude&>(*built.model);
    double min_sample = 0.0;
    for (double v : amp.psi().samples()) min_sample = std::min(min_sample, v);
    const TemplateBoundReport rep = check_template_bounds(
        amp.psi(), built.params.value("alpha", -1.5),
        built.params.value("delta", 2.0), built.params.value("sigma", 0.5),
        built.params.value("mu", 0.5));
    artifact["positivity"] = json{{"min_sample", min_sample},
                                  {"upper_c", rep.fitted_upper_c},
                                  {"lower_c", rep.fitted_lower_c},
                                  {"pass", rep.pass && min_sample >= 0.0}};
  }

  write_file(opts.out_dir + "/artifact.json", artifact.dump(2) + "\n");
  return kExitPass;
}

int cmd_iterate(const json& config, const CliOptions& opts) {
  FixpointConfig fc;
  if (config.contains("fixpoint")) {
    const json& j = config.at("fixpoint");
    fc.tol = j.value("tol", fc.tol);
    fc.max_iterations = j.value("max_iterations", fc.max_iterations);
    fc.checkpoint_every = j.value("checkpoint_every", fc.checkpoint_every);
    fc.kernel_order = j.value("kernel_order", fc.kernel_order);
    fc.at_cache_n = j.value("at_cache_n", fc.at_cache_n);
    fc.nx = j.value("nx", fc.nx);
    fc.ny = j.value("ny", fc.ny);
    fc.t_max = j.value("t_max", fc.t_max);
    fc.omega_scale = j.value("omega_scale", fc.omega_scale);
    fc.omega_alpha = j.value("omega_alpha", fc.omega_alpha);
    fc.omega_delta = j.value("omega_delta", fc.omega_delta);
  }
  if (opts.tol > 0.0) fc.tol = opts.tol;
  fc.validate();

  const std::string path = opts.out_dir + "/checkpoint.bin";
  FixpointState state;
  if (opts.resume && std::filesystem::exists(path))
    state = read_checkpoint(path);
  else
    state = make_initial_state(fc);

  iterate_upsilon(state, fc, path);
  write_checkpoint(path, state);

  const char* status = state.status == FixpointStatus::Converged ? "converged"
                       : state.status == FixpointStatus::Diverged
                           ? "diverged"
                           : "max_iterations";
  json report{{"status", status},
              {"iterations", state.iteration},
              {"tol", fc.tol},
              {"residuals", state.residuals},
              {"ratios", state.ratios},
              {"support_leak", support_check(state.psi)}};
  write_file(opts.out_dir + "/convergence.json", report.dump(2) + "\n");
  return state.status == FixpointStatus::Converged ? kExitPass
                                                   : kExitNoConvergence;
}

namespace {

json run_one_check(const std::string& name, const AmplitudeModel& A,
                   const json& config, double tol,
                   const PartialWaveTable* tbl) {
  json r{{"name", name}};
  if (name == "crossing") {
    std::mt19937 rng(20260823u);
    std::uniform_real_distribution<double> re(-6.0, 6.0), im(0.5, 3.0);
    double worst = 0.0;
    const int n = config.value("crossing_points", 100);
    for (int i = 0; i < n; ++i) {
      const complex s(re(rng), im(rng)), t(re(rng), im(rng));
      worst = std::max(worst, crossing_residual(A, s, t));
    }
    r["worst"] = worst;
    r["pass"] = worst <= tol;
  } else if (name == "elastic") {
    const ElasticReport rep = elastic_residual(*tbl);
    const double gate = config.value("tol_elastic", 1e-4);
    r["worst"] = rep.worst;
    r["pass"] = rep.worst <= gate;
  } else if (name == "inelastic") {
    const InelasticReport rep = inelastic_check(*tbl, 1e-12);
    r["worst"] = rep.worst;
    r["pass"] = rep.pass;
  } else if (name == "linear") {
    const LinearUnitarity rep =
        linear_unitarity_check(*tbl, config.value("s1", 20.0));
    r["c1"] = rep.c1;
    r["c2"] = rep.c2;
    r["scale"] = rep.scale;
    r["pass"] = rep.c2_finite && rep.scale > 0.0;
  } else if (name == "envelope") {
    auto bv = [&](double s, double t) {
      return A.boundary_value(s, t, Side::Plus);
    };
    const EnvelopeFit fit = shrink_envelope_check(
        bv, config.value("env_m", 1), config.value("env_n", 1),
        config.value("env_p", 0.51), config.value("env_s_max", 1e6));
    r["c"] = fit.c;
    r["worst_s"] = fit.worst_s;
    r["worst_t"] = fit.worst_t;
    r["pass"] = std::isfinite(fit.c) && fit.c > 0.0;
  } else if (name == "asymptotics") {
    const GridSpec window =
        grid_from_json(config.value("fit_window", json::object()),
                       GridSpec{1e3, 1e8, 16, true});
    const ExponentFit fit = fit_asymptotic_exponents(A, window);
    const double a0 = config.value("expect_alpha", 1.0);
    const double d0 = config.value("expect_delta", 3.0);
    const double ta = config.value("tol_alpha", 0.05);
    const double td = config.value("tol_delta", 0.5);
    r["fit"] = fit.to_json();
    r["pass"] = std::abs(fit.alpha - a0) <= ta && std::abs(fit.delta - d0) <= td;
  } else {
    throw std::invalid_argument("unknown check name: " + name);
  }
  return r;
}

} // namespace

int cmd_check(const json& config, const CliOptions& opts) {
  const BuiltAmplitude built =
      make_amplitude(config.at("amplitude"), opts.out_dir);
  std::vector<std::string> checks;
  if (config.contains("checks"))
    checks = config.at("checks").get<std::vector<std::string>>();
  const double tol = opts.tol > 0.0 ? opts.tol : config.value("tol", 1e-10);

  // one shared partial wave table for the pw-based checks
  PartialWaveTable tbl;
  bool need_pw = false;
  for (const auto& c : checks)
    need_pw = need_pw || c == "elastic" || c == "inelastic" || c == "linear";
  if (need_pw) {
    const GridSpec grid =
        grid_from_json(config.value("pw_grid", json::object()),
                       GridSpec{4.5, 100.0, 10, true});
    tbl = project_pw_table(*built.model, grid.points(),
                           config.value("l_max", 8));
  }

  json results = json::array();
  bool pass = true;
  double worst = 0.0;
  for (const auto& name : checks) {
    json r = run_one_check(name, *built.model, config, tol,
                           need_pw ? &tbl : nullptr);
    pass = pass && r.value("pass", false);
    worst = std::max(worst, r.value("worst", 0.0));
    results.push_back(std::move(r));
  }

  json cert{{"amplitude", built.tag},
            {"tol", tol},
            {"checks", results},
            {"worst", worst},
            {"pass", pass}};
  write_file(opts.out_dir + "/certificate.json", cert.dump(2) + "\n");
  return pass ? kExitPass : kExitCheckFailure;
}

int cmd_report(const json& config, const CliOptions& opts) {
  const BuiltAmplitude built =
      make_amplitude(config.at("amplitude"), opts.out_dir);
  const AmplitudeModel& A = *built.model;

  // absent table list -> all tables; present-but-empty -> headers only
  std::vector<std::string> tables{"sigma_tot", "forward_peak", "pw", "fits"};
  if (config.contains("tables"))
    tables = config.at("tables").get<std::vector<std::string>>();
  auto enabled = [&](const std::string& name) {
    for (const auto& t : tables)
      if (t == name) return true;
    return false;
  };

  std::string sig = "s,sigma_tot\n";
  if (enabled("sigma_tot")) {
    const GridSpec grid = grid_from_json(config.value("grid", json::object()),
                                         GridSpec{10.0, 1e6, 13, true});
    for (double s : grid.points())
      sig += fmt(s) + "," + fmt(total_cross_section(A, s)) + "\n";
  }
  write_file(opts.out_dir + "/sigma_tot.csv", sig);

  std::string peak = "t,re_f,im_f\n";
  if (enabled("forward_peak")) {
    const double s0 = config.value("peak_s", 1e4);
    const int nt = config.value("peak_n", 25);
    for (int i = 0; i < nt; ++i) {
      const double t = -1.0 * i / (nt - 1);
      const complex f = A.boundary_value(s0, t, Side::Plus);
      peak += fmt(t) + "," + fmt(f.real()) + "," + fmt(f.imag()) + "\n";
    }
  }
  write_file(opts.out_dir + "/forward_peak.csv", peak);

  std::string pw = "s,l,re_a,im_a\n";
  if (enabled("pw")) {
    const GridSpec grid =
        grid_from_json(config.value("pw_grid", json::object()),
                       GridSpec{4.5, 100.0, 10, true});
    pw = project_pw_table(A, grid.points(), config.value("l_max", 8)).to_csv();
  }
  write_file(opts.out_dir + "/pw.csv", pw);

  json fits{{"amplitude", built.tag}};
  if (enabled("fits")) {
    const GridSpec window =
        grid_from_json(config.value("fit_window", json::object()),
                       GridSpec{1e3, 1e8, 16, true});
    fits["exponents"] = fit_asymptotic_exponents(A, window).to_json();
  }
  write_file(opts.out_dir + "/fits.json", fits.dump(2) + "\n");
  return kExitPass;
}

int run_forge(const CliOptions& opts) {
  try {
    if (opts.threads > 0) set_thread_count(opts.threads);
    std::ifstream in(opts.config_path);
    if (!in)
      throw std::invalid_argument("cannot open config " + opts.config_path);
    const json config = json::parse(in);
    if (!opts.out_dir.empty())
      std::filesystem::create_directories(opts.out_dir);

    if (opts.command == "build") return cmd_build(config, opts);
    if (opts.command == "iterate") return cmd_iterate(config, opts);
    if (opts.command == "check") return cmd_check(config, opts);
    if (opts.command == "report") return cmd_report(config, opts);
    throw std::invalid_argument("unknown command " + opts.command);
  } catch (const json::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNoConvergence;
  }
}

} // namespace mandelstam::cli

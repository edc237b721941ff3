#include "mandelstam/fixpoint.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "mandelstam/quadrature.hpp"
#include "mandelstam/threading.hpp"

namespace mandelstam {

namespace {

constexpr double kEps = 1e-12;

// breakpoints in u for the substitution v = vmax - u^2, v in [vmin, vmax]:
// geometric in v (the integrand is power-law over decades) plus extra
// refinement toward the removed square-root edge at v = vmax (u = 0)
std::vector<double> sqrt_sub_breaks(double vmin, double vmax) {
  std::vector<double> vs{vmin};
  const double ratio = std::sqrt(10.0);
  for (double v = vmin * ratio; v < vmax; v *= ratio) vs.push_back(v);
  const double span = vmax - vmin;
  for (double f : {0.25, 1.0 / 16, 1.0 / 64}) vs.push_back(vmax - span * f);
  vs.push_back(vmax);
  std::sort(vs.begin(), vs.end());
  std::vector<double> us;
  us.reserve(vs.size());
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
    const double d = vmax - *it;
    const double u = d > 0.0 ? std::sqrt(d) : 0.0;
    if (us.empty() || u > us.back() + kEps * std::sqrt(span)) us.push_back(u);
  }
  return us;
}

complex sub_panel_integral(const std::function<complex(double)>& g,
                           const std::vector<double>& ubreaks, int order) {
  const QuadRule& base = gauss_legendre(order);
  complex acc = 0.0;
  for (std::size_t k = 0; k + 1 < ubreaks.size(); ++k) {
    const double a = ubreaks[k], b = ubreaks[k + 1];
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t q = 0; q < base.size(); ++q)
      acc += half * base.w[q] * g(mid + half * base.x[q]);
  }
  return acc;
}

// linear interpolation in log t of per-row absorptive samples
struct AtCache {
  double l0 = 0.0, dl = 0.0;
  std::vector<complex> val;

  complex operator()(double t) const {
    const double p = (std::log(t) - l0) / dl;
    if (p <= 0.0) return val.front();
    const auto n = val.size();
    if (p >= double(n - 1)) return val.back();
    const auto k = static_cast<std::size_t>(p);
    const double f = p - double(k);
    return (1.0 - f) * val[k] + f * val[k + 1];
  }
};

std::string status_name(FixpointStatus st) {
  switch (st) {
    case FixpointStatus::NotStarted: return "not-started";
    case FixpointStatus::Converged: return "converged";
    case FixpointStatus::MaxIterations: return "max-iterations";
    case FixpointStatus::Diverged: return "diverged";
  }
  return "unknown";
}

FixpointStatus status_from_name(const std::string& s) {
  if (s == "converged") return FixpointStatus::Converged;
  if (s == "max-iterations") return FixpointStatus::MaxIterations;
  if (s == "diverged") return FixpointStatus::Diverged;
  return FixpointStatus::NotStarted;
}

nlohmann::json grid_meta(const SpectralGrid2D& g) {
  nlohmann::json j = g.to_json();
  j.erase("values");
  return j;
}

constexpr char kMagic[8] = {'M', 'F', 'P', 'C', 'K', 'P', 'T', '1'};

} // namespace

double kernel_argument(double s, double t, double t1, double t2) {
  return t * t + t1 * t1 + t2 * t2 - 2.0 * (t * t1 + t * t2 + t1 * t2) -
         4.0 * t * t1 * t2 / (s - 4.0);
}

void kernel_roots(double s, double t, double t1, double& tau_minus,
                  double& tau_plus) {
  const double c = 1.0 / (s - 4.0);
  const double b = t + t1 + 2.0 * t * t1 * c;
  const double d =
      2.0 * std::sqrt(t * t1 * (1.0 + t * c) * (1.0 + t1 * c));
  tau_plus = b + d;
  // product of roots is (t-t1)^2; dividing avoids cancellation in b - d
  const double dt = t - t1;
  tau_minus = dt * dt / tau_plus;
}

double mandelstam_kernel(double s, double t, double t1, double t2) {
  if (!(s > 4.0)) throw std::domain_error("mandelstam_kernel: need s > 4");
  const double arg = kernel_argument(s, t, t1, t2);
  if (arg < 0.0) return 0.0;
  if (arg == 0.0)
    throw std::domain_error("mandelstam_kernel: singular support boundary");
  return 2.0 / (pi * std::sqrt(s * (s - 4.0))) / std::sqrt(arg);
}

double kernel_t1_max(double s, double t) {
  if (!(s > 4.0)) throw std::domain_error("kernel_t1_max: need s > 4");
  if (!(t > 4.0)) return 4.0;
  double tm, tp;
  kernel_roots(s, t, 4.0, tm, tp);
  if (tm <= 4.0) return 4.0; // empty support: t <= 16 + 64/(s-4)
  // tau_-(t1) decreases monotonically (product of roots falls, tau_+ grows)
  double lo = 4.0, hi = t;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    kernel_roots(s, t, mid, tm, tp);
    (tm > 4.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double unitarity_image(const std::function<complex(double)>& abs_t_plus,
                       double s, double t, const Cutoff& cutoff, int order,
                       double* imag_part) {
  if (imag_part) *imag_part = 0.0;
  if (!(s > 4.0)) throw std::domain_error("unitarity_image: need s > 4");
  const double lam = cutoff(s);
  if (lam == 0.0) return 0.0;
  const double t1max = kernel_t1_max(s, t);
  if (t1max <= 4.0 + kEps) return 0.0;

  const double pref = 2.0 / (pi * std::sqrt(s * (s - 4.0)));
  const auto wbreaks = sqrt_sub_breaks(4.0, t1max);

  auto inner = [&](double t1) -> complex {
    double tm, tp;
    kernel_roots(s, t, t1, tm, tp);
    if (tm <= 4.0) return 0.0;
    const double gap = tp - tm;
    const auto ubreaks = sqrt_sub_breaks(4.0, tm);
    return 2.0 * sub_panel_integral(
                     [&](double u) {
                       return std::conj(abs_t_plus(tm - u * u)) /
                              std::sqrt(gap + u * u);
                     },
                     ubreaks, order);
  };

  const complex acc =
      sub_panel_integral(
          [&](double w) {
            const double t1 = t1max - w * w;
            return 2.0 * w * abs_t_plus(t1) * inner(t1);
          },
          wbreaks, order) *
      pref * lam;
  if (imag_part) *imag_part = acc.imag();
  return acc.real();
}

void FixpointConfig::validate() const {
  if (!(-0.5 + norm.mu < norm.gamma && norm.gamma < norm.delta &&
        norm.delta < 0.0))
    throw std::invalid_argument(
        "FixpointConfig: need -1/2 + mu < gamma < delta < 0");
  if (!(tol > 0.0)) throw std::invalid_argument("FixpointConfig: tol <= 0");
  if (max_iterations < 1)
    throw std::invalid_argument("FixpointConfig: max_iterations < 1");
  if (nx < 8 || ny < 8)
    throw std::invalid_argument("FixpointConfig: grid too coarse");
  if (!(t_max > 32.0))
    throw std::invalid_argument("FixpointConfig: t_max too small");
  if (!(omega_scale >= 0.0))
    throw std::invalid_argument("FixpointConfig: omega_scale < 0");
  if (!(cutoff.lower() > 4.0 && cutoff.upper() > cutoff.lower()))
    throw std::invalid_argument("FixpointConfig: bad cutoff window");
}

FixpointState make_initial_state(const FixpointConfig& cfg) {
  cfg.validate();
  FixpointState st;
  st.psi = SpectralGrid2D(4.0, 16.0, cfg.cutoff.upper(), cfg.t_max, cfg.nx,
                          cfg.ny, TailModel2D{-0.5, 2.0, 2.0});
  st.omega = build_positive_template(16.0, 16.0, cfg.omega_alpha,
                                     cfg.omega_delta, 0.25, 0.25,
                                     cfg.omega_scale, cfg.nx, cfg.ny,
                                     cfg.t_max, cfg.t_max);
  return st;
}

SpectralGrid2D upsilon_image(const SpectralGrid2D& psi,
                             const SpectralGrid2D& omega,
                             const FixpointConfig& cfg) {
  SpectralGrid2D out(psi.v(), psi.w(), psi.xmax(), psi.ymax(), psi.nx(),
                     psi.ny(), psi.tail());
  const bool have_psi = psi.max_abs() > 0.0;
  const bool have_omega = omega.max_abs() > 0.0;
  const int m = cfg.at_cache_n;
  const double l0 = std::log(4.0);
  const double dl = (std::log(psi.ymax()) - l0) / (m - 1);

  parallel_for(static_cast<std::size_t>(psi.nx()), [&](std::size_t i) {
    const double s = psi.xnode(static_cast<int>(i));
    if (s <= 4.0 + 1e-10) return;
    if (cfg.cutoff(s) == 0.0) return;
    // support edge above the sampled window: the whole row vanishes
    if (support_threshold(s) >= psi.ymax()) return;

    AtCache cache;
    cache.l0 = l0;
    cache.dl = dl;
    cache.val.resize(m);
    for (int k = 0; k < m; ++k) {
      const double tk = std::exp(l0 + k * dl);
      complex a = 0.0;
      if (have_psi) a += abs_t_from_spectral(psi, s, tk, Side::Plus);
      if (have_omega) a += abs_t_from_spectral(omega, s, tk, Side::Plus);
      cache.val[k] = a;
    }
    auto at = [&cache](double t) { return cache(t); };

    for (int j = 0; j < psi.ny(); ++j)
      out.set(static_cast<int>(i), j,
              unitarity_image(at, s, psi.ynode(j), cfg.cutoff,
                              cfg.kernel_order));
  });
  return out;
}

double fixpoint_delta_norm(const SpectralGrid2D& a, const SpectralGrid2D& b,
                           const FixpointConfig& cfg) {
  HolderNormParams p = cfg.norm;
  p.delta = p.gamma;
  std::vector<double> sgrid;
  const double lo = 4.2, hi = cfg.cutoff.upper();
  for (int k = 0; k < 16; ++k)
    sgrid.push_back(lo * std::pow(hi / lo, k / 15.0));
  auto f = [&](double s, double t) { return a(s, t) - b(s, t); };
  return norm_gamma_delta(f, sgrid, 16.0, 10.0 * cfg.t_max, p);
}

FixpointState& iterate_upsilon(FixpointState& state, const FixpointConfig& cfg,
                               const std::string& checkpoint_path) {
  cfg.validate();
  state.status = FixpointStatus::MaxIterations;
  while (state.iteration < cfg.max_iterations) {
    SpectralGrid2D next = upsilon_image(state.psi, state.omega, cfg);
    const double d = fixpoint_delta_norm(next, state.psi, cfg);
    if (!state.residuals.empty()) {
      const double prev = state.residuals.back();
      state.ratios.push_back(prev > 0.0 ? d / prev : 0.0);
    }
    state.residuals.push_back(d);
    state.psi = std::move(next);
    ++state.iteration;

    if (!checkpoint_path.empty() &&
        state.iteration % std::max(1, cfg.checkpoint_every) == 0)
      write_checkpoint(checkpoint_path, state);

    if (d < cfg.tol) {
      state.status = FixpointStatus::Converged;
      break;
    }
    const auto& r = state.ratios;
    if (r.size() >= 3 && r[r.size() - 1] >= 1.0 && r[r.size() - 2] >= 1.0 &&
        r[r.size() - 3] >= 1.0) {
      state.status = FixpointStatus::Diverged;
      break;
    }
  }
  if (!checkpoint_path.empty()) write_checkpoint(checkpoint_path, state);
  return state;
}

double support_check(const SpectralGrid2D& psi) {
  double leak = 0.0;
  for (int i = 0; i < psi.nx(); ++i) {
    const double s = psi.xnode(i);
    const double edge =
        s > 4.0 ? support_threshold(s) : std::numeric_limits<double>::infinity();
    for (int j = 0; j < psi.ny(); ++j)
      if (psi.ynode(j) < edge * (1.0 - kEps))
        leak = std::max(leak, std::abs(psi.sample_at(i, j)));
  }
  return leak;
}

void write_checkpoint(const std::string& path, const FixpointState& state) {
  nlohmann::json header{{"iteration", state.iteration},
                        {"status", status_name(state.status)},
                        {"residuals", state.residuals},
                        {"ratios", state.ratios},
                        {"psi", grid_meta(state.psi)},
                        {"omega", grid_meta(state.omega)}};
  const std::string h = header.dump();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("checkpoint: cannot open " + path);
  out.write(kMagic, sizeof(kMagic));
  const std::uint64_t hlen = h.size();
  out.write(reinterpret_cast<const char*>(&hlen), sizeof(hlen));
  out.write(h.data(), static_cast<std::streamsize>(h.size()));
  auto block = [&](const SpectralGrid2D& g) {
    out.write(reinterpret_cast<const char*>(g.samples().data()),
              static_cast<std::streamsize>(g.samples().size() *
                                           sizeof(double)));
  };
  block(state.psi);
  block(state.omega);
  if (!out) throw std::runtime_error("checkpoint: write failed: " + path);
}

FixpointState read_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("checkpoint: cannot open " + path);
  char magic[sizeof(kMagic)];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("checkpoint: bad magic in " + path);
  std::uint64_t hlen = 0;
  in.read(reinterpret_cast<char*>(&hlen), sizeof(hlen));
  std::string h(hlen, '\0');
  in.read(h.data(), static_cast<std::streamsize>(hlen));
  if (!in) throw std::runtime_error("checkpoint: truncated header in " + path);
  nlohmann::json header = nlohmann::json::parse(h);

  auto grid = [&](const char* key) {
    nlohmann::json meta = header.at(key);
    const auto n = static_cast<std::size_t>(meta.at("nx").get<int>()) *
                   static_cast<std::size_t>(meta.at("ny").get<int>());
    std::vector<double> vals(n);
    in.read(reinterpret_cast<char*>(vals.data()),
            static_cast<std::streamsize>(n * sizeof(double)));
    if (!in)
      throw std::runtime_error("checkpoint: truncated samples in " + path);
    meta["values"] = vals;
    return SpectralGrid2D::from_json(meta);
  };

  FixpointState st;
  st.psi = grid("psi");
  st.omega = grid("omega");
  st.iteration = header.at("iteration").get<int>();
  st.status = status_from_name(header.at("status").get<std::string>());
  st.residuals = header.at("residuals").get<std::vector<double>>();
  st.ratios = header.at("ratios").get<std::vector<double>>();
  return st;
}

FixpointAmplitude::FixpointAmplitude(SpectralGrid2D psi, SpectralGrid2D omega)
    : e_(std::move(psi)), b_(std::move(omega)) {}

complex FixpointAmplitude::value(complex s, complex t) const {
  return e_.value(s, t) + b_.value(s, t);
}

complex FixpointAmplitude::boundary_value(double s, double t,
                                          Side side) const {
  return e_.boundary_value(s, t, side) + b_.boundary_value(s, t, side);
}

complex FixpointAmplitude::abs_s(double s, double t) const {
  return e_.abs_s(s, t) + b_.abs_s(s, t);
}

complex FixpointAmplitude::abs_t(double s, double t) const {
  return e_.abs_t(s, t) + b_.abs_t(s, t);
}

std::vector<double> FixpointAmplitude::t_cut_breaks(double tq) const {
  return merge_panel_breaks(e_.t_cut_breaks(tq), b_.t_cut_breaks(tq));
}

} // namespace mandelstam

#include "mandelstam/regge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mandelstam/dispersion.hpp"
#include "mandelstam/quadrature.hpp"
#include "mandelstam/threading.hpp"

namespace mandelstam {

namespace {

// panels for dispersive cut integrals on [4, hi]: dyadic threshold
// refinement against the sqrt(x-4) cusp, then geometric spacing
std::vector<double> cut_breaks(double hi) {
  std::vector<double> br{4.0};
  const double first = 4.0 * std::pow(10.0, 0.125);
  for (int k = 10; k >= 1; --k) br.push_back(4.0 + (first - 4.0) * std::pow(0.5, k));
  for (double x = first; x < hi; x *= std::pow(10.0, 0.125)) br.push_back(x);
  br.push_back(hi);
  return br;
}

complex branch_log(double d, Side side) {
  if (d > 0.0) return std::log(d);
  return complex(std::log(-d), side == Side::Plus ? -pi : pi);
}

complex cot(complex z) { return std::cos(z) / std::sin(z); }

} // namespace

Trajectory Trajectory::fixed_pole(double alpha0) {
  Trajectory tr;
  tr.fixed_ = true;
  tr.alpha_inf_ = alpha0;
  return tr;
}

Trajectory Trajectory::rising(double alpha_inf, double a, double p) {
  if (!(p > 1.5)) throw std::invalid_argument("Trajectory: need p > 3/2");
  if (!(a >= 0.0)) throw std::invalid_argument("Trajectory: need a >= 0");
  Trajectory tr;
  tr.fixed_ = false;
  tr.alpha_inf_ = alpha_inf;
  tr.a_ = a;
  tr.p_ = p;
  tr.breaks_ = cut_breaks(1e10);
  return tr;
}

double Trajectory::im_alpha(double x) const {
  if (fixed_ || x <= 4.0) return 0.0;
  return a_ * std::sqrt(x - 4.0) * std::pow(4.0 / x, p_);
}

complex Trajectory::operator()(complex t) const {
  if (fixed_) return alpha_inf_;
  auto f = [this](double x) { return complex(im_alpha(x)); };
  return alpha_inf_ + cauchy_line(f, breaks_, t) / pi;
}

complex Trajectory::boundary(double t, Side side) const {
  if (fixed_) return alpha_inf_;
  if (t <= 4.0) return (*this)(complex(t));
  auto f = [this](double x) { return complex(im_alpha(x)); };
  return alpha_inf_ + cauchy_line_boundary(f, breaks_, t, side) / pi;
}

double Trajectory::intercept() const { return (*this)(complex(0.0)).real(); }

nlohmann::json Trajectory::to_json() const {
  return {{"kind", fixed_ ? "fixed" : "rising"},
          {"alpha_inf", alpha_inf_},
          {"a", a_},
          {"p", p_}};
}

Trajectory Trajectory::from_json(const nlohmann::json& j) {
  if (j.at("kind").get<std::string>() == "fixed")
    return fixed_pole(j.at("alpha_inf").get<double>());
  return rising(j.at("alpha_inf").get<double>(), j.at("a").get<double>(),
                j.at("p").get<double>());
}

TrajectoryReport check_trajectory(const Trajectory& tr,
                                  bool froissart_constrained) {
  TrajectoryReport r;
  r.im_positive = true;
  for (double t = 4.01; t < 1e5; t *= 1.7)
    if (tr.im_alpha(t) < 0.0) r.im_positive = false;
  r.real_below_cut = true;
  std::vector<double> vals;
  for (double t = -30.0; t <= 3.5; t += 0.5) {
    const complex a = tr(complex(t));
    if (std::abs(a.imag()) > 1e-10 * (1.0 + std::abs(a.real())))
      r.real_below_cut = false;
    vals.push_back(a.real());
  }
  r.convex_increasing = true;
  for (std::size_t k = 1; k < vals.size(); ++k) {
    if (vals[k] < vals[k - 1] - 1e-12) r.convex_increasing = false;
    if (k + 1 < vals.size() &&
        vals[k + 1] - 2.0 * vals[k] + vals[k - 1] < -1e-10)
      r.convex_increasing = false;
  }
  r.intercept_ok =
      !froissart_constrained || tr.intercept() <= 1.0 + 1e-12;
  r.pass = r.im_positive && r.real_below_cut && r.convex_increasing &&
           r.intercept_ok;
  return r;
}

ResidueSpec::ResidueSpec(double a, double q, std::vector<double> ghost_zeros)
    : a_(a), q_(q), ghost_zeros_(std::move(ghost_zeros)) {
  if (!(q > 1.5)) throw std::invalid_argument("ResidueSpec: need q > 3/2");
  for (double z : ghost_zeros_)
    if (z >= 0.0)
      throw std::invalid_argument("ResidueSpec: ghost zeros must sit at t < 0");
  breaks_ = cut_breaks(1e10);
}

complex ResidueSpec::beta1(complex t) const {
  auto rho = [this](double x) {
    return complex(a_ * std::sqrt(x - 4.0) * std::pow(4.0 / x, q_));
  };
  complex v = cauchy_line(rho, breaks_, t) / pi;
  for (double z : ghost_zeros_) v *= 1.0 - t / z;
  return v;
}

complex ResidueSpec::beta1_boundary(double t, Side side) const {
  if (t <= 4.0) return beta1(complex(t));
  auto rho = [this](double x) {
    return complex(a_ * std::sqrt(x - 4.0) * std::pow(4.0 / x, q_));
  };
  complex v = cauchy_line_boundary(rho, breaks_, t, side) / pi;
  for (double z : ghost_zeros_) v *= 1.0 - t / z;
  return v;
}

nlohmann::json ResidueSpec::to_json() const {
  return {{"a", a_}, {"q", q_}, {"ghost_zeros", ghost_zeros_}};
}

ResidueSpec ResidueSpec::from_json(const nlohmann::json& j) {
  return ResidueSpec(j.at("a").get<double>(), j.at("q").get<double>(),
                     j.at("ghost_zeros").get<std::vector<double>>());
}

ReggeModel::ReggeModel(Trajectory tr, ResidueSpec res, BumpWeight sigma,
                       bool double_pole)
    : tr_(std::move(tr)), res_(std::move(res)), sigma_(sigma),
      double_pole_(double_pole), h_(sigma), rule_(sigma_.rule(32)) {}

complex ReggeModel::beta0(complex w) const {
  const complex g = tr_.gamma(w);
  complex acc = 0.0;
  for (std::size_t i = 0; i < rule_.size(); ++i)
    acc += rule_.w[i] * std::exp(-g * std::log(complex(rule_.x[i]) - w - 1.0));
  return acc;
}

complex ReggeModel::beta(complex w) const { return res_.beta1(w) * beta0(w); }

complex ReggeModel::prefactor(complex w) const {
  const complex g = tr_.gamma(w);
  const complex s = std::sin(pi * g);
  if (std::abs(s) < 1e-14)
    throw std::domain_error("ReggeModel: uncancelled sin(pi gamma) zero");
  return -beta(w) / s;
}

complex ReggeModel::term(complex x, complex y) const {
  const complex w = 4.0 - x - y;
  const complex g = tr_.gamma(w);
  complex ix = 0.0, iy = 0.0;
  for (std::size_t i = 0; i < rule_.size(); ++i) {
    ix += rule_.w[i] * std::exp(g * std::log(complex(rule_.x[i]) - x));
    iy += rule_.w[i] * std::exp(g * std::log(complex(rule_.x[i]) - y));
  }
  complex v = prefactor(w) * ix * iy;
  if (double_pole_)
    v *= 0.5 * (h_.L(x) + h_.L(y) - h_.L(w + 1.0));
  return v;
}

complex ReggeModel::term_boundary(double x, Side sx, double y, Side sy,
                                  Side sw) const {
  const double w = 4.0 - x - y;
  const complex g = tr_.gamma_boundary(w, sw);
  complex ix = 0.0, iy = 0.0, b0 = 0.0;
  for (std::size_t i = 0; i < rule_.size(); ++i) {
    ix += rule_.w[i] * std::exp(g * branch_log(rule_.x[i] - x, sx));
    iy += rule_.w[i] * std::exp(g * branch_log(rule_.x[i] - y, sy));
    b0 += rule_.w[i] * std::exp(-g * branch_log(rule_.x[i] - w - 1.0, sw));
  }
  const complex sn = std::sin(pi * g);
  if (std::abs(sn) < 1e-14)
    throw std::domain_error("ReggeModel: uncancelled sin(pi gamma) zero");
  complex v = -res_.beta1_boundary(w, sw) * b0 / sn * ix * iy;
  if (double_pole_) {
    auto lb = [this](double arg, Side side) {
      return arg > 16.5 ? h_.L(arg, side) : h_.L(complex(arg));
    };
    v *= 0.5 * (lb(x, sx) + lb(y, sy) - lb(w + 1.0, sw));
  }
  return v;
}

double ReggeModel::N(double s, double t) const {
  if (!(s >= 18.0)) throw std::domain_error("ReggeModel::N: need s >= 18");
  if (!(t <= 0.0 && t >= 4.0 - s))
    throw std::domain_error("ReggeModel::N: need 4-s <= t <= 0");
  const double g = tr_(complex(t)).real() * 0.5;
  const double b = beta(complex(t)).real();
  double is = 0.0, iu = 0.0;
  for (std::size_t i = 0; i < rule_.size(); ++i) {
    is += rule_.w[i] * std::pow(s - rule_.x[i], g);
    iu += rule_.w[i] * std::pow(rule_.x[i] - 4.0 + s + t, g);
  }
  return b * is * iu;
}

double ReggeModel::M(double s, double t) const {
  const double g = tr_(complex(t)).real() * 0.5;
  const double c = std::cos(pi * g) / std::sin(pi * g);
  return -c * N(s, t);
}

ReggeAmplitude::ReggeAmplitude(ReggeModel m, ReggeAssembly assembly)
    : m_(std::move(m)), assembly_(assembly) {}

complex ReggeAmplitude::value(complex s, complex t) const {
  const complex u = 4.0 - s - t;
  switch (assembly_) {
    case ReggeAssembly::Full:
      return m_.term(s, u) + m_.term(s, t) + m_.term(t, u);
    case ReggeAssembly::SPair:
      return m_.term(s, u) + m_.term(s, t);
    case ReggeAssembly::Crossed:
      return m_.term(t, u);
  }
  return 0.0;
}

complex ReggeAmplitude::boundary_value(double s, double t, Side side) const {
  const double u = 4.0 - s - t;
  const Side os = side == Side::Plus ? Side::Minus : Side::Plus;
  // t is held real; its side enters only through cuts in t >= 4, where we
  // keep the same +i0/-i0 convention as the s approach
  switch (assembly_) {
    case ReggeAssembly::Full:
      return m_.term_boundary(s, side, u, os, side) +
             m_.term_boundary(s, side, t, side, os) +
             m_.term_boundary(t, side, u, os, side);
    case ReggeAssembly::SPair:
      return m_.term_boundary(s, side, u, os, side) +
             m_.term_boundary(s, side, t, side, os);
    case ReggeAssembly::Crossed:
      return m_.term_boundary(t, side, u, os, side);
  }
  return 0.0;
}

complex ReggeAmplitude::abs_s(double s, double t) const {
  return (boundary_value(s, t, Side::Plus) -
          boundary_value(s, t, Side::Minus)) /
         complex(0.0, 2.0);
}

std::string ReggeAmplitude::kind() const {
  switch (assembly_) {
    case ReggeAssembly::Full: return "regge-full";
    case ReggeAssembly::SPair: return "regge-spair";
    case ReggeAssembly::Crossed: return "regge-crossed";
  }
  return "regge";
}

bool ClassACoefficients::positive(double tol, bool include_constant) const {
  return worst(include_constant) >= -tol;
}

double ClassACoefficients::worst(bool include_constant) const {
  double w = 0.0;
  for (std::size_t is = 0; is < s.size(); ++is)
    for (int n = include_constant ? 0 : 1; n <= n_max; ++n)
      w = std::min(w, at(is, n));
  return w;
}

ClassACoefficients classA_from_dispersion(
    const std::function<double(double)>& f, const std::vector<double>& sgrid,
    int n_max, double cut_hi) {
  ClassACoefficients a;
  a.s = sgrid;
  a.n_max = n_max;
  a.c.assign(sgrid.size() * (n_max + 1), 0.0);
  const auto br = cut_breaks(cut_hi);
  for (std::size_t is = 0; is < sgrid.size(); ++is) {
    const double h = 0.5 * (sgrid[is] - 4.0);
    for (int n = 0; n <= n_max; ++n) {
      auto integrand = [&](double t) {
        return complex(f(t) * std::pow(h + t, -n - 1));
      };
      a.at(is, n) = panel_integral(integrand, br, 8).real() / pi;
    }
  }
  return a;
}

namespace {
void require_aligned(const ClassACoefficients& a, const ClassACoefficients& b) {
  if (a.s != b.s || a.n_max != b.n_max)
    throw std::invalid_argument("ClassACoefficients: grids differ");
}
} // namespace

ClassACoefficients classA_combine(const ClassACoefficients& a,
                                  const ClassACoefficients& b, double ca,
                                  double cb) {
  require_aligned(a, b);
  ClassACoefficients out = a;
  for (std::size_t k = 0; k < out.c.size(); ++k)
    out.c[k] = ca * a.c[k] + cb * b.c[k];
  return out;
}

ClassACoefficients classA_product(const ClassACoefficients& a,
                                  const ClassACoefficients& b) {
  require_aligned(a, b);
  ClassACoefficients out = a;
  std::fill(out.c.begin(), out.c.end(), 0.0);
  for (std::size_t is = 0; is < a.s.size(); ++is)
    for (int n = 0; n <= a.n_max; ++n)
      for (int k = 0; k <= n; ++k)
        out.at(is, n) += a.at(is, k) * b.at(is, n - k);
  return out;
}

ClassACoefficients classA_exp(const ClassACoefficients& a, double lambda) {
  ClassACoefficients out = a;
  for (std::size_t is = 0; is < a.s.size(); ++is) {
    out.at(is, 0) = std::exp(lambda * a.at(is, 0));
    for (int n = 1; n <= a.n_max; ++n) {
      double acc = 0.0;
      for (int k = 1; k <= n; ++k)
        acc += k * lambda * a.at(is, k) * out.at(is, n - k);
      out.at(is, n) = acc / n;
    }
  }
  return out;
}

ClassACoefficients classA_log_composite(double t1, double u1, double cfac,
                                        const std::vector<double>& sgrid,
                                        int n_max) {
  if (!(4.0 <= t1 && t1 <= u1))
    throw std::invalid_argument("classA_log_composite: need 4 <= t1 <= u1");
  ClassACoefficients a;
  a.s = sgrid;
  a.n_max = n_max;
  a.c.assign(sgrid.size() * (n_max + 1), 0.0);
  for (std::size_t is = 0; is < sgrid.size(); ++is) {
    const double h = 0.5 * (sgrid[is] - 4.0);
    const double T = t1 + h, U = u1 - 4.0 + sgrid[is] - h;
    a.at(is, 0) = -std::log(T) + cfac * std::log(U);
    double tn = T, un = U;
    for (int n = 1; n <= n_max; ++n) {
      a.at(is, n) = 1.0 / (n * tn) + cfac * ((n % 2) ? 1.0 : -1.0) / (n * un);
      tn *= T;
      un *= U;
    }
  }
  return a;
}

OrderCheck order_check(const std::function<double(double, double)>& phi1,
                       const std::function<double(double, double)>& phi2,
                       const std::vector<double>& sgrid, double s1, int l_max,
                       double tol) {
  OrderCheck r;
  const QuadRule& q = gauss_legendre(std::max(2 * (l_max + 1), 32));
  std::vector<double> pl;
  double worst = 0.0, scale = 0.0;
  for (double s : sgrid) {
    if (s < s1) continue;
    std::vector<double> coef(l_max + 1, 0.0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      const double z = q.x[i];
      const double t = 0.5 * (s - 4.0) * (z - 1.0);
      const double d = phi2(s, t) - phi1(s, t);
      legendre_p_all(l_max, z, pl);
      for (int l = 0; l <= l_max; ++l) coef[l] += q.w[i] * d * pl[l];
    }
    for (int l = 0; l <= l_max; ++l) {
      const double fl = 0.5 * (2 * l + 1) * coef[l];
      worst = std::min(worst, fl);
      scale = std::max(scale, std::abs(fl));
    }
  }
  r.worst = worst;
  r.pass = worst >= -tol * std::max(1.0, scale);
  return r;
}

LinearizedUnitarity linearized_unitarity_verify(
    const std::function<double(double, double)>& M,
    const std::function<double(double, double)>& N,
    const std::vector<double>& sgrid, double s1, int l_max) {
  LinearizedUnitarity r;
  const QuadRule& q = gauss_legendre(std::max(2 * (l_max + 1), 32));
  std::vector<double> pl;
  r.ok = true;
  double nmax = 0.0;
  std::vector<std::pair<double, double>> entries; // (|m_l|, n_l)
  for (double s : sgrid) {
    if (s < s1) continue;
    std::vector<double> mc(l_max + 1, 0.0), nc(l_max + 1, 0.0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      const double z = q.x[i];
      const double t = 0.5 * (s - 4.0) * (z - 1.0);
      legendre_p_all(l_max, z, pl);
      const double mv = M(s, t), nv = N(s, t);
      for (int l = 0; l <= l_max; ++l) {
        mc[l] += q.w[i] * mv * pl[l];
        nc[l] += q.w[i] * nv * pl[l];
      }
    }
    for (int l = 0; l <= l_max; ++l) {
      entries.emplace_back(std::abs(mc[l]), nc[l]);
      r.worst_n = std::min(r.worst_n, nc[l]);
      nmax = std::max(nmax, std::abs(nc[l]));
    }
  }
  const double floor = 1e-12 * std::max(1e-300, nmax);
  for (auto& [m, n] : entries) {
    if (n <= floor) {
      if (m > floor) r.ok = false;
      continue;
    }
    r.c2 = std::max(r.c2, m / n);
  }
  if (r.worst_n < -floor) r.ok = false;
  return r;
}

double cot_bound_check(const Trajectory& tr, const std::vector<double>& tgrid) {
  if (tr.fixed()) return 0.0;
  double c = 0.0;
  for (double t : tgrid) {
    if (t <= 4.0) continue;
    const complex g = tr.gamma_boundary(t, Side::Plus);
    if (g.imag() <= 1e-14) continue;
    c = std::max(c, std::abs(cot(pi * g).imag()) / g.imag());
  }
  return c;
}

LemmaCompareResult lemma_compare(const std::function<double(double)>& f,
                                 const std::function<double(double)>& g,
                                 double t1, double t2,
                                 const std::vector<double>& sgrid, int n_max) {
  LemmaCompareResult r;
  // sampled hypothesis: f >= 0 with threshold support, |g| <= c1 f near
  // threshold and at large t
  r.hypothesis_ok = true;
  double fmax_thr = 0.0;
  auto scan = [&](double lo, double hi, bool log_spaced) {
    const int n = 64;
    for (int k = 0; k <= n; ++k) {
      const double t = log_spaced ? lo * std::pow(hi / lo, double(k) / n)
                                  : lo + (hi - lo) * double(k) / n;
      const double fv = f(t), gv = std::abs(g(t));
      if (fv < 0.0) r.hypothesis_ok = false;
      if (t <= 5.0) fmax_thr = std::max(fmax_thr, fv);
      if (fv > 1e-300)
        r.c1 = std::max(r.c1, gv / fv);
      else if (gv > 1e-300)
        r.hypothesis_ok = false;
    }
  };
  scan(4.0, t1, false);
  scan(t2, 100.0 * t2, true);
  if (fmax_thr <= 0.0) r.hypothesis_ok = false;
  if (!r.hypothesis_ok) return r;
  const auto cf = classA_from_dispersion(f, sgrid, n_max);
  const auto cg = classA_from_dispersion(g, sgrid, n_max);
  for (std::size_t is = 0; is < sgrid.size(); ++is)
    for (int n = 0; n <= n_max; ++n) {
      if (cf.at(is, n) <= 0.0) {
        if (std::abs(cg.at(is, n)) > 1e-300) r.hypothesis_ok = false;
        continue;
      }
      r.c2 = std::max(r.c2, std::abs(cg.at(is, n)) / cf.at(is, n));
    }
  r.pass = r.hypothesis_ok;
  return r;
}

nlohmann::json CompletionResult::to_json() const {
  return {{"ok", ok},
          {"lambda", lambda},
          {"g_scale", g_scale},
          {"subtracted", subtracted}};
}

CompletionResult crossing_completion(const AmplitudeModel& F,
                                     CompletionMode mode,
                                     const std::vector<double>& sgrid,
                                     int l_max, double alpha_inf) {
  CompletionResult r;
  r.subtracted = mode == CompletionMode::Drei && alpha_inf > 0.0;

  PartialWaveTable tf = project_pw_table(F, sgrid, l_max);
  const SpectralGrid2D psi =
      build_positive_template(4.0, 4.0, -0.5, 2.0, 0.5, 0.5, 1.0, 96, 96);
  const MandelstamAmplitude G =
      r.subtracted
          ? MandelstamAmplitude(
                build_positive_template_1d(4.0, 0.5, 2.0, 0.5, 1.0, 96), psi)
          : MandelstamAmplitude(psi);
  PartialWaveTable tg = project_pw_table(G, sgrid, l_max);

  for (double gs : {0.05, 0.2, 1.0}) {
    for (int k = 0; k <= 30; ++k) {
      const double lam = std::pow(0.5, k);
      PartialWaveTable sum = tg;
      for (std::size_t i = 0; i < sum.a.size(); ++i)
        sum.a[i] = gs * tg.a[i] + lam * tf.a[i];
      if (inelastic_check(sum, 1e-12).pass) {
        r.ok = true;
        r.lambda = lam;
        r.g_scale = gs;
        r.table = std::move(sum);
        return r;
      }
    }
  }
  return r;
}

} // namespace mandelstam

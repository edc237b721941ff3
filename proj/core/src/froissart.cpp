#include "mandelstam/froissart.hpp"

#include <cmath>
#include <stdexcept>

namespace mandelstam {

namespace {

constexpr double kSideEps = 1e-30;

complex gamma_from_H(complex hval, complex z) {
  if (std::abs(z) >= 1.0)
    throw std::domain_error("gamma_amplitude: need |z| < 1");
  return -std::exp(0.5 * (1.0 + z) * hval) / std::cos(0.5 * pi * z);
}

} // namespace

CutTrajectory::CutTrajectory(double kappa) {
  if (!(kappa > 0.0 && kappa < 1.0))
    throw std::invalid_argument("CutTrajectory: need 0 < kappa < 1");
  const double r2 = std::sqrt(2.0);
  f_ = [kappa, r2](complex xi) {
    const complex w = std::sqrt(2.0 - xi);
    return kappa * (r2 - w) / (r2 + w);
  };
  delta_ = kappa;
  d0_ = complex(kappa / 8.0);
}

CutTrajectory::CutTrajectory(std::function<complex(complex)> f, double delta)
    : f_(std::move(f)), delta_(delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("CutTrajectory: need 0 < delta < 1");
  // gamma'(0) from a Cauchy circle well inside the cut-free disc
  const int n = 16;
  const double r = 0.5;
  complex acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double th = 2.0 * pi * k / n;
    acc += f_(r * std::exp(complex(0.0, th))) * std::exp(complex(0.0, -th));
  }
  d0_ = acc / (r * double(n));
}

complex CutTrajectory::boundary(double x, Side side) const {
  return f_(complex(x, side == Side::Plus ? kSideEps : -kSideEps));
}

double CutTrajectory::a(double t) const {
  if (t > 0.0) throw std::domain_error("CutTrajectory::a: need t <= 0");
  return f_(complex(0.0, std::sqrt(-t))).real();
}

double CutTrajectory::b(double t) const {
  if (t > 0.0) throw std::domain_error("CutTrajectory::b: need t <= 0");
  return f_(complex(0.0, std::sqrt(-t))).imag();
}

CutTrajectoryScreen screen_cut_trajectory(const CutTrajectory& g) {
  CutTrajectoryScreen r;
  r.zero_at_origin = std::abs(g(complex(0.0))) <= 1e-12;
  r.bounded = true;
  for (double rad = 1e-3; rad <= 1e3; rad *= 3.0)
    for (int k = 0; k < 24; ++k) {
      const double th = 0.05 + (2.0 * pi - 0.1) * k / 23.0;
      if (std::abs(g(rad * std::exp(complex(0.0, th)))) > g.delta() + 1e-9)
        r.bounded = false;
    }
  r.im_positive = true;
  for (double x = 2.001; x < 1e4; x *= 1.6)
    if (g.boundary(x, Side::Plus).imag() < -1e-12) r.im_positive = false;
  r.a_monotone = true;
  double prev = g.a(0.0);
  if (std::abs(prev) > 1e-12) r.a_monotone = false;
  for (double tau = 1e-3; tau <= 1e6; tau *= 4.0) {
    const double av = g.a(-tau * tau);
    if (av > prev + 1e-12) r.a_monotone = false;
    prev = av;
  }
  if (!(prev < 0.0)) r.a_monotone = false;
  r.pass = r.zero_at_origin && r.bounded && r.im_positive && r.a_monotone;
  return r;
}

void FroissartSpec::validate() const {
  if (!(rho.a() > 0.0 && rho.b() < 1.0 / gamma.delta()))
    throw std::invalid_argument(
        "FroissartSpec: rho support must lie in (0, 1/delta)");
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("FroissartSpec: need 0 < p < 1");
}

complex gamma_amplitude(const SmearedLogH& h, complex s, complex t,
                        complex z) {
  return gamma_from_H(h(s, t), z);
}

complex gamma_amplitude_boundary(const SmearedLogH& h, double s, double t,
                                 Side side, complex z) {
  return gamma_from_H(h.boundary(s, t, side), z);
}

complex gamma_amplitude_abs(const SmearedLogH& h, double s, double t,
                            complex z) {
  if (!(s >= 18.0))
    throw std::domain_error("gamma_amplitude_abs: need s >= 18");
  if (std::abs(z) >= 1.0)
    throw std::domain_error("gamma_amplitude_abs: need |z| < 1");
  return (std::tan(0.5 * pi * z) + complex(0.0, 1.0)) *
         std::exp(0.5 * (1.0 + z) * h.h(s, t));
}

FroissartModel::FroissartModel(FroissartSpec spec, BumpWeight sigma)
    : spec_(std::move(spec)), h_(sigma), lam_(spec_.rho.rule(24)) {
  spec_.validate();
}

complex FroissartModel::pair_H(complex x, complex y) const {
  return h_.L(x) + h_.L(y) - h_.L(4.0 - x - y + 1.0);
}

complex FroissartModel::pair_H_boundary(double x, Side sx, double y, Side sy,
                                        Side sw) const {
  auto lb = [this](double arg, Side side) {
    return arg > 16.5 ? h_.L(arg, side) : h_.L(complex(arg));
  };
  return lb(x, sx) + lb(y, sy) - lb(4.0 - x - y + 1.0, sw);
}

complex FroissartModel::phi_from_H(complex hval, complex w, Side sw,
                                   bool on_boundary, double lambda) const {
  if (std::abs(w) < 1e-12)
    return -lambda * spec_.gamma.derivative0() * hval * std::exp(0.5 * hval);
  complex zeta, g1, g2;
  if (on_boundary) {
    const double wr = w.real();
    if (wr < 0.0) {
      zeta = complex(0.0, std::sqrt(-wr));
      g1 = spec_.gamma(zeta);
    } else {
      const double rt = std::sqrt(wr);
      zeta = complex(rt);
      g1 = rt >= 2.0 ? spec_.gamma.boundary(rt, sw) : spec_.gamma(zeta);
    }
    g2 = spec_.gamma(-zeta);
  } else {
    zeta = std::sqrt(w);
    g1 = spec_.gamma(zeta);
    g2 = spec_.gamma(-zeta);
  }
  return (gamma_from_H(hval, lambda * g1) - gamma_from_H(hval, lambda * g2)) /
         zeta;
}

complex FroissartModel::phi(complex x, complex y, double lambda) const {
  return phi_from_H(pair_H(x, y), 4.0 - x - y, Side::Plus, false, lambda);
}

complex FroissartModel::phi_boundary(double x, Side sx, double y, Side sy,
                                     Side sw, double lambda) const {
  return phi_from_H(pair_H_boundary(x, sx, y, sy, sw), complex(4.0 - x - y),
                    sw, true, lambda);
}

complex FroissartModel::phi_tilde(complex x, complex y) const {
  const complex hval = pair_H(x, y);
  const complex w = 4.0 - x - y;
  complex acc = 0.0;
  for (std::size_t i = 0; i < lam_.size(); ++i)
    acc += lam_.w[i] * phi_from_H(hval, w, Side::Plus, false, lam_.x[i]);
  return acc;
}

complex FroissartModel::phi_tilde_boundary(double x, Side sx, double y,
                                           Side sy, Side sw) const {
  const complex hval = pair_H_boundary(x, sx, y, sy, sw);
  const complex w(4.0 - x - y);
  complex acc = 0.0;
  for (std::size_t i = 0; i < lam_.size(); ++i)
    acc += lam_.w[i] * phi_from_H(hval, w, sw, true, lam_.x[i]);
  return acc;
}

complex FroissartModel::term(complex x, complex y) const {
  const complex w = 4.0 - x - y;
  return spec_.beta.beta1(w) * pair_H(x, y) * phi_tilde(x, y);
}

complex FroissartModel::term_boundary(double x, Side sx, double y, Side sy,
                                      Side sw) const {
  const double w = 4.0 - x - y;
  const complex hval = pair_H_boundary(x, sx, y, sy, sw);
  complex acc = 0.0;
  for (std::size_t i = 0; i < lam_.size(); ++i)
    acc += lam_.w[i] * phi_from_H(hval, complex(w), sw, true, lam_.x[i]);
  return spec_.beta.beta1_boundary(w, sw) * hval * acc;
}

double FroissartModel::im_phi(double s, double t, double lambda) const {
  if (!(s >= 18.0)) throw std::domain_error("im_phi: need s >= 18");
  if (!(t < 0.0)) throw std::domain_error("im_phi: need t < 0");
  const double hr = h_.h(s, t);
  const double a = lambda * spec_.gamma.a(t);
  const double b = lambda * spec_.gamma.b(t);
  return 2.0 / std::sqrt(-t) * std::exp(0.5 * (1.0 + a) * hr) *
         std::sin(0.5 * b * hr);
}

double FroissartModel::beta0_diag(double t) const {
  if (!(t <= 0.0)) throw std::domain_error("beta0_diag: need t <= 0");
  const double lt = h_.L(complex(t)).real();
  return 2.0 * std::exp(-0.5 * lt * (1.0 + spec_.gamma.a(t)));
}

FroissartAmplitude::FroissartAmplitude(FroissartModel m,
                                       ReggeAssembly assembly)
    : m_(std::move(m)), assembly_(assembly) {}

complex FroissartAmplitude::value(complex s, complex t) const {
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

complex FroissartAmplitude::boundary_value(double s, double t,
                                           Side side) const {
  const double u = 4.0 - s - t;
  const Side os = side == Side::Plus ? Side::Minus : Side::Plus;
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

complex FroissartAmplitude::abs_s(double s, double t) const {
  return (boundary_value(s, t, Side::Plus) -
          boundary_value(s, t, Side::Minus)) /
         complex(0.0, 2.0);
}

std::string FroissartAmplitude::kind() const {
  switch (assembly_) {
    case ReggeAssembly::Full: return "froissart-full";
    case ReggeAssembly::SPair: return "froissart-spair";
    case ReggeAssembly::Crossed: return "froissart-crossed";
  }
  return "froissart";
}

double chi_mn(int m, int n, double p, double s, double t) {
  if (!(s > 1.0)) throw std::domain_error("chi_mn: need s > 1");
  if (!(t <= 0.0)) throw std::domain_error("chi_mn: need t <= 0");
  const double ls = std::log(s);
  if (t >= -1.0)
    return s * std::pow(ls, m) * std::pow(1.0 + std::sqrt(-t) * ls, -n);
  return std::pow(s, p) * std::pow(-t, -0.5 * (1.0 + p));
}

EnvelopeFit shrink_envelope_check(
    const std::function<complex(double, double)>& bv, int m, int n, double p,
    double s_max, int ns, int nt) {
  EnvelopeFit fit;
  for (int i = 0; i < ns; ++i) {
    const double s = 4.5 * std::pow(s_max / 4.5, double(i) / (ns - 1));
    for (int j = 0; j <= nt; ++j) {
      // t = 0, a near-strip log sweep, then a far sweep down to 4 - s
      double t;
      if (j == 0) {
        t = 0.0;
      } else if (j <= nt / 2) {
        t = -std::pow(10.0, -6.0 + 7.0 * (j - 1) / double(nt / 2 - 1));
      } else {
        const double far_max = s - 4.0;
        if (far_max <= 10.0) continue;
        t = -10.0 *
            std::pow(far_max / 10.0, (j - nt / 2) / double(nt - nt / 2));
      }
      if (t < 4.0 - s) continue;
      const double ratio = std::abs(bv(s, t)) / chi_mn(m, n, p, s, t);
      if (ratio > fit.c) {
        fit.c = ratio;
        fit.worst_s = s;
        fit.worst_t = t;
      }
    }
  }
  return fit;
}

} // namespace mandelstam

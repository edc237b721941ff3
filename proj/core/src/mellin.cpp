#include "mandelstam/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "mandelstam/quadrature.hpp"
#include "mandelstam/threading.hpp"

namespace mandelstam {
namespace {

constexpr double kPoleGuard = 1e-12;

// least-squares slope of y against x
double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// log-uniform Gauss nodes over [log t_lo, log t_hi] resolving e^{i x u}
// oscillations up to |x| = x_max
QuadRule log_time_rule(double t_lo, double t_hi, double x_max,
                       int oversample = 1) {
  if (!(t_lo > 0.0) || !(t_hi > t_lo))
    throw std::invalid_argument("log_time_rule: need 0 < t_lo < t_hi");
  const double u_lo = std::log(t_lo), u_hi = std::log(t_hi);
  const int panels =
      oversample *
      std::max(24, static_cast<int>(std::ceil((u_hi - u_lo) * (x_max + 1.0) / 2.5)));
  const double du = (u_hi - u_lo) / panels;
  QuadRule out;
  for (int p = 0; p < panels; ++p) {
    const QuadRule g = gauss_legendre(16, u_lo + p * du, u_lo + (p + 1) * du);
    out.x.insert(out.x.end(), g.x.begin(), g.x.end());
    out.w.insert(out.w.end(), g.w.begin(), g.w.end());
  }
  return out;
}

// breakpoints of [4,18] with dyadic refinement against the (x-4)^(sigma-1/2)
// endpoint singularity
const std::vector<double>& trajectory_breaks() {
  static const std::vector<double> breaks = [] {
    // 14*2^-48 ~ 5e-14 stays well above the spacing of doubles at 4
    std::vector<double> b;
    for (int k = 48; k >= 0; --k) b.push_back(4.0 + 14.0 * std::ldexp(1.0, -k));
    return b;
  }();
  return breaks;
}

complex pow_int(complex z, int n) {
  complex r = 1.0;
  for (int k = 0; k < n; ++k) r *= z;
  return r;
}

} // namespace

complex plus_pow(double s, complex nu) {
  if (s <= 0.0) return 0.0;
  return std::exp(nu * std::log(s));
}

MellinLine MellinLine::sample(const std::function<complex(complex)>& fn,
                              double gamma, double x_max, double dx) {
  if (!(dx > 0.0) || !(x_max > 0.0))
    throw std::invalid_argument("MellinLine::sample: need dx, x_max > 0");
  MellinLine line;
  line.gamma = gamma;
  line.dx = dx;
  const int n = static_cast<int>(std::lround(x_max / dx));
  line.x.resize(2 * n + 1);
  line.a.resize(2 * n + 1);
  for (int i = -n; i <= n; ++i) line.x[i + n] = i * dx;
  parallel_for(line.x.size(), [&](std::size_t i) {
    line.a[i] = fn(complex(gamma, line.x[i]));
  });
  line.fit_tail();
  return line;
}

complex MellinLine::at(double xq) const {
  if (x.empty() || xq < x.front() || xq > x.back()) return 0.0;
  const double f = (xq - x.front()) / dx;
  const std::size_t i = std::min(a.size() - 2, static_cast<std::size_t>(f));
  const double r = f - static_cast<double>(i);
  return (1.0 - r) * a[i] + r * a[i + 1];
}

double MellinLine::sobolev_norm() const {
  if (a.size() < 3) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    complex d;
    if (i == 0)
      d = (a[1] - a[0]) / dx;
    else if (i + 1 == a.size())
      d = (a[i] - a[i - 1]) / dx;
    else
      d = (a[i + 1] - a[i - 1]) / (2.0 * dx);
    const double w = (i == 0 || i + 1 == a.size()) ? 0.5 * dx : dx;
    acc += w * (std::norm(a[i]) + std::norm(d));
  }
  return std::sqrt(0.5 * pi * acc);
}

double MellinLine::l2_norm() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double w = (i == 0 || i + 1 == a.size()) ? 0.5 * dx : dx;
    acc += w * std::norm(a[i]);
  }
  return std::sqrt(acc);
}

bool MellinLine::conjugate_symmetric(double tol) const {
  double peak = 0.0;
  for (const complex& v : a) peak = std::max(peak, std::abs(v));
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(a[i] - std::conj(a[n - 1 - i])) > tol * std::max(peak, 1e-300))
      return false;
  return true;
}

MellinLine MellinLine::conjugate_reflect() const {
  MellinLine out = *this;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) out.a[i] = std::conj(a[n - 1 - i]);
  return out;
}

std::string MellinLine::to_csv() const {
  std::string out = "x,re,im\n";
  char buf[128];
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g\n", x[i], a[i].real(),
                  a[i].imag());
    out += buf;
  }
  return out;
}

void MellinLine::fit_tail() {
  tail_abs = 0.0;
  tail_decay = 0.0;
  if (a.size() < 16) return;
  const std::size_t n = a.size();
  const std::size_t edge = std::max<std::size_t>(2, n / 40);
  for (std::size_t i = 0; i < edge; ++i)
    tail_abs += std::abs(a[i]) + std::abs(a[n - 1 - i]);
  tail_abs /= static_cast<double>(2 * edge);
  // power-law order of |a| over the outer quarter of the positive-x side
  std::vector<double> lx, ly;
  for (std::size_t i = (7 * n) / 8; i < n; ++i) {
    const double m = std::abs(a[i]);
    if (x[i] > 0.0 && m > 1e-300) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(m));
    }
  }
  if (lx.size() >= 4) tail_decay = -ls_slope(lx, ly);
}

MellinLine mellin_forward(const std::function<complex(double)>& f,
                          double gamma, double t_lo, double t_hi, double x_max,
                          double dx, int oversample) {
  if (x_max <= 0.0) {
    // probe outward until the transform falls below 1e-10 of its peak
    const double a0 = std::abs(mellin_point(f, complex(gamma, 0.0), t_lo, t_hi));
    x_max = 256.0;
    for (double X = 4.0; X <= 256.0; X *= 2.0) {
      if (std::abs(mellin_point(f, complex(gamma, X), t_lo, t_hi)) <=
          1e-10 * std::max(a0, 1e-300)) {
        x_max = X;
        break;
      }
    }
  }
  const QuadRule q = log_time_rule(t_lo, t_hi, x_max, oversample);
  std::vector<complex> base(q.size());
  parallel_for(q.size(), [&](std::size_t j) {
    base[j] = (q.w[j] / pi) * f(std::exp(q.x[j])) * std::exp(-gamma * q.x[j]);
  });
  MellinLine line;
  line.gamma = gamma;
  line.dx = dx;
  const int n = static_cast<int>(std::lround(x_max / dx));
  line.x.resize(2 * n + 1);
  line.a.resize(2 * n + 1);
  for (int i = -n; i <= n; ++i) line.x[i + n] = i * dx;
  parallel_for(line.x.size(), [&](std::size_t i) {
    complex acc = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j)
      acc += base[j] * std::polar(1.0, -line.x[i] * q.x[j]);
    line.a[i] = acc;
  });
  line.fit_tail();
  return line;
}

complex mellin_point(const std::function<complex(double)>& f, complex nu,
                     double t_lo, double t_hi) {
  const QuadRule q = log_time_rule(t_lo, t_hi, std::abs(nu.imag()));
  complex acc = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j)
    acc += q.w[j] * f(std::exp(q.x[j])) * std::exp(-nu * q.x[j]);
  return acc / pi;
}

complex mellin_inverse(const MellinLine& line, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("mellin_inverse: need t > 0");
  const double lt = std::log(t);
  complex acc = 0.0;
  for (std::size_t i = 0; i < line.a.size(); ++i) {
    const double w =
        (i == 0 || i + 1 == line.a.size()) ? 0.5 * line.dx : line.dx;
    acc += w * line.a[i] * std::polar(1.0, line.x[i] * lt);
  }
  return 0.5 * std::exp(line.gamma * lt) * acc;
}

complex khuri_representation(const MellinLine& line, complex t) {
  const complex lmt = std::log(-t);
  complex acc = 0.0;
  for (std::size_t i = 0; i < line.a.size(); ++i) {
    const double w =
        (i == 0 || i + 1 == line.a.size()) ? 0.5 * line.dx : line.dx;
    const complex nu(line.gamma, line.x[i]);
    acc += w * line.a[i] * std::exp(nu * lmt) / std::sin(pi * nu);
  }
  return -0.5 * acc;
}

complex khuri_contour(const std::function<complex(complex)>& a, double gamma,
                      double x_max, complex t, double dx) {
  return khuri_representation(MellinLine::sample(a, gamma, x_max, dx), t);
}

complex khuri_residues(complex alpha, complex beta, double s, int n) {
  if (n < 0) throw std::invalid_argument("khuri_residues: need n >= 0");
  complex r = beta;
  double fact = 1.0;
  for (int k = 0; k < n; ++k) {
    const complex den = -2.0 * alpha + static_cast<double>(k);
    if (std::abs(den) < kPoleGuard)
      throw std::invalid_argument("khuri_residues: Pochhammer denominator zero");
    const complex num = -alpha + static_cast<double>(k);
    r *= num * num / den;
    fact *= k + 1.0;
  }
  return r * pow_int(complex(4.0 - s), n) / fact;
}

complex khuri_ansatz(complex alpha, complex beta, double s, double t1,
                     int n_daughters, complex nu) {
  if (!(t1 > 16.0)) throw std::invalid_argument("khuri_ansatz: need t1 > 16");
  const double scale = 1.0 + std::abs(alpha);
  if (std::abs(nu + 1.0) < kPoleGuard * scale)
    throw std::invalid_argument("khuri_ansatz: nu at the pole -1");
  for (int n = 0; n <= n_daughters; ++n)
    if (std::abs(nu - alpha + static_cast<double>(n)) < kPoleGuard * scale)
      throw std::invalid_argument("khuri_ansatz: nu at a Khuri pole");
  const complex pref = beta * std::exp((alpha - nu) * std::log(t1));
  const complex sub = 1.0 / (nu + 1.0);
  complex total = pref * (1.0 / (nu - alpha) - sub);
  complex poch_ma = 1.0, poch_1nu = 1.0, ratio = 1.0;
  double fact = 1.0;
  for (int n = 1; n <= n_daughters; ++n) {
    poch_ma *= -alpha + static_cast<double>(n - 1);
    poch_1nu *= 1.0 + nu + static_cast<double>(n - 1);
    fact *= n;
    complex den = 1.0; // (1+n+2nu)_n, fresh per n
    for (int k = 0; k < n; ++k)
      den *= 1.0 + static_cast<double>(n + k) + 2.0 * nu;
    if (std::abs(den) < kPoleGuard)
      throw std::invalid_argument("khuri_ansatz: daughter denominator zero");
    ratio = pow_int(complex((4.0 - s) / t1), n) / fact;
    total += pref * ratio * poch_ma * poch_1nu / den *
             (1.0 / (nu - alpha + static_cast<double>(n)) - sub);
  }
  return total;
}

void KhuriPoleSpec::validate() const {
  if (!alpha0 || !chi || !beta)
    throw std::invalid_argument("KhuriPoleSpec: missing function");
  if (!(sigma > 0.0) || !(sigma < 2.0))
    throw std::invalid_argument("KhuriPoleSpec: sigma outside (0,2)");
  if (!(t1 > 16.0)) throw std::invalid_argument("KhuriPoleSpec: t1 <= 16");
  if (!(gamma1 > 2.0) || !(gamma1 < 3.0))
    throw std::invalid_argument("KhuriPoleSpec: gamma1 outside (2,3)");
  if (n_daughters < 0)
    throw std::invalid_argument("KhuriPoleSpec: negative daughter count");
  if (std::abs(alpha0(complex(4.0)) - sigma) > 1e-8)
    throw std::invalid_argument("KhuriPoleSpec: alpha0(4) != sigma");
  const complex tail = alpha0(complex(-1e10));
  if (!(tail.real() > -1.0) || !(tail.real() < -0.5) ||
      std::abs(tail.imag()) > 1e-6)
    throw std::invalid_argument("KhuriPoleSpec: alpha0(inf) outside (-1,-1/2)");
  for (int i = 0; i <= 24; ++i) {
    const double xx = 4.0 + 12.0 * i / 24.0;
    if (!(chi(xx) > 0.0))
      throw std::invalid_argument("KhuriPoleSpec: chi not positive on [4,16]");
  }
}

nlohmann::json KhuriPoleSpec::to_json() const {
  return {{"sigma", sigma},
          {"t1", t1},
          {"n_daughters", n_daughters},
          {"gamma1", gamma1},
          {"ghost_killing", ghost_killing},
          {"cutoff", {{"lower", cutoff.lower()}, {"upper", cutoff.upper()}}}};
}

std::function<complex(complex)> make_alpha0(double sigma, double alpha_inf) {
  return [sigma, alpha_inf](complex s) {
    return alpha_inf + (sigma - alpha_inf) * std::sqrt(12.0 / (16.0 - s));
  };
}

namespace {

// sqrt((x-4)/x) (x-4)^(sigma-1) chi(x), chi extended past 16 by the cutoff
std::function<complex(double)> trajectory_weight(const KhuriPoleSpec& spec) {
  return [&spec](double x) -> complex {
    const double c = x <= 16.0 ? spec.chi(x) : spec.chi(16.0) * spec.cutoff(x);
    return std::sqrt((x - 4.0) / x) * std::pow(x - 4.0, spec.sigma - 1.0) * c;
  };
}

} // namespace

complex trajectory_from_chi(const KhuriPoleSpec& spec, complex s) {
  const complex integral =
      cauchy_line(trajectory_weight(spec), trajectory_breaks(), s);
  return spec.alpha0(s) + (s - 4.0) / pi * integral;
}

complex trajectory_from_chi_boundary(const KhuriPoleSpec& spec, double s,
                                     Side side) {
  if (!(s > 4.0) || !(s < 18.0))
    return trajectory_from_chi(spec, complex(s));
  const complex integral = cauchy_line_boundary(trajectory_weight(spec),
                                                trajectory_breaks(), s, side);
  return spec.alpha0(complex(s)) + (s - 4.0) / pi * integral;
}

double intercept(const KhuriPoleSpec& spec) {
  const auto g = trajectory_weight(spec);
  const complex integral = panel_integral(
      [&](double x) { return g(x) / x; }, trajectory_breaks());
  return (spec.alpha0(complex(0.0)) - 4.0 / pi * integral).real();
}

complex residue_at(const KhuriPoleSpec& spec, complex s) {
  complex b = spec.beta(s);
  if (spec.ghost_killing) b *= trajectory_from_chi(spec, s);
  return b;
}

complex pole_ansatz(const KhuriPoleSpec& spec, complex s, complex nu) {
  const complex alpha = trajectory_from_chi(spec, s);
  const complex beta = residue_at(spec, s);
  return khuri_ansatz(alpha, beta, s.real(), spec.t1, spec.n_daughters, nu);
}

namespace {

constexpr double kContourX = 18.0;
constexpr double kContourDx = 0.05;

complex khuri_pole_contour(const KhuriPoleSpec& spec, complex alpha,
                           complex beta, double s_real, complex t,
                           double gamma_line, bool symmetrize) {
  // the contour must separate the Khuri poles from the integers
  for (int n = 0; n <= spec.n_daughters; ++n)
    if (std::abs(alpha.real() - n - gamma_line) < 0.05)
      throw std::invalid_argument("regge_reconstruct: contour pinched by pole");
  if (std::abs(gamma_line - std::round(gamma_line)) < 0.05)
    throw std::invalid_argument("regge_reconstruct: contour at an integer");
  const complex u = 4.0 - s_real - t;
  const complex lmt = std::log(-t);
  const complex lmu = symmetrize ? std::log(-u) : complex(0.0);
  const int n_side = static_cast<int>(std::lround(kContourX / kContourDx));
  complex acc = 0.0;
  for (int i = -n_side; i <= n_side; ++i) {
    const complex nu(gamma_line, i * kContourDx);
    const double w =
        (i == -n_side || i == n_side) ? 0.5 * kContourDx : kContourDx;
    const complex a_r =
        khuri_ansatz(alpha, beta, s_real, spec.t1, spec.n_daughters, nu);
    complex powers = std::exp(nu * lmt);
    if (symmetrize) powers += std::exp(nu * lmu);
    acc += w * a_r * powers / std::sin(pi * nu);
  }
  return -0.5 * acc;
}

} // namespace

complex regge_reconstruct(const KhuriPoleSpec& spec, complex s, complex t,
                          double gamma_line) {
  const complex alpha = trajectory_from_chi(spec, s);
  const complex beta = residue_at(spec, s);
  if (std::abs(s.imag()) > 1e-14)
    throw std::invalid_argument("regge_reconstruct: real s expected");
  const double sr = s.real();
  complex value =
      khuri_pole_contour(spec, alpha, beta, sr, t, gamma_line, false);
  for (int n = 0; n < gamma_line; ++n)
    value += khuri_ansatz(alpha, beta, sr, spec.t1, spec.n_daughters,
                          complex(static_cast<double>(n))) *
             pow_int(t, n);
  return value;
}

complex regge_reconstruct_symmetric(const KhuriPoleSpec& spec, complex s,
                                    complex t) {
  const complex alpha = trajectory_from_chi(spec, s);
  const complex beta = residue_at(spec, s);
  if (std::abs(s.imag()) > 1e-14)
    throw std::invalid_argument("regge_reconstruct: real s expected");
  const double sr = s.real();
  const complex u = 4.0 - sr - t;
  complex value =
      khuri_pole_contour(spec, alpha, beta, sr, t, spec.gamma1, true);
  const auto a_r = [&](int n) {
    return khuri_ansatz(alpha, beta, sr, spec.t1, spec.n_daughters,
                        complex(static_cast<double>(n)));
  };
  value += 2.0 * a_r(0) + (4.0 - sr) * a_r(1) + (t * t + u * u) * a_r(2);
  return value;
}

MellinLine truncated_unitarity_map(const MellinLine& a_plus,
                                   const MellinLine& a_minus, double s,
                                   const Cutoff& lambda) {
  MellinLine out = a_plus;
  const double lam = s > 4.0 ? lambda(s) : 0.0;
  const double phase = lam > 0.0 ? 0.5 * lam * std::sqrt((s - 4.0) / s) : 0.0;
  for (std::size_t i = 0; i < out.a.size(); ++i) {
    if (phase == 0.0) {
      out.a[i] = 0.0;
      continue;
    }
    const complex nu = out.nu(i);
    out.a[i] = phase * plus_pow(s - 4.0, nu) *
               euler_beta(1.0 + nu, 1.0 + nu) * a_plus.a[i] *
               a_minus.at(out.x[i]);
  }
  out.fit_tail();
  return out;
}

complex residue_identity_rhs(complex alpha_plus, complex b_minus_at_alpha,
                             double s) {
  if (!(s > 4.0))
    throw std::invalid_argument("residue_identity_rhs: need s > 4");
  const double im_alpha = alpha_plus.imag();
  const complex binv = 1.0 / euler_beta(1.0 + alpha_plus, 1.0 + alpha_plus);
  return std::sqrt(s / (s - 4.0)) * plus_pow(s - 4.0, -alpha_plus) * binv *
             im_alpha -
         2.0 * complex(0.0, 1.0) * b_minus_at_alpha * im_alpha;
}

complex residue_identity_residual(complex alpha_plus, complex beta_bar,
                                  complex b_minus_at_alpha, double s) {
  return beta_bar - residue_identity_rhs(alpha_plus, b_minus_at_alpha, s);
}

complex mb_kernel(complex nu, complex xi, complex eta) {
  return euler_beta(1.0 + xi, nu - xi) * euler_beta(1.0 + eta, nu - eta) *
         euler_beta(1.0 + nu, 1.0 - nu + xi + eta);
}

complex mb_unitarity_integral(const MellinLine& a_plus,
                              const MellinLine& a_minus, double s,
                              complex nu) {
  const double g = a_plus.gamma, gp = a_minus.gamma;
  if (!(g < nu.real()) || !(gp < nu.real()) || !(nu.real() < 1.0 + g + gp))
    throw std::invalid_argument(
        "mb_unitarity_integral: contour condition violated");
  if (!(s > 4.0))
    throw std::invalid_argument("mb_unitarity_integral: need s > 4");
  if (std::abs(a_plus.dx - a_minus.dx) > 1e-15)
    throw std::invalid_argument("mb_unitarity_integral: grid spacing mismatch");
  const double ls = std::log(s - 4.0);
  const std::size_t n = a_plus.size(), m = a_minus.size();
  // the xi+eta dependent Beta factor only sees the sum grid
  std::vector<complex> row(n), col(m), diag(n + m - 1);
  parallel_for(n, [&](std::size_t i) {
    const complex xi(g, a_plus.x[i]);
    row[i] = euler_beta(1.0 + xi, nu - xi) * a_plus.a[i] * std::exp(xi * ls);
  });
  parallel_for(m, [&](std::size_t j) {
    const complex eta(gp, a_minus.x[j]);
    col[j] = euler_beta(1.0 + eta, nu - eta) * a_minus.a[j] * std::exp(eta * ls);
  });
  const double x0 = a_plus.x.front() + a_minus.x.front();
  parallel_for(diag.size(), [&](std::size_t k) {
    const complex sum(g + gp, x0 + static_cast<double>(k) * a_plus.dx);
    diag[k] = euler_beta(1.0 + nu, 1.0 - nu + sum);
  });
  complex acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double wi = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    complex inner = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double wj = (j == 0 || j + 1 == m) ? 0.5 : 1.0;
      inner += wj * col[j] * diag[i + j];
    }
    acc += wi * row[i] * inner;
  }
  acc *= a_plus.dx * a_minus.dx;
  return acc / (4.0 * pi * pi) * std::exp(-2.0 * nu * ls);
}

complex mb_unitarity_w(const MellinLine& a_plus, const MellinLine& a_minus,
                       double s, complex nu) {
  return std::sqrt((s - 4.0) / s) * plus_pow(s - 4.0, nu) *
         mb_unitarity_integral(a_plus, a_minus, s, nu);
}

nlohmann::json Lemma1Report::to_json() const {
  return {{"c2", c2},
          {"t_neg_hi", t_neg_hi},
          {"log_slope", log_slope},
          {"c2_positive", c2_positive},
          {"im_beta_negative", im_beta_negative},
          {"pass", pass}};
}

Lemma1Report lemma1_threshold_check(
    const std::function<complex(double)>& alpha_plus,
    const std::function<complex(double)>& beta_plus, double sigma) {
  Lemma1Report rep;
  // ratio Im beta / (t-4)^(sigma+1/2) against log(t-4) on a threshold window
  const int n_fit = 25;
  std::vector<double> lt(n_fit), ratio(n_fit);
  for (int i = 0; i < n_fit; ++i) {
    const double e = -12.0 + 6.0 * i / (n_fit - 1); // t-4 in [1e-12, 1e-6]
    const double d = std::pow(10.0, e);
    lt[i] = std::log(d);
    ratio[i] = beta_plus(4.0 + d).imag() / std::pow(d, sigma + 0.5);
  }
  rep.c2 = ls_slope(lt, ratio);
  rep.c2_positive = rep.c2 > 0.0;
  // the leading term dominates: log|ratio| ~ log c2 + log log(1/(t-4))
  std::vector<double> llt(n_fit), lr(n_fit);
  for (int i = 0; i < n_fit; ++i) {
    llt[i] = std::log(-lt[i]);
    lr[i] = std::log(std::abs(ratio[i]) + 1e-300);
  }
  rep.log_slope = ls_slope(llt, lr);
  // negativity interval scan
  rep.im_beta_negative = true;
  rep.t_neg_hi = 4.0;
  for (int i = 0; i < 60; ++i) {
    const double d = std::pow(10.0, -8.0 + 8.3 * i / 59.0); // up to ~2
    const double im = beta_plus(4.0 + d).imag();
    if (i < 20 && !(im < 0.0)) rep.im_beta_negative = false;
    if (im < 0.0)
      rep.t_neg_hi = 4.0 + d;
    else
      break;
  }
  // hypothesis of the statement: Im alpha > 0 approaching threshold
  bool im_alpha_positive = true;
  for (int i = 0; i < n_fit; ++i)
    if (!(alpha_plus(4.0 + std::exp(lt[i])).imag() > 0.0))
      im_alpha_positive = false;
  rep.pass = im_alpha_positive && rep.c2_positive && rep.im_beta_negative &&
             std::abs(rep.log_slope - 1.0) <= 0.10;
  return rep;
}

} // namespace mandelstam

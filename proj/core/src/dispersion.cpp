#include "mandelstam/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mandelstam {

namespace {

constexpr int kPanelN = 4;      // Gauss nodes per grid-aligned panel
constexpr int kWindowN = 16;    // nodes per panel inside the subtraction window
constexpr int kThresholdRef = 10; // dyadic bisections of the first cell
constexpr double kMinCut = 1e8;   // smallest quadrature truncation
constexpr double kMaxCut = 1e15;

double quad_cut(double edge, double pole_abs) {
  return std::min(kMaxCut, std::max({kMinCut, 100.0 * edge, 40.0 * pole_abs}));
}

// ascending breakpoints: dyadic threshold refinement of [v, first], the
// given interior nodes, then 4 log panels per decade out to xq
std::vector<double> make_breaks(double v, const std::vector<double>& nodes,
                                double edge, double xq) {
  std::vector<double> b;
  b.push_back(v);
  for (double x : nodes) {
    if (x > v * (1.0 + 1e-12)) {
      // dyadic refinement of the first cell against the threshold cusp
      const double h = x - v;
      for (int m = kThresholdRef; m >= 1; --m)
        b.push_back(v + h * std::ldexp(1.0, -m));
      break;
    }
  }
  for (double x : nodes) {
    if (x >= xq) break;
    if (x > b.back() * (1.0 + 1e-15)) b.push_back(x);
  }
  if (xq > edge) {
    const double r = std::pow(10.0, 0.25);
    for (double x = std::max(edge, b.back()) * r; x < xq; x *= r)
      if (x > b.back()) b.push_back(x);
  }
  if (xq > b.back()) b.push_back(xq);
  return b;
}

// pole location relative to an integration range [lo, hi]
struct PoleSpec {
  complex z;
  bool cut = false;
  double x = 0.0;
  Side side = Side::Plus;
};

PoleSpec pole_for(complex z, double lo, double hi) {
  if (z.imag() == 0.0 && z.real() > lo && z.real() < hi)
    return {z, true, z.real(), Side::Plus};
  return {z, false, 0.0, Side::Plus};
}

PoleSpec pole_for(double x, Side side, double lo, double hi) {
  if (x > lo && x < hi) return {complex(x), true, x, side};
  return {complex(x), false, 0.0, Side::Plus};
}

complex line(const std::function<complex(double)>& f,
             const std::vector<double>& br, const PoleSpec& p,
             int n = kPanelN) {
  return p.cut ? cauchy_line_boundary(f, br, p.x, p.side, n)
               : cauchy_line(f, br, p.z, n);
}

} // namespace

std::vector<double> merge_panel_breaks(const std::vector<double>& a,
                                       const std::vector<double>& b) {
  std::vector<double> m;
  m.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
  std::vector<double> out;
  out.reserve(m.size());
  for (double x : m)
    if (out.empty() || x > out.back() * (1.0 + 1e-13)) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------- grids

SpectralGrid2D::SpectralGrid2D(double v, double w, double xmax, double ymax,
                               int nx, int ny, TailModel2D tail)
    : v_(v), w_(w), xmax_(xmax), ymax_(ymax), nx_(nx), ny_(ny), tail_(tail) {
  if (nx < 2 || ny < 2) throw std::invalid_argument("SpectralGrid2D: need >= 2 nodes");
  if (!(v > 1.0 && w > 1.0 && xmax > v && ymax > w))
    throw std::invalid_argument("SpectralGrid2D: bad support window");
  lx0_ = std::log(v);
  dlx_ = (std::log(xmax) - lx0_) / (nx - 1);
  ly0_ = std::log(w);
  dly_ = (std::log(ymax) - ly0_) / (ny - 1);
  val_.assign(static_cast<std::size_t>(nx) * ny, 0.0);
}

SpectralGrid2D SpectralGrid2D::sample(
    const std::function<double(double, double)>& f, double v, double w,
    double xmax, double ymax, int nx, int ny, TailModel2D tail) {
  SpectralGrid2D g(v, w, xmax, ymax, nx, ny, tail);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) g.set(i, j, f(g.xnode(i), g.ynode(j)));
  return g;
}

double SpectralGrid2D::x_tail_factor(double x) const {
  return (xmax_ / x) * std::pow(std::log(xmax_) / std::log(x), tail_.lambda);
}

double SpectralGrid2D::y_tail_factor(double y) const {
  return std::pow(y / ymax_, tail_.alpha) *
         std::pow(std::log(ymax_) / std::log(y), tail_.delta);
}

double SpectralGrid2D::operator()(double x, double y) const {
  if (x < v_ || y < w_ || val_.empty()) return 0.0;
  double fac = 1.0;
  if (x > xmax_) {
    fac *= x_tail_factor(x);
    x = xmax_;
  }
  if (y > ymax_) {
    fac *= y_tail_factor(y);
    y = ymax_;
  }
  const double fx = (std::log(x) - lx0_) / dlx_;
  const double fy = (std::log(y) - ly0_) / dly_;
  int i = std::min(nx_ - 2, std::max(0, static_cast<int>(fx)));
  int j = std::min(ny_ - 2, std::max(0, static_cast<int>(fy)));
  const double u = fx - i, t = fy - j;
  const double* row = val_.data() + static_cast<std::size_t>(i) * ny_ + j;
  const double interp = (1 - u) * ((1 - t) * row[0] + t * row[1]) +
                        u * ((1 - t) * row[ny_] + t * row[ny_ + 1]);
  return fac * interp;
}

double SpectralGrid2D::max_abs() const {
  double m = 0.0;
  for (double x : val_) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> SpectralGrid2D::x_breaks(double xq) const {
  std::vector<double> nodes(nx_);
  for (int i = 0; i < nx_; ++i) nodes[i] = xnode(i);
  return make_breaks(v_, nodes, xmax_, xq);
}

std::vector<double> SpectralGrid2D::y_breaks(double yq) const {
  std::vector<double> nodes(ny_);
  for (int j = 0; j < ny_; ++j) nodes[j] = ynode(j);
  return make_breaks(w_, nodes, ymax_, yq);
}

nlohmann::json SpectralGrid2D::to_json() const {
  return nlohmann::json{
      {"v", v_},   {"w", w_},   {"xmax", xmax_}, {"ymax", ymax_},
      {"nx", nx_}, {"ny", ny_},
      {"tail", {{"alpha", tail_.alpha}, {"delta", tail_.delta}, {"lambda", tail_.lambda}}},
      {"values", val_}};
}

SpectralGrid2D SpectralGrid2D::from_json(const nlohmann::json& j) {
  TailModel2D tail{j.at("tail").at("alpha").get<double>(),
                   j.at("tail").at("delta").get<double>(),
                   j.at("tail").at("lambda").get<double>()};
  SpectralGrid2D g(j.at("v").get<double>(), j.at("w").get<double>(),
                   j.at("xmax").get<double>(), j.at("ymax").get<double>(),
                   j.at("nx").get<int>(), j.at("ny").get<int>(), tail);
  auto vals = j.at("values").get<std::vector<double>>();
  if (vals.size() != g.val_.size())
    throw std::invalid_argument("SpectralGrid2D: values size mismatch");
  g.val_ = std::move(vals);
  return g;
}

SpectralGrid1D::SpectralGrid1D(double v, double xmax, int n, TailModel1D tail,
                               double sigma)
    : v_(v), xmax_(xmax), n_(n), sigma_(sigma), tail_(tail) {
  if (n < 2) throw std::invalid_argument("SpectralGrid1D: need >= 2 nodes");
  if (!(v > 1.0 && xmax > v))
    throw std::invalid_argument("SpectralGrid1D: bad support window");
  lx0_ = std::log(v);
  dlx_ = (std::log(xmax) - lx0_) / (n - 1);
  val_.assign(n, 0.0);
}

SpectralGrid1D SpectralGrid1D::sample(const std::function<double(double)>& f,
                                      double v, double xmax, int n,
                                      TailModel1D tail, double sigma) {
  SpectralGrid1D g(v, xmax, n, tail, sigma);
  for (int i = 0; i < n; ++i) g.set(i, f(g.xnode(i)));
  return g;
}

double SpectralGrid1D::operator()(double x) const {
  if (x < v_ || val_.empty()) return 0.0;
  double fac = 1.0;
  if (x > xmax_) {
    fac = std::pow(x / xmax_, tail_.alpha - 1.0) *
          std::pow(std::log(xmax_) / std::log(x), tail_.delta);
    x = xmax_;
  }
  const double fx = (std::log(x) - lx0_) / dlx_;
  int i = std::min(n_ - 2, std::max(0, static_cast<int>(fx)));
  const double u = fx - i;
  return fac * ((1 - u) * val_[i] + u * val_[i + 1]);
}

std::vector<double> SpectralGrid1D::x_breaks(double xq) const {
  std::vector<double> nodes(n_);
  for (int i = 0; i < n_; ++i) nodes[i] = xnode(i);
  return make_breaks(v_, nodes, xmax_, xq);
}

nlohmann::json SpectralGrid1D::to_json() const {
  return nlohmann::json{
      {"v", v_},     {"xmax", xmax_}, {"n", n_}, {"sigma", sigma_},
      {"tail", {{"alpha", tail_.alpha}, {"delta", tail_.delta}}},
      {"values", val_}};
}

SpectralGrid1D SpectralGrid1D::from_json(const nlohmann::json& j) {
  TailModel1D tail{j.at("tail").at("alpha").get<double>(),
                   j.at("tail").at("delta").get<double>()};
  SpectralGrid1D g(j.at("v").get<double>(), j.at("xmax").get<double>(),
                   j.at("n").get<int>(), tail, j.at("sigma").get<double>());
  auto vals = j.at("values").get<std::vector<double>>();
  if (vals.size() != g.val_.size())
    throw std::invalid_argument("SpectralGrid1D: values size mismatch");
  g.val_ = std::move(vals);
  return g;
}

// ------------------------------------------------------ line integrals

complex panel_integral(const std::function<complex(double)>& f,
                       const std::vector<double>& breaks, int n_per_panel) {
  const QuadRule& q = gauss_legendre(n_per_panel);
  complex acc = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double mid = 0.5 * (breaks[k] + breaks[k + 1]);
    const double hw = 0.5 * (breaks[k + 1] - breaks[k]);
    for (std::size_t i = 0; i < q.size(); ++i)
      acc += hw * q.w[i] * f(mid + hw * q.x[i]);
  }
  return acc;
}

complex cauchy_line(const std::function<complex(double)>& f,
                    const std::vector<double>& breaks, complex z,
                    int n_per_panel) {
  if (z.imag() == 0.0 && z.real() > breaks.front() && z.real() < breaks.back())
    return cauchy_line_boundary(f, breaks, z.real(), Side::Plus, n_per_panel);
  const QuadRule& q = gauss_legendre(n_per_panel);
  complex acc = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double mid = 0.5 * (breaks[k] + breaks[k + 1]);
    const double hw = 0.5 * (breaks[k + 1] - breaks[k]);
    for (std::size_t i = 0; i < q.size(); ++i) {
      const double x = mid + hw * q.x[i];
      acc += hw * q.w[i] * f(x) / (x - z);
    }
  }
  return acc;
}

complex cauchy_line_boundary(const std::function<complex(double)>& f,
                             const std::vector<double>& breaks, double pole,
                             Side side, int n_per_panel) {
  if (!(pole > breaks.front() && pole < breaks.back()))
    throw std::domain_error("cauchy_line_boundary: pole outside range");
  const std::size_t np = breaks.size() - 1;
  std::size_t k = static_cast<std::size_t>(
      std::upper_bound(breaks.begin(), breaks.end(), pole) - breaks.begin() - 1);
  if (k >= np) k = np - 1;
  // subtraction window wide enough that 1/(x - pole) is mild on the
  // first cell outside it
  const std::size_t klo = k > 3 ? k - 3 : 0;
  const std::size_t khi = std::min(np - 1, k + 3);
  const complex fs = f(pole);
  complex acc = fs * std::log((breaks[khi + 1] - pole) / (pole - breaks[klo]));
  acc += complex(0.0, side_sign(side) * pi) * fs;
  const QuadRule& qo = gauss_legendre(n_per_panel);
  const QuadRule& qw = gauss_legendre(kWindowN);
  for (std::size_t p = 0; p < np; ++p) {
    const bool window = p >= klo && p <= khi;
    const QuadRule& q = window ? qw : qo;
    const double mid = 0.5 * (breaks[p] + breaks[p + 1]);
    const double hw = 0.5 * (breaks[p + 1] - breaks[p]);
    for (std::size_t i = 0; i < q.size(); ++i) {
      const double x = mid + hw * q.x[i];
      acc += window ? hw * q.w[i] * (f(x) - fs) / (x - pole)
                    : hw * q.w[i] * f(x) / (x - pole);
    }
  }
  return acc;
}

// --------------------------------------------------------- dispersion

namespace {

complex phi0_core(const SpectralGrid2D& psi, const PoleSpec& ps,
                  const PoleSpec& pt, double xq, double yq) {
  const std::vector<double> xb = psi.x_breaks(xq);
  const std::vector<double> yb = psi.y_breaks(yq);
  auto outer = [&](double x) {
    auto fy = [&, x](double y) { return complex(psi(x, y)); };
    return line(fy, yb, pt);
  };
  return line(outer, xb, ps) / (pi * pi);
}

complex phi1_core(const SpectralGrid1D& phi, const SpectralGrid2D& psi,
                  const PoleSpec& ps, const PoleSpec& pt, double xq, double yq,
                  double phiq) {
  complex acc = 0.0;
  if (!phi.empty()) {
    const std::vector<double> pb = phi.x_breaks(phiq);
    const PoleSpec pp = ps.cut && ps.x > phi.v() && ps.x < phiq
                            ? ps
                            : pole_for(ps.z, phi.v(), phiq);
    auto fp = [&](double x) { return complex(phi(x)); };
    acc += line(fp, pb, pp) / (2.0 * pi);
  }
  if (!psi.empty()) {
    const std::vector<double> xb = psi.x_breaks(xq);
    const std::vector<double> yb = psi.y_breaks(yq);
    auto outer = [&](double x) {
      auto fy = [&, x](double y) { return complex(psi(x, y) / (x + y)); };
      return line(fy, yb, pt);
    };
    acc += (ps.z + pt.z) * line(outer, xb, ps) / (pi * pi);
  }
  return acc;
}

double tail_estimate(const std::function<complex(double, double)>& core,
                     complex base, double xq, double yq) {
  return std::abs(base - core(xq / 4.0, yq)) +
         std::abs(base - core(xq, yq / 4.0));
}

} // namespace

complex phi0(const SpectralGrid2D& psi, complex s, complex t, double* tail_err,
             double tail_scale) {
  const double xq = tail_scale * quad_cut(psi.xmax(), std::abs(s));
  const double yq = tail_scale * quad_cut(psi.ymax(), std::abs(t));
  auto core = [&](double xc, double yc) {
    return phi0_core(psi, pole_for(s, psi.v(), xc), pole_for(t, psi.w(), yc),
                     xc, yc);
  };
  const complex base = core(xq, yq);
  if (tail_err) *tail_err = tail_estimate(core, base, xq, yq);
  return base;
}

complex phi0_boundary(const SpectralGrid2D& psi, double s, Side ss, double t,
                      Side ts, double* tail_err, double tail_scale) {
  const double xq = tail_scale * quad_cut(psi.xmax(), std::abs(s));
  const double yq = tail_scale * quad_cut(psi.ymax(), std::abs(t));
  auto core = [&](double xc, double yc) {
    return phi0_core(psi, pole_for(s, ss, psi.v(), xc),
                     pole_for(t, ts, psi.w(), yc), xc, yc);
  };
  const complex base = core(xq, yq);
  if (tail_err) *tail_err = tail_estimate(core, base, xq, yq);
  return base;
}

complex phi1(const SpectralGrid1D& phi, const SpectralGrid2D& psi, complex s,
             complex t, double* tail_err, double tail_scale) {
  const double xq = tail_scale * quad_cut(psi.xmax(), std::abs(s));
  const double yq = tail_scale * quad_cut(psi.ymax(), std::abs(t));
  const double phiq =
      tail_scale * quad_cut(phi.empty() ? 0.0 : phi.xmax(), std::abs(s));
  auto core = [&](double xc, double yc) {
    return phi1_core(phi, psi, pole_for(s, psi.v(), xc),
                     pole_for(t, psi.w(), yc), xc, yc, phiq);
  };
  const complex base = core(xq, yq);
  if (tail_err) *tail_err = tail_estimate(core, base, xq, yq);
  return base;
}

complex phi1_boundary(const SpectralGrid1D& phi, const SpectralGrid2D& psi,
                      double s, Side ss, double t, Side ts, double* tail_err,
                      double tail_scale) {
  const double xq = tail_scale * quad_cut(psi.xmax(), std::abs(s));
  const double yq = tail_scale * quad_cut(psi.ymax(), std::abs(t));
  const double phiq =
      tail_scale * quad_cut(phi.empty() ? 0.0 : phi.xmax(), std::abs(s));
  auto core = [&](double xc, double yc) {
    return phi1_core(phi, psi, pole_for(s, ss, psi.v(), xc),
                     pole_for(t, ts, psi.w(), yc), xc, yc, phiq);
  };
  const complex base = core(xq, yq);
  if (tail_err) *tail_err = tail_estimate(core, base, xq, yq);
  return base;
}

complex abs_t_from_spectral(const SpectralGrid2D& psi, double s, double t,
                            Side side) {
  const double u = 4.0 - s - t;
  const double xq = quad_cut(std::max(psi.xmax(), psi.ymax()),
                             std::max(std::abs(s), std::abs(u)));
  const std::vector<double> br =
      merge_panel_breaks(psi.x_breaks(xq), psi.y_breaks(xq));
  auto g = [&](double x) { return complex(psi(x, t) + psi(t, x)); };
  const complex i1 = line(g, br, pole_for(s, side, br.front(), br.back()));
  const complex i2 = line(g, br, pole_for(u, other(side), br.front(), br.back()));
  return (i1 + i2) / pi;
}

// ---------------------------------------------------------------- norms

double norm_L_gamma(const std::function<double(double)>& f, double gamma,
                    double lo, double hi) {
  if (!(hi > lo && lo > 0.0)) return 0.0;
  std::vector<double> nodes;
  const double r = std::pow(10.0, 0.125);
  for (double x = lo * r; x < hi; x *= r) nodes.push_back(x);
  const std::vector<double> br = make_breaks(lo, nodes, hi, hi);
  auto integrand = [&](double t) {
    const double lt = std::log(t);
    const double g = std::pow(t, -gamma) * f(t);
    return complex(g * g * (1.0 + lt * lt) / t);
  };
  return std::sqrt(std::max(0.0, panel_integral(integrand, br, 8).real()));
}

double norm_gamma_delta(const std::function<double(double, double)>& f,
                        const std::vector<double>& sgrid, double t_lo,
                        double t_hi, const HolderNormParams& p) {
  double sup = 0.0;
  for (double s : sgrid) {
    const double n1 =
        norm_L_gamma([&](double t) { return f(s, t); }, p.gamma, t_lo, t_hi);
    double holder = 0.0;
    for (double h : p.hset) {
      const double n2 = norm_L_gamma(
          [&](double t) { return f(s + h, t) - f(s, t); }, p.gamma, t_lo, t_hi);
      holder = std::max(holder, std::pow(h, -p.mu) * n2);
    }
    sup = std::max(sup, std::pow(s, -p.delta) * (n1 + holder));
  }
  return sup;
}

// ------------------------------------------------------------ templates

SpectralGrid2D build_positive_template(double v, double w, double alpha,
                                       double delta, double sigma, double mu,
                                       double scale, int nx, int ny,
                                       double xmax, double ymax) {
  TailModel2D tail{alpha, delta, delta};
  auto f = [=](double x, double y) {
    if (x <= v || y <= w) return 0.0;
    return scale * std::pow((x - v) / x, sigma) * std::pow((y - w) / y, mu) *
           std::pow(y, alpha) / x * std::pow(std::log(y), -delta) *
           std::pow(std::log(x), -delta);
  };
  return SpectralGrid2D::sample(f, v, w, xmax, ymax, nx, ny, tail);
}

SpectralGrid1D build_positive_template_1d(double v, double alpha, double delta,
                                          double sigma, double scale, int n,
                                          double xmax) {
  TailModel1D tail{alpha, delta};
  auto f = [=](double x) {
    if (x <= v) return 0.0;
    return scale * std::pow((x - v) / x, sigma) * std::pow(x, alpha - 1.0) *
           std::pow(std::log(x), -delta);
  };
  return SpectralGrid1D::sample(f, v, xmax, n, tail, sigma);
}

TemplateBoundReport check_template_bounds(const SpectralGrid2D& psi,
                                          double alpha, double delta,
                                          double sigma, double mu) {
  TemplateBoundReport rep;
  const double v = psi.v(), w = psi.w();
  auto shape = [&](double x, double y) {
    return std::pow(y, alpha) / x * std::pow(std::log(y), -delta) *
           std::pow(std::log(x), -delta);
  };
  double upper = 0.0, lower = std::numeric_limits<double>::infinity();
  bool nonneg = true;
  // scan grid nodes and cell midpoints (in log coordinates)
  for (int i = 0; i < 2 * psi.nx() - 1; ++i) {
    const double x = i % 2 == 0 ? psi.xnode(i / 2)
                                : std::sqrt(psi.xnode(i / 2) * psi.xnode(i / 2 + 1));
    for (int j = 0; j < 2 * psi.ny() - 1; ++j) {
      const double y = j % 2 == 0
                           ? psi.ynode(j / 2)
                           : std::sqrt(psi.ynode(j / 2) * psi.ynode(j / 2 + 1));
      const double p = psi(x, y);
      if (p < 0.0) nonneg = false;
      upper = std::max(upper, p / shape(x, y));
      const double thr =
          std::pow(std::max(0.0, (x - v) / x), sigma) *
          std::pow(std::max(0.0, (y - w) / y), mu) * shape(x, y);
      if (thr > 0.0) lower = std::min(lower, p / thr);
    }
  }
  rep.fitted_upper_c = upper;
  rep.fitted_lower_c = std::isfinite(lower) ? lower : 0.0;
  rep.pass = nonneg && upper > 0.0 && std::isfinite(upper) &&
             rep.fitted_lower_c > 0.0;
  return rep;
}

// ----------------------------------------------------------- amplitude

MandelstamAmplitude::MandelstamAmplitude(SpectralGrid2D psi)
    : psi_(std::move(psi)), subtracted_(false) {}

MandelstamAmplitude::MandelstamAmplitude(SpectralGrid1D phi, SpectralGrid2D psi)
    : psi_(std::move(psi)), phi_(std::move(phi)), subtracted_(true) {}

std::string MandelstamAmplitude::kind() const {
  return subtracted_ ? "sym-dispersive-subtracted" : "sym-dispersive";
}

complex MandelstamAmplitude::value(complex s, complex t) const {
  const complex u = third_variable(s, t);
  auto term = [&](complex a, complex b) {
    return subtracted_ ? phi1(phi_, psi_, a, b) : phi0(psi_, a, b);
  };
  return term(s, t) + term(t, s) + term(s, u) + term(u, s) + term(t, u) +
         term(u, t);
}

complex MandelstamAmplitude::term_boundary(double a, Side sa, double b,
                                           Side sb) const {
  return subtracted_ ? phi1_boundary(phi_, psi_, a, sa, b, sb)
                     : phi0_boundary(psi_, a, sa, b, sb);
}

complex MandelstamAmplitude::boundary_value(double s, double t,
                                            Side side) const {
  // s and t carry the given side, u = 4 - s - t the opposite one
  const double u = 4.0 - s - t;
  const Side su = other(side);
  return term_boundary(s, side, t, side) + term_boundary(t, side, s, side) +
         term_boundary(s, side, u, su) + term_boundary(u, su, s, side) +
         term_boundary(t, side, u, su) + term_boundary(u, su, t, side);
}

complex MandelstamAmplitude::abs_s(double s, double t) const {
  const double u = 4.0 - s - t;
  if (!subtracted_) return abs_t_from_spectral(psi_, t, s, Side::Plus);
  complex acc = 0.0;
  if (s > phi_.v()) acc += phi_(s); // one half from each of the two s-slots
  const double yq = quad_cut(psi_.ymax(), std::max(std::abs(t), std::abs(u)));
  const double xq = quad_cut(psi_.xmax(), std::max(std::abs(t), std::abs(u)));
  if (s > psi_.v()) {
    const std::vector<double> yb = psi_.y_breaks(yq);
    auto fy = [&](double y) { return complex(psi_(s, y) / (s + y)); };
    acc += (s + t) / pi * line(fy, yb, pole_for(t, Side::Plus, psi_.w(), yq));
    acc += (4.0 - t) / pi * line(fy, yb, pole_for(u, Side::Minus, psi_.w(), yq));
  }
  if (s > psi_.w()) {
    const std::vector<double> xb = psi_.x_breaks(xq);
    auto fx = [&](double x) { return complex(psi_(x, s) / (x + s)); };
    acc += (s + t) / pi * line(fx, xb, pole_for(t, Side::Plus, psi_.v(), xq));
    acc += (4.0 - t) / pi * line(fx, xb, pole_for(u, Side::Minus, psi_.v(), xq));
  }
  return acc;
}

std::vector<double> MandelstamAmplitude::t_cut_breaks(double tq) const {
  // the t-absorptive part has interpolation kinks at both grid axes
  std::vector<double> b =
      merge_panel_breaks(psi_.x_breaks(tq), psi_.y_breaks(tq));
  if (subtracted_) b = merge_panel_breaks(b, phi_.x_breaks(tq));
  return b;
}

complex MandelstamAmplitude::abs_t(double s, double t) const {
  // the symmetrized amplitude is s <-> t symmetric
  if (!subtracted_) return abs_t_from_spectral(psi_, s, t, Side::Plus);
  return abs_s(t, s);
}

} // namespace mandelstam

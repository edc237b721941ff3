#include <doctest.h>

#include <cmath>
#include <random>

#include "mandelstam/dispersion.hpp"

using namespace mandelstam;

namespace {

// un-normalized quartic bump on (a,b), mass (b-a)^9 / 630
double bump(double x, double a, double b) {
  if (x <= a || x >= b) return 0.0;
  const double u = (x - a) * (b - x);
  return u * u * u * u;
}

// midpoint-rule Cauchy integral, independent of the panel machinery
complex dense_cauchy(const std::function<double(double)>& f, double lo,
                     double hi, complex z, int n = 1000000) {
  const double h = (hi - lo) / n;
  complex acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double x = lo + (k + 0.5) * h;
    acc += f(x) / (x - z);
  }
  return acc * h;
}

complex dense_cauchy_boundary(const std::function<double(double)>& f,
                              double lo, double hi, double s, Side side,
                              int n = 1000000) {
  const double fs = f(s);
  const double h = (hi - lo) / n;
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double x = lo + (k + 0.5) * h;
    acc += (f(x) - fs) / (x - s);
  }
  return complex(acc * h + fs * std::log((hi - s) / (s - lo)),
                 side_sign(side) * pi * fs);
}

} // namespace

TEST_CASE("spectral grid interpolation and serialization") {
  auto f = [](double x, double y) { return std::cos(x / 7.0) + y / (y + 3.0); };
  SpectralGrid2D g = SpectralGrid2D::sample(f, 4.0, 16.0, 1e3, 1e3, 48, 40,
                                            TailModel2D{0.5, 2.0, 2.0});
  CHECK(g(g.xnode(7), g.ynode(13)) ==
        doctest::Approx(f(g.xnode(7), g.ynode(13))).epsilon(1e-14));
  // below the support corner
  CHECK(g(3.9, 100.0) == 0.0);
  CHECK(g(100.0, 15.9) == 0.0);
  // interpolation error is second order in the cell size
  CHECK(g(10.0, 40.0) == doctest::Approx(f(10.0, 40.0)).epsilon(1e-3));
  // tail attaches continuously and follows the power-log shape
  const double edge = g(g.xmax() * (1.0 + 1e-12), 50.0);
  CHECK(edge == doctest::Approx(g(g.xmax(), 50.0)).epsilon(1e-9));
  const double r = g(4.0 * g.xmax(), 50.0) / g(2.0 * g.xmax(), 50.0);
  const double want = (0.5) * std::pow(std::log(2.0 * g.xmax()) /
                                           std::log(4.0 * g.xmax()),
                                       2.0);
  CHECK(r == doctest::Approx(want).epsilon(1e-12));
  // json round trip is exact
  SpectralGrid2D g2 = SpectralGrid2D::from_json(g.to_json());
  CHECK(g2.samples() == g.samples());
  CHECK(g2(57.0, 91.0) == g(57.0, 91.0));

  SpectralGrid1D p = SpectralGrid1D::sample(
      [](double x) { return std::exp(-x / 9.0); }, 4.0, 1e3, 64,
      TailModel1D{0.5, 2.0}, 0.5);
  CHECK(p(p.xnode(5)) == doctest::Approx(std::exp(-p.xnode(5) / 9.0)).epsilon(1e-14));
  SpectralGrid1D p2 = SpectralGrid1D::from_json(p.to_json());
  CHECK(p2(123.0) == p(123.0));
}

TEST_CASE("cauchy line integrals against closed forms") {
  const std::vector<double> br{0.0, 0.5, 1.5, 2.0};
  // PV int_0^2 x^2/(x-1) dx = 4
  auto f = [](double x) { return complex(x * x); };
  const complex plus = cauchy_line_boundary(f, br, 1.0, Side::Plus);
  CHECK(plus.real() == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(plus.imag() == doctest::Approx(pi).epsilon(1e-12));
  const complex minus = cauchy_line_boundary(f, br, 1.0, Side::Minus);
  CHECK(minus.imag() == doctest::Approx(-pi).epsilon(1e-12));
  // complex pole: int_0^2 dx/(x-z) = log((2-z)/(-z))
  const complex z(0.7, 0.9);
  const complex got =
      cauchy_line([](double) { return complex(1.0); }, br, z, 24);
  const complex want = std::log((2.0 - z) / (-z));
  CHECK(std::abs(got - want) < 1e-12);
  // plain panel integral
  const std::vector<double> brs{0.0, 1.0, 2.0, pi};
  const complex s =
      panel_integral([](double x) { return complex(std::sin(x)); }, brs, 12);
  CHECK(s.real() == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("phi0 against a separable dense oracle") {
  auto fx = [](double x) { return bump(x, 20.0, 30.0); };
  auto fy = [](double y) { return bump(y, 30.0, 50.0); };
  SpectralGrid2D psi = SpectralGrid2D::sample(
      [&](double x, double y) { return fx(x) * fy(y); }, 4.0, 16.0, 60.0, 80.0,
      140, 140, TailModel2D{0.5, 2.0, 2.0});
  // the bilinear interpolant of a product of 1D samples is the product of
  // the 1D log-linear interpolants; recover them from grid rows
  int jref = 0, iref = 0;
  for (int j = 0; j < psi.ny(); ++j)
    if (fy(psi.ynode(j)) > fy(psi.ynode(jref))) jref = j;
  for (int i = 0; i < psi.nx(); ++i)
    if (fx(psi.xnode(i)) > fx(psi.xnode(iref))) iref = i;
  const double gyr = fy(psi.ynode(jref)), fxr = fx(psi.xnode(iref));
  auto fxi = [&](double x) { return psi(x, psi.ynode(jref)) / gyr; };
  auto fyi = [&](double y) { return psi(psi.xnode(iref), y) / fxr; };

  SUBCASE("complex points") {
    const complex s(10.0, 3.0), t(-5.0, 2.0);
    const complex want = dense_cauchy(fxi, 4.0, 60.0, s) *
                         dense_cauchy(fyi, 16.0, 80.0, t) / (pi * pi);
    const complex got = phi0(psi, s, t);
    CHECK(std::abs(got - want) < 1e-7 * std::abs(want));
  }
  SUBCASE("boundary points with either side") {
    const double s = 25.0, t = -3.0;
    const complex want = dense_cauchy_boundary(fxi, 4.0, 60.0, s, Side::Plus) *
                         dense_cauchy(fyi, 16.0, 80.0, complex(t)) / (pi * pi);
    const complex got = phi0_boundary(psi, s, Side::Plus, t, Side::Plus);
    CHECK(std::abs(got - want) < 1e-6 * std::abs(want));
    // Schwarz reflection for real spectral data
    const complex gm = phi0_boundary(psi, s, Side::Minus, t, Side::Plus);
    CHECK(std::abs(gm - std::conj(got)) < 1e-12 * std::abs(got));
  }
  SUBCASE("point-mass magnitude") {
    // mass concentrated near (25, 40): phi0(0,0) ~ mass / (pi^2 * 25 * 40)
    const double mx = std::pow(10.0, 9.0) / 630.0;
    const double my = std::pow(20.0, 9.0) / 630.0;
    const complex got = phi0(psi, complex(0.0), complex(0.0));
    const double want = mx * my / (pi * pi * 25.0 * 40.0);
    CHECK(got.real() == doctest::Approx(want).epsilon(0.05));
    CHECK(std::abs(got.imag()) < 1e-12 * want);
  }
}

TEST_CASE("phi1 against a grid-aligned 2D oracle") {
  SpectralGrid2D psi = SpectralGrid2D::sample(
      [](double x, double y) { return bump(x, 20.0, 30.0) * bump(y, 30.0, 50.0); },
      4.0, 16.0, 60.0, 80.0, 100, 100, TailModel2D{0.5, 2.0, 2.0});
  SpectralGrid1D phis = SpectralGrid1D::sample(
      [](double x) { return bump(x, 10.0, 40.0); }, 4.0, 60.0, 90,
      TailModel1D{0.5, 2.0}, 0.5);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ur(-8.0, 45.0), ui(1.0, 4.0);
  for (int c = 0; c < 3; ++c) {
    const complex s(ur(rng), ui(rng)), t(ur(rng), -ui(rng));
    // double integral by per-cell Gauss, exact on the bilinear pieces
    complex dbl = 0.0;
    for (int i = 0; i + 1 < psi.nx(); ++i) {
      const QuadRule qx = gauss_legendre(8, psi.xnode(i), psi.xnode(i + 1));
      for (int j = 0; j + 1 < psi.ny(); ++j) {
        const QuadRule qy = gauss_legendre(8, psi.ynode(j), psi.ynode(j + 1));
        for (std::size_t a = 0; a < qx.size(); ++a)
          for (std::size_t b = 0; b < qy.size(); ++b) {
            const double x = qx.x[a], y = qy.x[b];
            dbl += qx.w[a] * qy.w[b] * psi(x, y) /
                   ((x + y) * (x - s) * (y - t));
          }
      }
    }
    const complex want =
        dense_cauchy([&](double x) { return phis(x); }, 4.0, 60.0, s) /
            (2.0 * pi) +
        (s + t) * dbl / (pi * pi);
    const complex got = phi1(phis, psi, s, t);
    CHECK(std::abs(got - want) < 1e-6 * std::abs(want));
  }
}

TEST_CASE("absorptive part from the spectral function") {
  SpectralGrid2D psi = SpectralGrid2D::sample(
      [](double x, double y) {
        return bump(x, 6.0, 30.0) * bump(y, 20.0, 50.0) * 1e-12;
      },
      4.0, 16.0, 60.0, 80.0, 120, 120, TailModel2D{0.5, 2.0, 2.0});
  const double s = 24.0, t = 26.0;
  const complex d = abs_t_from_spectral(psi, s, t, Side::Plus);
  // Plemelj: the imaginary part is the local spectral density
  CHECK(d.imag() == doctest::Approx(psi(s, t) + psi(t, s)).epsilon(1e-10));
  // real part against a dense principal-value oracle
  auto g = [&](double x) { return psi(x, t) + psi(t, x); };
  const double u = 4.0 - s - t;
  const complex want =
      (dense_cauchy_boundary(g, 4.0, 80.0, s, Side::Plus, 4000000) +
       dense_cauchy(g, 4.0, 80.0, complex(u), 4000000)) /
      pi;
  CHECK(d.real() == doctest::Approx(want.real()).epsilon(1e-6));
}

TEST_CASE("amplitude absorptive parts match boundary discontinuities") {
  SpectralGrid2D psi = SpectralGrid2D::sample(
      [](double x, double y) { return bump(x, 6.0, 30.0) * bump(y, 20.0, 50.0); },
      4.0, 16.0, 60.0, 80.0, 100, 100, TailModel2D{0.5, 2.0, 2.0});
  SpectralGrid1D phis = SpectralGrid1D::sample(
      [](double x) { return bump(x, 10.0, 40.0); }, 4.0, 60.0, 90,
      TailModel1D{0.5, 2.0}, 0.5);
  const double s = 30.0, t = -2.0; // u = -24, only the s-channel cut is active
  for (bool subtracted : {false, true}) {
    const MandelstamAmplitude m =
        subtracted ? MandelstamAmplitude(phis, psi) : MandelstamAmplitude(psi);
    const complex bp = m.boundary_value(s, t, Side::Plus);
    const complex bm = m.boundary_value(s, t, Side::Minus);
    CHECK(std::abs(bm - std::conj(bp)) < 1e-10 * std::abs(bp));
    const complex disc = (bp - bm) / complex(0.0, 2.0);
    const complex as = m.abs_s(s, t);
    CHECK(std::abs(as - disc) < 1e-6 * std::abs(bp) + 1e-12);
    // s <-> t symmetry of the crossing-symmetric sum
    const complex at = m.abs_t(t, s);
    CHECK(std::abs(at - as) < 1e-12 * std::abs(as) + 1e-15);
  }
}

TEST_CASE("crossing symmetry of dispersive amplitudes") {
  SpectralGrid2D psi = SpectralGrid2D::sample(
      [](double x, double y) { return bump(x, 6.0, 30.0) * bump(y, 20.0, 50.0); },
      4.0, 16.0, 60.0, 80.0, 64, 64, TailModel2D{0.5, 2.0, 2.0});
  MandelstamAmplitude m(psi);
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> ur(-3.0, 3.5), ui(0.05, 2.0);
  for (int c = 0; c < 8; ++c) {
    const complex s(ur(rng), ui(rng)), t(ur(rng), -ui(rng));
    CHECK(crossing_residual(m, s, t) <=
          1e-12 * std::abs(m.value(s, t)) + 1e-15);
  }
}

TEST_CASE("weighted L2 norm oracle") {
  // f = t^gamma on [1, e]: norm^2 = int_1^e (1 + log^2 t) dt/t = 4/3
  const double gamma = 0.3;
  auto f = [&](double t) { return std::pow(t, gamma); };
  CHECK(norm_L_gamma(f, gamma, 1.0, std::exp(1.0)) ==
        doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-10));
  // homogeneity
  auto f3 = [&](double t) { return 3.0 * std::pow(t, gamma); };
  CHECK(norm_L_gamma(f3, gamma, 1.0, std::exp(1.0)) ==
        doctest::Approx(3.0 * std::sqrt(4.0 / 3.0)).epsilon(1e-10));
}

TEST_CASE("layered Hoelder norm") {
  HolderNormParams p;
  p.gamma = 0.3;
  p.delta = -0.1;
  p.mu = 0.25;
  // f(s,t) = s t^gamma on [1,e]: ||f(s,.)|| = s sqrt(4/3),
  // ||f(s+h,.) - f(s,.)|| = h sqrt(4/3)
  auto f = [&](double s, double t) { return s * std::pow(t, p.gamma); };
  const std::vector<double> sgrid{4.0, 8.0};
  const double got = norm_gamma_delta(f, sgrid, 1.0, std::exp(1.0), p);
  double want = 0.0;
  for (double s : sgrid) {
    double holder = 0.0;
    for (double h : p.hset)
      holder = std::max(holder, std::pow(h, 1.0 - p.mu));
    want = std::max(want,
                    std::pow(s, -p.delta) * (s + holder) * std::sqrt(4.0 / 3.0));
  }
  CHECK(got == doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("positive template satisfies its shape bounds") {
  const double alpha = 0.5, delta = 2.0, sigma = 0.5, mu = 0.25;
  SpectralGrid2D psi =
      build_positive_template(4.0, 16.0, alpha, delta, sigma, mu, 2.0, 96, 96);
  const TemplateBoundReport rep =
      check_template_bounds(psi, alpha, delta, sigma, mu);
  CHECK(rep.pass);
  CHECK(rep.fitted_lower_c > 0.0);
  CHECK(rep.fitted_upper_c >= rep.fitted_lower_c);
  CHECK(rep.fitted_upper_c < 10.0 * rep.fitted_lower_c);
  // tail region follows the closed form once the threshold factors saturate
  const double x = 3e4, y = 5e4;
  const double closed = 2.0 * std::pow((x - 4.0) / x, sigma) *
                        std::pow((y - 16.0) / y, mu) * std::pow(y, alpha) / x *
                        std::pow(std::log(y), -delta) *
                        std::pow(std::log(x), -delta);
  CHECK(psi(x, y) == doctest::Approx(closed).epsilon(2e-3));
  // 1D companion
  SpectralGrid1D phi = build_positive_template_1d(4.0, alpha, delta, sigma);
  CHECK(phi(10.0) > 0.0);
  CHECK(phi(3e4) == doctest::Approx(std::pow((3e4 - 4.0) / 3e4, sigma) *
                                    std::pow(3e4, alpha - 1.0) *
                                    std::pow(std::log(3e4), -delta))
                        .epsilon(2e-3));
}

TEST_CASE("tail truncation estimate bounds a 4x longer tail") {
  SpectralGrid2D psi = build_positive_template(4.0, 16.0, -0.5, 2.0, 0.5, 0.25,
                                               1.0, 72, 72);
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> ur(-10.0, 50.0), ui(1.0, 5.0);
  for (int c = 0; c < 10; ++c) {
    const complex s(ur(rng), ui(rng)), t(ur(rng), -ui(rng));
    double err = 0.0;
    const complex base = phi0(psi, s, t, &err);
    const complex longer = phi0(psi, s, t, nullptr, 4.0);
    CHECK(std::abs(base - longer) <= err + 1e-13 * std::abs(base));
  }
}

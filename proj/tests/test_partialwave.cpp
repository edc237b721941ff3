#include <doctest.h>

#include <cmath>

#include "mandelstam/dispersion.hpp"
#include "mandelstam/partialwave.hpp"
#include "mandelstam/specialfn.hpp"

using namespace mandelstam;

namespace {

// quartic bump on (a,b) normalized to peak 1
double bump(double x, double a, double b) {
  if (x <= a || x >= b) return 0.0;
  const double u = (x - a) * (b - x);
  const double peak = std::pow(0.25 * (b - a) * (b - a), 4.0);
  return u * u * u * u / peak;
}

MandelstamAmplitude bump_amplitude(int n = 100) {
  SpectralGrid2D psi = SpectralGrid2D::sample(
      [](double x, double y) { return bump(x, 6.0, 30.0) * bump(y, 20.0, 50.0); },
      4.0, 16.0, 60.0, 80.0, n, n, TailModel2D{0.5, 2.0, 2.0});
  return MandelstamAmplitude(psi);
}

struct FixedAbs : AmplitudeModel {
  std::function<double(double, double)> f;
  explicit FixedAbs(std::function<double(double, double)> g) : f(std::move(g)) {}
  complex value(complex, complex) const override { return 0.0; }
  complex abs_s(double s, double t) const override { return f(s, t); }
  std::string kind() const override { return "fixed-abs"; }
};

PartialWaveTable const_table(const std::vector<double>& s, int l_max,
                             complex a) {
  PartialWaveTable tbl;
  tbl.s = s;
  tbl.l_max = l_max;
  tbl.a.assign(s.size() * (l_max + 1), a);
  return tbl;
}

} // namespace

TEST_CASE("direct projection against Legendre orthogonality") {
  const double s = 10.0;
  LambdaAmplitude one([](complex, complex) { return complex(1.0); });
  auto row = project_pw(one, s, 8);
  CHECK(row[0].real() == doctest::Approx(0.5 * std::sqrt((s - 4.0) / s))
                             .epsilon(1e-12));
  for (int l = 1; l <= 8; ++l) CHECK(std::abs(row[l]) <= 1e-10);
  // A = P_1(z): only the l = 1 wave survives, with weight 2/3
  LambdaAmplitude p1([s](complex, complex t) {
    return complex(1.0) + 2.0 * t / (s - 4.0);
  });
  auto row1 = project_pw(p1, s, 4);
  CHECK(row1[1].real() ==
        doctest::Approx(std::sqrt((s - 4.0) / s) / 6.0).epsilon(1e-12));
  CHECK(std::abs(row1[0]) <= 1e-12);
  CHECK(std::abs(row1[3]) <= 1e-12);
  CHECK_THROWS_AS(project_pw(one, 4.0, 2), std::domain_error);
}

TEST_CASE("odd waves of a crossing-symmetric amplitude vanish") {
  const MandelstamAmplitude m = bump_amplitude(72);
  auto row = project_pw(m, 30.0, 7);
  double even_scale = 0.0;
  for (int l = 0; l <= 7; l += 2) even_scale = std::max(even_scale, std::abs(row[l]));
  CHECK(even_scale > 0.0);
  for (int l = 1; l <= 7; l += 2) CHECK(std::abs(row[l]) <= 1e-10);
}

TEST_CASE("froissart-gribov agrees with direct projection") {
  const MandelstamAmplitude m = bump_amplitude(100);
  const double s = 30.0;
  auto row = project_pw(m, s, 8, 64);
  for (int l : {4, 6, 8}) {
    const complex fg = froissart_gribov(m, s, l);
    CHECK(std::abs(fg - row[l]) <= 1e-6 * std::abs(row[l]));
  }
}

TEST_CASE("froissart-gribov edge behavior") {
  std::vector<double> breaks{4.0};
  for (double t = 8.0; t <= 1.1e6; t *= 2.0) breaks.push_back(t);
  CHECK(std::abs(froissart_gribov([](double) { return complex(0.0); }, 30.0, 4,
                                  breaks)) == 0.0);
  // linearly growing absorptive part: the l = 0 tail never converges
  CHECK_THROWS_AS(froissart_gribov([](double t) { return complex(t); }, 30.0,
                                   0, breaks),
                  std::domain_error);
}

TEST_CASE("froissart-gribov envelope with a power-log integrand") {
  // h(t) = t^alpha (log t)^-delta: the integral against Q_l stays inside
  // c s^(alpha+1) (log s)^-delta Phi_l^0(4;s) with a stable constant
  const double alpha = -0.5, delta = 2.0;
  std::vector<double> breaks{4.0};
  for (double t = 4.0 * 1.3; t <= 1e8; t *= 1.3) breaks.push_back(t);
  auto h = [&](double t) {
    return complex(std::pow(t, alpha) * std::pow(std::log(t), -delta));
  };
  const int l = 2;
  double rmin = 1e300, rmax = 0.0;
  for (double s : {10.0, 1e2, 1e3, 1e4}) {
    const complex fg = froissart_gribov(h, s, l, breaks);
    const double raw = std::abs(fg) * pi * std::sqrt(s * (s - 4.0)) / 2.0;
    const double env = std::pow(s, alpha + 1.0) *
                       std::pow(std::log(s), -delta) * phi_l_mu(l, 0.0, 4.0, s);
    const double r = raw / env;
    CHECK(std::isfinite(r));
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
  }
  CHECK(rmax < 100.0 * rmin);
}

TEST_CASE("total cross section normalization") {
  FixedAbs unit([](double, double) { return 1.0; });
  CHECK(total_cross_section(unit, 8.0) ==
        doctest::Approx(pi * std::sqrt(2.0)).epsilon(1e-13));
  FixedAbs three([](double, double) { return 3.0; });
  CHECK(total_cross_section(three, 8.0) ==
        doctest::Approx(3.0 * pi * std::sqrt(2.0)).epsilon(1e-13));
  FixedAbs zero([](double, double) { return 0.0; });
  CHECK(total_cross_section(zero, 8.0) == 0.0);
  CHECK_THROWS_AS(total_cross_section(unit, 3.0), std::domain_error);
}

TEST_CASE("elastic residual") {
  const double d = 0.3;
  const complex elastic = std::sin(d) * std::exp(complex(0.0, d));
  auto tbl = const_table({6.0, 12.0}, 2, elastic);
  CHECK(elastic_residual(tbl).worst < 1e-15);
  auto tbl2 = const_table({6.0}, 1, complex(0.0, 0.5));
  CHECK(elastic_residual(tbl2).worst == doctest::Approx(0.25));
  // rows outside the elastic strip do not count
  auto tbl3 = const_table({40.0}, 1, complex(0.0, 0.5));
  CHECK(elastic_residual(tbl3).worst == 0.0);
}

TEST_CASE("inelastic band check") {
  CHECK(inelastic_check(const_table({6.0}, 1, complex(0.0, 0.5))).pass);
  CHECK_FALSE(inelastic_check(const_table({6.0}, 1, complex(0.0, 1.2))).pass);
  CHECK_FALSE(inelastic_check(const_table({6.0}, 1, complex(0.9, 0.0))).pass);
}

TEST_CASE("linearized unitarity constants") {
  auto r = linear_unitarity_check(const_table({20.0, 40.0}, 3, complex(0.0, 0.5)), 4.0);
  CHECK(r.c1 == doctest::Approx(0.5));
  CHECK(r.c2 == 0.0);
  CHECK(r.scale == doctest::Approx(2.0));
  auto r2 = linear_unitarity_check(const_table({20.0}, 1, complex(0.1, 0.1)), 4.0);
  CHECK(r2.c2 == doctest::Approx(1.0));
  auto r3 = linear_unitarity_check(const_table({20.0}, 1, complex(0.9, 0.0)), 4.0);
  CHECK_FALSE(r3.c2_finite);
}

TEST_CASE("threshold envelope fit") {
  std::vector<double> sg;
  for (double s = 4.0 + 1e-6; s < 1e4; s *= 2.5) sg.push_back(s);
  const std::vector<double> tg{0.0, -1.0, -3.0};
  FixedAbs exact([](double s, double) { return std::sqrt((s - 4.0) / s); });
  auto r = threshold_bound_check(exact, sg, tg);
  CHECK(r.pass);
  CHECK(r.n == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(r.c == doctest::Approx(1.0).epsilon(1e-6));
  // missing threshold factor blows up the ratio near s = 4
  FixedAbs flat([](double, double) { return 1.0; });
  CHECK_FALSE(threshold_bound_check(flat, sg, tg).pass);
  // dispersive amplitude with positive spectral data passes
  const MandelstamAmplitude m = bump_amplitude(72);
  std::vector<double> sg2;
  for (double s = 4.001; s < 200.0; s *= 1.8) sg2.push_back(s);
  CHECK(threshold_bound_check(m, sg2, tg).pass);
}

TEST_CASE("asymptotic exponent fits on synthetic data") {
  std::vector<double> s, im1, im2, im3;
  for (double x = 1e3; x <= 1e8; x *= 2.0) {
    s.push_back(x);
    im1.push_back(x * std::pow(std::log(x), -3.0));
    im2.push_back(x * std::log(x));
    im3.push_back(7.0);
  }
  auto f1 = fit_exponents_from_samples(s, im1);
  CHECK(f1.alpha == doctest::Approx(1.0).epsilon(0.02));
  CHECK(f1.delta == doctest::Approx(3.0).epsilon(0.1));
  auto f2 = fit_exponents_from_samples(s, im2);
  CHECK(f2.alpha == doctest::Approx(1.0).epsilon(0.02));
  CHECK(f2.delta == doctest::Approx(-1.0).epsilon(0.1));
  auto f3 = fit_exponents_from_samples(s, im3);
  CHECK(std::abs(f3.alpha) < 0.02);
  CHECK(std::abs(f3.delta) < 0.3);
  CHECK(f1.to_json().at("alpha").get<double>() == f1.alpha);
}

TEST_CASE("partial wave bound lemmas on a dispersive amplitude") {
  const MandelstamAmplitude m = bump_amplitude(72);
  LemmaParams p;
  p.l_max = 4;
  p.n_s = 6;
  auto eins = verify_pw_bound_lemmas(m, 20.0, 4.0, LemmaMode::FiniteRange, p);
  CHECK(eins.pass);
  CHECK(eins.c_abs > 0.0);
  auto zwei = verify_pw_bound_lemmas(m, 100.0, 4.0, LemmaMode::Global, p);
  CHECK(zwei.pass);
  // zero amplitude: all constants vanish
  LambdaAmplitude zero([](complex, complex) { return complex(0.0); });
  auto z = verify_pw_bound_lemmas(zero, 20.0, 4.0, LemmaMode::FiniteRange, p);
  CHECK(z.pass);
  CHECK(z.c_abs == 0.0);
}

TEST_CASE("unitarity scaling") {
  auto r = scale_for_unitarity(const_table({6.0, 9.0}, 2, complex(0.0, 0.5)));
  CHECK(r.positivity_ok);
  CHECK(r.lambda == doctest::Approx(0.5).epsilon(1e-10));
  auto r2 = scale_for_unitarity(const_table({6.0}, 1, complex(0.0, 1.0)));
  CHECK(r2.lambda == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_FALSE(scale_for_unitarity(const_table({6.0}, 1, complex(0.1, -0.2)))
                  .positivity_ok);
  // dividing by lambda restores the lower unitarity inequality; doubling
  // lambda leaves a strictly positive margin
  auto tbl = const_table({6.0, 9.0}, 2, complex(0.2, 0.3));
  auto sc = scale_for_unitarity(tbl);
  REQUIRE(sc.positivity_ok);
  auto lower = [](const PartialWaveTable& t) {
    double worst = 1e300;
    for (const complex& a : t.a) worst = std::min(worst, a.imag() - std::norm(a));
    return worst;
  };
  CHECK(lower(scaled_by(tbl, sc.lambda)) >= -1e-12);
  CHECK(lower(scaled_by(tbl, 2.0 * sc.lambda)) > 0.0);
}

#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "mandelstam/kinematics.hpp"

using namespace mandelstam;

TEST_CASE("third variable") {
  const complex s(2.0, 0.3), t(-1.0, 0.1);
  CHECK(std::abs(s + t + third_variable(s, t) - 4.0) == 0.0);
}

TEST_CASE("classify points") {
  CHECK(classify_point(complex(1.0, 0.5), complex(0.0)).kind ==
        DomainLabel::Kind::Interior);
  auto sc = classify_point(complex(5.0, 0.0), complex(-1.0));
  CHECK(sc.kind == DomainLabel::Kind::SCut);
  auto tc = classify_point(complex(1.0), complex(7.0, -1e-14));
  CHECK(tc.kind == DomainLabel::Kind::TCut);
  CHECK(tc.side == Side::Minus);
  // s + t <= 0 means u >= 4
  auto uc = classify_point(complex(-3.0), complex(1.0));
  CHECK(uc.kind == DomainLabel::Kind::UCut);
  CHECK(classify_point(complex(2.0), complex(1.0)).kind ==
        DomainLabel::Kind::Interior);
}

TEST_CASE("grid spec") {
  GridSpec g{1.0, 100.0, 3, true};
  auto p = g.points();
  CHECK(p.size() == 3);
  CHECK(p[0] == doctest::Approx(1.0));
  CHECK(p[1] == doctest::Approx(10.0));
  CHECK(p[2] == doctest::Approx(100.0));
  GridSpec lin{0.0, 1.0, 5, false};
  CHECK(lin.points()[2] == doctest::Approx(0.5));
}

namespace {
// closed-form model with an s-cut only: value and absorptive part known
struct CutModel : AmplitudeModel {
  // F(s,t) = log(4 - s) * (t - 40)^-1, cut s in [4, inf),
  // Abs_s F = -pi... log(4-s): for s+i0, 4-s-i0 -> log|4-s| - i pi
  complex value(complex s, complex t) const override {
    return std::log(4.0 - s) / (t - 40.0);
  }
  std::string kind() const override { return "cutmodel"; }
};
} // namespace

TEST_CASE("default boundary value and absorptive parts") {
  CutModel m;
  const double s = 9.0, t = -2.0;
  const complex want = complex(std::log(5.0), -pi) / (t - 40.0);
  CHECK(std::abs(m.boundary_value(s, t, Side::Plus) - want) < 1e-8);
  const complex as = m.abs_s(s, t);
  CHECK(as.real() == doctest::Approx(-pi / (t - 40.0)).epsilon(1e-7));
  CHECK(std::abs(m.abs_t(s, t)) < 1e-9);
}

TEST_CASE("crossing symmetrization") {
  auto base = std::make_shared<LambdaAmplitude>(
      [](complex s, complex t) { return std::exp(-s / 37.0) / (30.0 - t); });
  SymmetrizedAmplitude sym(base);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> ur(-3.0, 3.5), ui(0.05, 2.0);
  for (int i = 0; i < 100; ++i) {
    const complex s(ur(rng), ui(rng));
    const complex t(ur(rng), -ui(rng));
    CHECK(crossing_residual(sym, s, t) <= 1e-12 * std::abs(sym.value(s, t)) + 1e-15);
  }
  // asymmetric base fails
  LambdaAmplitude plain([](complex s, complex t) { return s * s + t; },
                        "plain");
  CHECK(crossing_residual(plain, complex(1.0, 1.0), complex(0.5, -0.3)) > 1e-3);
}

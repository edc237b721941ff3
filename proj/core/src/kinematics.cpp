#include "mandelstam/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace mandelstam {

DomainLabel classify_point(complex s, complex t, double tol) {
  const complex u = third_variable(s, t);
  DomainLabel lab;
  auto near_cut = [&](complex z) {
    return std::abs(z.imag()) <= tol && z.real() >= 4.0 - tol;
  };
  if (near_cut(s)) {
    lab.kind = DomainLabel::Kind::SCut;
    lab.side = s.imag() >= 0 ? Side::Plus : Side::Minus;
  } else if (near_cut(t)) {
    lab.kind = DomainLabel::Kind::TCut;
    lab.side = t.imag() >= 0 ? Side::Plus : Side::Minus;
  } else if (near_cut(u)) {
    lab.kind = DomainLabel::Kind::UCut;
    lab.side = u.imag() >= 0 ? Side::Plus : Side::Minus;
  }
  return lab;
}

std::vector<double> GridSpec::points() const {
  std::vector<double> p(n);
  if (n == 1) {
    p[0] = lo;
    return p;
  }
  if (log_spaced) {
    if (!(lo > 0.0)) throw std::invalid_argument("GridSpec: log grid needs lo > 0");
    const double la = std::log(lo), lb = std::log(hi);
    for (int i = 0; i < n; ++i)
      p[i] = std::exp(la + (lb - la) * i / (n - 1));
  } else {
    for (int i = 0; i < n; ++i) p[i] = lo + (hi - lo) * i / (n - 1);
  }
  return p;
}

complex AmplitudeModel::boundary_value(double s, double t, Side side) const {
  // Richardson step in the off-axis distance
  const double eps = 1e-5 * std::max(1.0, std::abs(s));
  const complex ds(0.0, side_sign(side));
  const complex f1 = value(complex(s) + eps * ds, complex(t));
  const complex f2 = value(complex(s) + 0.5 * eps * ds, complex(t));
  return 2.0 * f2 - f1;
}

complex AmplitudeModel::abs_s(double s, double t) const {
  const complex up = boundary_value(s, t, Side::Plus);
  const complex dn = boundary_value(s, t, Side::Minus);
  return (up - dn) / complex(0.0, 2.0);
}

complex AmplitudeModel::abs_t(double s, double t) const {
  // boundary in t at fixed s: reuse the s-machinery on the swapped function
  const double eps = 1e-5 * std::max(1.0, std::abs(t));
  auto at = [&](Side side) {
    const complex dt(0.0, side_sign(side));
    const complex f1 = value(complex(s), complex(t) + eps * dt);
    const complex f2 = value(complex(s), complex(t) + 0.5 * eps * dt);
    return 2.0 * f2 - f1;
  };
  return (at(Side::Plus) - at(Side::Minus)) / complex(0.0, 2.0);
}

std::vector<double> AmplitudeModel::t_cut_breaks(double tq) const {
  // default: 8 log panels per decade starting at the elastic threshold
  std::vector<double> b{4.0};
  const double r = std::pow(10.0, 0.125);
  for (double x = 4.0 * r; x < tq; x *= r) b.push_back(x);
  if (tq > b.back()) b.push_back(tq);
  return b;
}

complex sym_combine(const AmplitudeFn& f, complex s, complex t) {
  const complex u = third_variable(s, t);
  return f(s, t) + f(t, s) + f(s, u) + f(u, s) + f(t, u) + f(u, t);
}

complex SymmetrizedAmplitude::value(complex s, complex t) const {
  const complex u = third_variable(s, t);
  return base_->value(s, t) + base_->value(t, s) + base_->value(s, u) +
         base_->value(u, s) + base_->value(t, u) + base_->value(u, t);
}

double crossing_residual(const AmplitudeModel& a, complex s, complex t) {
  const complex u = third_variable(s, t);
  const complex v[6] = {a.value(s, t), a.value(t, u), a.value(u, s),
                        a.value(t, s), a.value(s, u), a.value(u, t)};
  double worst = 0.0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      worst = std::max(worst, std::abs(v[i] - v[j]));
  return worst;
}

} // namespace mandelstam

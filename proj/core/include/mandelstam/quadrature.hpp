#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace mandelstam {

struct QuadRule {
  std::vector<double> x;
  std::vector<double> w;
  std::size_t size() const { return x.size(); }
};

// Gauss-Legendre rule on [-1,1]; cached per order.
const QuadRule& gauss_legendre(int n);

// Gauss-Legendre rule mapped to [a,b].
QuadRule gauss_legendre(int n, double a, double b);

// Gauss-Jacobi rule for \int_0^1 t^mu f(t) dt: weights absorb t^mu.
QuadRule gauss_jacobi01(int n, double mu);

template <class F>
auto integrate(const QuadRule& q, F&& f) -> decltype(f(0.0)) {
  decltype(f(0.0)) acc{};
  for (std::size_t i = 0; i < q.x.size(); ++i) acc += q.w[i] * f(q.x[i]);
  return acc;
}

// Composite Gauss-Legendre over log-spaced panels of [a,b], n nodes each.
QuadRule log_panels(double a, double b, int panels_per_decade, int n);

// Principal value of \int_a^b f(x)/(x-s) dx, s strictly inside (a,b),
// by singularity subtraction against f(s).
template <class F>
double principal_value(const QuadRule& q, F&& f, double s, double a, double b) {
  const double fs = f(s);
  double acc = 0.0;
  for (std::size_t i = 0; i < q.x.size(); ++i) {
    const double x = q.x[i];
    acc += q.w[i] * (f(x) - fs) / (x - s);
  }
  return acc + fs * std::log((b - s) / (s - a));
}

} // namespace mandelstam

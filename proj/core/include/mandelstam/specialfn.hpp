#pragma once

#include <vector>

#include "mandelstam/quadrature.hpp"
#include "mandelstam/types.hpp"

namespace mandelstam {

// Legendre functions of the first kind.
double legendre_p(int l, double z);
complex legendre_p(int l, complex z);
void legendre_p_all(int lmax, double z, std::vector<double>& out);

// Legendre functions of the second kind, real z > 1.
// Upward recursion only very close to z = 1 (where the growing companion
// solution is harmless); Miller backward recursion normalized by Q_0
// elsewhere, with an adaptive start index.
double legendre_q(int l, double z);
void legendre_q_all(int lmax, double z, std::vector<double>& out);

inline double legendre_q0(double z) {
  return 0.5 * std::log((z + 1.0) / (z - 1.0));
}

// tau_v(s) = 4v + 4v^2/(s-4): image of the t-threshold under s-channel maps.
inline double tau_v(double v, double s) {
  return 4.0 * v + 4.0 * v * v / (s - 4.0);
}

// Phi_l^mu(v; s) = int_0^1 t^mu Q_l(1 + 2(t+v)/(s-4)) dt,
// Gauss-Jacobi in t with the t^mu weight.
double phi_l_mu(int l, double mu, double v, double s, int nodes = 64);

complex log_gamma(complex z);
complex euler_beta(complex x, complex y);

// Normalized weight (x-a)^4 (b-x)^4 / N on [a,b], N = (b-a)^9 B(5,5).
class BumpWeight {
public:
  BumpWeight(double a, double b);
  double operator()(double x) const;
  double a() const { return a_; }
  double b() const { return b_; }
  // Gauss-Legendre nodes on [a,b] with the weight absorbed into w.
  QuadRule rule(int n = 32) const;
  // L(s) = int sigma(x) log(x - s) dx, principal branch.
  complex log_moment(complex s) const;
  complex log_moment(double s, Side side) const;

private:
  double a_, b_, norm_;
  QuadRule rule32_;
};

// Smooth cutoff: 1 for s <= s0, 0 for s >= s1, quintic smoothstep between.
class Cutoff {
public:
  explicit Cutoff(double s0 = 16.0, double s1 = 18.0) : s0_(s0), s1_(s1) {}
  double operator()(double s) const;
  double lower() const { return s0_; }
  double upper() const { return s1_; }

private:
  double s0_, s1_;
};

// H(s,t) = L(s) + L(4-s-t) - L(t+1) with L the log-moment of a bump on
// [17,18]. On the boundary s >= 18 (t real, t+1 below the bump support)
// H(s +- i0, t) = h(s,t) -+ i pi with h real.
class SmearedLogH {
public:
  SmearedLogH() : sigma_(17.0, 18.0) {}
  explicit SmearedLogH(const BumpWeight& sigma) : sigma_(sigma) {}
  complex L(complex s) const { return sigma_.log_moment(s); }
  complex L(double s, Side side) const { return sigma_.log_moment(s, side); }
  complex operator()(complex s, complex t) const;
  // boundary value in s; t real, off the shifted support
  complex boundary(double s, double t, Side side) const;
  double h(double s, double t) const { return boundary(s, t, Side::Plus).real(); }
  const BumpWeight& sigma() const { return sigma_; }

private:
  BumpWeight sigma_;
};

} // namespace mandelstam

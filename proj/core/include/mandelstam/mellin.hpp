#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mandelstam/dispersion.hpp"
#include "mandelstam/specialfn.hpp"
#include "mandelstam/types.hpp"

namespace mandelstam {

// s_+^nu: principal power on the positive axis, zero for s <= 0
complex plus_pow(double s, complex nu);

// Samples of a transform a(nu) along the vertical line nu = gamma + i x,
// uniform symmetric x grid. tail_abs / tail_decay record the measured
// truncation level and the fitted power-law order of the |a| tail.
struct MellinLine {
  double gamma = 0.0;
  double dx = 0.05;
  std::vector<double> x;  // ascending, symmetric about 0
  std::vector<complex> a;
  double tail_abs = 0.0;
  double tail_decay = 0.0;

  static MellinLine sample(const std::function<complex(complex)>& fn,
                           double gamma, double x_max, double dx = 0.05);

  std::size_t size() const { return x.size(); }
  complex nu(std::size_t i) const { return {gamma, x[i]}; }
  complex at(double xq) const; // linear interpolation, 0 outside the window
  // [ (pi/2) int (|a|^2 + |da/dx|^2) dx ]^(1/2), central differences
  double sobolev_norm() const;
  double l2_norm() const; // [ int |a|^2 dx ]^(1/2)
  bool conjugate_symmetric(double tol = 1e-9) const;
  MellinLine conjugate_reflect() const; // line of the conjugate original
  std::string to_csv() const;           // columns x, Re, Im
  void fit_tail();                      // refresh the decay certificate
};

// a(nu) = (1/pi) int_0^inf f(t) t^(-nu-1) dt over [t_lo, t_hi];
// x_max = 0 probes |a| outward until it falls below 1e-10 of the peak;
// oversample multiplies the panel count (for kinked integrands)
MellinLine mellin_forward(const std::function<complex(double)>& f,
                          double gamma, double t_lo, double t_hi,
                          double x_max = 0.0, double dx = 0.05,
                          int oversample = 1);
// single-point transform
complex mellin_point(const std::function<complex(double)>& f, complex nu,
                     double t_lo, double t_hi);
// f(t) = (1/2i) int_gamma a(nu) t^nu dnu, t > 0
complex mellin_inverse(const MellinLine& line, double t);

// F(t) = -(1/2i) int_gamma a(nu) (-t)^nu / sin(pi nu) dnu, with the
// transform poles left of the line and the nonnegative integers right of it
complex khuri_representation(const MellinLine& line, complex t);
complex khuri_contour(const std::function<complex(complex)>& a, double gamma,
                      double x_max, complex t, double dx = 0.05);

// residue of the n-th daughter pole at nu = alpha - n:
// r_n = ((4-s)^n / n!) (-alpha)_n (-alpha)_n / (-2alpha)_n beta
complex khuri_residues(complex alpha, complex beta, double s, int n);

// leading pole plus N daughter poles with scale t1, built so that the
// inverse transform is Hoelder continuous (each pole paired with -1/(nu+1))
complex khuri_ansatz(complex alpha, complex beta, double s, double t1,
                     int n_daughters, complex nu);

// Trajectory/residue data for the pole ansatz. alpha0 is the input
// real analytic function with a cut at s >= 16 and positive imaginary
// part there; sigma = alpha0(4) in (0,2) fixes the threshold exponent;
// chi > 0 on [4,16] is extended to [16,18] by chi(16) * cutoff.
struct KhuriPoleSpec {
  std::function<complex(complex)> alpha0;
  double sigma = 0.8;
  std::function<double(double)> chi;
  std::function<complex(complex)> beta;
  double t1 = 20.0;
  int n_daughters = 2;
  double gamma1 = 2.5; // > sup Re alpha, in (2,3)
  bool ghost_killing = false;
  Cutoff cutoff{16.0, 18.0};

  void validate() const;
  nlohmann::json to_json() const; // scalar parameters only
};

// default input trajectory: alpha_inf + (sigma - alpha_inf) sqrt(12/(16-s))
std::function<complex(complex)> make_alpha0(double sigma, double alpha_inf);

// alpha[chi](s) = alpha0(s)
//   + ((s-4)/pi) int_4^18 sqrt((x-4)/x) (x-4)^(sigma-1) chi(x)/(x-s) dx
complex trajectory_from_chi(const KhuriPoleSpec& spec, complex s);
complex trajectory_from_chi_boundary(const KhuriPoleSpec& spec, double s,
                                     Side side);
// closed-form value at s = 0; below alpha0(0) for positive chi
double intercept(const KhuriPoleSpec& spec);
// beta(s), times the ghost-killing factor alpha(s) when flagged
complex residue_at(const KhuriPoleSpec& spec, complex s);
// the ansatz transform a_R(s, nu) with alpha, beta taken from the spec
complex pole_ansatz(const KhuriPoleSpec& spec, complex s, complex nu);

// Regge amplitude from the ansatz: contour integral along Re nu =
// gamma_line; integer poles n with n < gamma_line are collected as
// a_R(s,n) t^n (the shifted-contour form). Requires the Khuri pole real
// parts to stay off the line.
complex regge_reconstruct(const KhuriPoleSpec& spec, complex s, complex t,
                          double gamma_line);
// t-u symmetrized form along gamma1: integral of a_R [(-t)^nu + (-u)^nu]
// plus 2 a_R(s,0) + (4-s) a_R(s,1) + (t^2+u^2) a_R(s,2)
complex regge_reconstruct_symmetric(const KhuriPoleSpec& spec, complex s,
                                    complex t);

// truncated elastic unitarity in transform space:
// w'(s,nu) = (1/2) lambda(s) sqrt((s-4)/s) (s-4)_+^nu B(1+nu,1+nu)
//            a(s+i0,nu) a(s-i0,nu)
MellinLine truncated_unitarity_map(const MellinLine& a_plus,
                                   const MellinLine& a_minus, double s,
                                   const Cutoff& lambda = Cutoff{});

// right side of the residue identity in the elastic interval:
// sqrt(s/(s-4)) (s-4)_+^(-alpha) B^-1(1+alpha,1+alpha) Im alpha
//   - 2i b(s-i0,alpha) Im alpha,  alpha = alpha(s+i0)
complex residue_identity_rhs(complex alpha_plus, complex b_minus_at_alpha,
                             double s);
// beta_bar - rhs; zero for consistent (alpha, beta, b) triples
complex residue_identity_residual(complex alpha_plus, complex beta_bar,
                                  complex b_minus_at_alpha, double s);

// symmetric two-line unitarity kernel
// M(nu,xi,eta) = B(1+xi,nu-xi) B(1+eta,nu-eta) B(1+nu,1-nu+xi+eta)
complex mb_kernel(complex nu, complex xi, complex eta);
// I(gamma,gamma';s,nu) = -(1/4pi^2) int_gamma dxi int_gamma' deta
//   (s-4)^(xi+eta-2nu) M(nu,xi,eta) a(s+i0,xi) a(s-i0,eta),
// contour condition gamma, gamma' < Re nu < 1 + gamma + gamma'
complex mb_unitarity_integral(const MellinLine& a_plus,
                              const MellinLine& a_minus, double s, complex nu);
// w(s,nu) = sqrt((s-4)/s) (s-4)^nu I(gamma,gamma';s,nu), 4 <= s <= 16
complex mb_unitarity_w(const MellinLine& a_plus, const MellinLine& a_minus,
                       double s, complex nu);

// threshold behaviour of a residue consistent with the identity above:
// Im beta(t+i0) = c2 (t-4)^(sigma+1/2) log(t-4) + O((t-4)^(sigma+1/2)),
// c2 > 0, and Im beta < 0 on an interval (4, t_neg_hi)
struct Lemma1Report {
  double c2 = 0.0;
  double t_neg_hi = 4.0;  // end of the detected negativity interval
  double log_slope = 0.0; // slope of log|ratio| vs log log(1/(t-4))
  bool c2_positive = false;
  bool im_beta_negative = false;
  bool pass = false;
  nlohmann::json to_json() const;
};
Lemma1Report lemma1_threshold_check(
    const std::function<complex(double)>& alpha_plus,
    const std::function<complex(double)>& beta_plus, double sigma);

} // namespace mandelstam

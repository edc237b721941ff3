#pragma once

#include <functional>
#include <string>

#include "mandelstam/kinematics.hpp"
#include "mandelstam/quadrature.hpp"
#include "mandelstam/regge.hpp"
#include "mandelstam/specialfn.hpp"

namespace mandelstam {

// Crossing-trajectory factor gamma(xi): real analytic on C \ [2,inf),
// gamma(0) = 0, |gamma| <= delta < 1, Im gamma(x+i0) >= 0 on the cut.
// Default: gamma(xi) = kappa (sqrt2 - w)/(sqrt2 + w), w = sqrt(2-xi)
// principal branch, which maps the cut plane into |gamma| < kappa.
class CutTrajectory {
public:
  explicit CutTrajectory(double kappa = 0.8);
  CutTrajectory(std::function<complex(complex)> f, double delta);

  complex operator()(complex xi) const { return f_(xi); }
  complex boundary(double x, Side side) const; // approach of the cut x >= 2
  double delta() const { return delta_; }
  complex derivative0() const { return d0_; } // gamma'(0) by a Cauchy circle
  // trajectory pair along the imaginary axis: gamma(i sqrt(-t)) = a + i b
  double a(double t) const; // <= 0, monotone decreasing in sqrt(-t)
  double b(double t) const; // >= 0

private:
  std::function<complex(complex)> f_;
  double delta_;
  complex d0_;
};

// sampled invariant screen for user-supplied evaluators
struct CutTrajectoryScreen {
  bool zero_at_origin = false;
  bool bounded = false;
  bool im_positive = false;
  bool a_monotone = false;
  bool pass = false;
};
CutTrajectoryScreen screen_cut_trajectory(const CutTrajectory& g);

// ingredients of the saturating family: trajectory factor, smearing weight
// rho on [lambda1,lambda2] in (0, 1/delta), dispersive residue beta with
// positive partial wave coefficients, and the envelope parameter p
struct FroissartSpec {
  CutTrajectory gamma;
  BumpWeight rho{0.3, 0.9};
  ResidueSpec beta{1.0, 2.0};
  double p = 0.5;
  void validate() const;
};

// Gamma(s,t,z) = -exp[(1+z)H(s,t)/2]/cos(pi z/2), |z| < 1
complex gamma_amplitude(const SmearedLogH& h, complex s, complex t, complex z);
complex gamma_amplitude_boundary(const SmearedLogH& h, double s, double t,
                                 Side side, complex z);
// closed form of the s >= 18 boundary value: (tan(pi z/2)+i) e^{(1+z)h/2}
complex gamma_amplitude_abs(const SmearedLogH& h, double s, double t,
                            complex z);

// The s-u symmetric saturating term in pair variables (x,y), w = 4-x-y:
// phi = w^{-1/2}[Gamma(gamma(sqrt w)) - Gamma(gamma(-sqrt w))] with the
// pair log H~ = L(x)+L(y)-L(w+1); phi_tilde smears the trajectory scale
// over rho; term = beta(w) H~ phi_tilde.
class FroissartModel {
public:
  explicit FroissartModel(FroissartSpec spec,
                          BumpWeight sigma = {17.0, 18.0});

  complex phi(complex x, complex y, double lambda = 1.0) const;
  complex phi_boundary(double x, Side sx, double y, Side sy, Side sw,
                       double lambda = 1.0) const;
  complex phi_tilde(complex x, complex y) const;
  complex phi_tilde_boundary(double x, Side sx, double y, Side sy,
                             Side sw) const;
  complex term(complex x, complex y) const;
  complex term_boundary(double x, Side sx, double y, Side sy, Side sw) const;

  // closed-form absorptive part of phi for x >= 18 and w < 0:
  // (2/sqrt(-w)) e^{(1+a)h/2} sin(b h/2) with a+ib = lambda gamma(i sqrt(-w))
  double im_phi(double s, double t, double lambda = 1.0) const;
  // residue bookkeeping diagnostic: 2 exp[-L(t)(1+a(t))/2]
  double beta0_diag(double t) const;

  const FroissartSpec& spec() const { return spec_; }
  const SmearedLogH& H() const { return h_; }

private:
  complex pair_H(complex x, complex y) const;
  complex pair_H_boundary(double x, Side sx, double y, Side sy,
                          Side sw) const;
  complex phi_from_H(complex hval, complex w, Side sw, bool on_boundary,
                     double lambda) const;

  FroissartSpec spec_;
  SmearedLogH h_;
  QuadRule lam_;
};

// assemblies of the term, sharing the Regge assembly conventions
class FroissartAmplitude : public AmplitudeModel {
public:
  explicit FroissartAmplitude(FroissartModel m,
                              ReggeAssembly assembly = ReggeAssembly::Full);
  complex value(complex s, complex t) const override;
  complex boundary_value(double s, double t, Side side) const override;
  complex abs_s(double s, double t) const override;
  std::string kind() const override;
  const FroissartModel& model() const { return m_; }

private:
  FroissartModel m_;
  ReggeAssembly assembly_;
};

// shrinkage envelope: s (log s)^m (1+sqrt(-t) log s)^-n on -1 <= t <= 0,
// s^p (-t)^-(1+p)/2 for t < -1
double chi_mn(int m, int n, double p, double s, double t);

// smallest c with |bv(s,t)| <= c chi_{m,n}(s,t) over the physical grid
struct EnvelopeFit {
  double c = 0.0;
  double worst_s = 0.0;
  double worst_t = 0.0;
};
EnvelopeFit shrink_envelope_check(
    const std::function<complex(double, double)>& bv, int m, int n, double p,
    double s_max = 1e8, int ns = 40, int nt = 24);

} // namespace mandelstam

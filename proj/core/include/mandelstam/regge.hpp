#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mandelstam/kinematics.hpp"
#include "mandelstam/partialwave.hpp"
#include "mandelstam/specialfn.hpp"

namespace mandelstam {

// Bounded real analytic trajectory with a cut starting at t = 4:
// alpha(t) = alpha(inf) + pi^-1 int_4^inf Im alpha(x+i0)/(x-t) dx.
// The rising mode uses Im alpha(x) = a sqrt(x-4) (4/x)^p (threshold-bounded,
// integrable for p > 3/2); the fixed mode has Im alpha = 0.
class Trajectory {
public:
  static Trajectory fixed_pole(double alpha0);
  static Trajectory rising(double alpha_inf, double a, double p = 2.0);

  complex operator()(complex t) const;
  complex boundary(double t, Side side) const;
  complex gamma(complex t) const { return 0.5 * (*this)(t); }
  complex gamma_boundary(double t, Side side) const {
    return 0.5 * boundary(t, side);
  }
  double im_alpha(double x) const;
  bool fixed() const { return fixed_; }
  double alpha_inf() const { return alpha_inf_; }
  double intercept() const; // alpha(0)

  nlohmann::json to_json() const;
  static Trajectory from_json(const nlohmann::json& j);

private:
  bool fixed_ = true;
  double alpha_inf_ = 1.0;
  double a_ = 0.0, p_ = 2.0;
  std::vector<double> breaks_;
};

// sampled certificates: Im alpha >= 0 on the cut, alpha real below it,
// monotone convex on (-inf,4], intercept <= 1 when Froissart-constrained
struct TrajectoryReport {
  bool im_positive = false;
  bool real_below_cut = false;
  bool convex_increasing = false;
  bool intercept_ok = false;
  bool pass = false;
};
TrajectoryReport check_trajectory(const Trajectory& tr,
                                  bool froissart_constrained = true);

// Residue factor beta_1: dispersive with positive density,
// beta_1(t) = pi^-1 int rho(x)/(x-t) dx, rho(x) = a sqrt(x-4) (4/x)^q,
// times optional ghost-killing polynomial prod_k (1 - t/z_k) with z_k < 0
// cancelling sin(pi gamma) poles when alpha(inf) < 0.
class ResidueSpec {
public:
  ResidueSpec(double a, double q, std::vector<double> ghost_zeros = {});
  complex beta1(complex t) const;
  complex beta1_boundary(double t, Side side) const;
  const std::vector<double>& ghost_zeros() const { return ghost_zeros_; }
  // decay exponent of the dispersive factor minus the polynomial degree
  double delta_res() const { return 1.0 - double(ghost_zeros_.size()); }

  nlohmann::json to_json() const;
  static ResidueSpec from_json(const nlohmann::json& j);

private:
  double a_, q_;
  std::vector<double> ghost_zeros_;
  std::vector<double> breaks_;
};

// R(x,y) = -beta(w)/sin(pi gamma(w)) iint sigma(x')sigma(y')
//          [(x'-x)(y'-y)]^gamma(w),  w = 4-x-y,
// with factor-wise principal logs; optional double-pole factor H(x,y)/2.
// beta(w) = beta1(w) * beta0(w), beta0(w) = int sigma(x')(x'-w-1)^-gamma(w).
class ReggeModel {
public:
  ReggeModel(Trajectory tr, ResidueSpec res, BumpWeight sigma = {17.0, 18.0},
             bool double_pole = false);

  complex term(complex x, complex y) const;
  // boundary value with explicit sides for the two symmetric variables and
  // the trajectory variable w = 4-x-y (sides matter only on the cuts)
  complex term_boundary(double x, Side sx, double y, Side sy, Side sw) const;

  // absorptive decomposition on the physical boundary, s >= 18, 4-s<=t<=0:
  // N = Im R(s+i0,u), M = Re R(s+i0,u) = -cot(pi gamma(t)) N
  double N(double s, double t) const;
  double M(double s, double t) const;

  complex beta(complex w) const;
  complex beta0(complex w) const;
  const Trajectory& trajectory() const { return tr_; }
  const ResidueSpec& residue() const { return res_; }
  const BumpWeight& sigma() const { return sigma_; }
  bool double_pole() const { return double_pole_; }

private:
  Trajectory tr_;
  ResidueSpec res_;
  BumpWeight sigma_;
  bool double_pole_ = false;
  SmearedLogH h_;
  QuadRule rule_;

  complex prefactor(complex w) const; // -beta/sin(pi gamma)
};

// assemblies of the s-u symmetric term
enum class ReggeAssembly { Full, SPair, Crossed };
// Full: R(s,u)+R(s,t)+R(t,u); SPair: R(s,u)+R(s,t); Crossed: R(t,u)
class ReggeAmplitude : public AmplitudeModel {
public:
  explicit ReggeAmplitude(ReggeModel m,
                          ReggeAssembly assembly = ReggeAssembly::Full);
  complex value(complex s, complex t) const override;
  complex boundary_value(double s, double t, Side side) const override;
  complex abs_s(double s, double t) const override;
  std::string kind() const override;
  const ReggeModel& model() const { return m_; }

private:
  ReggeModel m_;
  ReggeAssembly assembly_;
};

// Taylor coefficients c_n(s) in x = t + (s-4)/2 over an s-grid
struct ClassACoefficients {
  std::vector<double> s;
  int n_max = 0;
  std::vector<double> c; // row-major (s, n)
  double at(std::size_t is, int n) const { return c[is * (n_max + 1) + n]; }
  double& at(std::size_t is, int n) { return c[is * (n_max + 1) + n]; }
  // coefficient positivity; the constant term can be excluded (membership
  // modulo constants, which is what exp-composition uses)
  bool positive(double tol = 1e-12, bool include_constant = true) const;
  double worst(bool include_constant = true) const;
};

// c_n(s) = pi^-1 int_4^inf f(t) ((s-4)/2 + t)^(-n-1) dt
ClassACoefficients classA_from_dispersion(const std::function<double(double)>& f,
                                          const std::vector<double>& sgrid,
                                          int n_max, double cut_hi = 1e8);
ClassACoefficients classA_combine(const ClassACoefficients& a,
                                  const ClassACoefficients& b, double ca,
                                  double cb);
ClassACoefficients classA_product(const ClassACoefficients& a,
                                  const ClassACoefficients& b);
ClassACoefficients classA_exp(const ClassACoefficients& a, double lambda = 1.0);
// closed-form coefficients of -log(t1 - t) + c log(u1 - u), u = 4-s-t
ClassACoefficients classA_log_composite(double t1, double u1, double cfac,
                                        const std::vector<double>& sgrid,
                                        int n_max);

// partial order via Legendre coefficients of phi2 - phi1 on an s-grid
struct OrderCheck {
  bool pass = false;
  double worst = 0.0; // most negative coefficient found
};
OrderCheck order_check(const std::function<double(double, double)>& phi1,
                       const std::function<double(double, double)>& phi2,
                       const std::vector<double>& sgrid, double s1, int l_max,
                       double tol = 1e-10);

// smallest c2 with -c2 N < M < c2 N in the partial order; fails when some
// Legendre coefficient of N vanishes against a nonzero one of M
struct LinearizedUnitarity {
  double c2 = 0.0;
  bool ok = false;
  double worst_n = 0.0; // most negative N-coefficient
};
LinearizedUnitarity linearized_unitarity_verify(
    const std::function<double(double, double)>& M,
    const std::function<double(double, double)>& N,
    const std::vector<double>& sgrid, double s1, int l_max);

// fitted smallest c with |Im cot(pi gamma(t+i0))| <= c Im gamma(t+i0), t > 4
double cot_bound_check(const Trajectory& tr,
                       const std::vector<double>& tgrid);

// |c_n^G| <= c2 c_n^F for dispersion integrals of g against positive f;
// the hypothesis |g| <= c1 f near threshold and at large t is sampled first
struct LemmaCompareResult {
  bool hypothesis_ok = false;
  double c1 = 0.0;
  double c2 = 0.0;
  bool pass = false;
};
LemmaCompareResult lemma_compare(const std::function<double(double)>& f,
                                 const std::function<double(double)>& g,
                                 double t1, double t2,
                                 const std::vector<double>& sgrid, int n_max);

// completion of a t-u symmetric term to a fully crossing symmetric,
// inelastically unitary amplitude: search scale lambda and a positive
// dispersive background G so that lambda f_l + g_l passes the band check
enum class CompletionMode { Drei, Vier };
struct CompletionResult {
  bool ok = false;
  double lambda = 0.0;
  double g_scale = 0.0;
  bool subtracted = false;
  PartialWaveTable table;
  nlohmann::json to_json() const;
};
CompletionResult crossing_completion(const AmplitudeModel& F,
                                     CompletionMode mode,
                                     const std::vector<double>& sgrid,
                                     int l_max, double alpha_inf);

} // namespace mandelstam

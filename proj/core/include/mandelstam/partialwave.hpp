#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mandelstam/kinematics.hpp"
#include "mandelstam/types.hpp"

namespace mandelstam {

// a_l(s) over an s-grid, l = 0..l_max, row-major in (s, l).
struct PartialWaveTable {
  std::vector<double> s;
  int l_max = 0;
  std::vector<complex> a;
  std::string provenance = "direct"; // "direct" or "fg"
  bool threshold_factor = true; // a_l carries the ((s-4)/s)^(1/2) kinematics

  complex at(std::size_t is, int l) const { return a[is * (l_max + 1) + l]; }
  complex& at(std::size_t is, int l) { return a[is * (l_max + 1) + l]; }
  std::size_t rows() const { return s.size(); }
  std::string to_csv() const; // columns: s, l, re_a, im_a
};

// a_l(s) = (1/2)[s(s-4)]^(-1/2) int_{4-s}^0 A(s+i0,t) P_l(z) dt,
// z = 1 + 2t/(s-4), by Gauss-Legendre in z with >= 2(l_max+1) nodes.
std::vector<complex> project_pw(const AmplitudeModel& A, double s, int l_max,
                                int n_nodes = 0);
PartialWaveTable project_pw_table(const AmplitudeModel& A,
                                  const std::vector<double>& sgrid, int l_max,
                                  int n_nodes = 0);

// a_l(s) = (2/pi)[s(s-4)]^(-1/2) int_4^inf A_t(s+i0,t) Q_l(1+2t/(s-4)) dt
// for even l above the polynomial degree; throws on a non-convergent tail.
complex froissart_gribov(const std::function<complex(double)>& abs_t_row,
                         double s, int l, const std::vector<double>& t_breaks);
complex froissart_gribov(const AmplitudeModel& A, double s, int l,
                         double tq = 0.0);

// sigma_tot(s) = 8 pi A_s(s,0) / sqrt(s(s-4))
double total_cross_section(const AmplitudeModel& A, double s);

// |Im a_l - |a_l|^2| per entry, restricted to the elastic strip 4<=s<=16
struct ElasticReport {
  std::vector<double> residual; // aligned with tbl.a; 0 outside the strip
  double worst = 0.0;
};
ElasticReport elastic_residual(const PartialWaveTable& tbl);

// 1 >= Im a_l >= |a_l|^2 with worst margin (negative = violated)
struct InelasticReport {
  std::vector<double> margin;
  double worst = 0.0;
  bool pass = false;
};
InelasticReport inelastic_check(const PartialWaveTable& tbl, double tol = 0.0);

// smallest c1 with |f_l| <= c1 and smallest c2 with |Re f_l| <= c2 Im f_l
// over s >= s1; scale = 1/(c1(1+c2))
struct LinearUnitarity {
  double c1 = 0.0;
  double c2 = 0.0;
  double scale = 0.0;
  bool c2_finite = true;
};
LinearUnitarity linear_unitarity_check(const PartialWaveTable& tbl, double s1);

// fit |A_s(s,t)| <= c sqrt((s-4)/s) (1+|s|+|t|)^n over the grid
struct ThresholdBound {
  double c = 0.0;
  double n = 0.0;
  double worst_ratio = 0.0; // max |A_s| / envelope after the fit
  bool pass = false;
};
ThresholdBound threshold_bound_check(const AmplitudeModel& A,
                                     const std::vector<double>& sgrid,
                                     const std::vector<double>& tgrid);

// weighted least squares of log Im A(s,0) ~ alpha log s - delta log log s + c
struct ExponentFit {
  double alpha = 0.0;
  double delta = 0.0;
  double c = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
  double residual = 0.0; // rms of weighted fit residuals
  nlohmann::json to_json() const;
};
ExponentFit fit_asymptotic_exponents(const AmplitudeModel& A,
                                     const GridSpec& window);
ExponentFit fit_exponents_from_samples(const std::vector<double>& s,
                                       const std::vector<double>& im_a);

// partial-wave bound certificates:
//  finite mode, 4 < s <= s1:
//    |f_l| <= c_abs ((s-4)/s)^(-1/2) Phi_l^mu(t1;s)
//    |Im f_l| <= c_im Phi_l^mu(t1;s)
//    Im f_l - 2|f_l|^2 >= -c_lower s^gamma Phi_l^mu(t1;s)
//  global mode, s >= 4:
//    |f_l| <= c_abs (s/(s-4))^(1/2) s^gamma Phi_l^mu(t1;s)
//    Im f_l - 2|f_l|^2 >= -c_lower s^gamma Phi_l^mu(t1;s)
enum class LemmaMode { FiniteRange, Global };
struct LemmaParams {
  double mu = 0.5;
  double gamma = -0.5;
  int l_max = 8;
  int n_s = 12;
};
struct LemmaFitReport {
  double c_abs = 0.0;
  double c_im = 0.0;
  double c_lower = 0.0;
  double worst_margin = 0.0;
  bool pass = false;
};
LemmaFitReport verify_pw_bound_lemmas(const AmplitudeModel& A, double s1,
                                      double t1, LemmaMode mode,
                                      const LemmaParams& p = {});

// smallest lambda with lambda Im a_l >= |a_l|^2 everywhere (binary search);
// fails when some Im a_l < 0 against a nonzero |a_l|
struct ScaleResult {
  double lambda = 0.0;
  bool positivity_ok = false;
};
ScaleResult scale_for_unitarity(const PartialWaveTable& tbl);
PartialWaveTable scaled_by(const PartialWaveTable& tbl, double lambda);

} // namespace mandelstam

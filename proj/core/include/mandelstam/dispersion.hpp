#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mandelstam/kinematics.hpp"
#include "mandelstam/quadrature.hpp"
#include "mandelstam/types.hpp"

namespace mandelstam {

// Tail shape psi ~ y^alpha x^-1 (log y)^-delta (log x)^-lambda beyond the
// sampled window, attached multiplicatively at the grid edge.
struct TailModel2D {
  double alpha = -0.5;
  double delta = 2.0;
  double lambda = 2.0;
};

// Tail shape phi ~ x^(alpha-1) (log x)^-delta.
struct TailModel1D {
  double alpha = 0.5;
  double delta = 2.0;
};

// Double spectral function on [v,inf) x [w,inf): log-mapped sample grid,
// bilinear interpolation in (log x, log y), multiplicative power-log tails.
class SpectralGrid2D {
public:
  SpectralGrid2D() = default;
  SpectralGrid2D(double v, double w, double xmax, double ymax, int nx, int ny,
                 TailModel2D tail);
  static SpectralGrid2D sample(const std::function<double(double, double)>& f,
                               double v, double w, double xmax, double ymax,
                               int nx, int ny, TailModel2D tail);

  double operator()(double x, double y) const;

  double v() const { return v_; }
  double w() const { return w_; }
  double xmax() const { return xmax_; }
  double ymax() const { return ymax_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  const TailModel2D& tail() const { return tail_; }
  double xnode(int i) const { return std::exp(lx0_ + i * dlx_); }
  double ynode(int j) const { return std::exp(ly0_ + j * dly_); }
  double sample_at(int i, int j) const { return val_[i * ny_ + j]; }
  void set(int i, int j, double value) { val_[i * ny_ + j] = value; }
  const std::vector<double>& samples() const { return val_; }
  double max_abs() const;
  bool empty() const { return val_.empty(); }

  // panel boundaries aligned with the grid cells, threshold-refined at the
  // support edge and log-extended to xq for the analytic tail
  std::vector<double> x_breaks(double xq) const;
  std::vector<double> y_breaks(double yq) const;

  nlohmann::json to_json() const;
  static SpectralGrid2D from_json(const nlohmann::json& j);

private:
  double v_ = 4.0, w_ = 16.0, xmax_ = 1e4, ymax_ = 1e4;
  int nx_ = 0, ny_ = 0;
  TailModel2D tail_;
  double lx0_ = 0, dlx_ = 0, ly0_ = 0, dly_ = 0;
  std::vector<double> val_;

  double x_tail_factor(double x) const;
  double y_tail_factor(double y) const;
};

// Single spectral function on [v,inf).
class SpectralGrid1D {
public:
  SpectralGrid1D() = default;
  SpectralGrid1D(double v, double xmax, int n, TailModel1D tail, double sigma);
  static SpectralGrid1D sample(const std::function<double(double)>& f, double v,
                               double xmax, int n, TailModel1D tail,
                               double sigma);
  double operator()(double x) const;
  double v() const { return v_; }
  double xmax() const { return xmax_; }
  int n() const { return n_; }
  double sigma() const { return sigma_; }
  const TailModel1D& tail() const { return tail_; }
  double xnode(int i) const { return std::exp(lx0_ + i * dlx_); }
  double sample_at(int i) const { return val_[i]; }
  void set(int i, double value) { val_[i] = value; }
  bool empty() const { return val_.empty(); }
  std::vector<double> x_breaks(double xq) const;
  nlohmann::json to_json() const;
  static SpectralGrid1D from_json(const nlohmann::json& j);

private:
  double v_ = 4.0, xmax_ = 1e4;
  int n_ = 0;
  double sigma_ = 0.5;
  TailModel1D tail_;
  double lx0_ = 0, dlx_ = 0;
  std::vector<double> val_;
};

struct HolderNormParams {
  double gamma = -0.2;
  double delta = -0.1;
  double mu = 0.25;
  std::vector<double> hset{0.5, 0.25, 0.125};
};

// int f(x)/(x - z) over panels given by ascending breakpoints. A real z
// strictly inside the range is taken as z + i0 (side Plus of the cut);
// cauchy_line_boundary selects the side explicitly: singularity
// subtraction over the pole cell and its neighbors plus the Plemelj
// term +- i pi f(pole).
complex cauchy_line(const std::function<complex(double)>& f,
                    const std::vector<double>& breaks, complex z,
                    int n_per_panel = 4);
complex cauchy_line_boundary(const std::function<complex(double)>& f,
                             const std::vector<double>& breaks, double pole,
                             Side side, int n_per_panel = 4);
// plain panel integral (no pole)
complex panel_integral(const std::function<complex(double)>& f,
                       const std::vector<double>& breaks, int n_per_panel = 4);

// sorted union of two ascending breakpoint lists
std::vector<double> merge_panel_breaks(const std::vector<double>& a,
                                       const std::vector<double>& b);

// Phi_0[psi](s,t) = pi^-2 int int psi(x,y)/((x-s)(y-t)) dx dy.
// tail_err reports a truncation estimate for the analytic tails;
// tail_scale stretches the truncation points (for convergence studies).
complex phi0(const SpectralGrid2D& psi, complex s, complex t,
             double* tail_err = nullptr, double tail_scale = 1.0);
complex phi0_boundary(const SpectralGrid2D& psi, double s, Side ss, double t,
                      Side ts, double* tail_err = nullptr,
                      double tail_scale = 1.0);

// Phi_1[phi,psi](s,t) = (2pi)^-1 int phi(x)/(x-s) dx
//   + (s+t) pi^-2 int int psi(x,y)/((x+y)(x-s)(y-t)) dx dy
complex phi1(const SpectralGrid1D& phi, const SpectralGrid2D& psi, complex s,
             complex t, double* tail_err = nullptr, double tail_scale = 1.0);
complex phi1_boundary(const SpectralGrid1D& phi, const SpectralGrid2D& psi,
                      double s, Side ss, double t, Side ts,
                      double* tail_err = nullptr, double tail_scale = 1.0);

// D[psi](s,t) = pi^-1 int (psi(x,t)+psi(t,x)) (1/(x-s+-i0)+1/(x-4+s+t)) dx
complex abs_t_from_spectral(const SpectralGrid2D& psi, double s, double t,
                            Side side);

// ||f||_gamma^2 = int_{lo}^{hi} |t^-gamma f(t)|^2 (1+log^2 t) dt/t
double norm_L_gamma(const std::function<double(double)>& f, double gamma,
                    double lo, double hi);
// sup over s-grid and finite h-set of
// s^-delta (||f(s,.)||_gamma + h^-mu ||f(s+h,.)-f(s,.)||_gamma)
double norm_gamma_delta(const std::function<double(double, double)>& f,
                        const std::vector<double>& sgrid, double t_lo,
                        double t_hi, const HolderNormParams& p);

// Positive spectral template with thresholds (v,w):
// psi = scale ((x-v)/x)^sigma ((y-w)/y)^mu y^alpha x^-1 (log y)^-delta (log x)^-delta
SpectralGrid2D build_positive_template(double v, double w, double alpha,
                                       double delta, double sigma, double mu,
                                       double scale = 1.0, int nx = 128,
                                       int ny = 128, double xmax = 1e4,
                                       double ymax = 1e4);
// phi = scale ((x-v)/x)^sigma x^(alpha-1) (log x)^-delta
SpectralGrid1D build_positive_template_1d(double v, double alpha, double delta,
                                          double sigma, double scale = 1.0,
                                          int n = 128, double xmax = 1e4);

// grid-scan certificates for the template shape bounds
struct TemplateBoundReport {
  double fitted_upper_c = 0.0; // smallest c with psi <= c * shape
  double fitted_lower_c = 0.0; // largest c with psi >= c * thresholded shape
  bool pass = false;
};
TemplateBoundReport check_template_bounds(const SpectralGrid2D& psi,
                                          double alpha, double delta,
                                          double sigma, double mu);

// A = Sym Phi_0[psi] (unsubtracted) or Sym Phi_1[phi,psi] (subtracted),
// with exact boundary values and absorptive parts.
class MandelstamAmplitude : public AmplitudeModel {
public:
  explicit MandelstamAmplitude(SpectralGrid2D psi);
  MandelstamAmplitude(SpectralGrid1D phi, SpectralGrid2D psi);
  complex value(complex s, complex t) const override;
  complex boundary_value(double s, double t, Side side) const override;
  complex abs_s(double s, double t) const override;
  complex abs_t(double s, double t) const override;
  std::vector<double> t_cut_breaks(double tq) const override;
  std::string kind() const override;
  bool subtracted() const { return subtracted_; }
  const SpectralGrid2D& psi() const { return psi_; }
  const SpectralGrid1D& phi() const { return phi_; }
  // boundary value of the single (unsymmetrized) term
  complex term_boundary(double a, Side sa, double b, Side sb) const;

private:
  SpectralGrid2D psi_;
  SpectralGrid1D phi_;
  bool subtracted_ = false;
};

} // namespace mandelstam

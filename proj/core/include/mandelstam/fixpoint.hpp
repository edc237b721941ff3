#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mandelstam/dispersion.hpp"
#include "mandelstam/specialfn.hpp"

namespace mandelstam {

// Elastic two-body kernel
//   K(s,t;t1,t2) = 2/(pi sqrt(s(s-4)))
//                  [t^2+t1^2+t2^2 - 2(t t1 + t t2 + t1 t2)
//                   - 4 t t1 t2/(s-4)]_+^{-1/2},
// zero where the bracket is negative; the exact boundary is singular and
// throws (quadrature nodes must avoid it).
double mandelstam_kernel(double s, double t, double t1, double t2);
// the bracket itself; as a quadratic in t2 it factors (tau_- - t2)(tau_+ - t2)
double kernel_argument(double s, double t, double t1, double t2);
void kernel_roots(double s, double t, double t1, double& tau_minus,
                  double& tau_plus);
// support edge in t of the bilinear image at thresholds t1 = t2 = 4
inline double support_threshold(double s) { return 16.0 + 64.0 / (s - 4.0); }
// largest t1 with a nonempty t2-range [4, tau_-); 4 when the support is empty
double kernel_t1_max(double s, double t);

// lambda(s) Re int int K(s,t;t1,t2) A_t(s+i0,t1) conj(A_t(s+i0,t2)) dt1 dt2
// with the inverse-square-root edges removed by local square-root
// substitutions in t2 (at tau_-) and t1 (at kernel_t1_max).
// imag_part, when given, receives the residual imaginary part of the raw
// bilinear sum (zero in exact arithmetic: the integrand is conjugate
// symmetric under t1 <-> t2).
double unitarity_image(const std::function<complex(double)>& abs_t_plus,
                       double s, double t, const Cutoff& cutoff,
                       int order = 12, double* imag_part = nullptr);

struct FixpointConfig {
  HolderNormParams norm; // convergence is measured in the (gamma,gamma) norm
  double tol = 1e-8;
  int max_iterations = 50;
  int checkpoint_every = 5;
  int kernel_order = 12; // Gauss nodes per dyadic panel of the image integral
  int at_cache_n = 1024; // log-grid samples of A_t(s+i0,.) per s row
  // psi grid: support 4 <= s <= s_upper (cutoff), t >= 16
  int nx = 128, ny = 128;
  double t_max = 1e4;
  // driving term omega: positive template with thresholds (16,16)
  double omega_scale = 1e-3;
  double omega_alpha = -0.5;
  double omega_delta = 2.0;
  Cutoff cutoff{16.0, 18.0};
  void validate() const; // parameter chain -1/2 + mu < gamma < delta < 0
};

enum class FixpointStatus { NotStarted, Converged, MaxIterations, Diverged };

struct FixpointState {
  SpectralGrid2D psi;
  SpectralGrid2D omega;
  int iteration = 0;
  FixpointStatus status = FixpointStatus::NotStarted;
  std::vector<double> residuals; // ||psi_{n+1} - psi_n||_{gamma,gamma}
  std::vector<double> ratios;    // r_n = residual_n / residual_{n-1}
};

// psi_0 = 0 on the configured grid, omega = scaled positive template
FixpointState make_initial_state(const FixpointConfig& cfg);

// one application of the map: psi'(s,t) = unitarity_image with
// A_t = D[psi] + D[omega] evaluated on the psi grid
SpectralGrid2D upsilon_image(const SpectralGrid2D& psi,
                             const SpectralGrid2D& omega,
                             const FixpointConfig& cfg);

// ||a - b||_{gamma,gamma} over the cutoff support
double fixpoint_delta_norm(const SpectralGrid2D& a, const SpectralGrid2D& b,
                           const FixpointConfig& cfg);

// iterate psi <- Upsilon(psi) until the step norm drops below tol;
// divergence (r_n >= 1 three times in a row) aborts with status Diverged.
// A nonempty checkpoint_path receives the state every checkpoint_every steps.
FixpointState& iterate_upsilon(FixpointState& state, const FixpointConfig& cfg,
                               const std::string& checkpoint_path = "");

// max |psi| strictly below the support edge t = 16 + 64/(s-4)
double support_check(const SpectralGrid2D& psi);

// checkpoint file: magic + JSON header (geometry, history) + row-major
// binary sample blocks for psi and omega
void write_checkpoint(const std::string& path, const FixpointState& state);
FixpointState read_checkpoint(const std::string& path);

// A = Sym Phi_0[psi] + Sym Phi_0[omega]
class FixpointAmplitude : public AmplitudeModel {
public:
  FixpointAmplitude(SpectralGrid2D psi, SpectralGrid2D omega);
  explicit FixpointAmplitude(const FixpointState& st)
      : FixpointAmplitude(st.psi, st.omega) {}
  complex value(complex s, complex t) const override;
  complex boundary_value(double s, double t, Side side) const override;
  complex abs_s(double s, double t) const override;
  complex abs_t(double s, double t) const override;
  std::vector<double> t_cut_breaks(double tq) const override;
  std::string kind() const override { return "fixpoint"; }
  const MandelstamAmplitude& elastic_part() const { return e_; }
  const MandelstamAmplitude& driving_part() const { return b_; }

private:
  MandelstamAmplitude e_, b_;
};

} // namespace mandelstam

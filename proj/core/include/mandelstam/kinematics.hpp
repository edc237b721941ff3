#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "mandelstam/types.hpp"

namespace mandelstam {

// Location of a point of C^2_cut relative to the physical cuts
// s in [4,inf), t in [4,inf), s+t in (-inf,0] (u in [4,inf)).
struct DomainLabel {
  enum class Kind { Interior, SCut, TCut, UCut };
  Kind kind = Kind::Interior;
  Side side = Side::Plus; // meaningful when kind != Interior
  bool on_cut() const { return kind != Kind::Interior; }
};

DomainLabel classify_point(complex s, complex t, double tol = 1e-12);

// 1D evaluation grid.
struct GridSpec {
  double lo = 4.0;
  double hi = 1e4;
  int n = 64;
  bool log_spaced = true;
  std::vector<double> points() const;
};

// Holomorphic function of two Mandelstam variables, plus its boundary
// values and absorptive parts. Defaults derive boundary values by
// epsilon-extrapolation; concrete models override with exact formulas.
class AmplitudeModel {
public:
  virtual ~AmplitudeModel() = default;
  virtual complex value(complex s, complex t) const = 0;
  virtual complex boundary_value(double s, double t, Side side) const;
  // A_s(s,t) = (A(s+i0,t) - A(s-i0,t)) / 2i, likewise in t
  virtual complex abs_s(double s, double t) const;
  virtual complex abs_t(double s, double t) const;
  // panel boundaries for integrals along the t-cut [4, tq]; models backed
  // by sampled data align these with their interpolation cells
  virtual std::vector<double> t_cut_breaks(double tq) const;
  virtual std::string kind() const = 0;
};

using AmplitudeFn = std::function<complex(complex, complex)>;

class LambdaAmplitude : public AmplitudeModel {
public:
  LambdaAmplitude(AmplitudeFn f, std::string name = "lambda")
      : f_(std::move(f)), name_(std::move(name)) {}
  complex value(complex s, complex t) const override { return f_(s, t); }
  std::string kind() const override { return name_; }

private:
  AmplitudeFn f_;
  std::string name_;
};

// Sym F: six-term crossing symmetrization over orderings of (s,t,u).
complex sym_combine(const AmplitudeFn& f, complex s, complex t);

class SymmetrizedAmplitude : public AmplitudeModel {
public:
  explicit SymmetrizedAmplitude(std::shared_ptr<AmplitudeModel> base)
      : base_(std::move(base)) {}
  complex value(complex s, complex t) const override;
  std::string kind() const override { return "sym(" + base_->kind() + ")"; }
  const AmplitudeModel& base() const { return *base_; }

private:
  std::shared_ptr<AmplitudeModel> base_;
};

// Max pairwise deviation of A over the six permutations of (s,t,u).
double crossing_residual(const AmplitudeModel& a, complex s, complex t);

} // namespace mandelstam

#include "mandelstam/partialwave.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "mandelstam/quadrature.hpp"
#include "mandelstam/specialfn.hpp"
#include "mandelstam/threading.hpp"

namespace mandelstam {

std::string PartialWaveTable::to_csv() const {
  std::string out = "s,l,re_a,im_a\n";
  char buf[128];
  for (std::size_t is = 0; is < s.size(); ++is)
    for (int l = 0; l <= l_max; ++l) {
      const complex v = at(is, l);
      std::snprintf(buf, sizeof buf, "%.12g,%d,%.12g,%.12g\n", s[is], l,
                    v.real(), v.imag());
      out += buf;
    }
  return out;
}

std::vector<complex> project_pw(const AmplitudeModel& A, double s, int l_max,
                                int n_nodes) {
  if (!(s > 4.0)) throw std::domain_error("project_pw: requires s > 4");
  const int n = std::max(n_nodes, 2 * (l_max + 1));
  const QuadRule& q = gauss_legendre(n);
  std::vector<complex> row(l_max + 1, complex(0.0));
  std::vector<double> pl;
  const double pref = 0.25 * std::sqrt((s - 4.0) / s);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double z = q.x[i];
    const double t = 0.5 * (s - 4.0) * (z - 1.0);
    const complex f = A.boundary_value(s, t, Side::Plus);
    legendre_p_all(l_max, z, pl);
    for (int l = 0; l <= l_max; ++l) row[l] += q.w[i] * f * pl[l];
  }
  for (auto& v : row) v *= pref;
  return row;
}

PartialWaveTable project_pw_table(const AmplitudeModel& A,
                                  const std::vector<double>& sgrid, int l_max,
                                  int n_nodes) {
  PartialWaveTable tbl;
  tbl.s = sgrid;
  tbl.l_max = l_max;
  tbl.a.assign(sgrid.size() * (l_max + 1), complex(0.0));
  parallel_for(sgrid.size(), [&](std::size_t is) {
    const std::vector<complex> row = project_pw(A, sgrid[is], l_max, n_nodes);
    std::copy(row.begin(), row.end(), tbl.a.begin() + is * (l_max + 1));
  });
  return tbl;
}

complex froissart_gribov(const std::function<complex(double)>& abs_t_row,
                         double s, int l,
                         const std::vector<double>& t_breaks) {
  if (!(s > 4.0)) throw std::domain_error("froissart_gribov: requires s > 4");
  const QuadRule& q = gauss_legendre(8);
  const double tq = t_breaks.back();
  complex acc = 0.0, last_decade = 0.0;
  for (std::size_t k = 0; k + 1 < t_breaks.size(); ++k) {
    const double mid = 0.5 * (t_breaks[k] + t_breaks[k + 1]);
    const double hw = 0.5 * (t_breaks[k + 1] - t_breaks[k]);
    complex panel = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      const double t = mid + hw * q.x[i];
      panel += hw * q.w[i] * abs_t_row(t) *
               legendre_q(l, 1.0 + 2.0 * t / (s - 4.0));
    }
    acc += panel;
    if (t_breaks[k] >= 0.1 * tq) last_decade += panel;
  }
  if (std::abs(last_decade) > 0.05 * std::abs(acc) + 1e-300)
    throw std::domain_error("froissart_gribov: non-convergent tail");
  return 2.0 / pi / std::sqrt(s * (s - 4.0)) * acc;
}

complex froissart_gribov(const AmplitudeModel& A, double s, int l, double tq) {
  if (tq <= 0.0) tq = std::max(1e6, 100.0 * s);
  const std::vector<double> breaks = A.t_cut_breaks(tq);
  return froissart_gribov([&](double t) { return A.abs_t(s, t); }, s, l,
                          breaks);
}

double total_cross_section(const AmplitudeModel& A, double s) {
  if (!(s > 4.0)) throw std::domain_error("total_cross_section: requires s > 4");
  return 8.0 * pi * A.abs_s(s, 0.0).real() / std::sqrt(s * (s - 4.0));
}

ElasticReport elastic_residual(const PartialWaveTable& tbl) {
  ElasticReport rep;
  rep.residual.assign(tbl.a.size(), 0.0);
  for (std::size_t is = 0; is < tbl.rows(); ++is) {
    if (tbl.s[is] < 4.0 || tbl.s[is] > 16.0) continue;
    for (int l = 0; l <= tbl.l_max; ++l) {
      const complex a = tbl.at(is, l);
      const double r = std::abs(a.imag() - std::norm(a));
      rep.residual[is * (tbl.l_max + 1) + l] = r;
      rep.worst = std::max(rep.worst, r);
    }
  }
  return rep;
}

InelasticReport inelastic_check(const PartialWaveTable& tbl, double tol) {
  InelasticReport rep;
  rep.margin.assign(tbl.a.size(), 0.0);
  rep.worst = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < tbl.a.size(); ++k) {
    const complex a = tbl.a[k];
    const double m = std::min(1.0 - a.imag(), a.imag() - std::norm(a));
    rep.margin[k] = m;
    rep.worst = std::min(rep.worst, m);
  }
  rep.pass = tbl.a.empty() || rep.worst >= -tol;
  return rep;
}

LinearUnitarity linear_unitarity_check(const PartialWaveTable& tbl,
                                       double s1) {
  LinearUnitarity r;
  for (std::size_t is = 0; is < tbl.rows(); ++is) {
    if (tbl.s[is] < s1) continue;
    for (int l = 0; l <= tbl.l_max; ++l) {
      const complex a = tbl.at(is, l);
      r.c1 = std::max(r.c1, std::abs(a));
      if (a.imag() > 0.0)
        r.c2 = std::max(r.c2, std::abs(a.real()) / a.imag());
      else if (std::abs(a.real()) > 1e-14)
        r.c2_finite = false;
    }
  }
  if (r.c2_finite && r.c1 > 0.0) r.scale = 1.0 / (r.c1 * (1.0 + r.c2));
  return r;
}

ThresholdBound threshold_bound_check(const AmplitudeModel& A,
                                     const std::vector<double>& sgrid,
                                     const std::vector<double>& tgrid) {
  ThresholdBound rep;
  std::vector<double> lx, ly; // log(1+|s|+|t|) vs residual log magnitude
  std::vector<double> ratio0; // with n = 0
  for (double s : sgrid) {
    if (!(s > 4.0)) continue;
    const double thr = std::sqrt((s - 4.0) / s);
    for (double t : tgrid) {
      const double m = std::abs(A.abs_s(s, t));
      if (m < 1e-280) continue;
      lx.push_back(std::log(1.0 + std::abs(s) + std::abs(t)));
      ly.push_back(std::log(m / thr));
      ratio0.push_back(m / thr);
    }
  }
  if (lx.size() < 2) return rep;
  // least squares slope for the polynomial growth exponent
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(lx.size());
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double det = n * sxx - sx * sx;
  rep.n = det > 0.0 ? std::max(0.0, (n * sxy - sx * sy) / det) : 0.0;
  std::vector<double> ratio(lx.size());
  for (std::size_t i = 0; i < lx.size(); ++i)
    ratio[i] = ratio0[i] * std::exp(-rep.n * lx[i]);
  std::vector<double> sorted = ratio;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[sorted.size() / 2];
  rep.c = sorted.back();
  rep.worst_ratio = sorted.back();
  rep.pass = std::isfinite(rep.c) && median > 0.0 &&
             rep.c <= 100.0 * median;
  return rep;
}

nlohmann::json ExponentFit::to_json() const {
  return nlohmann::json{{"alpha", alpha},
                        {"delta", delta},
                        {"c", c},
                        {"window", {window_lo, window_hi}},
                        {"residual", residual}};
}

ExponentFit fit_exponents_from_samples(const std::vector<double>& s,
                                       const std::vector<double>& im_a) {
  ExponentFit fit;
  // weighted normal equations for y = alpha x0 - delta x1 + c,
  // x0 = log s, x1 = log log s, weights 1/log s
  double m[3][3] = {};
  double b[3] = {};
  std::size_t used = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(s[i] > std::exp(1.0)) || !(im_a[i] > 0.0)) continue;
    const double x[3] = {std::log(s[i]), -std::log(std::log(s[i])), 1.0};
    const double y = std::log(im_a[i]);
    const double w = 1.0 / std::log(s[i]);
    for (int r = 0; r < 3; ++r) {
      for (int cc = 0; cc < 3; ++cc) m[r][cc] += w * x[r] * x[cc];
      b[r] += w * x[r] * y;
    }
    ++used;
  }
  if (used < 3) throw std::domain_error("fit_asymptotic_exponents: too few samples");
  // gaussian elimination with partial pivoting
  int idx[3] = {0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(m[idx[r]][col]) > std::abs(m[idx[piv]][col])) piv = r;
    std::swap(idx[col], idx[piv]);
    for (int r = col + 1; r < 3; ++r) {
      const double f = m[idx[r]][col] / m[idx[col]][col];
      for (int cc = col; cc < 3; ++cc) m[idx[r]][cc] -= f * m[idx[col]][cc];
      b[idx[r]] -= f * b[idx[col]];
    }
  }
  double sol[3];
  for (int r = 2; r >= 0; --r) {
    double acc = b[idx[r]];
    for (int cc = r + 1; cc < 3; ++cc) acc -= m[idx[r]][cc] * sol[cc];
    sol[r] = acc / m[idx[r]][r];
  }
  fit.alpha = sol[0];
  fit.delta = sol[1];
  fit.c = sol[2];
  double wr2 = 0.0, wsum = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(s[i] > std::exp(1.0)) || !(im_a[i] > 0.0)) continue;
    const double w = 1.0 / std::log(s[i]);
    const double pred = fit.alpha * std::log(s[i]) -
                        fit.delta * std::log(std::log(s[i])) + fit.c;
    const double r = std::log(im_a[i]) - pred;
    wr2 += w * r * r;
    wsum += w;
  }
  fit.residual = std::sqrt(wr2 / wsum);
  return fit;
}

ExponentFit fit_asymptotic_exponents(const AmplitudeModel& A,
                                     const GridSpec& window) {
  const std::vector<double> s = window.points();
  std::vector<double> im(s.size(), 0.0);
  parallel_for(s.size(),
               [&](std::size_t i) { im[i] = A.abs_s(s[i], 0.0).real(); });
  ExponentFit fit = fit_exponents_from_samples(s, im);
  fit.window_lo = window.lo;
  fit.window_hi = window.hi;
  return fit;
}

LemmaFitReport verify_pw_bound_lemmas(const AmplitudeModel& A, double s1,
                                      double t1, LemmaMode mode,
                                      const LemmaParams& p) {
  LemmaFitReport rep;
  std::vector<double> sgrid(p.n_s);
  for (int i = 0; i < p.n_s; ++i) {
    if (mode == LemmaMode::FiniteRange)
      sgrid[i] = 4.0 + (s1 - 4.0) * (i + 1.0) / p.n_s;
    else
      sgrid[i] = 4.5 * std::pow(s1 / 4.5, i / std::max(1.0, p.n_s - 1.0));
  }
  const PartialWaveTable tbl = project_pw_table(A, sgrid, p.l_max);
  for (std::size_t is = 0; is < tbl.rows(); ++is) {
    const double s = tbl.s[is];
    const double sg = std::pow(s, p.gamma);
    for (int l = 0; l <= p.l_max; ++l) {
      const double phi = phi_l_mu(l, p.mu, t1, s);
      if (!(phi > 1e-280)) continue;
      const complex f = tbl.at(is, l);
      if (mode == LemmaMode::FiniteRange) {
        rep.c_abs = std::max(rep.c_abs,
                             std::abs(f) * std::sqrt((s - 4.0) / s) / phi);
        rep.c_im = std::max(rep.c_im, std::abs(f.imag()) / phi);
        rep.c_lower = std::max(
            rep.c_lower, (2.0 * std::norm(f) - f.imag()) / (sg * phi));
      } else {
        rep.c_abs = std::max(
            rep.c_abs, std::abs(f) / (std::sqrt(s / (s - 4.0)) * sg * phi));
        rep.c_lower = std::max(
            rep.c_lower, (2.0 * std::norm(f) - f.imag()) / (sg * phi));
      }
    }
  }
  rep.c_lower = std::max(rep.c_lower, 0.0);
  rep.pass = std::isfinite(rep.c_abs) && std::isfinite(rep.c_im) &&
             std::isfinite(rep.c_lower);
  return rep;
}

ScaleResult scale_for_unitarity(const PartialWaveTable& tbl) {
  ScaleResult res;
  for (const complex& a : tbl.a)
    if (a.imag() < 0.0 && std::norm(a) > 1e-280) return res;
  auto feasible = [&](double lam) {
    for (const complex& a : tbl.a)
      if (lam * a.imag() + 1e-300 < std::norm(a)) return false;
    return true;
  };
  double hi = 1.0;
  while (!feasible(hi)) {
    hi *= 2.0;
    if (hi > 1e30) return res;
  }
  double lo = 0.0;
  for (int it = 0; it < 200 && (hi - lo) > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  res.lambda = hi;
  res.positivity_ok = true;
  return res;
}

PartialWaveTable scaled_by(const PartialWaveTable& tbl, double lambda) {
  PartialWaveTable out = tbl;
  for (auto& a : out.a) a /= lambda;
  return out;
}

} // namespace mandelstam

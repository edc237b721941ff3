#include "mandelstam/specialfn.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mandelstam {

double legendre_p(int l, double z) {
  double p0 = 1.0, p1 = z;
  if (l == 0) return p0;
  for (int j = 1; j < l; ++j) {
    const double p2 = ((2 * j + 1) * z * p1 - j * p0) / (j + 1);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

complex legendre_p(int l, complex z) {
  complex p0 = 1.0, p1 = z;
  if (l == 0) return p0;
  for (int j = 1; j < l; ++j) {
    const complex p2 = ((2.0 * j + 1.0) * z * p1 - static_cast<double>(j) * p0) /
                       static_cast<double>(j + 1);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

void legendre_p_all(int lmax, double z, std::vector<double>& out) {
  out.resize(lmax + 1);
  out[0] = 1.0;
  if (lmax == 0) return;
  out[1] = z;
  for (int j = 1; j < lmax; ++j)
    out[j + 1] = ((2 * j + 1) * z * out[j] - j * out[j - 1]) / (j + 1);
}

void legendre_q_all(int lmax, double z, std::vector<double>& out) {
  if (!(z > 1.0)) throw std::domain_error("legendre_q: requires z > 1");
  out.resize(lmax + 1);
  const double q0 = legendre_q0(z);
  out[0] = q0;
  if (lmax == 0) return;
  const double logr = std::log(z + std::sqrt((z - 1.0) * (z + 1.0)));
  if (2.0 * lmax * logr < 2.0) {
    // close to z = 1: contamination by the growing solution stays < e^2 eps
    out[1] = z * q0 - 1.0;
    for (int j = 1; j < lmax; ++j)
      out[j + 1] = ((2 * j + 1) * z * out[j] - j * out[j - 1]) / (j + 1);
    return;
  }
  const int buffer = static_cast<int>(std::ceil(36.0 / (2.0 * logr))) + 4;
  const int L = lmax + buffer;
  // keep the backward iterates inside double range
  const double growth = (L + 1) * logr;
  double v1 = 0.0;
  double v0 = growth > 600.0 ? std::exp(600.0 - growth) : 1.0;
  std::vector<double> v(lmax + 1);
  for (int l = L; l >= 1; --l) {
    const double vm = ((2 * l + 1) * z * v0 - (l + 1) * v1) / l;
    v1 = v0;
    v0 = vm;
    if (l - 1 <= lmax) v[l - 1] = vm;
  }
  const double scale = q0 / v[0];
  for (int l = 1; l <= lmax; ++l) out[l] = v[l] * scale;
}

double legendre_q(int l, double z) {
  std::vector<double> q;
  legendre_q_all(l, z, q);
  return q[l];
}

namespace {
const QuadRule& jacobi_rule(int n, double mu) {
  static std::map<std::pair<int, long long>, QuadRule> cache;
  static std::mutex m;
  const long long key = static_cast<long long>(mu * 1e12);
  std::lock_guard<std::mutex> lk(m);
  auto it = cache.find({n, key});
  if (it == cache.end())
    it = cache.emplace(std::make_pair(n, key), gauss_jacobi01(n, mu)).first;
  return it->second;
}
} // namespace

double phi_l_mu(int l, double mu, double v, double s, int nodes) {
  if (!(s > 4.0)) return 0.0;
  const QuadRule& q = jacobi_rule(nodes, mu);
  double acc = 0.0;
  for (std::size_t i = 0; i < q.x.size(); ++i) {
    const double z = 1.0 + 2.0 * (q.x[i] + v) / (s - 4.0);
    acc += q.w[i] * legendre_q(l, z);
  }
  return acc;
}

complex log_gamma(complex z) {
  static const double g = 7.0;
  static const double c[9] = {0.99999999999980993,  676.5203681218851,
                              -1259.1392167224028,  771.32342877765313,
                              -176.61502916214059,  12.507343278686905,
                              -0.13857109526572012, 9.9843695780195716e-6,
                              1.5056327351493116e-7};
  if (z.real() < 0.5) {
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    const complex lgr = log_gamma(1.0 - z);
    // log sin(pi z), keeping the branch continuous off the real axis
    complex lsin;
    if (z.imag() > 0) {
      // sin(pi z) = e^{-i pi z} (1 - e^{2 i pi z}) (i/2)
      const complex iz = complex(0.0, 1.0) * pi * z;
      lsin = std::log((1.0 - std::exp(2.0 * iz)) * complex(0.0, 0.5)) - iz;
    } else {
      // sin(pi z) = e^{+i pi z} (1 - e^{-2 i pi z}) (-i/2)
      const complex iz = complex(0.0, -1.0) * pi * z;
      lsin = std::log((1.0 - std::exp(2.0 * iz)) * complex(0.0, -0.5)) - iz;
    }
    return std::log(complex(pi)) - lsin - lgr;
  }
  z -= 1.0;
  complex x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
  const complex t = z + g + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

complex euler_beta(complex x, complex y) {
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

BumpWeight::BumpWeight(double a, double b) : a_(a), b_(b) {
  if (!(b > a)) throw std::invalid_argument("BumpWeight: b <= a");
  const double w = b - a;
  norm_ = std::pow(w, 9.0) / 630.0; // w^9 B(5,5)
  rule32_ = rule(32);
}

double BumpWeight::operator()(double x) const {
  if (x <= a_ || x >= b_) return 0.0;
  const double u = x - a_, v = b_ - x;
  const double u2 = u * u, v2 = v * v;
  return u2 * u2 * v2 * v2 / norm_;
}

QuadRule BumpWeight::rule(int n) const {
  QuadRule q = gauss_legendre(n, a_, b_);
  for (std::size_t i = 0; i < q.x.size(); ++i) q.w[i] *= (*this)(q.x[i]);
  return q;
}

complex BumpWeight::log_moment(complex s) const {
  const QuadRule& q = rule32_;
  complex acc = 0.0;
  for (std::size_t i = 0; i < q.x.size(); ++i)
    acc += q.w[i] * std::log(complex(q.x[i]) - s);
  return acc;
}

complex BumpWeight::log_moment(double s, Side side) const {
  const QuadRule& q = rule32_;
  complex acc = 0.0;
  // log(x - (s +- i0)): for x < s the argument is a negative real approached
  // from the -+ imaginary side
  const double im = side == Side::Plus ? -pi : pi;
  for (std::size_t i = 0; i < q.x.size(); ++i) {
    const double d = q.x[i] - s;
    if (d > 0)
      acc += q.w[i] * std::log(d);
    else
      acc += q.w[i] * complex(std::log(-d), im);
  }
  return acc;
}

double Cutoff::operator()(double s) const {
  if (s <= s0_) return 1.0;
  if (s >= s1_) return 0.0;
  const double x = (s - s0_) / (s1_ - s0_);
  return 1.0 - x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
}

complex SmearedLogH::operator()(complex s, complex t) const {
  return L(s) + L(4.0 - s - t) - L(t + 1.0);
}

complex SmearedLogH::boundary(double s, double t, Side side) const {
  // s carries the side; u = 4 - s - t picks up the opposite side
  return L(s, side) + L(4.0 - s - t, other(side)) + (-1.0) * L(t + 1.0, side);
}

} // namespace mandelstam

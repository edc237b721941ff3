#include "mandelstam/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mandelstam {

namespace {

QuadRule make_gauss_legendre(int n) {
  QuadRule q;
  q.x.resize(n);
  q.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * z * p1 - j * p2) / (j + 1);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    q.x[i] = -z;
    q.x[n - 1 - i] = z;
    q.w[i] = q.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
  return q;
}

// Symmetric tridiagonal eigensolve (QL with implicit shifts), tracking only
// the first component of each eigenvector.
void tql_first_components(std::vector<double>& d, std::vector<double>& e,
                          std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  z.assign(n, 0.0);
  if (n == 0) return;
  z[0] = 1.0;
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) + dd == dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw std::runtime_error("tql: no convergence");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && m - 1 >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

} // namespace

const QuadRule& gauss_legendre(int n) {
  static std::map<int, QuadRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
  return it->second;
}

QuadRule gauss_legendre(int n, double a, double b) {
  const QuadRule& base = gauss_legendre(n);
  QuadRule q;
  q.x.resize(n);
  q.w.resize(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    q.x[i] = mid + half * base.x[i];
    q.w[i] = half * base.w[i];
  }
  return q;
}

QuadRule gauss_jacobi01(int n, double mu) {
  if (mu <= -1.0) throw std::invalid_argument("gauss_jacobi01: mu <= -1");
  // Jacobi weight (1-x)^0 (1+x)^mu on [-1,1]; then map to [0,1].
  const double al = 0.0, be = mu;
  std::vector<double> d(n), e(n > 0 ? n - 1 : 0);
  d[0] = (be - al) / (al + be + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + al + be;
    d[k] = (be * be - al * al) / (s * (s + 2.0));
    const double b2 = 4.0 * k * (k + al) * (k + be) * (k + al + be) /
                      (s * s * (s + 1.0) * (s - 1.0));
    e[k - 1] = std::sqrt(b2);
  }
  // zeroth moment: 2^(al+be+1) B(al+1, be+1)
  const double mu0 = std::exp((al + be + 1.0) * std::log(2.0) +
                              std::lgamma(al + 1.0) + std::lgamma(be + 1.0) -
                              std::lgamma(al + be + 2.0));
  std::vector<double> z;
  tql_first_components(d, e, z);
  // sort by node
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a_, int b_) { return d[a_] < d[b_]; });
  QuadRule q;
  q.x.resize(n);
  q.w.resize(n);
  // map x in [-1,1] -> t = (1+x)/2 in [0,1]; weight t^mu dt picks 2^(-mu-1).
  const double scale = std::exp(-(mu + 1.0) * std::log(2.0));
  for (int i = 0; i < n; ++i) {
    q.x[i] = 0.5 * (1.0 + d[idx[i]]);
    q.w[i] = mu0 * z[idx[i]] * z[idx[i]] * scale;
  }
  return q;
}

QuadRule log_panels(double a, double b, int panels_per_decade, int n) {
  if (!(b > a) || a <= 0.0) throw std::invalid_argument("log_panels: bad range");
  const double la = std::log(a), lb = std::log(b);
  const int npanel =
      std::max(1, static_cast<int>(std::ceil((lb - la) / std::log(10.0) *
                                             panels_per_decade)));
  QuadRule q;
  q.x.reserve(static_cast<std::size_t>(npanel) * n);
  q.w.reserve(static_cast<std::size_t>(npanel) * n);
  const QuadRule& base = gauss_legendre(n);
  for (int p = 0; p < npanel; ++p) {
    const double u0 = la + (lb - la) * p / npanel;
    const double u1 = la + (lb - la) * (p + 1) / npanel;
    const double mid = 0.5 * (u0 + u1), half = 0.5 * (u1 - u0);
    for (int i = 0; i < n; ++i) {
      const double u = mid + half * base.x[i];
      const double x = std::exp(u);
      q.x.push_back(x);
      q.w.push_back(half * base.w[i] * x);
    }
  }
  return q;
}

} // namespace mandelstam

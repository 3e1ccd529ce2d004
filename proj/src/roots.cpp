#include "compchains/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/mpfr.hpp>

namespace compchains {

namespace {

using Real = boost::multiprecision::mpfr_float;

struct Cx {
  Real re, im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cx operator/(const Cx& a, const Cx& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real abs(const Cx& a) { return sqrt(a.re * a.re + a.im * a.im); }

Real to_real(const Rat& q) {
  Real num(q.get_num().get_mpz_t());
  Real den(q.get_den().get_mpz_t());
  return num / den;
}

// Value and derivative by Horner.
std::pair<Cx, Cx> horner(const std::vector<Real>& c, const Cx& z) {
  Cx p{c.back(), 0};
  Cx dp{0, 0};
  for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
    dp = dp * z + p;
    p = p * z + Cx{c[i], 0};
  }
  return {p, dp};
}

class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10) : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

}  // namespace

RootReport roots_numeric(const UniPoly& p, int max_iterations) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("roots_numeric needs degree >= 1");

  // Roots of ill-conditioned polynomials (clusters, huge coefficient
  // ranges) lose roughly a constant number of digits per unit of degree.
  const unsigned digits = 60 + 3 * static_cast<unsigned>(n);
  PrecisionScope scope(digits);

  std::vector<Real> c;
  c.reserve(n + 1);
  for (const auto& q : p.coeffs()) c.push_back(to_real(q));
  const Real lead = abs(c.back());

  RootReport rep;
  std::vector<Cx> z(n);
  std::vector<bool> done(n, false);
  {
    // Start on a circle whose radius is the geometric mean of the root
    // moduli; the small angular offset avoids symmetric stagnation.
    const std::size_t v = static_cast<std::size_t>(std::max(p.valuation(), 0));
    Real radius = v > 0 ? Real(1) : Real(pow(abs(c[0]) / lead, Real(1) / n));
    if (radius == 0) radius = 1;
    const double two_pi = 6.283185307179586;
    for (int k = 0; k < n; ++k) {
      const double angle = two_pi * k / n + 0.4;
      z[k] = {radius * std::cos(angle), radius * std::sin(angle)};
    }
  }

  const Real tol = pow(Real(10), -static_cast<int>(digits) + 15);
  int it = 0;
  for (; it < max_iterations; ++it) {
    bool all_done = true;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      auto [val, der] = horner(c, z[i]);
      if (val.re == 0 && val.im == 0) {
        done[i] = true;
        continue;
      }
      Cx ratio = val / der;
      Cx sum{0, 0};
      for (int j = 0; j < n; ++j)
        if (j != i) sum = sum + Cx{1, 0} / (z[i] - z[j]);
      Cx w = ratio / (Cx{1, 0} - ratio * sum);
      z[i] = z[i] - w;
      Real scale = std::max(Real(1), Real(abs(z[i])));
      if (abs(w) <= tol * scale)
        done[i] = true;
      else
        all_done = false;
    }
    if (all_done) break;
  }
  rep.iterations = it;
  rep.converged = std::all_of(done.begin(), done.end(), [](bool b) { return b; });

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::complex<double>> approx(n);
  for (int i = 0; i < n; ++i)
    approx[i] = {static_cast<double>(z[i].re), static_cast<double>(z[i].im)};
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double ra = approx[a].real(), rb = approx[b].real();
    if (std::abs(ra - rb) > 1e-12 * std::max({1.0, std::abs(ra), std::abs(rb)})) return ra < rb;
    return approx[a].imag() < approx[b].imag();
  });
  for (int i : order) {
    rep.roots.push_back(approx[i]);
    rep.residuals.push_back(static_cast<double>(abs(horner(c, z[i]).first) / lead));
  }
  return rep;
}

}  // namespace compchains

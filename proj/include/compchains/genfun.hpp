#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "compchains/composition.hpp"
#include "compchains/operators.hpp"
#include "compchains/polyfrac.hpp"
#include "compchains/roots.hpp"

namespace compchains {

struct StructureViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonLinearFactor : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenFunKey {
  std::string poset;  // Alphabet::str()
  Composition alpha;
  int k = 0;
  friend auto operator<=>(const GenFunKey&, const GenFunKey&) = default;
};

/// Generating function of saturated chains from alpha ending at width k,
/// in x_1..x_k, where the endpoint q contributes x_1^{q_1}...x_k^{q_k}.
/// Memoized; safe to call from several threads.
FactoredRational f_width(const Alphabet& a, const Composition& alpha, int k);

/// N only. Returns the polynomial g with
/// f_k = x_1...x_k * g / prod_{i<=k} prod_{j>=i+r-1} (1 - x_i - ... - x_j).
MultiPoly structure_check(const Composition& alpha, int k);

/// Exponent of (1 - sum_{i in S} x_i) in the reduced denominator, for every
/// nonempty S of {1..k} (zero when absent).
using DenominatorProfile = std::map<std::vector<int>, int>;
DenominatorProfile denominator_profile(const Alphabet& a, const Composition& alpha, int k);

/// f_k(t,...,t). For N this is the univariate recurrence, cross-checked
/// against the specialization for small k.
UniRational L_width(const Alphabet& a, const Composition& alpha, int k);
UniRational L_recurrence_N(const Composition& alpha, int k);
Integer a_nk(const Alphabet& a, const Composition& alpha, int k, int n);

UniRational closed_form_L_not_all_ones(const Composition& alpha, int k);
/// D_r = 1, D_k = 2 D_{k-1} - prod_{i=r}^{k-1} (1 - i t).
UniPoly D_poly(int r, int k);

/// Roots of D_k(x/k) for alpha = (1).
RootReport scaled_D_roots(int k);

/// a_{n,k} ~ C k^n for N, k > width(alpha).
Rat asymptotic_constant(const Composition& alpha, int k);

struct AsymptoticReport {
  Rat constant;
  std::vector<std::pair<int, double>> rel_error;  // (n, |a_n / (C k^n) - 1|)
};
AsymptoticReport asymptotic_check(const Composition& alpha, int k, int n_max);

/// Sorts the exponent vector of every monomial decreasingly.
MultiPoly kappa_op(const MultiPoly& p);
/// kappa_op of the Taylor expansion to total degree max_total; alpha must be
/// empty or have all parts equal.
MultiPoly shadow_series(const Alphabet& a, const Composition& alpha, int k, int max_total);

}  // namespace compchains

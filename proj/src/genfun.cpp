#include "compchains/genfun.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace compchains {

namespace {

std::mutex memo_mutex;
std::map<GenFunKey, FactoredRational> memo;

MultiPoly form_upto(int from, int to) {
  std::vector<int> s;
  for (int i = from; i <= to; ++i) s.push_back(i);
  return linear_form(s);
}

Monomial v_of(const Composition& alpha) {
  std::vector<int> e(alpha.vec().begin(), alpha.vec().end());
  return Monomial::from_exponents(e);
}

Monomial prod_vars(int k) {
  Monomial m;
  for (int i = 1; i <= k; ++i) m.set(i, 1);
  return m;
}

// Right-hand side of the width recurrence apart from the (x_1+...+x_k) f_k
// term, given f_{k-1}.
FactoredRational rhs_N(const FactoredRational& prev, const Composition& alpha, int k) {
  FactoredRational out = mul_monomial(lambda_op(prev, 1), Monomial::var(1)) + mul_monomial(prev, Monomial::var(k));
  if (alpha.all_ones()) out = out - FactoredRational(MultiPoly::monomial(prod_vars(k)));
  return out;
}

FactoredRational rhs_S(const FactoredRational& prev, int k, int d) {
  FactoredRational out = mul_monomial(lambda_op(prev, 1), Monomial::var(1));
  for (int i = 2; i <= k; ++i) {
    // prev minus its parts of x_{i-1}-degree 1..v; V_i^v needs p_{i-1} > v.
    FactoredRational rest = prev;
    for (int v = 1; v < d; ++v) {
      rest = rest - delta_op(prev, i - 1, v);
      if (rest.is_zero()) break;
      FactoredRational term = lambda_op(rest, i);
      term = mul_monomial(divide_by_monomial_exact(term, i - 1, v - 1), Monomial::var(i, v));
      out = out + term;
    }
  }
  return out;
}

FactoredRational compute(const Alphabet& a, const Composition& alpha, int k) {
  const int r = alpha.width();
  if (k < r) return {};
  if (k == r) return divide_by_factor(FactoredRational(MultiPoly::monomial(v_of(alpha))), form_upto(1, r));
  const FactoredRational prev = f_width(a, alpha, k - 1);
  FactoredRational rhs = a.kind() == Alphabet::Kind::N ? rhs_N(prev, alpha, k) : rhs_S(prev, k, a.d());
  return divide_by_factor(rhs, form_upto(1, k));
}

}  // namespace

FactoredRational f_width(const Alphabet& a, const Composition& alpha, int k) {
  using K = Alphabet::Kind;
  if (a.kind() != K::N && a.kind() != K::BBD && a.kind() != K::S)
    throw std::invalid_argument("f_width: no width recurrence for poset " + a.str());
  if (k < 0) throw std::invalid_argument("f_width: k must be >= 0");
  if (k > kMaxVars) throw std::invalid_argument("f_width: too many variables");
  GenFunKey key{a.str(), alpha, k};
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  FactoredRational f = compute(a, alpha, k);
  std::lock_guard lock(memo_mutex);
  return memo.emplace(std::move(key), std::move(f)).first->second;
}

MultiPoly structure_check(const Composition& alpha, int k) {
  const FactoredRational f = f_width(Alphabet::N(), alpha, k);
  if (f.is_zero()) return {};
  const int r = std::max(alpha.width(), 1);
  std::vector<MultiPoly> allowed;
  for (int i = 1; i <= k; ++i)
    for (int j = i + r - 1; j <= k; ++j) allowed.push_back(form_upto(i, j));

  MultiPoly num = f.numerator();
  for (const auto& g : f.denominator()) {
    auto it = std::find(allowed.begin(), allowed.end(), g.poly);
    if (it == allowed.end() || g.mult > 1)
      throw StructureViolation("unexpected denominator factor (" + g.poly.str() + ") in " + f.str());
    allowed.erase(it);
  }
  for (const auto& g : allowed) num = mul(num, g);
  try {
    return divide_by_monomial(num, prod_vars(k));
  } catch (const NotDivisible&) {
    throw StructureViolation("numerator not divisible by x1...xk in " + f.str());
  }
}

DenominatorProfile denominator_profile(const Alphabet& a, const Composition& alpha, int k) {
  DenominatorProfile out;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1u) s.push_back(i + 1);
    out[s] = 0;
  }
  const FactoredRational f = f_width(a, alpha, k);
  for (const auto& g : f.denominator()) {
    std::vector<int> s;
    if (!is_linear_form(g.poly, &s)) throw NonLinearFactor("denominator factor (" + g.poly.str() + ") is not linear");
    out[s] = g.mult;
  }
  return out;
}

UniRational L_recurrence_N(const Composition& alpha, int k) {
  const int r = alpha.width();
  if (k < r) return {};
  // L_k = P_k / prod_{i=r}^k (1 - i t)
  UniPoly p = UniPoly::monomial(alpha.weight());
  UniPoly den_prev(1);  // prod_{i=r}^{k-1}
  for (int j = r + 1; j <= k; ++j) {
    den_prev = den_prev * UniPoly::one_minus(j - 1);
    p = UniPoly::monomial(1, 2) * p;
    if (alpha.all_ones()) p = p - UniPoly::monomial(j) * den_prev;
  }
  std::vector<UniRational::Factor> den;
  for (int i = std::max(r, 1); i <= k; ++i) den.push_back({UniPoly::one_minus(i), 1});
  UniRational out(p, den);
  out.reduce();
  return out;
}

UniRational L_width(const Alphabet& a, const Composition& alpha, int k) {
  if (a.kind() != Alphabet::Kind::N) {
    UniRational u = specialize_all(f_width(a, alpha, k));
    u.reduce();
    return u;
  }
  UniRational rec = L_recurrence_N(alpha, k);
  if (k <= 5 && !equals(rec, specialize_all(f_width(a, alpha, k))))
    throw std::logic_error("L_width: recurrence and specialization disagree for k=" + std::to_string(k));
  return rec;
}

Integer a_nk(const Alphabet& a, const Composition& alpha, int k, int n) {
  const Rat c = series_coeffs(L_width(a, alpha, k), n).at(n);
  if (c.get_den() != 1) throw std::logic_error("a_nk: non-integral coefficient");
  return c.get_num();
}

UniRational closed_form_L_not_all_ones(const Composition& alpha, int k) {
  if (alpha.all_ones()) throw std::invalid_argument("closed form needs alpha not all-ones");
  const int r = alpha.width();
  if (k < r) return {};
  std::vector<UniRational::Factor> den;
  for (int i = r; i <= k; ++i) den.push_back({UniPoly::one_minus(i), 1});
  Integer two = 1;
  mpz_mul_2exp(two.get_mpz_t(), two.get_mpz_t(), k - r);
  return UniRational(UniPoly::monomial(alpha.weight() + k - r, Rat(two)), den);
}

UniPoly D_poly(int r, int k) {
  if (r < 0 || k < r) throw std::invalid_argument("D_poly needs 0 <= r <= k");
  UniPoly d(1), prod(1);
  for (int j = r + 1; j <= k; ++j) {
    prod = prod * UniPoly::one_minus(j - 1);
    d = UniPoly(2) * d - prod;
  }
  return d;
}

RootReport scaled_D_roots(int k) {
  if (k < 2) throw std::invalid_argument("scaled_D_roots needs k >= 2");
  return roots_numeric(scale_var(D_poly(1, k), Rat(1, k)));
}

namespace {

Rat factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rat(f);
}

Rat int_pow(const Rat& b, int e) {
  Rat out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

}  // namespace

Rat asymptotic_constant(const Composition& alpha, int k) {
  const int r = alpha.width();
  if (k <= r) throw std::invalid_argument("asymptotic_constant needs k > width(alpha)");
  if (!alpha.all_ones())
    return int_pow(Rat(2), k - r) / (int_pow(Rat(k), alpha.weight()) * factorial(k - r));
  return D_poly(r, k).eval(Rat(1, k)) / (factorial(k - r) * int_pow(Rat(k), r));
}

AsymptoticReport asymptotic_check(const Composition& alpha, int k, int n_max) {
  AsymptoticReport rep;
  rep.constant = asymptotic_constant(alpha, k);
  const auto a = series_coeffs(L_recurrence_N(alpha, k), n_max);
  Rat kn = 1;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) kn *= k;
    if (a[n] == 0) continue;
    const Rat ratio = a[n] / (rep.constant * kn);
    rep.rel_error.emplace_back(n, std::abs(ratio.get_d() - 1.0));
  }
  return rep;
}

MultiPoly kappa_op(const MultiPoly& p) {
  std::vector<MultiPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Monomial s = m;
    std::sort(s.e.begin(), s.e.end(), std::greater<>());
    terms.emplace_back(s, c);
  }
  return MultiPoly::from_terms(std::move(terms));
}

MultiPoly shadow_series(const Alphabet& a, const Composition& alpha, int k, int max_total) {
  for (int p : alpha.vec())
    if (p != alpha[0]) throw std::invalid_argument("shadow_series needs alpha with all parts equal");
  return kappa_op(taylor(f_width(a, alpha, k), max_total));
}

}  // namespace compchains

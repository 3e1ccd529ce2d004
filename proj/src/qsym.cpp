#include "compchains/qsym.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "compchains/poset.hpp"

namespace compchains {

namespace {

void extend(const std::set<int>& strict, int n, int m, int pos, int prev, Monomial& cur,
            std::vector<MultiPoly::Term>& out) {
  if (pos == n) {
    out.emplace_back(cur, 1);
    return;
  }
  // pos is 0-based; the step from i_pos to i_{pos+1} is strict when pos is a descent.
  const int lo = pos == 0 ? 1 : (strict.count(pos) ? prev + 1 : prev);
  for (int i = lo; i <= m; ++i) {
    cur.set(i, cur.deg(i) + 1);
    extend(strict, n, m, pos + 1, i, cur, out);
    cur.set(i, cur.deg(i) - 1);
  }
}

Integer binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

MultiPoly fundamental(const Composition& alpha, int m) {
  if (m < 1 || m > kMaxVars) throw std::invalid_argument("fundamental: m out of range");
  const auto d = descent_set(alpha);
  const std::set<int> strict(d.elements.begin(), d.elements.end());
  std::vector<MultiPoly::Term> terms;
  Monomial cur;
  extend(strict, alpha.weight(), m, 0, 1, cur, terms);
  return MultiPoly::from_terms(std::move(terms));
}

bool verify_product_rule(const Composition& alpha, int m) {
  if (m < 0) m = alpha.weight() + 2;
  const MultiPoly lhs = mul(fundamental({1}, m), fundamental(alpha, m));
  MultiPoly rhs;
  for (const auto& beta : covers_via_descent_oracle(alpha)) rhs += fundamental(beta, m);
  return lhs == rhs;
}

bool is_quasi_symmetric(const MultiPoly& p, int m) {
  std::map<std::vector<int>, std::pair<Rat, long>> seen;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.max_var() > m) return false;
    std::vector<int> pattern;
    for (int i = 1; i <= m; ++i)
      if (mono.deg(i)) pattern.push_back(mono.deg(i));
    auto [it, fresh] = seen.try_emplace(pattern, c, 0);
    if (!fresh && it->second.first != c) return false;
    ++it->second.second;
  }
  for (const auto& [pattern, entry] : seen)
    if (binomial(m, static_cast<int>(pattern.size())) != entry.second) return false;
  return true;
}

int fundamentals_rank(int n, int m) {
  std::vector<MultiPoly> polys;
  std::map<Monomial, std::size_t> column;
  for (const auto& alpha : compositions_of(n)) {
    polys.push_back(fundamental(alpha, m));
    for (const auto& [mono, c] : polys.back().terms()) column.try_emplace(mono, column.size());
  }
  std::vector<std::vector<Rat>> rows;
  for (const auto& p : polys) {
    std::vector<Rat> row(column.size());
    for (const auto& [mono, c] : p.terms()) row[column[mono]] = c;
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (std::size_t col = 0; col < column.size() && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rat f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < column.size(); ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace compchains

#include "compchains/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "compchains/genfun.hpp"
#include "compchains/io.hpp"
#include "compchains/ncgen.hpp"
#include "compchains/poset.hpp"
#include "compchains/qsym.hpp"

namespace compchains {

void CheckResult::expect(bool ok, const std::string& what) {
  if (ok) return;
  pass = false;
  notes.push_back("FAILED: " + what);
}

CheckResult run_check(const NamedCheck& c) {
  CheckResult r;
  r.name = c.name;
  r.budget_seconds = c.budget_seconds;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    c.run(r);
  } catch (const std::exception& e) {
    r.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.budget_seconds > 0 && r.seconds > c.budget_seconds) {
    std::ostringstream os;
    os << "runtime " << r.seconds << " s exceeds " << c.budget_seconds << " s";
    r.expect(false, os.str());
  }
  return r;
}

namespace {

MultiPoly x(int i) { return MultiPoly::var(i); }
MultiPoly one() { return MultiPoly(1); }
MultiPoly form(std::initializer_list<int> s) { return linear_form(std::vector<int>(s)); }

FactoredRational frac(const MultiPoly& num, std::vector<MultiPoly> den) {
  std::vector<FactoredRational::Factor> fs;
  for (auto& d : den) fs.push_back({std::move(d), 1});
  return FactoredRational(num, std::move(fs));
}

UniRational uni(std::vector<Rat> num, std::vector<std::pair<int, int>> den) {
  std::vector<UniRational::Factor> fs;
  for (auto [c, m] : den) fs.push_back({UniPoly::one_minus(c), m});
  return UniRational(UniPoly(std::move(num)), std::move(fs));
}

std::vector<Rat> shifted(int shift, std::vector<Rat> coeffs) {
  coeffs.insert(coeffs.begin(), shift, Rat(0));
  return coeffs;
}

std::string comp_label(const Alphabet& a, const Composition& alpha, int k) {
  return a.str() + " alpha=" + alpha.str() + " k=" + std::to_string(k);
}

MultiPoly oracle_series(const Alphabet& a, const Composition& alpha, int k, int max_total) {
  MultiPoly out;
  for (int n = 0; alpha.weight() + n <= max_total; ++n)
    for (const auto& [q, c] : chain_counts(a, alpha, n, k))
      if (q.width() == k) out += MultiPoly::monomial(Monomial::from_exponents(q.vec()), Rat(c));
  return out;
}

std::string words_str(std::vector<Word> ws) {
  std::sort(ws.begin(), ws.end());
  std::string out = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? ", " : "") + word_str(ws[i]);
  return out + "}";
}

// ---- shared checks --------------------------------------------------------

void oracle_equivalence(CheckResult& r, int max_k, int degree) {
  const std::vector<Composition> alphas{{}, {1}, {2}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 1}};
  int cases = 0;
  for (const auto& a : {Alphabet::N(), Alphabet::BBD(), Alphabet::S(3), Alphabet::S(4)})
    for (const auto& alpha : alphas)
      for (int k = 0; k <= max_k; ++k) {
        const MultiPoly got = taylor(f_width(a, alpha, k), degree);
        const MultiPoly want = oracle_series(a, alpha, k, degree);
        r.expect(got == want, "Taylor coefficients differ from chain counts for " + comp_label(a, alpha, k));
        ++cases;
      }
  r.note(std::to_string(cases) + " generating functions compared to degree " + std::to_string(degree));
}

void d_poly_properties(CheckResult& r, int max_r, int max_k) {
  for (int rr = 1; rr <= max_r; ++rr) {
    Rat fact_r1 = 1;
    for (int i = 2; i < rr; ++i) fact_r1 *= i;
    Rat fact_k1 = fact_r1;
    for (int k = rr; k <= max_k; ++k) {
      if (k > rr) fact_k1 *= k - 1;
      const UniPoly d = D_poly(rr, k);
      const std::string at = "r=" + std::to_string(rr) + " k=" + std::to_string(k);
      std::vector<UniRational::Factor> den;
      for (int i = rr; i <= k; ++i) den.push_back({UniPoly::one_minus(i), 1});
      const Composition ones(std::vector<int>(rr, 1));
      r.expect(equals(L_width(Alphabet::N(), ones, k), UniRational(UniPoly::monomial(k) * d, den)),
               "L_k != t^k D_k / prod(1-it) at " + at);
      if (k == rr) {
        r.expect(d == UniPoly(1), "D_r != 1 at " + at);
        continue;
      }
      r.expect(d.degree() == k - rr, "degree at " + at);
      r.expect(d.coeff(0) == 1, "constant term at " + at);
      const Rat lead = ((k - rr + 1) % 2 ? Rat(-1) : Rat(1)) * fact_k1 / fact_r1;
      r.expect(d.lead() == lead, "leading coefficient at " + at);
    }
  }
}

void covers_count_and_oracle(CheckResult& r, int max_weight) {
  for (int n = 0; n <= max_weight; ++n)
    for (const auto& p : compositions_of(n)) {
      const auto cv = covers(Alphabet::SInf(), p);
      r.expect(static_cast<int>(cv.size()) == n + 1, "S^inf cover count of " + p.str());
      std::set<Composition> ends;
      for (const auto& c : cv) ends.insert(c.result);
      r.expect(ends == covers_via_descent_oracle(p), "descent oracle disagrees at " + p.str());
    }
}

void labeled_agreement(CheckResult& r, int max_len) {
  for (const Composition alpha : {Composition{1}, Composition{2}, Composition{1, 1}, Composition{2, 3}})
    for (int k = alpha.width(); k <= 4; ++k) {
      const std::string at = comp_label(Alphabet::N(), alpha, k);
      const NCSeries oracle = labeled_oracle(Alphabet::N(), alpha, k, max_len);
      if (auto m = compare_series(F_recurrence(Alphabet::N(), alpha, k, max_len), oracle))
        r.expect(false, "recurrence vs oracle, " + at + ": " + m->str());
      if (auto m = compare_series(path_series(build_automaton_N(alpha, k), max_len), oracle))
        r.expect(false, "automaton vs oracle, " + at + ": " + m->str());
      r.expect(regex_language(width_regex(alpha.width(), k, alpha.all_ones()), max_len) == oracle.support(),
               "regex language vs oracle, " + at);
    }
  for (const Composition alpha : {Composition{1}, Composition{2}, Composition{1, 1}})
    for (int k = alpha.width(); k <= 3; ++k)
      if (auto m = compare_series(F_recurrence(Alphabet::BBD(), alpha, k, max_len),
                                  labeled_oracle(Alphabet::BBD(), alpha, k, max_len)))
        r.expect(false, "BBD recurrence vs oracle, " + comp_label(Alphabet::BBD(), alpha, k) + ": " + m->str());
}

// ---- acceptance criteria --------------------------------------------------

void criterion_closed_forms(CheckResult& r) {
  const Alphabet n = Alphabet::N();
  const MultiPoly x12 = x(1) * x(2), x123 = x12 * x(3);
  const std::vector<MultiPoly> den3{form({1, 2}), form({2, 3}), form({1, 2, 3})};
  r.expect(equals(f_width(n, {1}, 1), frac(x(1), {form({1})})), "f_1^(1)");
  r.expect(equals(f_width(n, {1}, 2), frac(x12 * (one() - x12), {form({1}), form({2}), form({1, 2})})), "f_2^(1)");
  r.expect(equals(f_width(n, {1, 1}, 2), frac(x12, {form({1, 2})})), "f_2^(1,1)");
  r.expect(equals(f_width(n, {1, 1}, 3), frac(x123 * (one() - x12 - x(1) * x(3) - x(2) * x(2) - x(2) * x(3)), den3)),
           "f_3^(1,1)");
  r.expect(equals(f_width(n, {1, 2}, 3),
                  frac(x123 * (x(2) * x(2) * Rat(-1) - x(2) * x(3) * Rat(2) + x(2) - x(1) * x(3) + x(3)), den3)),
           "f_3^(1,2)");
  r.note("f_2^(1) = " + f_width(n, {1}, 2).str());
}

void criterion_specializations(CheckResult& r) {
  const Alphabet n = Alphabet::N(), b = Alphabet::BBD();
  struct Row {
    std::string name;
    UniRational computed, printed;
  };
  const std::vector<Row> rows{
      {"N L_1^(1)", L_width(n, {1}, 1), uni({0, 1}, {{1, 1}})},
      {"N L_2^(1)", L_width(n, {1}, 2), uni(shifted(2, {1, 1}), {{2, 1}, {1, 1}})},
      {"N L_3^(1)", L_width(n, {1}, 3), uni(shifted(3, {1, 5, -2}), {{3, 1}, {2, 1}, {1, 1}})},
      {"N L_4^(1)", L_width(n, {1}, 4), uni(shifted(4, {1, 16, -15, 6}), {{4, 1}, {3, 1}, {2, 1}, {1, 1}})},
      {"N L_5^(1,1)", L_width(n, {1, 1}, 5), uni(shifted(5, {-1, -27, 38, -24}), {{5, 1}, {4, 1}, {3, 1}, {2, 1}})},
      {"N L_5^(2,3)", L_width(n, {2, 3}, 5), uni(shifted(8, {8}), {{5, 1}, {4, 1}, {3, 1}, {2, 1}})},
      {"BBD L_1^(1)", L_width(b, {1}, 1), uni({0, 1}, {{1, 1}})},
      {"BBD L_2^(1)", L_width(b, {1}, 2), uni(shifted(2, {1, 1}), {{1, 1}, {2, 1}})},
      {"BBD L_3^(1)", L_width(b, {1}, 3), uni(shifted(3, {-1, -4, 3}), {{1, 2}, {2, 1}, {3, 1}})},
      {"BBD L_4^(1)", L_width(b, {1}, 4), uni(shifted(4, {1, 13, -19, -19, 12}), {{4, 1}, {1, 2}, {2, 2}, {3, 1}})},
  };
  for (const auto& row : rows) {
    if (equals(row.computed, row.printed)) continue;
    r.expect(false, row.name + ": printed " + row.printed.str() + " but computed " + row.computed.str());
    const auto printed = series_coeffs(row.printed, 8);
    const auto it = std::find_if(printed.begin(), printed.end(), [](const Rat& c) { return c < 0; });
    if (it != printed.end())
      r.note(row.name + ": the printed form has a negative coefficient at t^" +
             std::to_string(it - printed.begin()) + ", so it cannot count chains");
    const UniRational negated(UniPoly(-1) * row.printed.numerator(), row.printed.denominator());
    if (equals(row.computed, negated)) r.note(row.name + ": computed form equals the printed one with the sign flipped");
  }
  for (int k = 1; k <= 5; ++k)
    for (const Composition alpha : {Composition{1}, Composition{1, 1}, Composition{2, 3}}) {
      if (k < alpha.width()) continue;
      r.expect(equals(L_width(n, alpha, k), specialize_all(f_width(n, alpha, k))),
               "recurrence vs specialization at " + comp_label(n, alpha, k));
    }
}

void criterion_s_family(CheckResult& r) {
  for (int d = 2; d <= 8; ++d) {
    const MultiPoly num = x(1) * x(2) * (one() - x(1) * pow(x(2), d - 1));
    r.expect(equals(f_width(Alphabet::S(d), {1}, 2), frac(num, {form({1, 2}), form({2}), form({1})})),
             "f_2^(1)[S^" + std::to_string(d) + "] != x1x2(1-x1x2^" + std::to_string(d - 1) + ")/...");
  }
  const std::vector<std::vector<int>> cols3{{1}, {2}, {1, 2}, {3}, {1, 3}, {2, 3}, {1, 2, 3}};
  auto check3 = [&](const Alphabet& a, const Composition& alpha, const std::vector<int>& want,
                    const std::string& table) {
    const auto p = denominator_profile(a, alpha, 3);
    for (std::size_t c = 0; c < cols3.size(); ++c)
      r.expect(p.at(cols3[c]) == want[c], table + " row " + alpha.str() + " (" + a.str() + ") column " +
                                              std::to_string(c + 1) + ": got " + std::to_string(p.at(cols3[c])));
  };
  for (int d = 2; d <= 5; ++d) check3(Alphabet::S(d), {1}, {d, 1, 1, d, 1, 1, 1}, "STA3");
  const std::vector<std::pair<Composition, std::vector<int>>> bbd3{
      {{1}, {2, 1, 1, 2, 1, 1, 1}},    {{2}, {2, 1, 1, 2, 1, 1, 1}},    {{3}, {2, 1, 1, 2, 1, 1, 1}},
      {{1, 1}, {1, 0, 1, 1, 1, 1, 1}}, {{2, 1}, {1, 0, 1, 0, 1, 1, 1}}, {{2, 2}, {0, 0, 1, 0, 1, 1, 1}},
      {{3, 2}, {0, 0, 1, 0, 1, 1, 1}}, {{4, 4}, {0, 0, 1, 0, 1, 1, 1}}, {{1, 1, 1}, {0, 0, 0, 0, 0, 0, 1}}};
  for (const auto& [alpha, want] : bbd3) check3(Alphabet::BBD(), alpha, want, "BBD3");
  const std::vector<std::pair<Composition, std::vector<int>>> bbd4{
      {{1}, {2, 2, 2, 2, 1, 1, 1, 2, 2, 1, 1, 2, 1, 1, 1}},
      {{1, 1}, {1, 1, 2, 1, 1, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1}},
      {{2, 2}, {0, 0, 2, 0, 1, 1, 1, 0, 2, 1, 1, 2, 1, 1, 1}},
      {{1, 1, 1}, {0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1}},
      {{1, 1, 1, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}}};
  for (const auto& [alpha, want] : bbd4) {
    const auto p = denominator_profile(Alphabet::BBD(), alpha, 4);
    for (unsigned mask = 1; mask < 16; ++mask) {
      std::vector<int> s;
      for (int i = 0; i < 4; ++i)
        if (mask >> i & 1u) s.push_back(i + 1);
      r.expect(p.at(s) == want[mask - 1], "BBD4 row " + alpha.str() + " column " + std::to_string(mask));
    }
  }
}

void criterion_covers(CheckResult& r) {
  const std::vector<std::pair<std::string, Composition>> table{
      {"U1", {4, 4, 1, 2}},       {"L", {1, 3, 4, 1, 2}},    {"V2^2", {2, 2, 4, 1, 2}}, {"U2", {3, 5, 1, 2}},
      {"V2^1", {3, 1, 4, 1, 2}},  {"V3^3", {3, 2, 3, 1, 2}}, {"V3^2", {3, 3, 2, 1, 2}}, {"U3", {3, 4, 2, 2}},
      {"U4", {3, 4, 1, 3}},       {"V3^1", {3, 4, 1, 1, 2}}, {"V4^1", {3, 4, 1, 2, 1}}};
  const auto cv = covers(Alphabet::SInf(), {3, 4, 1, 2});
  r.expect(cv.size() == table.size(), "expected 11 covers, got " + std::to_string(cv.size()));
  for (const auto& [label, comp] : table) {
    auto it = std::find_if(cv.begin(), cv.end(), [&](const Cover& c) { return c.result == comp; });
    if (it == cv.end()) {
      r.expect(false, "row " + comp.str() + " missing");
      continue;
    }
    if (it->letter.str() != label) {
      r.expect(false, "row " + comp.str() + ": printed label " + label + ", computed " + it->letter.str());
      const auto printed = apply_letter(Letter::parse(label), {3, 4, 1, 2});
      r.note(label + ".(3,4,1,2) is " + (printed ? printed->str() : std::string("undefined")) + "; " +
             it->letter.str() + ".(3,4,1,2) = " + comp.str());
    }
  }
  covers_count_and_oracle(r, 7);
}

void criterion_qsym(CheckResult& r) {
  int count = 0;
  for (int n = 0; n <= 5; ++n)
    for (const auto& alpha : compositions_of(n)) {
      r.expect(verify_product_rule(alpha), "product rule fails for " + alpha.str());
      ++count;
    }
  r.note(std::to_string(count) + " compositions checked");
}

void criterion_shadow(CheckResult& r) {
  const SkewTableau fig{Partition{4, 2, 1}, Partition{2, 1}, {{0, 0, 3, 4}, {0, 1}, {2}}};
  const auto m = shadow_multiplicity(Alphabet::N(), fig);
  r.expect(m == 8, "multiplicity " + m.get_str() + " instead of 8");
  const MultiPoly s = shadow_series(Alphabet::N(), {}, 2, 5);
  const Rat c = s.coeff(Monomial::from_exponents({2, 1}));
  r.expect(c == 4, "coefficient of x1^2*x2 is " + c.get_str());
}

void criterion_labeled(CheckResult& r) {
  const NCSeries f = labeled_oracle(Alphabet::N(), {}, 2, 4);
  const std::set<Word> printed{parse_word("U2 L L"), parse_word("L U1 L")};
  const auto at_x1x2 = f.words_with(Monomial::from_exponents({1, 1}));
  if (std::set<Word>(at_x1x2.begin(), at_x1x2.end()) != printed) {
    r.expect(false, "coefficient of x1*x2 in F_2^() is " + words_str(at_x1x2) + ", not {U2 L L, L U1 L}");
    for (const auto& w : printed) r.note("word " + word_str(w) + " has monomial " + f.terms.at(w).str());
    const auto at = f.words_with(Monomial::from_exponents({1, 2}));
    r.note("coefficient of x1*x2^2 is " + words_str(at));
  }
  labeled_agreement(r, 7);
  r.note("all-ones correction word resolved as R L^(k-1-r) with weight x1*...*xk");
}

void criterion_roots(CheckResult& r) {
  double worst = 0;
  for (int k = 2; k <= 45; ++k) {
    const RootReport rep = scaled_D_roots(k);
    r.expect(static_cast<int>(rep.roots.size()) == k - 1, "root count at k=" + std::to_string(k));
    r.expect(rep.converged, "no convergence at k=" + std::to_string(k));
    for (double res : rep.residuals) {
      worst = std::max(worst, res);
      r.expect(res < 1e-8, "residual " + std::to_string(res) + " at k=" + std::to_string(k));
    }
  }
  std::ostringstream os;
  os << "largest residual " << worst;
  r.note(os.str());
}

}  // namespace

std::vector<NamedCheck> acceptance_criteria() {
  return {
      {"1 closed forms in N", 1, criterion_closed_forms},
      {"2 specializations L_k", 5, criterion_specializations},
      {"3 S-family closed forms and denominator tables", 120, criterion_s_family},
      {"4 covers of (3,4,1,2) in S^inf", 30, criterion_covers},
      {"5 oracle equivalence", 180, [](CheckResult& r) { oracle_equivalence(r, 4, 8); }},
      {"6 D_k", 5, [](CheckResult& r) { d_poly_properties(r, 3, 10); }},
      {"7 asymptotics for (2,3), k=5", 1,
       [](CheckResult& r) {
         r.expect(asymptotic_constant({2, 3}, 5) * 18750 == 8, "C != 8/18750");
         const auto rep = asymptotic_check({2, 3}, 5, 40);
         const double err = rep.rel_error.back().second;
         r.expect(rep.rel_error.back().first == 40 && err < 0.05, "relative error at n=40 is " + std::to_string(err));
         r.note("relative error at n=40: " + std::to_string(err));
       }},
      {"8 quasi-symmetric product rule", 60, criterion_qsym},
      {"9 shadow", 10, criterion_shadow},
      {"10 labeled enumeration", 180, criterion_labeled},
      {"11 zeros of D_k(x/k)", 30, criterion_roots},
  };
}

std::vector<NamedCheck> invariant_suites(bool quick) {
  const int extra = quick ? 0 : 1;
  std::vector<NamedCheck> out;

  out.push_back({"composition: multiweight, conjugate, descents", 0, [=](CheckResult& r) {
                   for (int n = 0; n <= 10 + extra; ++n) {
                     const auto all = compositions_of(n);
                     if (n > 0) r.expect(all.size() == (std::size_t{1} << (n - 1)), "count of compositions");
                     for (const auto& p : all) {
                       const Partition mw = multiweight(p);
                       r.expect(std::is_sorted(mw.parts().rbegin(), mw.parts().rend()), "multiweight order " + p.str());
                       r.expect(conjugate(mw) == mw_star(p), "conjugate(mw) != mw* at " + p.str());
                       r.expect(composition_from_descents(descent_set(p)) == p, "descent roundtrip " + p.str());
                     }
                   }
                 }});

  out.push_back({"operators: weight step, distinct covers, S^d vs S^inf", 0, [=](CheckResult& r) {
                   std::vector<Letter> letters{Letter::L(), Letter::R()};
                   for (int j = 1; j <= 9; ++j) letters.push_back(Letter::U(j));
                   for (int i = 2; i <= 9; ++i)
                     for (int s = 1; s <= 9; ++s) letters.push_back(Letter::V(i, s));
                   const std::vector<Alphabet> alphabets{Alphabet::N(), Alphabet::BBD(), Alphabet::S(3),
                                                         Alphabet::S(4), Alphabet::SInf(), Alphabet::UOnly()};
                   for (int n = 0; n <= 8 + extra; ++n)
                     for (const auto& p : compositions_of(n)) {
                       for (const auto& t : letters)
                         if (auto q = apply_letter(t, p)) r.expect(q->weight() == n + 1, "weight step " + t.str());
                       for (const auto& a : alphabets) {
                         const auto cv = admissible_letters(p, a);
                         std::set<Composition> ends;
                         for (const auto& c : cv) ends.insert(c.result);
                         r.expect(ends.size() == cv.size(), "repeated cover of " + p.str() + " in " + a.str());
                       }
                       if (n <= 7 + extra) {
                         r.expect(admissible_letters(p, Alphabet::SInf()).size() == static_cast<std::size_t>(n + 1),
                                  "S^inf cover count at " + p.str());
                         const int d = p.height() + 1;
                         if (d > 1)
                           r.expect(admissible_letters(p, Alphabet::S(d)) == admissible_letters(p, Alphabet::SInf()),
                                    "S(d) vs S^inf at " + p.str());
                       }
                     }
                 }});

  out.push_back({"poset: descent oracle, monotone family, U-only order, ranks", 0, [=](CheckResult& r) {
                   covers_count_and_oracle(r, 7 + extra);
                   for (int n = 0; n <= 6 + extra; ++n)
                     for (const auto& p : compositions_of(n)) {
                       std::vector<std::set<Composition>> ends;
                       for (const auto& a : {Alphabet::N(), Alphabet::BBD(), Alphabet::S(3), Alphabet::S(4)}) {
                         std::set<Composition> e;
                         for (const auto& c : covers(a, p)) e.insert(c.result);
                         ends.push_back(std::move(e));
                       }
                       for (std::size_t i = 0; i + 1 < ends.size(); ++i)
                         r.expect(std::includes(ends[i + 1].begin(), ends[i + 1].end(), ends[i].begin(), ends[i].end()),
                                  "cover sets not nested at " + p.str());
                     }
                   for (int n = 0; n <= 6; ++n)
                     for (const auto& p : compositions_of(n))
                       for (int m = n; m <= 7; ++m)
                         for (const auto& q : compositions_of(m)) {
                           bool expected = p.width() == q.width();
                           for (int i = 0; expected && i < p.width(); ++i) expected = p[i] <= q[i];
                           r.expect(leq(Alphabet::UOnly(), p, q) == expected, "U-only order " + p.str() + " vs " + q.str());
                         }
                   for (const auto& a : {Alphabet::N(), Alphabet::BBD(), Alphabet::SInf()})
                     for (const auto& c : enumerate_chains(a, {}, 6))
                       for (int i = 0; i <= c.length(); ++i) r.expect(c.steps[i].weight() == i, "rank along chain");
                 }});

  out.push_back({"polyfrac: delta projections, arithmetic vs series, monomial division", 0, [=](CheckResult& r) {
                   std::mt19937 rng(2024);
                   auto random_poly = [&](int vars, int max_deg, int terms) {
                     std::vector<MultiPoly::Term> ts;
                     std::uniform_int_distribution<int> deg(0, max_deg), coef(-3, 3);
                     for (int t = 0; t < terms; ++t) {
                       std::vector<int> e(vars);
                       for (auto& v : e) v = deg(rng);
                       ts.emplace_back(Monomial::from_exponents(e), coef(rng));
                     }
                     return MultiPoly::from_terms(ts);
                   };
                   for (int t = 0; t < 20; ++t) {
                     const FactoredRational p(random_poly(3, 4, 20));
                     for (int d = 0; d <= 4; ++d)
                       for (int e = 0; e <= 4; ++e) {
                         const FactoredRational twice = delta_op(delta_op(p, 1, e), 1, d);
                         if (d == e)
                           r.expect(equals(twice, delta_op(p, 1, d)), "delta idempotence");
                         else
                           r.expect(twice.is_zero(), "delta orthogonality");
                       }
                   }
                   const std::vector<MultiPoly> forms{form({1}), form({2}), form({1, 2}), form({2, 3})};
                   for (int t = 0; t < 12 + 12 * extra; ++t) {
                     auto make = [&] {
                       std::vector<FactoredRational::Factor> den;
                       for (const auto& f : forms)
                         if (rng() % 2) den.push_back({f, static_cast<int>(rng() % 2) + 1});
                       return FactoredRational(random_poly(3, 2, 6), den);
                     };
                     const FactoredRational a = make(), b = make();
                     r.expect(taylor(a + b, 8) == taylor(a, 8) + taylor(b, 8), "sum vs series");
                     r.expect(taylor(a * b, 8) == mul_truncated(taylor(a, 8), taylor(b, 8), 8), "product vs series");
                     const FactoredRational g = mul_monomial(a, Monomial::var(2, 3));
                     r.expect(equals(divide_by_monomial_exact(g, 2, 3), a), "monomial division roundtrip");
                   }
                 }});

  out.push_back({"genfun: oracle equivalence, full-set exponent, specialization, D_k, kappa", 0, [=](CheckResult& r) {
                   oracle_equivalence(r, 4, 8);
                   for (const auto& a : {Alphabet::BBD(), Alphabet::S(3), Alphabet::S(4)})
                     for (const Composition alpha : {Composition{1}, Composition{2}, Composition{1, 1}, Composition{2, 2}})
                       for (int k = std::max(alpha.width(), 1); k <= 3 + extra; ++k)
                         r.expect(denominator_profile(a, alpha, k).at([k] {
                           std::vector<int> s(k);
                           for (int i = 0; i < k; ++i) s[i] = i + 1;
                           return s;
                         }()) == 1,
                                  "full-set exponent at " + comp_label(a, alpha, k));
                   for (int w = 0; w <= 3; ++w)
                     for (const auto& alpha : compositions_of(w))
                       for (int k = alpha.width(); k <= 4; ++k)
                         r.expect(equals(L_recurrence_N(alpha, k), specialize_all(f_width(Alphabet::N(), alpha, k))),
                                  "specialization at " + comp_label(Alphabet::N(), alpha, k));
                   for (int w = 0; w <= 4; ++w)
                     for (const auto& alpha : compositions_of(w))
                       for (int k = alpha.width(); k <= 4; ++k) structure_check(alpha, k);
                   d_poly_properties(r, 3, 10 + 2 * extra);
                   for (int k = 1; k <= 3; ++k) {
                     const MultiPoly t = taylor(f_width(Alphabet::N(), {}, k), 7);
                     const MultiPoly s = kappa_op(t);
                     r.expect(kappa_op(s) == s, "kappa idempotent");
                     Rat a = 0, b = 0;
                     for (const auto& [m, c] : t.terms()) a += c;
                     for (const auto& [m, c] : s.terms()) b += c;
                     r.expect(a == b, "kappa preserves the coefficient sum");
                   }
                 }});

  out.push_back({"qsym: quasi-symmetry and independence", 0, [=](CheckResult& r) {
                   for (int n = 1; n <= 5; ++n)
                     for (const auto& alpha : compositions_of(n))
                       for (int m = 1; m <= 7; ++m)
                         r.expect(is_quasi_symmetric(fundamental(alpha, m), m), "quasi-symmetry " + alpha.str());
                   for (int n = 1; n <= 5 + extra; ++n)
                     r.expect(fundamentals_rank(n, n) == (1 << (n - 1)), "independence at n=" + std::to_string(n));
                   for (int n = 0; n <= 5 + extra; ++n)
                     for (const auto& alpha : compositions_of(n))
                       r.expect(verify_product_rule(alpha), "product rule " + alpha.str());
                 }});

  out.push_back({"ncgen: collapse identities and triple agreement", 0, [=](CheckResult& r) {
                   for (const auto& a : {Alphabet::N(), Alphabet::BBD()})
                     for (const Composition alpha : {Composition{1}, Composition{2}, Composition{1, 1}})
                       for (int k = alpha.width(); k <= 3; ++k) {
                         const NCSeries f = F_recurrence(a, alpha, k, 6);
                         r.expect(f.collapse_letters() == taylor(f_width(a, alpha, k), alpha.weight() + 6),
                                  "letters -> 1 at " + comp_label(a, alpha, k));
                         r.expect(f.support() == labeled_oracle(a, alpha, k, 6).support(),
                                  "support at " + comp_label(a, alpha, k));
                       }
                   labeled_agreement(r, 7 + extra);
                 }});

  out.push_back({"io: JSON round trips", 0, [](CheckResult& r) {
                   const FactoredRational f = f_width(Alphabet::S(3), {1}, 3);
                   const auto g = json::parse(json(f).dump()).get<FactoredRational>();
                   r.expect(g.numerator() == f.numerator() && g.denominator() == f.denominator(), "rational function");
                   const UniRational u = L_width(Alphabet::N(), {1, 1}, 5);
                   r.expect(json::parse(json(u).dump()).get<UniRational>().str() == u.str(), "univariate");
                   const NCSeries s = F_recurrence(Alphabet::BBD(), {1}, 2, 4);
                   r.expect(json::parse(json(s).dump()).get<NCSeries>() == s, "labeled series");
                   const WeightedDigraph d = build_automaton_N({1}, 3);
                   r.expect(json::parse(json(d).dump()).get<WeightedDigraph>() == d, "digraph");
                   const Composition c{3, 4, 1, 2};
                   r.expect(json::parse(json(c).dump()).get<Composition>() == c, "composition");
                 }});
  return out;
}

}  // namespace compchains

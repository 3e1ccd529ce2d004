#include "doctest.h"

#include <random>

#include "compchains/polyfrac.hpp"
#include "compchains/roots.hpp"

using namespace compchains;

namespace {

MultiPoly x(int i) { return MultiPoly::var(i); }
MultiPoly mono(std::vector<int> e, int c = 1) { return MultiPoly::monomial(Monomial::from_exponents(e), c); }

MultiPoly random_poly(std::mt19937& rng, int vars, int max_deg, int terms) {
  std::vector<MultiPoly::Term> ts;
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-3, 3);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(vars);
    for (auto& v : e) v = deg(rng);
    ts.emplace_back(Monomial::from_exponents(e), coef(rng));
  }
  return MultiPoly::from_terms(ts);
}

}  // namespace

TEST_CASE("polynomial basics") {
  MultiPoly p = x(1) * x(2) + x(1) * x(1);
  CHECK(degree_part(p, 1, 1) == x(1) * x(2));
  CHECK(shift_vars(mono({2, 1}), 1) == mono({0, 2, 1}));
  CHECK(degree_part(mono({1, 2}) + mono({0, 3}), 2, 2) == mono({1, 2}));
  CHECK(derivative(mono({3, 1}), 1) == mono({2, 1}, 3));
  CHECK(substitute_zero(x(1) + x(2), 2) == x(1));
  CHECK((x(1) - x(1)).is_zero());
  CHECK((MultiPoly(1) - x(1) * x(2)).str() == "1-x1*x2");
  MultiPoly q = x(1) + x(2);
  q += q;
  CHECK(q == x(1) * Rat(2) + x(2) * Rat(2));
}

TEST_CASE("exact division") {
  MultiPoly f = MultiPoly(1) - x(1) - x(2);
  MultiPoly g = x(1) * x(3) + mono({0, 2}) - Rat(7);
  auto q = exact_divide(mul(f, g), f);
  REQUIRE(q.has_value());
  CHECK(*q == g);
  CHECK_FALSE(exact_divide(mul(f, g) + x(1), f).has_value());
  CHECK(divide_by_monomial(mono({0, 3}), Monomial::var(2, 2)) == mono({0, 1}));
  CHECK_THROWS_AS(divide_by_monomial(x(1) + x(2), Monomial::var(2)), NotDivisible);
}

TEST_CASE("parallel and serial products agree") {
  std::mt19937 rng(7);
  for (int t = 0; t < 5; ++t) {
    MultiPoly a = random_poly(rng, 4, 6, 120);
    MultiPoly b = random_poly(rng, 4, 6, 90);
    CHECK(mul(a, b) == mul_serial(a, b));
  }
}

TEST_CASE("delta projections on polynomials") {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    MultiPoly p = random_poly(rng, 3, 4, 25);
    for (int d = 0; d <= 4; ++d) {
      CHECK(delta_op(FactoredRational(p), 2, d).numerator() == degree_part(p, 2, d));
      for (int e = 0; e <= 4; ++e) {
        MultiPoly twice = degree_part(degree_part(p, 1, e), 1, d);
        CHECK(twice == (d == e ? degree_part(p, 1, d) : MultiPoly{}));
      }
    }
  }
}

TEST_CASE("delta and lambda on rational functions") {
  FactoredRational geo(x(1), {{MultiPoly(1) - x(1), 1}});
  FactoredRational d1 = delta_op(geo, 1, 1);
  CHECK(equals(d1, FactoredRational(x(1))));
  CHECK(d1.denominator().empty());

  FactoredRational f(x(1) * x(2), {{MultiPoly(1) - x(1) - x(2), 1}});
  FactoredRational g = lambda_op(f, 1);
  CHECK(g.numerator() == x(2) * x(3));
  REQUIRE(g.denominator().size() == 1);
  CHECK(g.denominator()[0].poly == MultiPoly(1) - x(2) - x(3));

  // Compare delta against filtering the Taylor expansion.
  FactoredRational h(x(1) * x(2) * (MultiPoly(1) - x(1) * x(2)),
                     {{MultiPoly(1) - x(1), 1}, {MultiPoly(1) - x(2), 1}, {MultiPoly(1) - x(1) - x(2), 2}});
  for (int i = 1; i <= 2; ++i)
    for (int d = 0; d <= 4; ++d)
      CHECK(taylor(delta_op(h, i, d), 9) == degree_part(taylor(h, 9), i, d));
}

TEST_CASE("taylor") {
  FactoredRational f(x(1) * x(2), {{MultiPoly(1) - x(1) - x(2), 1}});
  MultiPoly t = taylor(f, 4);
  CHECK(t.coeff(Monomial::from_exponents({1, 1})) == 1);
  CHECK(t.coeff(Monomial::from_exponents({2, 1})) == 1);
  CHECK(t.coeff(Monomial::from_exponents({2, 2})) == 2);
  CHECK(t.coeff(Monomial::from_exponents({3, 1})) == 1);
  CHECK(t.total_degree() == 4);
  CHECK(taylor(FactoredRational(MultiPoly(1), {{MultiPoly(1) - x(1), 1}}), 3) ==
        MultiPoly(1) + x(1) + mono({2}) + mono({3}));
}

TEST_CASE("add and mul agree with truncated series") {
  std::mt19937 rng(5);
  const std::vector<MultiPoly> forms{MultiPoly(1) - x(1), MultiPoly(1) - x(2), MultiPoly(1) - x(1) - x(2),
                                     MultiPoly(1) - x(2) - x(3)};
  for (int t = 0; t < 12; ++t) {
    auto make = [&] {
      std::vector<FactoredRational::Factor> den;
      for (const auto& f : forms)
        if (rng() % 2) den.push_back({f, static_cast<int>(rng() % 2) + 1});
      return FactoredRational(random_poly(rng, 3, 2, 6), den);
    };
    FactoredRational a = make(), b = make();
    CHECK(taylor(a + b, 8) == taylor(a, 8) + taylor(b, 8));
    CHECK(taylor(a * b, 8) == mul_truncated(taylor(a, 8), taylor(b, 8), 8));
    CHECK(taylor(a - a, 8).is_zero());
  }
}

TEST_CASE("monomial division roundtrip") {
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    FactoredRational g(random_poly(rng, 3, 3, 8), {{MultiPoly(1) - x(1) - x(3), 2}});
    FactoredRational shifted = mul_monomial(g, Monomial::var(2, 3));
    CHECK(equals(divide_by_monomial_exact(shifted, 2, 3), g));
  }
}

TEST_CASE("reduction cancels common linear factors") {
  MultiPoly f = MultiPoly(1) - x(1);
  FactoredRational r(mul(x(2), f), {{f, 2}});
  r.reduce();
  CHECK(r.numerator() == x(2));
  REQUIRE(r.denominator().size() == 1);
  CHECK(r.denominator()[0].mult == 1);
}

TEST_CASE("factor canonicalization") {
  // (2 - 2 x1) becomes (1 - x1) with the 1/2 moved to the numerator.
  FactoredRational r(MultiPoly(1), {{MultiPoly(2) - x(1) * Rat(2), 1}});
  CHECK(r.numerator() == MultiPoly(Rat(1, 2)));
  CHECK(r.denominator()[0].poly == MultiPoly(1) - x(1));
  CHECK_THROWS(FactoredRational(MultiPoly(1), {{x(1), 1}}));
}

TEST_CASE("rendering") {
  FactoredRational f(x(1) * x(2) * (MultiPoly(1) - x(1) * x(2)),
                     {{MultiPoly(1) - x(1) - x(2), 1}, {MultiPoly(1) - x(2), 1}, {MultiPoly(1) - x(1), 1}});
  CHECK(f.str() == "x1*x2*(1-x1*x2)/((1-x1)*(1-x2)*(1-x1-x2))");
  UniRational g(UniPoly({0, 0, 0, 1, 5, -2}),
                {{UniPoly::one_minus(3), 1}, {UniPoly::one_minus(1), 1}, {UniPoly::one_minus(2), 1}});
  CHECK(g.str() == "t^3*(1+5t-2t^2)/((1-t)(1-2t)(1-3t))");
  CHECK(UniRational(UniPoly({0, 1}), {{UniPoly::one_minus(1), 1}}).str() == "t/(1-t)");
  CHECK(UniRational(UniPoly::monomial(8, 8), {{UniPoly::one_minus(2), 2}}).str() == "8*t^8/((1-2t)^2)");
}

TEST_CASE("specialization and series coefficients") {
  FactoredRational f(x(1) * x(2), {{MultiPoly(1) - x(1) - x(2), 1}});
  UniRational u = specialize_all(f);
  CHECK(equals(u, UniRational(UniPoly::monomial(2), {{UniPoly::one_minus(2), 1}})));
  CHECK(series_coeffs(u, 6) == std::vector<Rat>{0, 0, 1, 2, 4, 8, 16});
  CHECK(series_coeffs(UniRational(UniPoly(1), {{UniPoly::one_minus(1), 1}}), 3) ==
        std::vector<Rat>{1, 1, 1, 1});
  // (1 - t^2) t^2 / ((1-t)^2 (1-2t)) reduces by one factor (1-t).
  FactoredRational g(x(1) * x(2) * (MultiPoly(1) - x(1) * x(2)),
                     {{MultiPoly(1) - x(1), 1}, {MultiPoly(1) - x(2), 1}, {MultiPoly(1) - x(1) - x(2), 1}});
  UniRational s = specialize_all(g);
  CHECK(s.str() == "t^2*(1+t)/((1-t)(1-2t))");
}

TEST_CASE("univariate division") {
  auto [q, r] = divmod(UniPoly({-1, 0, 1}), UniPoly({1, 1}));
  CHECK(q == UniPoly({-1, 1}));
  CHECK(r.is_zero());
  CHECK(scale_var(UniPoly({1, 1, 1}), Rat(1, 2)) == UniPoly({1, Rat(1, 2), Rat(1, 4)}));
}

TEST_CASE("numeric roots") {
  auto r1 = roots_numeric(UniPoly({1, 1}));
  REQUIRE(r1.roots.size() == 1);
  CHECK(r1.roots[0].real() == doctest::Approx(-1.0));
  CHECK(r1.residuals[0] < 1e-10);

  auto r2 = roots_numeric(UniPoly::one_minus(1) * UniPoly::one_minus(2));
  REQUIRE(r2.roots.size() == 2);
  CHECK(r2.roots[0].real() == doctest::Approx(0.5));
  CHECK(r2.roots[1].real() == doctest::Approx(1.0));
  CHECK(r2.converged);

  auto r3 = roots_numeric(UniPoly({1, 0, 1}));
  REQUIRE(r3.roots.size() == 2);
  CHECK(r3.roots[0].imag() == doctest::Approx(-1.0));
  CHECK(r3.roots[1].imag() == doctest::Approx(1.0));

  CHECK_THROWS(roots_numeric(UniPoly(3)));
}

#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "compchains/poset.hpp"

using namespace compchains;

namespace {

std::set<Composition> endpoints(const std::vector<Cover>& cv) {
  std::set<Composition> out;
  for (const auto& c : cv) out.insert(c.result);
  return out;
}

// Independent count: plain recursion over covers, no layering.
long brute_count(const Alphabet& a, const Composition& p, const Composition& q) {
  if (p == q) return 1;
  if (p.weight() >= q.weight()) return 0;
  long n = 0;
  for (const auto& c : admissible_letters(p, a)) n += brute_count(a, c.result, q);
  return n;
}

Chain rho() {
  auto chains = enumerate_chains(Alphabet::N(), {1, 2}, 4, 3);
  for (const auto& c : chains)
    if (c.steps == std::vector<Composition>{{1, 2}, {2, 2}, {1, 2, 2}, {1, 2, 3}, {1, 2, 4}}) return c;
  FAIL("rho not found");
  return {};
}

}  // namespace

TEST_CASE("covers examples") {
  CHECK(endpoints(covers(Alphabet::S(3), {3})).count({2, 2}) == 1);
  CHECK(endpoints(covers(Alphabet::BBD(), {3})).count({2, 2}) == 0);
  auto c0 = covers(Alphabet::N(), {});
  REQUIRE(c0.size() == 1);
  CHECK(c0[0].letter == Letter::L());
}

TEST_CASE("smallest permutation with a descent set") {
  auto perm = smallest_permutation_with_descents(descent_set({3, 4, 1, 2}));
  CHECK(perm == std::vector<int>{1, 2, 4, 3, 5, 6, 9, 8, 7, 10});
}

TEST_CASE("descent oracle examples") {
  CHECK(covers_via_descent_oracle({}) == std::set<Composition>{{1}});
  CHECK(covers_via_descent_oracle({2}) == std::set<Composition>{{3}, {1, 2}, {2, 1}});
  std::set<Composition> table{{1, 3, 4, 1, 2}, {4, 4, 1, 2}, {3, 5, 1, 2}, {3, 4, 2, 2},
                              {3, 4, 1, 3},    {3, 1, 4, 1, 2}, {2, 2, 4, 1, 2}, {3, 4, 1, 1, 2},
                              {3, 3, 2, 1, 2}, {3, 2, 3, 1, 2}, {3, 4, 1, 2, 1}};
  CHECK(covers_via_descent_oracle({3, 4, 1, 2}) == table);
}

TEST_CASE("descent oracle does not depend on the permutation, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      DescentSet d{n, {}};
      for (int j = 0; j + 1 < n; ++j)
        if (perm[j] > perm[j + 1]) d.elements.push_back(j + 1);
      const Composition p = composition_from_descents(d);
      CHECK(covers_via_descent_oracle(p, perm) == covers_via_descent_oracle(p));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("S^inf covers agree with the descent oracle, weight <= 7") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& p : compositions_of(n))
      CHECK(endpoints(covers(Alphabet::SInf(), p)) == covers_via_descent_oracle(p));
}

TEST_CASE("leq") {
  CHECK(leq(Alphabet::N(), {1, 2}, {1, 2, 4}));
  CHECK(leq(Alphabet::BBD(), {3, 1}, {3, 1}));
  CHECK(leq(Alphabet::UOnly(), {1, 2}, {2, 2}));
  CHECK_FALSE(leq(Alphabet::UOnly(), {1, 2}, {1, 1, 2}));
  CHECK_FALSE(leq(Alphabet::N(), {2}, {1, 1}));
}

TEST_CASE("U-only order is the componentwise order within each width, weight <= 7") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& p : compositions_of(n))
      for (int m = n; m <= 7; ++m)
        for (const auto& q : compositions_of(m)) {
          bool expected = p.width() == q.width();
          for (int i = 0; expected && i < p.width(); ++i) expected = p[i] <= q[i];
          CHECK(leq(Alphabet::UOnly(), p, q) == expected);
        }
}

TEST_CASE("count_chains") {
  CHECK(count_chains(Alphabet::N(), {}, {1, 1, 1, 1}) == 1);
  CHECK(count_chains(Alphabet::N(), {}, {2, 1}) + count_chains(Alphabet::N(), {}, {1, 2}) == 4);
  CHECK(count_chains(Alphabet::N(), {}, {2, 1}) == 2);
  CHECK(count_chains(Alphabet::N(), {1, 1}, {2, 2}) == 2);
  CHECK(count_chains(Alphabet::N(), {3}, {1, 1}) == 0);
}

TEST_CASE("layered counts match plain recursion, weight <= 6") {
  for (const auto& a : {Alphabet::N(), Alphabet::BBD(), Alphabet::S(3), Alphabet::SInf()})
    for (int m = 0; m <= 6; ++m)
      for (const auto& q : compositions_of(m)) CHECK(count_chains(a, {}, q) == brute_count(a, {}, q));
}

TEST_CASE("parallel and serial layer kernels agree") {
  for (const auto& a : {Alphabet::N(), Alphabet::BBD(), Alphabet::S(4)})
    CHECK(chain_counts(a, {}, 9, -1, false) == chain_counts(a, {}, 9, -1, true));
}

TEST_CASE("enumerate_chains") {
  auto r = rho();
  CHECK(word_str(r.word()) == "U3 U3 L U1");
  auto trivial = enumerate_chains(Alphabet::N(), {}, 0);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].length() == 0);

  auto all = enumerate_chains(Alphabet::BBD(), {}, 4);
  mpz_class total = 0;
  for (const auto& q : compositions_of(4)) total += count_chains(Alphabet::BBD(), {}, q);
  CHECK(total == static_cast<unsigned long>(all.size()));
  for (const auto& c : all)
    for (int i = 0; i <= c.length(); ++i) CHECK(c.steps[i].weight() == i);
}

TEST_CASE("tableau of rho") {
  Tableau t = chain_to_tableau(rho());
  CHECK(t.columns == std::vector<std::vector<int>>{{2}, {0, 1}, {0, 0, 3, 4}});
  CHECK(t.initial() == Composition{1, 2});
  CHECK(t.shape() == Composition{1, 2, 4});
  Chain back = tableau_to_chain(t, Alphabet::N());
  CHECK(back.steps == rho().steps);
  CHECK(back.labels == rho().labels);
}

TEST_CASE("only tableau for (1,1,1,1)") {
  auto chains = enumerate_chains(Alphabet::N(), {}, 4, 4);
  REQUIRE(chains.size() == 1);
  CHECK(chain_to_tableau(chains[0]).columns == std::vector<std::vector<int>>{{4}, {3}, {2}, {1}});
}

TEST_CASE("tableau of the BBD standard path gamma") {
  const std::vector<Composition> steps{{},           {1},          {1, 1},       {1, 2},       {1, 2, 1},
                                       {1, 3, 1},    {1, 3, 1, 1}, {1, 3, 1, 2}, {2, 3, 1, 2}, {2, 3, 1, 3},
                                       {2, 3, 1, 4}, {2, 3, 1, 5}, {2, 3, 1, 1, 5}};
  const Alphabet bbd = Alphabet::BBD();
  Chain gamma;
  gamma.steps.push_back({});
  for (std::size_t s = 1; s < steps.size(); ++s) {
    bool found = false;
    for (const auto& c : admissible_letters(steps[s - 1], bbd))
      if (c.result == steps[s]) {
        gamma.labels.push_back(c.letter);
        gamma.steps.push_back(c.result);
        found = true;
      }
    REQUIRE(found);
  }
  Tableau t = chain_to_tableau(gamma);
  CHECK(t.columns ==
        std::vector<std::vector<int>>{{2, 8}, {1, 3, 5}, {12}, {6}, {4, 7, 9, 10, 11}});
  Chain back = tableau_to_chain(t, bbd);
  CHECK(back.steps == gamma.steps);
}

TEST_CASE("tableaux are rejected for V^r with r >= 2") {
  Chain c;
  c.steps = {{3}, {2, 2}};
  c.labels = {Letter::V(2, 2)};
  CHECK_THROWS_AS(chain_to_tableau(c), std::invalid_argument);
}

TEST_CASE("tableau roundtrip for all standard paths of length <= 5") {
  for (const auto& a : {Alphabet::N(), Alphabet::BBD()})
    for (int n = 0; n <= 5; ++n)
      for (const auto& c : enumerate_chains(a, {}, n)) {
        Chain back = tableau_to_chain(chain_to_tableau(c), a);
        CHECK(back.labels == c.labels);
        CHECK(back.steps == c.steps);
      }
}

TEST_CASE("shadow of rho and its multiplicity") {
  SkewTableau s = shadow(rho());
  CHECK(s.outer == Partition{4, 2, 1});
  CHECK(s.inner == Partition{2, 1});
  CHECK(s.columns == std::vector<std::vector<int>>{{0, 0, 3, 4}, {0, 1}, {2}});
  CHECK(shadow_multiplicity(Alphabet::N(), s) == 8);

  std::set<std::vector<std::vector<int>>> got;
  for (const auto& c : chains_with_shadow(Alphabet::N(), s)) got.insert(chain_to_tableau(c).columns);
  const std::set<std::vector<std::vector<int>>> table{
      {{0, 0, 3, 4}, {0, 1}, {2}}, {{0, 0}, {0, 1, 3, 4}, {2}}, {{0, 1, 3, 4}, {0, 0}, {2}},
      {{0, 1}, {0, 0, 3, 4}, {2}}, {{2}, {0, 1}, {0, 0, 3, 4}}, {{2}, {0, 1, 3, 4}, {0, 0}},
      {{2}, {0, 0}, {0, 1, 3, 4}}, {{2}, {0, 0, 3, 4}, {0, 1}}};
  CHECK(got == table);
}

TEST_CASE("multiranking") {
  auto n = verify_multiranking(Alphabet::N(), 7);
  CHECK(n.ok);
  CHECK(n.extra_edges.empty());
  auto b = verify_multiranking(Alphabet::BBD(), 7);
  CHECK(b.ok);
  CHECK(b.extra_edges.empty());
  auto s3 = verify_multiranking(Alphabet::S(3), 5);
  CHECK(s3.ok);
  CHECK(s3.extra_edges.count({Partition{3}, Partition{2, 2}}) == 1);
}

TEST_CASE("poset family is increasing on endpoint sets, weight <= 6") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& p : compositions_of(n)) {
      auto en = endpoints(covers(Alphabet::N(), p));
      auto eb = endpoints(covers(Alphabet::BBD(), p));
      auto e3 = endpoints(covers(Alphabet::S(3), p));
      auto e4 = endpoints(covers(Alphabet::S(4), p));
      // An R-step of N appends a 1; BBD reaches the same endpoint by
      // inserting after the last part > 1, and R is never admissible on
      // all-ones compositions.
      CHECK(std::includes(eb.begin(), eb.end(), en.begin(), en.end()));
      CHECK(std::includes(e3.begin(), e3.end(), eb.begin(), eb.end()));
      CHECK(std::includes(e4.begin(), e4.end(), e3.begin(), e3.end()));
    }
}

TEST_CASE("hasse export") {
  std::string dot = hasse_dot(Alphabet::N(), 2);
  CHECK(dot.find("\"()\" -> \"1\" [label=\"L\"]") != std::string::npos);
  CHECK(dot.find("\"1\" -> \"2\" [label=\"U1\"]") != std::string::npos);
  CHECK(dot.find("\"1\" -> \"1,1\" [label=\"L\"]") != std::string::npos);
}

#include "doctest.h"

#include "compchains/genfun.hpp"
#include "compchains/ncgen.hpp"

using namespace compchains;

namespace {

Monomial mono(std::vector<int> e) { return Monomial::from_exponents(e); }

std::set<Word> words(std::initializer_list<const char*> texts) {
  std::set<Word> out;
  for (const char* t : texts) out.insert(parse_word(t));
  return out;
}

std::set<Word> of_length(const std::set<Word>& s, std::size_t len) {
  std::set<Word> out;
  for (const auto& w : s)
    if (w.size() == len) out.insert(w);
  return out;
}

void check_agree(const NCSeries& a, const NCSeries& b) {
  auto m = compare_series(a, b);
  INFO((m ? m->str() : std::string("agree")));
  CHECK_FALSE(m.has_value());
}

}  // namespace

TEST_CASE("oracle: words with a given endpoint") {
  NCSeries f = labeled_oracle(Alphabet::N(), {}, 2, 3);
  std::vector<Word> got = f.words_with(mono({1, 2}));
  CHECK(std::set<Word>(got.begin(), got.end()) == words({"U2 L L", "L U1 L"}));
  // The only width-2 word of x_1 x_2 is L L.
  CHECK(f.words_with(mono({1, 1})) == std::vector<Word>{parse_word("L L")});

  NCSeries z = labeled_oracle(Alphabet::N(), {3, 1}, std::nullopt, 0);
  REQUIRE(z.terms.size() == 1);
  CHECK(z.terms.begin()->first.empty());
  CHECK(z.terms.begin()->second == mono({3, 1}));
}

TEST_CASE("oracle word counts for (2) at width 2") {
  NCSeries f = labeled_oracle(Alphabet::N(), {2}, 2, 6);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(of_length(f.support(), n).size() == 2 * ((1u << n) - 1));
}

TEST_CASE("small recurrence series") {
  NCSeries f = F_recurrence(Alphabet::N(), {2}, 1, 4);
  CHECK(f.terms.size() == 5);
  for (int m = 0; m <= 4; ++m) CHECK(f.terms.at(Word(m, Letter::U(1))) == mono({m + 2}));
  NCSeries b = F_recurrence(Alphabet::BBD(), {1}, 1, 3);
  for (int m = 0; m <= 3; ++m) CHECK(b.terms.at(Word(m, Letter::U(1))) == mono({m + 1}));
}

TEST_CASE("recurrence agrees with the oracle in N") {
  for (const Composition alpha : {Composition{}, Composition{1}, Composition{2}, Composition{1, 1}, Composition{2, 3}})
    for (int k = alpha.width(); k <= 4; ++k) {
      INFO("alpha=", alpha.str(), " k=", k);
      check_agree(F_recurrence(Alphabet::N(), alpha, k, 7), labeled_oracle(Alphabet::N(), alpha, k, 7));
    }
}

TEST_CASE("the correction word R L^{k-1} only fits the empty start") {
  auto printed = F_recurrence(Alphabet::N(), {1}, 2, 5, CorrectionWord::AsPrinted);
  auto m = compare_series(printed, labeled_oracle(Alphabet::N(), {1}, 2, 5));
  REQUIRE(m.has_value());
  CHECK(m->word == parse_word("R"));
  CHECK(m->left == mono({1, 1}));
  CHECK_FALSE(m->right.has_value());
  check_agree(F_recurrence(Alphabet::N(), {}, 3, 5, CorrectionWord::AsPrinted),
              labeled_oracle(Alphabet::N(), {}, 3, 5));
}

TEST_CASE("recurrence agrees with the oracle in BBD") {
  for (const Composition alpha : {Composition{}, Composition{1}, Composition{2}, Composition{1, 1}})
    for (int k = alpha.width(); k <= 3; ++k) {
      INFO("alpha=", alpha.str(), " k=", k);
      check_agree(F_recurrence(Alphabet::BBD(), alpha, k, 7), labeled_oracle(Alphabet::BBD(), alpha, k, 7));
    }
}

TEST_CASE("collapsing letters gives the commutative series") {
  for (const auto& a : {Alphabet::N(), Alphabet::BBD()}) {
    NCSeries f = F_recurrence(a, {1}, 2, 6);
    CHECK(f.collapse_letters() == taylor(f_width(a, {1}, 2), 7));
  }
}

TEST_CASE("automaton for (2)") {
  WeightedDigraph g1 = build_automaton_N({2}, 1);
  CHECK(g1.num_states == 2);
  CHECK(g1.edges.size() == 2);
  NCSeries p = path_series(g1, 3);
  CHECK(p.terms.size() == 4);
  CHECK(p.terms.at({}) == mono({2}));
  CHECK(p.terms.at({Letter::U(1)}) == mono({3}));

  CHECK(build_automaton_N({2}, 2).num_states == 4);
  CHECK(build_automaton_N({2}, 3).num_states == 8);
  check_agree(path_series(build_automaton_N({2}, 2), 6), labeled_oracle(Alphabet::N(), {2}, 2, 6));
}

TEST_CASE("automaton size doubles per width") {
  for (const Composition alpha : {Composition{2}, Composition{1}, Composition{2, 3}}) {
    const int base = alpha.all_ones() ? 4 : 2;
    for (int k = alpha.width(); k <= 5; ++k)
      CHECK(build_automaton_N(alpha, k).num_states == base << (k - alpha.width()));
  }
}

TEST_CASE("automaton, oracle and regex agree in N") {
  for (const Composition alpha : {Composition{}, Composition{1}, Composition{2}, Composition{1, 1}, Composition{2, 3}})
    for (int k = alpha.width(); k <= 4; ++k) {
      INFO("alpha=", alpha.str(), " k=", k);
      NCSeries oracle = labeled_oracle(Alphabet::N(), alpha, k, 7);
      check_agree(path_series(build_automaton_N(alpha, k), 7), oracle);
      CHECK(regex_language(width_regex(alpha.width(), k, alpha.all_ones()), 7) == oracle.support());
    }
}

TEST_CASE("regex shapes") {
  CHECK(width_regex(1, 2, false).str() == "(U1+U2)*(L+R)U1*");
  CHECK(width_regex(2, 3, false).str() == "(U1+U2+U3)*(L+R)(U1+U2)*");
  CHECK(width_regex(2, 4, false).str() == "(U1+U2+U3+U4)*(L+R)(U1+U2+U3)*(L+R)(U1+U2)*");
  CHECK(of_length(regex_language(width_regex(1, 2, false), 2), 2).size() == 6);
  auto l11 = regex_language(width_regex(1, 1, false), 4);
  CHECK(l11.size() == 5);
  for (const auto& w : l11)
    for (const auto& t : w) CHECK(t == Letter::U(1));
}

TEST_CASE("requiring a U before every R loses valid words") {
  auto guarded = guarded_r_language(1, 2, 4);
  auto truth = labeled_oracle(Alphabet::N(), {1}, 2, 4).support();
  CHECK(truth.count(parse_word("R U1")) == 1);
  CHECK(guarded.count(parse_word("R U1")) == 0);
  CHECK(guarded != truth);
}

TEST_CASE("dot export") {
  std::string dot = export_dot(build_automaton_N({2}, 1));
  CHECK(dot.find("n0 [shape=point]") != std::string::npos);
  CHECK(dot.find("shape=doublecircle") != std::string::npos);
  CHECK(dot.find("n0 -> n1 [label=\"e/x1^2\"]") != std::string::npos);
  CHECK(dot.find("n1 -> n1 [label=\"U1/x1\"]") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));
}

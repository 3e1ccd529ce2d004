#include "doctest.h"

#include <set>

#include "compchains/operators.hpp"

using namespace compchains;

static Composition act(const char* letter, Composition p) {
  auto r = apply_letter(Letter::parse(letter), p);
  REQUIRE(r.has_value());
  return *r;
}

TEST_CASE("letter syntax") {
  CHECK(Letter::parse("V2^1") == Letter::V(2, 1));
  CHECK(Letter::parse("U3") == Letter::U(3));
  CHECK(Letter::parse("V3^3").str() == "V3^3");
  CHECK(word_str(parse_word("U3 U3 L")) == "U3 U3 L");
  CHECK(parse_word("e").empty());
  CHECK_THROWS(Letter::parse("U0"));
  CHECK_THROWS(Letter::parse("V1^1"));
  CHECK_THROWS(Letter::parse("X"));
}

TEST_CASE("apply_letter") {
  const Composition p{3, 4, 1, 2};
  CHECK(act("U2", p) == Composition{3, 5, 1, 2});
  CHECK(act("V3^3", p) == Composition{3, 2, 3, 1, 2});
  CHECK(act("V2^2", p) == Composition{2, 2, 4, 1, 2});
  CHECK_FALSE(apply_letter(Letter::U(5), p).has_value());
  CHECK(act("L", {}) == Composition{1});
  CHECK(act("R", {}) == Composition{1});
  // V_i^r needs p_{i-1} - r + 1 >= 2.
  CHECK_FALSE(apply_letter(Letter::V(4, 1), p).has_value());
  CHECK(act("V5^1", p) == Composition{3, 4, 1, 2, 1});
  CHECK_FALSE(apply_letter(Letter::V(2, 3), p).has_value());
  CHECK_FALSE(apply_letter(Letter::V(6, 1), p).has_value());
}

TEST_CASE("priority") {
  CHECK(priority_compare(Letter::L(), Letter::R()) == Priority::Higher);
  CHECK(priority_compare(Letter::V(2, 1), Letter::V(3, 2)) == Priority::Higher);
  CHECK(priority_compare(Letter::V(3, 2), Letter::V(2, 1)) == Priority::Lower);
  CHECK(priority_compare(Letter::U(1), Letter::U(2)) == Priority::Incomparable);
  CHECK(priority_compare(Letter::V(3, 1), Letter::V(3, 2)) == Priority::Incomparable);
  CHECK(priority_compare(Letter::U(4), Letter::V(2, 1)) == Priority::Higher);
  CHECK(priority_compare(Letter::V(9, 1), Letter::R()) == Priority::Higher);
}

TEST_CASE("admissibility") {
  CHECK_FALSE(is_admissible(Letter::R(), {1, 1}, Alphabet::N()));
  CHECK(is_admissible(Letter::L(), {1, 1}, Alphabet::N()));
  CHECK(is_admissible(Letter::R(), {2, 1}, Alphabet::N()));
  CHECK_FALSE(is_admissible(Letter::V(4, 1), {3, 4, 1, 2}, Alphabet::BBD()));
  CHECK(is_admissible(Letter::V(2, 1), {3, 4, 1, 2}, Alphabet::BBD()));
  CHECK_FALSE(is_admissible(Letter::R(), {3, 4, 1, 2}, Alphabet::BBD()));
  CHECK_FALSE(is_admissible(Letter::V(2, 2), {3, 4, 1, 2}, Alphabet::BBD()));
  CHECK(is_admissible(Letter::V(2, 2), {3, 4, 1, 2}, Alphabet::S(3)));
}

TEST_CASE("apply_word") {
  // rho: (1,2) -> (2,2) -> (1,2,2) -> (1,2,3) -> (1,2,4), labels U1, L, U3, U3.
  auto rho = apply_word(parse_word("U3 U3 L U1"), {1, 2}, Alphabet::N());
  REQUIRE(rho.ok());
  CHECK(*rho.result == Composition{1, 2, 4});

  auto suffix = apply_word(parse_word("U3 U3 R"), {1, 2}, Alphabet::N());
  REQUIRE(suffix.ok());
  CHECK(*suffix.result == Composition{1, 2, 3});

  CHECK(*apply_word({}, {3, 1}, Alphabet::N()).result == Composition{3, 1});

  // L.(1) = (1,1) is all-ones, so the following R collides with L.
  auto bad = apply_word(parse_word("R L"), {1}, Alphabet::N());
  CHECK_FALSE(bad.ok());
  REQUIRE(bad.failed_position.has_value());
  CHECK(*bad.failed_position == 0);

  auto bad2 = apply_word(parse_word("U1 U3"), {1, 2}, Alphabet::N());
  CHECK(*bad2.failed_position == 1);
}

TEST_CASE("admissible letters of (3,4,1,2) in S^inf") {
  auto covers = admissible_letters({3, 4, 1, 2}, Alphabet::SInf());
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& c : covers) got.emplace(c.letter.str(), c.result.str());
  std::set<std::pair<std::string, std::string>> expected{
      {"L", "1,3,4,1,2"},    {"U1", "4,4,1,2"},     {"U2", "3,5,1,2"},     {"U3", "3,4,2,2"},
      {"U4", "3,4,1,3"},     {"V2^1", "3,1,4,1,2"}, {"V2^2", "2,2,4,1,2"}, {"V3^1", "3,4,1,1,2"},
      {"V3^2", "3,3,2,1,2"}, {"V3^3", "3,2,3,1,2"}, {"V5^1", "3,4,1,2,1"}};
  CHECK(got == expected);
}

TEST_CASE("small cover sets") {
  auto c1 = admissible_letters({1}, Alphabet::N());
  REQUIRE(c1.size() == 2);
  CHECK(c1[0] == Cover{Letter::L(), {1, 1}});
  CHECK(c1[1] == Cover{Letter::U(1), {2}});
  auto c0 = admissible_letters({}, Alphabet::N());
  REQUIRE(c0.size() == 1);
  CHECK(c0[0] == Cover{Letter::L(), {1}});
}

TEST_CASE("weight step for every defined letter, weight <= 8") {
  std::vector<Letter> letters{Letter::L(), Letter::R()};
  for (int j = 1; j <= 9; ++j) letters.push_back(Letter::U(j));
  for (int i = 2; i <= 9; ++i)
    for (int r = 1; r <= 9; ++r) letters.push_back(Letter::V(i, r));
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : compositions_of(n))
      for (const auto& t : letters)
        if (auto q = apply_letter(t, p)) CHECK(q->weight() == n + 1);
}

TEST_CASE("distinct results and S^inf cover count n+1, weight <= 7") {
  const std::vector<Alphabet> alphabets{Alphabet::N(),    Alphabet::BBD(),  Alphabet::S(3),
                                        Alphabet::S(4),   Alphabet::SInf(), Alphabet::UOnly()};
  for (int n = 0; n <= 7; ++n)
    for (const auto& p : compositions_of(n)) {
      for (const auto& a : alphabets) {
        auto cv = admissible_letters(p, a);  // throws on same-class collisions
        std::set<Composition> results;
        for (const auto& c : cv) results.insert(c.result);
        CHECK(results.size() == cv.size());
      }
      CHECK(admissible_letters(p, Alphabet::SInf()).size() == static_cast<std::size_t>(n + 1));
    }
}

TEST_CASE("S(d) agrees with S^inf once d exceeds the height") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& p : compositions_of(n))
      for (int d = p.height() + 1; d <= p.height() + 2; ++d)
        if (d > 1) CHECK(admissible_letters(p, Alphabet::S(d)) == admissible_letters(p, Alphabet::SInf()));
}

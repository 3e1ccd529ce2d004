#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compchains/composition.hpp"

namespace compchains {

enum class LetterKind : unsigned char { L, R, U, V };

/// One operator symbol: L, R, U_j (j >= 1) or V_i^r (i >= 2, r >= 1).
/// Text form: "L", "R", "U3", "V2^1".
struct Letter {
  LetterKind kind = LetterKind::L;
  int index = 0;  // j for U, i for V
  int r = 0;      // only for V

  static Letter L() { return {LetterKind::L, 0, 0}; }
  static Letter R() { return {LetterKind::R, 0, 0}; }
  static Letter U(int j);
  static Letter V(int i, int r);
  static Letter parse(std::string_view text);

  std::string str() const;

  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Letters in print order: the leftmost letter is applied last.
using Word = std::vector<Letter>;

std::string word_str(const Word& w);
Word parse_word(std::string_view text);

/// Which operator alphabet generates the cover relation.
class Alphabet {
 public:
  enum class Kind : unsigned char { N, BBD, S, SInf, UOnly };

  static Alphabet N() { return Alphabet(Kind::N, 0); }
  static Alphabet BBD() { return Alphabet(Kind::BBD, 2); }
  static Alphabet S(int d);
  static Alphabet SInf() { return Alphabet(Kind::SInf, 0); }
  static Alphabet UOnly() { return Alphabet(Kind::UOnly, 0); }

  /// "N", "BBD", "S:<d>", "S:inf", "Sinf", "U".
  static Alphabet parse(std::string_view text);

  Kind kind() const { return kind_; }
  int d() const { return d_; }
  std::string str() const;

  bool contains(const Letter& t) const;
  bool has_v() const { return kind_ == Kind::BBD || kind_ == Kind::S || kind_ == Kind::SInf; }
  /// Largest V exponent r available when acting on p; 0 if no V letters.
  int max_v_exponent(const Composition& p) const;
  /// Letters of this alphabet that could possibly be defined on p.
  std::vector<Letter> candidate_letters(const Composition& p) const;

  friend auto operator<=>(const Alphabet&, const Alphabet&) = default;
  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  Alphabet(Kind kind, int d) : kind_(kind), d_(d) {}
  Kind kind_;
  int d_;
};

std::optional<Composition> apply_letter(const Letter& t, const Composition& p);

enum class Priority { Higher, Lower, Incomparable };

/// Class order {L, U_j} > {V_i^r} > {R}; among V letters the smaller first
/// index wins.
Priority priority_compare(const Letter& s, const Letter& t);

bool is_admissible(const Letter& t, const Composition& p, const Alphabet& a);

struct Cover {
  Letter letter;
  Composition result;
  friend bool operator==(const Cover&, const Cover&) = default;
};

/// The labeled covers of p. Results are pairwise distinct.
std::vector<Cover> admissible_letters(const Composition& p, const Alphabet& a);

struct WordOutcome {
  std::optional<Composition> result;
  /// Position in the word (print order) of the first letter that failed.
  std::optional<std::size_t> failed_position;
  bool ok() const { return result.has_value(); }
};

WordOutcome apply_word(const Word& w, const Composition& p, const Alphabet& a);

}  // namespace compchains

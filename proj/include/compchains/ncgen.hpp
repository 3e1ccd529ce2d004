#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "compchains/operators.hpp"
#include "compchains/polyfrac.hpp"

namespace compchains {

/// Shorter words first, then lexicographic by letter.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const;
};

/// Truncated non-commutative series: each word (print order) carries the
/// monomial of the endpoint it reaches.
struct NCSeries {
  int max_length = 0;
  std::map<Word, Monomial, ShortLex> terms;

  /// Throws std::logic_error if the word is already present.
  void add(const Word& w, const Monomial& m);
  std::set<Word> support() const;
  /// All letters set to 1.
  MultiPoly collapse_letters() const;
  std::vector<Word> words_with(const Monomial& m) const;

  friend bool operator==(const NCSeries&, const NCSeries&) = default;
};

/// Brute force over admissible words of length <= n from alpha; with k set,
/// only endpoints of width k are kept.
NCSeries labeled_oracle(const Alphabet& a, const Composition& alpha, std::optional<int> k, int n);

/// How the all-ones correction in N is formed. Resolved removes R L^{k-1-r}
/// (weight x_1...x_k); AsPrinted removes R L^{k-1} instead.
enum class CorrectionWord { Resolved, AsPrinted };

/// The width recurrences on labeled series, for N and BBD.
NCSeries F_recurrence(const Alphabet& a, const Composition& alpha, int k, int n,
                      CorrectionWord correction = CorrectionWord::Resolved);

struct SeriesMismatch {
  Word word;
  std::optional<Monomial> left, right;  // nullopt when the word is absent
  std::string str() const;
};
/// First word (short-lex) on which the two series differ.
std::optional<SeriesMismatch> compare_series(const NCSeries& left, const NCSeries& right);

struct DigraphEdge {
  int from = 0, to = 0;
  std::optional<Letter> letter;  // nullopt: weight-only edge
  Monomial weight;
  friend bool operator==(const DigraphEdge&, const DigraphEdge&) = default;
};

struct WeightedDigraph {
  int num_states = 0;
  int start = 0;
  int accept = 0;
  std::vector<DigraphEdge> edges;
  friend bool operator==(const WeightedDigraph&, const WeightedDigraph&) = default;
};

/// Digraph whose start-to-accept walks are the labeled chains of width k
/// from alpha in N.
WeightedDigraph build_automaton_N(const Composition& alpha, int k);
/// Walks with at most n letters. The first edge walked is the rightmost
/// letter of the word.
NCSeries path_series(const WeightedDigraph& g, int n);
std::string export_dot(const WeightedDigraph& g);

/// U*_{<=k} (L+R) U*_{<=k-1} ... (L+R) U*_{<=r}; with all_ones, words ending
/// in R L^m are removed.
struct Regex {
  std::vector<int> blocks;  // U-prefix sizes, left to right
  bool all_ones = false;
  std::string str() const;
};
Regex width_regex(int r, int k, bool all_ones);
std::set<Word> regex_language(const Regex& re, int n);
/// U*_{<=k} (L + U_{<=k} R) applied level by level: every R must be
/// immediately preceded (to its left) by a U letter.
std::set<Word> guarded_r_language(int r, int k, int n);

}  // namespace compchains

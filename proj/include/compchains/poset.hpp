#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "compchains/composition.hpp"
#include "compchains/kernels.hpp"
#include "compchains/operators.hpp"

namespace compchains {

std::vector<Cover> covers(const Alphabet& a, const Composition& p);

/// Lexicographically smallest permutation of 1..n whose descent set is d.
std::vector<int> smallest_permutation_with_descents(const DescentSet& d);

/// Covers in S^inf computed without operators: insert 0 into a permutation
/// with descent set S_P at all n+1 places and read the descent sets back.
std::set<Composition> covers_via_descent_oracle(const Composition& p);
std::set<Composition> covers_via_descent_oracle(const Composition& p, const std::vector<int>& perm);

bool leq(const Alphabet& a, const Composition& p, const Composition& q);

/// Multiplicities of all saturated chains of length n from p, keyed by
/// endpoint. The parallel kernel is used unless serial is set.
Layer chain_counts(const Alphabet& a, const Composition& p, int n, int max_width = -1,
                   bool serial = false);

mpz_class count_chains(const Alphabet& a, const Composition& p, const Composition& q);

struct Chain {
  std::vector<Composition> steps;
  std::vector<Letter> labels;  // labels[i] takes steps[i] to steps[i+1]

  int length() const { return static_cast<int>(labels.size()); }
  /// Labels in print order (last step leftmost).
  Word word() const { return Word(labels.rbegin(), labels.rend()); }
};

void for_each_chain(const Alphabet& a, const Composition& p, int n, std::optional<int> width,
                    const std::function<void(const Chain&)>& visit);
std::vector<Chain> enumerate_chains(const Alphabet& a, const Composition& p, int n,
                                    std::optional<int> width = std::nullopt);

/// Filled diagram of a chain's endpoint. columns[i] lists the entries of
/// column i from row 1 upwards; 0 marks cells of the starting composition.
struct Tableau {
  std::vector<std::vector<int>> columns;

  Composition shape() const;
  Composition initial() const;
  std::string str() const;
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Throws std::invalid_argument for chains using V_i^r with r >= 2.
Tableau chain_to_tableau(const Chain& c);
Chain tableau_to_chain(const Tableau& t, const Alphabet& a);

/// Skew tableau of shape outer/inner in the same column layout as Tableau;
/// column i has outer[i] cells, the first inner[i] of which hold 0.
struct SkewTableau {
  Partition outer;
  Partition inner;
  std::vector<std::vector<int>> columns;

  std::string str() const;
  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
};

SkewTableau shadow(const Chain& c);
mpz_class shadow_multiplicity(const Alphabet& a, const SkewTableau& s);
std::vector<Chain> chains_with_shadow(const Alphabet& a, const SkewTableau& s);

struct MultirankReport {
  bool ok = true;
  std::vector<std::string> violations;
  /// Image edges lambda -> mu that are not Young covers.
  std::set<std::pair<Partition, Partition>> extra_edges;
};

MultirankReport verify_multiranking(const Alphabet& a, int max_weight);

std::string hasse_dot(const Alphabet& a, int max_weight);

}  // namespace compchains

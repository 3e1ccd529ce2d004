#include "compchains/poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace compchains {

std::vector<Cover> covers(const Alphabet& a, const Composition& p) {
  return admissible_letters(p, a);
}

std::vector<int> smallest_permutation_with_descents(const DescentSet& d) {
  // Runs of ascents stay increasing; each maximal block ending in a descent
  // is reversed. Pushing onto a stack and flushing at every ascent does this.
  std::vector<int> perm;
  std::vector<int> stack;
  std::set<int> desc(d.elements.begin(), d.elements.end());
  for (int i = 1; i <= d.n; ++i) {
    stack.push_back(i);
    if (!desc.count(i) || i == d.n) {
      while (!stack.empty()) {
        perm.push_back(stack.back());
        stack.pop_back();
      }
    }
  }
  return perm;
}

std::set<Composition> covers_via_descent_oracle(const Composition& p, const std::vector<int>& perm) {
  const int n = p.weight();
  std::set<Composition> out;
  for (int pos = 0; pos <= n; ++pos) {
    std::vector<int> w;
    w.reserve(n + 1);
    for (int j = 0; j < pos; ++j) w.push_back(perm[j]);
    w.push_back(0);
    for (int j = pos; j < n; ++j) w.push_back(perm[j]);
    DescentSet d{n + 1, {}};
    for (int j = 0; j < n; ++j)
      if (w[j] > w[j + 1]) d.elements.push_back(j + 1);
    out.insert(composition_from_descents(d));
  }
  return out;
}

std::set<Composition> covers_via_descent_oracle(const Composition& p) {
  return covers_via_descent_oracle(p, smallest_permutation_with_descents(descent_set(p)));
}

bool leq(const Alphabet& a, const Composition& p, const Composition& q) {
  if (p == q) return true;
  std::set<Composition> layer{p};
  for (int w = p.weight(); w < q.weight(); ++w) {
    std::set<Composition> next;
    for (const auto& c : layer)
      for (auto& cv : admissible_letters(c, a))
        if (cv.result.width() <= q.width()) next.insert(std::move(cv.result));
    layer = std::move(next);
    if (layer.empty()) return false;
  }
  return layer.count(q) > 0;
}

Layer chain_counts(const Alphabet& a, const Composition& p, int n, int max_width, bool serial) {
  Layer layer{{p, 1}};
  for (int s = 0; s < n; ++s)
    layer = serial ? layer_step_serial(layer, a, max_width) : layer_step(layer, a, max_width);
  return layer;
}

mpz_class count_chains(const Alphabet& a, const Composition& p, const Composition& q) {
  const int n = q.weight() - p.weight();
  if (n < 0) return 0;
  auto layer = chain_counts(a, p, n, q.width());
  auto it = layer.find(q);
  return it == layer.end() ? mpz_class(0) : it->second;
}

void for_each_chain(const Alphabet& a, const Composition& p, int n, std::optional<int> width,
                    const std::function<void(const Chain&)>& visit) {
  Chain c;
  c.steps.push_back(p);
  auto rec = [&](auto&& self) -> void {
    const Composition& cur = c.steps.back();
    if (width && cur.width() > *width) return;
    if (c.length() == n) {
      if (!width || cur.width() == *width) visit(c);
      return;
    }
    for (auto& cv : admissible_letters(cur, a)) {
      c.labels.push_back(cv.letter);
      c.steps.push_back(std::move(cv.result));
      self(self);
      c.steps.pop_back();
      c.labels.pop_back();
    }
  };
  rec(rec);
}

std::vector<Chain> enumerate_chains(const Alphabet& a, const Composition& p, int n,
                                    std::optional<int> width) {
  std::vector<Chain> out;
  for_each_chain(a, p, n, width, [&](const Chain& c) { out.push_back(c); });
  return out;
}

Composition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& col : columns) parts.push_back(static_cast<int>(col.size()));
  return Composition(std::move(parts));
}

Composition Tableau::initial() const {
  std::vector<int> parts;
  for (const auto& col : columns) {
    int zeros = static_cast<int>(std::count(col.begin(), col.end(), 0));
    if (zeros) parts.push_back(zeros);
  }
  return Composition(std::move(parts));
}

namespace {

std::string columns_str(const std::vector<std::vector<int>>& columns) {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ' ';
    out += '[';
    for (std::size_t j = 0; j < columns[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(columns[i][j]);
    }
    out += ']';
  }
  return out;
}

}  // namespace

std::string Tableau::str() const { return columns_str(columns); }

std::string SkewTableau::str() const {
  return "(" + outer.str() + ")/(" + inner.str() + ") " + columns_str(columns);
}

Tableau chain_to_tableau(const Chain& c) {
  Tableau t;
  const Composition& start = c.steps.front();
  for (int part : start.parts()) t.columns.emplace_back(part, 0);
  for (int s = 0; s < c.length(); ++s) {
    const Letter& x = c.labels[s];
    const int entry = s + 1;
    switch (x.kind) {
      case LetterKind::L:
        t.columns.insert(t.columns.begin(), std::vector<int>{entry});
        break;
      case LetterKind::R:
        t.columns.push_back({entry});
        break;
      case LetterKind::U:
        t.columns.at(x.index - 1).push_back(entry);
        break;
      case LetterKind::V:
        if (x.r != 1)
          throw std::invalid_argument("tableaux are undefined for chains using " + x.str());
        t.columns.insert(t.columns.begin() + (x.index - 1), std::vector<int>{entry});
        break;
    }
  }
  return t;
}

Chain tableau_to_chain(const Tableau& t, const Alphabet& a) {
  int n = 0;
  std::map<int, std::pair<int, int>> where;  // entry -> (column, row), 0-based
  for (int i = 0; i < static_cast<int>(t.columns.size()); ++i) {
    const auto& col = t.columns[i];
    for (int j = 0; j < static_cast<int>(col.size()); ++j) {
      if (col[j] == 0) {
        if (j > 0 && col[j - 1] != 0) throw std::invalid_argument("zeros must sit at the bottom");
        continue;
      }
      if (j > 0 && col[j - 1] >= col[j]) throw std::invalid_argument("columns must increase");
      if (!where.emplace(col[j], std::pair{i, j}).second)
        throw std::invalid_argument("repeated tableau entry");
      ++n;
    }
  }
  for (int s = 1; s <= n; ++s)
    if (!where.count(s)) throw std::invalid_argument("tableau entries must be 1..n");

  auto present = [&](int column, int step) {
    const auto& col = t.columns[column];
    return !col.empty() && col.front() < step;
  };

  Chain c;
  c.steps.push_back(t.initial());
  for (int s = 1; s <= n; ++s) {
    auto [column, row] = where[s];
    int pos = 0, k = 0;
    for (int i = 0; i < static_cast<int>(t.columns.size()); ++i) {
      if (!present(i, s)) continue;
      ++k;
      if (i < column) ++pos;
    }
    Letter x;
    if (row > 0) {
      x = Letter::U(pos + 1);
    } else if (pos == 0) {
      x = Letter::L();
    } else if (pos == k && a.kind() == Alphabet::Kind::N) {
      x = Letter::R();
    } else {
      x = Letter::V(pos + 1, 1);
    }
    const Composition& cur = c.steps.back();
    if (!is_admissible(x, cur, a))
      throw std::invalid_argument("tableau step " + std::to_string(s) + " (" + x.str() +
                                  ") is not admissible on " + cur.str());
    c.labels.push_back(x);
    c.steps.push_back(*apply_letter(x, cur));
  }
  return c;
}

SkewTableau shadow(const Chain& c) {
  SkewTableau sk;
  sk.inner = mw_star(c.steps.front());
  sk.outer = mw_star(c.steps.back());
  for (int part : sk.inner.parts()) sk.columns.emplace_back(part, 0);
  for (int s = 1; s <= c.length(); ++s) {
    Partition before = mw_star(c.steps[s - 1]);
    Partition after = mw_star(c.steps[s]);
    if (!young_covers(after, before))
      throw std::logic_error("shadow step " + std::to_string(s) + " is not a Young cover");
    int i = 0;
    while (i < before.length() && before[i] == after[i]) ++i;
    if (i == static_cast<int>(sk.columns.size())) sk.columns.emplace_back();
    sk.columns[i].push_back(s);
  }
  return sk;
}

std::vector<Chain> chains_with_shadow(const Alphabet& a, const SkewTableau& s) {
  std::vector<int> parts = s.inner.vec();
  std::sort(parts.begin(), parts.end());
  const int n = s.outer.weight() - s.inner.weight();
  std::vector<Chain> out;
  do {
    for_each_chain(a, Composition(parts), n, std::nullopt, [&](const Chain& c) {
      if (mw_star(c.steps.back()) == s.outer && shadow(c) == s) out.push_back(c);
    });
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

mpz_class shadow_multiplicity(const Alphabet& a, const SkewTableau& s) {
  return static_cast<unsigned long>(chains_with_shadow(a, s).size());
}

MultirankReport verify_multiranking(const Alphabet& a, int max_weight) {
  MultirankReport rep;
  std::set<std::pair<Partition, Partition>> image;
  std::set<Partition> hit;
  for (int w = 0; w <= max_weight; ++w) {
    for (const auto& p : compositions_of(w)) {
      Partition lam = mw_star(p);
      hit.insert(lam);
      if (w == max_weight) continue;
      for (const auto& cv : admissible_letters(p, a)) {
        Partition mu = mw_star(cv.result);
        if (mu.weight() != lam.weight() + 1)
          rep.violations.push_back("rank not preserved on " + p.str() + " -> " + cv.result.str());
        image.emplace(lam, mu);
        if (!young_covers(mu, lam)) rep.extra_edges.emplace(lam, mu);
      }
    }
  }
  const bool almost = a.kind() == Alphabet::Kind::S || a.kind() == Alphabet::Kind::SInf;
  if (!almost)
    for (const auto& [lam, mu] : rep.extra_edges)
      rep.violations.push_back("cover maps to non-Young edge (" + lam.str() + ") -> (" + mu.str() + ")");
  for (int w = 0; w <= max_weight; ++w) {
    for (const auto& lam : partitions_of(w)) {
      if (!hit.count(lam)) rep.violations.push_back("partition (" + lam.str() + ") not attained");
      if (w == max_weight) continue;
      for (const auto& mu : partitions_of(w + 1))
        if (young_covers(mu, lam) && !image.count({lam, mu}))
          rep.violations.push_back("Young cover (" + lam.str() + ") -> (" + mu.str() + ") not attained");
    }
  }
  rep.ok = rep.violations.empty();
  return rep;
}

std::string hasse_dot(const Alphabet& a, int max_weight) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (int w = 0; w <= max_weight; ++w)
    for (const auto& p : compositions_of(w)) out << "  \"" << p.str() << "\";\n";
  for (int w = 0; w < max_weight; ++w)
    for (const auto& p : compositions_of(w))
      for (const auto& cv : admissible_letters(p, a))
        out << "  \"" << p.str() << "\" -> \"" << cv.result.str() << "\" [label=\""
            << cv.letter.str() << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace compchains

#include "compchains/ncgen.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace compchains {

namespace {

Monomial composition_monomial(const Composition& p) { return Monomial::from_exponents(p.vec()); }

// Lambda_j on a single monomial: x_m -> x_{m+1} for m >= j.
Monomial shift(const Monomial& m, int j) {
  if (m.deg(kMaxVars) != 0) throw std::overflow_error("shift: too many variables");
  Monomial out;
  for (int i = 1; i < kMaxVars; ++i) out.set(i < j ? i : i + 1, m.deg(i));
  return out;
}

Monomial vars_upto(int k) {
  Monomial m;
  for (int i = 1; i <= k; ++i) m.set(i, 1);
  return m;
}

Word prepend(const Letter& t, const Word& w) {
  Word out;
  out.reserve(w.size() + 1);
  out.push_back(t);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace

bool ShortLex::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void NCSeries::add(const Word& w, const Monomial& m) {
  if (!terms.emplace(w, m).second)
    throw std::logic_error("word " + word_str(w) + " occurs twice in a labeled series");
}

std::set<Word> NCSeries::support() const {
  std::set<Word> out;
  for (const auto& [w, m] : terms) out.insert(w);
  return out;
}

MultiPoly NCSeries::collapse_letters() const {
  std::vector<MultiPoly::Term> ts;
  for (const auto& [w, m] : terms) ts.emplace_back(m, 1);
  return MultiPoly::from_terms(std::move(ts));
}

std::vector<Word> NCSeries::words_with(const Monomial& m) const {
  std::vector<Word> out;
  for (const auto& [w, mono] : terms)
    if (mono == m) out.push_back(w);
  return out;
}

NCSeries labeled_oracle(const Alphabet& a, const Composition& alpha, std::optional<int> k, int n) {
  NCSeries out;
  out.max_length = n;
  std::vector<Letter> applied;  // in application order
  std::function<void(const Composition&)> rec = [&](const Composition& cur) {
    if (k && cur.width() > *k) return;
    if (!k || cur.width() == *k) out.add(Word(applied.rbegin(), applied.rend()), composition_monomial(cur));
    if (static_cast<int>(applied.size()) == n) return;
    for (const auto& c : admissible_letters(cur, a)) {
      applied.push_back(c.letter);
      rec(c.result);
      applied.pop_back();
    }
  };
  rec(alpha);
  return out;
}

NCSeries F_recurrence(const Alphabet& a, const Composition& alpha, int k, int n, CorrectionWord correction) {
  const bool is_n = a.kind() == Alphabet::Kind::N;
  if (!is_n && a.kind() != Alphabet::Kind::BBD)
    throw std::invalid_argument("F_recurrence supports N and BBD only");
  const int r = alpha.width();
  NCSeries prev;
  prev.max_length = n;
  if (k < r) return prev;

  for (int j = r; j <= k; ++j) {
    // Terms whose last letter is not a U.
    NCSeries rest;
    rest.max_length = n;
    if (j == r) {
      rest.add({}, composition_monomial(alpha));
    } else {
      for (const auto& [w, m] : prev.terms) {
        if (static_cast<int>(w.size()) >= n) continue;
        rest.add(prepend(Letter::L(), w), Monomial::var(1) * shift(m, 1));
        if (is_n) {
          rest.add(prepend(Letter::R(), w), Monomial::var(j) * m);
        } else {
          for (int i = 2; i <= j; ++i)
            if (m.deg(i - 1) >= 2) rest.add(prepend(Letter::V(i, 1), w), Monomial::var(i) * shift(m, i));
        }
      }
      if (is_n && alpha.all_ones()) {
        // R is not admissible on the all-ones composition of width j-1,
        // which only the word L^{j-1-r} reaches.
        const int ls = correction == CorrectionWord::Resolved ? j - 1 - r : j - 1;
        Word bad{Letter::R()};
        bad.insert(bad.end(), ls, Letter::L());
        auto it = rest.terms.find(bad);
        if (correction == CorrectionWord::Resolved && ls + 1 <= n) {
          if (it == rest.terms.end() || it->second != vars_upto(j))
            throw std::logic_error("all-ones correction word " + word_str(bad) + " not found");
        }
        if (it != rest.terms.end()) rest.terms.erase(it);
      }
    }
    // F_j = (x_1 U_1 + ... + x_j U_j) F_j + rest, solved by word length.
    std::vector<std::vector<std::pair<Word, Monomial>>> by_len(n + 1);
    for (const auto& [w, m] : rest.terms) by_len[w.size()].emplace_back(w, m);
    for (int len = 0; len < n; ++len)
      for (const auto& [w, m] : by_len[len])
        for (int i = 1; i <= j; ++i) by_len[len + 1].emplace_back(prepend(Letter::U(i), w), Monomial::var(i) * m);
    NCSeries cur;
    cur.max_length = n;
    for (const auto& bucket : by_len)
      for (const auto& [w, m] : bucket) cur.add(w, m);
    prev = std::move(cur);
  }
  return prev;
}

std::string SeriesMismatch::str() const {
  auto side = [](const std::optional<Monomial>& m) { return m ? m->str() : std::string("absent"); };
  return "word " + word_str(word) + ": " + side(left) + " vs " + side(right);
}

std::optional<SeriesMismatch> compare_series(const NCSeries& left, const NCSeries& right) {
  auto li = left.terms.begin(), ri = right.terms.begin();
  const ShortLex less;
  while (li != left.terms.end() || ri != right.terms.end()) {
    if (ri == right.terms.end() || (li != left.terms.end() && less(li->first, ri->first)))
      return SeriesMismatch{li->first, li->second, std::nullopt};
    if (li == left.terms.end() || less(ri->first, li->first))
      return SeriesMismatch{ri->first, std::nullopt, ri->second};
    if (li->second != ri->second) return SeriesMismatch{li->first, li->second, ri->second};
    ++li;
    ++ri;
  }
  return std::nullopt;
}

namespace {

struct Built {
  WeightedDigraph g;
  int pure = -1;    // all-ones only: reached by L-steps alone
  int impure = -1;
};

int add_state(WeightedDigraph& g) { return g.num_states++; }

void edge(WeightedDigraph& g, int from, int to, std::optional<Letter> t, Monomial w) {
  g.edges.push_back({from, to, t, w});
}

// Copies every state but the start (shared) and `skip`; returns the id map.
std::vector<int> copy_into(WeightedDigraph& dst, const WeightedDigraph& src, int skip, bool lambda) {
  std::vector<int> id(src.num_states, -1);
  id[src.start] = dst.start;
  for (int s = 0; s < src.num_states; ++s)
    if (s != src.start && s != skip) id[s] = add_state(dst);
  for (const auto& e : src.edges)
    if (id[e.from] >= 0 && id[e.to] >= 0)
      edge(dst, id[e.from], id[e.to], e.letter, lambda ? shift(e.weight, 1) : e.weight);
  return id;
}

Built build(const Composition& alpha, int k) {
  const int r = alpha.width();
  const bool ones = alpha.all_ones();
  Built b;
  WeightedDigraph& g = b.g;
  g.start = add_state(g);
  if (k == r) {
    if (!ones) {
      g.accept = add_state(g);
      edge(g, g.start, g.accept, std::nullopt, composition_monomial(alpha));
      for (int i = 1; i <= r; ++i) edge(g, g.accept, g.accept, Letter::U(i), Monomial::var(i));
      return b;
    }
    b.pure = add_state(g);
    b.impure = add_state(g);
    g.accept = add_state(g);
    edge(g, g.start, b.pure, std::nullopt, composition_monomial(alpha));
  } else {
    const Built prev = build(alpha, k - 1);
    const int skip = ones ? prev.g.accept : -1;
    const auto plain = copy_into(g, prev.g, skip, false);
    const auto shifted = copy_into(g, prev.g, skip, true);
    if (!ones) {
      g.accept = add_state(g);
      edge(g, plain[prev.g.accept], g.accept, Letter::R(), Monomial::var(k));
      edge(g, shifted[prev.g.accept], g.accept, Letter::L(), Monomial::var(1));
      for (int i = 1; i <= k; ++i) edge(g, g.accept, g.accept, Letter::U(i), Monomial::var(i));
      return b;
    }
    b.pure = add_state(g);
    b.impure = add_state(g);
    g.accept = add_state(g);
    edge(g, shifted[prev.pure], b.pure, Letter::L(), Monomial::var(1));
    edge(g, shifted[prev.impure], b.impure, Letter::L(), Monomial::var(1));
    edge(g, plain[prev.impure], b.impure, Letter::R(), Monomial::var(k));
  }
  for (int i = 1; i <= k; ++i) {
    edge(g, b.pure, b.impure, Letter::U(i), Monomial::var(i));
    edge(g, b.impure, b.impure, Letter::U(i), Monomial::var(i));
  }
  edge(g, b.pure, g.accept, std::nullopt, Monomial{});
  edge(g, b.impure, g.accept, std::nullopt, Monomial{});
  return b;
}

}  // namespace

WeightedDigraph build_automaton_N(const Composition& alpha, int k) {
  if (k < alpha.width()) throw std::invalid_argument("build_automaton_N needs k >= width(alpha)");
  if (k > kMaxVars) throw std::invalid_argument("build_automaton_N: too many variables");
  return build(alpha, k).g;
}

NCSeries path_series(const WeightedDigraph& g, int n) {
  std::vector<std::vector<const DigraphEdge*>> out_edges(g.num_states);
  for (const auto& e : g.edges) out_edges[e.from].push_back(&e);
  NCSeries series;
  series.max_length = n;
  std::vector<Letter> walked;
  std::function<void(int, const Monomial&)> rec = [&](int s, const Monomial& w) {
    if (s == g.accept) series.add(Word(walked.rbegin(), walked.rend()), w);
    for (const DigraphEdge* e : out_edges[s]) {
      if (e->letter && static_cast<int>(walked.size()) == n) continue;
      if (e->letter) walked.push_back(*e->letter);
      rec(e->to, w * e->weight);
      if (e->letter) walked.pop_back();
    }
  };
  rec(g.start, Monomial{});
  return series;
}

std::string export_dot(const WeightedDigraph& g) {
  std::ostringstream os;
  os << "digraph automaton {\n  rankdir=BT;\n";
  for (int s = 0; s < g.num_states; ++s) {
    os << "  n" << s << " [";
    if (s == g.start)
      os << "shape=point";
    else if (s == g.accept)
      os << "shape=doublecircle, label=\"\"";
    else
      os << "shape=circle, label=\"\"";
    os << "];\n";
  }
  for (const auto& e : g.edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << (e.letter ? e.letter->str() : "e") << "/"
       << e.weight.str() << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string Regex::str() const {
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += "(L+R)";
    const int j = blocks[b];
    if (j == 1) out += "U1*";
    if (j > 1) {
      out += "(";
      for (int i = 1; i <= j; ++i) out += (i > 1 ? "+U" : "U") + std::to_string(i);
      out += ")*";
    }
  }
  if (out.empty()) out = "e";
  if (all_ones) out += " minus words ending in R L^m";
  return out;
}

Regex width_regex(int r, int k, bool all_ones) {
  if (r < 0 || k < r) throw std::invalid_argument("width_regex needs 0 <= r <= k");
  Regex re;
  for (int j = k; j >= r; --j) re.blocks.push_back(j);
  re.all_ones = all_ones;
  return re;
}

namespace {

bool ends_in_r_then_ls(const Word& w) {
  auto it = std::find_if(w.rbegin(), w.rend(), [](const Letter& t) { return t.kind != LetterKind::L; });
  return it != w.rend() && it->kind == LetterKind::R;
}

void expand(const std::vector<int>& blocks, std::size_t b, int budget, Word& cur, std::set<Word>& out) {
  // Fill block b with any U-word, then either stop (last block) or place a separator.
  std::function<void(int)> fill = [&](int left) {
    if (b + 1 == blocks.size()) {
      out.insert(cur);
    } else if (left > 0) {
      for (const Letter& sep : {Letter::L(), Letter::R()}) {
        cur.push_back(sep);
        expand(blocks, b + 1, left - 1, cur, out);
        cur.pop_back();
      }
    }
    if (left == 0) return;
    for (int i = 1; i <= blocks[b]; ++i) {
      cur.push_back(Letter::U(i));
      fill(left - 1);
      cur.pop_back();
    }
  };
  fill(budget);
}

}  // namespace

std::set<Word> regex_language(const Regex& re, int n) {
  std::set<Word> out;
  Word cur;
  expand(re.blocks, 0, n, cur, out);
  if (re.all_ones) std::erase_if(out, ends_in_r_then_ls);
  return out;
}

std::set<Word> guarded_r_language(int r, int k, int n) {
  std::set<Word> out = regex_language(width_regex(r, k, false), n);
  std::erase_if(out, [](const Word& w) {
    for (std::size_t p = 0; p < w.size(); ++p)
      if (w[p].kind == LetterKind::R && (p == 0 || w[p - 1].kind != LetterKind::U)) return true;
    return false;
  });
  return out;
}

}  // namespace compchains

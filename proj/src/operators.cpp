#include "compchains/operators.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace compchains {

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

int class_rank(const Letter& t) {
  switch (t.kind) {
    case LetterKind::L:
    case LetterKind::U:
      return 2;
    case LetterKind::V:
      return 1;
    case LetterKind::R:
      return 0;
  }
  return 0;
}

}  // namespace

Letter Letter::U(int j) {
  if (j < 1) throw std::invalid_argument("U index must be >= 1");
  return {LetterKind::U, j, 0};
}

Letter Letter::V(int i, int r) {
  if (i < 2 || r < 1) throw std::invalid_argument("V_i^r needs i >= 2 and r >= 1");
  return {LetterKind::V, i, r};
}

Letter Letter::parse(std::string_view text) {
  if (text == "L") return L();
  if (text == "R") return R();
  if (text.size() > 1 && text[0] == 'U') return U(parse_int(text.substr(1), "U index"));
  if (text.size() > 1 && text[0] == 'V') {
    auto caret = text.find('^');
    if (caret == std::string_view::npos) return V(parse_int(text.substr(1), "V index"), 1);
    return V(parse_int(text.substr(1, caret - 1), "V index"),
             parse_int(text.substr(caret + 1), "V exponent"));
  }
  throw std::invalid_argument("bad letter: '" + std::string(text) + "'");
}

std::string Letter::str() const {
  switch (kind) {
    case LetterKind::L:
      return "L";
    case LetterKind::R:
      return "R";
    case LetterKind::U:
      return "U" + std::to_string(index);
    case LetterKind::V:
      return "V" + std::to_string(index) + "^" + std::to_string(r);
  }
  return "?";
}

std::string word_str(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i].str();
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  while (!text.empty()) {
    auto sp = text.find(' ');
    auto tok = text.substr(0, sp);
    if (!tok.empty() && tok != "e") w.push_back(Letter::parse(tok));
    if (sp == std::string_view::npos) break;
    text.remove_prefix(sp + 1);
  }
  return w;
}

Alphabet Alphabet::S(int d) {
  if (d <= 1) throw std::invalid_argument("S(d) needs d > 1");
  return Alphabet(d == 2 ? Kind::BBD : Kind::S, d);
}

Alphabet Alphabet::parse(std::string_view text) {
  if (text == "N") return N();
  if (text == "BBD") return BBD();
  if (text == "U" || text == "UOnly") return UOnly();
  if (text == "Sinf" || text == "S:inf" || text == "SInf") return SInf();
  if (text.starts_with("S:")) return S(parse_int(text.substr(2), "S parameter"));
  throw std::invalid_argument("unknown poset: '" + std::string(text) + "'");
}

std::string Alphabet::str() const {
  switch (kind_) {
    case Kind::N:
      return "N";
    case Kind::BBD:
      return "BBD";
    case Kind::S:
      return "S:" + std::to_string(d_);
    case Kind::SInf:
      return "S:inf";
    case Kind::UOnly:
      return "U";
  }
  return "?";
}

bool Alphabet::contains(const Letter& t) const {
  switch (t.kind) {
    case LetterKind::U:
      return true;
    case LetterKind::L:
      return kind_ != Kind::UOnly;
    case LetterKind::R:
      return kind_ == Kind::N;
    case LetterKind::V:
      if (kind_ == Kind::SInf) return true;
      return (kind_ == Kind::BBD || kind_ == Kind::S) && t.r < d_;
  }
  return false;
}

int Alphabet::max_v_exponent(const Composition& p) const {
  switch (kind_) {
    case Kind::BBD:
    case Kind::S:
      return d_ - 1;
    case Kind::SInf:
      // S(d) with d = height + 2 already contains every V_i^r defined on p.
      return p.height() + 1;
    default:
      return 0;
  }
}

std::vector<Letter> Alphabet::candidate_letters(const Composition& p) const {
  std::vector<Letter> out;
  const int k = p.width();
  if (kind_ != Kind::UOnly) out.push_back(Letter::L());
  for (int j = 1; j <= k; ++j) out.push_back(Letter::U(j));
  const int rmax = max_v_exponent(p);
  for (int i = 2; i <= k + 1; ++i) {
    const int bound = std::min(rmax, p[i - 2] - 1);
    for (int r = 1; r <= bound; ++r) out.push_back(Letter::V(i, r));
  }
  if (kind_ == Kind::N) out.push_back(Letter::R());
  return out;
}

std::optional<Composition> apply_letter(const Letter& t, const Composition& p) {
  const auto& v = p.vec();
  const int k = p.width();
  switch (t.kind) {
    case LetterKind::L: {
      std::vector<int> out{1};
      out.insert(out.end(), v.begin(), v.end());
      return Composition(std::move(out));
    }
    case LetterKind::R: {
      std::vector<int> out = v;
      out.push_back(1);
      return Composition(std::move(out));
    }
    case LetterKind::U: {
      if (t.index > k) return std::nullopt;
      std::vector<int> out = v;
      ++out[t.index - 1];
      return Composition(std::move(out));
    }
    case LetterKind::V: {
      const int i = t.index;
      if (i < 2 || i > k + 1) return std::nullopt;
      const int prev = v[i - 2];
      if (prev - t.r + 1 < 2) return std::nullopt;
      std::vector<int> out(v.begin(), v.begin() + (i - 2));
      out.push_back(prev - t.r + 1);
      out.push_back(t.r);
      out.insert(out.end(), v.begin() + (i - 1), v.end());
      return Composition(std::move(out));
    }
  }
  return std::nullopt;
}

Priority priority_compare(const Letter& s, const Letter& t) {
  const int cs = class_rank(s);
  const int ct = class_rank(t);
  if (cs != ct) return cs > ct ? Priority::Higher : Priority::Lower;
  if (s.kind == LetterKind::V && t.kind == LetterKind::V && s.index != t.index)
    return s.index < t.index ? Priority::Higher : Priority::Lower;
  return Priority::Incomparable;
}

bool is_admissible(const Letter& t, const Composition& p, const Alphabet& a) {
  if (!a.contains(t)) return false;
  auto result = apply_letter(t, p);
  if (!result) return false;
  for (const auto& s : a.candidate_letters(p)) {
    if (priority_compare(s, t) != Priority::Higher) continue;
    if (apply_letter(s, p) == result) return false;
  }
  return true;
}

std::vector<Cover> admissible_letters(const Composition& p, const Alphabet& a) {
  std::vector<Cover> defined;
  for (const auto& t : a.candidate_letters(p))
    if (auto q = apply_letter(t, p)) defined.push_back({t, std::move(*q)});

  std::vector<Cover> out;
  for (const auto& c : defined) {
    bool shadowed = false;
    for (const auto& other : defined) {
      if (other.result != c.result || other.letter == c.letter) continue;
      switch (priority_compare(other.letter, c.letter)) {
        case Priority::Higher:
          shadowed = true;
          break;
        case Priority::Incomparable:
          // Same-class collisions would make the cover label ambiguous.
          throw std::logic_error("priority-incomparable letters " + other.letter.str() + " and " +
                                 c.letter.str() + " collide on " + p.str());
        case Priority::Lower:
          break;
      }
    }
    if (!shadowed) out.push_back(c);
  }
  return out;
}

WordOutcome apply_word(const Word& w, const Composition& p, const Alphabet& a) {
  Composition cur = p;
  for (std::size_t step = 0; step < w.size(); ++step) {
    const std::size_t pos = w.size() - 1 - step;
    if (!is_admissible(w[pos], cur, a)) return {std::nullopt, pos};
    cur = *apply_letter(w[pos], cur);
  }
  return {std::move(cur), std::nullopt};
}

}  // namespace compchains

#include "compchains/io.hpp"

namespace compchains {

namespace {

Rat parse_rat(const json& j) {
  Rat q(j.get<std::string>());
  q.canonicalize();
  return q;
}

json exponents(const Monomial& m) {
  json out = json::array();
  for (int i = 1; i <= m.max_var(); ++i) out.push_back(m.deg(i));
  return out;
}

Monomial monomial_from(const json& j) { return Monomial::from_exponents(j.get<std::vector<int>>()); }

}  // namespace

void to_json(json& j, const Composition& p) { j = p.vec(); }
void from_json(const json& j, Composition& p) { p = Composition(j.get<std::vector<int>>()); }

void to_json(json& j, const Letter& t) { j = t.str(); }
void from_json(const json& j, Letter& t) { t = Letter::parse(j.get<std::string>()); }

void to_json(json& j, const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"exponents", exponents(m)}, {"coeff", c.get_str()}});
  j = {{"terms", terms}};
}

void from_json(const json& j, MultiPoly& p) {
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : j.at("terms")) terms.emplace_back(monomial_from(t.at("exponents")), parse_rat(t.at("coeff")));
  p = MultiPoly::from_terms(std::move(terms));
}

void to_json(json& j, const FactoredRational& f) {
  json den = json::array();
  for (const auto& g : f.denominator()) den.push_back({{"factor", g.poly}, {"exponent", g.mult}});
  j = {{"numerator", f.numerator()}, {"denominator", den}};
}

void from_json(const json& j, FactoredRational& f) {
  std::vector<FactoredRational::Factor> den;
  for (const auto& g : j.at("denominator")) den.push_back({g.at("factor").get<MultiPoly>(), g.at("exponent").get<int>()});
  f = FactoredRational(j.at("numerator").get<MultiPoly>(), std::move(den));
}

void to_json(json& j, const UniPoly& p) {
  json c = json::array();
  for (const auto& a : p.coeffs()) c.push_back(a.get_str());
  j = {{"coeffs", c}};
}

void from_json(const json& j, UniPoly& p) {
  std::vector<Rat> c;
  for (const auto& a : j.at("coeffs")) c.push_back(parse_rat(a));
  p = UniPoly(std::move(c));
}

void to_json(json& j, const UniRational& f) {
  json den = json::array();
  for (const auto& g : f.denominator()) den.push_back({{"factor", g.poly}, {"exponent", g.mult}});
  j = {{"numerator", f.numerator()}, {"denominator", den}};
}

void from_json(const json& j, UniRational& f) {
  std::vector<UniRational::Factor> den;
  for (const auto& g : j.at("denominator")) den.push_back({g.at("factor").get<UniPoly>(), g.at("exponent").get<int>()});
  f = UniRational(j.at("numerator").get<UniPoly>(), std::move(den));
}

void to_json(json& j, const NCSeries& s) {
  json terms = json::array();
  for (const auto& [w, m] : s.terms) terms.push_back({{"word", word_str(w)}, {"monomial", exponents(m)}});
  j = {{"max_length", s.max_length}, {"terms", terms}};
}

void from_json(const json& j, NCSeries& s) {
  s = NCSeries{};
  s.max_length = j.at("max_length").get<int>();
  for (const auto& t : j.at("terms")) s.add(parse_word(t.at("word").get<std::string>()), monomial_from(t.at("monomial")));
}

void to_json(json& j, const WeightedDigraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"from", e.from},
                     {"to", e.to},
                     {"letter", e.letter ? json(e.letter->str()) : json(nullptr)},
                     {"weight", exponents(e.weight)}});
  j = {{"states", g.num_states}, {"start", g.start}, {"accept", g.accept}, {"edges", edges}};
}

void from_json(const json& j, WeightedDigraph& g) {
  g = WeightedDigraph{};
  g.num_states = j.at("states").get<int>();
  g.start = j.at("start").get<int>();
  g.accept = j.at("accept").get<int>();
  for (const auto& e : j.at("edges")) {
    DigraphEdge d;
    d.from = e.at("from").get<int>();
    d.to = e.at("to").get<int>();
    if (!e.at("letter").is_null()) d.letter = Letter::parse(e.at("letter").get<std::string>());
    d.weight = monomial_from(e.at("weight"));
    g.edges.push_back(d);
  }
}

}  // namespace compchains

#include "compchains/polyfrac.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>

namespace compchains {

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t a, b;
    std::memcpy(&a, m.e.data(), 8);
    std::memcpy(&b, m.e.data() + 8, 8);
    return static_cast<std::size_t>(a * 0x9e3779b97f4a7c15ull ^ (b + 0x632be59bd9b4e019ull + (a << 6)));
  }
};

using Accumulator = std::unordered_map<Monomial, Rat, MonomialHash>;

bool desc(const MultiPoly::Term& a, const MultiPoly::Term& b) { return a.first > b.first; }

MultiPoly from_accumulator(Accumulator&& acc) {
  std::vector<MultiPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.emplace_back(m, std::move(c));
  return MultiPoly::from_terms(std::move(terms));
}

// Arithmetic modulo the Mersenne prime 2^61 - 1, used to pretest
// divisibility by linear forms before attempting an exact division.
constexpr std::uint64_t kPrime = (1ull << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t mpz_mod(const mpz_class& z) {
  return mpz_fdiv_ui(z.get_mpz_t(), kPrime);
}

std::uint64_t rat_mod(const Rat& q) {
  return mulmod(mpz_mod(q.get_num()), powmod(mpz_mod(q.get_den()), kPrime - 2));
}

// False only when a is certainly not divisible by 1 - sum_{i in S} x_i.
bool may_vanish_on(const MultiPoly& a, const std::vector<int>& support) {
  static const std::array<std::uint64_t, kMaxVars> point = [] {
    std::array<std::uint64_t, kMaxVars> pt{};
    std::mt19937_64 rng(0x5eed);
    for (auto& v : pt) v = rng() % kPrime;
    return pt;
  }();
  auto x = point;
  std::uint64_t rest = 0;
  for (std::size_t s = 1; s < support.size(); ++s) rest = (rest + x[support[s] - 1]) % kPrime;
  x[support[0] - 1] = (1 + kPrime - rest) % kPrime;
  std::uint64_t value = 0;
  for (const auto& [m, c] : a.terms()) {
    std::uint64_t t = rat_mod(c);
    for (int i = 0; i < kMaxVars; ++i)
      if (m.e[i]) t = mulmod(t, powmod(x[i], m.e[i]));
    value = (value + t) % kPrime;
  }
  return value == 0;
}

Rat factorial(int d) {
  Rat f = 1;
  for (int i = 2; i <= d; ++i) f *= i;
  return f;
}

}  // namespace

std::string rat_str(const Rat& r) { return r.get_str(); }

Monomial Monomial::var(int i, int power) {
  Monomial m;
  m.set(i, power);
  return m;
}

Monomial Monomial::from_exponents(const std::vector<int>& exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars)) throw std::out_of_range("too many variables");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i) + 1, exps[i]);
  return m;
}

void Monomial::set(int i, int power) {
  if (i < 1 || i > kMaxVars) throw std::out_of_range("variable index out of range");
  if (power < 0 || power > 255) throw std::overflow_error("exponent out of range");
  e[i - 1] = static_cast<std::uint8_t>(power);
}

int Monomial::total() const { return std::accumulate(e.begin(), e.end(), 0); }

int Monomial::max_var() const {
  for (int i = kMaxVars; i >= 1; --i)
    if (e[i - 1]) return i;
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

std::vector<int> Monomial::exponents(int nvars) const {
  std::vector<int> out(nvars);
  for (int i = 0; i < nvars; ++i) out[i] = e[i];
  return out;
}

std::string Monomial::str() const {
  std::string out;
  for (int i = 0; i < kMaxVars; ++i) {
    if (!e[i]) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    int s = a.e[i] + b.e[i];
    if (s > 255) throw std::overflow_error("monomial exponent overflow");
    m.e[i] = static_cast<std::uint8_t>(s);
  }
  return m;
}

Monomial operator/(const Monomial& b, const Monomial& a) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint8_t>(b.e[i] - a.e[i]);
  return m;
}

MultiPoly::MultiPoly(const Rat& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

MultiPoly MultiPoly::var(int i) { return monomial(Monomial::var(i)); }

MultiPoly MultiPoly::monomial(const Monomial& m, const Rat& c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), desc);
  MultiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else
      p.terms_.push_back(std::move(t));
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.second == 0; });
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{});
}

Rat MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first == Monomial{}) return terms_.back().second;
  return 0;
}

Rat MultiPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.first > x; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first.total());
  return d;
}

int MultiPoly::degree_in(int i) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.deg(i));
  return d;
}

int MultiPoly::num_vars() const {
  int n = 0;
  for (const auto& t : terms_) n = std::max(n, t.first.max_var());
  return n;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    return a->first.total() < b->first.total();
  });
  std::string out;
  for (const Term* t : order) {
    const Rat& c = t->second;
    const bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (!out.empty() || neg) out += neg ? "-" : "+";
    if (t->first == Monomial{}) {
      out += rat_str(mag);
    } else {
      if (mag != 1) out += rat_str(mag) + "*";
      out += t->first.str();
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (&o == this) return *this *= Rat(2);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first > b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first > a->first) {
      out.push_back(*b++);
    } else {
      Rat s = a->second + b->second;
      if (s != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return mul(a, b); }

std::strong_ordering compare(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() <=> b.terms_.size();
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& [ma, ca] = a.terms_[i];
    const auto& [mb, cb] = b.terms_[i];
    if (ma != mb) return ma > mb ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp(ca, cb);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

MultiPoly mul_serial(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Accumulator acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) acc[ma * mb] += ca * cb;
  return from_accumulator(std::move(acc));
}

MultiPoly mul(const MultiPoly& a, const MultiPoly& b) {
  const MultiPoly& outer = a.size() >= b.size() ? a : b;
  const MultiPoly& inner = a.size() >= b.size() ? b : a;
  // Not worth spawning threads for small operands.
  if (outer.size() * inner.size() < 4096) return mul_serial(a, b);

  const long n = static_cast<long>(outer.size());
  Accumulator acc;
#pragma omp parallel
  {
    Accumulator local;
#pragma omp for schedule(static) nowait
    for (long i = 0; i < n; ++i) {
      const auto& [ma, ca] = outer.terms()[i];
      for (const auto& [mb, cb] : inner.terms()) local[ma * mb] += ca * cb;
    }
#pragma omp critical(compchains_poly_merge)
    {
      if (acc.empty()) {
        acc = std::move(local);
      } else {
        for (auto& [m, c] : local) acc[m] += c;
      }
    }
  }
  return from_accumulator(std::move(acc));
}

MultiPoly mul_monomial(const MultiPoly& p, const Monomial& m, const Rat& c) {
  std::vector<MultiPoly::Term> terms;
  if (c == 0) return {};
  terms.reserve(p.size());
  for (const auto& [mm, cc] : p.terms()) terms.emplace_back(mm * m, cc * c);
  // Multiplying by a monomial preserves the order.
  return MultiPoly::from_terms(std::move(terms));
}

MultiPoly mul_truncated(const MultiPoly& a, const MultiPoly& b, int max_total) {
  Accumulator acc;
  std::vector<int> db;
  for (const auto& t : b.terms()) db.push_back(t.first.total());
  for (const auto& [ma, ca] : a.terms()) {
    const int da = ma.total();
    if (da > max_total) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (da + db[j] > max_total) continue;
      const auto& [mb, cb] = b.terms()[j];
      acc[ma * mb] += ca * cb;
    }
  }
  return from_accumulator(std::move(acc));
}

MultiPoly pow(const MultiPoly& p, int e) {
  MultiPoly result(1);
  MultiPoly base = p;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

MultiPoly derivative(const MultiPoly& p, int i) {
  std::vector<MultiPoly::Term> terms;
  for (const auto& [m, c] : p.terms()) {
    const int d = m.deg(i);
    if (!d) continue;
    Monomial mm = m;
    mm.set(i, d - 1);
    terms.emplace_back(mm, c * d);
  }
  return MultiPoly::from_terms(std::move(terms));
}

MultiPoly substitute_zero(const MultiPoly& p, int i) { return degree_part(p, i, 0); }

Rat evaluate(const MultiPoly& p, const std::vector<Rat>& point) {
  Rat sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rat t = c;
    for (int i = 1; i <= m.max_var(); ++i)
      for (int k = 0; k < m.deg(i); ++k) t *= point.at(i - 1);
    sum += t;
  }
  return sum;
}

MultiPoly shift_vars(const MultiPoly& p, int j) {
  std::vector<MultiPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    if (m.e[kMaxVars - 1]) throw std::overflow_error("variable shift beyond x16");
    Monomial mm = m;
    for (int v = kMaxVars; v > j; --v) mm.e[v - 1] = m.e[v - 2];
    mm.e[j - 1] = 0;
    terms.emplace_back(mm, c);
  }
  return MultiPoly::from_terms(std::move(terms));
}

MultiPoly degree_part(const MultiPoly& p, int i, int d) {
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : p.terms())
    if (t.first.deg(i) == d) terms.push_back(t);
  return MultiPoly::from_terms(std::move(terms));
}

MultiPoly truncate_degree_in(const MultiPoly& p, int i, int max_deg) {
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : p.terms())
    if (t.first.deg(i) <= max_deg) terms.push_back(t);
  return MultiPoly::from_terms(std::move(terms));
}

MultiPoly truncate_total(const MultiPoly& p, int max_total) {
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : p.terms())
    if (t.first.total() <= max_total) terms.push_back(t);
  return MultiPoly::from_terms(std::move(terms));
}

std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return MultiPoly{};
  for (int i = 1; i <= kMaxVars; ++i)
    if (b.degree_in(i) > a.degree_in(i)) return std::nullopt;

  std::map<Monomial, Rat, std::greater<>> rem;
  for (const auto& [m, c] : a.terms()) rem.emplace(m, c);
  const auto& [lm, lc] = b.leading();
  std::vector<MultiPoly::Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lm.divides(it->first)) return std::nullopt;
    Monomial qm = it->first / lm;
    Rat qc = it->second / lc;
    rem.erase(it);
    for (std::size_t j = 1; j < b.size(); ++j) {
      const auto& [bm, bc] = b.terms()[j];
      auto [pos, inserted] = rem.try_emplace(qm * bm, 0);
      pos->second -= qc * bc;
      if (pos->second == 0) rem.erase(pos);
    }
    quotient.emplace_back(qm, std::move(qc));
  }
  return MultiPoly::from_terms(std::move(quotient));
}

MultiPoly divide_by_monomial(const MultiPoly& p, const Monomial& m) {
  std::vector<MultiPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [mm, c] : p.terms()) {
    if (!m.divides(mm)) throw NotDivisible("term " + mm.str() + " is not divisible by " + m.str());
    terms.emplace_back(mm / m, c);
  }
  return MultiPoly::from_terms(std::move(terms));
}

Monomial monomial_content(const MultiPoly& p) {
  if (p.is_zero()) return {};
  Monomial g = p.terms().front().first;
  for (const auto& [m, c] : p.terms())
    for (int i = 0; i < kMaxVars; ++i) g.e[i] = std::min(g.e[i], m.e[i]);
  return g;
}

bool is_linear_form(const MultiPoly& f, std::vector<int>* support) {
  if (f.constant_term() != 1 || f.size() < 2) return false;
  std::vector<int> s;
  for (const auto& [m, c] : f.terms()) {
    if (m == Monomial{}) continue;
    if (c != -1 || m.total() != 1) return false;
    s.push_back(m.max_var());
  }
  std::sort(s.begin(), s.end());
  if (support) *support = std::move(s);
  return true;
}

MultiPoly linear_form(const std::vector<int>& support) {
  MultiPoly f(1);
  for (int i : support) f -= MultiPoly::var(i);
  return f;
}

FactoredRational::FactoredRational(MultiPoly num) : num_(std::move(num)) {}

FactoredRational::FactoredRational(MultiPoly num, std::vector<Factor> den) : num_(std::move(num)) {
  for (auto& f : den) {
    if (f.mult < 0) throw std::invalid_argument("negative factor multiplicity");
    if (f.mult == 0) continue;
    if (f.poly.is_zero()) throw std::domain_error("zero denominator factor");
    Rat c = f.poly.constant_term();
    if (f.poly.is_constant()) {
      for (int k = 0; k < f.mult; ++k) num_ *= Rat(1 / c);
      continue;
    }
    if (c == 0) throw std::domain_error("denominator factor " + f.poly.str() + " vanishes at 0");
    if (c != 1) {
      f.poly *= Rat(1 / c);
      for (int k = 0; k < f.mult; ++k) num_ *= Rat(1 / c);
    }
    auto same = std::find_if(den_.begin(), den_.end(),
                             [&](const Factor& g) { return g.poly == f.poly; });
    if (same != den_.end())
      same->mult += f.mult;
    else
      den_.push_back(std::move(f));
  }
  if (num_.is_zero()) den_.clear();
  std::sort(den_.begin(), den_.end(),
            [](const Factor& a, const Factor& b) { return compare(a.poly, b.poly) < 0; });
}

MultiPoly FactoredRational::denominator_product() const {
  MultiPoly p(1);
  for (const auto& f : den_) p = mul(p, pow(f.poly, f.mult));
  return p;
}

int FactoredRational::num_vars() const {
  int n = num_.num_vars();
  for (const auto& f : den_) n = std::max(n, f.poly.num_vars());
  return n;
}

void FactoredRational::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& f : den_) {
    std::vector<int> support;
    const bool linear = is_linear_form(f.poly, &support);
    while (f.mult > 0) {
      if (linear && !may_vanish_on(num_, support)) break;
      auto q = exact_divide(num_, f.poly);
      if (!q) break;
      num_ = std::move(*q);
      --f.mult;
    }
  }
  std::erase_if(den_, [](const Factor& f) { return f.mult == 0; });
}

std::string FactoredRational::str() const {
  if (num_.is_zero()) return "0";
  const Monomial content = monomial_content(num_);
  const MultiPoly rest = divide_by_monomial(num_, content);
  std::string top;
  if (rest.is_constant()) {
    const Rat c = rest.constant_term();
    if (content == Monomial{})
      top = rat_str(c);
    else if (c == 1)
      top = content.str();
    else if (c == -1)
      top = "-" + content.str();
    else
      top = rat_str(c) + "*" + content.str();
  } else {
    top = content == Monomial{} ? "(" + rest.str() + ")" : content.str() + "*(" + rest.str() + ")";
    if (den_.empty() && content == Monomial{}) top = rest.str();
  }
  if (den_.empty()) return top;
  std::string bottom;
  for (const auto& f : den_) {
    if (!bottom.empty()) bottom += "*";
    bottom += "(" + f.poly.str() + ")";
    if (f.mult > 1) bottom += "^" + std::to_string(f.mult);
  }
  if (den_.size() > 1 || den_[0].mult > 1) bottom = "(" + bottom + ")";
  return top + "/" + bottom;
}

namespace {

using FactorList = std::vector<FactoredRational::Factor>;

int mult_of(const FactorList& fs, const MultiPoly& p) {
  for (const auto& f : fs)
    if (f.poly == p) return f.mult;
  return 0;
}

FactorList lcm_factors(const FactorList& a, const FactorList& b) {
  FactorList out = a;
  for (const auto& f : b) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& g) { return g.poly == f.poly; });
    if (it == out.end())
      out.push_back(f);
    else
      it->mult = std::max(it->mult, f.mult);
  }
  return out;
}

MultiPoly lift_numerator(const FactoredRational& f, const FactorList& target) {
  MultiPoly n = f.numerator();
  for (const auto& t : target) {
    const int extra = t.mult - mult_of(f.denominator(), t.poly);
    if (extra > 0) n = mul(n, pow(t.poly, extra));
  }
  return n;
}

}  // namespace

FactoredRational operator+(const FactoredRational& f, const FactoredRational& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  FactorList den = lcm_factors(f.denominator(), g.denominator());
  FactoredRational out(lift_numerator(f, den) + lift_numerator(g, den), den);
  out.reduce();
  return out;
}

FactoredRational operator-(const FactoredRational& f, const FactoredRational& g) {
  return f + FactoredRational(-g.numerator(), g.denominator());
}

FactoredRational operator*(const FactoredRational& f, const FactoredRational& g) {
  if (f.is_zero() || g.is_zero()) return {};
  FactorList den = f.denominator();
  den.insert(den.end(), g.denominator().begin(), g.denominator().end());
  FactoredRational out(mul(f.numerator(), g.numerator()), std::move(den));
  out.reduce();
  return out;
}

FactoredRational operator*(const FactoredRational& f, const MultiPoly& p) {
  FactoredRational out(mul(f.numerator(), p), f.denominator());
  out.reduce();
  return out;
}

FactoredRational divide_by_factor(const FactoredRational& f, const MultiPoly& factor) {
  FactorList den = f.denominator();
  den.push_back({factor, 1});
  FactoredRational out(f.numerator(), std::move(den));
  out.reduce();
  return out;
}

FactoredRational mul_monomial(const FactoredRational& f, const Monomial& m, const Rat& c) {
  return FactoredRational(mul_monomial(f.numerator(), m, c), f.denominator());
}

FactoredRational lambda_op(const FactoredRational& f, int j) {
  FactorList den;
  for (const auto& g : f.denominator()) den.push_back({shift_vars(g.poly, j), g.mult});
  return FactoredRational(shift_vars(f.numerator(), j), std::move(den));
}

namespace {

// One quotient-rule step on N / prod F^m, updating both in place.
void differentiate_in_place(MultiPoly& num, FactorList& den, int i) {
  std::vector<std::size_t> dep;
  for (std::size_t j = 0; j < den.size(); ++j)
    if (den[j].poly.degree_in(i) > 0) dep.push_back(j);

  MultiPoly prod_all(1);
  for (std::size_t j : dep) prod_all = mul(prod_all, den[j].poly);
  MultiPoly out = mul(derivative(num, i), prod_all);
  for (std::size_t j : dep) {
    MultiPoly others(1);
    for (std::size_t l : dep)
      if (l != j) others = mul(others, den[l].poly);
    MultiPoly term = mul(mul(num, derivative(den[j].poly, i)), others);
    out -= term * Rat(den[j].mult);
  }
  for (std::size_t j : dep) ++den[j].mult;
  num = std::move(out);
}

}  // namespace

FactoredRational derivative(const FactoredRational& f, int i) {
  MultiPoly num = f.numerator();
  FactorList den = f.denominator();
  differentiate_in_place(num, den, i);
  return FactoredRational(std::move(num), std::move(den));
}

FactoredRational substitute_zero(const FactoredRational& f, int i) {
  FactorList den;
  for (const auto& g : f.denominator()) den.push_back({substitute_zero(g.poly, i), g.mult});
  FactoredRational out(substitute_zero(f.numerator(), i), std::move(den));
  out.reduce();
  return out;
}

FactoredRational delta_op(const FactoredRational& f, int i, int d) {
  if (d < 0) throw std::invalid_argument("delta_op needs d >= 0");
  if (d == 0) return substitute_zero(f, i);
  MultiPoly num = f.numerator();
  FactorList den = f.denominator();
  for (int step = 0; step < d; ++step) {
    // Terms of x_i-degree above the number of derivatives still to come
    // cannot survive the final x_i := 0.
    num = truncate_degree_in(num, i, d - step);
    differentiate_in_place(num, den, i);
  }
  FactorList zden;
  for (const auto& g : den) zden.push_back({substitute_zero(g.poly, i), g.mult});
  MultiPoly top = mul_monomial(substitute_zero(num, i), Monomial::var(i, d), Rat(1) / factorial(d));
  FactoredRational out(std::move(top), std::move(zden));
  out.reduce();
  return out;
}

FactoredRational divide_by_monomial_exact(const FactoredRational& f, int i, int e) {
  return FactoredRational(divide_by_monomial(f.numerator(), Monomial::var(i, e)), f.denominator());
}

MultiPoly taylor(const FactoredRational& f, int max_total) {
  MultiPoly result = truncate_total(f.numerator(), max_total);
  for (const auto& g : f.denominator()) {
    const MultiPoly h = MultiPoly(1) - g.poly;  // no constant term
    MultiPoly inv(1);
    MultiPoly power(1);
    for (int j = 1; j <= max_total; ++j) {
      power = mul_truncated(power, h, max_total);
      if (power.is_zero()) break;
      inv += power;
    }
    for (int k = 0; k < g.mult; ++k) result = mul_truncated(result, inv, max_total);
  }
  return result;
}

bool equals(const FactoredRational& f, const FactoredRational& g) {
  return mul(f.numerator(), g.denominator_product()) == mul(g.numerator(), f.denominator_product());
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const Rat& c) {
  if (c != 0) c_.push_back(c);
}

UniPoly UniPoly::monomial(int degree, const Rat& c) {
  std::vector<Rat> v(degree + 1, 0);
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::one_minus(const Rat& c) { return UniPoly(std::vector<Rat>{1, -c}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int UniPoly::valuation() const {
  for (int i = 0; i < static_cast<int>(c_.size()); ++i)
    if (c_[i] != 0) return i;
  return -1;
}

Rat UniPoly::eval(const Rat& t) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string UniPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
    if (c_[i] == 0) continue;
    const bool neg = c_[i] < 0;
    Rat mag = neg ? Rat(-c_[i]) : c_[i];
    if (!out.empty() || neg) out += neg ? "-" : "+";
    std::string num = rat_str(mag);
    if (i == 0) {
      out += num;
      continue;
    }
    if (mag != 1) out += mag.get_den() == 1 ? num : "(" + num + ")";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rat> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly{}, a};
  std::vector<Rat> q(a.degree() - db + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Rat f = r[i] / b.lead();
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly scale_var(const UniPoly& p, const Rat& s) {
  std::vector<Rat> v = p.coeffs();
  Rat f = 1;
  for (auto& c : v) {
    c *= f;
    f *= s;
  }
  return UniPoly(std::move(v));
}

UniRational::UniRational(UniPoly num) : num_(std::move(num)) {}

UniRational::UniRational(UniPoly num, std::vector<Factor> den) : num_(std::move(num)) {
  for (auto& f : den) {
    if (f.mult == 0) continue;
    if (f.poly.is_zero()) throw std::domain_error("zero denominator factor");
    const Rat c = f.poly.coeff(0);
    if (f.poly.degree() == 0) {
      for (int k = 0; k < f.mult; ++k) num_ = num_ * UniPoly(Rat(1 / c));
      continue;
    }
    if (c == 0) throw std::domain_error("denominator factor vanishes at t = 0");
    if (c != 1) {
      f.poly = f.poly * UniPoly(Rat(1 / c));
      for (int k = 0; k < f.mult; ++k) num_ = num_ * UniPoly(Rat(1 / c));
    }
    auto same = std::find_if(den_.begin(), den_.end(), [&](const Factor& g) { return g.poly == f.poly; });
    if (same != den_.end())
      same->mult += f.mult;
    else
      den_.push_back(std::move(f));
  }
  if (num_.is_zero()) den_.clear();
  std::sort(den_.begin(), den_.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    for (int i = 1; i <= a.poly.degree(); ++i)
      if (a.poly.coeff(i) != b.poly.coeff(i)) return a.poly.coeff(i) > b.poly.coeff(i);
    return false;
  });
}

UniPoly UniRational::denominator_product() const {
  UniPoly p(1);
  for (const auto& f : den_)
    for (int k = 0; k < f.mult; ++k) p = p * f.poly;
  return p;
}

void UniRational::reduce() {
  for (auto& f : den_) {
    while (f.mult > 0 && !num_.is_zero()) {
      auto [q, r] = divmod(num_, f.poly);
      if (!r.is_zero()) break;
      num_ = std::move(q);
      --f.mult;
    }
  }
  if (num_.is_zero()) den_.clear();
  std::erase_if(den_, [](const Factor& f) { return f.mult == 0; });
}

std::string UniRational::str() const {
  if (num_.is_zero()) return "0";
  const int v = num_.valuation();
  std::vector<Rat> rest_c(num_.coeffs().begin() + v, num_.coeffs().end());
  UniPoly rest(std::move(rest_c));
  std::string tpow = v == 0 ? "" : (v == 1 ? "t" : "t^" + std::to_string(v));
  std::string top;
  if (rest.degree() == 0) {
    const Rat c = rest.coeff(0);
    if (v == 0)
      top = rat_str(c);
    else if (c == 1)
      top = tpow;
    else if (c == -1)
      top = "-" + tpow;
    else
      top = rat_str(c) + "*" + tpow;
  } else if (v == 0) {
    top = den_.empty() ? rest.str() : "(" + rest.str() + ")";
  } else {
    top = tpow + "*(" + rest.str() + ")";
  }
  if (den_.empty()) return top;
  std::string bottom;
  for (const auto& f : den_) {
    bottom += "(" + f.poly.str() + ")";
    if (f.mult > 1) bottom += "^" + std::to_string(f.mult);
  }
  if (den_.size() == 1 && den_[0].mult == 1) bottom = den_[0].poly.str();
  return top + "/(" + bottom + ")";
}

bool equals(const UniRational& f, const UniRational& g) {
  return f.numerator() * g.denominator_product() == g.numerator() * f.denominator_product();
}

std::vector<Rat> series_coeffs(const UniRational& g, int n) {
  const UniPoly d = g.denominator_product();
  const Rat d0 = d.coeff(0);
  if (d0 == 0) throw std::domain_error("denominator vanishes at t = 0");
  std::vector<Rat> a(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    Rat s = g.numerator().coeff(i);
    for (int j = 1; j <= std::min(i, d.degree()); ++j) s -= d.coeff(j) * a[i - j];
    a[i] = s / d0;
  }
  return a;
}

namespace {

UniPoly collapse(const MultiPoly& p) {
  std::vector<Rat> v;
  for (const auto& [m, c] : p.terms()) {
    const int d = m.total();
    if (static_cast<int>(v.size()) <= d) v.resize(d + 1, 0);
    v[d] += c;
  }
  return UniPoly(std::move(v));
}

}  // namespace

UniRational specialize_all(const FactoredRational& f) {
  std::vector<UniRational::Factor> den;
  for (const auto& g : f.denominator()) den.push_back({collapse(g.poly), g.mult});
  UniRational out(collapse(f.numerator()), std::move(den));
  out.reduce();
  return out;
}

}  // namespace compchains

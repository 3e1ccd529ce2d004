#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace compchains {

using Rat = mpq_class;
using Integer = mpz_class;

inline constexpr int kMaxVars = 16;

struct NotDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exponent vector over x1..x16. Ordered lexicographically with x1 most
/// significant, which is a monomial order.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  static Monomial var(int i, int power = 1);  // i is 1-based
  static Monomial from_exponents(const std::vector<int>& exps);

  int deg(int i) const { return e[i - 1]; }
  void set(int i, int power);
  int total() const;
  /// Highest variable index with a positive exponent, 0 for the constant.
  int max_var() const;
  bool divides(const Monomial& other) const;
  std::vector<int> exponents(int nvars) const;
  std::string str() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires a.divides(b).
  friend Monomial operator/(const Monomial& b, const Monomial& a);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial with rational coefficients; terms sorted by decreasing
/// monomial so the leading term comes first. No zero coefficients.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rat>;

  MultiPoly() = default;
  MultiPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly var(int i);
  static MultiPoly monomial(const Monomial& m, const Rat& c = 1);
  /// Sums duplicate monomials and drops zeros.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  Rat constant_term() const;
  Rat coeff(const Monomial& m) const;
  const Term& leading() const { return terms_.front(); }
  int total_degree() const;
  int degree_in(int i) const;
  int num_vars() const;
  std::string str() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rat& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rat(-1); }
  friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;
  /// Arbitrary but fixed total order, used to sort denominator factors.
  friend std::strong_ordering compare(const MultiPoly& a, const MultiPoly& b);

 private:
  std::vector<Term> terms_;
};

/// Term-parallel product (OpenMP) and its single-threaded reference.
MultiPoly mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly mul_serial(const MultiPoly& a, const MultiPoly& b);
MultiPoly mul_monomial(const MultiPoly& p, const Monomial& m, const Rat& c = 1);
/// Product with all terms of total degree > max_total dropped.
MultiPoly mul_truncated(const MultiPoly& a, const MultiPoly& b, int max_total);
MultiPoly pow(const MultiPoly& p, int e);

MultiPoly derivative(const MultiPoly& p, int i);
MultiPoly substitute_zero(const MultiPoly& p, int i);
/// Substitute x_i := value for every i (used to specialize x_i := t later).
Rat evaluate(const MultiPoly& p, const std::vector<Rat>& point);
/// Renames x_m -> x_{m+1} for every m >= j.
MultiPoly shift_vars(const MultiPoly& p, int j);
/// Terms with x_i-degree exactly d.
MultiPoly degree_part(const MultiPoly& p, int i, int d);
MultiPoly truncate_degree_in(const MultiPoly& p, int i, int max_deg);
MultiPoly truncate_total(const MultiPoly& p, int max_total);
/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);
/// Throws NotDivisible unless every term is divisible by m.
MultiPoly divide_by_monomial(const MultiPoly& p, const Monomial& m);
/// Largest monomial dividing every term (1 for the zero polynomial).
Monomial monomial_content(const MultiPoly& p);

/// True when f = 1 - sum_{i in S} x_i for a nonempty S; fills S (1-based).
bool is_linear_form(const MultiPoly& f, std::vector<int>* support = nullptr);
MultiPoly linear_form(const std::vector<int>& support);

/// N / prod F_j^{m_j} with every F_j of constant term 1, distinct and sorted.
class FactoredRational {
 public:
  struct Factor {
    MultiPoly poly;
    int mult = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  FactoredRational() = default;
  FactoredRational(MultiPoly num);  // NOLINT(google-explicit-constructor)
  /// Factors are normalized to constant term 1 (the scale moves into the
  /// numerator); constant factors are absorbed; equal factors merged.
  FactoredRational(MultiPoly num, std::vector<Factor> den);

  const MultiPoly& numerator() const { return num_; }
  const std::vector<Factor>& denominator() const { return den_; }
  MultiPoly denominator_product() const;
  bool is_zero() const { return num_.is_zero(); }
  int num_vars() const;

  /// Cancels denominator factors that divide the numerator.
  void reduce();
  std::string str() const;

 private:
  MultiPoly num_;
  std::vector<Factor> den_;
};

FactoredRational operator+(const FactoredRational& f, const FactoredRational& g);
FactoredRational operator-(const FactoredRational& f, const FactoredRational& g);
FactoredRational operator*(const FactoredRational& f, const FactoredRational& g);
FactoredRational operator*(const FactoredRational& f, const MultiPoly& p);

/// Divides by a polynomial with constant term 1 (appended as a factor).
FactoredRational divide_by_factor(const FactoredRational& f, const MultiPoly& factor);
FactoredRational mul_monomial(const FactoredRational& f, const Monomial& m, const Rat& c = 1);
FactoredRational lambda_op(const FactoredRational& f, int j);
FactoredRational derivative(const FactoredRational& f, int i);
FactoredRational substitute_zero(const FactoredRational& f, int i);
/// x_i^d/d! times the d-th x_i-derivative at x_i = 0: the part of the series
/// of x_i-degree exactly d. d = 0 gives substitute_zero.
FactoredRational delta_op(const FactoredRational& f, int i, int d);
FactoredRational divide_by_monomial_exact(const FactoredRational& f, int i, int e);
/// Power series truncated to total degree <= max_total.
MultiPoly taylor(const FactoredRational& f, int max_total);
/// Cross-multiplied identity test.
bool equals(const FactoredRational& f, const FactoredRational& g);

/// Dense univariate polynomial in t, trailing zeros trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  /// Coefficients from the constant term upwards.
  UniPoly(std::initializer_list<Rat> coeffs) : UniPoly(std::vector<Rat>(coeffs)) {}
  UniPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  UniPoly(int c) : UniPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static UniPoly monomial(int degree, const Rat& c = 1);
  /// 1 - c t
  static UniPoly one_minus(const Rat& c);

  const std::vector<Rat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }
  /// Lowest degree with a nonzero coefficient.
  int valuation() const;
  Rat eval(const Rat& t) const;
  std::string str(const std::string& var = "t") const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Quotient and remainder.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// p(t) -> p(s * t)
UniPoly scale_var(const UniPoly& p, const Rat& s);

class UniRational {
 public:
  struct Factor {
    UniPoly poly;
    int mult = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  UniRational() = default;
  UniRational(UniPoly num);  // NOLINT(google-explicit-constructor)
  UniRational(UniPoly num, std::vector<Factor> den);

  const UniPoly& numerator() const { return num_; }
  const std::vector<Factor>& denominator() const { return den_; }
  UniPoly denominator_product() const;

  void reduce();
  /// "t^3*(1+5t-2t^2)/((1-t)(1-2t)(1-3t))"
  std::string str() const;

 private:
  UniPoly num_;
  std::vector<Factor> den_;
};

bool equals(const UniRational& f, const UniRational& g);
/// Coefficients a_0..a_n of the series expansion.
std::vector<Rat> series_coeffs(const UniRational& g, int n);
/// x_i := t for every i.
UniRational specialize_all(const FactoredRational& f);

std::string rat_str(const Rat& r);

}  // namespace compchains

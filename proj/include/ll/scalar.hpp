#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ll {

/// Exact rational numbers, GMP-backed.
using Rational = mpq_class;

/// mpq_class(n, d) keeps the raw pair; always canonicalize fractions.
inline Rational frac(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

class scalar_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_integer(const Rational& r);
long to_long(const Rational& r);
Rational rational_pow(const Rational& base, long exponent);
std::string rational_to_string(const Rational& r);

/// a + b*i with exact rational a, b.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational inverse() const;
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string to_string() const;
};

/// A base that can be raised to a rational power: a named parameter
/// symbol (beta, k, E, ...) or a positive integer prime.
struct Base {
  enum class Kind { Prime, Symbol };
  Kind kind = Kind::Symbol;
  unsigned long prime = 0;
  std::string symbol;

  static Base prime_base(unsigned long p);
  static Base sym(std::string name);

  bool operator==(const Base& o) const {
    return kind == o.kind && prime == o.prime && symbol == o.symbol;
  }
  bool operator<(const Base& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (kind == Kind::Prime) return prime < o.prime;
    return symbol < o.symbol;
  }
  std::string to_string() const;
};

/// factor * prod base^exponent.  Canonical form:
///  - factor == 0 implies no bases
///  - no exponent is zero
///  - prime bases carry exponents strictly between 0 and 1 (integer
///    parts are folded into the rational factor)
class ScalarMonomial {
 public:
  ScalarMonomial() = default;
  explicit ScalarMonomial(GaussianRational factor) : ScalarMonomial(std::move(factor), {}) {}
  ScalarMonomial(GaussianRational factor, std::map<Base, Rational> bases);

  static ScalarMonomial one() { return ScalarMonomial(GaussianRational(1)); }
  static ScalarMonomial zero() { return ScalarMonomial(); }
  static ScalarMonomial symbol(const std::string& name, Rational exponent = Rational(1));

  const GaussianRational& factor() const { return factor_; }
  const std::map<Base, Rational>& bases() const { return bases_; }
  bool is_zero() const { return factor_.is_zero(); }
  bool is_constant() const { return bases_.empty(); }

  ScalarMonomial operator*(const ScalarMonomial& o) const;
  ScalarMonomial inverse() const;
  ScalarMonomial operator-() const { return ScalarMonomial(-factor_, bases_); }

  bool operator==(const ScalarMonomial& o) const {
    return factor_ == o.factor_ && bases_ == o.bases_;
  }
  /// Total order; bases compared first so equal-base terms are adjacent.
  bool operator<(const ScalarMonomial& o) const;
  bool same_bases(const ScalarMonomial& o) const { return bases_ == o.bases_; }

  std::complex<double> eval(const std::map<std::string, std::complex<double>>& bindings) const;
  std::string to_string() const;

 private:
  GaussianRational factor_{Rational(0)};
  std::map<Base, Rational> bases_;
  void canonicalize();
  friend ScalarMonomial scalar_sqrt(const ScalarMonomial&);
};

/// Square root of a positive real monomial; the rational factor is split
/// into primes with halved exponents.  Throws scalar_error otherwise.
ScalarMonomial scalar_sqrt(const ScalarMonomial& m);

/// Canonical sum of monomials: like terms merged, terms sorted, no zeros.
class ScalarSum {
 public:
  ScalarSum() = default;
  ScalarSum(ScalarMonomial m);
  ScalarSum(GaussianRational g) : ScalarSum(ScalarMonomial(std::move(g))) {}
  ScalarSum(long n) : ScalarSum(GaussianRational(n)) {}
  explicit ScalarSum(std::vector<ScalarMonomial> terms);

  static ScalarSum zero() { return ScalarSum(); }
  static ScalarSum one() { return ScalarSum(1); }
  static ScalarSum i() { return ScalarSum(GaussianRational::i()); }
  static ScalarSum rational(Rational r) { return ScalarSum(GaussianRational(std::move(r))); }
  static ScalarSum symbol(const std::string& name, Rational exponent = Rational(1)) {
    return ScalarSum(ScalarMonomial::symbol(name, std::move(exponent)));
  }

  const std::vector<ScalarMonomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::optional<ScalarMonomial> as_monomial() const;
  std::optional<GaussianRational> as_constant() const;

  ScalarSum operator+(const ScalarSum& o) const;
  ScalarSum operator-(const ScalarSum& o) const;
  ScalarSum operator-() const;
  ScalarSum operator*(const ScalarSum& o) const;
  ScalarSum& operator+=(const ScalarSum& o) { return *this = *this + o; }
  ScalarSum& operator-=(const ScalarSum& o) { return *this = *this - o; }
  ScalarSum& operator*=(const ScalarSum& o) { return *this = *this * o; }

  bool operator==(const ScalarSum& o) const { return terms_ == o.terms_; }
  bool operator!=(const ScalarSum& o) const { return !(*this == o); }
  bool operator<(const ScalarSum& o) const;

  ScalarSum pow(long e) const;

  std::complex<double> eval(const std::map<std::string, std::complex<double>>& bindings) const;
  std::string to_string() const;

 private:
  std::vector<ScalarMonomial> terms_;
  void canonicalize();
};

ScalarSum scalar_mul(const ScalarSum& a, const ScalarSum& b);

/// Termwise exact division by a nonzero monomial.
ScalarSum scalar_div(const ScalarSum& a, const ScalarMonomial& m);

/// Square root of a one-term sum (see scalar_sqrt on monomials).
ScalarSum scalar_sqrt(const ScalarSum& s);

std::complex<double> scalar_eval(const ScalarSum& s,
                                 const std::map<std::string, std::complex<double>>& bindings);

}  // namespace ll

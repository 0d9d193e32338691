#include "ll/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ll {

bool is_integer(const Rational& r) { return r.get_den() == 1; }

long to_long(const Rational& r) {
  if (!is_integer(r)) throw scalar_error("not an integer: " + rational_to_string(r));
  if (!r.get_num().fits_slong_p()) throw scalar_error("integer out of range");
  return r.get_num().get_si();
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (base == 0) {
    if (exponent < 0) throw scalar_error("zero to a negative power");
    return Rational(0);
  }
  Rational result(1);
  Rational b = exponent > 0 ? base : Rational(1) / base;
  unsigned long e = static_cast<unsigned long>(exponent > 0 ? exponent : -exponent);
  while (e) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw scalar_error("division by zero");
  Rational n = re * re + im * im;
  return {re / n, -im / n};
}

std::string GaussianRational::to_string() const {
  if (im == 0) return rational_to_string(re);
  std::string imag = (im == 1) ? "i" : (im == -1) ? "-i" : rational_to_string(im) + "*i";
  if (re == 0) return imag;
  if (im > 0) return "(" + rational_to_string(re) + "+" + (im == 1 ? "i" : rational_to_string(im) + "*i") + ")";
  Rational a = -im;
  return "(" + rational_to_string(re) + "-" + (a == 1 ? "i" : rational_to_string(a) + "*i") + ")";
}

namespace {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

// Trial-division factorization of a positive integer.
std::map<unsigned long, long> factorize(mpz_class n) {
  std::map<unsigned long, long> out;
  if (n <= 0) throw scalar_error("factorize needs a positive integer");
  for (unsigned long p = 2; mpz_class(p) * p <= n; ++p) {
    while (n % p == 0) {
      out[p] += 1;
      n /= p;
    }
  }
  if (n > 1) {
    if (!n.fits_ulong_p()) throw scalar_error("prime factor out of range");
    out[n.get_ui()] += 1;
  }
  return out;
}

}  // namespace

Base Base::prime_base(unsigned long p) {
  if (!is_prime(p)) throw scalar_error("base " + std::to_string(p) + " is not prime");
  Base b;
  b.kind = Kind::Prime;
  b.prime = p;
  return b;
}

Base Base::sym(std::string name) {
  if (name.empty()) throw scalar_error("empty symbol name");
  Base b;
  b.kind = Kind::Symbol;
  b.symbol = std::move(name);
  return b;
}

std::string Base::to_string() const {
  return kind == Kind::Prime ? std::to_string(prime) : symbol;
}

ScalarMonomial::ScalarMonomial(GaussianRational factor, std::map<Base, Rational> bases)
    : factor_(std::move(factor)), bases_(std::move(bases)) {
  canonicalize();
}

ScalarMonomial ScalarMonomial::symbol(const std::string& name, Rational exponent) {
  std::map<Base, Rational> b;
  if (exponent != 0) b[Base::sym(name)] = std::move(exponent);
  return ScalarMonomial(GaussianRational(1), std::move(b));
}

void ScalarMonomial::canonicalize() {
  factor_.re.canonicalize();
  factor_.im.canonicalize();
  if (factor_.is_zero()) {
    bases_.clear();
    return;
  }
  for (auto& [base, exp] : bases_) exp.canonicalize();
  for (auto it = bases_.begin(); it != bases_.end();) {
    if (it->second == 0) {
      it = bases_.erase(it);
      continue;
    }
    if (it->first.kind == Base::Kind::Prime) {
      // fold the integer part of the exponent into the factor
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), it->second.get_num().get_mpz_t(), it->second.get_den().get_mpz_t());
      if (fl != 0) {
        if (!fl.fits_slong_p()) throw scalar_error("exponent out of range");
        Rational scale = rational_pow(Rational(it->first.prime), fl.get_si());
        factor_ = factor_ * GaussianRational(scale);
        it->second -= Rational(fl);
      }
      if (it->second == 0) {
        it = bases_.erase(it);
        continue;
      }
    }
    ++it;
  }
}

ScalarMonomial ScalarMonomial::operator*(const ScalarMonomial& o) const {
  GaussianRational f = factor_ * o.factor_;
  if (f.is_zero()) return ScalarMonomial();
  std::map<Base, Rational> b = bases_;
  for (const auto& [base, exp] : o.bases_) b[base] += exp;
  return ScalarMonomial(std::move(f), std::move(b));
}

ScalarMonomial ScalarMonomial::inverse() const {
  if (is_zero()) throw scalar_error("division by zero monomial");
  std::map<Base, Rational> b;
  for (const auto& [base, exp] : bases_) b[base] = -exp;
  return ScalarMonomial(factor_.inverse(), std::move(b));
}

bool ScalarMonomial::operator<(const ScalarMonomial& o) const {
  if (bases_ != o.bases_) {
    return std::lexicographical_compare(
        bases_.begin(), bases_.end(), o.bases_.begin(), o.bases_.end(),
        [](const auto& a, const auto& b) {
          if (!(a.first == b.first)) return a.first < b.first;
          return a.second < b.second;
        });
  }
  if (factor_.re != o.factor_.re) return factor_.re < o.factor_.re;
  return factor_.im < o.factor_.im;
}

std::complex<double> ScalarMonomial::eval(
    const std::map<std::string, std::complex<double>>& bindings) const {
  std::complex<double> value = factor_.to_complex();
  for (const auto& [base, exp] : bases_) {
    double e = exp.get_d();
    if (base.kind == Base::Kind::Prime) {
      value *= std::pow(static_cast<double>(base.prime), e);
      continue;
    }
    auto it = bindings.find(base.symbol);
    if (it == bindings.end()) throw scalar_error("unbound symbol: " + base.symbol);
    std::complex<double> z = it->second;
    if (is_integer(exp)) {
      long n = to_long(exp);
      std::complex<double> p(1.0, 0.0);
      std::complex<double> zz = n >= 0 ? z : 1.0 / z;
      for (long q = std::labs(n); q > 0; --q) p *= zz;
      value *= p;
    } else {
      if (z.imag() != 0.0 || z.real() <= 0.0)
        throw scalar_error("fractional power of non-positive binding for " + base.symbol);
      value *= std::pow(z.real(), e);
    }
  }
  return value;
}

std::string ScalarMonomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool printed = false;
  if (!(factor_ == GaussianRational(1)) || bases_.empty()) {
    out << factor_.to_string();
    printed = true;
  }
  for (const auto& [base, exp] : bases_) {
    if (printed) out << "*";
    out << base.to_string();
    if (exp != 1) {
      if (is_integer(exp) && exp > 0)
        out << "^" << rational_to_string(exp);
      else
        out << "^(" << rational_to_string(exp) << ")";
    }
    printed = true;
  }
  return out.str();
}

ScalarMonomial scalar_sqrt(const ScalarMonomial& m) {
  if (m.is_zero()) return ScalarMonomial();
  if (!m.factor_.is_real() || m.factor_.re <= 0)
    throw scalar_error("sqrt not representable: factor must be real and positive");
  std::map<Base, Rational> b;
  for (const auto& [base, exp] : m.bases_) b[base] = exp / 2;
  for (const auto& [p, e] : factorize(m.factor_.re.get_num()))
    b[Base::prime_base(p)] += frac(e, 2);
  for (const auto& [p, e] : factorize(m.factor_.re.get_den()))
    b[Base::prime_base(p)] -= frac(e, 2);
  return ScalarMonomial(GaussianRational(1), std::move(b));
}

ScalarSum::ScalarSum(ScalarMonomial m) {
  if (!m.is_zero()) terms_.push_back(std::move(m));
}

ScalarSum::ScalarSum(std::vector<ScalarMonomial> terms) : terms_(std::move(terms)) {
  canonicalize();
}

void ScalarSum::canonicalize() {
  std::sort(terms_.begin(), terms_.end());
  std::vector<ScalarMonomial> merged;
  for (auto& t : terms_) {
    if (t.is_zero()) continue;
    if (!merged.empty() && merged.back().same_bases(t)) {
      GaussianRational f = merged.back().factor() + t.factor();
      std::map<Base, Rational> b = merged.back().bases();
      merged.pop_back();
      if (!f.is_zero()) merged.emplace_back(std::move(f), std::move(b));
    } else {
      merged.push_back(std::move(t));
    }
  }
  terms_ = std::move(merged);
}

bool ScalarSum::is_one() const {
  return terms_.size() == 1 && terms_[0] == ScalarMonomial::one();
}

std::optional<ScalarMonomial> ScalarSum::as_monomial() const {
  if (terms_.empty()) return ScalarMonomial();
  if (terms_.size() == 1) return terms_[0];
  return std::nullopt;
}

std::optional<GaussianRational> ScalarSum::as_constant() const {
  if (terms_.empty()) return GaussianRational(Rational(0));
  if (terms_.size() == 1 && terms_[0].is_constant()) return terms_[0].factor();
  return std::nullopt;
}

ScalarSum ScalarSum::operator+(const ScalarSum& o) const {
  std::vector<ScalarMonomial> t = terms_;
  t.insert(t.end(), o.terms_.begin(), o.terms_.end());
  return ScalarSum(std::move(t));
}

ScalarSum ScalarSum::operator-() const {
  std::vector<ScalarMonomial> t;
  t.reserve(terms_.size());
  for (const auto& m : terms_) t.push_back(-m);
  return ScalarSum(std::move(t));
}

ScalarSum ScalarSum::operator-(const ScalarSum& o) const { return *this + (-o); }

ScalarSum ScalarSum::operator*(const ScalarSum& o) const {
  std::vector<ScalarMonomial> t;
  t.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) t.push_back(a * b);
  return ScalarSum(std::move(t));
}

bool ScalarSum::operator<(const ScalarSum& o) const {
  return std::lexicographical_compare(
      terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
      [](const ScalarMonomial& a, const ScalarMonomial& b) {
        if (a < b) return true;
        if (b < a) return false;
        return false;
      });
}

ScalarSum ScalarSum::pow(long e) const {
  if (e < 0) {
    auto m = as_monomial();
    if (!m) throw scalar_error("negative power of a non-monomial sum");
    ScalarSum inv(m->inverse());
    return inv.pow(-e);
  }
  ScalarSum result = ScalarSum::one();
  ScalarSum b = *this;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) result *= b;
    b *= b;
    n >>= 1;
  }
  return result;
}

std::complex<double> ScalarSum::eval(
    const std::map<std::string, std::complex<double>>& bindings) const {
  std::complex<double> total(0.0, 0.0);
  for (const auto& t : terms_) total += t.eval(bindings);
  return total;
}

std::string ScalarSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) out << " + ";
    out << terms_[i].to_string();
  }
  return out.str();
}

ScalarSum scalar_mul(const ScalarSum& a, const ScalarSum& b) { return a * b; }

ScalarSum scalar_div(const ScalarSum& a, const ScalarMonomial& m) {
  ScalarMonomial inv = m.inverse();
  std::vector<ScalarMonomial> t;
  t.reserve(a.terms().size());
  for (const auto& term : a.terms()) t.push_back(term * inv);
  return ScalarSum(std::move(t));
}

ScalarSum scalar_sqrt(const ScalarSum& s) {
  auto m = s.as_monomial();
  if (!m) throw scalar_error("sqrt not representable: not a monomial");
  return ScalarSum(scalar_sqrt(*m));
}

std::complex<double> scalar_eval(const ScalarSum& s,
                                 const std::map<std::string, std::complex<double>>& bindings) {
  return s.eval(bindings);
}

}  // namespace ll

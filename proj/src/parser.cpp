#include "ll/parser.hpp"

#include <cctype>

namespace ll {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  OperatorPoly parse_expression() {
    OperatorPoly value = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

  ScalarSum parse_monomial_only() {
    ScalarSum value = parse_monomial_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& message) const { throw parse_error(message, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  unsigned long parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  long parse_int() {
    skip_ws();
    bool neg = consume('-');
    unsigned long v = parse_uint();
    return neg ? -static_cast<long>(v) : static_cast<long>(v);
  }

  std::string parse_identifier() {
    skip_ws();
    if (pos_ >= text_.size() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      fail("expected an identifier");
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  // ---- operator grammar ----

  OperatorPoly parse_expr() {
    bool neg = consume('-');
    OperatorPoly value = parse_term();
    if (neg) value = -value;
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        value += parse_term();
      } else if (c == '-') {
        ++pos_;
        value -= parse_term();
      } else {
        return value;
      }
    }
  }

  OperatorPoly parse_term() {
    OperatorPoly value = parse_factor();
    while (consume('*')) value = op_mul(value, parse_factor());
    return value;
  }

  OperatorPoly parse_factor() {
    OperatorPoly atom = parse_atom();
    if (!consume('^')) return atom;
    long e = parse_int();
    if (e >= 0) return atom.pow(static_cast<int>(e));
    // negative exponents only make sense for invertible scalars
    ScalarSum s = as_pure_scalar(atom);
    return OperatorPoly::scalar(s.pow(e));
  }

  ScalarSum as_pure_scalar(const OperatorPoly& p) {
    if (p.is_zero()) fail("cannot invert zero");
    if (p.terms().size() != 1 || !(p.terms().begin()->first == OperatorKey{}))
      fail("negative power of a noncommutative factor");
    return p.terms().begin()->second;
  }

  OperatorPoly parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      OperatorPoly inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned long num = parse_uint();
      if (peek() == '/') {
        size_t save = pos_;
        ++pos_;
        skip_ws();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          unsigned long den = parse_uint();
          if (den == 0) fail("zero denominator");
          return OperatorPoly::scalar(ScalarSum::rational(frac(static_cast<long>(num),
                                                               static_cast<long>(den))));
        }
        pos_ = save;
      }
      return OperatorPoly::scalar(ScalarSum::rational(Rational(static_cast<long>(num))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = parse_identifier();
      if (name == "x") return OperatorPoly::x();
      if (name == "d") return OperatorPoly::dx();
      if (name == "P") return OperatorPoly::parity();
      if (name == "I") return OperatorPoly::identity();
      if (name == "gp") return OperatorPoly::blade(GammaBlade::GammaPlus);
      if (name == "gm") return OperatorPoly::blade(GammaBlade::GammaMinus);
      if (name == "g1") return OperatorPoly::blade(GammaBlade::Gamma1);
      if (name == "i") return OperatorPoly::scalar(ScalarSum::i());
      if (name == "sqrt") {
        expect('(');
        ScalarSum inner = parse_monomial_expr();
        expect(')');
        size_t at = pos_;
        try {
          return OperatorPoly::scalar(scalar_sqrt(inner));
        } catch (const scalar_error& e) {
          throw parse_error(e.what(), at);
        }
      }
      return OperatorPoly::scalar(ScalarSum::symbol(name));
    }
    fail("unexpected character");
  }

  // ---- scalar monomial grammar (sqrt interior) ----

  ScalarSum parse_monomial_expr() {
    ScalarSum value = parse_monomial_factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        value *= parse_monomial_factor();
      } else if (c == '/') {
        ++pos_;
        ScalarSum rhs = parse_monomial_factor();
        auto m = rhs.as_monomial();
        if (!m || m->is_zero()) fail("division requires a nonzero monomial");
        value = scalar_div(value, *m);
      } else {
        return value;
      }
    }
  }

  ScalarSum parse_monomial_factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    ScalarSum base;
    if (c == '(') {
      ++pos_;
      base = parse_monomial_expr();
      expect(')');
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = ScalarSum::rational(Rational(static_cast<long>(parse_uint())));
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = parse_identifier();
      if (name == "i" || name == "sqrt" || name == "x" || name == "d" || name == "P")
        fail("'" + name + "' is not allowed inside sqrt");
      if (name == "I")
        base = ScalarSum::one();
      else
        base = ScalarSum::symbol(name);
    } else {
      fail("unexpected character");
    }
    if (consume('^')) base = base.pow(parse_int());
    return base;
  }
};

}  // namespace

OperatorPoly parse_operator(const std::string& text) { return Parser(text).parse_expression(); }

ScalarSum parse_scalar_monomial(const std::string& text) { return Parser(text).parse_monomial_only(); }

namespace {

std::string render_rational(const Rational& r) {
  std::string s = r.get_str();  // "p" or "p/q"
  return s;
}

std::string render_gaussian(const GaussianRational& g) {
  if (g.im == 0) return render_rational(g.re);
  std::string im_part;
  if (g.im == 1)
    im_part = "i";
  else if (g.im == -1)
    im_part = "-i";
  else
    im_part = render_rational(g.im) + "*i";
  if (g.re == 0) return im_part;
  if (g.im > 0) return render_rational(g.re) + " + " + im_part;
  return render_rational(g.re) + " - " + (g.im == -1 ? "i" : render_rational(-g.im) + "*i");
}

std::string render_base(const Base& b) {
  return b.kind == Base::Kind::Prime ? std::to_string(b.prime) : b.symbol;
}

std::string render_scalar_monomial(const ScalarMonomial& m) {
  std::vector<std::string> pieces;
  std::vector<std::string> sqrt_bases;
  for (const auto& [base, exp] : m.bases()) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), exp.get_num().get_mpz_t(), exp.get_den().get_mpz_t());
    Rational fracpart = exp - Rational(fl);
    if (fracpart == Rational(1, 2)) {
      sqrt_bases.push_back(render_base(base));
    } else if (fracpart != 0) {
      throw scalar_error("cannot render exponent " + rational_to_string(exp) +
                         " in the operator grammar");
    }
    if (fl != 0) {
      if (fl == 1)
        pieces.push_back(render_base(base));
      else
        pieces.push_back(render_base(base) + "^" + fl.get_str());
    }
  }
  if (!sqrt_bases.empty()) {
    std::string arg = sqrt_bases[0];
    for (size_t i = 1; i < sqrt_bases.size(); ++i) arg += "*" + sqrt_bases[i];
    pieces.push_back("sqrt(" + arg + ")");
  }
  std::string out;
  const GaussianRational& f = m.factor();
  if (pieces.empty() || !(f == GaussianRational(1))) out = "(" + render_gaussian(f) + ")";
  for (const auto& p : pieces) {
    if (!out.empty()) out += "*";
    out += p;
  }
  return out;
}

std::string render_scalar_sum(const ScalarSum& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < s.terms().size(); ++i) {
    if (i) out += " + ";
    out += render_scalar_monomial(s.terms()[i]);
  }
  return out;
}

}  // namespace

std::string render_operator(const OperatorPoly& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : poly.terms()) {
    if (!first) out += " + ";
    first = false;
    std::string term = "(" + render_scalar_sum(coeff) + ")";
    if (key.x_pow) term += "*x" + (key.x_pow > 1 ? "^" + std::to_string(key.x_pow) : "");
    if (key.d_pow) term += "*d" + (key.d_pow > 1 ? "^" + std::to_string(key.d_pow) : "");
    if (key.parity) term += "*P";
    if (key.blade != GammaBlade::Id) term += "*" + blade_name(key.blade);
    out += term;
  }
  return out;
}

}  // namespace ll

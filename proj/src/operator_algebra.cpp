#include "ll/operator_algebra.hpp"

#include <sstream>

namespace ll {

std::string blade_name(GammaBlade g) {
  switch (g) {
    case GammaBlade::Id: return "I";
    case GammaBlade::GammaPlus: return "gp";
    case GammaBlade::GammaMinus: return "gm";
    case GammaBlade::Gamma1: return "g1";
  }
  return "?";
}

const BladeTable& BladeTable::standard() {
  static const BladeTable table = [] {
    BladeTable t{};
    auto set = [&t](GammaBlade a, GammaBlade b, GammaBlade r, Rational v) {
      t.c[static_cast<int>(a)][static_cast<int>(b)][static_cast<int>(r)] = std::move(v);
    };
    using B = GammaBlade;
    const Rational one(1), half(1, 2);
    for (B g : {B::Id, B::GammaPlus, B::GammaMinus, B::Gamma1}) {
      set(B::Id, g, g, one);
      if (g != B::Id) set(g, B::Id, g, one);
    }
    // gp gp = gm gm = 0
    set(B::GammaPlus, B::GammaMinus, B::Id, half);      // gp gm = (1/2)(1 + g1)
    set(B::GammaPlus, B::GammaMinus, B::Gamma1, half);
    set(B::GammaMinus, B::GammaPlus, B::Id, half);      // gm gp = (1/2)(1 - g1)
    set(B::GammaMinus, B::GammaPlus, B::Gamma1, -half);
    set(B::Gamma1, B::GammaPlus, B::GammaPlus, one);    // g1 gp = gp
    set(B::Gamma1, B::GammaMinus, B::GammaMinus, -one); // g1 gm = -gm
    set(B::GammaPlus, B::Gamma1, B::GammaPlus, -one);   // gp g1 = -gp
    set(B::GammaMinus, B::Gamma1, B::GammaMinus, one);  // gm g1 = gm
    set(B::Gamma1, B::Gamma1, B::Id, one);              // g1 g1 = 1
    return t;
  }();
  return table;
}

void OperatorPoly::add_term(OperatorKey key, ScalarSum coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorPoly OperatorPoly::monomial(OperatorKey key, ScalarSum coeff) {
  OperatorPoly p;
  p.add_term(key, std::move(coeff));
  return p;
}

OperatorPoly OperatorPoly::x(int power) { return monomial({power, 0, 0, GammaBlade::Id}, ScalarSum::one()); }
OperatorPoly OperatorPoly::dx(int power) { return monomial({0, power, 0, GammaBlade::Id}, ScalarSum::one()); }
OperatorPoly OperatorPoly::parity() { return monomial({0, 0, 1, GammaBlade::Id}, ScalarSum::one()); }
OperatorPoly OperatorPoly::blade(GammaBlade g) { return monomial({0, 0, 0, g}, ScalarSum::one()); }
OperatorPoly OperatorPoly::scalar(ScalarSum s) { return monomial({}, std::move(s)); }

OperatorPoly OperatorPoly::operator+(const OperatorPoly& o) const {
  OperatorPoly out = *this;
  out += o;
  return out;
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& o) {
  for (const auto& [key, coeff] : o.terms_) add_term(key, coeff);
  return *this;
}

OperatorPoly OperatorPoly::operator-() const {
  OperatorPoly out;
  for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, -coeff);
  return out;
}

OperatorPoly OperatorPoly::operator-(const OperatorPoly& o) const { return *this + (-o); }

OperatorPoly OperatorPoly::operator*(const OperatorPoly& o) const { return op_mul(*this, o); }

OperatorPoly OperatorPoly::scaled(const ScalarSum& s) const {
  OperatorPoly out;
  for (const auto& [key, coeff] : terms_) out.add_term(key, coeff * s);
  return out;
}

OperatorPoly OperatorPoly::pow(int e) const {
  if (e < 0) throw scalar_error("negative operator power");
  OperatorPoly out = identity();
  for (int i = 0; i < e; ++i) out = op_mul(out, *this);
  return out;
}

namespace {

Rational binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

Rational falling(int m, int k) {
  mpz_class r(1);
  for (int i = 0; i < k; ++i) r *= (m - i);
  return Rational(r);
}

}  // namespace

OperatorPoly op_mul(const OperatorPoly& a, const OperatorPoly& b, const BladeTable& table) {
  OperatorPoly out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      ScalarSum coeff = ca * cb;
      // move P^p1 across x^m2 d^n2
      if (ka.parity && ((kb.x_pow + kb.d_pow) & 1)) coeff = -coeff;
      int parity = (ka.parity + kb.parity) & 1;
      const int jmax = std::min(ka.d_pow, kb.x_pow);
      for (int j = 0; j <= jmax; ++j) {
        ScalarSum cj = coeff * ScalarSum::rational(binomial(ka.d_pow, j) * falling(kb.x_pow, j));
        for (int r = 0; r < 4; ++r) {
          const Rational& cr = table.at(ka.blade, kb.blade, static_cast<GammaBlade>(r));
          if (cr == 0) continue;
          OperatorKey key{ka.x_pow + kb.x_pow - j, ka.d_pow + kb.d_pow - j, parity,
                          static_cast<GammaBlade>(r)};
          out.add_term(key, cj * ScalarSum::rational(cr));
        }
      }
    }
  }
  return out;
}

OperatorPoly op_bracket(const OperatorPoly& a, const OperatorPoly& b, int epsilon,
                        const BladeTable& table) {
  if (epsilon != 1 && epsilon != -1) throw scalar_error("bracket epsilon must be +1 or -1");
  OperatorPoly ab = op_mul(a, b, table);
  OperatorPoly ba = op_mul(b, a, table);
  return epsilon == 1 ? ab - ba : ab + ba;
}

bool op_equal(const OperatorPoly& a, const OperatorPoly& b) { return a == b; }

std::string OperatorPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, coeff] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << coeff.to_string() << ")";
    if (key.x_pow) out << "*x" << (key.x_pow > 1 ? "^" + std::to_string(key.x_pow) : "");
    if (key.d_pow) out << "*d" << (key.d_pow > 1 ? "^" + std::to_string(key.d_pow) : "");
    if (key.parity) out << "*P";
    if (key.blade != GammaBlade::Id) out << "*" << blade_name(key.blade);
  }
  return out.str();
}

namespace ops {

namespace {

ScalarSum sqrt_of(const ScalarSum& s) { return scalar_sqrt(s); }

ScalarSum inv_beta() { return ScalarSum::symbol("beta", Rational(-1)); }

}  // namespace

ScalarSum beta() { return ScalarSum::symbol("beta"); }
ScalarSum spring_k() { return ScalarSum::symbol("k"); }

ScalarSum omega() { return sqrt_of(ScalarSum::rational(2) * spring_k() * inv_beta()); }

OperatorPoly momentum() {
  return OperatorPoly::monomial({0, 1, 0, GammaBlade::Id}, -ScalarSum::i());
}

OperatorPoly schrodinger_free() {
  return OperatorPoly::monomial({0, 2, 0, GammaBlade::Id}, -inv_beta());
}

OperatorPoly d_plus() {
  return OperatorPoly::monomial({0, 2, 0, GammaBlade::GammaPlus}, -inv_beta()) +
         OperatorPoly::monomial({0, 0, 0, GammaBlade::GammaMinus}, beta());
}

OperatorPoly parity1() {
  return OperatorPoly::monomial({0, 0, 1, GammaBlade::Gamma1}, ScalarSum::one());
}

OperatorPoly hll_free() {
  return OperatorPoly::monomial({0, 0, 0, GammaBlade::GammaMinus}, beta()) +
         OperatorPoly::monomial({0, 1, 0, GammaBlade::Gamma1}, -ScalarSum::i());
}

OperatorPoly hll_harmonic() {
  return hll_free() +
         OperatorPoly::monomial({2, 0, 0, GammaBlade::GammaPlus},
                                ScalarSum::rational(Rational(1, 2)) * spring_k());
}

OperatorPoly hsch_harmonic() {
  return OperatorPoly::monomial({0, 2, 0, GammaBlade::Id}, -inv_beta()) +
         OperatorPoly::monomial({2, 0, 0, GammaBlade::Id},
                                ScalarSum::rational(Rational(1, 2)) * spring_k()) +
         OperatorPoly::monomial({1, 0, 0, GammaBlade::GammaPlus},
                                -ScalarSum::i() * spring_k() * inv_beta());
}

OperatorPoly ladder_b() {
  ScalarSum alpha = sqrt_of(beta() * spring_k() * ScalarSum::rational(Rational(1, 2)));
  ScalarSum mu = sqrt_of(spring_k() * inv_beta() * ScalarSum::rational(Rational(1, 2)));
  return OperatorPoly::monomial({1, 0, 0, GammaBlade::Id}, alpha) +
         OperatorPoly::monomial({0, 1, 0, GammaBlade::Id}, ScalarSum::one()) +
         OperatorPoly::monomial({0, 0, 0, GammaBlade::GammaPlus}, -ScalarSum::i() * mu);
}

OperatorPoly ladder_b_dagger() {
  ScalarSum alpha = sqrt_of(beta() * spring_k() * ScalarSum::rational(Rational(1, 2)));
  ScalarSum mu = sqrt_of(spring_k() * inv_beta() * ScalarSum::rational(Rational(1, 2)));
  return OperatorPoly::monomial({1, 0, 0, GammaBlade::Id}, alpha) +
         OperatorPoly::monomial({0, 1, 0, GammaBlade::Id}, -ScalarSum::one()) +
         OperatorPoly::monomial({0, 0, 0, GammaBlade::GammaPlus}, -ScalarSum::i() * mu);
}

OperatorPoly charge_c() {
  // beta*I - 2 gp Hll; equals -2i gp d - beta g1 and anticommutes with Hll.
  return OperatorPoly::monomial({0, 1, 0, GammaBlade::GammaPlus},
                                ScalarSum::rational(-2) * ScalarSum::i()) +
         OperatorPoly::monomial({0, 0, 0, GammaBlade::Gamma1}, -beta());
}

}  // namespace ops

}  // namespace ll

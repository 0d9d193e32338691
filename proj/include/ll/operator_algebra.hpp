#pragma once

#include <array>
#include <map>
#include <string>

#include "ll/scalar.hpp"

namespace ll {

/// The four-dimensional gamma algebra of the (1+1)-d equation.
enum class GammaBlade : int { Id = 0, GammaPlus = 1, GammaMinus = 2, Gamma1 = 3 };

std::string blade_name(GammaBlade g);

/// Structure constants of the blade product: product(a,b) = sum_r c[a][b][r] * blade r.
/// Kept as plain data so tests can probe sign mutations.
struct BladeTable {
  std::array<std::array<std::array<Rational, 4>, 4>, 4> c;

  static const BladeTable& standard();
  const Rational& at(GammaBlade a, GammaBlade b, GammaBlade r) const {
    return c[static_cast<int>(a)][static_cast<int>(b)][static_cast<int>(r)];
  }
};

/// Normal-order key x^m d^n P^p * blade.
struct OperatorKey {
  int x_pow = 0;
  int d_pow = 0;
  int parity = 0;  // 0 or 1
  GammaBlade blade = GammaBlade::Id;

  bool operator==(const OperatorKey& o) const {
    return x_pow == o.x_pow && d_pow == o.d_pow && parity == o.parity && blade == o.blade;
  }
  bool operator<(const OperatorKey& o) const {
    if (x_pow != o.x_pow) return x_pow < o.x_pow;
    if (d_pow != o.d_pow) return d_pow < o.d_pow;
    if (parity != o.parity) return parity < o.parity;
    return blade < o.blade;
  }
};

/// Noncommutative polynomial in normal form; equality is structural.
class OperatorPoly {
 public:
  OperatorPoly() = default;

  static OperatorPoly zero() { return {}; }
  static OperatorPoly identity() { return monomial({}, ScalarSum::one()); }
  static OperatorPoly x(int power = 1);
  static OperatorPoly dx(int power = 1);
  static OperatorPoly parity();
  static OperatorPoly blade(GammaBlade g);
  static OperatorPoly scalar(ScalarSum s);
  static OperatorPoly monomial(OperatorKey key, ScalarSum coeff);

  const std::map<OperatorKey, ScalarSum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  OperatorPoly operator+(const OperatorPoly& o) const;
  OperatorPoly operator-(const OperatorPoly& o) const;
  OperatorPoly operator-() const;
  OperatorPoly operator*(const OperatorPoly& o) const;
  OperatorPoly& operator+=(const OperatorPoly& o);
  OperatorPoly& operator-=(const OperatorPoly& o) { return *this += -o; }

  OperatorPoly scaled(const ScalarSum& s) const;
  OperatorPoly pow(int e) const;

  bool operator==(const OperatorPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const OperatorPoly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::map<OperatorKey, ScalarSum> terms_;
  void add_term(OperatorKey key, ScalarSum coeff);
  friend OperatorPoly op_mul(const OperatorPoly&, const OperatorPoly&, const BladeTable&);
};

/// Product in normal form.  Rewrites: dx = xd + 1, Px = -xP, Pd = -dP,
/// P^2 = 1, blades commute with x, d, P and multiply by the table.
OperatorPoly op_mul(const OperatorPoly& a, const OperatorPoly& b,
                    const BladeTable& table = BladeTable::standard());

/// AB - epsilon * BA; epsilon = +1 commutator, -1 anticommutator.
OperatorPoly op_bracket(const OperatorPoly& a, const OperatorPoly& b, int epsilon,
                        const BladeTable& table = BladeTable::standard());

bool op_equal(const OperatorPoly& a, const OperatorPoly& b);

/// Named operators of the free and harmonic problems.  All coefficients
/// are exact; beta and k enter as symbols.
namespace ops {

ScalarSum beta();
ScalarSum spring_k();
/// sqrt(2k/beta), the angular frequency.
ScalarSum omega();

OperatorPoly momentum();            // -i d
OperatorPoly schrodinger_free();    // -(1/beta) d^2
OperatorPoly d_plus();              // -gp (1/beta) d^2 + gm beta
OperatorPoly parity1();             // g1 P
OperatorPoly hll_free();            // gm beta - g1 i d
OperatorPoly hll_harmonic();        // gm beta - g1 i d + gp (k/2) x^2
OperatorPoly hsch_harmonic();       // -(1/beta) d^2 + (k/2) x^2 - gp i (k/beta) x
OperatorPoly ladder_b();            // sqrt(beta k/2) x + d - gp i sqrt(k/(2 beta))
OperatorPoly ladder_b_dagger();     // sqrt(beta k/2) x - d - gp i sqrt(k/(2 beta))
OperatorPoly charge_c();            // beta - 2 gp Hll  (= -2i gp d - beta g1)

}  // namespace ops

}  // namespace ll

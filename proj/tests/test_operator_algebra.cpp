#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ll/operator_algebra.hpp"
#include "ll/parser.hpp"

using namespace ll;

namespace {

ScalarSum beta() { return ops::beta(); }

OperatorPoly gp() { return OperatorPoly::blade(GammaBlade::GammaPlus); }
OperatorPoly gm() { return OperatorPoly::blade(GammaBlade::GammaMinus); }
OperatorPoly g1() { return OperatorPoly::blade(GammaBlade::Gamma1); }

OperatorPoly random_monomial_op(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 4), bit(0, 1), bl(0, 3), coef(-2, 2);
  int x = deg(rng), d = deg(rng);
  if (x + d > 4) d = 0;
  long c = coef(rng);
  if (c == 0) c = 1;
  ScalarSum coeff = ScalarSum::rational(Rational(c));
  if (bit(rng)) coeff *= ScalarSum::i();
  if (bit(rng)) coeff *= ScalarSum::symbol("beta");
  return OperatorPoly::monomial({x, d, bit(rng), static_cast<GammaBlade>(bl(rng))}, coeff);
}

}  // namespace

TEST_CASE("product rule: d * x = x d + 1") {
  CHECK(op_mul(OperatorPoly::dx(), OperatorPoly::x()) ==
        op_mul(OperatorPoly::x(), OperatorPoly::dx()) + OperatorPoly::identity());
}

TEST_CASE("blade products follow the table") {
  ScalarSum half = ScalarSum::rational(Rational(1, 2));
  CHECK(op_mul(gp(), gm()) == OperatorPoly::identity().scaled(half) + g1().scaled(half));
  CHECK(op_mul(gm(), gp()) == OperatorPoly::identity().scaled(half) - g1().scaled(half));
  CHECK(op_mul(gp(), gp()).is_zero());
  CHECK(op_mul(gm(), gm()).is_zero());
  CHECK(op_mul(g1(), g1()) == OperatorPoly::identity());
  CHECK(op_mul(g1(), gp()) == gp());
  CHECK(op_mul(gp(), g1()) == -gp());
  CHECK(op_mul(g1(), gm()) == -gm());
  CHECK(op_mul(gm(), g1()) == gm());
}

TEST_CASE("parity anticommutes with x and d, commutes with blades") {
  OperatorPoly P = OperatorPoly::parity();
  OperatorPoly xgp = op_mul(OperatorPoly::x(), gp());
  CHECK(op_mul(P, xgp) == -op_mul(xgp, P));
  CHECK(op_mul(P, P) == OperatorPoly::identity());
  CHECK(op_mul(P, gp()) == op_mul(gp(), P));
}

TEST_CASE("normal ordering of higher powers") {
  // d^2 x^2 = x^2 d^2 + 4 x d + 2
  OperatorPoly lhs = op_mul(OperatorPoly::dx(2), OperatorPoly::x(2));
  OperatorPoly rhs = op_mul(OperatorPoly::x(2), OperatorPoly::dx(2)) +
                     op_mul(OperatorPoly::x(), OperatorPoly::dx()).scaled(ScalarSum::rational(4)) +
                     OperatorPoly::scalar(ScalarSum::rational(2));
  CHECK(lhs == rhs);
}

TEST_CASE("bracket basics") {
  OperatorPoly P = ops::momentum();
  // {P, P} = -2 d^2 = 2 beta Hsch
  OperatorPoly anti = op_bracket(P, P, -1);
  CHECK(anti == OperatorPoly::dx(2).scaled(ScalarSum::rational(-2)));
  CHECK(anti == ops::schrodinger_free().scaled(ScalarSum::rational(2) * beta()));
  CHECK(op_bracket(P, ops::d_plus(), 1).is_zero());
  OperatorPoly a = random_monomial_op(*new std::mt19937(7));
  CHECK(op_bracket(a, a, 1).is_zero());
}

TEST_CASE("op_equal distinguishes normal forms") {
  CHECK(op_equal(op_mul(g1(), gp()), -op_mul(gp(), g1())));
  CHECK_FALSE(op_equal(op_mul(OperatorPoly::x(), OperatorPoly::dx()),
                       op_mul(OperatorPoly::dx(), OperatorPoly::x())));
}

TEST_CASE("beta + c = 2 gm-side product of Hll and gp") {
  // The nearly idempotent combination from the harmonic construction.
  OperatorPoly lhs = OperatorPoly::scalar(beta()) + ops::charge_c();
  CHECK(op_equal(lhs, op_mul(ops::hll_harmonic(), gp()).scaled(ScalarSum::rational(2))));
  // and c itself is beta - 2 gp Hll
  CHECK(op_equal(ops::charge_c(),
                 OperatorPoly::scalar(beta()) -
                     op_mul(gp(), ops::hll_harmonic()).scaled(ScalarSum::rational(2))));
}

TEST_CASE("(beta+c)^2 = 2 beta (beta+c)") {
  OperatorPoly bc = OperatorPoly::scalar(beta()) + ops::charge_c();
  CHECK(op_equal(op_mul(bc, bc), bc.scaled(ScalarSum::rational(2) * beta())));
}

TEST_CASE("associativity on random monomials") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 250; ++trial) {
    OperatorPoly a = random_monomial_op(rng), b = random_monomial_op(rng),
                 c = random_monomial_op(rng);
    CHECK(op_mul(op_mul(a, b), c) == op_mul(a, op_mul(b, c)));
  }
}

TEST_CASE("full relation table of the free-equation operators") {
  OperatorPoly P = ops::momentum(), D = ops::d_plus(), P1 = ops::parity1(),
               Hs = ops::schrodinger_free(), I = OperatorPoly::identity();
  ScalarSum two = ScalarSum::rational(2);
  CHECK(op_bracket(P, P, 1).is_zero());
  CHECK(op_bracket(P, P, -1) == Hs.scaled(two * beta()));
  CHECK(op_bracket(D, D, 1).is_zero());
  CHECK(op_bracket(D, D, -1) == Hs.scaled(two * beta()));
  CHECK(op_bracket(P1, P1, 1).is_zero());
  CHECK(op_bracket(P1, P1, -1) == I.scaled(two));
  CHECK(op_bracket(P, D, 1).is_zero());
  CHECK(op_bracket(P, D, -1) == op_mul(D, P).scaled(two));
  CHECK(op_bracket(P, P1, 1) == op_mul(P1, P).scaled(-two));
  CHECK(op_bracket(P, P1, -1).is_zero());
  CHECK(op_bracket(D, P1, 1) == op_mul(P1, D).scaled(-two));
  CHECK(op_bracket(D, P1, -1).is_zero());
  for (const auto& X : {P, D, P1}) CHECK(op_bracket(Hs, X, 1).is_zero());
}

TEST_CASE("harmonic operator relations") {
  OperatorPoly H = ops::hll_harmonic(), Hs = ops::hsch_harmonic(), b = ops::ladder_b(),
               bd = ops::ladder_b_dagger(), c = ops::charge_c(), I = OperatorPoly::identity();
  OperatorPoly gpb = op_mul(gp(), b), gpbd = op_mul(gp(), bd);
  ScalarSum two = ScalarSum::rational(2);
  ScalarSum w = ops::omega();

  CHECK(op_bracket(H, H, -1) == Hs.scaled(two * beta()));
  CHECK(op_bracket(b, bd, -1) == Hs.scaled(two * beta()));
  CHECK(op_bracket(gp(), H, -1) == I.scaled(beta()));
  CHECK(op_bracket(gp(), b, 1).is_zero());
  CHECK(op_bracket(gp(), bd, 1).is_zero());
  CHECK(op_bracket(gp(), c, -1).is_zero());
  CHECK(op_bracket(b, c, 1).is_zero());
  CHECK(op_bracket(bd, c, 1).is_zero());
  CHECK(op_bracket(c, gpb, -1).is_zero());
  CHECK(op_bracket(c, gpbd, -1).is_zero());
  CHECK(op_bracket(c, c, -1) == I.scaled(two * beta() * beta()));
  CHECK(op_bracket(b, gpb, -1) == op_mul(gp(), b.pow(2)).scaled(two));
  CHECK(op_bracket(bd, gpbd, -1) == op_mul(gp(), bd.pow(2)).scaled(two));
  CHECK(op_bracket(b, gpbd, -1) == op_mul(gp(), Hs).scaled(two * beta()));
  CHECK(op_bracket(bd, gpb, -1) == op_mul(gp(), Hs).scaled(two * beta()));
  CHECK(op_bracket(gpb, gpbd, 1).is_zero());
  CHECK(op_bracket(b, bd, 1) ==
        I.scaled(scalar_sqrt(two * beta() * ops::spring_k())));
  CHECK(op_bracket(H, b, 1) == gpb.scaled(-w));
  CHECK(op_bracket(H, bd, 1) == gpbd.scaled(w));
  CHECK(op_bracket(H, c, -1).is_zero());
  CHECK(op_bracket(H, gpb, -1) == b.scaled(beta()));
  CHECK(op_bracket(H, gpbd, -1) == bd.scaled(beta()));
}

TEST_CASE("parser reproduces the harmonic hamiltonian") {
  OperatorPoly parsed = parse_operator("gm*beta - i*g1*d + gp*(1/2)*k*x^2");
  CHECK(parsed == ops::hll_harmonic());
}

TEST_CASE("parser handles sqrt coefficients") {
  OperatorPoly parsed = parse_operator("sqrt(2*k/beta)");
  CHECK(parsed == OperatorPoly::scalar(ops::omega()));
  CHECK(parse_operator("sqrt(9/4)") == OperatorPoly::scalar(ScalarSum::rational(Rational(3, 2))));
  CHECK(parse_operator("sqrt(k/(2*beta))*x") ==
        OperatorPoly::x().scaled(scalar_sqrt(ops::spring_k() * ScalarSum::symbol("beta", Rational(-1)) *
                                             ScalarSum::rational(Rational(1, 2)))));
}

TEST_CASE("parser errors carry byte offsets") {
  CHECK_THROWS_AS(parse_operator("x + + x"), parse_error);
  try {
    parse_operator("x + + x");
  } catch (const parse_error& e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(parse_operator("sqrt(x)"), parse_error);
  CHECK_THROWS_AS(parse_operator("x^"), parse_error);
  CHECK_THROWS_AS(parse_operator(""), parse_error);
  CHECK_THROWS_AS(parse_operator("x^-1"), parse_error);
}

TEST_CASE("parser accepts negative powers of scalars") {
  CHECK(parse_operator("beta^-1") == OperatorPoly::scalar(ScalarSum::symbol("beta", Rational(-1))));
  CHECK(parse_operator("-(gp*beta^-1)*d^2 + gm*beta") == ops::d_plus());
}

TEST_CASE("parsed user symbols multiply commutatively") {
  OperatorPoly p = parse_operator("a0*x*b0");
  OperatorPoly q = parse_operator("b0*a0*x");
  CHECK(p == q);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ll/scalar.hpp"

using namespace ll;

namespace {

ScalarSum sym(const std::string& n, long num = 1, long den = 1) {
  return ScalarSum::symbol(n, frac(num, den));
}

// Random monomial over a small pool of symbols and primes.
ScalarMonomial random_monomial(std::mt19937& rng, bool positive_real = false) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3), pick(0, 4), expo(-2, 2);
  Rational re = frac(num(rng), den(rng));
  if (positive_real) {
    if (re == 0) re = 1;
    re = abs(re);
  }
  Rational im = positive_real ? Rational(0) : frac(num(rng), den(rng));
  std::map<Base, Rational> bases;
  const std::string pool[] = {"beta", "k", "E"};
  for (const auto& s : pool)
    if (pick(rng) == 0) {
      Rational e = frac(expo(rng), 2);
      if (e != 0) bases[Base::sym(s)] = e;
    }
  if (pick(rng) == 0) bases[Base::prime_base(2)] = Rational(1, 2);
  return ScalarMonomial(GaussianRational(re, im), bases);
}

ScalarSum random_sum(std::mt19937& rng) {
  std::uniform_int_distribution<int> n(0, 3);
  std::vector<ScalarMonomial> terms;
  int count = n(rng);
  for (int i = 0; i < count; ++i) terms.push_back(random_monomial(rng));
  return ScalarSum(std::move(terms));
}

}  // namespace

TEST_CASE("multiplication merges exponents") {
  ScalarSum a = sym("E", 1, 2) * sym("beta", -1, 2);
  ScalarSum b = sym("E", 1, 2) * sym("beta", 1, 2);
  CHECK(a * b == sym("E"));
}

TEST_CASE("zero annihilates") {
  ScalarSum any = sym("beta") + ScalarSum::i() * sym("k", 3, 2);
  CHECK((ScalarSum::zero() * any).is_zero());
}

TEST_CASE("gaussian unit squares to -1") {
  CHECK(ScalarSum::i() * ScalarSum::i() == ScalarSum::rational(Rational(-1)));
}

TEST_CASE("sqrt of E*beta") {
  auto m = (sym("E") * sym("beta")).as_monomial();
  REQUIRE(m);
  ScalarSum r(scalar_sqrt(*m));
  CHECK(r == sym("E", 1, 2) * sym("beta", 1, 2));
  CHECK(r * r == sym("E") * sym("beta"));
}

TEST_CASE("sqrt of 2k/beta is the angular frequency") {
  auto m = (ScalarSum::rational(2) * sym("k") * sym("beta", -1)).as_monomial();
  REQUIRE(m);
  ScalarMonomial w = scalar_sqrt(*m);
  // 2^(1/2) k^(1/2) beta^(-1/2)
  CHECK(w.factor() == GaussianRational(1));
  REQUIRE(w.bases().size() == 3);
  CHECK(w.bases().at(Base::prime_base(2)) == Rational(1, 2));
  CHECK(w.bases().at(Base::sym("k")) == Rational(1, 2));
  CHECK(w.bases().at(Base::sym("beta")) == Rational(-1, 2));
  CHECK(ScalarSum(w * w) == ScalarSum::rational(2) * sym("k") * sym("beta", -1));
}

TEST_CASE("sqrt of a perfect square is rational") {
  auto m = ScalarSum::rational(Rational(9, 4)).as_monomial();
  REQUIRE(m);
  CHECK(ScalarSum(scalar_sqrt(*m)) == ScalarSum::rational(Rational(3, 2)));
}

TEST_CASE("sqrt rejects bad input") {
  CHECK_THROWS_AS(scalar_sqrt(ScalarSum::rational(-1)), scalar_error);
  CHECK_THROWS_AS(scalar_sqrt(ScalarSum::i()), scalar_error);
  CHECK_THROWS_AS(scalar_sqrt(sym("E") + sym("beta")), scalar_error);
}

TEST_CASE("eval of omega at k=1 beta=2") {
  auto m = (ScalarSum::rational(2) * sym("k") * sym("beta", -1)).as_monomial();
  ScalarSum w(scalar_sqrt(*m));
  auto v = scalar_eval(w, {{"k", 1.0}, {"beta", 2.0}});
  CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(v.imag() == doctest::Approx(0.0));
}

TEST_CASE("eval of i*beta") {
  auto v = scalar_eval(ScalarSum::i() * sym("beta"), {{"beta", 2.0}});
  CHECK(v.real() == doctest::Approx(0.0));
  CHECK(v.imag() == doctest::Approx(2.0));
}

TEST_CASE("eval errors") {
  CHECK_THROWS_AS(scalar_eval(sym("E"), {}), scalar_error);
  CHECK_THROWS_AS(scalar_eval(sym("E", 1, 2), {{"E", -1.0}}), scalar_error);
}

TEST_CASE("division by a monomial") {
  auto beta = sym("beta").as_monomial();
  REQUIRE(beta);
  CHECK(scalar_div(ScalarSum::rational(2) * sym("beta") * sym("E"), *beta) ==
        ScalarSum::rational(2) * sym("E"));
  CHECK(scalar_div(sym("E") + sym("beta"), *beta) ==
        sym("E") * sym("beta", -1) + ScalarSum::one());
  CHECK_THROWS_AS(scalar_div(sym("E"), ScalarMonomial::zero()), scalar_error);
}

TEST_CASE("prime bases fold integer powers into the factor") {
  // 2^(1/2) * 2^(1/2) = 2 with no leftover prime base
  ScalarMonomial half(GaussianRational(1), {{Base::prime_base(2), Rational(1, 2)}});
  ScalarMonomial two = half * half;
  CHECK(two.factor() == GaussianRational(2));
  CHECK(two.bases().empty());
}

TEST_CASE("ring laws on random values") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    ScalarSum a = random_sum(rng), b = random_sum(rng), c = random_sum(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("sqrt squares back to its argument") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    ScalarMonomial m = random_monomial(rng, /*positive_real=*/true);
    ScalarMonomial r = scalar_sqrt(m);
    CHECK(r * r == m);
  }
}

TEST_CASE("eval is a ring homomorphism") {
  std::mt19937 rng(4242);
  std::map<std::string, std::complex<double>> bind{{"beta", 2.3}, {"k", 1.7}, {"E", 0.9}};
  for (int trial = 0; trial < 1000; ++trial) {
    ScalarSum a = random_sum(rng), b = random_sum(rng);
    auto va = scalar_eval(a, bind), vb = scalar_eval(b, bind);
    auto vmul = scalar_eval(a * b, bind);
    auto vadd = scalar_eval(a + b, bind);
    CHECK(std::abs(vmul - va * vb) <= 1e-12 * (1.0 + std::abs(va * vb)));
    CHECK(std::abs(vadd - (va + vb)) <= 1e-12 * (1.0 + std::abs(va + vb)));
  }
}

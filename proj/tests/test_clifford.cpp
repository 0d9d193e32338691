#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ll/clifford.hpp"

using namespace ll;

namespace {

bool all_pass(const std::vector<RelationCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace

TEST_CASE("generator squares follow the metric") {
  Signature sig{3};
  auto g0 = CliffordElement::generator(0), g1 = CliffordElement::generator(1);
  CHECK(geometric_product(g0, g0, sig) == CliffordElement::identity());
  CHECK(geometric_product(g1, g1, sig) == -CliffordElement::identity());
  // (gt0 gt1)^2 = +I
  auto g01 = geometric_product(g0, g1, sig);
  CHECK(geometric_product(g01, g01, sig) == CliffordElement::identity());
}

TEST_CASE("chirality phase and square") {
  // d=1: chi = i^2 gt0 gt1 = -gt0 gt1
  CliffordElement chi1 = chirality(1);
  CHECK(chi1 == CliffordElement::blade(0b11, ScalarSum::rational(-1)));
  CHECK(geometric_product(chi1, chi1, Signature{1}) == CliffordElement::identity());
  // d=3: phase i^9 = i
  CliffordElement chi3 = chirality(3);
  CHECK(chi3 == CliffordElement::blade(0b1111, ScalarSum::i()));
  CHECK(geometric_product(chi3, chi3, Signature{3}) == CliffordElement::identity());
}

TEST_CASE("chirality anticommutes with generators exactly when d is odd") {
  for (int d : {1, 3, 5}) {
    CAPTURE(d);
    CHECK(all_pass(verify_chirality(d)));
  }
  auto even = verify_chirality(2);
  // chi^2 = I still holds, the anticommutation entries fail
  CHECK(even.front().pass);
  int failures = 0;
  for (const auto& c : even)
    if (!c.pass) ++failures;
  CHECK(failures == 3);
}

TEST_CASE("constructed gammas satisfy the base relations for odd d") {
  for (int d : {1, 3, 5}) {
    CAPTURE(d);
    CHECK(all_pass(verify_ll_construction(d)));
  }
  CHECK_FALSE(all_pass(verify_ll_construction(2)));
  CHECK_THROWS_AS(construct_ll_gammas(2), clifford_error);
}

TEST_CASE("d=1 identification reproduces the blade product table") {
  CHECK(all_pass(verify_blade_table_match()));
  // a corrupted table must be detected
  BladeTable bad = BladeTable::standard();
  bad.c[static_cast<int>(GammaBlade::Gamma1)][static_cast<int>(GammaBlade::GammaPlus)]
       [static_cast<int>(GammaBlade::GammaPlus)] = Rational(-1);
  CHECK_FALSE(all_pass(verify_blade_table_match(bad)));
}

TEST_CASE("d=1 identification satisfies the oriented extended relations") {
  Signature sig{1};
  auto img = ll_blade_identification();
  auto mul = [&sig, &img](GammaBlade a, GammaBlade b) {
    return geometric_product(img.at(a), img.at(b), sig);
  };
  using B = GammaBlade;
  CHECK(mul(B::Gamma1, B::GammaPlus) == img.at(B::GammaPlus));
  CHECK(mul(B::GammaPlus, B::Gamma1) == -img.at(B::GammaPlus));
  ScalarSum half = ScalarSum::rational(frac(1, 2));
  CHECK(mul(B::GammaPlus, B::GammaMinus) ==
        (CliffordElement::identity() + img.at(B::Gamma1)).scaled(half));
  CHECK(mul(B::GammaMinus, B::GammaPlus) ==
        (CliffordElement::identity() - img.at(B::Gamma1)).scaled(half));
}

TEST_CASE("2x2 representation matches the matrix display") {
  MatrixRep rep = build_rep(1);
  CHECK(rep.image("gp").at(0, 1) == GaussianRational(1));
  CHECK(rep.image("gp").at(0, 0).is_zero());
  CHECK(rep.image("gp").at(1, 0).is_zero());
  CHECK(rep.image("gm").at(1, 0) == GaussianRational(1));
  CHECK(rep.image("g1").at(0, 0) == GaussianRational(1));
  CHECK(rep.image("g1").at(1, 1) == GaussianRational(-1));
  CHECK(all_pass(verify_rep(rep, base_gamma_relations(1))));
  CHECK(all_pass(verify_rep(rep, extended_gamma_relations())));
}

TEST_CASE("g1 gp - gp vanishes entrywise in the 2x2 rep") {
  MatrixRep rep = build_rep(1);
  Matrix residual = rep.image("g1") * rep.image("gp") - rep.image("gp");
  CHECK(residual.is_zero());
}

TEST_CASE("Dirac representation satisfies the metric relations") {
  MatrixRep rep = build_rep(3);
  CHECK(all_pass(verify_rep(rep, metric_relations(3))));
  Matrix sq = rep.image("gt1") * rep.image("gt1");
  CHECK(sq == Matrix::identity(4).scaled(GaussianRational(-1)));
  CHECK_THROWS_AS(build_rep(2), clifford_error);
}

TEST_CASE("constructed d=3 gammas pass the base relations entrywise") {
  MatrixRep rep = with_ll_gamma_images(build_rep(3), 3);
  CHECK(all_pass(verify_rep(rep, base_gamma_relations(3))));
}

TEST_CASE("verify_rep flags a broken representation") {
  MatrixRep rep = build_rep(1);
  rep.images["gp"] = Matrix::identity(2);
  auto checks = verify_rep(rep, base_gamma_relations(1));
  CHECK_FALSE(all_pass(checks));
  MatrixRep missing;
  missing.dim = 2;
  CHECK_THROWS_AS(verify_rep(missing, base_gamma_relations(1)), clifford_error);
}

#include "ll/checks.hpp"

#include <cmath>
#include <sstream>

namespace ll::checks {

namespace {

constexpr const char* kBaseSet = "are gamma matrices satisfying";
constexpr const char* kExtendedSet = "also satisfy the following relations";
constexpr const char* kRep2x2 = "such a representation (as used";
constexpr const char* kTable33 = "the complete set of commutation";
constexpr const char* kTable4 = "relations between these operators that";
constexpr const char* kIdempotent = "it is nearly idempotent";
constexpr const char* kSimplify = "can simplify this expression";
constexpr const char* kCloses = "closes to form a colour";
constexpr const char* kTrivialA = "is somewhat trivial because";
constexpr const char* kDefineL = "To this end, define";
constexpr const char* kJacobi = "more general definitions of colour";
constexpr const char* kOde = "we obtain a coupled ODE";
constexpr const char* kOdeSolution = "for some constants";
constexpr const char* kEigenvectors = "the linearly independent eigenvectors";
constexpr const char* kIndeedSolution = "is indeed a solution";
constexpr const char* kSimultaneous = "finding the simultaneous eigenstates";
constexpr const char* kChoose = "then we can choose";
constexpr const char* kOrthonormal = "eigenstates \xCF\x88_k are orthonormal";
constexpr const char* kStillEigen = "is still an eigenvector";
constexpr const char* kAngularFreq = "is the angular frequency";
constexpr const char* kVacuum = "a vacuum state satisfying";
constexpr const char* kVacuumState = "Now, consider the state";
constexpr const char* kParityOp = "is an operator which leaves";
constexpr const char* kZeroOp = "then we obtain the zero";
constexpr const char* kInvertible = "is invertible so";
constexpr const char* kAnticommute = "anticommute, we have that";
constexpr const char* kConstruction = "satisfy the anti-commutation relations";
constexpr const char* kOddD = "Assuming that d is odd";
constexpr const char* kPauli = "are the Pauli matrices";
constexpr const char* kBlockExample = "E is an eigenvalue of the Schr\xC3\xB6" "dinger Hamiltonian";
constexpr const char* kPencil = "has no everywhere-defined bounded inverse";
constexpr const char* kSameSpectrum = "is exactly the spectrum of";
constexpr const char* kPositive = "positive and discrete";
constexpr const char* kInterior = "apply Hll to";

CheckResult op_identity(const std::string& name, const char* anchor, const OperatorPoly& lhs,
                        const OperatorPoly& rhs) {
  bool ok = lhs == rhs;
  return make_check(name, anchor, ok,
                    ok ? "" : "lhs = " + lhs.to_string() + " ; rhs = " + rhs.to_string());
}

CheckResult from_relation(const RelationCheck& rc, const char* anchor) {
  return make_check(rc.name, anchor, rc.pass, rc.detail);
}

OperatorPoly blade_poly(GammaBlade g) { return OperatorPoly::blade(g); }

}  // namespace

std::vector<CheckResult> gamma_relations(const BladeTable& table) {
  using B = GammaBlade;
  std::vector<CheckResult> out;
  OperatorPoly I = OperatorPoly::identity();
  OperatorPoly gp = blade_poly(B::GammaPlus), gm = blade_poly(B::GammaMinus),
               g1 = blade_poly(B::Gamma1);
  ScalarSum half = ScalarSum::rational(frac(1, 2));
  auto anti = [&table](const OperatorPoly& a, const OperatorPoly& b) {
    return op_bracket(a, b, -1, table);
  };
  auto mul = [&table](const OperatorPoly& a, const OperatorPoly& b) {
    return op_mul(a, b, table);
  };

  out.push_back(op_identity("{gp,gp} = 0", kBaseSet, anti(gp, gp), OperatorPoly::zero()));
  out.push_back(op_identity("{gm,gm} = 0", kBaseSet, anti(gm, gm), OperatorPoly::zero()));
  out.push_back(op_identity("{gp,gm} = I", kBaseSet, anti(gp, gm), I));
  out.push_back(op_identity("{gp,g1} = 0", kBaseSet, anti(gp, g1), OperatorPoly::zero()));
  out.push_back(op_identity("{gm,g1} = 0", kBaseSet, anti(gm, g1), OperatorPoly::zero()));
  out.push_back(op_identity("{g1,g1} = 2I", kBaseSet, anti(g1, g1),
                            I.scaled(ScalarSum::rational(2))));

  out.push_back(op_identity("gp^2 = 0", kExtendedSet, mul(gp, gp), OperatorPoly::zero()));
  out.push_back(op_identity("gm^2 = 0", kExtendedSet, mul(gm, gm), OperatorPoly::zero()));
  out.push_back(op_identity("g1^2 = I", kExtendedSet, mul(g1, g1), I));
  out.push_back(op_identity("gp gm = (I + g1)/2", kExtendedSet, mul(gp, gm),
                            I.scaled(half) + g1.scaled(half)));
  out.push_back(op_identity("gm gp = (I - g1)/2", kExtendedSet, mul(gm, gp),
                            I.scaled(half) - g1.scaled(half)));
  out.push_back(op_identity("g1 gp = gp", kExtendedSet, mul(g1, gp), gp));
  out.push_back(op_identity("gp g1 = -gp", kExtendedSet, mul(gp, g1), -gp));
  out.push_back(op_identity("g1 gm = -gm", kExtendedSet, mul(g1, gm), -gm));
  out.push_back(op_identity("gm g1 = gm", kExtendedSet, mul(gm, g1), gm));

  MatrixRep rep = build_rep(1);
  for (const auto& rc : verify_rep(rep, base_gamma_relations(1)))
    out.push_back(from_relation(rc, kRep2x2));
  for (const auto& rc : verify_rep(rep, extended_gamma_relations()))
    out.push_back(from_relation(rc, kRep2x2));
  // gamma_pm gamma_mp = (I +- g1)/2 holds entrywise (covered above), and the
  // identified Clifford construction reproduces the same product table.
  for (const auto& rc : verify_blade_table_match(table)) out.push_back(from_relation(rc, kExtendedSet));
  return out;
}

std::vector<CheckResult> relation_tables(const BladeTable& table) {
  std::vector<CheckResult> out;
  auto br = [&table](const OperatorPoly& a, const OperatorPoly& b, int eps) {
    return op_bracket(a, b, eps, table);
  };
  auto mul = [&table](const OperatorPoly& a, const OperatorPoly& b) {
    return op_mul(a, b, table);
  };
  ScalarSum two = ScalarSum::rational(2), beta = ops::beta(), w = ops::omega();
  OperatorPoly I = OperatorPoly::identity();
  OperatorPoly P = ops::momentum(), D = ops::d_plus(), P1 = ops::parity1(),
               Hs_free = ops::schrodinger_free();

  out.push_back(op_identity("[Phat,Phat] = 0", kTable33, br(P, P, 1), OperatorPoly::zero()));
  out.push_back(op_identity("{Phat,Phat} = 2 beta Hsch", kTable33, br(P, P, -1),
                            Hs_free.scaled(two * beta)));
  out.push_back(op_identity("[Dplus,Dplus] = 0", kTable33, br(D, D, 1), OperatorPoly::zero()));
  out.push_back(op_identity("{Dplus,Dplus} = 2 beta Hsch", kTable33, br(D, D, -1),
                            Hs_free.scaled(two * beta)));
  out.push_back(op_identity("[P1,P1] = 0", kTable33, br(P1, P1, 1), OperatorPoly::zero()));
  out.push_back(op_identity("{P1,P1} = 2I", kTable33, br(P1, P1, -1), I.scaled(two)));
  out.push_back(op_identity("[Phat,Dplus] = 0", kTable33, br(P, D, 1), OperatorPoly::zero()));
  out.push_back(op_identity("{Phat,Dplus} = 2 Dplus Phat", kTable33, br(P, D, -1),
                            mul(D, P).scaled(two)));
  out.push_back(op_identity("[Phat,P1] = -2 P1 Phat", kTable33, br(P, P1, 1),
                            mul(P1, P).scaled(-two)));
  out.push_back(op_identity("{Phat,P1} = 0", kTable33, br(P, P1, -1), OperatorPoly::zero()));
  out.push_back(op_identity("[Dplus,P1] = -2 P1 Dplus", kTable33, br(D, P1, 1),
                            mul(P1, D).scaled(-two)));
  out.push_back(op_identity("{Dplus,P1} = 0", kTable33, br(D, P1, -1), OperatorPoly::zero()));
  out.push_back(op_identity("[Hsch,Phat] = 0", kTable33, br(Hs_free, P, 1), OperatorPoly::zero()));
  out.push_back(op_identity("[Hsch,Dplus] = 0", kTable33, br(Hs_free, D, 1), OperatorPoly::zero()));
  out.push_back(op_identity("[Hsch,P1] = 0", kTable33, br(Hs_free, P1, 1), OperatorPoly::zero()));

  OperatorPoly H = ops::hll_harmonic(), Hs = ops::hsch_harmonic(), b = ops::ladder_b(),
               bd = ops::ladder_b_dagger(), c = ops::charge_c();
  OperatorPoly gp = blade_poly(GammaBlade::GammaPlus);
  OperatorPoly gpb = mul(gp, b), gpbd = mul(gp, bd);

  out.push_back(op_identity("{Hll,Hll} = 2 beta Hsch", kTable4, br(H, H, -1),
                            Hs.scaled(two * beta)));
  out.push_back(op_identity("{b,bd} = 2 beta Hsch", kTable4, br(b, bd, -1), Hs.scaled(two * beta)));
  out.push_back(op_identity("{gp,Hll} = beta I", kTable4, br(gp, H, -1), I.scaled(beta)));
  out.push_back(op_identity("[gp,b] = 0", kTable4, br(gp, b, 1), OperatorPoly::zero()));
  out.push_back(op_identity("[gp,bd] = 0", kTable4, br(gp, bd, 1), OperatorPoly::zero()));
  out.push_back(op_identity("{gp,c} = 0", kTable4, br(gp, c, -1), OperatorPoly::zero()));
  out.push_back(op_identity("[b,c] = 0", kTable4, br(b, c, 1), OperatorPoly::zero()));
  out.push_back(op_identity("[bd,c] = 0", kTable4, br(bd, c, 1), OperatorPoly::zero()));
  out.push_back(op_identity("{c,gp b} = 0", kTable4, br(c, gpb, -1), OperatorPoly::zero()));
  out.push_back(op_identity("{c,gp bd} = 0", kTable4, br(c, gpbd, -1), OperatorPoly::zero()));
  out.push_back(op_identity("{c,c} = 2 beta^2 I", kTable4, br(c, c, -1),
                            I.scaled(two * beta * beta)));
  out.push_back(op_identity("{b,gp b} = 2 gp b^2", kTable4, br(b, gpb, -1),
                            mul(gp, mul(b, b)).scaled(two)));
  out.push_back(op_identity("{bd,gp bd} = 2 gp bd^2", kTable4, br(bd, gpbd, -1),
                            mul(gp, mul(bd, bd)).scaled(two)));
  out.push_back(op_identity("{b,gp bd} = 2 gp beta Hsch", kTable4, br(b, gpbd, -1),
                            mul(gp, Hs).scaled(two * beta)));
  out.push_back(op_identity("{bd,gp b} = 2 gp beta Hsch", kTable4, br(bd, gpb, -1),
                            mul(gp, Hs).scaled(two * beta)));
  out.push_back(op_identity("[gp b,gp bd] = 0", kTable4, br(gpb, gpbd, 1), OperatorPoly::zero()));
  out.push_back(op_identity("[b,bd] = sqrt(2 beta k) I", kTable4, br(b, bd, 1),
                            I.scaled(scalar_sqrt(two * beta * ops::spring_k()))));
  out.push_back(op_identity("[Hll,b] = -omega gp b", kTable4, br(H, b, 1), gpb.scaled(-w)));
  out.push_back(op_identity("[Hll,bd] = omega gp bd", kTable4, br(H, bd, 1), gpbd.scaled(w)));
  out.push_back(op_identity("{Hll,c} = 0", kTable4, br(H, c, -1), OperatorPoly::zero()));
  out.push_back(op_identity("{Hll,gp b} = beta b", kTable4, br(H, gpb, -1), b.scaled(beta)));
  out.push_back(op_identity("{Hll,gp bd} = beta bd", kTable4, br(H, gpbd, -1), bd.scaled(beta)));

  OperatorPoly bc = OperatorPoly::scalar(beta) + c;
  out.push_back(op_identity("(beta + c)^2 = 2 beta (beta + c)", kIdempotent, mul(bc, bc),
                            bc.scaled(two * beta)));
  out.push_back(op_identity("beta + c = 2 Hll gp", kSimplify, bc, mul(H, gp).scaled(two)));
  return out;
}

std::vector<CheckResult> algebra(const AlgebraSpec& spec) {
  std::vector<CheckResult> out;
  StructureReport closure = closure_check(spec);
  {
    std::string detail;
    bool ok = true;
    for (const auto& e : closure.entries) {
      if (!e.decomposed) {
        ok = false;
        detail = "[[" + e.left + "," + e.right + "]] " + e.failure;
        break;
      }
    }
    out.push_back(make_check("closure of " + spec.name + " (" +
                             std::to_string(closure.entries.size()) + " ordered pairs)",
                             kCloses, ok, detail));
  }
  {
    StructureReport jac = jacobi_check(spec);
    std::string detail;
    if (!jac.jacobi_failures.empty()) {
      const auto& f = jac.jacobi_failures.front();
      detail = "first violation at (" + f.x + "," + f.y + "," + f.z + ")";
    }
    out.push_back(make_check("colour Jacobi identity for " + spec.name + " (" +
                             std::to_string(spec.basis.size() * spec.basis.size() *
                                            spec.basis.size()) + " triples)",
                             kJacobi, jac.jacobi_failures.empty(), detail));
  }
  if (spec.name == "A") {
    bool all_zero = true;
    std::string detail;
    for (const auto& e : closure.entries) {
      if (!e.bracket.is_zero()) {
        all_zero = false;
        detail = "[[" + e.left + "," + e.right + "]] != 0";
        break;
      }
    }
    out.push_back(make_check("all brackets of A vanish", kTrivialA, all_zero, detail));
  }
  if (spec.name == "L") {
    const BracketEntry* e = closure.find("b", "bd");
    bool ok = e && e->decomposed && e->epsilon == -1 && e->coefficients.size() == 1 &&
              e->coefficients[0].first == "Hsch" &&
              e->coefficients[0].second == ScalarSum::rational(2) * ops::beta();
    out.push_back(make_check("[[b,bd]] is the anticommutator 2 beta Hsch in sector 00", kDefineL,
                             ok));
    OperatorPoly comm = op_bracket(ops::ladder_b(), ops::ladder_b_dagger(), 1);
    out.push_back(op_identity("plain commutator [b,bd] = sqrt(2 beta k) I", kDefineL, comm,
                              OperatorPoly::identity().scaled(
                                  scalar_sqrt(ScalarSum::rational(2) * ops::beta() *
                                              ops::spring_k()))));
    const BracketEntry* h = closure.find("Hll", "gpb");
    bool hok = h && h->decomposed && h->epsilon == -1 && h->coefficients.size() == 1 &&
               h->coefficients[0].first == "b" && h->coefficients[0].second == ops::beta();
    out.push_back(make_check("[[Hll,gp b]] = beta b through the colour bracket", kDefineL, hok));
  }
  if (spec.name == "D") {
    const BracketEntry* e = closure.find("P1", "P1");
    bool ok = e && e->decomposed && e->epsilon == -1 &&
              e->bracket == OperatorPoly::identity().scaled(ScalarSum::rational(2));
    out.push_back(make_check("[[P1,P1]] = 2I in the 000 sector", kTable33, ok));
    const BracketEntry* pd = closure.find("Phat", "Dplus");
    bool pdok = pd && pd->epsilon == 1 && pd->bracket.is_zero();
    out.push_back(make_check("[[Phat,Dplus]] = 0 (sector 011 is empty)", kCloses, pdok));
  }
  return out;
}

std::vector<CheckResult> coefficient_ode() {
  std::vector<CheckResult> out;
  ScalarSum E = ScalarSum::symbol("E");
  for (const auto& rc :
       verify_coeff_ode(E, ScalarSum::symbol("a"), ScalarSum::symbol("b"), ScalarSum::symbol("d0")))
    out.push_back(from_relation(rc, rc.name.rfind("c =", 0) == 0 ? kOdeSolution : kOde));
  for (const auto& rc : verify_coeff_ode(E, ScalarSum::zero(), ScalarSum::zero(),
                                         ScalarSum::symbol("d0"))) {
    CheckResult c = from_relation(rc, kOdeSolution);
    c.name = "constant branch: " + c.name;
    out.push_back(c);
  }

  // Exponential eigenvalue-condition operators on the plane-wave branches.
  MatrixRep rep = build_rep(1);
  ScalarSum kw = ScalarSum::symbol("kw");
  ScalarSum Ek = kw * kw;
  WaveState psi = plane_wave(kw);
  WaveState p1psi = apply_op(ops::parity1(), rep, psi);
  WaveState two_p1 = apply_op(ops::parity1().scaled(ScalarSum::rational(2)), rep, psi);
  out.push_back(make_check("fourth operator acts as 2 g1 P on the +i sqrt(E beta) branch",
                           kParityOp,
                           apply_exp_op(eigencondition_op4(Ek), rep, psi) == two_p1));
  out.push_back(make_check("fourth operator annihilates the -i sqrt(E beta) branch", kZeroOp,
                           apply_exp_op(eigencondition_op4(Ek), rep, p1psi).is_zero()));
  out.push_back(make_check("third operator annihilates the +i sqrt(E beta) branch", kZeroOp,
                           apply_exp_op(eigencondition_op3(Ek), rep, psi).is_zero()));
  out.push_back(make_check(
      "third operator acts as 2 g1 P on the -i sqrt(E beta) branch", kParityOp,
      apply_exp_op(eigencondition_op3(Ek), rep, p1psi) ==
          apply_op(ops::parity1().scaled(ScalarSum::rational(2)), rep, p1psi)));
  bool rejected = false;
  try {
    eigencondition_op4(ScalarSum::zero());
  } catch (const wave_error&) {
    rejected = true;
  }
  out.push_back(make_check("operators reject E = 0", kOde, rejected,
                           "the derivation assumes E and beta nonzero"));
  return out;
}

std::vector<CheckResult> free_solutions(const ScalarSum& k_wave) {
  std::vector<CheckResult> out;
  MatrixRep rep = build_rep(1);
  WaveState psi = plane_wave(k_wave);
  ScalarSum E = k_wave * k_wave;

  out.push_back(make_check("Hll psi_k = gp k^2 psi_k", kIndeedSolution,
                           gamma_eigen_residual(Potential::Free, rep, psi, E).is_zero()));
  ScalarSum sqrt_beta = ScalarSum::symbol("beta", frac(1, 2));
  out.push_back(make_check("momentum eigenvalue sqrt(beta) k", kEigenvectors,
                           apply_op(ops::momentum(), rep, psi) == psi.scaled(sqrt_beta * k_wave)));
  out.push_back(make_check(
      "P1 psi_k = -psi_{-k}", kParityOp,
      apply_op(ops::parity1(), rep, psi) == -plane_wave(-k_wave)));
  out.push_back(make_check("E = 0 plane wave is still an eigenstate", kStillEigen,
                           gamma_eigen_residual(Potential::Free, rep,
                                                plane_wave(ScalarSum::zero()), ScalarSum::zero())
                               .is_zero()));

  if (!E.is_zero()) {
    try {
      auto dec = decompose_simultaneous(psi, E, rep);
      WaveState recon =
          dec.phi1.scaled(dec.a) + apply_op(ops::parity1(), rep, dec.phi2).scaled(dec.b);
      out.push_back(make_check("plane wave decomposes through its own branch", kChoose,
                               recon == psi));
      WaveState mixed = psi.scaled(ScalarSum::rational(2)) +
                        apply_op(ops::parity1(), rep, psi).scaled(ScalarSum::rational(3));
      auto decm = decompose_simultaneous(mixed, E, rep);
      WaveState reconm =
          decm.phi1.scaled(decm.a) + apply_op(ops::parity1(), rep, decm.phi2).scaled(decm.b);
      out.push_back(make_check("a phi1 + b P1 phi2 reconstructs a mixed eigenstate",
                               kSimultaneous, reconm == mixed));
      ScalarSum sqrt_eb = scalar_sqrt(E * ops::beta());
      bool eigen_ok = true;
      for (const WaveState* phi : {&decm.phi1, &decm.phi2}) {
        eigen_ok = eigen_ok &&
                   apply_op(ops::momentum(), rep, *phi) == phi->scaled(sqrt_eb) &&
                   apply_op(ops::d_plus(), rep, *phi) == phi->scaled(sqrt_eb);
      }
      out.push_back(
          make_check("phi1, phi2 are simultaneous Phat and Dplus eigenstates", kSimultaneous,
                     eigen_ok));
    } catch (const std::exception& e) {
      out.push_back({"simultaneous-eigenstate decomposition", kSimultaneous, "error", e.what()});
    }
  }

  double jk = 1.5;
  out.push_back(make_check("overlap coefficient equals 1 at j = k", kOrthonormal,
                           overlap_numeric(jk, jk, 2.0) == 1.0));
  double c12 = overlap_numeric(1.0, 2.0, 2.0);
  out.push_back(make_check("overlap coefficient at j=1, k=2, beta=2", kOrthonormal,
                           std::abs(c12 - 4.0 / std::sqrt(18.0)) < 1e-12,
                           "value " + std::to_string(c12)));
  double gap = overlap_frequency_gap(1.0, 2.0, 2.0);
  out.push_back(make_check("delta channel opens only at equal momenta", kOrthonormal,
                           overlap_frequency_gap(jk, jk, 2.0) == 0.0 &&
                               std::abs(gap - std::sqrt(2.0)) < 1e-15,
                           "sqrt(beta)(k - j): 0 at j = k, " + std::to_string(gap) +
                               " at j=1, k=2"));
  return out;
}

std::vector<CheckResult> harmonic_solutions(int max_level) {
  std::vector<CheckResult> out;
  MatrixRep rep = build_rep(1);
  ScalarSum beta = ops::beta(), two = ScalarSum::rational(2);
  OperatorPoly bc = OperatorPoly::scalar(beta) + ops::charge_c();
  out.push_back(op_identity("(beta + c)^2 = 2 beta (beta + c)", kIdempotent, op_mul(bc, bc),
                            bc.scaled(two * beta)));
  out.push_back(op_identity("beta + c = 2 Hll gp", kSimplify, bc,
                            op_mul(ops::hll_harmonic(), OperatorPoly::blade(GammaBlade::GammaPlus))
                                .scaled(two)));

  WaveState vac = harmonic_state(0, rep);
  out.push_back(make_check("vacuum is nonzero after the fallback construction", kVacuumState,
                           !vac.is_zero()));
  out.push_back(make_check("b |0> = 0", kVacuum,
                           apply_op(ops::ladder_b(), rep, vac).is_zero()));
  for (int n = 0; n <= max_level; ++n) {
    WaveState state = harmonic_state(n, rep);
    ScalarSum energy = ops::omega() * ScalarSum::rational(frac(2 * n + 1, 2));
    bool ok = !state.is_zero() &&
              gamma_eigen_residual(Potential::Harmonic, rep, state, energy).is_zero();
    out.push_back(make_check(
        "Hll |" + std::to_string(n) + "> = gp omega(" + std::to_string(n) + " + 1/2) |" +
            std::to_string(n) + ">",
        kAngularFreq, ok));
  }
  return out;
}

std::vector<CheckResult> numeric_spectrum(double beta, double k, const Grid& g, int count) {
  std::vector<CheckResult> out;
  SpectrumReport r = harmonic_spectrum_check(beta, k, g, count);
  out.push_back(make_check("discretization conventions", "may lie outside the Hilbert space",
                           true, r.note));
  for (size_t n = 0; n < r.targets.size(); ++n) {
    std::ostringstream detail;
    detail << "eig " << r.eigenvalues[n] << " vs " << r.targets[n] << " (rel "
           << r.rel_errors[n] << ")";
    out.push_back(make_check("eigenvalue " + std::to_string(n) + " within 1% of omega(n+1/2)",
                             kAngularFreq, r.rel_errors[n] < 0.01, detail.str()));
  }
  for (size_t n = 0; n < r.contrasts.size(); ++n) {
    std::ostringstream detail;
    detail << "probe " << r.probe_at_targets[n + 1] << " / " << r.probe_at_midpoints[n] << " = "
           << r.contrasts[n];
    out.push_back(make_check("pencil probe contrast at level " + std::to_string(n + 1) +
                             " below 0.05",
                             kPencil, r.contrasts[n] < 0.05, detail.str()));
  }
  for (const auto& rc : block_structure_check(g, beta, k, build_rep(1)))
    out.push_back(from_relation(rc, kBlockExample));

  MatrixRep rep = build_rep(1);
  if (count > 0) {
    DenseComplexMatrix hll = discretize_ll(g, beta, k, rep);
    DenseComplexMatrix gp = gamma_plus_matrix(g, rep);
    double omega = std::sqrt(2.0 * k / beta);
    double below = gamma_spectrum_probe(hll, gp, -4.0 * omega);
    out.push_back(make_check("probe far below the spectrum stays bounded away from zero",
                             kPositive, below > 10.0 * r.probe_at_targets[0],
                             "sigma_min " + std::to_string(below)));

    // interior identity: Hll^2 equals the stencil reference away from the walls
    DenseComplexMatrix ref = ll_square_reference(g, beta, k, rep);
    const int N = g.N;
    double worst = 0.0;
    for (int block = 0; block < 2; ++block)
      for (int i = 1; i + 1 < N; ++i)
        for (int j = 0; j < 2 * N; ++j) {
          std::complex<double> acc = 0.0;
          for (int kk = std::max(0, (i - 2)); kk <= std::min(N - 1, i + 2); ++kk) {
            acc += hll.at(block * N + i, kk) * hll.at(kk, j);
            acc += hll.at(block * N + i, N + kk) * hll.at(N + kk, j);
          }
          worst = std::max(worst, std::abs(acc - ref.at(block * N + i, j)));
        }
    out.push_back(make_check("squared assembly equals beta x Schrodinger-like on interior rows",
                             kInterior, worst <= 1e-12,
                             "max interior deviation " + std::to_string(worst)));
  }
  out.push_back(make_check("gamma_+ spectrum of Hll equals the spectrum of Hsch (structural)",
                           kSameSpectrum, r.block_pass));
  return out;
}

std::vector<CheckResult> clifford_construction(int d) {
  std::vector<CheckResult> out;
  for (const auto& rc : verify_chirality(d)) {
    const char* anchor = rc.name.rfind("chi^2", 0) == 0 ? kInvertible : kAnticommute;
    if (d % 2 == 0 && rc.name.rfind("chi^2", 0) != 0) anchor = kOddD;
    out.push_back(from_relation(rc, anchor));
  }
  for (const auto& rc : verify_ll_construction(d)) out.push_back(from_relation(rc, kConstruction));
  if (d == 1) {
    out.push_back(make_check(
        "extended-set identification orientation", kExtendedSet, true,
        "the face-value phase i^((d+3)d/2) = -1 satisfies the extended relations with the "
        "gamma_+/gamma_- labels exchanged; the canonical identification swaps them"));
    for (const auto& rc : verify_blade_table_match())
      out.push_back(from_relation(rc, kExtendedSet));
    MatrixRep rep = build_rep(1);
    for (const auto& rc : verify_rep(rep, base_gamma_relations(1)))
      out.push_back(from_relation(rc, kRep2x2));
    for (const auto& rc : verify_rep(rep, extended_gamma_relations()))
      out.push_back(from_relation(rc, kRep2x2));
  }
  if (d == 3) {
    MatrixRep rep = build_rep(3);
    for (const auto& rc : verify_rep(rep, metric_relations(3)))
      out.push_back(from_relation(rc, kPauli));
    for (const auto& rc : verify_rep(with_ll_gamma_images(rep, 3), base_gamma_relations(3))) {
      CheckResult c = from_relation(rc, kConstruction);
      c.name = "Dirac images: " + c.name;
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace ll::checks

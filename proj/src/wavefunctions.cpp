#include "ll/wavefunctions.hpp"

#include <cmath>
#include <sstream>

namespace ll {

void WaveState::add_term(size_t component, WaveKey key, ScalarSum coeff) {
  if (coeff.is_zero()) return;
  WaveComponent& comp = comps_.at(component);
  auto [it, inserted] = comp.try_emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) comp.erase(it);
  }
}

bool WaveState::is_zero() const {
  for (const auto& comp : comps_)
    if (!comp.empty()) return false;
  return true;
}

WaveState WaveState::operator+(const WaveState& o) const {
  if (dim() != o.dim()) throw wave_error("component count mismatch");
  WaveState out = *this;
  for (size_t i = 0; i < o.comps_.size(); ++i)
    for (const auto& [key, coeff] : o.comps_[i]) out.add_term(i, key, coeff);
  return out;
}

WaveState WaveState::operator-() const {
  WaveState out(dim());
  for (size_t i = 0; i < comps_.size(); ++i)
    for (const auto& [key, coeff] : comps_[i]) out.comps_[i].emplace(key, -coeff);
  return out;
}

WaveState WaveState::operator-(const WaveState& o) const { return *this + (-o); }

WaveState WaveState::scaled(const ScalarSum& s) const {
  WaveState out(dim());
  for (size_t i = 0; i < comps_.size(); ++i)
    for (const auto& [key, coeff] : comps_[i]) out.add_term(i, key, coeff * s);
  return out;
}

std::string WaveState::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < comps_.size(); ++i) {
    if (i) out << " ; ";
    if (comps_[i].empty()) {
      out << "0";
      continue;
    }
    bool first = true;
    for (const auto& [key, coeff] : comps_[i]) {
      if (!first) out << " + ";
      first = false;
      out << "(" << coeff.to_string() << ")";
      if (key.x_pow) out << "*x" << (key.x_pow > 1 ? "^" + std::to_string(key.x_pow) : "");
      out << "*exp((" << key.q.to_string() << ")x^2 + (" << key.c.to_string() << ")x)";
    }
  }
  return out.str();
}

namespace {

WaveComponent differentiate(const WaveComponent& comp) {
  WaveComponent out;
  auto add = [&out](WaveKey key, ScalarSum coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = out.try_emplace(std::move(key), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [key, coeff] : comp) {
    if (key.x_pow > 0)
      add({key.x_pow - 1, key.q, key.c}, coeff * ScalarSum::rational(Rational(key.x_pow)));
    if (!key.q.is_zero())
      add({key.x_pow + 1, key.q, key.c}, coeff * key.q * ScalarSum::rational(2));
    if (!key.c.is_zero()) add({key.x_pow, key.q, key.c}, coeff * key.c);
  }
  return out;
}

WaveComponent parity_flip(const WaveComponent& comp) {
  WaveComponent out;
  for (const auto& [key, coeff] : comp) {
    ScalarSum c = (key.x_pow & 1) ? -coeff : coeff;
    out.emplace(WaveKey{key.x_pow, key.q, -key.c}, std::move(c));
  }
  return out;
}

std::vector<WaveComponent> blade_apply(const Matrix& m, const std::vector<WaveComponent>& comps) {
  std::vector<WaveComponent> out(comps.size());
  for (size_t i = 0; i < comps.size(); ++i) {
    for (size_t j = 0; j < comps.size(); ++j) {
      const GaussianRational& entry = m.at(static_cast<int>(i), static_cast<int>(j));
      if (entry.is_zero()) continue;
      ScalarSum scale{entry};
      for (const auto& [key, coeff] : comps[j]) {
        ScalarSum add = coeff * scale;
        auto [it, inserted] = out[i].try_emplace(key, add);
        if (!inserted) {
          it->second += add;
          if (it->second.is_zero()) out[i].erase(it);
        }
      }
    }
  }
  return out;
}

}  // namespace

WaveState apply_op(const OperatorPoly& op, const MatrixRep& rep, const WaveState& s) {
  if (static_cast<size_t>(rep.dim) != s.dim())
    throw wave_error("representation dimension does not match component count");
  WaveState result(s.dim());
  for (const auto& [key, coeff] : op.terms()) {
    std::vector<WaveComponent> comps;
    comps.reserve(s.dim());
    for (size_t i = 0; i < s.dim(); ++i) comps.push_back(s.component(i));
    if (key.blade != GammaBlade::Id)
      comps = blade_apply(rep.image(blade_name(key.blade)), comps);
    if (key.parity)
      for (auto& c : comps) c = parity_flip(c);
    for (int n = 0; n < key.d_pow; ++n)
      for (auto& c : comps) c = differentiate(c);
    for (size_t i = 0; i < comps.size(); ++i)
      for (const auto& [wkey, wcoeff] : comps[i])
        result.add_term(i, WaveKey{wkey.x_pow + key.x_pow, wkey.q, wkey.c}, wcoeff * coeff);
  }
  return result;
}

WaveState plane_wave(const ScalarSum& k_wave) {
  ScalarSum sqrt_beta = ScalarSum::symbol("beta", frac(1, 2));
  ScalarSum envelope_c = ScalarSum::i() * sqrt_beta * k_wave;
  WaveState s(2);
  s.add_term(0, WaveKey{0, ScalarSum::zero(), envelope_c}, k_wave);
  s.add_term(1, WaveKey{0, ScalarSum::zero(), envelope_c}, sqrt_beta);
  return s;
}

OperatorPoly hamiltonian(Potential pot) {
  return pot == Potential::Free ? ops::hll_free() : ops::hll_harmonic();
}

WaveState gamma_eigen_residual(Potential pot, const MatrixRep& rep, const WaveState& s,
                               const ScalarSum& E) {
  WaveState hs = apply_op(hamiltonian(pot), rep, s);
  WaveState gs = apply_op(OperatorPoly::blade(GammaBlade::GammaPlus), rep, s);
  return hs - gs.scaled(E);
}

SimultaneousDecomposition decompose_simultaneous(const WaveState& s, const ScalarSum& E,
                                                 const MatrixRep& rep) {
  if (E.is_zero()) throw wave_error("decomposition requires E != 0");
  if (!gamma_eigen_residual(Potential::Free, rep, s, E).is_zero())
    throw wave_error("state is not a gamma_+-eigenstate for the given E");
  auto eb = (E * ops::beta()).as_monomial();
  if (!eb) throw wave_error("E*beta must be a single monomial");
  ScalarMonomial root = scalar_sqrt(*eb);
  ScalarSum sqrt_eb{root};

  WaveState chi = apply_op(ops::momentum(), rep, s).scaled(ScalarSum(root.inverse()));
  SimultaneousDecomposition out;
  if (chi == s) {
    out.phi1 = s;
    out.phi2 = WaveState::zero(s.dim());
    out.a = ScalarSum::one();
    out.b = ScalarSum::zero();
  } else if (chi == -s) {
    out.phi1 = WaveState::zero(s.dim());
    out.phi2 = apply_op(ops::parity1(), rep, s);
    out.a = ScalarSum::zero();
    out.b = ScalarSum::one();
  } else {
    out.phi1 = s + chi;
    out.phi2 = apply_op(ops::parity1(), rep, s - chi);
    out.a = ScalarSum::rational(frac(1, 2));
    out.b = out.a;
  }

  for (const WaveState* phi : {&out.phi1, &out.phi2}) {
    if (phi->is_zero()) continue;
    if (apply_op(ops::momentum(), rep, *phi) != phi->scaled(sqrt_eb) ||
        apply_op(ops::d_plus(), rep, *phi) != phi->scaled(sqrt_eb))
      throw wave_error("decomposition failed the simultaneous-eigenstate conditions");
  }
  return out;
}

WaveState harmonic_state(int n, const MatrixRep& rep) {
  if (n < 0) throw wave_error("level must be nonnegative");
  ScalarSum alpha = scalar_sqrt(ops::beta() * ops::spring_k() * ScalarSum::rational(frac(1, 2)));
  WaveState vac_sch(2);
  ScalarSum q0 = alpha * ScalarSum::rational(frac(-1, 2));
  vac_sch.add_term(0, WaveKey{0, q0, ScalarSum::zero()}, ScalarSum::one());
  // gamma_+ annihilates (f, 0) in this representation, so take the fallback
  // Schroedinger vacuum Hll |0> before projecting with (beta + c).
  WaveState vac_prime = apply_op(ops::hll_harmonic(), rep, vac_sch);
  OperatorPoly beta_plus_c = OperatorPoly::scalar(ops::beta()) + ops::charge_c();
  WaveState vac = apply_op(beta_plus_c, rep, vac_prime);
  WaveState state = vac;
  for (int i = 0; i < n; ++i) state = apply_op(ops::ladder_b_dagger(), rep, state);
  return state;
}

double overlap_numeric(double j, double k, double beta) {
  return (j * k + beta) / std::sqrt((k * k + beta) * (j * j + beta));
}

double overlap_frequency_gap(double j, double k, double beta) {
  return std::sqrt(beta) * (k - j);
}

WaveState apply_exp_op(const ExpGammaOp& op, const MatrixRep& rep, const WaveState& s) {
  WaveState out(s.dim());
  for (const auto& entry : op.entries) {
    WaveState part = apply_op(OperatorPoly::blade(entry.blade), rep, s).scaled(entry.coeff);
    for (size_t i = 0; i < part.dim(); ++i)
      for (const auto& [key, coeff] : part.component(i))
        out.add_term(i, WaveKey{key.x_pow, key.q, key.c + entry.freq}, coeff);
  }
  return out;
}

namespace {

ScalarSum sqrt_ratio(const ScalarSum& num, const ScalarSum& den) {
  auto m = (num * ScalarSum(den.as_monomial()->inverse())).as_monomial();
  return ScalarSum(scalar_sqrt(*m));
}

void require_nonzero_monomial(const ScalarSum& E) {
  if (E.is_zero()) throw wave_error("the exponential operators are undefined at E = 0");
  if (!E.as_monomial()) throw wave_error("E must be a single monomial");
}

}  // namespace

ExpGammaOp eigencondition_op3(const ScalarSum& E) {
  require_nonzero_monomial(E);
  ScalarSum beta = ops::beta();
  ScalarSum se_b = sqrt_ratio(E, beta), sb_e = sqrt_ratio(beta, E);
  ScalarSum freq = ScalarSum::rational(2) * ScalarSum::i() * scalar_sqrt(E * beta);
  return ExpGammaOp{{{GammaBlade::GammaPlus, -se_b, freq},
                     {GammaBlade::GammaMinus, sb_e, freq},
                     {GammaBlade::Gamma1, ScalarSum::one(), freq}}};
}

ExpGammaOp eigencondition_op4(const ScalarSum& E) {
  require_nonzero_monomial(E);
  ScalarSum beta = ops::beta();
  ScalarSum se_b = sqrt_ratio(E, beta), sb_e = sqrt_ratio(beta, E);
  ScalarSum freq = ScalarSum::rational(-2) * ScalarSum::i() * scalar_sqrt(E * beta);
  return ExpGammaOp{{{GammaBlade::GammaPlus, se_b, freq},
                     {GammaBlade::GammaMinus, -sb_e, freq},
                     {GammaBlade::Gamma1, ScalarSum::one(), freq}}};
}

namespace {

// Finite sums of coeff * e^{freq x} over the scalar ring.
using ExpSum = std::map<ScalarSum, ScalarSum>;

void exp_add(ExpSum& target, const ScalarSum& freq, const ScalarSum& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = target.try_emplace(freq, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) target.erase(it);
  }
}

ExpSum exp_scale(const ExpSum& f, const ScalarSum& s) {
  ExpSum out;
  for (const auto& [freq, coeff] : f) exp_add(out, freq, coeff * s);
  return out;
}

ExpSum exp_sub(ExpSum a, const ExpSum& b) {
  for (const auto& [freq, coeff] : b) exp_add(a, freq, -coeff);
  return a;
}

ExpSum exp_diff(const ExpSum& f) {
  ExpSum out;
  for (const auto& [freq, coeff] : f) exp_add(out, freq, coeff * freq);
  return out;
}

bool exp_zero(const ExpSum& f) { return f.empty(); }

std::string exp_str(const ExpSum& f) {
  if (f.empty()) return "0";
  std::string out;
  for (const auto& [freq, coeff] : f) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff.to_string() + ")e^{(" + freq.to_string() + ")x}";
  }
  return out;
}

}  // namespace

namespace {

ExpSum from_function(const ExpFunction& f) {
  ExpSum out;
  for (const auto& [coeff, freq] : f) exp_add(out, freq, coeff);
  return out;
}

}  // namespace

CoeffSolutions coeff_ode_solutions(const ScalarSum& E, const ScalarSum& a, const ScalarSum& b,
                                   const ScalarSum& d0) {
  require_nonzero_monomial(E);
  ScalarSum beta = ops::beta();
  ScalarSum sqrt_eb = scalar_sqrt(E * beta);
  ScalarSum se_b = sqrt_ratio(E, beta), sb_e = sqrt_ratio(beta, E);
  ScalarSum wplus = ScalarSum::rational(2) * ScalarSum::i() * sqrt_eb;
  ScalarSum wminus = -wplus;
  ScalarSum zero = ScalarSum::zero();
  CoeffSolutions s;
  s.cI = {{ScalarSum::symbol("cId0"), zero}};
  s.c1 = {{a, wplus}, {b, wminus}};
  s.cplus = {{-a * se_b, wplus}, {b * se_b, wminus}, {scalar_div(d0, *beta.as_monomial()), zero}};
  s.cminus = {{a * sb_e, wplus}, {-b * sb_e, wminus}, {scalar_div(d0, *E.as_monomial()), zero}};
  return s;
}

std::vector<RelationCheck> verify_ode_lines(const ScalarSum& E, const ExpFunction& cI,
                                            const ExpFunction& cplus, const ExpFunction& cminus,
                                            const ExpFunction& c1) {
  ScalarSum beta = ops::beta();
  ScalarSum i = ScalarSum::i();
  ExpSum fI = from_function(cI), fplus = from_function(cplus), fminus = from_function(cminus),
         f1 = from_function(c1);
  std::vector<RelationCheck> checks;
  auto push = [&checks](const std::string& name, const ExpSum& residual) {
    checks.push_back(
        {name, exp_zero(residual), exp_zero(residual) ? "" : "residual " + exp_str(residual)});
  };
  push("c_I' = 0", exp_diff(fI));
  push("c_+' = -2iE c_1", exp_sub(exp_diff(fplus), exp_scale(f1, ScalarSum::rational(-2) * i * E)));
  push("c_-' = 2i beta c_1",
       exp_sub(exp_diff(fminus), exp_scale(f1, ScalarSum::rational(2) * i * beta)));
  push("c_1' = -i beta c_+ + i E c_-",
       exp_sub(exp_diff(f1), exp_sub(exp_scale(fminus, i * E), exp_scale(fplus, i * beta))));
  return checks;
}

std::vector<RelationCheck> verify_coeff_ode(const ScalarSum& E, const ScalarSum& a,
                                            const ScalarSum& b, const ScalarSum& d0) {
  CoeffSolutions s = coeff_ode_solutions(E, a, b, d0);
  std::vector<RelationCheck> checks = verify_ode_lines(E, s.cI, s.cplus, s.cminus, s.c1);

  // cross-check the combined c(x) = -i beta c_+ + i E c_- closed form
  ScalarSum beta = ops::beta();
  ScalarSum i = ScalarSum::i();
  ScalarSum sqrt_eb = scalar_sqrt(E * beta);
  ScalarSum wplus = ScalarSum::rational(2) * i * sqrt_eb;
  ExpSum c_combined;
  exp_add(c_combined, wplus, ScalarSum::rational(2) * i * sqrt_eb * a);
  exp_add(c_combined, -wplus, ScalarSum::rational(-2) * i * sqrt_eb * b);
  ExpSum residual = exp_sub(
      c_combined, exp_sub(exp_scale(from_function(s.cminus), i * E),
                          exp_scale(from_function(s.cplus), i * beta)));
  checks.push_back({"c = -i beta c_+ + i E c_-", exp_zero(residual),
                    exp_zero(residual) ? "" : "residual " + exp_str(residual)});
  return checks;
}

}  // namespace ll

#include "ll/clifford.hpp"

#include <algorithm>
#include <sstream>

namespace ll {

void CliffordElement::add_term(BladeMask mask, ScalarSum coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mask, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CliffordElement CliffordElement::scalar(ScalarSum s) {
  CliffordElement e;
  e.add_term(0, std::move(s));
  return e;
}

CliffordElement CliffordElement::generator(int j) {
  if (j < 0 || j > 30) throw clifford_error("generator index out of range");
  return blade(BladeMask(1) << j);
}

CliffordElement CliffordElement::blade(BladeMask mask, ScalarSum coeff) {
  CliffordElement e;
  e.add_term(mask, std::move(coeff));
  return e;
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
  CliffordElement out = *this;
  for (const auto& [mask, coeff] : o.terms_) out.add_term(mask, coeff);
  return out;
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement out;
  for (const auto& [mask, coeff] : terms_) out.terms_.emplace(mask, -coeff);
  return out;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const { return *this + (-o); }

CliffordElement CliffordElement::scaled(const ScalarSum& s) const {
  CliffordElement out;
  for (const auto& [mask, coeff] : terms_) out.add_term(mask, coeff * s);
  return out;
}

std::string CliffordElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mask, coeff] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << coeff.to_string() << ")";
    for (int j = 0; j < 31; ++j)
      if (mask & (BladeMask(1) << j)) out << "*gt" << j;
  }
  return out.str();
}

namespace {

// Merge generator t (ascending over b) into the sorted list from a,
// tracking transposition signs and metric contractions.
std::pair<int, BladeMask> blade_product(BladeMask a, BladeMask b, const Signature& sig) {
  std::vector<int> left;
  for (int j = 0; j < 31; ++j)
    if (a & (BladeMask(1) << j)) left.push_back(j);
  int sign = 1;
  for (int t = 0; t < 31; ++t) {
    if (!(b & (BladeMask(1) << t))) continue;
    auto pos = std::lower_bound(left.begin(), left.end(), t);
    size_t greater = static_cast<size_t>(left.end() - pos);
    if (pos != left.end() && *pos == t) --greater;  // t itself is not a transposition
    if (greater & 1) sign = -sign;
    if (pos != left.end() && *pos == t) {
      sign *= sig.eta(t);
      left.erase(pos);
    } else {
      left.insert(pos, t);
    }
  }
  BladeMask mask = 0;
  for (int j : left) mask |= BladeMask(1) << j;
  return {sign, mask};
}

}  // namespace

CliffordElement geometric_product(const CliffordElement& u, const CliffordElement& v,
                                  const Signature& sig) {
  CliffordElement out;
  for (const auto& [ma, ca] : u.terms()) {
    for (const auto& [mb, cb] : v.terms()) {
      auto [sign, mask] = blade_product(ma, mb, sig);
      ScalarSum coeff = ca * cb;
      if (sign < 0) coeff = -coeff;
      out.add_term(mask, coeff);
    }
  }
  return out;
}

namespace {

GaussianRational i_power(long n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational::i();
    case 2: return GaussianRational(-1);
    default: return -GaussianRational::i();
  }
}

}  // namespace

CliffordElement chirality(int d) {
  if (d < 1) throw clifford_error("d must be at least 1");
  long phase_exp = static_cast<long>(d + 3) * d / 2;
  BladeMask all = (BladeMask(1) << (d + 1)) - 1;
  return CliffordElement::blade(all, ScalarSum(i_power(phase_exp)));
}

LLGammas construct_ll_gammas(int d) {
  if (d % 2 == 0) throw clifford_error("construction requires odd d");
  Signature sig{d};
  CliffordElement chi = chirality(d);
  CliffordElement chi_g0 = geometric_product(chi, CliffordElement::generator(0), sig);
  ScalarSum half = ScalarSum::rational(frac(1, 2));
  LLGammas out;
  out.gamma_plus = (chi + chi_g0).scaled(half);
  out.gamma_minus = (chi - chi_g0).scaled(half);
  for (int j = 1; j <= d; ++j)
    out.gamma.push_back(geometric_product(chi, CliffordElement::generator(j), sig));
  return out;
}

std::vector<RelationCheck> verify_chirality(int d) {
  Signature sig{d};
  CliffordElement chi = chirality(d);
  std::vector<RelationCheck> checks;
  CliffordElement chi2 = geometric_product(chi, chi, sig);
  bool sq = chi2 == CliffordElement::identity();
  checks.push_back({"chi^2 = I (d=" + std::to_string(d) + ")", sq,
                    sq ? "" : "chi^2 = " + chi2.to_string()});
  for (int j = 0; j <= d; ++j) {
    CliffordElement g = CliffordElement::generator(j);
    CliffordElement anti =
        geometric_product(g, chi, sig) + geometric_product(chi, g, sig);
    bool ok = anti.is_zero();
    checks.push_back({"{gt" + std::to_string(j) + ", chi} = 0 (d=" + std::to_string(d) + ")", ok,
                      ok ? "" : "residual " + anti.to_string()});
  }
  return checks;
}

std::vector<RelationCheck> verify_ll_construction(int d) {
  Signature sig{d};
  std::vector<RelationCheck> checks;
  LLGammas g;
  try {
    g = construct_ll_gammas(d);
  } catch (const clifford_error&) {
    // Even d: construct face-value anyway so the failures are visible.
    CliffordElement chi = chirality(d);
    CliffordElement chi_g0 = geometric_product(chi, CliffordElement::generator(0), sig);
    ScalarSum half = ScalarSum::rational(frac(1, 2));
    g.gamma_plus = (chi + chi_g0).scaled(half);
    g.gamma_minus = (chi - chi_g0).scaled(half);
    for (int j = 1; j <= d; ++j)
      g.gamma.push_back(geometric_product(chi, CliffordElement::generator(j), sig));
  }
  auto anti = [&sig](const CliffordElement& a, const CliffordElement& b) {
    return geometric_product(a, b, sig) + geometric_product(b, a, sig);
  };
  auto push = [&checks](const std::string& name, const CliffordElement& residual) {
    checks.push_back({name, residual.is_zero(),
                      residual.is_zero() ? "" : "residual " + residual.to_string()});
  };
  std::string tag = " (d=" + std::to_string(d) + ")";
  push("{g+, g+} = 0" + tag, anti(g.gamma_plus, g.gamma_plus));
  push("{g-, g-} = 0" + tag, anti(g.gamma_minus, g.gamma_minus));
  push("{g+, g-} = I" + tag, anti(g.gamma_plus, g.gamma_minus) - CliffordElement::identity());
  for (int j = 1; j <= d; ++j) {
    push("{g+, g" + std::to_string(j) + "} = 0" + tag, anti(g.gamma_plus, g.gamma[j - 1]));
    push("{g-, g" + std::to_string(j) + "} = 0" + tag, anti(g.gamma_minus, g.gamma[j - 1]));
    for (int k = j; k <= d; ++k) {
      CliffordElement expect =
          j == k ? CliffordElement::scalar(ScalarSum::rational(2)) : CliffordElement();
      push("{g" + std::to_string(j) + ", g" + std::to_string(k) + "} = 2 delta" + tag,
           anti(g.gamma[j - 1], g.gamma[k - 1]) - expect);
    }
  }
  return checks;
}

std::map<GammaBlade, CliffordElement> ll_blade_identification() {
  LLGammas g = construct_ll_gammas(1);
  return {{GammaBlade::Id, CliffordElement::identity()},
          {GammaBlade::GammaPlus, g.gamma_minus},
          {GammaBlade::GammaMinus, g.gamma_plus},
          {GammaBlade::Gamma1, g.gamma[0]}};
}

std::vector<RelationCheck> verify_blade_table_match(const BladeTable& table) {
  Signature sig{1};
  auto images = ll_blade_identification();
  std::vector<RelationCheck> checks;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      GammaBlade ba = static_cast<GammaBlade>(a), bb = static_cast<GammaBlade>(b);
      CliffordElement lhs = geometric_product(images.at(ba), images.at(bb), sig);
      CliffordElement rhs;
      for (int r = 0; r < 4; ++r) {
        const Rational& c = table.at(ba, bb, static_cast<GammaBlade>(r));
        if (c != 0) rhs = rhs + images.at(static_cast<GammaBlade>(r)).scaled(ScalarSum::rational(c));
      }
      CliffordElement residual = lhs - rhs;
      checks.push_back({blade_name(ba) + "*" + blade_name(bb) + " matches table",
                        residual.is_zero(),
                        residual.is_zero() ? "" : "residual " + residual.to_string()});
    }
  }
  return checks;
}

Matrix Matrix::identity(int dim) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (dim_ != o.dim_) throw clifford_error("matrix dimension mismatch");
  Matrix out(dim_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (dim_ != o.dim_) throw clifford_error("matrix dimension mismatch");
  Matrix out(dim_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (dim_ != o.dim_) throw clifford_error("matrix dimension mismatch");
  Matrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < dim_; ++j) out.at(i, j) = out.at(i, j) + at(i, k) * o.at(k, j);
    }
  return out;
}

Matrix Matrix::scaled(const GaussianRational& s) const {
  Matrix out(dim_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * s;
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const GaussianRational& v) { return v.is_zero(); });
}

const Matrix& MatrixRep::image(const std::string& name) const {
  auto it = images.find(name);
  if (it == images.end()) throw clifford_error("unbound name in representation: " + name);
  return it->second;
}

MatrixRep build_rep(int d) {
  MatrixRep rep;
  if (d == 1) {
    rep.dim = 2;
    Matrix g1(2), gp(2), gm(2);
    g1.at(0, 0) = GaussianRational(1);
    g1.at(1, 1) = GaussianRational(-1);
    gp.at(0, 1) = GaussianRational(1);
    gm.at(1, 0) = GaussianRational(1);
    rep.images = {{"I", Matrix::identity(2)}, {"g1", g1}, {"gp", gp}, {"gm", gm}};
    return rep;
  }
  if (d == 3) {
    rep.dim = 4;
    // Dirac representation: gt0 = diag(I, -I), gtj = [[0, s_j], [-s_j, 0]].
    GaussianRational one(1), mone(-1), im = GaussianRational::i();
    Matrix s1(2), s2(2), s3(2);
    s1.at(0, 1) = one;
    s1.at(1, 0) = one;
    s2.at(0, 1) = -im;
    s2.at(1, 0) = im;
    s3.at(0, 0) = one;
    s3.at(1, 1) = mone;
    auto block = [](const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& dd) {
      Matrix out(4);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          out.at(i, j) = a.at(i, j);
          out.at(i, j + 2) = b.at(i, j);
          out.at(i + 2, j) = c.at(i, j);
          out.at(i + 2, j + 2) = dd.at(i, j);
        }
      return out;
    };
    Matrix z(2), i2 = Matrix::identity(2);
    rep.images["I"] = Matrix::identity(4);
    rep.images["gt0"] = block(i2, z, z, i2.scaled(mone));
    rep.images["gt1"] = block(z, s1, s1.scaled(mone), z);
    rep.images["gt2"] = block(z, s2, s2.scaled(mone), z);
    rep.images["gt3"] = block(z, s3, s3.scaled(mone), z);
    return rep;
  }
  throw clifford_error("no built-in representation for d = " + std::to_string(d));
}

RelationSet base_gamma_relations(int d) {
  RelationSet rels;
  GaussianRational one(1), two(2);
  auto g = [](int j) { return "g" + std::to_string(j); };
  rels.push_back({"{gp,gp} = 0", {{two, {"gp", "gp"}}}});
  rels.push_back({"{gm,gm} = 0", {{two, {"gm", "gm"}}}});
  rels.push_back({"{gp,gm} = I", {{one, {"gp", "gm"}}, {one, {"gm", "gp"}}, {-one, {}}}});
  for (int j = 1; j <= d; ++j) {
    rels.push_back({"{gp," + g(j) + "} = 0", {{one, {"gp", g(j)}}, {one, {g(j), "gp"}}}});
    rels.push_back({"{gm," + g(j) + "} = 0", {{one, {"gm", g(j)}}, {one, {g(j), "gm"}}}});
    for (int k = j; k <= d; ++k) {
      WordRelation r{"{" + g(j) + "," + g(k) + "} = 2 delta",
                     {{one, {g(j), g(k)}}, {one, {g(k), g(j)}}}};
      if (j == k) r.terms.push_back({-two, {}});
      rels.push_back(std::move(r));
    }
  }
  return rels;
}

RelationSet extended_gamma_relations() {
  GaussianRational one(1);
  GaussianRational half(frac(1, 2));
  RelationSet rels;
  rels.push_back({"gp^2 = 0", {{one, {"gp", "gp"}}}});
  rels.push_back({"gm^2 = 0", {{one, {"gm", "gm"}}}});
  rels.push_back({"g1^2 = I", {{one, {"g1", "g1"}}, {-one, {}}}});
  rels.push_back({"gp gm = (I + g1)/2", {{one, {"gp", "gm"}}, {-half, {}}, {-half, {"g1"}}}});
  rels.push_back({"gm gp = (I - g1)/2", {{one, {"gm", "gp"}}, {-half, {}}, {half, {"g1"}}}});
  rels.push_back({"g1 gp = gp", {{one, {"g1", "gp"}}, {-one, {"gp"}}}});
  rels.push_back({"gp g1 = -gp", {{one, {"gp", "g1"}}, {one, {"gp"}}}});
  rels.push_back({"g1 gm = -gm", {{one, {"g1", "gm"}}, {one, {"gm"}}}});
  rels.push_back({"gm g1 = gm", {{one, {"gm", "g1"}}, {-one, {"gm"}}}});
  return rels;
}

RelationSet metric_relations(int d) {
  RelationSet rels;
  GaussianRational one(1);
  Signature sig{d};
  for (int j = 0; j <= d; ++j) {
    for (int k = j; k <= d; ++k) {
      std::string gj = "gt" + std::to_string(j), gk = "gt" + std::to_string(k);
      WordRelation r{"{" + gj + "," + gk + "} = 2 eta", {{one, {gj, gk}}, {one, {gk, gj}}}};
      if (j == k) r.terms.push_back({GaussianRational(-2 * sig.eta(j)), {}});
      rels.push_back(std::move(r));
    }
  }
  return rels;
}

std::vector<RelationCheck> verify_rep(const MatrixRep& rep, const RelationSet& relations) {
  std::vector<RelationCheck> checks;
  for (const auto& rel : relations) {
    Matrix acc(rep.dim);
    for (const auto& [coeff, word] : rel.terms) {
      Matrix m = Matrix::identity(rep.dim);
      for (const auto& name : word) m = m * rep.image(name);
      acc = acc + m.scaled(coeff);
    }
    bool ok = acc.is_zero();
    checks.push_back({rel.name, ok, ok ? "" : "nonzero residual matrix"});
  }
  return checks;
}

Matrix rep_image(const CliffordElement& elem, const MatrixRep& rep) {
  Matrix out(rep.dim);
  for (const auto& [mask, coeff] : elem.terms()) {
    auto c = coeff.as_constant();
    if (!c) throw clifford_error("element has symbolic coefficients");
    Matrix m = Matrix::identity(rep.dim);
    for (int j = 0; j < 31; ++j)
      if (mask & (BladeMask(1) << j)) m = m * rep.image("gt" + std::to_string(j));
    out = out + m.scaled(*c);
  }
  return out;
}

MatrixRep with_ll_gamma_images(const MatrixRep& rep, int d) {
  LLGammas g = construct_ll_gammas(d);
  MatrixRep out = rep;
  out.images["gp"] = rep_image(g.gamma_plus, rep);
  out.images["gm"] = rep_image(g.gamma_minus, rep);
  for (int j = 1; j <= d; ++j)
    out.images["g" + std::to_string(j)] = rep_image(g.gamma[j - 1], rep);
  return out;
}

}  // namespace ll

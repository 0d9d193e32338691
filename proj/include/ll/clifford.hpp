#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ll/operator_algebra.hpp"
#include "ll/scalar.hpp"

namespace ll {

class clifford_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cl(1,d): generator 0 squares to +1, generators 1..d square to -1.
struct Signature {
  int d = 1;
  int eta(int j) const { return j == 0 ? 1 : -1; }
};

/// Bit j set means generator j is present in the blade.
using BladeMask = std::uint32_t;

/// Element of the complexified Clifford algebra with exact coefficients.
class CliffordElement {
 public:
  CliffordElement() = default;

  static CliffordElement identity() { return scalar(ScalarSum::one()); }
  static CliffordElement scalar(ScalarSum s);
  static CliffordElement generator(int j);
  static CliffordElement blade(BladeMask mask, ScalarSum coeff = ScalarSum::one());

  const std::map<BladeMask, ScalarSum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  CliffordElement operator+(const CliffordElement& o) const;
  CliffordElement operator-(const CliffordElement& o) const;
  CliffordElement operator-() const;
  CliffordElement scaled(const ScalarSum& s) const;
  bool operator==(const CliffordElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const CliffordElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::map<BladeMask, ScalarSum> terms_;
  void add_term(BladeMask mask, ScalarSum coeff);
  friend CliffordElement geometric_product(const CliffordElement&, const CliffordElement&,
                                           const Signature&);
};

CliffordElement geometric_product(const CliffordElement& u, const CliffordElement& v,
                                  const Signature& sig);

/// chi = i^{(d+3)d/2} gt0 gt1 ... gtd.
CliffordElement chirality(int d);

struct LLGammas {
  CliffordElement gamma_plus;             // (chi + chi gt0)/2
  CliffordElement gamma_minus;            // (chi - chi gt0)/2
  std::vector<CliffordElement> gamma;     // gamma[j-1] = chi gtj, j = 1..d
};

/// Throws clifford_error unless d is odd.
LLGammas construct_ll_gammas(int d);

struct RelationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// chi^2 = I and {gtj, chi} = 0 for every generator; for even d the
/// anticommutation entries fail (and are reported, not thrown).
std::vector<RelationCheck> verify_chirality(int d);

/// Base anticommutation relations of the constructed gammas; any d >= 1.
std::vector<RelationCheck> verify_ll_construction(int d);

/// For d = 1: canonical relation-preserving identification of the abstract
/// blades with the constructed elements.  The face-value construction
/// satisfies the extended relation set with the roles of gamma_+ and
/// gamma_- exchanged, so the identification maps GammaPlus to
/// (chi - chi gt0)/2 and GammaMinus to (chi + chi gt0)/2.
std::map<GammaBlade, CliffordElement> ll_blade_identification();

/// Checks that the identified blade images reproduce the exact product
/// table used by the operator algebra (extended relation set included).
std::vector<RelationCheck> verify_blade_table_match(const BladeTable& table = BladeTable::standard());

/// Dense matrix with exact Gaussian-rational entries.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim) {}
  static Matrix identity(int dim);

  int dim() const { return dim_; }
  GaussianRational& at(int i, int j) { return e_[static_cast<size_t>(i) * dim_ + j]; }
  const GaussianRational& at(int i, int j) const { return e_[static_cast<size_t>(i) * dim_ + j]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const GaussianRational& s) const;
  bool operator==(const Matrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }
  bool is_zero() const;

 private:
  int dim_ = 0;
  std::vector<GaussianRational> e_;
};

struct MatrixRep {
  int dim = 0;
  std::map<std::string, Matrix> images;

  const Matrix& image(const std::string& name) const;
};

/// d = 1: the 2x2 triple gp, gm, g1; d = 3: the 4x4 Dirac generators gt0..gt3.
MatrixRep build_rep(int d);

/// One relation: sum of coeff * (product of named images) must vanish.
struct WordRelation {
  std::string name;
  std::vector<std::pair<GaussianRational, std::vector<std::string>>> terms;
};
using RelationSet = std::vector<WordRelation>;

RelationSet base_gamma_relations(int d);      // over gp, gm, g1..gd
RelationSet extended_gamma_relations();       // d = 1 extras
RelationSet metric_relations(int d);          // over gt0..gtd

std::vector<RelationCheck> verify_rep(const MatrixRep& rep, const RelationSet& relations);

/// Evaluates a Clifford element as a matrix through generator images gt0..gtd.
Matrix rep_image(const CliffordElement& elem, const MatrixRep& rep);

/// Extends a generator rep with images of the constructed gammas
/// (names gp, gm, g1..gd) so relation sets can be checked entrywise.
MatrixRep with_ll_gamma_images(const MatrixRep& rep, int d);

}  // namespace ll

#pragma once

#include <string>
#include <vector>

#include "ll/operator_algebra.hpp"

namespace ll {

/// Element of Z_2^n written in subscript order, e.g. sector 001 <-> {0,0,1}.
struct DegreeVector {
  std::vector<int> bits;

  DegreeVector() = default;
  DegreeVector(std::initializer_list<int> b) : bits(b) {}
  explicit DegreeVector(std::vector<int> b) : bits(std::move(b)) {}

  size_t rank() const { return bits.size(); }
  DegreeVector operator+(const DegreeVector& o) const;
  bool operator==(const DegreeVector& o) const { return bits == o.bits; }
  bool operator!=(const DegreeVector& o) const { return !(*this == o); }
  std::string to_string() const;
};

enum class CommutationFactorKind {
  Super,    // (-1)^{sum_i a_i b_i}, any rank
  Colour2,  // (-1)^{a_1 b_2 - a_2 b_1}, rank 2 only
};

std::string factor_name(CommutationFactorKind k);

/// Returns +1 or -1.  Throws on rank mismatch.
int commutation_factor_value(CommutationFactorKind kind, const DegreeVector& a,
                             const DegreeVector& b);

struct BasisElement {
  std::string label;
  DegreeVector degree;
  OperatorPoly op;
};

struct AlgebraSpec {
  std::string name;
  int n = 2;
  CommutationFactorKind factor = CommutationFactorKind::Super;
  std::vector<BasisElement> basis;

  void validate() const;  // throws graded_error on malformed input
};

class graded_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BracketEntry {
  std::string left;
  std::string right;
  int epsilon = 1;
  OperatorPoly bracket;
  bool decomposed = false;
  std::vector<std::pair<std::string, ScalarSum>> coefficients;
  std::string failure;
};

struct JacobiFailure {
  std::string x, y, z;
  OperatorPoly residual;
};

struct StructureReport {
  std::vector<BracketEntry> entries;
  std::vector<JacobiFailure> jacobi_failures;

  bool all_decomposed() const;
  const BracketEntry* find(const std::string& left, const std::string& right) const;
};

/// Colour bracket of every ordered basis pair, decomposed over the full basis.
StructureReport bracket_table(const AlgebraSpec& spec);

/// Like bracket_table, but each bracket must decompose using only basis
/// elements of degree deg(left) + deg(right).
StructureReport closure_check(const AlgebraSpec& spec);

/// Colour Jacobi identity over all ordered basis triples:
///   eps(c,a) [x,[y,z]] + eps(a,b) [y,[z,x]] + eps(b,c) [z,[x,y]] = 0.
StructureReport jacobi_check(const AlgebraSpec& spec);

/// The five built-in algebras: A, Dplus, D1, D (free equation) and L (harmonic).
AlgebraSpec builtin_algebra(const std::string& name);

/// Decompose target = sum_i coeff_i * basis_i over the scalar ring.  Pivots
/// must be invertible monomials; returns false (with residual note) otherwise.
bool decompose_in_span(const OperatorPoly& target, const std::vector<const BasisElement*>& basis,
                       std::vector<std::pair<std::string, ScalarSum>>& coefficients,
                       std::string& failure);

/// JSON round trip for algebra files:
///   {"name","n","factor":"super"|"colour2","basis":[{"label","degree":[..],"op":"..."}]}
AlgebraSpec load_algebra_json(const std::string& json_text);
std::string save_algebra_json(const AlgebraSpec& spec);

}  // namespace ll

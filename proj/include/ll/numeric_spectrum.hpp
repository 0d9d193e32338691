#pragma once

#include <complex>
#include <string>
#include <vector>

#include "ll/clifford.hpp"

namespace ll {

class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Uniform grid on [-L, L] with N nodes, Dirichlet outside.
struct Grid {
  double L = 12.0;
  int N = 800;

  void validate() const;
  double h() const { return 2.0 * L / (N - 1); }
  double node(int i) const { return -L + i * h(); }
};

struct SymTridiag {
  std::vector<double> diag;
  std::vector<double> off;  // size diag.size() - 1

  int dim() const { return static_cast<int>(diag.size()); }
};

class DenseComplexMatrix {
 public:
  DenseComplexMatrix() = default;
  explicit DenseComplexMatrix(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim) {}

  int dim() const { return dim_; }
  std::complex<double>& at(int i, int j) { return e_[static_cast<size_t>(i) * dim_ + j]; }
  const std::complex<double>& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * dim_ + j];
  }
  bool all_finite() const;

 private:
  int dim_ = 0;
  std::vector<std::complex<double>> e_;
};

/// -(1/beta) d^2 + (k/2) x^2 with the compact central second difference.
SymTridiag discretize_schrodinger(const Grid& g, double beta, double k);

/// Lowest `count` eigenvalues by Sturm-sequence bisection, each bracketed
/// to 1e-10 absolute.
std::vector<double> eig_sym_tridiag(const SymTridiag& m, int count);

/// 2N x 2N assembly of gm*beta - g1*i*d + gp*(k/2)x^2 with the antisymmetric
/// central first difference; component-major blocks follow the representation.
DenseComplexMatrix discretize_ll(const Grid& g, double beta, double k, const MatrixRep& rep);

/// gp tensor identity, the right-hand side of the pencil.
DenseComplexMatrix gamma_plus_matrix(const Grid& g, const MatrixRep& rep);

/// H tensor identity minus gp * i(k/beta) x: the block-triangular form whose
/// spectrum equals the spectrum of H.
DenseComplexMatrix schrodinger_like_assembly(const Grid& g, double beta, double k,
                                             const MatrixRep& rep);

/// Reference for the square of the Lévy-Leblond assembly, built from closed
/// stencils (wide Laplacian and discrete commutator [D, x^2]); equals
/// discretize_ll squared on interior rows.
DenseComplexMatrix ll_square_reference(const Grid& g, double beta, double k, const MatrixRep& rep);

/// Smallest singular value of (Hll - E gp) by inverse-power iteration on the
/// Gram matrix with partially pivoted banded LU solves.  Throws numeric_error
/// if the iteration fails to settle.
double gamma_spectrum_probe(const DenseComplexMatrix& hll, const DenseComplexMatrix& gamma_plus,
                            double E);

/// Checks the block-triangular structure of an assembled Schrödinger-like
/// matrix against the tridiagonal H assembly.
std::vector<RelationCheck> check_block_structure_of(const DenseComplexMatrix& assembled,
                                                    const Grid& g, double beta, double k);

std::vector<RelationCheck> block_structure_check(const Grid& g, double beta, double k,
                                                 const MatrixRep& rep);

struct SpectrumReport {
  std::string note;
  std::vector<double> targets;
  std::vector<double> eigenvalues;
  std::vector<double> rel_errors;
  std::vector<double> probe_at_targets;
  std::vector<double> probe_at_midpoints;  // probe(omega*n) for n = 1..count-1
  std::vector<double> contrasts;           // probe(target_n)/probe(mid_n)
  bool eigen_pass = false;
  bool probe_pass = false;
  bool block_pass = false;

  bool pass() const { return eigen_pass && probe_pass && block_pass; }
};

/// Compares the lowest `count` eigenvalues against omega(n + 1/2), probes the
/// pencil at targets and midpoints, and verifies the block structure.
/// Pass thresholds: relative eigenvalue error < 1%, probe contrast < 0.05.
SpectrumReport harmonic_spectrum_check(double beta, double k, const Grid& g, int count);

}  // namespace ll

// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "tailcore/error.hpp"

namespace tailcore {

using Complex = std::complex<double>;
using MatrixXcd = Eigen::MatrixXcd;
using MatrixXd = Eigen::MatrixXd;
using VectorXcd = Eigen::VectorXcd;
using VectorXd = Eigen::VectorXd;

/// A finite-dimensional *-algebra, represented as a direct sum of full
/// matrix blocks M_{n_1} ⊕ … ⊕ M_{n_B}.  The commutative case is all
/// blocks of size 1.
class AlgebraShape {
 public:
  AlgebraShape() = default;
  explicit AlgebraShape(std::vector<int> block_dims);

  /// All-1x1 blocks (functions on d points).
  static AlgebraShape commutative(int d);

  const std::vector<int>& block_dims() const { return dims_; }
  int blocks() const { return static_cast<int>(dims_.size()); }
  int block_dim(int b) const { return dims_[static_cast<size_t>(b)]; }

  /// Real dimension of the self-adjoint part; equals the complex
  /// dimension of the algebra and the canonical basis length.
  int dim() const { return dim_; }
  /// Ambient matrix size n = Σ n_i.
  int ambient() const { return ambient_; }

  bool operator==(const AlgebraShape& o) const { return dims_ == o.dims_; }
  bool operator!=(const AlgebraShape& o) const { return !(*this == o); }

 private:
  std::vector<int> dims_;
  int dim_ = 0;
  int ambient_ = 0;
};

/// One member of the algebra: a list of per-block complex matrices.
struct Element {
  AlgebraShape shape;
  std::vector<MatrixXcd> blocks;

  static Element zero(const AlgebraShape& shape);
  static Element unit(const AlgebraShape& shape);

  Element adjoint() const;
  Complex trace() const;
  bool is_self_adjoint(double tol = 1e-10) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(Complex c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Complex c, Element a) { return a *= c; }
  friend Element operator*(Element a, Complex c) { return a *= c; }

  /// Blockwise (associative) matrix product.
  friend Element operator*(const Element& a, const Element& b);

  /// Blockwise transpose; positive and unital, but not completely positive.
  Element transpose() const;
};

void require_same_shape(const Element& a, const Element& b);

/// x∘y = (xy + yx)/2.
Element jordan_product(const Element& x, const Element& y);

/// Σ_blocks trace(x_b† y_b).  Real and positive-definite on self-adjoint
/// pairs.
Complex hs_inner(const Element& x, const Element& y);

double hs_norm(const Element& x);

enum class NormKind { Operator, Trace };
double norm(const Element& x, NormKind kind);
inline double operator_norm(const Element& x) { return norm(x, NormKind::Operator); }
inline double trace_norm(const Element& x) { return norm(x, NormKind::Trace); }

/// Spectral resolution of a self-adjoint element: eigenvalues are
/// clustered across blocks with gap > tol, projections are self-adjoint
/// idempotents summing to the unit.  Sorted by descending eigenvalue.
std::vector<std::pair<double, Element>> spectral_projections(const Element& x,
                                                             double tol = 1e-9);

/// Self-adjoint within tol and every eigenvalue >= -tol*(1 + ||x||_op).
bool is_psd(const Element& x, double tol = 1e-9);

/// The canonical orthonormal self-adjoint basis: per block, the diagonal
/// matrix units then, for each i<j in row-major order, the symmetric and
/// antisymmetric Hermitian off-diagonal units, each of HS-norm 1.  This
/// fixed ordering is what makes reports reproducible; coordinates
/// everywhere in the library refer to it.
class CanonicalBasis {
 public:
  explicit CanonicalBasis(AlgebraShape shape);

  const AlgebraShape& shape() const { return shape_; }
  int dim() const { return shape_.dim(); }

  Element element(int k) const;

  /// Complex coordinates of an arbitrary element (the basis is also a
  /// complex-orthonormal basis of the full algebra).
  VectorXcd coords(const Element& x) const;
  /// Real coordinates of a self-adjoint element; throws NOT_SELF_ADJOINT
  /// if the imaginary residue exceeds tol*(1+ HS-norm).
  VectorXd coords_sa(const Element& x, double tol = 1e-8) const;

  Element from_coords(const VectorXcd& c) const;
  Element from_coords(const VectorXd& c) const;

  /// Coordinates of the unit element.
  VectorXd unit_coords() const;

 private:
  enum class Kind { Diag, Sym, Asym };
  struct Entry {
    int block;
    int i;
    int j;
    Kind kind;
  };
  AlgebraShape shape_;
  std::vector<Entry> entries_;
};

}  // namespace tailcore

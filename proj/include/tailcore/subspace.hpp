// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "tailcore/algebra.hpp"

namespace tailcore {

/// Rank decisions use a relative SVD threshold with an absolute floor.
/// Singular values falling inside the ambiguity band around the threshold
/// raise RANK_TOL_AMBIGUOUS instead of being silently kept or dropped.
struct RankTol {
  double rel = 1e-9;
  double floor = 1e-12;

  double threshold(double largest) const {
    double t = rel * largest;
    return t > floor ? t : floor;
  }
};

/// A real linear subspace of the self-adjoint part, stored as an
/// orthonormal basis in canonical coordinates (one column per basis
/// element).  Every subspace of interest is *-closed, so this also
/// encodes the complex subspace S + iS.
class SaSubspace {
 public:
  SaSubspace() = default;
  SaSubspace(AlgebraShape shape, MatrixXd basis_coords);

  static SaSubspace zero(const AlgebraShape& shape);
  static SaSubspace full(const AlgebraShape& shape);

  const AlgebraShape& shape() const { return shape_; }
  int dim() const { return static_cast<int>(coords_.cols()); }
  int ambient_dim() const { return static_cast<int>(coords_.rows()); }

  /// D x dim matrix with orthonormal columns.
  const MatrixXd& basis_coords() const { return coords_; }
  Element basis_element(int k) const;
  std::vector<Element> basis_elements() const;

  /// D x D orthogonal projector onto the subspace.
  MatrixXd projector() const { return coords_ * coords_.transpose(); }

  VectorXd project(const VectorXd& v) const { return coords_ * (coords_.transpose() * v); }

 private:
  AlgebraShape shape_;
  MatrixXd coords_;  // D x dim, orthonormal columns
};

/// Orthonormal basis of the real span of the given self-adjoint elements
/// (non-self-adjoint inputs are split into their self-adjoint real and
/// imaginary parts first).
SaSubspace subspace_span(const AlgebraShape& shape, const std::vector<Element>& spanners,
                         const RankTol& tol = {});

/// Span of the columns of a coordinate matrix (D x m).
SaSubspace subspace_span_coords(const AlgebraShape& shape, const MatrixXd& cols,
                                const RankTol& tol = {});

SaSubspace subspace_intersect(const SaSubspace& s, const SaSubspace& t, const RankTol& tol = {});

/// {x self-adjoint : L(x) in S} for a linear map given by its matrix on
/// canonical coordinates.
SaSubspace subspace_preimage(const MatrixXd& map_matrix, const SaSubspace& s,
                             const RankTol& tol = {});

/// Image of S under the map, re-orthonormalized.
SaSubspace subspace_image(const MatrixXd& map_matrix, const SaSubspace& s,
                          const RankTol& tol = {});

bool subspace_contains(const SaSubspace& s, const Element& x, double tol = 1e-8);
bool subspace_contains_coords(const SaSubspace& s, const VectorXd& v, double tol = 1e-8);

/// Same span up to tolerance: equal dimensions and projector distance.
bool subspace_equal(const SaSubspace& s, const SaSubspace& t, double tol = 1e-8);

bool subspace_subset(const SaSubspace& s, const SaSubspace& t, double tol = 1e-8);

/// Orthonormal basis of the orthogonal complement within the full
/// self-adjoint part.
SaSubspace subspace_complement(const SaSubspace& s, const RankTol& tol = {});

/// Fix an overall sign so the first significant coordinate is positive;
/// keeps SVD-derived bases byte-reproducible.
void normalize_column_signs(MatrixXd& cols);

}  // namespace tailcore

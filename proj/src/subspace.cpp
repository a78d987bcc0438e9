// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#include "tailcore/subspace.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace tailcore {

namespace {

// Left singular vectors with singular value above the rank threshold.
// select_kernel instead returns right singular vectors *below* it.
MatrixXd svd_range(const MatrixXd& a, const RankTol& tol) {
  if (a.cols() == 0) return MatrixXd(a.rows(), 0);
  Eigen::BDCSVD<MatrixXd> svd(a, Eigen::ComputeThinU);
  const VectorXd& sv = svd.singularValues();
  double largest = sv.size() ? sv(0) : 0.0;
  double thr = tol.threshold(largest);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > 0.1 * thr && sv(i) < 10 * thr)
      throw Error(ErrorCode::RANK_TOL_AMBIGUOUS,
                  "singular value " + std::to_string(sv(i)) + " near rank threshold " +
                      std::to_string(thr) + "; instance is ill-conditioned");
    if (sv(i) >= thr) ++rank;
  }
  MatrixXd u = svd.matrixU().leftCols(rank);
  normalize_column_signs(u);
  return u;
}

MatrixXd svd_kernel(const MatrixXd& a, const RankTol& tol) {
  if (a.rows() == 0) {
    MatrixXd id = MatrixXd::Identity(a.cols(), a.cols());
    return id;
  }
  Eigen::BDCSVD<MatrixXd> svd(a, Eigen::ComputeFullV);
  const VectorXd& sv = svd.singularValues();
  double largest = sv.size() ? sv(0) : 0.0;
  double thr = tol.threshold(largest);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) >= thr) ++rank;
  MatrixXd v = svd.matrixV().rightCols(svd.matrixV().cols() - rank);
  normalize_column_signs(v);
  return v;
}

}  // namespace

void normalize_column_signs(MatrixXd& cols) {
  for (int c = 0; c < cols.cols(); ++c) {
    double big = cols.col(c).cwiseAbs().maxCoeff();
    if (big == 0) continue;
    for (int r = 0; r < cols.rows(); ++r) {
      if (std::abs(cols(r, c)) > 1e-6 * big) {
        if (cols(r, c) < 0) cols.col(c) *= -1.0;
        break;
      }
    }
  }
}

SaSubspace::SaSubspace(AlgebraShape shape, MatrixXd basis_coords)
    : shape_(std::move(shape)), coords_(std::move(basis_coords)) {
  if (coords_.rows() != shape_.dim())
    throw Error(ErrorCode::BLOCK_MISMATCH, "basis coordinate length does not match shape");
}

SaSubspace SaSubspace::zero(const AlgebraShape& shape) {
  return SaSubspace(shape, MatrixXd(shape.dim(), 0));
}

SaSubspace SaSubspace::full(const AlgebraShape& shape) {
  return SaSubspace(shape, MatrixXd::Identity(shape.dim(), shape.dim()));
}

Element SaSubspace::basis_element(int k) const {
  CanonicalBasis basis(shape_);
  return basis.from_coords(VectorXd(coords_.col(k)));
}

std::vector<Element> SaSubspace::basis_elements() const {
  CanonicalBasis basis(shape_);
  std::vector<Element> out;
  out.reserve(static_cast<size_t>(dim()));
  for (int k = 0; k < dim(); ++k) out.push_back(basis.from_coords(VectorXd(coords_.col(k))));
  return out;
}

SaSubspace subspace_span(const AlgebraShape& shape, const std::vector<Element>& spanners,
                         const RankTol& tol) {
  CanonicalBasis basis(shape);
  std::vector<VectorXd> cols;
  for (const auto& x : spanners) {
    // split x = u + iv with u, v self-adjoint
    Element u = x + x.adjoint();
    u *= Complex(0.5, 0);
    Element v = x - x.adjoint();
    v *= Complex(0, -0.5);
    VectorXd cu = basis.coords(u).real();
    VectorXd cv = basis.coords(v).real();
    cols.push_back(cu);
    if (cv.norm() > 1e-14 * (1 + cu.norm())) cols.push_back(cv);
  }
  MatrixXd m(shape.dim(), static_cast<Eigen::Index>(cols.size()));
  for (size_t i = 0; i < cols.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = cols[i];
  return subspace_span_coords(shape, m, tol);
}

SaSubspace subspace_span_coords(const AlgebraShape& shape, const MatrixXd& cols,
                                const RankTol& tol) {
  return SaSubspace(shape, svd_range(cols, tol));
}

SaSubspace subspace_intersect(const SaSubspace& s, const SaSubspace& t, const RankTol& tol) {
  if (s.shape() != t.shape())
    throw Error(ErrorCode::BLOCK_MISMATCH, "subspace_intersect: shapes differ");
  int d = s.ambient_dim();
  MatrixXd stacked(2 * d, d);
  stacked.topRows(d) = MatrixXd::Identity(d, d) - s.projector();
  stacked.bottomRows(d) = MatrixXd::Identity(d, d) - t.projector();
  return SaSubspace(s.shape(), svd_kernel(stacked, tol));
}

SaSubspace subspace_preimage(const MatrixXd& map_matrix, const SaSubspace& s,
                             const RankTol& tol) {
  if (map_matrix.rows() != s.ambient_dim() || map_matrix.cols() != s.ambient_dim())
    throw Error(ErrorCode::BLOCK_MISMATCH, "subspace_preimage: matrix size mismatch");
  int d = s.ambient_dim();
  MatrixXd a = (MatrixXd::Identity(d, d) - s.projector()) * map_matrix;
  return SaSubspace(s.shape(), svd_kernel(a, tol));
}

SaSubspace subspace_image(const MatrixXd& map_matrix, const SaSubspace& s, const RankTol& tol) {
  MatrixXd mapped = map_matrix * s.basis_coords();
  return subspace_span_coords(s.shape(), mapped, tol);
}

bool subspace_contains_coords(const SaSubspace& s, const VectorXd& v, double tol) {
  VectorXd resid = v - s.project(v);
  return resid.norm() <= tol * (1 + v.norm());
}

bool subspace_contains(const SaSubspace& s, const Element& x, double tol) {
  CanonicalBasis basis(s.shape());
  return subspace_contains_coords(s, basis.coords_sa(x, tol), tol);
}

bool subspace_equal(const SaSubspace& s, const SaSubspace& t, double tol) {
  if (s.dim() != t.dim()) return false;
  return (s.projector() - t.projector()).norm() <= tol * (1 + std::sqrt((double)s.dim()));
}

bool subspace_subset(const SaSubspace& s, const SaSubspace& t, double tol) {
  // every basis vector of s lies in t
  for (int k = 0; k < s.dim(); ++k)
    if (!subspace_contains_coords(t, VectorXd(s.basis_coords().col(k)), tol)) return false;
  return true;
}

SaSubspace subspace_complement(const SaSubspace& s, const RankTol& tol) {
  return SaSubspace(s.shape(), svd_kernel(MatrixXd(s.basis_coords().transpose()), tol));
}

}  // namespace tailcore

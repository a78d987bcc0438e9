// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#include "tailcore/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace tailcore {

namespace {

// Swap the diagonal entries at positions p, p+1 of an upper-triangular T
// by a unitary similarity, updating Q alongside.  The rotation takes the
// eigenvector of the trailing 2x2 block for T(p+1,p+1) into the leading
// position.
void swap_adjacent(MatrixXcd& t, MatrixXcd& q, int p) {
  Complex l1 = t(p, p), l2 = t(p + 1, p + 1), c = t(p, p + 1);
  Complex x0 = c, x1 = l2 - l1;
  double r = std::sqrt(std::norm(x0) + std::norm(x1));
  if (r == 0.0) return;  // equal eigenvalues, already diagonal: nothing to move
  Eigen::Matrix2cd g;
  g << x0 / r, -std::conj(x1) / r, x1 / r, std::conj(x0) / r;
  MatrixXcd cols = t.middleCols(p, 2) * g;
  t.middleCols(p, 2) = cols;
  MatrixXcd rows = g.adjoint() * t.middleRows(p, 2);
  t.middleRows(p, 2) = rows;
  MatrixXcd qc = q.middleCols(p, 2) * g;
  q.middleCols(p, 2) = qc;
  t(p + 1, p) = 0.0;
}

// Solve T11 Z - Z T22 = C with T11, T22 upper triangular and disjoint
// spectra; forward substitution over the columns of Z.
MatrixXcd triangular_sylvester(const MatrixXcd& t11, const MatrixXcd& t22, const MatrixXcd& c) {
  Eigen::Index k = t11.rows(), m = t22.rows();
  MatrixXcd z(k, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    VectorXcd rhs = c.col(j);
    if (j > 0) rhs += z.leftCols(j) * t22.block(0, j, j, 1);
    MatrixXcd shifted = t11 - t22(j, j) * MatrixXcd::Identity(k, k);
    z.col(j) = shifted.triangularView<Eigen::Upper>().solve(rhs);
  }
  return z;
}

int svd_rank(const MatrixXcd& a, double rel_tol) {
  Eigen::JacobiSVD<MatrixXcd> svd(a);
  const VectorXd& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  double thr = std::max(rel_tol * sv(0), 1e-14);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) >= thr) ++rank;
  return rank;
}

}  // namespace

std::vector<EigenvalueCluster> clustered_spectrum(const MatrixXd& a, double gap_tol) {
  MatrixXcd ac = a.cast<Complex>();
  Eigen::ComplexEigenSolver<MatrixXcd> es(ac, /*computeEigenvectors=*/false);
  std::vector<Complex> eigs(es.eigenvalues().data(),
                            es.eigenvalues().data() + es.eigenvalues().size());

  // union-find over all pairs within gap_tol; adjacency after a sort would
  // split conjugate clusters whose phases wrap around ±pi
  size_t n = eigs.size();
  std::vector<size_t> parent(n);
  for (size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (std::abs(eigs[i] - eigs[j]) <= gap_tol) parent[find(i)] = find(j);

  std::vector<EigenvalueCluster> out;
  std::vector<bool> done(n, false);
  for (size_t i = 0; i < n; ++i) {
    size_t root = find(i);
    if (done[root]) continue;
    done[root] = true;
    Complex sum = 0;
    int count = 0;
    for (size_t j = 0; j < n; ++j)
      if (find(j) == root) {
        sum += eigs[j];
        ++count;
      }
    EigenvalueCluster c;
    c.value = sum / static_cast<double>(count);
    c.algebraic = count;
    MatrixXcd shifted = ac - c.value * MatrixXcd::Identity(a.rows(), a.cols());
    c.geometric = static_cast<int>(a.rows()) - svd_rank(shifted, 1e-9);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const EigenvalueCluster& x, const EigenvalueCluster& y) {
    double mx = std::abs(x.value), my = std::abs(y.value);
    if (std::abs(mx - my) > 1e-12 * (1 + mx)) return mx > my;
    return std::arg(x.value) < std::arg(y.value);
  });
  return out;
}

SpectralProjection spectral_projector(const MatrixXd& a,
                                      const std::function<bool(Complex)>& select) {
  Eigen::Index d = a.rows();
  Eigen::ComplexSchur<MatrixXcd> schur(a.cast<Complex>());
  MatrixXcd t = schur.matrixT();
  MatrixXcd q = schur.matrixU();

  // bubble the selected eigenvalues into the leading positions
  Eigen::Index front = 0;
  for (Eigen::Index pos = 0; pos < d; ++pos) {
    if (!select(t(pos, pos))) continue;
    for (Eigen::Index p = pos; p > front; --p) swap_adjacent(t, q, static_cast<int>(p - 1));
    ++front;
  }
  Eigen::Index k = front;

  SpectralProjection out;
  out.rank = static_cast<int>(k);
  for (Eigen::Index i = 0; i < k; ++i) out.selected.push_back(t(i, i));

  MatrixXcd proj_t = MatrixXcd::Zero(d, d);
  proj_t.topLeftCorner(k, k).setIdentity();
  if (k > 0 && k < d) {
    MatrixXcd z = triangular_sylvester(t.topLeftCorner(k, k), t.bottomRightCorner(d - k, d - k),
                                       t.topRightCorner(k, d - k));
    proj_t.topRightCorner(k, d - k) = z;
  }
  MatrixXcd proj = q * proj_t * q.adjoint();
  out.imag_residual = proj.imag().cwiseAbs().maxCoeff();
  out.projector = proj.real();
  return out;
}

}  // namespace tailcore

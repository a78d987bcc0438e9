// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#include "tailcore/corestruct.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "tailcore/kernels.hpp"

namespace tailcore {

namespace {

// Kernel of a PSD Gram form; eigenvalues below the rank threshold count
// as zero.  The most negative eigenvalue doubles as a positivity check on
// whatever map produced the form.
MatrixXd psd_gram_kernel(const MatrixXd& gram, const RankTol& tol) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (gram + gram.transpose()));
  const VectorXd& ev = es.eigenvalues();  // ascending
  double top = std::max(ev.size() ? std::abs(ev(ev.size() - 1)) : 0.0, 0.0);
  if (ev.size() && ev(0) < -1e-8 * std::max(1.0, top))
    throw Error(ErrorCode::GRAM_NOT_PSD,
                "Schwarz-defect Gram form has eigenvalue " + std::to_string(ev(0)) +
                    "; the map is not positive");
  double thr = tol.threshold(top);
  int null_dim = 0;
  for (int i = 0; i < ev.size(); ++i)
    if (std::abs(ev(i)) < thr) ++null_dim;
  MatrixXd kernel = es.eigenvectors().leftCols(null_dim);
  normalize_column_signs(kernel);
  return kernel;
}

}  // namespace

SaSubspace definite_set(const UPMap& phi, const RankTol& tol) {
  CanonicalBasis basis(phi.shape());
  int d = basis.dim();
  std::vector<Element> es, fs;
  es.reserve(static_cast<size_t>(d));
  fs.reserve(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) {
    es.push_back(basis.element(k));
    fs.push_back(phi.apply(es.back()));
  }
  // q(x) = tr(φ(x²)) - tr(φ(x)²) with tr(φ(y)) = <φ†(1), y>
  Element weight = basis.from_coords(
      VectorXd(phi.adjoint().matrix() * basis.unit_coords()));
  MatrixXd gram = kernels::jordan_weight_gram(es, weight) - kernels::inner_gram(fs);
  return SaSubspace(phi.shape(), psd_gram_kernel(gram, tol));
}

SaSubspace b_phi(const UPMap& phi, const SaSubspace& definite, const RankTol& tol) {
  SaSubspace v = definite;
  int cap = phi.shape().dim() + 1;
  for (int it = 0; it <= cap; ++it) {
    SaSubspace next = subspace_intersect(definite, subspace_preimage(phi.lin.matrix(), v, tol), tol);
    if (next.dim() == v.dim()) return next;
    if (next.dim() > v.dim())
      throw Error(ErrorCode::ITERATION_OVERFLOW, "b_phi chain grew; tolerance trouble");
    v = next;
  }
  throw Error(ErrorCode::ITERATION_OVERFLOW, "b_phi chain failed to stabilize");
}

SaSubspace multiplicative_core(const UPMap& phi, const SaSubspace& bphi, const RankTol& tol) {
  SaSubspace w = bphi;
  int cap = phi.shape().dim() + 1;
  for (int it = 0; it <= cap; ++it) {
    SaSubspace next = subspace_image(phi.lin.matrix(), w, tol);
    if (next.dim() == w.dim() && subspace_equal(next, w, 1e-8)) return next;
    if (next.dim() > w.dim())
      throw Error(ErrorCode::ITERATION_OVERFLOW, "image chain grew; tolerance trouble");
    w = next;
  }
  throw Error(ErrorCode::ITERATION_OVERFLOW, "image chain failed to stabilize");
}

bool is_jordan_closed(const SaSubspace& s, double tol) {
  CanonicalBasis basis(s.shape());
  MatrixXd prods = kernels::pairwise_jordan_coords(basis, s.basis_elements());
  for (int c = 0; c < prods.cols(); ++c)
    if (!subspace_contains_coords(s, VectorXd(prods.col(c)), tol)) return false;
  return true;
}

SaSubspace jordan_generated(const SaSubspace& s, const RankTol& tol) {
  CanonicalBasis basis(s.shape());
  SaSubspace cur = s;
  int cap = s.ambient_dim() + 1;
  for (int it = 0; it <= cap; ++it) {
    MatrixXd prods = kernels::pairwise_jordan_coords(basis, cur.basis_elements());
    MatrixXd stacked(cur.ambient_dim(), cur.dim() + prods.cols());
    stacked.leftCols(cur.dim()) = cur.basis_coords();
    stacked.rightCols(prods.cols()) = prods;
    SaSubspace next = subspace_span_coords(s.shape(), stacked, tol);
    if (next.dim() == cur.dim()) return next;
    cur = next;
  }
  throw Error(ErrorCode::ITERATION_OVERFLOW, "jordan closure failed to stabilize");
}

SaSubspace largest_jordan_subalgebra(const SaSubspace& m_inf, const LinMap& e,
                                     const RankTol& tol) {
  CanonicalBasis basis(m_inf.shape());
  // q(x) = tr(E(x²) − x²) = <E†(1) − 1, x∘x> over the M∞ basis
  Element weight = basis.from_coords(
      VectorXd(e.adjoint().matrix() * basis.unit_coords() - basis.unit_coords()));
  MatrixXd gram = kernels::jordan_weight_gram(m_inf.basis_elements(), weight);
  MatrixXd kernel_in_tail = psd_gram_kernel(gram, tol);
  MatrixXd lifted = m_inf.basis_coords() * kernel_in_tail;
  normalize_column_signs(lifted);
  return SaSubspace(m_inf.shape(), lifted);
}

CoreReport analyze_core(const UPMap& phi, const AsymptoticProfile& profile,
                        const CoreOptions& opt) {
  CoreReport r;
  r.definite = definite_set(phi, opt.rank_tol);
  r.bphi = b_phi(phi, r.definite, opt.rank_tol);
  r.core = multiplicative_core(phi, r.bphi, opt.rank_tol);
  r.largest_jordan_in_tail =
      largest_jordan_subalgebra(profile.m_inf, profile.idem.e, opt.rank_tol);
  r.m_inf_jordan_closed = is_jordan_closed(profile.m_inf, opt.membership_tol);
  r.core_equals_tail = subspace_equal(r.core, profile.m_inf, opt.membership_tol);
  return r;
}

}  // namespace tailcore

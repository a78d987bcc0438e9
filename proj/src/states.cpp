// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#include "tailcore/states.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "tailcore/corestruct.hpp"
#include "tailcore/spectral.hpp"

namespace tailcore {

SaFunctional invariant_state(const UPMap& phi, double eig_tol) {
  MatrixXd dual = phi.lin.matrix().transpose();
  SpectralProjection p1 =
      spectral_projector(dual, [&](Complex z) { return std::abs(z - 1.0) <= eig_tol; });
  if (p1.rank == 0)
    throw Error(ErrorCode::NO_UNIT_EIGENVALUE,
                "dual map has no eigenvalue at 1; the input cannot be unital");
  CanonicalBasis basis(phi.shape());
  VectorXd mixed = basis.unit_coords() / static_cast<double>(phi.shape().ambient());
  Element density = basis.from_coords(VectorXd(p1.projector * mixed));
  double tr = density.trace().real();
  if (std::abs(tr) > 1e-14) density *= Complex(1.0 / tr, 0);
  return SaFunctional{phi.shape(), density};
}

bool exists_faithful_invariant_state(const SaFunctional& rho, double tol) {
  double scale = 1 + operator_norm(rho.density);
  auto spectral = spectral_projections(rho.density, 1e-12);
  double min_eig = spectral.empty() ? 0.0 : spectral.back().first;
  return min_eig > tol * scale;
}

Element support_projection(const Element& density, double tol) {
  double scale = 1 + operator_norm(density);
  Element p = Element::zero(density.shape);
  for (const auto& [lam, proj] : spectral_projections(density, 1e-12))
    if (lam > tol * scale) p += proj;
  return p;
}

bool exists_invariant_state_faithful_on(const SaFunctional& rho, const SaSubspace& n,
                                        double tol) {
  if (!subspace_contains(n, Element::unit(n.shape()), 1e-8) || !is_jordan_closed(n, 1e-8))
    throw Error(ErrorCode::NOT_JORDAN_CLOSED,
                "faithfulness test needs a Jordan-closed unital subspace");
  Element p = support_projection(rho.density, tol);

  // K = {x in N self-adjoint : P x = 0}; for self-adjoint x this already
  // forces x P = 0.  Columns: realified entries of P·b_j.
  int rows = 0;
  for (int b = 0; b < n.shape().blocks(); ++b)
    rows += 2 * n.shape().block_dim(b) * n.shape().block_dim(b);
  MatrixXd a(rows, n.dim());
  for (int j = 0; j < n.dim(); ++j) {
    Element pb = p * n.basis_element(j);
    int idx = 0;
    for (const auto& blk : pb.blocks)
      for (int c = 0; c < blk.cols(); ++c)
        for (int r = 0; r < blk.rows(); ++r) {
          a(idx++, j) = blk(r, c).real();
          a(idx++, j) = blk(r, c).imag();
        }
  }
  if (n.dim() == 0) return true;
  Eigen::BDCSVD<MatrixXd> svd(a);
  const VectorXd& sv = svd.singularValues();
  double thr = std::max(1e-9 * (sv.size() ? sv(0) : 0.0), 1e-12);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) >= thr) ++rank;
  return rank == n.dim();
}

NormConvergenceReport norm_convergence_report(const UPMap& phi, const SaFunctional& r,
                                              int n_max, double tol, const LinMap& e) {
  CanonicalBasis basis(phi.shape());
  VectorXd c = basis.coords_sa(r.density);
  MatrixXd dual = phi.lin.matrix().transpose();
  MatrixXd e_dual = e.matrix().transpose();

  NormConvergenceReport rep;
  rep.converged_to = trace_norm(basis.from_coords(VectorXd(e_dual * c)));

  VectorXd cur = c;
  rep.sequence.reserve(static_cast<size_t>(n_max) + 1);
  rep.n_at_convergence = -1;
  for (int n = 0; n <= n_max; ++n) {
    double a_n = trace_norm(basis.from_coords(cur));
    rep.sequence.push_back(a_n);
    if (rep.n_at_convergence < 0 && std::abs(a_n - rep.converged_to) <= tol)
      rep.n_at_convergence = n;
    if (n < n_max) cur = dual * cur;
  }
  rep.remainder_at_nmax = trace_norm(basis.from_coords(VectorXd(cur - e_dual * cur)));
  rep.vanishes = rep.converged_to <= tol;
  if (std::abs(rep.sequence.back() - rep.converged_to) > tol)
    throw Error(ErrorCode::NOT_CONVERGED,
                "functional norms have not reached the limit by n_max; increase n_max");
  return rep;
}

StateReport analyze_states(const UPMap& phi, const AsymptoticProfile& profile,
                           const SaSubspace& core, const StateOptions& opt) {
  StateReport out;
  out.invariant = invariant_state(phi, opt.eig_tol);
  out.maximal_support = support_projection(out.invariant.density);
  out.faithful_exists = exists_faithful_invariant_state(out.invariant);

  CanonicalBasis basis(phi.shape());
  SaSubspace perp = subspace_complement(core);
  out.all_complement_vanish = true;
  for (int k = 0; k < perp.dim(); ++k) {
    SaFunctional r{phi.shape(), perp.basis_element(k)};
    NormConvergenceReport rep =
        norm_convergence_report(phi, r, opt.n_max, opt.tol, profile.idem.e);
    DecayRecord rec;
    rec.density = r.density;
    rec.limit_trace_norm = rep.converged_to;
    rec.n_at_convergence = rep.n_at_convergence;
    out.complement_decays.push_back(std::move(rec));
    if (!rep.vanishes) out.all_complement_vanish = false;
  }
  return out;
}

}  // namespace tailcore

// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#include "tailcore/asymptotics.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace tailcore {

std::vector<EigenvalueCluster> superop_spectrum(const UPMap& phi, double gap_tol) {
  return clustered_spectrum(phi.lin.matrix(), gap_tol);
}

IdempotentResult peripheral_idempotent(const UPMap& phi, double eps_per) {
  const MatrixXd& s = phi.lin.matrix();
  auto clusters = clustered_spectrum(s, eps_per);

  for (const auto& c : clusters) {
    double mod = std::abs(c.value);
    if (mod > 1 - 10 * eps_per && mod < 1 - eps_per)
      throw Error(ErrorCode::SPECTRAL_GAP_AMBIGUOUS,
                  "eigenvalue modulus " + std::to_string(mod) +
                      " falls inside the peripheral ambiguity band");
    if (mod >= 1 - eps_per && c.geometric < c.algebraic)
      throw Error(ErrorCode::PERIPHERAL_DEFECTIVE,
                  "peripheral eigenvalue is defective; the map is not power-bounded");
  }

  IdempotentResult out;
  double decay = 0;
  for (const auto& c : clusters)
    if (std::abs(c.value) < 1 - eps_per) decay = std::max(decay, std::abs(c.value));
  out.decay_radius = decay;

  SpectralProjection proj =
      spectral_projector(s, [&](Complex z) { return std::abs(z) >= 1 - eps_per; });
  out.peripheral = proj.selected;
  std::sort(out.peripheral.begin(), out.peripheral.end(), [](Complex a, Complex b) {
    double ma = std::abs(a), mb = std::abs(b);
    if (std::abs(ma - mb) > 1e-12 * (1 + ma)) return ma > mb;
    return std::arg(a) < std::arg(b);
  });
  out.imag_residual = proj.imag_residual;

  const MatrixXd& e = proj.projector;
  out.idem_residual = (e * e - e).norm();
  out.commute_residual = (e * s - s * e).norm();
  CanonicalBasis basis(phi.shape());
  VectorXd u = basis.unit_coords();
  out.unital_residual = (e * u - u).norm();
  out.e = LinMap(phi.shape(), e);
  return out;
}

SaSubspace tail_system(const LinMap& e, const RankTol& tol) {
  return subspace_span_coords(e.shape(), e.matrix(), tol);
}

namespace {

Element random_tail_sa(const SaSubspace& m_inf, const CanonicalBasis& basis,
                       std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  VectorXd c(m_inf.dim());
  for (int i = 0; i < c.size(); ++i) c(i) = gauss(rng);
  return basis.from_coords(VectorXd(m_inf.basis_coords() * c));
}

}  // namespace

RestrictedMap restricted_automorphism(const UPMap& phi, const LinMap& e,
                                      const SaSubspace& m_inf, int cone_samples,
                                      std::uint64_t seed, double tol) {
  const MatrixXd& s = phi.lin.matrix();
  const MatrixXd& q = m_inf.basis_coords();
  RestrictedMap out;
  out.matrix = q.transpose() * s * q;
  int d = m_inf.ambient_dim();
  out.invariance_residual =
      ((MatrixXd::Identity(d, d) - m_inf.projector()) * s * q).norm();

  Eigen::JacobiSVD<MatrixXd> svd(out.matrix);
  double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  double smin =
      svd.singularValues().size() ? svd.singularValues()(svd.singularValues().size() - 1) : 0.0;
  out.min_singular_value = smin;
  if (m_inf.dim() > 0 && smin <= 1e-8 * std::max(1.0, smax))
    throw Error(ErrorCode::NOT_INVERTIBLE,
                "restriction of the map to the tail system is numerically singular");

  // Cone sampling under the order of M∞: shifted elements y + ||y||·1 and
  // intrinsic squares E(y²) are positive members; the restriction and its
  // inverse must keep them positive.
  CanonicalBasis basis(phi.shape());
  std::mt19937_64 rng(seed ^ 0xda3e39cb94b95bdbull);
  Eigen::PartialPivLU<MatrixXd> lu(out.matrix);
  out.cone_samples = cone_samples;
  for (int k = 0; k < cone_samples; ++k) {
    Element y = random_tail_sa(m_inf, basis, rng);
    Element pos = (k % 2 == 0)
                      ? y + Complex(operator_norm(y), 0) * Element::unit(phi.shape())
                      : e.apply(y * y);
    if (!is_psd(phi.apply(pos), tol)) ++out.cone_failures_forward;
    VectorXd c = m_inf.basis_coords().transpose() * basis.coords_sa(pos);
    VectorXd pre = lu.solve(c);
    Element inv = basis.from_coords(VectorXd(m_inf.basis_coords() * pre));
    if (!is_psd(inv, tol)) ++out.cone_failures_inverse;
  }
  return out;
}

Element intrinsic_jordan(const LinMap& e, const SaSubspace& m_inf, const Element& x,
                         const Element& y, double tol) {
  if (!subspace_contains(m_inf, x, tol) || !subspace_contains(m_inf, y, tol))
    throw Error(ErrorCode::NOT_IN_TAIL, "intrinsic product needs both factors in the tail system");
  return e.apply(jordan_product(x, y));
}

bool check_decay_condition(const LinMap& e, double tol) { return is_faithful_map(e, tol); }

PowerOracleResult power_subsequence_idempotent(const MatrixXd& sa_matrix, int n_max) {
  PowerOracleResult out;
  MatrixXd power = sa_matrix;
  MatrixXd best = sa_matrix;
  double best_resid = std::numeric_limits<double>::infinity();
  int best_n = 1;
  for (int n = 1; n <= n_max; ++n) {
    double resid = (power * power - power).norm();
    if (resid < best_resid) {
      best_resid = resid;
      best = power;
      best_n = n;
    }
    if (n < n_max) power = power * sa_matrix;
  }
  // polish by repeated squaring; keep the best idempotency residual seen
  MatrixXd t = best;
  for (int it = 0; it < 64; ++it) {
    t = t * t;
    double resid = (t * t - t).norm();
    if (resid < best_resid) {
      best_resid = resid;
      best = t;
    } else if (resid > 10 * best_resid) {
      break;
    }
  }
  out.idempotent = best;
  out.idem_residual = best_resid;
  out.best_n = best_n;
  return out;
}

AsymptoticProfile analyze_asymptotics(const UPMap& phi, const AsymptoticOptions& opt) {
  AsymptoticProfile p;
  p.idem = peripheral_idempotent(phi, opt.eps_per);
  p.m_inf = tail_system(p.idem.e, opt.rank_tol);
  p.unit_in_tail = subspace_contains(p.m_inf, Element::unit(phi.shape()), opt.check_tol);
  p.restricted =
      restricted_automorphism(phi, p.idem.e, p.m_inf, opt.cone_samples, opt.seed);
  p.decay_condition = check_decay_condition(p.idem.e);
  return p;
}

}  // namespace tailcore

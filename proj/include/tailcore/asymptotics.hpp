// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "tailcore/spectral.hpp"
#include "tailcore/subspace.hpp"
#include "tailcore/upmap.hpp"

namespace tailcore {

/// Spectrum of the superoperator on self-adjoint coordinates, clustered
/// and sorted by (-|λ|, arg λ).
std::vector<EigenvalueCluster> superop_spectrum(const UPMap& phi, double gap_tol = 1e-8);

struct IdempotentResult {
  LinMap e;
  std::vector<Complex> peripheral;
  double decay_radius = 0;   // spectral radius on ker E
  double idem_residual = 0;  // ||E² - E||_F
  double commute_residual = 0;
  double unital_residual = 0;
  double imag_residual = 0;
};

/// The idempotent limit point of {φⁿ}, constructed as the Riesz spectral
/// projection onto the eigenvalues with |λ| >= 1 - eps_per.  Raises
/// PERIPHERAL_DEFECTIVE when a peripheral eigenvalue is defective (the
/// input cannot be power-bounded) and SPECTRAL_GAP_AMBIGUOUS when an
/// eigenvalue modulus falls inside (1 - 10·eps_per, 1 - eps_per).
IdempotentResult peripheral_idempotent(const UPMap& phi, double eps_per = 1e-8);

/// Range of E on self-adjoint coordinates: the tail operator system.
SaSubspace tail_system(const LinMap& e, const RankTol& tol = {});

struct RestrictedMap {
  MatrixXd matrix;  // φ|M∞ in the M∞ basis
  double invariance_residual = 0;
  double min_singular_value = 0;
  int cone_samples = 0;
  int cone_failures_forward = 0;
  int cone_failures_inverse = 0;
};

/// Matrix of φ restricted to M∞ plus order-automorphism diagnostics: the
/// restriction must be invertible and both it and its inverse must
/// preserve the sampled positive cone of M∞.
RestrictedMap restricted_automorphism(const UPMap& phi, const LinMap& e,
                                      const SaSubspace& m_inf, int cone_samples = 256,
                                      std::uint64_t seed = 0, double tol = 1e-7);

/// E((xy + yx)/2) for x, y in the tail system; the product making
/// (M∞, ∘_E) a Jordan algebra with the ambient unit.
Element intrinsic_jordan(const LinMap& e, const SaSubspace& m_inf, const Element& x,
                         const Element& y, double tol = 1e-8);

/// True iff no nonzero positive element is annihilated in the limit,
/// decided by faithfulness of E.
bool check_decay_condition(const LinMap& e, double tol = 1e-9);

/// Independent cross-check for E: scan powers φⁿ for the best
/// near-idempotent and polish it by repeated squaring.  Stays entirely on
/// the power-iteration route, never touching the Schur path.
struct PowerOracleResult {
  MatrixXd idempotent;
  double idem_residual = 0;
  int best_n = 0;
};
PowerOracleResult power_subsequence_idempotent(const MatrixXd& sa_matrix, int n_max = 2048);

struct AsymptoticProfile {
  IdempotentResult idem;
  SaSubspace m_inf;
  RestrictedMap restricted;
  bool decay_condition = false;
  bool unit_in_tail = false;
};

struct AsymptoticOptions {
  double eps_per = 1e-8;
  RankTol rank_tol = {};
  double check_tol = 1e-8;
  int cone_samples = 256;
  std::uint64_t seed = 0;
};

AsymptoticProfile analyze_asymptotics(const UPMap& phi, const AsymptoticOptions& opt = {});

}  // namespace tailcore

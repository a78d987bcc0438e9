// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "tailcore/asymptotics.hpp"
#include "tailcore/subspace.hpp"
#include "tailcore/upmap.hpp"

namespace tailcore {

/// The maximal-support invariant state: density P₁(1/n), with P₁ the
/// spectral projection of φ† onto eigenvalue 1.  Any invariant density is
/// majorized into its support, so positive definiteness of this one
/// decides whether a faithful invariant state exists at all.
SaFunctional invariant_state(const UPMap& phi, double eig_tol = 1e-8);

bool exists_faithful_invariant_state(const SaFunctional& rho, double tol = 1e-9);

/// True iff some φ-invariant state restricts faithfully to the
/// Jordan-closed unital subspace N; decided on the maximal-support state
/// by testing whether N meets the annihilator of the support projection
/// only in 0.
bool exists_invariant_state_faithful_on(const SaFunctional& rho, const SaSubspace& n,
                                        double tol = 1e-9);

/// Support projection of a PSD density (sum of spectral projections with
/// eigenvalue above tolerance).
Element support_projection(const Element& density, double tol = 1e-9);

struct NormConvergenceReport {
  std::vector<double> sequence;  // a_n = ||φ†ⁿ(R)||₁, n = 0..n_max
  double converged_to = 0;       // ||E†(R)||₁
  bool vanishes = false;
  int n_at_convergence = 0;
  double remainder_at_nmax = 0;  // ||(I - E†)(φ†ⁿ R)||₁ at n = n_max
};

/// Trace-norm decay of a functional under the dual iterates, checked
/// against its limit through the tail projection.  NOT_CONVERGED when the
/// sequence has not reached the limit by n_max.
NormConvergenceReport norm_convergence_report(const UPMap& phi, const SaFunctional& r,
                                              int n_max, double tol, const LinMap& e);

struct DecayRecord {
  Element density;
  double limit_trace_norm = 0;
  int n_at_convergence = 0;
};

struct StateReport {
  SaFunctional invariant;
  Element maximal_support;
  bool faithful_exists = false;
  std::vector<DecayRecord> complement_decays;  // one per basis functional ⊥ C_φ
  bool all_complement_vanish = false;
};

struct StateOptions {
  int n_max = 512;
  double tol = 1e-6;
  double eig_tol = 1e-8;
};

StateReport analyze_states(const UPMap& phi, const AsymptoticProfile& profile,
                           const SaSubspace& core, const StateOptions& opt = {});

}  // namespace tailcore

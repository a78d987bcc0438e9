// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tailcore/asymptotics.hpp"
#include "tailcore/subspace.hpp"
#include "tailcore/upmap.hpp"

namespace tailcore {

/// {x : φ(x∘x) = φ(x)∘φ(x)}, computed as the nullspace of the PSD Gram
/// form q(x) = tr(φ(x²) − φ(x)²) over the canonical basis.  A negative
/// Gram eigenvalue beyond tolerance means the input is not actually a
/// positive map (GRAM_NOT_PSD).
SaSubspace definite_set(const UPMap& phi, const RankTol& tol = {});

/// Largest φ-invariant subspace of the definite set:
/// V₀ = M_φ, V_{k+1} = M_φ ∩ φ⁻¹(V_k), stabilized.
SaSubspace b_phi(const UPMap& phi, const SaSubspace& definite, const RankTol& tol = {});

/// Stabilized image chain C_φ = ∩ₙ φⁿ(B_φ); φ maps it onto itself.
SaSubspace multiplicative_core(const UPMap& phi, const SaSubspace& bphi,
                               const RankTol& tol = {});

/// All pairwise Jordan products of basis elements stay inside S.
bool is_jordan_closed(const SaSubspace& s, double tol = 1e-8);

/// Smallest Jordan-closed subspace containing S (S must contain the unit).
SaSubspace jordan_generated(const SaSubspace& s, const RankTol& tol = {});

/// Largest Jordan subalgebra of the tail system: the definite set of the
/// inclusion of (M∞, ∘_E) into the algebra, i.e. the nullspace in M∞ of
/// q(x) = tr(E(x²) − x²).  Coincides with the span of the ambient
/// projections lying in M∞.
SaSubspace largest_jordan_subalgebra(const SaSubspace& m_inf, const LinMap& e,
                                     const RankTol& tol = {});

struct CoreReport {
  SaSubspace definite;  // M_φ
  SaSubspace bphi;      // B_φ
  SaSubspace core;      // C_φ
  SaSubspace largest_jordan_in_tail;
  bool m_inf_jordan_closed = false;
  bool core_equals_tail = false;
};

struct CoreOptions {
  RankTol rank_tol = {};
  double membership_tol = 1e-8;
};

CoreReport analyze_core(const UPMap& phi, const AsymptoticProfile& profile,
                        const CoreOptions& opt = {});

}  // namespace tailcore

// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "tailcore/algebra.hpp"

namespace tailcore {

/// One clustered eigenvalue of a superoperator matrix.
struct EigenvalueCluster {
  Complex value;       // cluster mean
  int algebraic = 0;   // cluster size
  int geometric = 0;   // D - rank(A - value*I)
};

/// Eigenvalues of the (complexified) real matrix, clustered with the given
/// gap tolerance and sorted by (-|value|, arg value).
std::vector<EigenvalueCluster> clustered_spectrum(const MatrixXd& a, double gap_tol = 1e-8);

struct SpectralProjection {
  MatrixXd projector;      // real part of the Riesz projector
  double imag_residual;    // largest imaginary entry dropped in realification
  int rank = 0;            // number of selected eigenvalues
  std::vector<Complex> selected;
};

/// Riesz spectral projector of a real matrix onto the invariant subspace
/// of the eigenvalues chosen by `select`, computed from a reordered
/// complex Schur form and a triangular Sylvester solve.  The selected set
/// must be closed under conjugation for the projector to be real; the
/// dropped imaginary part is reported.
SpectralProjection spectral_projector(const MatrixXd& a,
                                      const std::function<bool(Complex)>& select);

}  // namespace tailcore

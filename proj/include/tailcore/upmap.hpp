// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tailcore/algebra.hpp"

namespace tailcore {

/// A linear map on the algebra, stored as its real matrix on canonical
/// self-adjoint coordinates.  Hermiticity preservation is automatic in
/// this representation; nothing else is assumed.
class LinMap {
 public:
  LinMap() = default;
  LinMap(AlgebraShape shape, MatrixXd sa_matrix);

  static LinMap identity(const AlgebraShape& shape);
  /// Blockwise transpose (diagonal ±1 on canonical coordinates).
  static LinMap blockwise_transpose(const AlgebraShape& shape);

  const AlgebraShape& shape() const { return shape_; }
  const MatrixXd& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

  Element apply(const Element& x) const;

  /// Hilbert-Schmidt adjoint: <adjoint(R), x> = <R, apply(x)>.  Realized
  /// by transposing the sa matrix; trace-preserving and positive whenever
  /// the original map is unital positive.
  LinMap adjoint() const { return LinMap(shape_, m_.transpose()); }

  LinMap compose(const LinMap& inner) const;
  LinMap power(int n) const;

  bool is_unital(double tol = 1e-10) const;

 private:
  AlgebraShape shape_;
  MatrixXd m_;
};

enum class CertMode { STOCHASTIC, CP_KRAUS, CP_COMPOSED_TRANSPOSE, CONVEX_MIX, ASSERTED };

const char* to_string(CertMode mode);

/// One Kraus family: ops map the source block into the target block.
struct KrausFamily {
  int target = 0;
  int source = 0;
  std::vector<MatrixXcd> ops;
};

/// Certification payload for building a UPMap.  Witnesses are kept so
/// validation can re-check the certificate after construction.
struct MapSpec {
  CertMode mode = CertMode::ASSERTED;
  MatrixXd dense;                  // stochastic matrix, or asserted sa_matrix
  std::vector<KrausFamily> kraus;  // kraus / kraus-then-transpose modes
  std::vector<std::pair<double, MapSpec>> mix;

  static MapSpec stochastic(MatrixXd rows);
  static MapSpec cp_kraus(std::vector<KrausFamily> families);
  static MapSpec cp_composed_transpose(std::vector<KrausFamily> families);
  static MapSpec convex_mix(std::vector<std::pair<double, MapSpec>> parts);
  static MapSpec asserted(MatrixXd sa_matrix);
};

/// A unital positive map with certification metadata.  Positivity of
/// ASSERTED maps is never proven; downstream reports carry the flag.
struct UPMap {
  LinMap lin;
  MapSpec cert;

  const AlgebraShape& shape() const { return lin.shape(); }
  CertMode cert_mode() const { return cert.mode; }
  bool positivity_certified() const;

  Element apply(const Element& x) const { return lin.apply(x); }
  LinMap adjoint() const { return lin.adjoint(); }
};

/// Construct and check a UPMap from a certification payload.  Unitality
/// is verified to 1e-10 in every mode.
UPMap build_map(const AlgebraShape& shape, const MapSpec& spec);

/// Diagnostics record; never throws.  `certificate_residual` is mode
/// specific: worst row-sum defect for stochastic maps, worst blockwise
/// unitality defect for Kraus maps, weight-sum defect for mixes.
struct UpDiagnostics {
  std::string cert_mode;
  double unitality_residual = 0;
  double certificate_residual = 0;
  double choi_min_eigenvalue = 0;        // Kraus modes; >= -tol expected
  double sampled_positivity_min = 0;     // ASSERTED: most negative output eigenvalue
  double sa_contraction_excess = 0;      // max over samples of ||phi(x)|| - ||x||
  bool positivity_unverified = false;
  bool passed = false;
};

UpDiagnostics validate_up(const UPMap& phi, int samples = 64, double tol = 1e-8,
                          std::uint64_t seed = 0);

/// True iff L(x) = 0 with x >= 0 forces x = 0; decided by positive
/// definiteness of the density L†(1), which represents the faithful
/// functional trace∘L.
bool is_faithful_map(const LinMap& l, double tol = 1e-9);

/// A self-adjoint normal functional rho(x) = <density, x>.
struct SaFunctional {
  AlgebraShape shape;
  Element density;
};

/// Norm of the functional over the self-adjoint unit ball = trace norm of
/// the representing density.
double sa_functional_norm(const SaFunctional& r);

}  // namespace tailcore

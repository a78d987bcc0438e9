// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#include "tailcore/upmap.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <random>

#include "tailcore/kernels.hpp"

namespace tailcore {

LinMap::LinMap(AlgebraShape shape, MatrixXd sa_matrix)
    : shape_(std::move(shape)), m_(std::move(sa_matrix)) {
  if (m_.rows() != shape_.dim() || m_.cols() != shape_.dim())
    throw Error(ErrorCode::BLOCK_MISMATCH, "sa_matrix must be D x D for the shape");
}

LinMap LinMap::identity(const AlgebraShape& shape) {
  return LinMap(shape, MatrixXd::Identity(shape.dim(), shape.dim()));
}

LinMap LinMap::blockwise_transpose(const AlgebraShape& shape) {
  CanonicalBasis basis(shape);
  VectorXd diag(shape.dim());
  for (int k = 0; k < shape.dim(); ++k) {
    Element e = basis.element(k);
    // transpose fixes diagonal and symmetric units, negates antisymmetric
    diag(k) = basis.coords(e.transpose()).real()(k);
  }
  return LinMap(shape, MatrixXd(diag.asDiagonal()));
}

Element LinMap::apply(const Element& x) const {
  if (x.shape != shape_) throw Error(ErrorCode::BLOCK_MISMATCH, "apply: shape mismatch");
  CanonicalBasis basis(shape_);
  VectorXcd c = basis.coords(x);
  VectorXcd out = m_ * c;
  return basis.from_coords(out);
}

LinMap LinMap::compose(const LinMap& inner) const {
  if (inner.shape_ != shape_) throw Error(ErrorCode::BLOCK_MISMATCH, "compose: shape mismatch");
  return LinMap(shape_, m_ * inner.m_);
}

LinMap LinMap::power(int n) const {
  MatrixXd acc = MatrixXd::Identity(m_.rows(), m_.cols());
  MatrixXd base = m_;
  int k = n;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return LinMap(shape_, acc);
}

bool LinMap::is_unital(double tol) const {
  CanonicalBasis basis(shape_);
  VectorXd u = basis.unit_coords();
  return (m_ * u - u).norm() <= tol * u.norm();
}

const char* to_string(CertMode mode) {
  switch (mode) {
    case CertMode::STOCHASTIC: return "stochastic";
    case CertMode::CP_KRAUS: return "kraus";
    case CertMode::CP_COMPOSED_TRANSPOSE: return "kraus_transpose";
    case CertMode::CONVEX_MIX: return "mix";
    case CertMode::ASSERTED: return "asserted";
  }
  return "unknown";
}

MapSpec MapSpec::stochastic(MatrixXd rows) {
  MapSpec s;
  s.mode = CertMode::STOCHASTIC;
  s.dense = std::move(rows);
  return s;
}

MapSpec MapSpec::cp_kraus(std::vector<KrausFamily> families) {
  MapSpec s;
  s.mode = CertMode::CP_KRAUS;
  s.kraus = std::move(families);
  return s;
}

MapSpec MapSpec::cp_composed_transpose(std::vector<KrausFamily> families) {
  MapSpec s;
  s.mode = CertMode::CP_COMPOSED_TRANSPOSE;
  s.kraus = std::move(families);
  return s;
}

MapSpec MapSpec::convex_mix(std::vector<std::pair<double, MapSpec>> parts) {
  MapSpec s;
  s.mode = CertMode::CONVEX_MIX;
  s.mix = std::move(parts);
  return s;
}

MapSpec MapSpec::asserted(MatrixXd sa_matrix) {
  MapSpec s;
  s.mode = CertMode::ASSERTED;
  s.dense = std::move(sa_matrix);
  return s;
}

namespace {

bool spec_certified(const MapSpec& spec) {
  if (spec.mode == CertMode::ASSERTED) return false;
  if (spec.mode == CertMode::CONVEX_MIX)
    for (const auto& [w, part] : spec.mix) {
      (void)w;
      if (!spec_certified(part)) return false;
    }
  return true;
}

}  // namespace

bool UPMap::positivity_certified() const { return spec_certified(cert); }

namespace {

constexpr double kUnitalTol = 1e-10;

void check_kraus_shapes(const AlgebraShape& shape, const std::vector<KrausFamily>& families) {
  for (const auto& fam : families) {
    if (fam.target < 0 || fam.target >= shape.blocks() || fam.source < 0 ||
        fam.source >= shape.blocks())
      throw Error(ErrorCode::BLOCK_MISMATCH, "kraus family block index out of range");
    for (const auto& a : fam.ops)
      if (a.rows() != shape.block_dim(fam.target) || a.cols() != shape.block_dim(fam.source))
        throw Error(ErrorCode::BLOCK_MISMATCH, "kraus operator has wrong dimensions");
  }
}

// Worst blockwise defect of sum_k A_k A_k† = 1 per target block.
double kraus_unitality_residual(const AlgebraShape& shape,
                                const std::vector<KrausFamily>& families) {
  double worst = 0;
  for (int t = 0; t < shape.blocks(); ++t) {
    MatrixXcd s = MatrixXcd::Zero(shape.block_dim(t), shape.block_dim(t));
    for (const auto& fam : families)
      if (fam.target == t)
        for (const auto& a : fam.ops) s += a * a.adjoint();
    worst = std::max(worst,
                     (s - MatrixXcd::Identity(s.rows(), s.cols())).cwiseAbs().maxCoeff());
  }
  return worst;
}

Element apply_kraus(const AlgebraShape& shape, const std::vector<KrausFamily>& families,
                    const Element& x) {
  Element out = Element::zero(shape);
  for (const auto& fam : families)
    for (const auto& a : fam.ops)
      out.blocks[static_cast<size_t>(fam.target)] +=
          a * x.blocks[static_cast<size_t>(fam.source)] * a.adjoint();
  return out;
}

MatrixXd kraus_superop(const AlgebraShape& shape, const std::vector<KrausFamily>& families) {
  CanonicalBasis basis(shape);
  return kernels::superop_matrix(
      basis, [&](const Element& e) { return apply_kraus(shape, families, e); });
}

MatrixXd build_sa_matrix(const AlgebraShape& shape, const MapSpec& spec) {
  switch (spec.mode) {
    case CertMode::STOCHASTIC: {
      for (int n : shape.block_dims())
        if (n != 1)
          throw Error(ErrorCode::BLOCK_MISMATCH, "stochastic mode needs an all-1x1 shape");
      const MatrixXd& p = spec.dense;
      if (p.rows() != shape.blocks() || p.cols() != shape.blocks())
        throw Error(ErrorCode::BLOCK_MISMATCH, "stochastic matrix must be B x B");
      if ((p.array() < 0).any())
        throw Error(ErrorCode::NEGATIVE_ENTRY, "stochastic matrix has a negative entry");
      VectorXd rowsum = p.rowwise().sum();
      if ((rowsum.array() - 1).abs().maxCoeff() > kUnitalTol)
        throw Error(ErrorCode::NOT_UNITAL, "stochastic row sums must equal 1");
      // column-vector action: the sa matrix is the stochastic matrix itself
      return p;
    }
    case CertMode::CP_KRAUS: {
      check_kraus_shapes(shape, spec.kraus);
      if (kraus_unitality_residual(shape, spec.kraus) > kUnitalTol)
        throw Error(ErrorCode::KRAUS_NOT_UNITAL, "sum_k A_k A_k† != 1 on some block");
      return kraus_superop(shape, spec.kraus);
    }
    case CertMode::CP_COMPOSED_TRANSPOSE: {
      check_kraus_shapes(shape, spec.kraus);
      if (kraus_unitality_residual(shape, spec.kraus) > kUnitalTol)
        throw Error(ErrorCode::KRAUS_NOT_UNITAL, "sum_k A_k A_k† != 1 on some block");
      return kraus_superop(shape, spec.kraus) *
             LinMap::blockwise_transpose(shape).matrix();
    }
    case CertMode::CONVEX_MIX: {
      if (spec.mix.empty())
        throw Error(ErrorCode::SCHEMA_VIOLATION, "convex mix needs at least one part");
      double wsum = 0;
      MatrixXd acc = MatrixXd::Zero(shape.dim(), shape.dim());
      for (const auto& [w, part] : spec.mix) {
        if (w < 0) throw Error(ErrorCode::NEGATIVE_ENTRY, "mix weight is negative");
        wsum += w;
        acc += w * build_sa_matrix(shape, part);
      }
      if (std::abs(wsum - 1) > kUnitalTol)
        throw Error(ErrorCode::NOT_UNITAL, "mix weights must sum to 1");
      return acc;
    }
    case CertMode::ASSERTED: {
      if (spec.dense.rows() != shape.dim() || spec.dense.cols() != shape.dim())
        throw Error(ErrorCode::BLOCK_MISMATCH, "asserted sa_matrix must be D x D");
      return spec.dense;
    }
  }
  throw Error(ErrorCode::SCHEMA_VIOLATION, "unknown certification mode");
}

}  // namespace

UPMap build_map(const AlgebraShape& shape, const MapSpec& spec) {
  LinMap lin(shape, build_sa_matrix(shape, spec));
  if (!lin.is_unital(kUnitalTol))
    throw Error(ErrorCode::NOT_UNITAL, "map does not fix the unit");
  return UPMap{std::move(lin), spec};
}

namespace {

Element random_sa(const AlgebraShape& shape, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Element x = Element::zero(shape);
  for (auto& blk : x.blocks) {
    for (int i = 0; i < blk.rows(); ++i)
      for (int j = 0; j < blk.cols(); ++j) blk(i, j) = Complex(gauss(rng), gauss(rng));
    blk = 0.5 * (blk + blk.adjoint()).eval();
  }
  return x;
}

double min_eigenvalue(const Element& x) {
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& blk : x.blocks) {
    MatrixXcd h = 0.5 * (blk + blk.adjoint());
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    lo = std::min(lo, es.eigenvalues()(0));
  }
  return lo;
}

double choi_min_eig(const AlgebraShape& shape, const std::vector<KrausFamily>& families) {
  // The Choi matrix of each (target, source) component is assembled from
  // the stored witnesses; PSD by construction, so this certifies the
  // payload rather than the abstract map.
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& fam : families) {
    int rows = shape.block_dim(fam.target) * shape.block_dim(fam.source);
    MatrixXcd choi = MatrixXcd::Zero(rows, rows);
    for (const auto& a : fam.ops) {
      VectorXcd v(rows);
      int idx = 0;
      for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i) v(idx++) = a(i, j);
      choi += v * v.adjoint();
    }
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(choi, Eigen::EigenvaluesOnly);
    lo = std::min(lo, es.eigenvalues()(0));
  }
  return std::isfinite(lo) ? lo : 0.0;
}

double certificate_residual(const AlgebraShape& shape, const MapSpec& spec) {
  switch (spec.mode) {
    case CertMode::STOCHASTIC: {
      double neg = std::max(0.0, -spec.dense.minCoeff());
      double rows = (spec.dense.rowwise().sum().array() - 1).abs().maxCoeff();
      return std::max(neg, rows);
    }
    case CertMode::CP_KRAUS:
    case CertMode::CP_COMPOSED_TRANSPOSE:
      return kraus_unitality_residual(shape, spec.kraus);
    case CertMode::CONVEX_MIX: {
      double wsum = 0, worst = 0;
      for (const auto& [w, part] : spec.mix) {
        wsum += w;
        worst = std::max(worst, certificate_residual(shape, part));
      }
      return std::max(worst, std::abs(wsum - 1));
    }
    case CertMode::ASSERTED:
      return 0;
  }
  return 0;
}

double worst_choi(const AlgebraShape& shape, const MapSpec& spec) {
  switch (spec.mode) {
    case CertMode::CP_KRAUS:
    case CertMode::CP_COMPOSED_TRANSPOSE:
      return choi_min_eig(shape, spec.kraus);
    case CertMode::CONVEX_MIX: {
      double lo = 0;
      bool any = false;
      for (const auto& [w, part] : spec.mix) {
        (void)w;
        if (part.mode == CertMode::CP_KRAUS || part.mode == CertMode::CP_COMPOSED_TRANSPOSE ||
            part.mode == CertMode::CONVEX_MIX) {
          double v = worst_choi(shape, part);
          lo = any ? std::min(lo, v) : v;
          any = true;
        }
      }
      return lo;
    }
    default:
      return 0;
  }
}

}  // namespace

UpDiagnostics validate_up(const UPMap& phi, int samples, double tol, std::uint64_t seed) {
  UpDiagnostics d;
  d.cert_mode = to_string(phi.cert_mode());
  d.positivity_unverified = !phi.positivity_certified();

  CanonicalBasis basis(phi.shape());
  VectorXd u = basis.unit_coords();
  d.unitality_residual = (phi.lin.matrix() * u - u).norm();
  d.certificate_residual = certificate_residual(phi.shape(), phi.cert);
  d.choi_min_eigenvalue = worst_choi(phi.shape(), phi.cert);

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  if (phi.cert_mode() == CertMode::ASSERTED) {
    double lo = 0;
    for (int s = 0; s < samples; ++s) {
      Element x = random_sa(phi.shape(), rng);
      Element psd = x * x;  // blockwise square of self-adjoint is PSD
      lo = std::min(lo, min_eigenvalue(phi.apply(psd)));
    }
    d.sampled_positivity_min = lo;
  }

  double excess = 0;
  for (int s = 0; s < samples; ++s) {
    Element x = random_sa(phi.shape(), rng);
    excess = std::max(excess, operator_norm(phi.apply(x)) - operator_norm(x));
  }
  d.sa_contraction_excess = excess;

  d.passed = d.unitality_residual <= tol && d.certificate_residual <= tol &&
             d.choi_min_eigenvalue >= -tol && d.sampled_positivity_min >= -tol &&
             d.sa_contraction_excess <= tol;
  return d;
}

bool is_faithful_map(const LinMap& l, double tol) {
  CanonicalBasis basis(l.shape());
  Element density = basis.from_coords(VectorXd(l.adjoint().matrix() * basis.unit_coords()));
  double scale = 1 + operator_norm(density);
  return min_eigenvalue(density) > tol * scale;
}

double sa_functional_norm(const SaFunctional& r) {
  if (!r.density.is_self_adjoint(1e-8))
    throw Error(ErrorCode::NOT_SELF_ADJOINT, "functional density must be self-adjoint");
  return trace_norm(r.density);
}

}  // namespace tailcore

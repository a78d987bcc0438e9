// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#include "tailcore/algebra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace tailcore {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

AlgebraShape::AlgebraShape(std::vector<int> block_dims) : dims_(std::move(block_dims)) {
  if (dims_.empty()) throw Error(ErrorCode::SCHEMA_VIOLATION, "shape needs at least one block");
  for (int n : dims_) {
    if (n < 1) throw Error(ErrorCode::SCHEMA_VIOLATION, "block sizes must be positive");
    dim_ += n * n;
    ambient_ += n;
  }
}

AlgebraShape AlgebraShape::commutative(int d) {
  return AlgebraShape(std::vector<int>(static_cast<size_t>(d), 1));
}

Element Element::zero(const AlgebraShape& shape) {
  Element e;
  e.shape = shape;
  for (int b = 0; b < shape.blocks(); ++b)
    e.blocks.push_back(MatrixXcd::Zero(shape.block_dim(b), shape.block_dim(b)));
  return e;
}

Element Element::unit(const AlgebraShape& shape) {
  Element e;
  e.shape = shape;
  for (int b = 0; b < shape.blocks(); ++b)
    e.blocks.push_back(MatrixXcd::Identity(shape.block_dim(b), shape.block_dim(b)));
  return e;
}

Element Element::adjoint() const {
  Element e = *this;
  for (auto& blk : e.blocks) blk = blk.adjoint().eval();
  return e;
}

Complex Element::trace() const {
  Complex t = 0;
  for (const auto& blk : blocks) t += blk.trace();
  return t;
}

bool Element::is_self_adjoint(double tol) const {
  double resid = 0, scale = 1;
  for (const auto& blk : blocks) {
    resid = std::max(resid, (blk - blk.adjoint()).cwiseAbs().maxCoeff());
    scale = std::max(scale, blk.cwiseAbs().maxCoeff());
  }
  return resid <= tol * scale;
}

Element& Element::operator+=(const Element& o) {
  require_same_shape(*this, o);
  for (size_t b = 0; b < blocks.size(); ++b) blocks[b] += o.blocks[b];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_shape(*this, o);
  for (size_t b = 0; b < blocks.size(); ++b) blocks[b] -= o.blocks[b];
  return *this;
}

Element& Element::operator*=(Complex c) {
  for (auto& blk : blocks) blk *= c;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  require_same_shape(a, b);
  Element r = a;
  for (size_t i = 0; i < r.blocks.size(); ++i) r.blocks[i] = a.blocks[i] * b.blocks[i];
  return r;
}

Element Element::transpose() const {
  Element e = *this;
  for (auto& blk : e.blocks) blk = blk.transpose().eval();
  return e;
}

void require_same_shape(const Element& a, const Element& b) {
  if (a.shape != b.shape) throw Error(ErrorCode::BLOCK_MISMATCH, "element shapes differ");
}

Element jordan_product(const Element& x, const Element& y) {
  require_same_shape(x, y);
  Element r = x;
  for (size_t b = 0; b < r.blocks.size(); ++b)
    r.blocks[b] = 0.5 * (x.blocks[b] * y.blocks[b] + y.blocks[b] * x.blocks[b]);
  return r;
}

Complex hs_inner(const Element& x, const Element& y) {
  require_same_shape(x, y);
  Complex s = 0;
  for (size_t b = 0; b < x.blocks.size(); ++b)
    s += (x.blocks[b].adjoint() * y.blocks[b]).trace();
  return s;
}

double hs_norm(const Element& x) {
  double s = 0;
  for (const auto& blk : x.blocks) s += blk.squaredNorm();
  return std::sqrt(s);
}

double norm(const Element& x, NormKind kind) {
  double op = 0, tr = 0;
  for (const auto& blk : x.blocks) {
    Eigen::JacobiSVD<MatrixXcd> svd(blk);
    op = std::max(op, svd.singularValues().size() ? svd.singularValues()(0) : 0.0);
    tr += svd.singularValues().sum();
  }
  return kind == NormKind::Operator ? op : tr;
}

std::vector<std::pair<double, Element>> spectral_projections(const Element& x, double tol) {
  if (!x.is_self_adjoint(std::max(tol, 1e-10)))
    throw Error(ErrorCode::NOT_SELF_ADJOINT, "spectral_projections needs a self-adjoint input");

  // Collect (eigenvalue, block, eigenvector) across all blocks, then
  // cluster globally so a value shared by two blocks yields one projection.
  struct Pair {
    double lambda;
    int block;
    VectorXcd vec;
  };
  std::vector<Pair> pairs;
  for (size_t b = 0; b < x.blocks.size(); ++b) {
    MatrixXcd h = 0.5 * (x.blocks[b] + x.blocks[b].adjoint());
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
    for (int k = 0; k < es.eigenvalues().size(); ++k)
      pairs.push_back({es.eigenvalues()(k), static_cast<int>(b), es.eigenvectors().col(k)});
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const Pair& a, const Pair& b) { return a.lambda > b.lambda; });

  std::vector<std::pair<double, Element>> out;
  size_t i = 0;
  while (i < pairs.size()) {
    size_t j = i + 1;
    while (j < pairs.size() && pairs[j - 1].lambda - pairs[j].lambda <= tol) ++j;
    Element proj = Element::zero(x.shape);
    double lam = 0;
    for (size_t k = i; k < j; ++k) {
      lam += pairs[k].lambda;
      proj.blocks[static_cast<size_t>(pairs[k].block)] +=
          pairs[k].vec * pairs[k].vec.adjoint();
    }
    out.emplace_back(lam / static_cast<double>(j - i), std::move(proj));
    i = j;
  }
  return out;
}

bool is_psd(const Element& x, double tol) {
  if (!x.is_self_adjoint(tol)) return false;
  double scale = 1 + operator_norm(x);
  for (const auto& blk : x.blocks) {
    MatrixXcd h = 0.5 * (blk + blk.adjoint());
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().size() && es.eigenvalues()(0) < -tol * scale) return false;
  }
  return true;
}

CanonicalBasis::CanonicalBasis(AlgebraShape shape) : shape_(std::move(shape)) {
  for (int b = 0; b < shape_.blocks(); ++b) {
    int n = shape_.block_dim(b);
    for (int i = 0; i < n; ++i) entries_.push_back({b, i, i, Kind::Diag});
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        entries_.push_back({b, i, j, Kind::Sym});
        entries_.push_back({b, i, j, Kind::Asym});
      }
  }
}

Element CanonicalBasis::element(int k) const {
  const Entry& e = entries_[static_cast<size_t>(k)];
  Element x = Element::zero(shape_);
  auto& blk = x.blocks[static_cast<size_t>(e.block)];
  switch (e.kind) {
    case Kind::Diag:
      blk(e.i, e.i) = 1.0;
      break;
    case Kind::Sym:
      blk(e.i, e.j) = kInvSqrt2;
      blk(e.j, e.i) = kInvSqrt2;
      break;
    case Kind::Asym:
      blk(e.i, e.j) = Complex(0, kInvSqrt2);
      blk(e.j, e.i) = Complex(0, -kInvSqrt2);
      break;
  }
  return x;
}

VectorXcd CanonicalBasis::coords(const Element& x) const {
  if (x.shape != shape_) throw Error(ErrorCode::BLOCK_MISMATCH, "coords: shape mismatch");
  VectorXcd c(dim());
  for (int k = 0; k < dim(); ++k) {
    const Entry& e = entries_[static_cast<size_t>(k)];
    const auto& blk = x.blocks[static_cast<size_t>(e.block)];
    switch (e.kind) {
      case Kind::Diag:
        c(k) = blk(e.i, e.i);
        break;
      case Kind::Sym:
        c(k) = kInvSqrt2 * (blk(e.i, e.j) + blk(e.j, e.i));
        break;
      case Kind::Asym:
        c(k) = Complex(0, kInvSqrt2) * (blk(e.j, e.i) - blk(e.i, e.j));
        break;
    }
  }
  return c;
}

VectorXd CanonicalBasis::coords_sa(const Element& x, double tol) const {
  VectorXcd c = coords(x);
  if (c.imag().cwiseAbs().maxCoeff() > tol * (1 + c.norm()))
    throw Error(ErrorCode::NOT_SELF_ADJOINT, "coords_sa: element is not self-adjoint");
  return c.real();
}

Element CanonicalBasis::from_coords(const VectorXcd& c) const {
  Element x = Element::zero(shape_);
  for (int k = 0; k < dim(); ++k) {
    const Entry& e = entries_[static_cast<size_t>(k)];
    auto& blk = x.blocks[static_cast<size_t>(e.block)];
    switch (e.kind) {
      case Kind::Diag:
        blk(e.i, e.i) += c(k);
        break;
      case Kind::Sym:
        blk(e.i, e.j) += kInvSqrt2 * c(k);
        blk(e.j, e.i) += kInvSqrt2 * c(k);
        break;
      case Kind::Asym:
        blk(e.i, e.j) += Complex(0, kInvSqrt2) * c(k);
        blk(e.j, e.i) += Complex(0, -kInvSqrt2) * c(k);
        break;
    }
  }
  return x;
}

Element CanonicalBasis::from_coords(const VectorXd& c) const {
  return from_coords(VectorXcd(c.cast<Complex>()));
}

VectorXd CanonicalBasis::unit_coords() const {
  VectorXd c = VectorXd::Zero(dim());
  for (int k = 0; k < dim(); ++k)
    if (entries_[static_cast<size_t>(k)].kind == Kind::Diag) c(k) = 1.0;
  return c;
}

}  // namespace tailcore

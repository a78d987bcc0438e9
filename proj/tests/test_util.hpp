// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>

#include "tailcore/algebra.hpp"
#include "tailcore/upmap.hpp"

namespace tailcore::testutil {

inline Element random_sa_element(const AlgebraShape& shape, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Element x = Element::zero(shape);
  for (auto& blk : x.blocks) {
    for (int i = 0; i < blk.rows(); ++i)
      for (int j = 0; j < blk.cols(); ++j) blk(i, j) = Complex(gauss(rng), gauss(rng));
    blk = 0.5 * (blk + blk.adjoint()).eval();
  }
  return x;
}

// Commutative element from explicit coordinates.
inline Element diag_element(const std::vector<double>& entries) {
  AlgebraShape shape = AlgebraShape::commutative(static_cast<int>(entries.size()));
  Element x = Element::zero(shape);
  for (size_t i = 0; i < entries.size(); ++i) x.blocks[i](0, 0) = entries[i];
  return x;
}

// The worked 3-state stochastic map: one transient state feeding a
// 2-cycle.
inline UPMap sec5_map() {
  MatrixXd p(3, 3);
  p << 1.0 / 3, 1.0 / 3, 1.0 / 3, 0, 0, 1, 0, 1, 0;
  return build_map(AlgebraShape::commutative(3), MapSpec::stochastic(p));
}

// Off-diagonal damping on one 2x2 block, as a certified CP map:
// x -> (1-t) x + t ZxZ with t = (1-lambda)/2.
inline UPMap lambda_map_kraus(double lambda) {
  AlgebraShape shape({2});
  double t = (1 - lambda) / 2;
  MatrixXcd a0 = std::sqrt(1 - t) * MatrixXcd::Identity(2, 2);
  MatrixXcd a1 = MatrixXcd::Zero(2, 2);
  a1(0, 0) = std::sqrt(t);
  a1(1, 1) = -std::sqrt(t);
  return build_map(shape, MapSpec::cp_kraus({KrausFamily{0, 0, {a0, a1}}}));
}

// Same map in ASSERTED mode: diag(1, 1, lambda, lambda) on canonical
// coordinates [e00, e11, sym01, asym01].
inline UPMap lambda_map_asserted(double lambda) {
  AlgebraShape shape({2});
  VectorXd d(4);
  d << 1, 1, lambda, lambda;
  return build_map(shape, MapSpec::asserted(MatrixXd(d.asDiagonal())));
}

inline Element pauli_x() {
  Element x = Element::zero(AlgebraShape({2}));
  x.blocks[0](0, 1) = 1;
  x.blocks[0](1, 0) = 1;
  return x;
}

inline Element pauli_z() {
  Element z = Element::zero(AlgebraShape({2}));
  z.blocks[0](0, 0) = 1;
  z.blocks[0](1, 1) = -1;
  return z;
}

}  // namespace tailcore::testutil

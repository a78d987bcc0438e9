// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#include "tailcore/kernels.hpp"

namespace tailcore::kernels {

namespace {

inline double re_weighted_jordan(const Element& w, const Element& x, const Element& y) {
  // Re <w, x∘y> = Re tr(w x y) for self-adjoint w, x, y.
  Complex t = 0;
  for (size_t b = 0; b < w.blocks.size(); ++b)
    t += (w.blocks[b] * x.blocks[b] * y.blocks[b]).trace();
  return t.real();
}

}  // namespace

MatrixXd superop_matrix_serial(const CanonicalBasis& basis, const ElementAction& action) {
  int d = basis.dim();
  MatrixXd m(d, d);
  for (int k = 0; k < d; ++k)
    m.col(k) = basis.coords(action(basis.element(k))).real();
  return m;
}

MatrixXd superop_matrix(const CanonicalBasis& basis, const ElementAction& action) {
  int d = basis.dim();
  MatrixXd m(d, d);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < d; ++k)
    m.col(k) = basis.coords(action(basis.element(k))).real();
  return m;
}

MatrixXd jordan_weight_gram_serial(const std::vector<Element>& xs, const Element& w) {
  int m = static_cast<int>(xs.size());
  MatrixXd g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      double v = re_weighted_jordan(w, xs[static_cast<size_t>(i)], xs[static_cast<size_t>(j)]);
      g(i, j) = v;
      g(j, i) = v;
    }
  return g;
}

MatrixXd jordan_weight_gram(const std::vector<Element>& xs, const Element& w) {
  int m = static_cast<int>(xs.size());
  MatrixXd g(m, m);
  int pairs = m * (m + 1) / 2;
#pragma omp parallel for schedule(dynamic, 8)
  for (int p = 0; p < pairs; ++p) {
    // unrank p -> (i, j), i <= j, row-major over the upper triangle
    int i = 0, off = 0;
    while (off + (m - i) <= p) {
      off += m - i;
      ++i;
    }
    int j = i + (p - off);
    double v = re_weighted_jordan(w, xs[static_cast<size_t>(i)], xs[static_cast<size_t>(j)]);
    g(i, j) = v;
    g(j, i) = v;
  }
  return g;
}

MatrixXd inner_gram_serial(const std::vector<Element>& xs) {
  int m = static_cast<int>(xs.size());
  MatrixXd g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      double v = hs_inner(xs[static_cast<size_t>(i)], xs[static_cast<size_t>(j)]).real();
      g(i, j) = v;
      g(j, i) = v;
    }
  return g;
}

MatrixXd inner_gram(const std::vector<Element>& xs) {
  int m = static_cast<int>(xs.size());
  MatrixXd g(m, m);
  int pairs = m * (m + 1) / 2;
#pragma omp parallel for schedule(dynamic, 8)
  for (int p = 0; p < pairs; ++p) {
    int i = 0, off = 0;
    while (off + (m - i) <= p) {
      off += m - i;
      ++i;
    }
    int j = i + (p - off);
    double v = hs_inner(xs[static_cast<size_t>(i)], xs[static_cast<size_t>(j)]).real();
    g(i, j) = v;
    g(j, i) = v;
  }
  return g;
}

MatrixXd pairwise_jordan_coords_serial(const CanonicalBasis& basis,
                                       const std::vector<Element>& xs) {
  int m = static_cast<int>(xs.size());
  int pairs = m * (m + 1) / 2;
  MatrixXd out(basis.dim(), pairs);
  int p = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j, ++p)
      out.col(p) = basis
                       .coords(jordan_product(xs[static_cast<size_t>(i)],
                                              xs[static_cast<size_t>(j)]))
                       .real();
  return out;
}

MatrixXd pairwise_jordan_coords(const CanonicalBasis& basis, const std::vector<Element>& xs) {
  int m = static_cast<int>(xs.size());
  int pairs = m * (m + 1) / 2;
  MatrixXd out(basis.dim(), pairs);
#pragma omp parallel for schedule(dynamic, 8)
  for (int p = 0; p < pairs; ++p) {
    int i = 0, off = 0;
    while (off + (m - i) <= p) {
      off += m - i;
      ++i;
    }
    int j = i + (p - off);
    out.col(p) = basis
                     .coords(jordan_product(xs[static_cast<size_t>(i)],
                                            xs[static_cast<size_t>(j)]))
                     .real();
  }
  return out;
}

}  // namespace tailcore::kernels

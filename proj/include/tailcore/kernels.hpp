// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "tailcore/algebra.hpp"

namespace tailcore::kernels {

using ElementAction = std::function<Element(const Element&)>;

/// Matrix of a linear action on canonical self-adjoint coordinates:
/// column k holds the coordinates of action(e_k).  The OpenMP variant
/// parallelizes over columns; every column is computed independently, so
/// both variants produce bit-identical results.
MatrixXd superop_matrix(const CanonicalBasis& basis, const ElementAction& action);
MatrixXd superop_matrix_serial(const CanonicalBasis& basis, const ElementAction& action);

/// G(i,j) = Re <w, x_i ∘ x_j>  over a family of self-adjoint elements.
/// This is the assembly kernel behind the definite-set and
/// largest-Jordan-subalgebra Gram forms.
MatrixXd jordan_weight_gram(const std::vector<Element>& xs, const Element& w);
MatrixXd jordan_weight_gram_serial(const std::vector<Element>& xs, const Element& w);

/// G(i,j) = Re <x_i, x_j>.
MatrixXd inner_gram(const std::vector<Element>& xs);
MatrixXd inner_gram_serial(const std::vector<Element>& xs);

/// Canonical coordinates of all pairwise Jordan products x_i ∘ x_j for
/// i <= j, one product per column, ordered by (i, j) row-major over the
/// upper triangle.  Feeds the Jordan-closure iteration.
MatrixXd pairwise_jordan_coords(const CanonicalBasis& basis, const std::vector<Element>& xs);
MatrixXd pairwise_jordan_coords_serial(const CanonicalBasis& basis,
                                       const std::vector<Element>& xs);

}  // namespace tailcore::kernels

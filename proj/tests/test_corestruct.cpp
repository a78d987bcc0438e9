// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "tailcore/corestruct.hpp"
#include "test_util.hpp"

using namespace tailcore;
using namespace tailcore::testutil;

namespace {

UPMap identity_map(const AlgebraShape& shape) {
  std::vector<KrausFamily> fams;
  for (int b = 0; b < shape.blocks(); ++b)
    fams.push_back(KrausFamily{
        b, b, {MatrixXcd::Identity(shape.block_dim(b), shape.block_dim(b))}});
  return build_map(shape, MapSpec::cp_kraus(fams));
}

}  // namespace

TEST_CASE("definite set of the worked map is the constants") {
  UPMap phi = sec5_map();
  SaSubspace mphi = definite_set(phi);
  CHECK(mphi.dim() == 1);
  CHECK(subspace_contains(mphi, Element::unit(phi.shape())));

  // brute-force oracle: scan a coordinate grid for φ(f∘f) = φ(f)∘φ(f);
  // every grid solution must be constant, every constant a solution.
  for (double a = -1; a <= 1.01; a += 0.5)
    for (double b = -1; b <= 1.01; b += 0.5)
      for (double c = -1; c <= 1.01; c += 0.5) {
        Element f = diag_element({a, b, c});
        Element defect = phi.apply(jordan_product(f, f)) -
                         jordan_product(phi.apply(f), phi.apply(f));
        bool definite = hs_norm(defect) < 1e-10;
        bool constant = std::abs(a - b) < 1e-12 && std::abs(b - c) < 1e-12;
        CHECK(definite == constant);
      }
}

TEST_CASE("definite set of the identity is everything") {
  AlgebraShape shape({2, 1});
  CHECK(definite_set(identity_map(shape)).dim() == shape.dim());
}

TEST_CASE("definite set of the lambda map is the diagonal subalgebra") {
  // direct 2x2 computation: equality in the Schwarz inequality forces the
  // off-diagonal entry to vanish when 0 < lambda < 1
  UPMap phi = lambda_map_kraus(0.5);
  SaSubspace mphi = definite_set(phi);
  CHECK(mphi.dim() == 2);
  CHECK(subspace_contains(mphi, pauli_z()));
  CHECK(subspace_contains(mphi, Element::unit(phi.shape())));
  CHECK_FALSE(subspace_contains(mphi, pauli_x()));
}

TEST_CASE("gram form flags a non-positive map") {
  // unital but scales off-diagonals up by 2: not a contraction, not positive
  VectorXd d(4);
  d << 1, 1, 2, 2;
  UPMap bad = build_map(AlgebraShape({2}), MapSpec::asserted(MatrixXd(d.asDiagonal())));
  try {
    definite_set(bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GRAM_NOT_PSD);
  }
}

TEST_CASE("b_phi examples") {
  UPMap phi = sec5_map();
  SaSubspace b = b_phi(phi, definite_set(phi));
  CHECK(b.dim() == 1);
  CHECK(subspace_contains(b, Element::unit(phi.shape())));

  AlgebraShape shape({2});
  UPMap id = identity_map(shape);
  CHECK(b_phi(id, definite_set(id)).dim() == shape.dim());

  // a jordan automorphism (unitary conjugation) is everywhere definite
  MatrixXcd u(2, 2);
  u << Complex(0, 1), 0, 0, Complex(1, 0);
  UPMap conj = build_map(shape, MapSpec::cp_kraus({KrausFamily{0, 0, {u}}}));
  CHECK(b_phi(conj, definite_set(conj)).dim() == shape.dim());
}

TEST_CASE("multiplicative core examples") {
  UPMap phi = sec5_map();
  SaSubspace core = multiplicative_core(phi, b_phi(phi, definite_set(phi)));
  CHECK(core.dim() == 1);
  CHECK(subspace_contains(core, Element::unit(phi.shape())));

  AlgebraShape shape({2});
  UPMap id = identity_map(shape);
  CHECK(multiplicative_core(id, b_phi(id, definite_set(id))).dim() == shape.dim());

  UPMap lam = lambda_map_kraus(0.5);
  SaSubspace lam_core = multiplicative_core(lam, b_phi(lam, definite_set(lam)));
  CHECK(lam_core.dim() == 2);
  CHECK(subspace_contains(lam_core, pauli_z()));
}

TEST_CASE("jordan closedness") {
  UPMap phi = sec5_map();
  SaSubspace m_inf = tail_system(peripheral_idempotent(phi).e);
  CHECK_FALSE(is_jordan_closed(m_inf));  // x_a² escapes

  AlgebraShape m2({2});
  SaSubspace diag = subspace_span(m2, {Element::unit(m2), pauli_z()});
  CHECK(is_jordan_closed(diag));

  SaSubspace trivial = subspace_span(m2, {Element::unit(m2)});
  CHECK(is_jordan_closed(trivial));
}

TEST_CASE("jordan closure of the worked tail is the full algebra") {
  UPMap phi = sec5_map();
  SaSubspace m_inf = tail_system(peripheral_idempotent(phi).e);
  SaSubspace gen = jordan_generated(m_inf);
  CHECK(gen.dim() == 3);

  AlgebraShape m2({2});
  SaSubspace diag = subspace_span(m2, {Element::unit(m2), pauli_z()});
  CHECK(subspace_equal(jordan_generated(diag), diag));

  SaSubspace trivial = subspace_span(m2, {Element::unit(m2)});
  CHECK(subspace_equal(jordan_generated(trivial), trivial));
}

TEST_CASE("largest jordan subalgebra inside the tail") {
  UPMap phi = sec5_map();
  IdempotentResult idem = peripheral_idempotent(phi);
  SaSubspace m_inf = tail_system(idem.e);
  SaSubspace largest = largest_jordan_subalgebra(m_inf, idem.e);
  CHECK(largest.dim() == 1);
  CHECK(subspace_contains(largest, Element::unit(phi.shape())));

  // jordan-closed tail: all of it
  UPMap lam = lambda_map_kraus(0.5);
  IdempotentResult lam_idem = peripheral_idempotent(lam);
  SaSubspace lam_tail = tail_system(lam_idem.e);
  CHECK(subspace_equal(largest_jordan_subalgebra(lam_tail, lam_idem.e), lam_tail));

  // E = identity: everything
  AlgebraShape shape({2});
  UPMap id = identity_map(shape);
  IdempotentResult id_idem = peripheral_idempotent(id);
  SaSubspace full = tail_system(id_idem.e);
  CHECK(largest_jordan_subalgebra(full, id_idem.e).dim() == shape.dim());
}

TEST_CASE("largest jordan subalgebra equals the projection span (commutative oracle)") {
  // enumerate all 0/1 vectors of C^3, keep those inside the tail, span
  UPMap phi = sec5_map();
  IdempotentResult idem = peripheral_idempotent(phi);
  SaSubspace m_inf = tail_system(idem.e);
  std::vector<Element> kept;
  for (int mask = 0; mask < 8; ++mask) {
    Element p = diag_element({double(mask & 1), double((mask >> 1) & 1), double((mask >> 2) & 1)});
    if (subspace_contains(m_inf, p)) kept.push_back(p);
  }
  SaSubspace span = subspace_span(phi.shape(), kept);
  CHECK(subspace_equal(span, largest_jordan_subalgebra(m_inf, idem.e)));
  CHECK(span.dim() == 1);  // only 0 and 1 survive
}

TEST_CASE("core report wiring and the containment chain") {
  AsymptoticOptions aopt;
  aopt.seed = 5;
  for (UPMap phi : {sec5_map(), lambda_map_kraus(0.5)}) {
    AsymptoticProfile prof = analyze_asymptotics(phi, aopt);
    CoreReport core = analyze_core(phi, prof);
    CHECK(subspace_subset(core.core, core.bphi));
    CHECK(subspace_subset(core.bphi, core.definite));
    CHECK(subspace_subset(core.core, prof.m_inf));
    CHECK(core.m_inf_jordan_closed == core.core_equals_tail);
  }
  AsymptoticProfile prof = analyze_asymptotics(sec5_map(), aopt);
  CoreReport core = analyze_core(sec5_map(), prof);
  CHECK_FALSE(core.m_inf_jordan_closed);
  CHECK_FALSE(core.core_equals_tail);
  CHECK(subspace_equal(core.core, core.largest_jordan_in_tail));
}

TEST_CASE("phi is jordan-multiplicative on the core") {
  std::mt19937_64 rng(61);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (UPMap phi : {sec5_map(), lambda_map_kraus(0.4)}) {
    SaSubspace core = multiplicative_core(phi, b_phi(phi, definite_set(phi)));
    CanonicalBasis basis(phi.shape());
    for (int trial = 0; trial < 10; ++trial) {
      VectorXd cx(core.dim()), cy(core.dim());
      for (int i = 0; i < core.dim(); ++i) {
        cx(i) = gauss(rng);
        cy(i) = gauss(rng);
      }
      Element x = basis.from_coords(VectorXd(core.basis_coords() * cx));
      Element y = basis.from_coords(VectorXd(core.basis_coords() * cy));
      Element lhs = phi.apply(jordan_product(x, y));
      Element rhs = jordan_product(phi.apply(x), phi.apply(y));
      CHECK(hs_norm(lhs - rhs) < 1e-8 * (1 + hs_norm(x) * hs_norm(y)));
    }
  }
}

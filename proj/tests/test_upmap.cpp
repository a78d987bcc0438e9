// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "tailcore/upmap.hpp"
#include "test_util.hpp"

using namespace tailcore;
using namespace tailcore::testutil;

TEST_CASE("stochastic build: the worked 3-state map") {
  UPMap phi = sec5_map();
  CHECK(phi.cert_mode() == CertMode::STOCHASTIC);
  CHECK(phi.lin.is_unital());

  // phi applied to (3,0,0) -> (1,0,0): first row is the uniform average
  Element x = diag_element({3, 0, 0});
  Element y = phi.apply(x);
  CHECK(y.blocks[0](0, 0).real() == doctest::Approx(1).epsilon(1e-12));
  CHECK(std::abs(y.blocks[1](0, 0)) < 1e-14);
  CHECK(std::abs(y.blocks[2](0, 0)) < 1e-14);
}

TEST_CASE("stochastic build rejects bad input") {
  MatrixXd neg(2, 2);
  neg << 1.5, -0.5, 0, 1;
  CHECK_THROWS_AS(build_map(AlgebraShape::commutative(2), MapSpec::stochastic(neg)), Error);

  MatrixXd notrow(2, 2);
  notrow << 0.5, 0.4, 0, 1;
  CHECK_THROWS_AS(build_map(AlgebraShape::commutative(2), MapSpec::stochastic(notrow)), Error);

  MatrixXd ok = MatrixXd::Identity(2, 2);
  CHECK_THROWS_AS(build_map(AlgebraShape({2}), MapSpec::stochastic(ok)), Error);
}

TEST_CASE("kraus identity map") {
  AlgebraShape shape({2});
  UPMap id = build_map(shape, MapSpec::cp_kraus({KrausFamily{0, 0, {MatrixXcd::Identity(2, 2)}}}));
  CHECK((id.lin.matrix() - MatrixXd::Identity(4, 4)).norm() < 1e-12);

  std::mt19937_64 rng(31);
  Element x = random_sa_element(shape, rng);
  CHECK(hs_norm(id.apply(x) - x) < 1e-12);
}

TEST_CASE("kraus non-unital family is rejected") {
  AlgebraShape shape({2});
  MatrixXcd half = 0.5 * MatrixXcd::Identity(2, 2);
  CHECK_THROWS_AS(build_map(shape, MapSpec::cp_kraus({KrausFamily{0, 0, {half}}})), Error);
}

TEST_CASE("lambda map: asserted matrix matches the kraus build") {
  UPMap a = lambda_map_asserted(0.5);
  UPMap k = lambda_map_kraus(0.5);
  CHECK((a.lin.matrix() - k.lin.matrix()).norm() < 1e-12);
  CHECK_FALSE(a.positivity_certified());
  CHECK(k.positivity_certified());

  // off-diagonal damping: sigma_x -> sigma_x / 2
  Element sx = pauli_x();
  CHECK(hs_norm(a.apply(sx) - Complex(0.5, 0) * sx) < 1e-12);

  // sa_matrix eigenvalues are {1, 1, 1/2, 1/2}
  Eigen::VectorXcd ev = a.lin.matrix().eigenvalues();
  std::vector<double> mods;
  for (int i = 0; i < ev.size(); ++i) mods.push_back(ev(i).real());
  std::sort(mods.begin(), mods.end());
  CHECK(mods[0] == doctest::Approx(0.5));
  CHECK(mods[1] == doctest::Approx(0.5));
  CHECK(mods[2] == doctest::Approx(1.0));
  CHECK(mods[3] == doctest::Approx(1.0));
}

TEST_CASE("asserted map must fix the unit") {
  MatrixXd m = 0.5 * MatrixXd::Identity(3, 3);
  CHECK_THROWS_AS(build_map(AlgebraShape::commutative(3), MapSpec::asserted(m)), Error);
}

TEST_CASE("convex mix") {
  AlgebraShape shape({2});
  MapSpec mix = MapSpec::convex_mix({{0.25, lambda_map_kraus(1.0).cert},
                                     {0.75, lambda_map_kraus(0.0).cert}});
  UPMap phi = build_map(shape, mix);
  // mixes the off-diagonal scale: 0.25*1 + 0.75*0
  CHECK(hs_norm(phi.apply(pauli_x()) - Complex(0.25, 0) * pauli_x()) < 1e-12);
  CHECK(phi.positivity_certified());

  CHECK_THROWS_AS(build_map(shape, MapSpec::convex_mix({{0.5, lambda_map_kraus(1.0).cert}})),
                  Error);
}

TEST_CASE("validate_up on certified and asserted maps") {
  UpDiagnostics d1 = validate_up(sec5_map(), 32, 1e-8, 5);
  CHECK(d1.passed);
  CHECK(d1.unitality_residual < 1e-12);
  CHECK_FALSE(d1.positivity_unverified);

  UpDiagnostics d2 = validate_up(lambda_map_kraus(0.5), 32, 1e-8, 5);
  CHECK(d2.passed);
  CHECK(d2.choi_min_eigenvalue >= -1e-12);

  // swap-and-negate map: diag(a,b) -> diag(b,a), off-diagonals negated.
  // Positive (transpose composed with a flip) but only ASSERTED here; an
  // exhaustive grid over 2x2 PSD inputs confirms what sampling reports.
  MatrixXd m = MatrixXd::Zero(4, 4);
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(2, 2) = -1;
  m(3, 3) = -1;
  UPMap swapneg = build_map(AlgebraShape({2}), MapSpec::asserted(m));
  for (double p = 0; p <= 2.01; p += 0.5)
    for (double q = 0; q <= 2.01; q += 0.5)
      for (double re = -1; re <= 1.01; re += 0.5)
        for (double im = -1; im <= 1.01; im += 0.5) {
          if (re * re + im * im > p * q + 1e-12) continue;  // keep PSD inputs
          Element x = Element::zero(AlgebraShape({2}));
          x.blocks[0](0, 0) = p;
          x.blocks[0](1, 1) = q;
          x.blocks[0](0, 1) = Complex(re, im);
          x.blocks[0](1, 0) = Complex(re, -im);
          REQUIRE(is_psd(x, 1e-9));
          CHECK(is_psd(swapneg.apply(x), 1e-9));
        }
  UpDiagnostics d3 = validate_up(swapneg, 64, 1e-8, 5);
  CHECK(d3.positivity_unverified);
  CHECK(d3.sampled_positivity_min >= -1e-9);
  CHECK(d3.sa_contraction_excess <= 1e-9);
}

TEST_CASE("adjoint is the HS dual and an involution") {
  UPMap phi = sec5_map();
  LinMap dual = phi.adjoint();

  // the invariant probability vector of the dual
  Element r = diag_element({0, 0.5, 0.5});
  CHECK(hs_norm(dual.apply(r) - r) < 1e-12);

  CHECK((dual.adjoint().matrix() - phi.lin.matrix()).norm() == 0);

  std::mt19937_64 rng(32);
  AlgebraShape shape({2, 1});
  UPMap lam = lambda_map_kraus(0.5);
  for (int trial = 0; trial < 20; ++trial) {
    Element x = random_sa_element(AlgebraShape({2}), rng);
    Element y = random_sa_element(AlgebraShape({2}), rng);
    Complex lhs = hs_inner(lam.adjoint().apply(x), y);
    Complex rhs = hs_inner(x, lam.apply(y));
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("powers by repeated application match the matrix power") {
  UPMap phi = sec5_map();
  std::mt19937_64 rng(33);
  Element x = random_sa_element(phi.shape(), rng);
  Element iterated = x;
  for (int n = 1; n <= 64; ++n) {
    iterated = phi.apply(iterated);
    if (n == 1 || n == 7 || n == 64) {
      Element direct = LinMap(phi.shape(), phi.lin.power(n).matrix()).apply(x);
      CHECK(hs_norm(iterated - direct) < 1e-8 * (1 + hs_norm(x)));
    }
  }
}

TEST_CASE("kadison-schwarz defect is PSD for certified maps") {
  std::mt19937_64 rng(34);
  UPMap lam = lambda_map_kraus(0.3);
  for (int trial = 0; trial < 20; ++trial) {
    Element x = random_sa_element(lam.shape(), rng);
    Element defect = lam.apply(jordan_product(x, x)) -
                     jordan_product(lam.apply(x), lam.apply(x));
    CHECK(is_psd(defect, 1e-8));
  }
}

TEST_CASE("faithfulness") {
  // column sums of the worked map are (1/3, 4/3, 4/3), all positive
  UPMap phi = sec5_map();
  CHECK(is_faithful_map(phi.lin));
  CanonicalBasis basis(phi.shape());
  VectorXd col = phi.adjoint().matrix() * basis.unit_coords();
  CHECK(col(0) == doctest::Approx(1.0 / 3));
  CHECK(col(1) == doctest::Approx(4.0 / 3));
  CHECK(col(2) == doctest::Approx(4.0 / 3));

  // x -> (coordinate 1 of x) * unit kills e22
  MatrixXd proj(2, 2);
  proj << 1, 0, 1, 0;
  UPMap killer = build_map(AlgebraShape::commutative(2), MapSpec::asserted(proj));
  CHECK_FALSE(is_faithful_map(killer.lin));

  // automorphisms are faithful
  UPMap id = build_map(AlgebraShape({2}),
                       MapSpec::cp_kraus({KrausFamily{0, 0, {MatrixXcd::Identity(2, 2)}}}));
  CHECK(is_faithful_map(id.lin));
}

TEST_CASE("stochastic faithfulness oracle: nonzero columns") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    int d = 2 + int(rng() % 5);
    MatrixXd p = MatrixXd::Zero(d, d);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < d; ++i) {
      double sum = 0;
      for (int j = 0; j < d; ++j) {
        double keep = unif(rng) < 0.5 ? 0.0 : unif(rng);
        p(i, j) = keep;
        sum += keep;
      }
      if (sum == 0) {
        p(i, int(rng() % d)) = 1.0;
        sum = 1.0;
      }
      p.row(i) /= sum;
    }
    UPMap phi = build_map(AlgebraShape::commutative(d), MapSpec::stochastic(p));
    bool all_columns_hit = true;
    for (int j = 0; j < d; ++j)
      if (p.col(j).sum() == 0) all_columns_hit = false;
    CHECK(is_faithful_map(phi.lin) == all_columns_hit);
  }
}

TEST_CASE("functional norms") {
  SaFunctional r1{AlgebraShape({2}), pauli_z()};
  CHECK(sa_functional_norm(r1) == doctest::Approx(2));

  SaFunctional r0{AlgebraShape({2}), Element::zero(AlgebraShape({2}))};
  CHECK(sa_functional_norm(r0) == doctest::Approx(0));

  SaFunctional r{AlgebraShape::commutative(3), diag_element({0.5, -1.0 / 3, 1.0 / 6})};
  CHECK(sa_functional_norm(r) == doctest::Approx(1));
}

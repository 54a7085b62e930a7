#include <doctest.h>

#include "cyhodge/quotient.hpp"
#include "cyhodge/suite.hpp"

using namespace cyhodge;

TEST_CASE("ball membership") {
  const LatticeIsometry& iso = catalog_order3(1);
  CycMat h = eigenspace_hermitian_form(iso, 3, 2);
  HermitianDiag d = hermitian_diagonalize(h);
  REQUIRE(d.sign.size() == 2);
  long pos = -1, neg = -1;
  for (size_t i = 0; i < d.sign.size(); ++i) (d.sign[i] > 0 ? pos : neg) = static_cast<long>(i);
  REQUIRE(pos >= 0);
  REQUIRE(neg >= 0);
  CHECK(ball_membership(h, d.basis.col(pos)));
  CHECK(!ball_membership(h, d.basis.col(neg)));
  CHECK_THROWS_AS(ball_membership(h, CycMat(2, 1)), std::invalid_argument);
}

TEST_CASE("hermitian_diagonalize really diagonalizes") {
  const LatticeIsometry& iso = catalog_order3(3);
  CycMat h = eigenspace_hermitian_form(iso, 3, 2);
  HermitianDiag d = hermitian_diagonalize(h);
  CycMat transformed = d.basis.transpose() * h * conj_entrywise(d.basis);
  for (long i = 0; i < transformed.rows(); ++i)
    for (long j = 0; j < transformed.cols(); ++j) {
      if (i == j) CHECK(transformed(i, j) == d.diag[i]);
      else CHECK(transformed(i, j).is_zero());
    }
}

TEST_CASE("K3 structure from a period point") {
  const LatticeIsometry& iso = catalog_order3(1);
  CycMat h = eigenspace_hermitian_form(iso, 3, 2);
  CycMat omega = pick_positive_period(h);
  HodgeStructure s = k3_from_period(iso, omega);
  CHECK(s.weight == 2);
  CHECK(s.piece_dim(2, 0) == 1);
  CHECK(s.piece_dim(1, 1) == 20);
  CHECK(s.piece_dim(0, 2) == 1);

  // the isometry acts by xi^{-1} on H^{2,0}
  CycMat img = to_cyc(iso.matrix()) * s.piece(2, 0);
  CHECK(img == s.piece(2, 0) * CycNum::root_of_unity(3, 2));

  // the xi^2-eigenspace part of H^{1,1} has dimension r = 1
  CycMat eig = eigenspace_basis(iso, 3, 2);
  CycMat stacked = CycMat::hstack(eig, s.piece(1, 1));
  long inter = eig.cols() + s.piece(1, 1).cols() - rank_of(stacked);
  CHECK(inter == 1);
}

TEST_CASE("elliptic curve structure") {
  const IntMat& r = elliptic_order3_action();
  CHECK((r * r * r) == IntMat::identity(2));
  CHECK((r * r + r + IntMat::identity(2)).is_zero());
  HodgeStructure e = elliptic_fermat_hs();
  CHECK(e.piece_dim(1, 0) == 1);
  CycMat img = to_cyc(r) * e.piece(1, 0);
  CHECK(img == e.piece(1, 0) * CycNum::root_of_unity(3));
}

TEST_CASE("tensor construction dims and filtration") {
  for (int r : {1, 3}) {
    PipelineRun run = run_pipeline(r, std::nullopt);
    const HodgeStructure& x = run.cy3;
    CHECK(x.weight == 3);
    CHECK(x.dim == 2 * r + 2);
    CHECK(x.piece_dim(3, 0) == 1);
    CHECK(x.piece_dim(2, 1) == r);
    CHECK(x.piece_dim(1, 2) == r);
    CHECK(x.piece_dim(0, 3) == 1);
    CHECK(x.filtration(3).cols() == 1);
    CHECK(x.filtration(2).cols() == 1 + r);
    CHECK(x.filtration(1).cols() == 1 + 2 * r);
    // F^2 and its conjugate split the whole space
    CycMat f2 = f2_basis(x);
    CHECK(f2.cols() == x.dim / 2);
    CHECK(rank_of(CycMat::hstack(f2, conj_entrywise(f2))) == x.dim);
    CHECK(x.form.alternating);
  }
  // inputs without actions are rejected
  HodgeStructure e = elliptic_fermat_hs();
  HodgeStructure no_action = e;
  no_action.action.reset();
  CHECK_THROWS_AS(cy3_tensor_hs(no_action, e), std::invalid_argument);
}

TEST_CASE("twisted Hermitian form on F^2") {
  PipelineRun run = run_pipeline(1, std::nullopt);
  const CycMat& h = run.h_f2.h;
  REQUIRE(h.rows() == 2);
  CHECK(conj_transpose(h) == h);
  // Hodge pieces are orthogonal: the (3,0) x (2,1) block vanishes
  CHECK(h(0, 1).is_zero());
  CHECK(h(1, 0).is_zero());
  CHECK(h(0, 0).certified_sign() == 1);
  Signature s = hermitian_signature(h);
  CHECK(s == Signature{1, 1, 0});
  CHECK(descartes_hermitian_signature(h) == s);

  PipelineRun run3 = run_pipeline(3, std::nullopt);
  const CycMat& h3 = run3.h_f2.h;
  CHECK(h3(0, 0).certified_sign() == 1);
  for (long j = 1; j < h3.cols(); ++j) CHECK(h3(0, j).is_zero());
  CHECK(hermitian_signature(h3) == Signature{1, 3, 0});
}

TEST_CASE("F^2 eigenspace check") {
  PipelineRun run = run_pipeline(1, std::nullopt);
  const HodgeStructure& x = run.cy3;
  CHECK(run.f2_check == F2Check::holds);
  CHECK(run.eta == CycNum::root_of_unity(3));

  CHECK(f2_eigenspace_check(x, -RatMat::identity(x.dim)) ==
        F2Check::alpha_is_real_scalar);

  RatMat scale = RatMat::identity(x.dim) * Rat(2);
  CHECK_THROWS_AS(f2_eigenspace_check(x, scale), std::invalid_argument);
}

TEST_CASE("intermediate Jacobians") {
  PipelineRun run = run_pipeline(1, std::nullopt);
  const HodgeStructure& x = run.cy3;
  HodgeStructure g = griffiths_jacobian(x);
  HodgeStructure w = weil_jacobian(x);
  CHECK(g.piece_dim(1, 0) == 2);
  CHECK(w.piece_dim(1, 0) == 2);
  CHECK(spans_equal(g.piece(1, 0), f2_basis(x)));
  CHECK(!spans_equal(g.piece(1, 0), w.piece(1, 0)));

  // H = iQ(.,conj .) is definite on the Weil H^{1,0}
  CycMat q = to_cyc(x.form.gram);
  CycNum i4 = CycNum::root_of_unity(4);
  const CycMat& wb = w.piece(1, 0);
  CycMat hw = (wb.transpose() * q * conj_entrywise(wb)) * i4;
  Signature s = hermitian_signature(hw);
  CHECK(s.zero == 0);
  CHECK((s.positive == 0 || s.negative == 0));
}

TEST_CASE("CM sufficient check") {
  HodgeStructure e = elliptic_fermat_hs();
  CHECK(cm_sufficient_check(e, *e.action) == CmVerdict::cm_certified);
  CHECK(cm_sufficient_check(e, RatMat::identity(2)) == CmVerdict::not_certified);

  PipelineRun run = run_pipeline(1, std::nullopt);
  CHECK(run.cm == CmVerdict::not_certified);

  // an endomorphism that breaks a piece is rejected
  RatMat mix(2, 2);
  mix(0, 1) = 1;
  mix(1, 0) = 1;
  CHECK_THROWS_AS(cm_sufficient_check(e, mix), std::invalid_argument);
}

TEST_CASE("quotient consistency against the tensor structure") {
  PipelineRun run1 = run_pipeline(1, std::nullopt);
  PipelineRun run3 = run_pipeline(3, std::nullopt);
  CHECK(consistency_with_tensor(5, run1.cy3));
  CHECK(consistency_with_tensor(3, run3.cy3));
  CHECK(!consistency_with_tensor(5, run3.cy3));
}

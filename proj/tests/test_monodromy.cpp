#include <doctest.h>

#include <random>

#include "cyhodge/monodromy.hpp"
#include "cyhodge/suite.hpp"

using namespace cyhodge;

namespace {

RatMat jordan_unipotent(long n) {
  RatMat j = RatMat::identity(n);
  for (long i = 0; i + 1 < n; ++i) j(i, i + 1) = 1;
  return j;
}

}  // namespace

TEST_CASE("block structure") {
  PipelineRun run = run_pipeline(1, std::nullopt);
  CycMat f2 = f2_basis(run.cy3);
  long n = run.cy3.dim;

  BlockResult id = block_structure(RatMat::identity(n), f2);
  auto* bd = std::get_if<BlockDecomposition>(&id);
  REQUIRE(bd);
  CHECK(bd->f2_block == CycMat::identity(2));
  CHECK(bd->conj_block == CycMat::identity(2));

  BlockResult neg = block_structure(-RatMat::identity(n), f2);
  auto* bn = std::get_if<BlockDecomposition>(&neg);
  REQUIRE(bn);
  CHECK(bn->f2_block == CycMat::identity(2) * CycNum(-1));

  // a transported block is recovered exactly, then a perturbation breaks it
  std::mt19937_64 rng(43);
  CycMat u = CycMat::identity(2);
  u(0, 1) = CycNum(1) + CycNum::root_of_unity(3);
  RatMat g = transport_block(u, f2);
  BlockResult tr = block_structure(g, f2);
  auto* bt = std::get_if<BlockDecomposition>(&tr);
  REQUIRE(bt);
  CHECK(bt->f2_block == u);
  CHECK(bt->conj_block == conj_entrywise(u));

  RatMat broken = g;
  broken(0, 0) += Rat(1, 7);
  BlockResult br = block_structure(broken, f2);
  CHECK(std::get_if<NotBlockDiagonal>(&br));
}

TEST_CASE("block_structure succeeds or fails together with the inverse") {
  PipelineRun run = run_pipeline(1, std::nullopt);
  CycMat f2 = f2_basis(run.cy3);
  RatMat q = to_rat(run.cy3.form.gram);
  std::mt19937_64 rng(47);
  for (int t = 0; t < 8; ++t) {
    RatMat g = (t % 2 == 0) ? random_block_unipotent(f2, rng)
                            : random_symplectic_transvection(q, rng);
    RatMat ginv = *inverse_of(g);
    bool block_g = std::holds_alternative<BlockDecomposition>(block_structure(g, f2));
    bool block_gi = std::holds_alternative<BlockDecomposition>(block_structure(ginv, f2));
    CHECK(block_g == block_gi);
  }
}

TEST_CASE("nilpotent logarithm") {
  CHECK(nilpotent_log(RatMat::identity(3)).is_zero());

  RatMat t = jordan_unipotent(2);
  RatMat n = nilpotent_log(t);
  CHECK(n(0, 1) == 1);
  CHECK(n(0, 0) == 0);
  CHECK(n(1, 1) == 0);
  CHECK(n(1, 0) == 0);

  RatMat j4 = jordan_unipotent(4);
  RatMat n4 = nilpotent_log(j4);
  CHECK(weight_w0_dim(n4) == 1);

  RatMat not_unip = RatMat::identity(2) * Rat(2);
  CHECK_THROWS_AS(nilpotent_log(not_unip), NotUnipotentError);
}

TEST_CASE("log and truncated exp invert each other on nilpotents") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> small(-2, 2);
  for (long size : {4L, 8L, 12L}) {
    RatMat n(size, size);
    for (long i = 0; i < size; ++i)
      for (long j = i + 1; j < size; ++j) n(i, j) = Rat(small(rng));
    CHECK(nilpotent_log(truncated_exp(n)) == n);
  }
}

TEST_CASE("weight_w0_dim") {
  CHECK(weight_w0_dim(RatMat(3, 3)) == 0);
  RatMat j4 = jordan_unipotent(4) - RatMat::identity(4);
  CHECK(weight_w0_dim(j4) == 1);
  CHECK_THROWS_AS(weight_w0_dim(RatMat::identity(2)), std::invalid_argument);

  // block-diagonal (N0, conj N0) with rank(N0^3) = 1 doubles to 2
  PipelineRun run = run_pipeline(3, std::nullopt);  // b3 = 8, blocks are 4x4
  CycMat f2 = f2_basis(run.cy3);
  CycMat u = CycMat::identity(4);
  for (long i = 0; i < 3; ++i) u(i, i + 1) = CycNum(1) + CycNum::root_of_unity(3);
  RatMat g = transport_block(u, f2);
  RatMat n = nilpotent_log(g);
  CHECK(weight_w0_dim(n) == 2);
}

TEST_CASE("mum obstruction") {
  PipelineRun run = run_pipeline(1, std::nullopt);
  CycMat f2 = f2_basis(run.cy3);
  long n = run.cy3.dim;

  MumReport only_id = mum_obstruction({RatMat::identity(n)}, f2);
  CHECK(only_id.verdict == MumReport::Verdict::MUM_IMPOSSIBLE);
  for (long d : only_id.w0_dims) CHECK(d == 0);

  std::mt19937_64 rng(59);
  RatMat g = random_block_unipotent(f2, rng);
  MumReport one = mum_obstruction({g}, f2);
  CHECK(one.verdict == MumReport::Verdict::MUM_IMPOSSIBLE);
  for (long d : one.w0_dims) CHECK(d % 2 == 0);
  CHECK(one.proof_line == "all dims even, 1 required");

  RatMat q = to_rat(run.cy3.form.gram);
  for (int tries = 0; tries < 16; ++tries) {
    RatMat t = random_symplectic_transvection(q, rng);
    MumReport bad = mum_obstruction({g, t}, f2);
    if (bad.verdict == MumReport::Verdict::NOT_APPLICABLE) {
      REQUIRE(bad.blocker.has_value());
      CHECK(bad.blocker->witness_col >= 0);
      return;
    }
  }
  FAIL("no non-block transvection found in 16 tries");
}

TEST_CASE("centralizer membership and the unitary lemma") {
  PipelineRun run = run_pipeline(1, std::nullopt);
  CycMat f2 = f2_basis(run.cy3);
  const CycMat& h = run.h_f2.h;
  RatMat q = to_rat(run.cy3.form.gram);
  const RatMat& alpha = *run.cy3.action;

  CHECK(centralizer_membership(alpha, alpha, f2, q));
  CHECK(centralizer_membership(RatMat::identity(run.cy3.dim), alpha, f2, q));

  std::mt19937_64 rng(61);
  for (int t = 0; t < 10; ++t) {
    RatMat g = (t % 2 == 0) ? random_h_unitary_real(f2, h, rng)
                            : random_symplectic_transvection(q, rng);
    CHECK(centralizer_membership(g, alpha, f2, q) == block_is_h_unitary(g, f2, h));
  }

  if (auto swap = find_eigenspace_swap(alpha, q, f2)) {
    CHECK(!centralizer_membership(*swap, alpha, f2, q));
    CHECK(!block_is_h_unitary(*swap, f2, h));
    CycMat img = to_cyc(*swap) * f2;
    CHECK(spans_equal(img, conj_entrywise(f2)));
  }
}

TEST_CASE("monodromy element wrapper") {
  PipelineRun run = run_pipeline(1, std::nullopt);
  long n = run.cy3.dim;
  MonodromyElement el = MonodromyElement::make(*run.cy3.action, run.cy3.form);
  CHECK(el.preserves_form);
  RatMat doubled = RatMat::identity(n) * Rat(2);
  MonodromyElement el2 = MonodromyElement::make(doubled, run.cy3.form);
  CHECK(!el2.preserves_form);
  CHECK_THROWS_AS(MonodromyElement::make(RatMat(n, n), run.cy3.form),
                  std::invalid_argument);
}

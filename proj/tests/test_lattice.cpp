#include <doctest.h>

#include <random>

#include "cyhodge/lattice.hpp"

using namespace cyhodge;

TEST_CASE("standard lattices") {
  Lattice u = make_standard(StandardLattice::U);
  CHECK(u.rank == 2);
  CHECK(lattice_det(u) == -1);

  Lattice a2 = make_standard(StandardLattice::A2);
  CHECK(lattice_det(a2) == 3);
  EvenUnimodular eu = is_even_unimodular(a2);
  CHECK(eu.even);
  CHECK(!eu.unimodular);

  Lattice e8m = make_standard(StandardLattice::E8_minus);
  CHECK(e8m.rank == 8);
  CHECK(lattice_det(e8m) == 1);
  CHECK(signature_of(e8m) == Signature{0, 8, 0});
  CHECK(is_even_unimodular(e8m).even);
  CHECK(is_even_unimodular(e8m).unimodular);

  Lattice k3 = make_standard(StandardLattice::K3);
  CHECK(k3.rank == 22);
  CHECK(is_even_unimodular(k3).even);
  CHECK(is_even_unimodular(k3).unimodular);
}

TEST_CASE("direct sums") {
  Lattice u = make_standard(StandardLattice::U);
  Lattice uu = direct_sum(u, u);
  CHECK(uu.rank == 4);
  CHECK(signature_of(uu) == Signature{2, 2, 0});

  Lattice zero(IntMat(0, 0));
  CHECK(direct_sum(u, zero) == u);

  Lattice e8m = make_standard(StandardLattice::E8_minus);
  Lattice built = direct_sum(direct_sum(direct_sum(u, u), u), direct_sum(e8m, e8m));
  CHECK(built == make_standard(StandardLattice::K3));

  CHECK(lattice_det(uu) == lattice_det(u) * lattice_det(u));
}

TEST_CASE("signature") {
  CHECK(signature_of(make_standard(StandardLattice::U)) == Signature{1, 1, 0});
  CHECK(signature_of(make_standard(StandardLattice::K3)) == Signature{3, 19, 0});
  RatMat zero(3, 3);
  CHECK(signature_of(zero) == Signature{0, 0, 3});

  RatMat asym(2, 2);
  asym(0, 1) = 1;
  asym(1, 0) = -1;
  CHECK_THROWS_AS(signature_of(asym), std::invalid_argument);
  CHECK_THROWS_AS(signature_of(make_standard(StandardLattice::elliptic_H1)),
                  std::invalid_argument);
}

TEST_CASE("signature is a congruence invariant") {
  std::mt19937_64 rng(31);
  Lattice k3 = make_standard(StandardLattice::K3);
  Lattice uu = direct_sum(make_standard(StandardLattice::U),
                          make_standard(StandardLattice::A2));
  for (int t = 0; t < 8; ++t) {
    const Lattice& l = (t % 2 == 0) ? uu : k3;
    IntMat s = random_unimodular(l.rank, rng);
    IntMat moved = s.transpose() * l.gram * s;
    CHECK(signature_of(Lattice(moved)) == signature_of(l));
  }
}

TEST_CASE("signature adds over direct sums") {
  Lattice u = make_standard(StandardLattice::U);
  Lattice a2 = make_standard(StandardLattice::A2);
  Signature su = signature_of(u), sa = signature_of(a2);
  Signature sum = signature_of(direct_sum(u, a2));
  CHECK(sum.positive == su.positive + sa.positive);
  CHECK(sum.negative == su.negative + sa.negative);
  CHECK(sum.zero == 0);
}

TEST_CASE("alternating container accepts isometries but not signatures") {
  Lattice j = make_standard(StandardLattice::elliptic_H1);
  CHECK(j.alternating);
  CHECK(j.gram(0, 1) == 1);
  CHECK(j.gram(1, 0) == -1);
  IntMat bad(2, 2);
  bad(0, 0) = 1;
  bad(0, 1) = 1;
  bad(1, 1) = 1;
  CHECK_THROWS_AS(Lattice(bad, true), std::invalid_argument);
}

#include <doctest.h>

#include <random>

#include "cyhodge/isometry.hpp"
#include "cyhodge/suite.hpp"

using namespace cyhodge;

namespace {
IntMat swap2() {
  IntMat m(2, 2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  return m;
}
}  // namespace

TEST_CASE("isometry validation") {
  Lattice k3 = make_standard(StandardLattice::K3);
  LatticeIsometry id = LatticeIsometry::validate(k3, IntMat::identity(22));
  CHECK(id.order() == 1);

  Lattice u = make_standard(StandardLattice::U);
  LatticeIsometry sw = LatticeIsometry::validate(u, swap2());
  CHECK(sw.order() == 2);

  IntMat shear(2, 2);
  shear(0, 0) = 1;
  shear(0, 1) = 1;
  shear(1, 1) = 1;
  CHECK_THROWS_AS(LatticeIsometry::validate(u, shear), NotIsometryError);

  // a symplectic shear preserves the alternating form but has infinite order
  Lattice j = make_standard(StandardLattice::elliptic_H1);
  CHECK_THROWS_AS(LatticeIsometry::validate(j, shear), InfiniteOrderError);
}

TEST_CASE("cyclotomic multiplicities") {
  Lattice k3 = make_standard(StandardLattice::K3);
  auto id_mult = cyclotomic_multiplicities(
      LatticeIsometry::validate(k3, IntMat::identity(22)));
  CHECK(id_mult == std::map<long, long>{{1, 22}});

  Lattice u = make_standard(StandardLattice::U);
  auto neg_mult = cyclotomic_multiplicities(
      LatticeIsometry::validate(u, -IntMat::identity(2)));
  CHECK(neg_mult == std::map<long, long>{{2, 2}});

  auto cat3 = cyclotomic_multiplicities(catalog_order3(3));
  CHECK(cat3 == std::map<long, long>{{1, 14}, {3, 4}});
}

TEST_CASE("eigenspace bases") {
  Lattice u = make_standard(StandardLattice::U);
  LatticeIsometry id2 = LatticeIsometry::validate(u, IntMat::identity(2));
  CHECK(eigenspace_basis(id2, 1, 1).cols() == 2);

  LatticeIsometry sw = LatticeIsometry::validate(u, swap2());
  CycMat anti = eigenspace_basis(sw, 2, 1);
  REQUIRE(anti.cols() == 1);
  CHECK(anti(0, 0) == -anti(1, 0));

  const LatticeIsometry& cat1 = catalog_order3(1);
  CycMat b = eigenspace_basis(cat1, 3, 1);
  CHECK(b.cols() == 2);
  CHECK_THROWS_AS(eigenspace_basis(cat1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(eigenspace_basis(cat1, 3, 3), std::invalid_argument);

  // the matrix fixes the eigenspace with the eigenvalue as factor
  CycMat mb = to_cyc(cat1.matrix()) * b;
  CHECK(mb == b * CycNum::root_of_unity(3));

  // applying a Galois element entrywise moves the basis to the zeta^jk space
  CycMat b2 = eigenspace_basis(cat1, 3, 2);
  CycMat galois_image = map_matrix<CycNum, CycNum>(
      b, [](const CycNum& x) { return x.galois(2); });
  CHECK(spans_equal(galois_image, b2));
}

TEST_CASE("eigenspace Hermitian forms and signatures") {
  Lattice u = make_standard(StandardLattice::U);
  LatticeIsometry id2 = LatticeIsometry::validate(u, IntMat::identity(2));
  CycMat h = eigenspace_hermitian_form(id2, 1, 1);
  CHECK(h == to_cyc(u.gram));  // conjugation acts trivially on Q

  for (int r : {1, 3, 5}) {
    CycMat hr = eigenspace_hermitian_form(catalog_order3(r), 3, 2);
    CHECK(conj_transpose(hr) == hr);
    for (long i = 0; i < hr.rows(); ++i) CHECK(hr(i, i).is_real());
    Signature s = hermitian_signature(hr);
    CHECK(s == Signature{1, r, 0});
    CHECK(descartes_hermitian_signature(hr) == s);
  }

  Lattice j = make_standard(StandardLattice::elliptic_H1);
  IntMat r3(2, 2);
  r3(0, 1) = -1;
  r3(1, 0) = 1;
  r3(1, 1) = -1;
  LatticeIsometry sym = LatticeIsometry::validate(j, r3);
  CHECK(sym.order() == 3);
  CHECK_THROWS_AS(eigenspace_hermitian_form(sym, 3, 1), std::invalid_argument);
}

TEST_CASE("hermitian_signature examples") {
  CycMat d(2, 2);
  d(0, 0) = CycNum(1);
  d(1, 1) = CycNum(-1);
  CHECK(hermitian_signature(d) == Signature{1, 1, 0});

  CycMat z(2, 2);
  z(0, 1) = CycNum::root_of_unity(3);
  z(1, 0) = CycNum::root_of_unity(3, 2);
  CHECK(conj_transpose(z) == z);
  CHECK(hermitian_signature(z) == Signature{1, 1, 0});
  CHECK(descartes_hermitian_signature(z) == Signature{1, 1, 0});

  CHECK(hermitian_signature(CycMat(3, 3)) == Signature{0, 0, 3});

  CycMat bad(2, 2);
  bad(0, 1) = CycNum::root_of_unity(3);
  CHECK_THROWS_AS(hermitian_signature(bad), std::invalid_argument);
}

TEST_CASE("catalog fixtures") {
  const IntMat& uu = order3_on_double_u();
  CHECK((uu * uu + uu + IntMat::identity(4)).is_zero());
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 4; ++j) CHECK(abs(uu(i, j)) <= 1);

  Lattice e8m = make_standard(StandardLattice::E8_minus);
  auto full = cyclotomic_multiplicities(
      LatticeIsometry::validate(e8m, order3_on_e8(4)));
  CHECK(full == std::map<long, long>{{3, 4}});
  auto half = cyclotomic_multiplicities(
      LatticeIsometry::validate(e8m, order3_on_e8(2)));
  CHECK(half == std::map<long, long>{{1, 4}, {3, 2}});

  for (int r : {1, 3, 5}) {
    const LatticeIsometry& iso = catalog_order3(r);
    CHECK(iso.order() == 3);
    CHECK(cyclotomic_multiplicities(iso).at(3) == r + 1);
  }
  CHECK_THROWS_AS(catalog_order3(2), std::invalid_argument);
}

TEST_CASE("eigenvectors with non-real eigenvalue are isotropic") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> small(-2, 2);
  for (int r : {1, 3, 5}) {
    const LatticeIsometry& iso = catalog_order3(r);
    CycMat g = to_cyc(iso.lattice().gram);
    for (long j : {1L, 2L}) {
      CycMat b = eigenspace_basis(iso, 3, j);
      for (int t = 0; t < 3; ++t) {
        CycMat c(b.cols(), 1);
        for (long i = 0; i < b.cols(); ++i)
          c(i, 0) = CycNum(Rat(small(rng))) +
                    CycNum::root_of_unity(3) * CycNum(Rat(small(rng)));
        CycMat v = b * c;
        CycMat q = v.transpose() * g * v;
        CHECK(q(0, 0).is_zero());
      }
    }
  }
}

TEST_CASE("galois orbit dimensions agree on random conjugates") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 6; ++t) {
    // companion blocks of Phi_12 and Phi_3 conjugated by a random unimodular
    RatMat a(6, 6);
    const RatPoly& p12 = cyclotomic_poly(12);
    for (long i = 1; i < 4; ++i) a(i, i - 1) = 1;
    for (long i = 0; i < 4; ++i) a(i, 3) = -p12.coeff(i);
    a(5, 4) = 1;
    a(4, 5) = -1;
    a(5, 5) = -1;
    RatMat s = to_rat(random_unimodular(6, rng));
    a = s * a * *inverse_of(s);
    for (long d : {3L, 12L}) {
      long expected = d == 3 ? 1 : 1;
      for (long j : units_mod(d)) {
        CycMat sh = to_cyc(a);
        CycNum zeta = CycNum::root_of_unity(d, j);
        for (long i = 0; i < 6; ++i) sh(i, i) = sh(i, i) - zeta;
        CHECK(kernel_basis(sh).cols() == expected);
      }
    }
  }
}

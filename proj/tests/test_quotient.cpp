#include <doctest.h>

#include "cyhodge/quotient.hpp"

using namespace cyhodge;

TEST_CASE("fixed locus table") {
  CHECK(fixed_locus_from_k(0).n == 3);
  CHECK(fixed_locus_from_k(0).r == 6);
  CHECK(fixed_locus_from_k(6).n == 9);
  CHECK(fixed_locus_from_k(6).r == 0);
  for (long k = 0; k <= 6; ++k) {
    FixedLocusData fl = fixed_locus_from_k(k);
    CHECK(fl.n == fl.k + 3);
    CHECK(fl.r == 6 - fl.k);
  }
  CHECK_THROWS_AS(fixed_locus_from_k(7), std::out_of_range);
  CHECK_THROWS_AS(fixed_locus_from_k(-1), std::out_of_range);
}

TEST_CASE("invariant h11 of the product") {
  CHECK(invariant_h11_product(6) == 9);
  CHECK(invariant_h11_product(0) == 21);
  CHECK(invariant_h11_product(3) == 15);
  CHECK_THROWS_AS(invariant_h11_product(7), std::out_of_range);
}

TEST_CASE("quotient Hodge numbers") {
  HodgeNumberReport k0 = cy3_hodge_numbers(0);
  CHECK(k0.h21 == 6);
  CHECK(k0.h11 == 18);
  CHECK(k0.b3 == 14);

  HodgeNumberReport k3 = cy3_hodge_numbers(3);
  CHECK(k3.h21 == 3);
  CHECK(k3.h11 == 51);

  HodgeNumberReport k6 = cy3_hodge_numbers(6);
  CHECK(k6.h21 == 0);
  CHECK(k6.h11 == 84);
  CHECK(k6.b3 == 2);

  for (long k = 0; k <= 6; ++k) {
    HodgeNumberReport r = cy3_hodge_numbers(k);
    CHECK(r.h11 == 18 + 11 * k);
    CHECK(r.h21 == 6 - k);
    CHECK(r.b3 == 2 * (r.h21 + 1));
    long sum = 0;
    for (const auto& [label, v] : r.breakdown) sum += v;
    CHECK(sum == r.h11);
    CHECK(r.breakdown.size() == 3);
  }
  CHECK_THROWS_AS(cy3_hodge_numbers(7), std::out_of_range);
}

TEST_CASE("Borcea-Voisin order-2 fixture") {
  HodgeNumberReport bv = borcea_voisin_z2_example();
  CHECK(bv.h11 == 61);
  CHECK(bv.h21 == 1);
  CHECK(bv.b3 == 4);
  CHECK(bv.fixture_not_computed);
  CHECK(!bv.note.empty());
}

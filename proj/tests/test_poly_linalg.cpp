#include <doctest.h>

#include <random>

#include "cyhodge/linalg.hpp"

using namespace cyhodge;

namespace {
RatPoly poly(std::initializer_list<long> coeffs_low_first) {
  std::vector<Rat> c;
  for (long v : coeffs_low_first) c.emplace_back(v);
  return RatPoly(std::move(c));
}
}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == poly({-1, 1}));
  CHECK(cyclotomic_poly(2) == poly({1, 1}));
  CHECK(cyclotomic_poly(3) == poly({1, 1, 1}));
  CHECK(cyclotomic_poly(6) == poly({1, -1, 1}));
  CHECK(cyclotomic_poly(9) == poly({1, 0, 0, 1, 0, 0, 1}));
  CHECK(cyclotomic_poly(12) == poly({1, 0, -1, 0, 1}));
  for (long m = 1; m <= 60; ++m) {
    RatPoly prod = RatPoly::constant(Rat(1));
    for (long d : divisors_of(m)) prod = prod * cyclotomic_poly(d);
    CHECK(prod == RatPoly::x_pow_minus_one(m));
  }
}

TEST_CASE("polynomial division and xgcd") {
  RatPoly a = poly({-1, 0, 0, 0, 0, 0, 1});  // x^6 - 1
  auto [q, r] = a.divmod(cyclotomic_poly(6));
  CHECK(r.is_zero());
  CHECK(q * cyclotomic_poly(6) == a);
  auto x = poly_xgcd(cyclotomic_poly(3), cyclotomic_poly(4));
  CHECK(x.g.degree() == 0);
  CHECK(x.u * cyclotomic_poly(3) + x.v * cyclotomic_poly(4) == x.g);
}

TEST_CASE("integer kernel is the saturated kernel") {
  IntMat a(1, 2);
  a(0, 0) = 2;
  a(0, 1) = -2;
  IntMat k = integer_kernel(a);
  REQUIRE(k.cols() == 1);
  CHECK((k(0, 0) == 1 || k(0, 0) == -1));
  CHECK(k(0, 0) == k(1, 0));

  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    IntMat m(3, 5);
    for (long i = 0; i < 3; ++i)
      for (long j = 0; j < 5; ++j) m(i, j) = static_cast<long>(rng() % 7) - 3;
    IntMat ker = integer_kernel(m);
    CHECK((m * ker).is_zero());
    CHECK(rank_of(to_rat(ker)) == ker.cols());
    CHECK(ker.cols() == 5 - rank_of(to_rat(m)));
  }
}

TEST_CASE("min poly and matrix order") {
  RatMat c(6, 6);
  {  // companion of Phi_9
    const RatPoly& p = cyclotomic_poly(9);
    for (long i = 1; i < 6; ++i) c(i, i - 1) = 1;
    for (long i = 0; i < 6; ++i) c(i, 5) = -p.coeff(i);
  }
  CHECK(min_poly(c) == cyclotomic_poly(9));
  CHECK(matrix_order(c, 60) == std::optional<long>(9));
  CHECK(matrix_order(RatMat::identity(3), 60) == std::optional<long>(1));
  CHECK(matrix_order(-RatMat::identity(3), 60) == std::optional<long>(2));
  RatMat u = RatMat::identity(2);
  u(0, 1) = 1;
  CHECK(!matrix_order(u, 60));
}

TEST_CASE("certified irreducibility") {
  CHECK(certified_irreducible(cyclotomic_poly(3)));
  CHECK(certified_irreducible(cyclotomic_poly(8)));  // reducible mod every p
  CHECK(certified_irreducible(cyclotomic_poly(9)));
  CHECK(certified_irreducible(poly({-2, 0, 1})));  // x^2 - 2
  CHECK(!certified_irreducible(poly({-1, 0, 1})));  // x^2 - 1
  CHECK(!certified_irreducible(poly({0, 0, 1})));   // x^2
  CHECK(!certified_irreducible(poly({1, 2, 1})));   // (x+1)^2
}

TEST_CASE("random unimodular matrices") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 10; ++t) {
    IntMat u = random_unimodular(5, rng);
    Int d = det_int(u);
    CHECK((d == 1 || d == -1));
  }
}

TEST_CASE("charpoly") {
  RatMat a(2, 2);
  a(0, 0) = 2;
  a(1, 1) = 3;
  a(0, 1) = 1;
  RatPoly p = charpoly_rat(a);  // (x-2)(x-3) = x^2 - 5x + 6
  CHECK(p == poly({6, -5, 1}));
}

#include <doctest.h>

#include <random>
#include <set>

#include "cyhodge/cycnum.hpp"
#include "cyhodge/linalg.hpp"

using namespace cyhodge;

namespace {

CycNum z(long n, long k = 1) { return CycNum::root_of_unity(n, k); }

CycNum random_cyc(std::mt19937_64& rng) {
  static const long conductors[] = {1, 2, 3, 4, 6, 8, 9, 12};
  long n = conductors[rng() % 8];
  std::uniform_int_distribution<long> num(-4, 4);
  std::vector<Rat> c;
  for (long i = 0; i < euler_phi(n); ++i) {
    Rat q = Rat(num(rng)) / Rat(1 + static_cast<long>(rng() % 3));
    c.push_back(q);
  }
  return CycNum::from_coeffs(c, n);
}

}  // namespace

TEST_CASE("normalization reduces mod Phi_n and to the minimal conductor") {
  // zeta_3^2 given as a degree-2 power vector
  CycNum a = CycNum::from_coeffs({Rat(0), Rat(0), Rat(1)}, 3);
  CHECK(a.conductor() == 3);
  CHECK(a.coeffs() == std::vector<Rat>{Rat(-1), Rat(-1)});

  // a rational element of Q(zeta_12) collapses to Q
  CycNum b = CycNum::from_coeffs({Rat(5)}, 12);
  CHECK(b.conductor() == 1);
  CHECK(b == CycNum(5));

  // zeta_12^2 = zeta_6 lives in the conductor-3 field (zeta_6 = 1 + zeta_3)
  CycNum c = z(12).pow(2);
  CHECK(c.conductor() == 3);
  CHECK(c == CycNum(1) + z(3));
  SignedInterval iv = c.embed(64);
  CHECK(iv.real_mid().get_d() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(iv.imag_mid().get_d() == doctest::Approx(0.8660254038).epsilon(1e-9));

  CHECK_THROWS_AS(CycNum::from_coeffs({Rat(1)}, 0), std::invalid_argument);
  CHECK_THROWS_AS(CycNum::from_coeffs({Rat(1), Rat(1), Rat(1)}, 2),
                  std::invalid_argument);
}

TEST_CASE("field arithmetic in and across cyclotomic fields") {
  CHECK(z(3) * z(3) == CycNum(-1) - z(3));
  CHECK((CycNum(1) + z(3)) * (CycNum(1) + z(3, 2)) == CycNum(1));
  CHECK(z(4).inverse() == -z(4));
  CHECK_THROWS_AS(CycNum(0).inverse(), std::domain_error);

  // mixed conductors lift to the lcm
  CycNum m = z(3) * z(4);
  CHECK(m.conductor() == 12);
  CHECK(m.pow(12) == CycNum(1));
  CHECK(m * m.inverse() == CycNum(1));
}

TEST_CASE("conjugation is the inversion Galois element") {
  CHECK(z(3).conj() == z(3, 2));
  CHECK(z(3).conj() == CycNum(-1) - z(3));
  CycNum r(Rat(7, 2));
  CHECK(r.conj() == r);
  CHECK(z(12).conj().conj() == z(12));
  CHECK(z(12).conj() == z(12, 11));
}

TEST_CASE("galois action") {
  CHECK(z(9).galois(2) == z(9, 2));
  CHECK((CycNum(1) + z(3)).galois(2) == CycNum(1) + z(3, 2));
  CHECK((CycNum(1) + z(3)).galois(2) == -z(3));
  CHECK_THROWS_AS(z(9).galois(3), std::invalid_argument);

  // all j coprime to 9 permute the six primitive 9th roots
  std::set<std::vector<Rat>> images;
  for (long j : units_mod(9)) images.insert(z(9).galois(j).coeffs());
  CHECK(images.size() == 6);
  for (long j : units_mod(9)) CHECK(z(9).galois(j) == z(9, j));
}

TEST_CASE("certified sign") {
  CHECK((CycNum(1) + z(3) + z(3, 2)).is_zero());
  CHECK((CycNum(1) + z(3) + z(3, 2)).certified_sign() == 0);
  CHECK((z(12) + z(12, -1)).certified_sign() == 1);   // 2 cos(pi/6)
  CHECK((z(8) + z(8, -1) - CycNum(2)).certified_sign() == -1);  // sqrt 2 - 2
  CHECK_THROWS_AS(z(3).certified_sign(), std::domain_error);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    CycNum a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == CycNum(1));
  }
}

TEST_CASE("conjugation and galois are ring homomorphisms") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 25; ++i) {
    CycNum a = random_cyc(rng), b = random_cyc(rng);
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
  // composition law sigma_j sigma_k = sigma_{jk mod n} on Q(zeta_12)
  for (long j : units_mod(12))
    for (long k : units_mod(12)) {
      CycNum a = z(12) + CycNum(3) * z(12, 2);
      CHECK(a.galois(k).galois(j) == a.galois((j * k) % 12));
    }
}

TEST_CASE("interval enclosures nest as precision grows") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    CycNum a = random_cyc(rng);
    SignedInterval lo = a.embed(64);
    SignedInterval mid = a.embed(128);
    SignedInterval hi = a.embed(256);
    CHECK(lo.contains(mid));
    CHECK(mid.contains(hi));
    CHECK(lo.contains(mid.real_mid(), mid.imag_mid()));
    CHECK(mid.contains(hi.real_mid(), hi.imag_mid()));
  }
  // a known rational point stays inside at every precision
  CycNum half(Rat(1, 2));
  for (long bits : {64L, 128L, 512L})
    CHECK(half.embed(bits).contains(Rat(1, 2), Rat(0)));
}

TEST_CASE("squares of nonzero real elements are positive") {
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 20) {
    CycNum a = random_cyc(rng);
    CycNum real = a + a.conj();  // real by construction
    if (real.is_zero()) continue;
    CHECK(real.is_real());
    CHECK((real * real).certified_sign() == 1);
    ++checked;
  }
}

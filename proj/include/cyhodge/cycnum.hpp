#pragma once

#include <iosfwd>
#include <vector>

#include "cyhodge/poly.hpp"
#include "cyhodge/rational.hpp"

namespace cyhodge {

// Largest conductor accepted when lifting into a common field.  The library
// itself only ever needs conductors in {1,2,3,4,6,8,9,12}.
inline constexpr long kDefaultConductorBound = 120;

struct ConductorBoundError : std::domain_error {
  using std::domain_error::domain_error;
};

// Certified rectangular enclosure of a complex embedding.  Endpoints are
// exact rationals (dyadic, coming from directed-rounded MPFR evaluation).
struct SignedInterval {
  Rat real_lo, real_hi;
  Rat imag_lo, imag_hi;
  long precision_bits = 0;

  bool contains(const Rat& re, const Rat& im) const {
    return real_lo <= re && re <= real_hi && imag_lo <= im && im <= imag_hi;
  }
  bool contains(const SignedInterval& inner) const {
    return real_lo <= inner.real_lo && inner.real_hi <= real_hi &&
           imag_lo <= inner.imag_lo && inner.imag_hi <= imag_hi;
  }
  Rat real_mid() const { return (real_lo + real_hi) / 2; }
  Rat imag_mid() const { return (imag_lo + imag_hi) / 2; }
};

// An element of the cyclotomic field Q(zeta_n), stored in the power basis
// 1, zeta, ..., zeta^{phi(n)-1} reduced mod the n-th cyclotomic polynomial.
// Values are canonical: the conductor is the smallest m with the element in
// Q(zeta_m), so equality is plain data comparison.  Immutable after
// construction.
class CycNum {
 public:
  CycNum() : n_(1), c_{Rat(0)} {}
  CycNum(long v) : n_(1), c_{Rat(v)} {}           // NOLINT(google-explicit-constructor)
  CycNum(const Rat& v) : n_(1), c_{v} {}          // NOLINT(google-explicit-constructor)

  // coeffs are power-basis coordinates of any length <= n; reduced mod Phi_n
  // and brought to canonical (minimal-conductor) form.  Rejects n < 1.
  static CycNum from_coeffs(std::vector<Rat> coeffs, long n);
  // zeta_n^k
  static CycNum root_of_unity(long n, long k = 1,
                              long conductor_bound = kDefaultConductorBound);

  long conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const { return n_ == 1 && c_[0] == 0; }
  bool is_rational() const { return n_ == 1; }
  Rat to_rational() const;  // throws unless is_rational()
  bool is_real() const;

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator-() const;
  CycNum inverse() const;  // throws on zero
  CycNum operator/(const CycNum& o) const { return *this * o.inverse(); }
  bool operator==(const CycNum& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  CycNum conj() const;                  // zeta -> zeta^{-1}
  CycNum galois(long j) const;          // zeta -> zeta^j, gcd(j, n) = 1
  CycNum pow(long e) const;

  // Exact rational-endpoint rectangle certifying the complex embedding
  // (zeta_n = exp(2*pi*i/n)) at roughly the given working precision.
  // Enclosures at higher precision are contained in lower-precision ones.
  SignedInterval embed(long precision_bits) const;

  // Sign of a real element: 0 decided symbolically, otherwise by interval
  // refinement at doubling precision until 0 is excluded.  Throws on
  // non-real input.  start_bits <= 0 uses the default (CYHODGE_PREC_BITS
  // environment variable, else 64).
  int certified_sign(long start_bits = 0) const;

  std::string to_string() const;

 private:
  CycNum(long n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
  long n_;
  std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& a);

// Default working precision for certified signs (CYHODGE_PREC_BITS, else 64).
long default_precision_bits();

}  // namespace cyhodge

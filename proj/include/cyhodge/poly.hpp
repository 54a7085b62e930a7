#pragma once

#include <utility>
#include <vector>

#include "cyhodge/rational.hpp"

namespace cyhodge {

// Dense univariate polynomial over Q, coefficient of x^i at coeffs()[i].
// The zero polynomial has an empty coefficient vector and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RatPoly constant(const Rat& a);
  static RatPoly monomial(long degree, const Rat& a = Rat(1));
  // x^n - 1
  static RatPoly x_pow_minus_one(long n);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(long i) const {
    return (i >= 0 && i < static_cast<long>(c_.size())) ? c_[i] : Rat(0);
  }
  Rat leading() const;

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const Rat& a) const;
  RatPoly operator-() const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  // Euclidean division; divisor must be nonzero.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;
  // Division known to be exact; throws if a remainder appears.
  RatPoly exact_div(const RatPoly& divisor) const;

  RatPoly derivative() const;
  RatPoly monic() const;
  Rat eval(const Rat& x) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

RatPoly poly_gcd(RatPoly a, RatPoly b);  // monic gcd
// g = gcd, and u*a + v*b = g.
struct XgcdResult {
  RatPoly g, u, v;
};
XgcdResult poly_xgcd(const RatPoly& a, const RatPoly& b);

// n-th cyclotomic polynomial, computed by exact division of x^n - 1 by the
// cyclotomic polynomials of the proper divisors of n.  Cached, thread-safe.
const RatPoly& cyclotomic_poly(long n);

}  // namespace cyhodge

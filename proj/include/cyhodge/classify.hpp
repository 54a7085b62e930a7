#pragma once

#include <map>

#include "cyhodge/linalg.hpp"

namespace cyhodge {

// x^m - 1 = prod over d | m of Phi_d; returned in divisor order with the
// product identity checked.
std::vector<std::pair<long, RatPoly>> cyclotomic_factorization(long m);

enum class PrimeOrderVerdict { allowed, excluded, scalar_only };
// For odd primes: an action of prime order p > 2 with exactly two conjugate
// eigenvalue orbits needs b3/2 = b3/(p-1), i.e. p = 3.  p = 2 actions can
// only be +-id (scalar_only).
PrimeOrderVerdict prime_order_test(long p, long b3);

// All m <= m_max with phi(m) <= 2: the orders whose primitive roots form a
// single conjugate pair (or are +-1).  Equals {1,2,3,4,6} for m_max >= 6.
std::vector<long> allowed_maximal_orders(long m_max = 60);

enum class MaximalReason {
  OK_SCALAR,
  OK_CONJUGATE_PAIR,
  TOO_MANY_ORBITS,
  UNBALANCED,
  FIXED_SPACE_NONZERO,
};
std::string maximal_reason_name(MaximalReason r);

struct OrderAnalysis {
  long order = 0;
  long dim = 0;
  std::map<long, long> eigenvalue_orbit_dims;  // d -> a_d
  bool maximal_compatible = false;
  MaximalReason reason = MaximalReason::UNBALANCED;
  bool galois_dims_verified = false;
  bool no_example_in_paper = false;  // m in {4, 6}: shape allowed, no example
};

// Order, cyclotomic multiplicities, the Galois equal-dimension property, and
// (when assume_maximal) whether the spectrum has the two-eigenvalue shape of
// a maximal action: +-id, or exactly the pair {eta, conj eta} of primitive
// m-th roots with phi(m) = 2 and no rational fixed vectors.
OrderAnalysis analyze_action(const RatMat& a, bool assume_maximal,
                             long order_bound = 60);

}  // namespace cyhodge

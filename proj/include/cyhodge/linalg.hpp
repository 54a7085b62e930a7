#pragma once

#include <random>

#include "cyhodge/matrix.hpp"
#include "cyhodge/poly.hpp"

namespace cyhodge {

// Z-basis of the integer kernel { x in Z^cols : a*x = 0 }.  The returned
// lattice is saturated (it is the full integer kernel, not a finite-index
// sublattice), via unimodular column reduction of a.
IntMat integer_kernel(const IntMat& a);

// Determinant of an integer matrix, exact (fraction-free not required at
// our sizes; computed over Q and converted back).
Int det_int(const IntMat& a);

// Minimal polynomial of a rational square matrix (monic).
RatPoly min_poly(const RatMat& a);

// Order of a as a group element: least m >= 1 with a^m = I, or nullopt if
// no such m <= bound.
std::optional<long> matrix_order(const RatMat& a, long bound);
std::optional<long> matrix_order(const IntMat& a, long bound);

// Random integer matrix with det +-1: a product of elementary row
// operations with small coefficients.
IntMat random_unimodular(long n, std::mt19937_64& rng, int steps = 24,
                         long coeff_bound = 2);

// Deterministic per-case seeding for property suites.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Rational charpoly as a RatPoly (monic, from Matrix charpoly coefficients).
RatPoly charpoly_rat(const RatMat& a);

// True iff the primitive integer version of p is irreducible over Q,
// certified by irreducibility modulo some small prime.  A false return is
// inconclusive for composite-resistant inputs; callers treat it as
// "not certified".
bool certified_irreducible(const RatPoly& p);

}  // namespace cyhodge

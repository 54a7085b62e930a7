#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyhodge {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign_of(const Rat& q) { return sgn(q); }
inline int sign_of(const Int& z) { return sgn(z); }

// "p/q" or "p"; used by every JSON surface.
Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& q);

// Elementary number theory on small (machine-word) arguments.
long euler_phi(long n);
std::vector<long> divisors_of(long n);
std::vector<long> prime_factors(long n);  // distinct primes, ascending
bool is_prime(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

// Units modulo n, i.e. all 1 <= j <= n with gcd(j, n) = 1.
std::vector<long> units_mod(long n);

}  // namespace cyhodge

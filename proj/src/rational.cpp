#include "cyhodge/rational.hpp"

namespace cyhodge {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

long euler_phi(long n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long> divisors_of(long n) {
  if (n <= 0) throw std::invalid_argument("divisors_of: n must be positive");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  return small;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      ps.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) ps.push_back(m);
  return ps;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

std::vector<long> units_mod(long n) {
  std::vector<long> js;
  for (long j = 1; j <= n; ++j)
    if (std::gcd(j, n) == 1) js.push_back(j % n == 0 ? n : j);
  if (n == 1) js = {1};
  return js;
}

}  // namespace cyhodge

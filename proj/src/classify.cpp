#include "cyhodge/classify.hpp"

#include "cyhodge/cycnum.hpp"
#include "cyhodge/isometry.hpp"

namespace cyhodge {

std::vector<std::pair<long, RatPoly>> cyclotomic_factorization(long m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_factorization: m must be >= 1");
  std::vector<std::pair<long, RatPoly>> out;
  RatPoly prod = RatPoly::constant(Rat(1));
  for (long d : divisors_of(m)) {
    out.emplace_back(d, cyclotomic_poly(d));
    prod = prod * out.back().second;
  }
  if (!(prod == RatPoly::x_pow_minus_one(m)))
    throw std::logic_error("cyclotomic_factorization: product check failed");
  return out;
}

PrimeOrderVerdict prime_order_test(long p, long b3) {
  if (!is_prime(p)) throw std::invalid_argument("prime_order_test: p must be prime");
  if (b3 < 2 || b3 % 2 != 0)
    throw std::invalid_argument("prime_order_test: b3 must be even and >= 2");
  if (p == 2) return PrimeOrderVerdict::scalar_only;
  // d = b3/2 and d = b3/(p-1) force p = 3
  return (b3 % (p - 1) == 0 && b3 / (p - 1) == b3 / 2) ? PrimeOrderVerdict::allowed
                                                       : PrimeOrderVerdict::excluded;
}

std::vector<long> allowed_maximal_orders(long m_max) {
  if (m_max < 1) throw std::invalid_argument("allowed_maximal_orders: m_max >= 1");
  std::vector<long> out;
  for (long m = 1; m <= m_max; ++m)
    if (euler_phi(m) <= 2) out.push_back(m);
  return out;
}

std::string maximal_reason_name(MaximalReason r) {
  switch (r) {
    case MaximalReason::OK_SCALAR: return "OK_SCALAR";
    case MaximalReason::OK_CONJUGATE_PAIR: return "OK_CONJUGATE_PAIR";
    case MaximalReason::TOO_MANY_ORBITS: return "TOO_MANY_ORBITS";
    case MaximalReason::UNBALANCED: return "UNBALANCED";
    case MaximalReason::FIXED_SPACE_NONZERO: return "FIXED_SPACE_NONZERO";
  }
  return "?";
}

OrderAnalysis analyze_action(const RatMat& a, bool assume_maximal, long order_bound) {
  if (a.rows() != a.cols()) throw std::invalid_argument("analyze_action: not square");
  auto ord = matrix_order(a, order_bound);
  if (!ord) throw InfiniteOrderError("analyze_action: no order up to the bound");

  OrderAnalysis res;
  res.order = *ord;
  res.dim = a.rows();

  RatPoly p = charpoly_rat(a);
  for (long d : divisors_of(res.order)) {
    const RatPoly& phi = cyclotomic_poly(d);
    long count = 0;
    while (true) {
      auto [q, r] = p.divmod(phi);
      if (!r.is_zero()) break;
      p = q;
      ++count;
    }
    if (count > 0) res.eigenvalue_orbit_dims[d] = count;
  }
  if (p.degree() != 0)
    throw std::logic_error("analyze_action: char poly not cyclotomic");

  // Galois equal-dimension property: every primitive zeta_d eigenspace has
  // dimension a_d, checked by exact kernels over Q(zeta_d).
  res.galois_dims_verified = true;
  for (const auto& [d, ad] : res.eigenvalue_orbit_dims) {
    if (d > kDefaultConductorBound) { res.galois_dims_verified = false; break; }
    CycMat ac = to_cyc(a);
    for (long j : units_mod(d)) {
      CycMat shifted = ac;
      CycNum zeta = CycNum::root_of_unity(d, j);
      for (long i = 0; i < res.dim; ++i) shifted(i, i) = shifted(i, i) - zeta;
      if (kernel_basis(shifted).cols() != ad) {
        res.galois_dims_verified = false;
        break;
      }
    }
    if (!res.galois_dims_verified) break;
  }
  if (!res.galois_dims_verified)
    throw std::logic_error("analyze_action: Galois orbit dimensions disagree");

  if (!assume_maximal) return res;

  RatMat id = RatMat::identity(res.dim);
  if (a == id || a == -id) {
    res.maximal_compatible = true;
    res.reason = MaximalReason::OK_SCALAR;
    return res;
  }
  long m = res.order;
  long a1 = res.eigenvalue_orbit_dims.count(1) ? res.eigenvalue_orbit_dims.at(1) : 0;
  if (a1 > 0) {
    res.maximal_compatible = false;
    res.reason = MaximalReason::FIXED_SPACE_NONZERO;
    return res;
  }
  if (euler_phi(m) > 2) {
    res.maximal_compatible = false;
    res.reason = MaximalReason::TOO_MANY_ORBITS;
    return res;
  }
  // phi(m) <= 2 and a != +-id: the spectrum must be exactly the primitive
  // pair {eta, conj eta}, each with multiplicity dim/2
  if (res.eigenvalue_orbit_dims.size() != 1 ||
      res.eigenvalue_orbit_dims.begin()->first != m || m < 3) {
    res.maximal_compatible = false;
    res.reason = MaximalReason::UNBALANCED;
    return res;
  }
  res.maximal_compatible = true;
  res.reason = MaximalReason::OK_CONJUGATE_PAIR;
  res.no_example_in_paper = (m == 4 || m == 6);
  return res;
}

}  // namespace cyhodge

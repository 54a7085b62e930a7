#pragma once

#include <string>
#include <vector>

#include "cyhodge/hodge.hpp"

namespace cyhodge {

// Fixed locus of a degree-3 non-symplectic K3 automorphism: k disjoint
// smooth rational curves, n = k + 3 isolated points, ball dimension r = 6 - k.
struct FixedLocusData {
  long k = 0;
  long n = 0;
  long r = 0;
};
FixedLocusData fixed_locus_from_k(long k);  // 0 <= k <= 6

struct HodgeNumberReport {
  long h11 = 0;
  long h21 = 0;
  long b3 = 0;
  std::vector<std::pair<std::string, long>> breakdown;
  bool fixture_not_computed = false;
  std::string note;
};

// Invariant h^{1,1} of S x E before resolution: 21 - 2r.
long invariant_h11_product(long r);

// Quotient Calabi-Yau Hodge numbers: h21 = 6 - k, h11 = 18 + 11k, with the
// blow-up/blow-down breakdown (net 6 per fixed curve, 3 per isolated point).
HodgeNumberReport cy3_hodge_numbers(long k);

// Stored values of the order-2 Borcea-Voisin example; not recomputed.
HodgeNumberReport borcea_voisin_z2_example();

// dim H^{2,1} of the tensor structure matches the quotient count for this k.
bool consistency_with_tensor(long k, const HodgeStructure& hs3);

}  // namespace cyhodge

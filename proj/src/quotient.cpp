#include "cyhodge/quotient.hpp"

namespace cyhodge {

namespace {
// per fixed curve: blow up 9 families, blow down 3; per isolated point: 3 sections
constexpr long kCurveBlowUps = 9;
constexpr long kCurveBlowDowns = 3;
constexpr long kSectionsPerPoint = 3;
}  // namespace

FixedLocusData fixed_locus_from_k(long k) {
  if (k < 0 || k > 6)
    throw std::out_of_range("fixed_locus_from_k: k must be in 0..6");
  return {k, k + 3, 6 - k};
}

long invariant_h11_product(long r) {
  if (r < 0 || r > 6)
    throw std::out_of_range("invariant_h11_product: r must be in 0..6");
  return 21 - 2 * r;
}

HodgeNumberReport cy3_hodge_numbers(long k) {
  FixedLocusData fl = fixed_locus_from_k(k);
  HodgeNumberReport rep;
  rep.h21 = fl.r;
  long invariant = invariant_h11_product(fl.r);
  long curves = (kCurveBlowUps - kCurveBlowDowns) * fl.k;
  long points = kSectionsPerPoint * fl.n;
  rep.breakdown = {{"invariant part of S x E", invariant},
                   {"net curve blow-ups", curves},
                   {"isolated-point blow-ups", points}};
  rep.h11 = invariant + curves + points;
  rep.b3 = 2 * (rep.h21 + 1);
  if (rep.h11 != 18 + 11 * k)
    throw std::logic_error("cy3_hodge_numbers: closed forms disagree");
  return rep;
}

HodgeNumberReport borcea_voisin_z2_example() {
  HodgeNumberReport rep;
  rep.h11 = 61;
  rep.h21 = 1;
  rep.b3 = 2 * (rep.h21 + 1);
  rep.fixture_not_computed = true;
  rep.note =
      "order-2 Borcea-Voisin quotient; F^2 = H^{2,0}(S) (x) H^1(E,C), dim 2";
  return rep;
}

bool consistency_with_tensor(long k, const HodgeStructure& hs3) {
  if (hs3.weight != 3)
    throw std::invalid_argument("consistency_with_tensor: weight must be 3");
  return hs3.piece_dim(2, 1) == cy3_hodge_numbers(k).h21;
}

}  // namespace cyhodge

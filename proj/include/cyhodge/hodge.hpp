#pragma once

#include <map>

#include "cyhodge/isometry.hpp"

namespace cyhodge {

// Weight-k rational Hodge structure with cyclotomic coordinates: each (p,q)
// piece is a column basis inside the ambient coordinate space of `form`.
// The optional `action` is a distinguished finite-order automorphism of the
// rational container (the order-3 symmetry for the structures built here).
struct HodgeStructure {
  long weight = 0;
  long dim = 0;
  std::map<std::pair<long, long>, CycMat> pieces;
  Lattice form;
  std::optional<RatMat> action;

  const CycMat& piece(long p, long q) const;
  long piece_dim(long p, long q) const;
  // F^p = span of all (p', q') pieces with p' >= p.
  CycMat filtration(long p) const;
};

// Throws unless: piece dims sum to dim, the stacked pieces have full rank,
// and conjugation carries the (p,q) basis onto the (q,p) span.
void validate_hodge_structure(const HodgeStructure& hs);

// Diagonalizing basis for a Hermitian matrix: columns P with P^T H conj(P)
// diagonal; diag holds the (real) diagonal values, sign their certified signs.
struct HermitianDiag {
  CycMat basis;
  std::vector<CycNum> diag;
  std::vector<int> sign;
};
HermitianDiag hermitian_diagonalize(const CycMat& h);

// omega in the coordinates of the eigenspace carrying h; true iff
// H(omega, omega) > 0 (certified).  Rejects omega = 0 or size mismatch.
bool ball_membership(const CycMat& h, const CycMat& omega);

// A coordinate vector with H(omega, omega) > 0, from the diagonalizing
// basis; throws when the form has no positive direction.
CycMat pick_positive_period(const CycMat& h);

// Weight-2 structure of a K3 period point: omega is given in the
// coordinates of the zeta_3^{-1}-eigenspace of iso.  H^{2,0} = span(omega),
// H^{0,2} its conjugate, H^{1,1} the exact Q-orthogonal complement.
HodgeStructure k3_from_period(const LatticeIsometry& iso, const CycMat& omega);

// Rank-2 weight-1 structure on the symplectic container with the stored
// order-3 action R (R^2 + R + I = 0) acting by zeta_3 on H^{1,0}.
HodgeStructure elliptic_fermat_hs();
const IntMat& elliptic_order3_action();

// Invariant part of H^2(S) (x) H^1(E) under the product action: the weight-3
// structure with piece dims (1, r, r, 1).  Inputs must carry their order-3
// actions.
HodgeStructure cy3_tensor_hs(const HodgeStructure& s, const HodgeStructure& e);

// Basis of F^2 = H^{3,0} + H^{2,1} in container coordinates.
CycMat f2_basis(const HodgeStructure& hs3);

// H = i Q(., conj .) restricted to an F^2 basis, normalized so the
// H^{3,0} diagonal entry is positive; `flipped` records the normalization.
struct W3Hermitian {
  CycMat h;
  bool flipped = false;
};
W3Hermitian weight3_hermitian(const HodgeStructure& hs3);

enum class F2Check { holds, fails, alpha_is_real_scalar };
// Does alpha realize F^2 = Eig(alpha, eta) and conj F^2 = Eig(alpha, eta bar)
// for the (root of unity) eigenvalue eta of alpha on H^{3,0}?
// Rejects alpha not preserving the polarization.
F2Check f2_eigenspace_check(const HodgeStructure& hs3, const RatMat& alpha);
// Eigenvalue of alpha on H^{weight,0}; nullopt when the line is not preserved.
std::optional<CycNum> hk0_eigenvalue(const HodgeStructure& hs, const RatMat& alpha);

HodgeStructure griffiths_jacobian(const HodgeStructure& hs3);
HodgeStructure weil_jacobian(const HodgeStructure& hs3);

enum class CmVerdict { cm_certified, not_certified };
// Sufficient test: a rational endomorphism preserving every piece whose
// minimal polynomial is irreducible of degree dim forces the Hodge group
// into a torus.  not_certified is NOT a proof of absence.
CmVerdict cm_sufficient_check(const HodgeStructure& hs, const RatMat& e);

}  // namespace cyhodge

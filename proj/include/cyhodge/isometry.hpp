#pragma once

#include <map>

#include "cyhodge/lattice.hpp"

namespace cyhodge {

struct NotIsometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InfiniteOrderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite-order isometry of an integral lattice: M^T G M = G exactly, with
// the order verified and cached at validation time.
class LatticeIsometry {
 public:
  // Verifies form preservation and finite order (powers up to order_bound).
  static LatticeIsometry validate(Lattice lattice, IntMat matrix,
                                  long order_bound = 60);

  const Lattice& lattice() const { return lattice_; }
  const IntMat& matrix() const { return matrix_; }
  long order() const { return order_; }

 private:
  LatticeIsometry(Lattice l, IntMat m, long ord)
      : lattice_(std::move(l)), matrix_(std::move(m)), order_(ord) {}
  Lattice lattice_;
  IntMat matrix_;
  long order_;
};

// Multiplicity a_d of Phi_d in the characteristic polynomial, for each
// divisor d of the order; computed by exact char-poly division.  The sum of
// a_d * phi(d) equals the rank.
std::map<long, long> cyclotomic_multiplicities(const LatticeIsometry& iso);

// Exact basis of ker(M - zeta_d^j I) over Q(zeta_d); columns = a_d.
CycMat eigenspace_basis(const LatticeIsometry& iso, long d, long j);

// H_ij = Q(b_i, conj(b_j)) on the (d, j)-eigenspace basis; Hermitian with
// real diagonal.  Rejects alternating containers.
CycMat eigenspace_hermitian_form(const LatticeIsometry& iso, long d, long j);

// Signature of a Hermitian cyclotomic matrix by pivoted exact LDL^*.
Signature hermitian_signature(const CycMat& h);

// Build-time-derived order-3 isometries of the K3 lattice with
// dim (L_C)_xi = r + 1 and eigenspace Hermitian signature (1, r).
// Supported r: 1, 3, 5.
const LatticeIsometry& catalog_order3(int r);

// The derived building blocks (each verified on construction):
// an order-3 isometry of U (+) U with no fixed vectors...
const IntMat& order3_on_double_u();
// ...and an order-3 isometry of E8 rotating the given number of pairwise
// orthogonal A2 sublattices (2 = half of E8, 4 = fixed-point-free).
const IntMat& order3_on_e8(int rotated_a2_count);

}  // namespace cyhodge

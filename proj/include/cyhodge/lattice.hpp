#pragma once

#include "cyhodge/linalg.hpp"
#include "cyhodge/matrix.hpp"

namespace cyhodge {

struct Signature {
  long positive = 0;
  long negative = 0;
  long zero = 0;
  bool operator==(const Signature& o) const = default;
};

enum class StandardLattice { U, A2, E8_minus, K3, elliptic_H1 };

// Finite-rank integral lattice given by its Gram matrix.  elliptic_H1 is the
// rank-2 symplectic container, stored here with the alternating flag;
// symmetric-only operations reject it.
struct Lattice {
  long rank = 0;
  IntMat gram;
  bool alternating = false;

  Lattice() = default;
  Lattice(IntMat g, bool alt = false);

  bool operator==(const Lattice& o) const {
    return rank == o.rank && gram == o.gram && alternating == o.alternating;
  }
};

Lattice make_standard(StandardLattice name);
std::optional<StandardLattice> standard_lattice_by_name(const std::string& name);
std::string standard_lattice_name(StandardLattice name);

Lattice direct_sum(const Lattice& a, const Lattice& b);

// Sylvester signature of a symmetric matrix with real cyclotomic entries,
// by pivoted exact LDL^T; pivot signs via certified_sign.
Signature signature_of(const CycMat& g);
// Fast path for rational symmetric matrices.
Signature signature_of(const RatMat& g);
Signature signature_of(const Lattice& l);  // rejects alternating containers

struct EvenUnimodular {
  bool even = false;
  bool unimodular = false;
};
EvenUnimodular is_even_unimodular(const Lattice& l);

Int lattice_det(const Lattice& l);

}  // namespace cyhodge

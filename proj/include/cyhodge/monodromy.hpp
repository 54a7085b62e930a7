#pragma once

#include <random>
#include <variant>

#include "cyhodge/hodge.hpp"

namespace cyhodge {

struct NotUnipotentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invertible rational matrix on the rational container of a weight-3
// structure, with the form-preservation check cached.
struct MonodromyElement {
  RatMat matrix;
  bool preserves_form = false;
  static MonodromyElement make(RatMat m, const Lattice& form);
};

struct BlockDecomposition {
  CycMat f2_block;
  CycMat conj_block;  // entrywise conjugate of f2_block
};
struct NotBlockDiagonal {
  long witness_col = -1;  // f2 basis column whose image leaves the span
  CycMat witness;
};
using BlockResult = std::variant<BlockDecomposition, NotBlockDiagonal>;

// Blocks of g over span(f2_basis) and its conjugate; the two spans must
// jointly fill the ambient space.
BlockResult block_structure(const RatMat& g, const CycMat& f2basis);

// N = log(T) = sum (-1)^{j+1} (T-I)^j / j, finite because T is unipotent;
// verified by reproducing T from the truncated exponential.
RatMat nilpotent_log(const RatMat& t);
RatMat truncated_exp(const RatMat& n);

// dim Im(N^3) for nilpotent N.
long weight_w0_dim(const RatMat& n);

struct MumReport {
  enum class Verdict { MUM_IMPOSSIBLE, NOT_APPLICABLE };
  Verdict verdict = Verdict::NOT_APPLICABLE;
  std::vector<long> w0_dims;  // over all unipotent words analyzed
  std::string proof_line;
  std::optional<NotBlockDiagonal> blocker;
};

// All generators must block-diagonalize over f2basis (else NOT_APPLICABLE
// with the witness).  Unipotent words up to word_length get their
// log-image dimension recorded; block-diagonality forces every such
// dimension even, while maximally unipotent monodromy needs dimension 1.
MumReport mum_obstruction(const std::vector<RatMat>& gens, const CycMat& f2basis,
                          int word_length = 3);

// g a alpha-commutation test; alpha must act as a scalar on span(f2basis)
// and as the conjugate scalar on the conjugate span, g must preserve q.
bool centralizer_membership(const RatMat& g, const RatMat& alpha,
                            const CycMat& f2basis, const RatMat& q);

// The right-hand side of the centralizer lemma: g block-diagonalizes and its
// F^2 block is unitary for h (the restricted twisted form).
bool block_is_h_unitary(const RatMat& g, const CycMat& f2basis, const CycMat& h);

// --- constructors for the property suites (all exact) -------------------

// Real matrix acting as the given block on span(f2basis) and as the
// conjugate block on the conjugate span.  Throws if the result is not
// rational (it always is when the block construction is conj-symmetric).
RatMat transport_block(const CycMat& block, const CycMat& f2basis);

// Random unipotent upper-triangular block over Q(zeta_3), transported.
RatMat random_block_unipotent(const CycMat& f2basis, std::mt19937_64& rng);

// Random h-unitary block (product of Hermitian reflections with root-of-
// unity multipliers), transported; the result preserves q exactly.
RatMat random_h_unitary_real(const CycMat& f2basis, const CycMat& h,
                             std::mt19937_64& rng);

// Random symplectic transvection(s): x -> x + Q(x,v) v.
RatMat random_symplectic_transvection(const RatMat& q, std::mt19937_64& rng,
                                      int count = 2);

// Exact search for a form-preserving element conjugating alpha to alpha^2
// (so it swaps the two eigenspaces); small containers only.
std::optional<RatMat> find_eigenspace_swap(const RatMat& alpha, const RatMat& q,
                                           const CycMat& f2basis);

}  // namespace cyhodge

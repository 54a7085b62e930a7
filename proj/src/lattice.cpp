#include "cyhodge/lattice.hpp"

namespace cyhodge {

Lattice::Lattice(IntMat g, bool alt) : rank(g.rows()), gram(std::move(g)), alternating(alt) {
  if (gram.rows() != gram.cols())
    throw std::invalid_argument("Lattice: Gram matrix must be square");
  for (long i = 0; i < rank; ++i)
    for (long j = 0; j < rank; ++j) {
      Int want = alternating ? Int(-gram(j, i)) : gram(j, i);
      if (gram(i, j) != want)
        throw std::invalid_argument(alternating ? "Lattice: Gram not alternating"
                                                : "Lattice: Gram not symmetric");
    }
}

namespace {

IntMat e8_cartan() {
  // Bourbaki numbering: chain 1-3-4-5-6-7-8, node 2 attached to node 4.
  IntMat c(8, 8);
  for (long i = 0; i < 8; ++i) c(i, i) = 2;
  auto link = [&](long a, long b) {
    c(a - 1, b - 1) = -1;
    c(b - 1, a - 1) = -1;
  };
  link(1, 3);
  link(3, 4);
  link(4, 5);
  link(5, 6);
  link(6, 7);
  link(7, 8);
  link(2, 4);
  return c;
}

}  // namespace

Lattice make_standard(StandardLattice name) {
  switch (name) {
    case StandardLattice::U: {
      IntMat g(2, 2);
      g(0, 1) = 1;
      g(1, 0) = 1;
      return Lattice(g);
    }
    case StandardLattice::A2: {
      IntMat g(2, 2);
      g(0, 0) = 2;
      g(1, 1) = 2;
      g(0, 1) = -1;
      g(1, 0) = -1;
      return Lattice(g);
    }
    case StandardLattice::E8_minus:
      return Lattice(-e8_cartan());
    case StandardLattice::K3: {
      Lattice u = make_standard(StandardLattice::U);
      Lattice e8m = make_standard(StandardLattice::E8_minus);
      return direct_sum(direct_sum(direct_sum(u, u), u), direct_sum(e8m, e8m));
    }
    case StandardLattice::elliptic_H1: {
      IntMat g(2, 2);
      g(0, 1) = 1;
      g(1, 0) = -1;
      return Lattice(g, /*alt=*/true);
    }
  }
  throw std::logic_error("make_standard: unknown name");
}

std::optional<StandardLattice> standard_lattice_by_name(const std::string& name) {
  if (name == "U") return StandardLattice::U;
  if (name == "A2") return StandardLattice::A2;
  if (name == "E8_minus") return StandardLattice::E8_minus;
  if (name == "K3") return StandardLattice::K3;
  if (name == "elliptic_H1") return StandardLattice::elliptic_H1;
  return std::nullopt;
}

std::string standard_lattice_name(StandardLattice name) {
  switch (name) {
    case StandardLattice::U: return "U";
    case StandardLattice::A2: return "A2";
    case StandardLattice::E8_minus: return "E8_minus";
    case StandardLattice::K3: return "K3";
    case StandardLattice::elliptic_H1: return "elliptic_H1";
  }
  return "?";
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  if (a.alternating != b.alternating)
    throw std::invalid_argument("direct_sum: mixed symmetric/alternating summands");
  IntMat g(a.rank + b.rank, a.rank + b.rank);
  for (long i = 0; i < a.rank; ++i)
    for (long j = 0; j < a.rank; ++j) g(i, j) = a.gram(i, j);
  for (long i = 0; i < b.rank; ++i)
    for (long j = 0; j < b.rank; ++j) g(a.rank + i, a.rank + j) = b.gram(i, j);
  return Lattice(g, a.alternating);
}

namespace {

// Shared pivoted LDL^* signature kernel.  Works for real symmetric (Rat) and
// Hermitian (CycNum) input; SignFn must return the exact sign of a nonzero
// real diagonal entry.
template <typename T, typename ConjFn, typename SignFn>
Signature ldl_signature(Matrix<T> a, ConjFn conj, SignFn sign_fn) {
  long n = a.rows();
  Signature sig;
  std::vector<bool> done(n, false);
  long remaining = n;
  while (remaining > 0) {
    long k = -1;
    for (long i = 0; i < n; ++i)
      if (!done[i] && !(a(i, i) == T(0))) { k = i; break; }
    if (k < 0) {
      // all active diagonal entries vanish; look for an off-diagonal entry
      long bi = -1, bj = -1;
      for (long i = 0; i < n && bi < 0; ++i) {
        if (done[i]) continue;
        for (long j = 0; j < n; ++j) {
          if (done[j] || j == i) continue;
          if (!(a(i, j) == T(0))) { bi = i; bj = j; break; }
        }
      }
      if (bi < 0) {
        sig.zero += remaining;
        return sig;
      }
      // congruence b_i += conj(a_ij) * b_j; new diagonal 2*|a_ij|^2 > 0
      T aij = a(bi, bj);
      T aij_bar = conj(aij);
      for (long t = 0; t < n; ++t)
        if (!done[t]) a(bi, t) = a(bi, t) + aij * a(bj, t);
      for (long t = 0; t < n; ++t)
        if (!done[t]) a(t, bi) = a(t, bi) + a(t, bj) * aij_bar;
      continue;
    }
    T p = a(k, k);
    int s = sign_fn(p);
    if (s > 0) ++sig.positive;
    else ++sig.negative;
    T pinv = FieldOps<T>::inv(p);
    for (long i = 0; i < n; ++i) {
      if (done[i] || i == k || a(i, k) == T(0)) continue;
      T f = a(i, k) * pinv;
      for (long j = 0; j < n; ++j)
        if (!done[j]) a(i, j) = a(i, j) - f * a(k, j);
    }
    for (long t = 0; t < n; ++t) {
      a(k, t) = T(0);
      a(t, k) = T(0);
    }
    done[k] = true;
    --remaining;
  }
  return sig;
}

}  // namespace

Signature signature_of(const CycMat& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("signature: not square");
  if (conj_transpose(g) != g)
    throw std::invalid_argument("signature: matrix is not Hermitian/symmetric");
  return ldl_signature(
      g, [](const CycNum& x) { return x.conj(); },
      [](const CycNum& x) { return x.certified_sign(); });
}

Signature signature_of(const RatMat& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("signature: not square");
  if (g.transpose() != g) throw std::invalid_argument("signature: matrix not symmetric");
  return ldl_signature(
      g, [](const Rat& x) { return x; }, [](const Rat& x) { return sign_of(x); });
}

Signature signature_of(const Lattice& l) {
  if (l.alternating)
    throw std::invalid_argument("signature: alternating container has no signature");
  return signature_of(to_rat(l.gram));
}

EvenUnimodular is_even_unimodular(const Lattice& l) {
  EvenUnimodular r;
  r.even = true;
  for (long i = 0; i < l.rank; ++i)
    if (l.gram(i, i) % 2 != 0) r.even = false;
  Int d = lattice_det(l);
  r.unimodular = (d == 1 || d == -1);
  return r;
}

Int lattice_det(const Lattice& l) {
  if (l.rank == 0) return Int(1);
  return det_int(l.gram);
}

}  // namespace cyhodge

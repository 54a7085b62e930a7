#include "cyhodge/hodge.hpp"

namespace cyhodge {

const CycMat& HodgeStructure::piece(long p, long q) const {
  auto it = pieces.find({p, q});
  if (it == pieces.end()) throw std::out_of_range("HodgeStructure: no such piece");
  return it->second;
}

long HodgeStructure::piece_dim(long p, long q) const {
  auto it = pieces.find({p, q});
  return it == pieces.end() ? 0 : it->second.cols();
}

CycMat HodgeStructure::filtration(long p) const {
  CycMat f(dim, 0);
  for (const auto& [pq, basis] : pieces)
    if (pq.first >= p) f = CycMat::hstack(f, basis);
  return f;
}

void validate_hodge_structure(const HodgeStructure& hs) {
  long total = 0;
  CycMat stacked(hs.dim, 0);
  for (const auto& [pq, basis] : hs.pieces) {
    if (pq.first + pq.second != hs.weight)
      throw std::logic_error("HodgeStructure: piece type does not match weight");
    if (basis.rows() != hs.dim)
      throw std::logic_error("HodgeStructure: piece rows != ambient dim");
    total += basis.cols();
    stacked = CycMat::hstack(stacked, basis);
  }
  if (total != hs.dim)
    throw std::logic_error("HodgeStructure: piece dims do not sum to dim");
  if (rank_of(stacked) != hs.dim)
    throw std::logic_error("HodgeStructure: pieces are not independent");
  for (const auto& [pq, basis] : hs.pieces) {
    auto it = hs.pieces.find({pq.second, pq.first});
    if (it == hs.pieces.end() || !spans_equal(conj_entrywise(basis), it->second))
      throw std::logic_error("HodgeStructure: conjugation symmetry fails");
  }
}

HermitianDiag hermitian_diagonalize(const CycMat& h) {
  if (h.rows() != h.cols() || conj_transpose(h) != h)
    throw std::invalid_argument("hermitian_diagonalize: not Hermitian");
  long n = h.rows();
  CycMat a = h;
  CycMat basis = CycMat::identity(n);
  std::vector<bool> done(n, false);
  HermitianDiag out;
  out.basis = CycMat(n, 0);
  long remaining = n;
  auto add_col = [&](CycMat& dst, long i, long j, const CycNum& c) {
    // col_i += c * col_j
    for (long t = 0; t < dst.rows(); ++t) dst(t, i) = dst(t, i) + c * dst(t, j);
  };
  while (remaining > 0) {
    long k = -1;
    for (long i = 0; i < n; ++i)
      if (!done[i] && !a(i, i).is_zero()) { k = i; break; }
    if (k < 0) {
      long bi = -1, bj = -1;
      for (long i = 0; i < n && bi < 0; ++i) {
        if (done[i]) continue;
        for (long j = 0; j < n; ++j)
          if (!done[j] && j != i && !a(i, j).is_zero()) { bi = i; bj = j; break; }
      }
      if (bi < 0) {
        for (long i = 0; i < n; ++i)
          if (!done[i]) {
            out.basis = CycMat::hstack(out.basis, basis.col(i));
            out.diag.push_back(CycNum(0));
            out.sign.push_back(0);
          }
        return out;
      }
      CycNum aij = a(bi, bj), aij_bar = aij.conj();
      for (long t = 0; t < n; ++t)
        if (!done[t]) a(bi, t) = a(bi, t) + aij * a(bj, t);
      for (long t = 0; t < n; ++t)
        if (!done[t]) a(t, bi) = a(t, bi) + a(t, bj) * aij_bar;
      add_col(basis, bi, bj, aij);
      continue;
    }
    CycNum p = a(k, k);
    CycNum pinv = p.inverse();
    for (long i = 0; i < n; ++i) {
      if (done[i] || i == k || a(i, k).is_zero()) continue;
      CycNum f = a(i, k) * pinv;
      for (long j = 0; j < n; ++j)
        if (!done[j]) a(i, j) = a(i, j) - f * a(k, j);
      add_col(basis, i, k, CycNum(0) - f);
    }
    for (long t = 0; t < n; ++t) { a(k, t) = CycNum(0); a(t, k) = CycNum(0); }
    done[k] = true;
    --remaining;
    out.basis = CycMat::hstack(out.basis, basis.col(k));
    out.diag.push_back(p);
    out.sign.push_back(p.certified_sign());
  }
  return out;
}

bool ball_membership(const CycMat& h, const CycMat& omega) {
  if (omega.cols() != 1 || omega.rows() != h.rows())
    throw std::invalid_argument("ball_membership: dimension mismatch");
  if (omega.is_zero())
    throw std::invalid_argument("ball_membership: omega must be nonzero");
  CycMat val = omega.transpose() * h * conj_entrywise(omega);
  return val(0, 0).certified_sign() > 0;
}

CycMat pick_positive_period(const CycMat& h) {
  HermitianDiag d = hermitian_diagonalize(h);
  for (size_t i = 0; i < d.sign.size(); ++i)
    if (d.sign[i] > 0) return d.basis.col(static_cast<long>(i));
  throw std::domain_error("pick_positive_period: form has no positive direction");
}

HodgeStructure k3_from_period(const LatticeIsometry& iso, const CycMat& omega) {
  if (iso.lattice().alternating || iso.order() != 3)
    throw std::invalid_argument("k3_from_period: need an order-3 isometry of a symmetric lattice");
  CycMat basis = eigenspace_basis(iso, 3, 2);  // eigenvalue xi^{-1} = zeta_3^2
  CycMat h = eigenspace_hermitian_form(iso, 3, 2);
  if (!ball_membership(h, omega))
    throw std::domain_error("k3_from_period: omega is not in the period ball");

  CycMat w = basis * omega;  // ambient 22-vector
  CycMat wbar = conj_entrywise(w);
  CycMat g = to_cyc(iso.lattice().gram);
  // isotropy holds automatically for a non-real eigenvalue; re-check exactly
  CycMat qww = w.transpose() * g * w;
  if (!qww(0, 0).is_zero())
    throw std::logic_error("k3_from_period: eigenvector is not isotropic");

  CycMat rows = CycMat::hstack(w, wbar).transpose() * g;  // 2 x 22
  CycMat h11 = kernel_basis(rows);

  HodgeStructure hs;
  hs.weight = 2;
  hs.dim = iso.lattice().rank;
  hs.pieces[{2, 0}] = w;
  hs.pieces[{1, 1}] = h11;
  hs.pieces[{0, 2}] = wbar;
  hs.form = iso.lattice();
  hs.action = to_rat(iso.matrix());
  validate_hodge_structure(hs);
  return hs;
}

const IntMat& elliptic_order3_action() {
  static const IntMat r = [] {
    IntMat m(2, 2);
    m(0, 1) = -1;
    m(1, 0) = 1;
    m(1, 1) = -1;
    // order 3 and symplectic, by the validation oracle
    LatticeIsometry::validate(make_standard(StandardLattice::elliptic_H1), m, 3);
    if (!(m * m + m + IntMat::identity(2)).is_zero())
      throw std::logic_error("elliptic action: R^2 + R + I != 0");
    return m;
  }();
  return r;
}

HodgeStructure elliptic_fermat_hs() {
  const IntMat& r = elliptic_order3_action();
  CycNum xi = CycNum::root_of_unity(3);
  CycMat m = to_cyc(r);
  for (long i = 0; i < 2; ++i) m(i, i) = m(i, i) - xi;
  CycMat h10 = kernel_basis(m);  // R acts by xi here (pullback convention)
  HodgeStructure hs;
  hs.weight = 1;
  hs.dim = 2;
  hs.pieces[{1, 0}] = h10;
  hs.pieces[{0, 1}] = conj_entrywise(h10);
  hs.form = make_standard(StandardLattice::elliptic_H1);
  hs.action = to_rat(r);
  validate_hodge_structure(hs);
  return hs;
}

namespace {

// coordinates of ambient columns v in the container basis k: solve k x = v
CycMat container_coords(const RatMat& pseudo_inv, const CycMat& k_cyc,
                        const CycMat& v) {
  CycMat x = to_cyc(pseudo_inv) * v;
  if (!(k_cyc * x == v))
    throw std::logic_error("cy3_tensor_hs: vector outside the invariant container");
  return x;
}

}  // namespace

HodgeStructure cy3_tensor_hs(const HodgeStructure& s, const HodgeStructure& e) {
  if (s.weight != 2 || e.weight != 1)
    throw std::invalid_argument("cy3_tensor_hs: need weight-2 and weight-1 inputs");
  if (!s.action || !e.action)
    throw std::invalid_argument("cy3_tensor_hs: inputs must carry group actions");
  RatMat ms = *s.action, me = *e.action;
  if (matrix_order(ms, 3) != std::optional<long>(3) ||
      matrix_order(me, 3) != std::optional<long>(3))
    throw std::invalid_argument("cy3_tensor_hs: actions must have order 3");

  long ns = s.dim, ne = e.dim, n = ns * ne;
  RatMat prod = RatMat::kron(ms, me);
  IntMat prod_z(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (prod(i, j).get_den() != 1)
        throw std::invalid_argument("cy3_tensor_hs: actions must be integral");
      prod_z(i, j) = prod(i, j).get_num();
    }

  IntMat k = integer_kernel(prod_z - IntMat::identity(n));  // invariant sublattice
  RatMat kr = to_rat(k);
  auto ktk_inv = inverse_of(kr.transpose() * kr);
  if (!ktk_inv) throw std::logic_error("cy3_tensor_hs: degenerate container");
  RatMat pinv = *ktk_inv * kr.transpose();
  CycMat kc = to_cyc(k);

  const CycMat& s20 = s.piece(2, 0);
  const CycMat& e10 = e.piece(1, 0);

  // xi^2-eigenspace part of H^{1,1}(S): vectors of Eig(M_S, xi^2) orthogonal
  // to conj(omega) under the K3 form
  CycNum xi2 = CycNum::root_of_unity(3, 2);
  CycMat msc = to_cyc(ms);
  for (long i = 0; i < ns; ++i) msc(i, i) = msc(i, i) - xi2;
  CycMat eig = kernel_basis(msc);
  CycMat gs = to_cyc(s.form.gram);
  CycMat row = conj_entrywise(s20).transpose() * gs;  // 1 x ns
  CycMat inner = kernel_basis(row * eig);
  CycMat s11_xi2 = eig * inner;

  CycMat p30 = CycMat::kron(s20, e10);
  CycMat p21 = CycMat::kron(s11_xi2, e10);
  CycMat p12 = conj_entrywise(p21);
  CycMat p03 = conj_entrywise(p30);

  HodgeStructure hs;
  hs.weight = 3;
  hs.dim = k.cols();
  hs.pieces[{3, 0}] = container_coords(pinv, kc, p30);
  hs.pieces[{2, 1}] = container_coords(pinv, kc, p21);
  hs.pieces[{1, 2}] = container_coords(pinv, kc, p12);
  hs.pieces[{0, 3}] = container_coords(pinv, kc, p03);

  IntMat q_amb(0, 0);
  {
    IntMat ge = e.form.alternating ? e.form.gram : IntMat();
    if (!e.form.alternating)
      throw std::invalid_argument("cy3_tensor_hs: elliptic form must be alternating");
    q_amb = IntMat::kron(s.form.gram, ge);
  }
  IntMat q = k.transpose() * q_amb * k;
  hs.form = Lattice(q, /*alt=*/true);

  // induced action of the order-3 symmetry of the second factor; this is the
  // automorphism acting by xi on F^2
  RatMat ie_amb = RatMat::kron(RatMat::identity(ns), me);
  RatMat induced = pinv * ie_amb * kr;
  if (!(kr * induced == ie_amb * kr))
    throw std::logic_error("cy3_tensor_hs: induced action does not preserve container");
  hs.action = induced;

  validate_hodge_structure(hs);
  return hs;
}

CycMat f2_basis(const HodgeStructure& hs3) {
  if (hs3.weight != 3) throw std::invalid_argument("f2_basis: weight must be 3");
  return CycMat::hstack(hs3.piece(3, 0), hs3.piece(2, 1));
}

W3Hermitian weight3_hermitian(const HodgeStructure& hs3) {
  if (hs3.weight != 3)
    throw std::invalid_argument("weight3_hermitian: weight must be 3");
  if (!hs3.form.alternating)
    throw std::invalid_argument("weight3_hermitian: polarization must be alternating");
  CycMat f2 = f2_basis(hs3);
  CycMat q = to_cyc(hs3.form.gram);
  CycNum i4 = CycNum::root_of_unity(4);
  CycMat h = (f2.transpose() * q * conj_entrywise(f2)) * i4;
  if (conj_transpose(h) != h)
    throw std::logic_error("weight3_hermitian: iQ(.,conj .) not Hermitian");
  W3Hermitian out;
  int s0 = h(0, 0).certified_sign();
  if (s0 == 0) throw std::logic_error("weight3_hermitian: degenerate on H^{3,0}");
  out.flipped = s0 < 0;
  out.h = out.flipped ? CycMat(h * CycNum(-1)) : h;
  return out;
}

std::optional<CycNum> hk0_eigenvalue(const HodgeStructure& hs, const RatMat& alpha) {
  const CycMat& top = hs.piece(hs.weight, 0);
  CycMat img = to_cyc(alpha) * top;
  // proportionality img = eta * top
  long pivot = -1;
  for (long i = 0; i < top.rows(); ++i)
    if (!top(i, 0).is_zero()) { pivot = i; break; }
  if (pivot < 0) throw std::logic_error("hk0_eigenvalue: zero top piece");
  CycNum eta = img(pivot, 0) / top(pivot, 0);
  if (!(top * eta == img)) return std::nullopt;
  return eta;
}

F2Check f2_eigenspace_check(const HodgeStructure& hs3, const RatMat& alpha) {
  if (hs3.weight != 3)
    throw std::invalid_argument("f2_eigenspace_check: weight must be 3");
  if (alpha.rows() != hs3.dim || alpha.cols() != hs3.dim)
    throw std::invalid_argument("f2_eigenspace_check: alpha has wrong size");
  RatMat q = to_rat(hs3.form.gram);
  if (!(alpha.transpose() * q * alpha == q))
    throw std::invalid_argument("f2_eigenspace_check: alpha does not preserve the polarization");

  auto eta_opt = hk0_eigenvalue(hs3, alpha);
  if (!eta_opt) return F2Check::fails;
  CycNum eta = *eta_opt;

  // eta must be a root of unity (finite-order Hodge isometry on a line)
  bool root = false;
  CycNum p(1);
  for (long k = 1; k <= 60 && !root; ++k) {
    p = p * eta;
    if (p == CycNum(1)) root = true;
  }
  if (!root) return F2Check::fails;

  if ((eta == CycNum(1) || eta == CycNum(-1))) {
    RatMat id = RatMat::identity(hs3.dim);
    if (alpha == id || alpha == -id) return F2Check::alpha_is_real_scalar;
  }

  CycMat ac = to_cyc(alpha);
  CycMat shifted = ac;
  for (long i = 0; i < hs3.dim; ++i) shifted(i, i) = shifted(i, i) - eta;
  CycMat eig = kernel_basis(shifted);
  CycMat f2 = f2_basis(hs3);
  if (!spans_equal(eig, f2)) return F2Check::fails;

  CycNum etabar = eta.conj();
  CycMat shifted2 = ac;
  for (long i = 0; i < hs3.dim; ++i) shifted2(i, i) = shifted2(i, i) - etabar;
  CycMat eig2 = kernel_basis(shifted2);
  CycMat f2bar = CycMat::hstack(hs3.piece(1, 2), hs3.piece(0, 3));
  if (!spans_equal(eig2, f2bar)) return F2Check::fails;
  return F2Check::holds;
}

HodgeStructure griffiths_jacobian(const HodgeStructure& hs3) {
  if (hs3.weight != 3)
    throw std::invalid_argument("griffiths_jacobian: weight must be 3");
  HodgeStructure j;
  j.weight = 1;
  j.dim = hs3.dim;
  j.pieces[{1, 0}] = CycMat::hstack(hs3.piece(3, 0), hs3.piece(2, 1));
  j.pieces[{0, 1}] = CycMat::hstack(hs3.piece(1, 2), hs3.piece(0, 3));
  j.form = hs3.form;
  j.action = hs3.action;
  validate_hodge_structure(j);
  return j;
}

HodgeStructure weil_jacobian(const HodgeStructure& hs3) {
  if (hs3.weight != 3)
    throw std::invalid_argument("weil_jacobian: weight must be 3");
  HodgeStructure j;
  j.weight = 1;
  j.dim = hs3.dim;
  j.pieces[{1, 0}] = CycMat::hstack(hs3.piece(2, 1), hs3.piece(0, 3));
  j.pieces[{0, 1}] = CycMat::hstack(hs3.piece(3, 0), hs3.piece(1, 2));
  j.form = hs3.form;
  j.action = hs3.action;
  validate_hodge_structure(j);
  return j;
}

CmVerdict cm_sufficient_check(const HodgeStructure& hs, const RatMat& e) {
  if (e.rows() != hs.dim || e.cols() != hs.dim)
    throw std::invalid_argument("cm_sufficient_check: endomorphism has wrong size");
  CycMat ec = to_cyc(e);
  for (const auto& [pq, basis] : hs.pieces)
    if (!in_span(basis, ec * basis))
      throw std::invalid_argument(
          "cm_sufficient_check: endomorphism does not preserve the Hodge pieces");
  RatPoly m = min_poly(e);
  if (m.degree() != hs.dim) return CmVerdict::not_certified;
  return certified_irreducible(m) ? CmVerdict::cm_certified : CmVerdict::not_certified;
}

}  // namespace cyhodge

#include "cyhodge/monodromy.hpp"

namespace cyhodge {

MonodromyElement MonodromyElement::make(RatMat m, const Lattice& form) {
  if (m.rows() != m.cols()) throw std::invalid_argument("MonodromyElement: not square");
  if (rank_of(m) != m.rows())
    throw std::invalid_argument("MonodromyElement: matrix is singular");
  RatMat q = to_rat(form.gram);
  MonodromyElement el{std::move(m), false};
  el.preserves_form = (el.matrix.transpose() * q * el.matrix == q);
  return el;
}

namespace {

CycMat joint_basis(const CycMat& f2basis) {
  CycMat p = CycMat::hstack(f2basis, conj_entrywise(f2basis));
  if (p.rows() != p.cols() || rank_of(p) != p.rows())
    throw std::invalid_argument(
        "f2 basis and its conjugate do not span the ambient space");
  return p;
}

}  // namespace

BlockResult block_structure(const RatMat& g, const CycMat& f2basis) {
  CycMat p = joint_basis(f2basis);
  long n = p.rows(), m = f2basis.cols();
  CycMat gc = to_cyc(g);
  auto coords = solve_linear(p, CycMat::hstack(gc * f2basis, gc * conj_entrywise(f2basis)));
  if (!coords) throw std::logic_error("block_structure: coordinate solve failed");
  // columns 0..m-1: image of f2 basis; m..2m-1: image of the conjugate basis
  for (long j = 0; j < m; ++j)
    for (long i = m; i < n; ++i)
      if (!(*coords)(i, j).is_zero()) {
        NotBlockDiagonal nb;
        nb.witness_col = j;
        nb.witness = f2basis.col(j);
        return nb;
      }
  BlockDecomposition bd;
  bd.f2_block = CycMat(m, m);
  bd.conj_block = CycMat(m, m);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) {
      bd.f2_block(i, j) = (*coords)(i, j);
      bd.conj_block(i, j) = (*coords)(m + i, m + j);
    }
  // cross-checks: conjugate span also preserved, and conj block really is
  // the conjugate of the f2 block (g is rational)
  for (long j = 0; j < m; ++j)
    for (long i = 0; i < m; ++i)
      if (!(*coords)(i, m + j).is_zero()) {
        NotBlockDiagonal nb;
        nb.witness_col = j;
        nb.witness = conj_entrywise(f2basis).col(j);
        return nb;
      }
  if (conj_entrywise(bd.f2_block) != bd.conj_block)
    throw std::logic_error("block_structure: conjugate block mismatch");
  return bd;
}

RatMat nilpotent_log(const RatMat& t) {
  if (t.rows() != t.cols()) throw std::invalid_argument("nilpotent_log: not square");
  long n = t.rows();
  RatMat u = t - RatMat::identity(n);
  RatMat p = u;
  // unipotence check
  RatMat power = u;
  bool nil = power.is_zero();
  for (long k = 1; k < n && !nil; ++k) {
    power = power * u;
    nil = power.is_zero();
  }
  if (!nil) throw NotUnipotentError("(T - I)^dim != 0");
  RatMat log(n, n);
  p = u;
  for (long j = 1; j <= n; ++j) {
    Rat c = Rat((j % 2 == 1) ? 1 : -1, j);
    c.canonicalize();
    log = log + p * c;
    if (j < n) p = p * u;
  }
  if (truncated_exp(log) != t)
    throw std::logic_error("nilpotent_log: exp check failed");
  return log;
}

RatMat truncated_exp(const RatMat& n) {
  long dim = n.rows();
  RatMat acc = RatMat::identity(dim);
  RatMat term = RatMat::identity(dim);
  Rat fact(1);
  for (long k = 1; k <= dim; ++k) {
    term = term * n;
    fact /= k;
    acc = acc + term * fact;
  }
  return acc;
}

long weight_w0_dim(const RatMat& n) {
  if (n.rows() != n.cols()) throw std::invalid_argument("weight_w0_dim: not square");
  RatMat p = n;
  bool nil = p.is_zero();
  for (long k = 1; k < n.rows() && !nil; ++k) {
    p = p * n;
    nil = p.is_zero();
  }
  if (!nil) throw std::invalid_argument("weight_w0_dim: input is not nilpotent");
  return rank_of(n * n * n);
}

MumReport mum_obstruction(const std::vector<RatMat>& gens, const CycMat& f2basis,
                          int word_length) {
  MumReport rep;
  for (const RatMat& g : gens) {
    BlockResult br = block_structure(g, f2basis);
    if (auto* nb = std::get_if<NotBlockDiagonal>(&br)) {
      rep.verdict = MumReport::Verdict::NOT_APPLICABLE;
      rep.blocker = *nb;
      rep.proof_line = "a generator does not preserve the F^2 span";
      return rep;
    }
  }
  // analyze unipotent words
  long n = f2basis.rows();
  std::vector<RatMat> words = {RatMat::identity(n)};
  std::vector<RatMat> frontier = words;
  for (int len = 1; len <= word_length; ++len) {
    std::vector<RatMat> next;
    for (const RatMat& w : frontier)
      for (const RatMat& g : gens) next.push_back(w * g);
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  for (const RatMat& w : words) {
    RatMat u = w - RatMat::identity(n);
    RatMat p = u;
    bool nil = p.is_zero();
    for (long k = 1; k < n && !nil; ++k) {
      p = p * u;
      nil = p.is_zero();
    }
    if (!nil) continue;
    rep.w0_dims.push_back(weight_w0_dim(nilpotent_log(w)));
  }
  rep.verdict = MumReport::Verdict::MUM_IMPOSSIBLE;
  rep.proof_line = "all dims even, 1 required";
  return rep;
}

bool centralizer_membership(const RatMat& g, const RatMat& alpha,
                            const CycMat& f2basis, const RatMat& q) {
  if (!(g.transpose() * q * g == q))
    throw std::invalid_argument("centralizer_membership: g does not preserve the form");
  // alpha must act as a scalar on the f2 span and its conjugate
  BlockResult ar = block_structure(alpha, f2basis);
  auto* bd = std::get_if<BlockDecomposition>(&ar);
  if (!bd) throw std::invalid_argument("centralizer_membership: alpha not block-diagonal");
  const CycMat& a = bd->f2_block;
  CycNum eta = a(0, 0);
  CycMat scalar = CycMat::identity(a.rows()) * eta;
  if (a != scalar || eta.is_real())
    throw std::invalid_argument(
        "centralizer_membership: alpha must act by a non-real scalar on F^2");
  return g * alpha == alpha * g;
}

bool block_is_h_unitary(const RatMat& g, const CycMat& f2basis, const CycMat& h) {
  BlockResult br = block_structure(g, f2basis);
  auto* bd = std::get_if<BlockDecomposition>(&br);
  if (!bd) return false;
  const CycMat& u = bd->f2_block;
  return u.transpose() * h * conj_entrywise(u) == h;
}

RatMat transport_block(const CycMat& block, const CycMat& f2basis) {
  CycMat p = joint_basis(f2basis);
  long m = f2basis.cols(), n = p.rows();
  if (block.rows() != m || block.cols() != m)
    throw std::invalid_argument("transport_block: block size mismatch");
  CycMat d(n, n);
  CycMat cb = conj_entrywise(block);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) {
      d(i, j) = block(i, j);
      d(m + i, m + j) = cb(i, j);
    }
  auto pinv = inverse_of(p);
  if (!pinv) throw std::logic_error("transport_block: basis not invertible");
  CycMat gc = p * d * *pinv;
  RatMat g(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (!gc(i, j).is_rational())
        throw std::logic_error("transport_block: non-rational transport");
      g(i, j) = gc(i, j).to_rational();
    }
  return g;
}

RatMat random_block_unipotent(const CycMat& f2basis, std::mt19937_64& rng) {
  long m = f2basis.cols();
  std::uniform_int_distribution<long> small(-2, 2);
  CycNum xi = CycNum::root_of_unity(3);
  CycMat u = CycMat::identity(m);
  for (long i = 0; i < m; ++i)
    for (long j = i + 1; j < m; ++j)
      u(i, j) = CycNum(Rat(small(rng))) + xi * CycNum(Rat(small(rng)));
  return transport_block(u, f2basis);
}

RatMat random_h_unitary_real(const CycMat& f2basis, const CycMat& h,
                             std::mt19937_64& rng) {
  long m = f2basis.cols();
  std::uniform_int_distribution<long> small(-2, 2);
  std::uniform_int_distribution<int> mu_pick(0, 2);
  CycMat u = CycMat::identity(m);
  int reflections = 1 + static_cast<int>(rng() % 2);
  for (int s = 0; s < reflections; ++s) {
    // Hermitian reflection: x -> x + (mu - 1) H(x,v)/H(v,v) v
    CycMat v(m, 1);
    CycNum hvv;
    for (int tries = 0; tries < 64; ++tries) {
      for (long i = 0; i < m; ++i)
        v(i, 0) = CycNum(Rat(small(rng))) + CycNum::root_of_unity(3) * CycNum(Rat(small(rng)));
      CycMat val = v.transpose() * h * conj_entrywise(v);
      hvv = val(0, 0);
      if (!hvv.is_zero()) break;
      if (tries == 63) throw std::logic_error("random_h_unitary_real: no anisotropic vector");
    }
    CycNum mu;
    switch (mu_pick(rng)) {
      case 0: mu = CycNum(-1); break;
      case 1: mu = CycNum::root_of_unity(3); break;
      default: mu = CycNum::root_of_unity(3, 2); break;
    }
    CycNum c = (mu - CycNum(1)) / hvv;
    CycMat hw = h * conj_entrywise(v);  // column: H(e_i, v)
    CycMat refl = CycMat::identity(m);
    for (long i = 0; i < m; ++i)
      for (long j = 0; j < m; ++j)
        refl(i, j) = refl(i, j) + v(i, 0) * c * hw(j, 0);
    u = refl * u;
  }
  if (!(u.transpose() * h * conj_entrywise(u) == h))
    throw std::logic_error("random_h_unitary_real: block not h-unitary");
  return transport_block(u, f2basis);
}

RatMat random_symplectic_transvection(const RatMat& q, std::mt19937_64& rng,
                                      int count) {
  long n = q.rows();
  std::uniform_int_distribution<long> small(-1, 1);
  RatMat g = RatMat::identity(n);
  for (int s = 0; s < count; ++s) {
    RatMat v(n, 1);
    bool nonzero = false;
    while (!nonzero) {
      for (long i = 0; i < n; ++i) {
        v(i, 0) = Rat(small(rng));
        if (v(i, 0) != 0) nonzero = true;
      }
    }
    RatMat qv = q * v;
    RatMat t = RatMat::identity(n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) t(i, j) += v(i, 0) * qv(j, 0);
    g = t * g;
  }
  if (!(g.transpose() * q * g == q))
    throw std::logic_error("random_symplectic_transvection: form not preserved");
  return g;
}

namespace {

// u in Q(zeta_3) with u * conj(u) = rho, by a bounded scan of
// (x + y zeta_3)/w; the norm form is x^2 - xy + y^2.
std::optional<CycNum> q3_with_norm(const Rat& rho) {
  if (rho <= 0) return std::nullopt;
  Int num = rho.get_num(), den = rho.get_den();
  if (!mpz_fits_slong_p(num.get_mpz_t()) || !mpz_fits_slong_p(den.get_mpz_t()))
    return std::nullopt;
  long n = num.get_si(), d = den.get_si();
  for (long w = 1; w <= 24; ++w) {
    if ((n * w * w) % d != 0) continue;
    long target = n * w * w / d;
    long bound = 1;
    while (bound * bound < target + 1) ++bound;
    for (long x = -2 * bound; x <= 2 * bound; ++x)
      for (long y = -2 * bound; y <= 2 * bound; ++y)
        if (x * x - x * y + y * y == target) {
          CycNum u = (CycNum(x) + CycNum::root_of_unity(3) * CycNum(y)) *
                     CycNum(Rat(1, w));
          return u;
        }
  }
  return std::nullopt;
}

}  // namespace

std::optional<RatMat> find_eigenspace_swap(const RatMat& alpha, const RatMat& q,
                                           const CycMat& f2basis) {
  // A form-preserving swap F^2 -> conj F^2 carries the twisted Hermitian
  // form to its negative, so it needs signature (1,1): two-dimensional F^2.
  if (f2basis.cols() != 2) return std::nullopt;
  CycMat qc = to_cyc(q);
  CycMat s = f2basis.transpose() * qc * conj_entrywise(f2basis);
  CycNum i4 = CycNum::root_of_unity(4);
  CycMat h = s * i4;
  HermitianDiag hd = hermitian_diagonalize(h);
  if (hd.sign.size() != 2 || hd.sign[0] * hd.sign[1] != -1) return std::nullopt;
  for (long i = 0; i < hd.basis.rows(); ++i)
    for (long j = 0; j < hd.basis.cols(); ++j)
      if (3 % hd.basis(i, j).conductor() != 0) return std::nullopt;
  long pos = hd.sign[0] > 0 ? 0 : 1;
  long neg = 1 - pos;
  // rho = -d_neg / d_pos > 0; rationality of the final matrix needs the
  // block over the coordinate field Q(zeta_3), so u must be a zeta_3-norm
  CycNum ratio = (CycNum(0) - hd.diag[neg]) / hd.diag[pos];
  if (!ratio.is_rational()) return std::nullopt;
  for (long i = 0; i < f2basis.rows(); ++i)
    for (long j = 0; j < f2basis.cols(); ++j)
      if (3 % f2basis(i, j).conductor() != 0) return std::nullopt;
  auto u_opt = q3_with_norm(ratio.to_rational());
  if (!u_opt) return std::nullopt;
  CycNum u = *u_opt;  // |u|^2 = rho

  // in the diagonalizing basis: y_pos = u e_pos has H-value -d_neg, and
  // y_neg = u^{-1} e_neg has H-value -d_pos; together they satisfy
  // conj(Y)^T S_d Y = conj(S_d)
  CycMat yd(2, 2);
  yd(pos, neg) = u;
  yd(neg, pos) = u.inverse();
  auto pinv = inverse_of(hd.basis);
  if (!pinv) return std::nullopt;
  CycMat y = conj_entrywise(hd.basis) * yd * *pinv;

  // assemble the real matrix from the off-diagonal blocks (Y, conj Y)
  CycMat p = CycMat::hstack(f2basis, conj_entrywise(f2basis));
  long n = p.rows();
  if (p.cols() != n || rank_of(p) != n) return std::nullopt;
  CycMat d(n, n);
  CycMat yc = conj_entrywise(y);
  for (long i = 0; i < 2; ++i)
    for (long j = 0; j < 2; ++j) {
      d(i, 2 + j) = yc(i, j);
      d(2 + i, j) = y(i, j);
    }
  auto pfull_inv = inverse_of(p);
  if (!pfull_inv) return std::nullopt;
  CycMat gc = p * d * *pfull_inv;
  RatMat g(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (!gc(i, j).is_rational()) return std::nullopt;
      g(i, j) = gc(i, j).to_rational();
    }
  // oracle checks: symplectic, swaps the spans, conjugates alpha to alpha^2
  if (!(g.transpose() * q * g == q)) return std::nullopt;
  if (!spans_equal(to_cyc(g) * f2basis, conj_entrywise(f2basis))) return std::nullopt;
  if (!(g * alpha == alpha * alpha * g)) return std::nullopt;
  return g;
}

}  // namespace cyhodge

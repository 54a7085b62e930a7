#include "cyhodge/isometry.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cyhodge {

LatticeIsometry LatticeIsometry::validate(Lattice lattice, IntMat matrix,
                                          long order_bound) {
  if (matrix.rows() != matrix.cols() || matrix.rows() != lattice.rank)
    throw std::invalid_argument("validate_isometry: matrix size mismatch");
  if (order_bound < 1)
    throw std::invalid_argument("validate_isometry: order bound must be >= 1");
  if (matrix.transpose() * lattice.gram * matrix != lattice.gram)
    throw NotIsometryError("matrix does not preserve the lattice form");
  auto ord = matrix_order(matrix, order_bound);
  if (!ord)
    throw InfiniteOrderError("no power up to the bound is the identity");
  return LatticeIsometry(std::move(lattice), std::move(matrix), *ord);
}

std::map<long, long> cyclotomic_multiplicities(const LatticeIsometry& iso) {
  RatPoly p = charpoly_rat(to_rat(iso.matrix()));
  std::map<long, long> mult;
  for (long d : divisors_of(iso.order())) {
    const RatPoly& phi = cyclotomic_poly(d);
    long a = 0;
    while (true) {
      auto [q, r] = p.divmod(phi);
      if (!r.is_zero()) break;
      p = q;
      ++a;
    }
    if (a > 0) mult[d] = a;
  }
  if (p.degree() != 0)
    throw std::logic_error(
        "cyclotomic_multiplicities: char poly not a product of Phi_d for d | order");
  return mult;
}

CycMat eigenspace_basis(const LatticeIsometry& iso, long d, long j) {
  if (d < 1 || iso.order() % d != 0)
    throw std::invalid_argument("eigenspace_basis: d must divide the order");
  if (std::gcd(((j % d) + d) % d == 0 ? d : ((j % d) + d) % d, d) != 1)
    throw std::invalid_argument("eigenspace_basis: j not coprime to d");
  CycNum zeta = CycNum::root_of_unity(d, j);
  CycMat m = to_cyc(iso.matrix());
  long n = m.rows();
  for (long i = 0; i < n; ++i) m(i, i) = m(i, i) - zeta;
  return kernel_basis(m);
}

CycMat eigenspace_hermitian_form(const LatticeIsometry& iso, long d, long j) {
  if (iso.lattice().alternating)
    throw std::invalid_argument(
        "eigenspace_hermitian_form: container form is alternating");
  CycMat b = eigenspace_basis(iso, d, j);
  CycMat g = to_cyc(iso.lattice().gram);
  return b.transpose() * g * conj_entrywise(b);
}

Signature hermitian_signature(const CycMat& h) { return signature_of(h); }

namespace {

// ---- order-3 block on U (+) U ------------------------------------------
//
// Exhaustive column search over small integer entries for M with
// M^T G M = G and M^2 + M + I = 0 (order 3, no fixed vectors).

Int uu_form(const IntMat& g, const std::vector<long>& x, const std::vector<long>& y) {
  Int s = 0;
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 4; ++j)
      if (x[i] != 0 && g(i, j) != 0) s += Int(x[i]) * g(i, j) * y[j];
  return s;
}

bool uu_search(const IntMat& g, long bound, std::vector<std::vector<long>>& cols) {
  long width = 2 * bound + 1;
  long total = 1;
  for (int i = 0; i < 4; ++i) total *= width;
  std::vector<std::vector<long>> cand;
  cand.reserve(total);
  for (long code = 0; code < total; ++code) {
    std::vector<long> v(4);
    long c = code;
    for (int i = 0; i < 4; ++i) {
      v[i] = c % width - bound;
      c /= width;
    }
    cand.push_back(std::move(v));
  }
  std::function<bool(long)> rec = [&](long j) -> bool {
    if (j == 4) {
      IntMat m(4, 4);
      for (long col = 0; col < 4; ++col)
        for (long row = 0; row < 4; ++row) m(row, col) = cols[col][row];
      IntMat sq = m * m;
      IntMat want = -(m + IntMat::identity(4));
      return sq == want;
    }
    for (const auto& v : cand) {
      bool ok = uu_form(g, v, v) == g(j, j);
      for (long i = 0; i < j && ok; ++i)
        ok = uu_form(g, cols[i], v) == g(i, j);
      if (!ok) continue;
      cols.push_back(v);
      if (rec(j + 1)) return true;
      cols.pop_back();
    }
    return false;
  };
  cols.clear();
  return rec(0);
}

IntMat derive_order3_double_u() {
  Lattice uu = direct_sum(make_standard(StandardLattice::U),
                          make_standard(StandardLattice::U));
  std::vector<std::vector<long>> cols;
  long bound = 1;
  while (!uu_search(uu.gram, bound, cols)) {
    if (++bound > 2) throw std::logic_error("order3_on_double_u: search failed");
  }
  IntMat m(4, 4);
  for (long col = 0; col < 4; ++col)
    for (long row = 0; row < 4; ++row) m(row, col) = cols[col][row];
  // oracle check: order 3, no fixed part
  LatticeIsometry iso = LatticeIsometry::validate(uu, m, 3);
  auto mult = cyclotomic_multiplicities(iso);
  if (iso.order() != 3 || mult != std::map<long, long>{{3, 2}})
    throw std::logic_error("order3_on_double_u: wrong invariants");
  return m;
}

// ---- order-3 blocks on E8 ----------------------------------------------
//
// Roots of E8 from reflection closure of the simple roots; four pairwise
// orthogonal A2 root pairs span a finite-index sublattice on which rotating
// each pair is an isometry, and the rotation extends integrally to E8.

std::vector<std::vector<long>> e8_roots(const IntMat& g) {
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> queue;
  for (long i = 0; i < 8; ++i) {
    std::vector<long> e(8, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  auto pairing = [&](const std::vector<long>& x, long i) {
    Int s = 0;
    for (long k = 0; k < 8; ++k)
      if (x[k] != 0) s += Int(x[k]) * g(k, i);
    return s.get_si();
  };
  for (size_t head = 0; head < queue.size(); ++head) {
    std::vector<long> x = queue[head];
    for (long i = 0; i < 8; ++i) {
      long c = pairing(x, i);
      if (c == 0) continue;
      std::vector<long> y = x;
      y[i] -= c;
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

long dot_g(const IntMat& g, const std::vector<long>& x, const std::vector<long>& y) {
  Int s = 0;
  for (long i = 0; i < 8; ++i)
    for (long j = 0; j < 8; ++j)
      if (x[i] != 0 && g(i, j) != 0) s += Int(x[i]) * g(i, j) * y[j];
  return s.get_si();
}

// Four pairwise orthogonal root pairs (a, b) with a.b = -1.
std::vector<std::vector<long>> find_orthogonal_a2_quadruple(const IntMat& g) {
  auto roots = e8_roots(g);
  std::vector<std::vector<long>> chosen;  // a1,b1,a2,b2,...
  std::function<bool(size_t)> rec = [&](size_t from) -> bool {
    if (chosen.size() == 8) return true;
    for (size_t ia = from; ia < roots.size(); ++ia) {
      const auto& a = roots[ia];
      bool ok = true;
      for (const auto& v : chosen)
        if (dot_g(g, a, v) != 0) { ok = false; break; }
      if (!ok) continue;
      for (size_t ib = ia + 1; ib < roots.size(); ++ib) {
        const auto& b = roots[ib];
        if (dot_g(g, a, b) != -1) continue;
        bool okb = true;
        for (const auto& v : chosen)
          if (dot_g(g, b, v) != 0) { okb = false; break; }
        if (!okb) continue;
        chosen.push_back(a);
        chosen.push_back(b);
        if (rec(ia + 1)) return true;
        chosen.pop_back();
        chosen.pop_back();
      }
    }
    return false;
  };
  if (!rec(0)) throw std::logic_error("E8: no orthogonal A2 quadruple found");
  return chosen;
}

IntMat derive_order3_e8(int rotated_pairs) {
  // search in the positive-definite convention; M^T G M = G is sign-blind
  IntMat g = -make_standard(StandardLattice::E8_minus).gram;
  auto vecs = find_orthogonal_a2_quadruple(g);
  IntMat v(8, 8);
  for (long col = 0; col < 8; ++col)
    for (long row = 0; row < 8; ++row) v(row, col) = vecs[col][row];
  RatMat r(8, 8);
  for (int p = 0; p < 4; ++p) {
    long o = 2 * p;
    if (p < rotated_pairs) {
      // a -> b, b -> -a-b
      r(o + 1, o + 0) = 1;
      r(o + 0, o + 1) = -1;
      r(o + 1, o + 1) = -1;
    } else {
      r(o + 0, o + 0) = 1;
      r(o + 1, o + 1) = 1;
    }
  }
  RatMat vr = to_rat(v);
  auto vinv = inverse_of(vr);
  if (!vinv) throw std::logic_error("E8: A2 quadruple not full rank");
  RatMat mq = vr * r * *vinv;
  IntMat m(8, 8);
  for (long i = 0; i < 8; ++i)
    for (long j = 0; j < 8; ++j) {
      if (mq(i, j).get_den() != 1)
        throw std::logic_error("E8: rotation does not extend integrally");
      m(i, j) = mq(i, j).get_num();
    }
  // oracle check against the negative-definite form used by the K3 lattice
  Lattice e8m = make_standard(StandardLattice::E8_minus);
  LatticeIsometry iso = LatticeIsometry::validate(e8m, m, 3);
  auto mult = cyclotomic_multiplicities(iso);
  std::map<long, long> want =
      rotated_pairs == 4 ? std::map<long, long>{{3, 4}}
                         : std::map<long, long>{{1, 8 - 2 * rotated_pairs},
                                                {3, rotated_pairs}};
  if (mult != want) throw std::logic_error("E8: wrong eigenvalue multiplicities");
  return m;
}

IntMat block_diag(const std::vector<const IntMat*>& blocks) {
  long n = 0;
  for (auto* b : blocks) n += b->rows();
  IntMat m(n, n);
  long off = 0;
  for (auto* b : blocks) {
    for (long i = 0; i < b->rows(); ++i)
      for (long j = 0; j < b->cols(); ++j) m(off + i, off + j) = (*b)(i, j);
    off += b->rows();
  }
  return m;
}

}  // namespace

const IntMat& order3_on_double_u() {
  static const IntMat m = derive_order3_double_u();
  return m;
}

const IntMat& order3_on_e8(int rotated_a2_count) {
  if (rotated_a2_count != 2 && rotated_a2_count != 4)
    throw std::invalid_argument("order3_on_e8: supported counts are 2 and 4");
  static const IntMat m2 = derive_order3_e8(2);
  static const IntMat m4 = derive_order3_e8(4);
  return rotated_a2_count == 2 ? m2 : m4;
}

const LatticeIsometry& catalog_order3(int r) {
  auto build = [](int rr) {
    Lattice k3 = make_standard(StandardLattice::K3);
    IntMat i2 = IntMat::identity(2);
    IntMat i8 = IntMat::identity(8);
    const IntMat& uu = order3_on_double_u();
    IntMat m;
    switch (rr) {
      case 1: m = block_diag({&uu, &i2, &i8, &i8}); break;
      case 3: m = block_diag({&uu, &i2, &order3_on_e8(2), &i8}); break;
      case 5: m = block_diag({&uu, &i2, &order3_on_e8(4), &i8}); break;
      default: throw std::invalid_argument("catalog_order3: r must be 1, 3 or 5");
    }
    LatticeIsometry iso = LatticeIsometry::validate(std::move(k3), std::move(m), 3);
    auto mult = cyclotomic_multiplicities(iso);
    if (iso.order() != 3 || mult.at(3) != rr + 1)
      throw std::logic_error("catalog_order3: fixture fails its invariants");
    return iso;
  };
  switch (r) {
    case 1: { static const LatticeIsometry iso = build(1); return iso; }
    case 3: { static const LatticeIsometry iso = build(3); return iso; }
    case 5: { static const LatticeIsometry iso = build(5); return iso; }
    default: throw std::invalid_argument("catalog_order3: r must be 1, 3 or 5");
  }
}

}  // namespace cyhodge

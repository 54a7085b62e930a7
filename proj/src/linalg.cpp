#include "cyhodge/linalg.hpp"

namespace cyhodge {

namespace {
constexpr long kIrrCyclotomicScan = 120;
}

IntMat integer_kernel(const IntMat& a) {
  long rows = a.rows(), cols = a.cols();
  IntMat h = a;
  IntMat u = IntMat::identity(cols);

  // Column-style Hermite reduction: unimodular column ops on h (mirrored on
  // u) until each row has at most one leading nonzero among the work columns.
  long col = 0;
  for (long row = 0; row < rows && col < cols; ++row) {
    // gcd-reduce columns col..cols-1 against row entries
    while (true) {
      long p = -1;
      for (long j = col; j < cols; ++j)
        if (h(row, j) != 0) { p = j; break; }
      if (p < 0) break;  // row is zero on work columns
      // find a second nonzero to reduce
      long q = -1;
      for (long j = p + 1; j < cols; ++j)
        if (h(row, j) != 0) { q = j; break; }
      if (q < 0) {
        // single nonzero: move it to position col and advance
        if (p != col)
          for (long i = 0; i < rows; ++i) std::swap(h(i, p), h(i, col));
        if (p != col)
          for (long i = 0; i < cols; ++i) std::swap(u(i, p), u(i, col));
        ++col;
        break;
      }
      // reduce column q by column p
      Int f = h(row, q) / h(row, p);  // truncated division is fine here
      if (f != 0) {
        for (long i = 0; i < rows; ++i) h(i, q) -= f * h(i, p);
        for (long i = 0; i < cols; ++i) u(i, q) -= f * u(i, p);
      }
      if (h(row, q) != 0) {
        for (long i = 0; i < rows; ++i) std::swap(h(i, p), h(i, q));
        for (long i = 0; i < cols; ++i) std::swap(u(i, p), u(i, q));
      }
    }
  }
  // Columns of u whose h-column vanished form a basis of the integer kernel.
  std::vector<long> zero_cols;
  for (long j = 0; j < cols; ++j) {
    bool zero = true;
    for (long i = 0; i < rows && zero; ++i)
      if (h(i, j) != 0) zero = false;
    if (zero) zero_cols.push_back(j);
  }
  return u.cols(zero_cols);
}

Int det_int(const IntMat& a) {
  Rat d = det_of(to_rat(a));
  if (d.get_den() != 1) throw std::logic_error("det_int: non-integer determinant");
  return d.get_num();
}

RatPoly charpoly_rat(const RatMat& a) {
  return RatPoly(charpoly(a));
}

RatPoly min_poly(const RatMat& a) {
  long n = a.rows();
  RatPoly m = RatPoly::constant(Rat(1));
  for (long s = 0; s < n; ++s) {
    // smallest dependency among e_s, A e_s, A^2 e_s, ...
    RatMat krylov(n, 1);
    krylov(s, 0) = 1;
    RatMat v = krylov;
    while (true) {
      v = a * v;
      RatMat cand = RatMat::hstack(krylov, v);
      if (rank_of(cand) == krylov.cols()) {
        auto x = solve_linear(krylov, v);
        if (!x) throw std::logic_error("min_poly: inconsistent dependency");
        std::vector<Rat> coeffs(krylov.cols() + 1, Rat(0));
        for (long i = 0; i < krylov.cols(); ++i) coeffs[i] = -(*x)(i, 0);
        coeffs[krylov.cols()] = 1;
        RatPoly local(std::move(coeffs));
        m = (m * local).exact_div(poly_gcd(m, local));  // lcm
        break;
      }
      krylov = cand;
    }
    if (m.degree() == n) break;
  }
  return m.monic();
}

namespace {
template <typename M>
std::optional<long> order_impl(const M& a, long bound) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix_order: not square");
  M id = M::identity(a.rows());
  M p = a;
  for (long m = 1; m <= bound; ++m) {
    if (p == id) return m;
    p = p * a;
  }
  return std::nullopt;
}
}  // namespace

std::optional<long> matrix_order(const RatMat& a, long bound) {
  return order_impl(a, bound);
}
std::optional<long> matrix_order(const IntMat& a, long bound) {
  return order_impl(a, bound);
}

IntMat random_unimodular(long n, std::mt19937_64& rng, int steps, long coeff_bound) {
  IntMat m = IntMat::identity(n);
  if (n <= 1) return m;
  std::uniform_int_distribution<long> pick(0, n - 1);
  std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<int> kind(0, 3);
  for (int s = 0; s < steps; ++s) {
    long i = pick(rng), j = pick(rng);
    switch (kind(rng)) {
      case 0: {  // row_i += c * row_j
        if (i == j) break;
        long c = coeff(rng);
        for (long k = 0; k < n; ++k) m(i, k) += c * m(j, k);
        break;
      }
      case 1: {  // swap rows
        if (i == j) break;
        for (long k = 0; k < n; ++k) std::swap(m(i, k), m(j, k));
        break;
      }
      case 2: {  // negate row
        for (long k = 0; k < n; ++k) m(i, k) = -m(i, k);
        break;
      }
      default: {  // col_i += c * col_j
        if (i == j) break;
        long c = coeff(rng);
        for (long k = 0; k < n; ++k) m(k, i) += c * m(k, j);
        break;
      }
    }
  }
  return m;
}

namespace {

// polynomial arithmetic over F_p for small p, dense, low degree first
using ModPoly = std::vector<long>;

void mp_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  mp_trim(c);
  return c;
}

long mp_inv_scalar(long x, long p) {
  long r = 1, b = x % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

ModPoly mp_mod(ModPoly a, const ModPoly& m, long p) {
  long inv = mp_inv_scalar(m.back(), p);
  while (a.size() >= m.size() && !a.empty()) {
    long f = a.back() * inv % p;
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i)
      a[shift + i] = ((a[shift + i] - f * m[i]) % p + p) % p;
    mp_trim(a);
  }
  return a;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, long p) {
  while (!b.empty()) {
    ModPoly r = mp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ModPoly mp_powmod_xq(const ModPoly& m, long p) {
  // x^p mod m by square-and-multiply on exponent p
  ModPoly base = {0, 1};
  base = mp_mod(base, m, p);
  ModPoly acc = {1};
  long e = p;
  while (e) {
    if (e & 1) acc = mp_mod(mp_mul(acc, base, p), m, p);
    base = mp_mod(mp_mul(base, base, p), m, p);
    e >>= 1;
  }
  return acc;
}

ModPoly mp_frobenius(const ModPoly& t, const ModPoly& xq, const ModPoly& m, long p) {
  // t(x) -> t(x^p) mod m, evaluated by Horner in x^p
  ModPoly acc;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    acc = mp_mod(mp_mul(acc, xq, p), m, p);
    if (acc.empty()) acc = {0};
    acc[0] = (acc[0] + *it) % p;
    mp_trim(acc);
  }
  return acc;
}

bool mp_derivative_coprime(const ModPoly& m, long p) {
  ModPoly d;
  for (size_t i = 1; i < m.size(); ++i) d.push_back(m[i] * static_cast<long>(i % p) % p);
  mp_trim(d);
  if (d.empty()) return false;
  return mp_gcd(m, d, p).size() == 1;
}

bool irreducible_mod_p(const ModPoly& m, long p) {
  long k = static_cast<long>(m.size()) - 1;
  if (k <= 0) return false;
  if (k == 1) return true;
  if (!mp_derivative_coprime(m, p)) return false;
  ModPoly xq = mp_powmod_xq(m, p);
  // t = x^{p^d} iterated; any nontrivial gcd with x^{p^d} - x below k/2 kills it
  ModPoly t = xq;
  for (long d = 1; d <= k / 2; ++d) {
    ModPoly diff = t;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    mp_trim(diff);
    if (mp_gcd(m, diff, p).size() != 1) return false;
    if (d < k / 2) t = mp_frobenius(t, xq, m, p);
  }
  return true;
}

}  // namespace

bool certified_irreducible(const RatPoly& p) {
  if (p.degree() <= 0) return false;
  if (p.degree() == 1) return true;
  // cyclotomic polynomials are irreducible; recognize them directly (some,
  // like Phi_8 = x^4 + 1, are reducible modulo every prime)
  {
    RatPoly monic = p.monic();
    for (long n = 1; n <= 2 * kIrrCyclotomicScan; ++n)
      if (euler_phi(n) == p.degree() && monic == cyclotomic_poly(n)) return true;
  }
  // primitive integer version
  Int den(1);
  for (const Rat& c : p.coeffs()) {
    Int d = c.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den = den / g * d;
  }
  std::vector<Int> zc;
  for (const Rat& c : p.coeffs()) {
    Rat scaled = c * Rat(den);
    zc.push_back(scaled.get_num());
  }
  static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (long q : primes) {
    if (mpz_divisible_ui_p(zc.back().get_mpz_t(), q)) continue;  // degree drops
    ModPoly m;
    for (const Int& c : zc) {
      Int r = c % q;
      long v = r.get_si();
      m.push_back(((v % q) + q) % q);
    }
    mp_trim(m);
    if (static_cast<long>(m.size()) - 1 != p.degree()) continue;
    if (irreducible_mod_p(m, q)) return true;
  }
  return false;
}

}  // namespace cyhodge

#include "cyhodge/cycnum.hpp"

#include <mpfr.h>

#include <cstdlib>

#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace cyhodge {

namespace {

// Reduction table for Q(zeta_n): row k (0 <= k < 2n) holds the power-basis
// coordinates of zeta_n^k mod Phi_n.  2n rows cover any product of two
// reduced elements.
const std::vector<std::vector<Rat>>& reduction_rows(long n) {
  static std::map<long, std::vector<std::vector<Rat>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const RatPoly& phi = cyclotomic_poly(n);
  long deg = phi.degree();
  std::vector<std::vector<Rat>> rows;
  rows.reserve(2 * n);
  std::vector<Rat> cur(deg, Rat(0));
  if (deg > 0) cur[0] = 1;  // zeta^0; deg = 0 impossible (phi(n) >= 1)
  for (long k = 0; k < 2 * n; ++k) {
    rows.push_back(cur);
    // multiply by zeta: shift, then fold the overflow via
    // zeta^deg = -(phi_0 + phi_1 zeta + ... + phi_{deg-1} zeta^{deg-1}).
    Rat top = cur[deg - 1];
    for (long i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (long i = 0; i < deg; ++i) cur[i] -= top * phi.coeff(i);
  }
  return cache.emplace(n, std::move(rows)).first->second;
}

std::vector<Rat> reduce_mod_phi(const std::vector<Rat>& raw, long n) {
  long deg = euler_phi(n);
  std::vector<Rat> out(deg, Rat(0));
  const auto& rows = reduction_rows(n);
  for (size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] == 0) continue;
    const auto& row = rows.at(k);
    for (long i = 0; i < deg; ++i) out[i] += raw[k] * row[i];
  }
  return out;
}

// Coordinates of zeta_n^{(n/d)*i}, i < phi(d): the power basis of the
// subfield Q(zeta_d) written inside Q(zeta_n).
std::vector<std::vector<Rat>> subfield_basis(long n, long d) {
  const auto& rows = reduction_rows(n);
  std::vector<std::vector<Rat>> cols;
  long step = n / d;
  for (long i = 0; i < euler_phi(d); ++i) cols.push_back(rows.at(i * step));
  return cols;
}

// Solve sum_i x_i * cols[i] = target (coordinates in Q(zeta_n)); the columns
// are linearly independent.  Returns empty vector when inconsistent.
std::vector<Rat> solve_in_subfield(const std::vector<std::vector<Rat>>& cols,
                                   const std::vector<Rat>& target) {
  long rows = static_cast<long>(target.size());
  long ncols = static_cast<long>(cols.size());
  // augmented [cols | target], Gaussian elimination
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(ncols + 1, Rat(0)));
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < ncols; ++j) a[i][j] = cols[j][i];
    a[i][ncols] = target[i];
  }
  long r = 0;
  std::vector<long> pivot_col(rows, -1);
  for (long j = 0; j < ncols && r < rows; ++j) {
    long p = -1;
    for (long i = r; i < rows; ++i)
      if (a[i][j] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    Rat inv = 1 / a[r][j];
    for (long k = j; k <= ncols; ++k) a[r][k] *= inv;
    for (long i = 0; i < rows; ++i) {
      if (i == r || a[i][j] == 0) continue;
      Rat f = a[i][j];
      for (long k = j; k <= ncols; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col[r] = j;
    ++r;
  }
  for (long i = r; i < rows; ++i)
    if (a[i][ncols] != 0) return {};
  std::vector<Rat> x(ncols, Rat(0));
  for (long i = 0; i < r; ++i) x[pivot_col[i]] = a[i][ncols];
  return x;
}

std::vector<Rat> apply_galois_raw(const std::vector<Rat>& c, long n, long j) {
  const auto& rows = reduction_rows(n);
  long deg = euler_phi(n);
  std::vector<Rat> out(deg, Rat(0));
  for (long i = 0; i < static_cast<long>(c.size()); ++i) {
    if (c[i] == 0) continue;
    const auto& row = rows.at((i * j) % n);
    for (long k = 0; k < deg; ++k) out[k] += c[i] * row[k];
  }
  return out;
}

}  // namespace

CycNum CycNum::from_coeffs(std::vector<Rat> coeffs, long n) {
  if (n < 1) throw std::invalid_argument("CycNum: conductor must be >= 1");
  if (static_cast<long>(coeffs.size()) > n)
    throw std::invalid_argument("CycNum: more coefficients than conductor");
  std::vector<Rat> c = reduce_mod_phi(coeffs, n);

  // Minimal-conductor descent: drop to Q(zeta_{n/p}) while every Galois
  // element fixing that subfield also fixes the value.
  bool reduced = true;
  while (reduced && n > 1) {
    reduced = false;
    for (long p : prime_factors(n)) {
      long d = n / p;
      bool fixed = true;
      for (long j = 1 + d; j < n && fixed; j += d)
        if (std::gcd(j, n) == 1 && apply_galois_raw(c, n, j) != c) fixed = false;
      if (!fixed) continue;
      auto x = solve_in_subfield(subfield_basis(n, d), c);
      if (x.empty()) throw std::logic_error("CycNum: subfield descent failed");
      c = std::move(x);
      n = d;
      reduced = true;
      break;
    }
  }
  return CycNum(n, std::move(c));
}

CycNum CycNum::root_of_unity(long n, long k, long conductor_bound) {
  if (n < 1) throw std::invalid_argument("root_of_unity: n must be >= 1");
  if (n > conductor_bound)
    throw ConductorBoundError("root_of_unity: conductor exceeds bound");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rat> raw(k + 1, Rat(0));
  raw[k] = 1;
  return from_coeffs(std::move(raw), n);
}

Rat CycNum::to_rational() const {
  if (!is_rational()) throw std::domain_error("CycNum: not rational");
  return c_[0];
}

bool CycNum::is_real() const { return conj() == *this; }

CycNum CycNum::operator+(const CycNum& o) const {
  long L = lcm_long(n_, o.n_);
  if (L > kDefaultConductorBound)
    throw ConductorBoundError("CycNum: common conductor exceeds bound");
  const auto& rows = reduction_rows(L);
  long deg = euler_phi(L);
  std::vector<Rat> acc(deg, Rat(0));
  long sa = L / n_, sb = L / o.n_;
  for (long i = 0; i < static_cast<long>(c_.size()); ++i)
    if (c_[i] != 0)
      for (long k = 0; k < deg; ++k) acc[k] += c_[i] * rows.at(i * sa)[k];
  for (long i = 0; i < static_cast<long>(o.c_.size()); ++i)
    if (o.c_[i] != 0)
      for (long k = 0; k < deg; ++k) acc[k] += o.c_[i] * rows.at(i * sb)[k];
  return from_coeffs(std::move(acc), L);
}

CycNum CycNum::operator-() const {
  std::vector<Rat> c(c_);
  for (auto& x : c) x = -x;
  return CycNum(n_, std::move(c));
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator*(const CycNum& o) const {
  long L = lcm_long(n_, o.n_);
  if (L > kDefaultConductorBound)
    throw ConductorBoundError("CycNum: common conductor exceeds bound");
  long sa = L / n_, sb = L / o.n_;
  // raw exponent convolution, then one reduction pass
  std::vector<Rat> raw((c_.size() - 1) * sa + (o.c_.size() - 1) * sb + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) raw[i * sa + j * sb] += c_[i] * o.c_[j];
  }
  // exponents can reach 2(L-1); reduce before canonicalizing
  return from_coeffs(reduce_mod_phi(raw, L), L);
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycNum: division by zero");
  if (is_rational()) return CycNum(Rat(1 / c_[0]));
  RatPoly a{std::vector<Rat>(c_)};
  auto x = poly_xgcd(a, cyclotomic_poly(n_));
  if (x.g.degree() != 0)
    throw std::logic_error("CycNum: inverse gcd not constant");
  std::vector<Rat> inv = x.u.coeffs();
  return from_coeffs(std::move(inv), n_);
}

CycNum CycNum::conj() const {
  if (n_ <= 2) return *this;
  return galois(n_ - 1);
}

CycNum CycNum::galois(long j) const {
  long jm = j % n_;
  if (jm < 0) jm += n_;
  if (n_ == 1) return *this;
  if (std::gcd(jm, n_) != 1)
    throw std::invalid_argument("galois: exponent not coprime to conductor");
  return from_coeffs(apply_galois_raw(c_, n_, jm), n_);
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum acc(1), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

namespace {

struct MpfrVal {
  mpfr_t x;
  explicit MpfrVal(long bits) { mpfr_init2(x, bits); }
  ~MpfrVal() { mpfr_clear(x); }
  MpfrVal(const MpfrVal&) = delete;
  MpfrVal& operator=(const MpfrVal&) = delete;
  Rat to_rat() const {
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, x);
    Rat out(q);
    mpq_clear(q);
    return out;
  }
};

Rat pow2_rat(long e) {  // 2^e for e possibly negative
  Rat r(1);
  mpq_class two(2);
  if (e >= 0) { mpz_ui_pow_ui(r.get_num_mpz_t(), 2, e); return r; }
  mpz_ui_pow_ui(r.get_den_mpz_t(), 2, -e);
  return r;
}

// Enclosure of cos/sin(2*pi*k/n).  Non-monotonicity over the tiny angle
// interval is absorbed by padding with the angle width (|cos'|,|sin'| <= 1)
// plus a couple of ulps so that enclosures nest across precision doubling.
void trig_enclosure(long n, long k, long bits, Rat& cos_lo, Rat& cos_hi,
                    Rat& sin_lo, Rat& sin_hi) {
  k %= n;
  if (k < 0) k += n;
  if (k == 0) {
    cos_lo = cos_hi = 1;
    sin_lo = sin_hi = 0;
    return;
  }
  MpfrVal pi_lo(bits), pi_hi(bits), th_lo(bits), th_hi(bits);
  mpfr_const_pi(pi_lo.x, MPFR_RNDD);
  mpfr_const_pi(pi_hi.x, MPFR_RNDU);
  Rat frac(2 * k, n);
  frac.canonicalize();
  mpfr_mul_q(th_lo.x, pi_lo.x, frac.get_mpq_t(), MPFR_RNDD);
  mpfr_mul_q(th_hi.x, pi_hi.x, frac.get_mpq_t(), MPFR_RNDU);

  MpfrVal v(bits);
  auto trig_at = [&](int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), mpfr_srcptr t,
                     mpfr_rnd_t rnd) {
    fn(v.x, t, rnd);
    return v.to_rat();
  };
  Rat width = [&] {
    MpfrVal w(bits);
    mpfr_sub(w.x, th_hi.x, th_lo.x, MPFR_RNDU);
    return w.to_rat();
  }();
  Rat pad = width + pow2_rat(2 - bits);

  Rat c1d = trig_at(mpfr_cos, th_lo.x, MPFR_RNDD);
  Rat c2d = trig_at(mpfr_cos, th_hi.x, MPFR_RNDD);
  Rat c1u = trig_at(mpfr_cos, th_lo.x, MPFR_RNDU);
  Rat c2u = trig_at(mpfr_cos, th_hi.x, MPFR_RNDU);
  cos_lo = std::min(c1d, c2d) - pad;
  cos_hi = std::max(c1u, c2u) + pad;

  Rat s1d = trig_at(mpfr_sin, th_lo.x, MPFR_RNDD);
  Rat s2d = trig_at(mpfr_sin, th_hi.x, MPFR_RNDD);
  Rat s1u = trig_at(mpfr_sin, th_lo.x, MPFR_RNDU);
  Rat s2u = trig_at(mpfr_sin, th_hi.x, MPFR_RNDU);
  sin_lo = std::min(s1d, s2d) - pad;
  sin_hi = std::max(s1u, s2u) + pad;
}

}  // namespace

SignedInterval CycNum::embed(long precision_bits) const {
  if (precision_bits < 8)
    throw std::invalid_argument("embed: precision must be >= 8 bits");
  SignedInterval out;
  out.precision_bits = precision_bits;
  out.real_lo = out.real_hi = 0;
  out.imag_lo = out.imag_hi = 0;
  for (long k = 0; k < static_cast<long>(c_.size()); ++k) {
    const Rat& q = c_[k];
    if (q == 0) continue;
    Rat cl, ch, sl, sh;
    trig_enclosure(n_, k, precision_bits, cl, ch, sl, sh);
    if (q > 0) {
      out.real_lo += q * cl;
      out.real_hi += q * ch;
      out.imag_lo += q * sl;
      out.imag_hi += q * sh;
    } else {
      out.real_lo += q * ch;
      out.real_hi += q * cl;
      out.imag_lo += q * sh;
      out.imag_hi += q * sl;
    }
  }
  return out;
}

long default_precision_bits() {
  static const long bits = [] {
    if (const char* env = std::getenv("CYHODGE_PREC_BITS")) {
      long v = std::atol(env);
      if (v >= 8 && v <= (1L << 20)) return v;
    }
    return 64L;
  }();
  return bits;
}

int CycNum::certified_sign(long start_bits) const {
  if (!is_real())
    throw std::domain_error("certified_sign: value is not real");
  if (is_zero()) return 0;
  if (is_rational()) return sign_of(c_[0]);
  if (start_bits <= 0) start_bits = default_precision_bits();
  for (long bits = std::max<long>(start_bits, 8);; bits *= 2) {
    SignedInterval iv = embed(bits);
    if (iv.real_lo > 0) return 1;
    if (iv.real_hi < 0) return -1;
    if (bits > (1L << 22))
      throw std::logic_error("certified_sign: refinement failed to separate");
  }
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  if (is_rational()) {
    os << c_[0].get_str();
    return os.str();
  }
  os << "(";
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    Rat mag = abs(c_[i]);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << "z" << n_;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& a) {
  return os << a.to_string();
}

}  // namespace cyhodge

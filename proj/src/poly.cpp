#include "cyhodge/poly.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace cyhodge {

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(const Rat& a) { return RatPoly(std::vector<Rat>{a}); }

RatPoly RatPoly::monomial(long degree, const Rat& a) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<Rat> c(degree + 1, Rat(0));
  c[degree] = a;
  return RatPoly(std::move(c));
}

RatPoly RatPoly::x_pow_minus_one(long n) {
  std::vector<Rat> c(n + 1, Rat(0));
  c[0] = -1;
  c[n] = 1;
  return RatPoly(std::move(c));
}

Rat RatPoly::leading() const {
  if (is_zero()) throw std::logic_error("leading coefficient of 0");
  return c_.back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
  std::vector<Rat> c(c_);
  for (auto& x : c) x = -x;
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const Rat& a) const {
  std::vector<Rat> c(c_);
  for (auto& x : c) x *= a;
  return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  RatPoly rem = *this;
  long dd = divisor.degree();
  if (rem.degree() < dd) return {RatPoly(), rem};
  std::vector<Rat> q(rem.degree() - dd + 1, Rat(0));
  Rat lead_inv = 1 / divisor.leading();
  while (!rem.is_zero() && rem.degree() >= dd) {
    long shift = rem.degree() - dd;
    Rat f = rem.leading() * lead_inv;
    q[shift] = f;
    for (long i = 0; i <= dd; ++i) rem.c_[shift + i] -= f * divisor.c_[i];
    rem.trim();
  }
  return {RatPoly(std::move(q)), rem};
}

RatPoly RatPoly::exact_div(const RatPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

RatPoly RatPoly::derivative() const {
  if (degree() <= 0) return RatPoly();
  std::vector<Rat> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return RatPoly(std::move(c));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / leading());
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Rat& a = c_[i];
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    Rat mag = abs(a);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

XgcdResult poly_xgcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly u0 = RatPoly::constant(Rat(1)), u1;
  RatPoly v0, v1 = RatPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    RatPoly u2 = u0 - q * u1;
    RatPoly v2 = v0 - q * v1;
    r0 = std::move(r1); r1 = std::move(r2);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  Rat inv = 1 / r0.leading();
  return {r0 * inv, u0 * inv, v0 * inv};
}

const RatPoly& cyclotomic_poly(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
  static std::map<long, RatPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, recursively from d = 1 up.
  std::function<const RatPoly&(long)> get = [&](long m) -> const RatPoly& {
    auto found = cache.find(m);
    if (found != cache.end()) return found->second;
    RatPoly p = RatPoly::x_pow_minus_one(m);
    for (long d : divisors_of(m)) {
      if (d == m) continue;
      p = p.exact_div(get(d));
    }
    return cache.emplace(m, std::move(p)).first->second;
  };
  return get(n);
}

}  // namespace cyhodge

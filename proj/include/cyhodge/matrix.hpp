#pragma once

#include <optional>
#include <vector>

#include "cyhodge/cycnum.hpp"
#include "cyhodge/rational.hpp"

namespace cyhodge {

template <typename T>
struct FieldOps;

template <>
struct FieldOps<Rat> {
  static bool is_zero(const Rat& x) { return x == 0; }
  static Rat inv(const Rat& x) {
    if (x == 0) throw std::domain_error("division by zero");
    return 1 / x;
  }
  static Rat conj(const Rat& x) { return x; }
};

template <>
struct FieldOps<CycNum> {
  static bool is_zero(const CycNum& x) { return x.is_zero(); }
  static CycNum inv(const CycNum& x) { return x.inverse(); }
  static CycNum conj(const CycNum& x) { return x.conj(); }
};

// Dense row-major matrix over an exact field (Rat or CycNum) or over Int for
// lattice data.  Value semantics throughout.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(long rows, long cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  static Matrix identity(long n) {
    Matrix m(n, n);
    for (long i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    long r = static_cast<long>(rows.size());
    long c = r == 0 ? 0 : static_cast<long>(rows[0].size());
    Matrix m(r, c);
    for (long i = 0; i < r; ++i) {
      if (static_cast<long>(rows[i].size()) != c)
        throw std::invalid_argument("Matrix: ragged rows");
      for (long j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  T& operator()(long i, long j) { return data_[i * cols_ + j]; }
  const T& operator()(long i, long j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix m = *this;
    for (size_t k = 0; k < data_.size(); ++k) m.data_[k] = m.data_[k] + o.data_[k];
    return m;
  }
  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix m = *this;
    for (size_t k = 0; k < data_.size(); ++k) m.data_[k] = m.data_[k] - o.data_[k];
    return m;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix m(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
      for (long k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (long j = 0; j < o.cols_; ++j) m(i, j) = m(i, j) + a * o(k, j);
      }
    return m;
  }
  Matrix operator*(const T& s) const {
    Matrix m = *this;
    for (auto& x : m.data_) x = x * s;
    return m;
  }
  Matrix operator-() const { return *this * T(-1); }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T(0))) return false;
    return true;
  }
  bool is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
  }

  Matrix col(long j) const { return cols({j}); }
  Matrix cols(const std::vector<long>& idx) const {
    Matrix m(rows_, static_cast<long>(idx.size()));
    for (long i = 0; i < rows_; ++i)
      for (size_t k = 0; k < idx.size(); ++k) m(i, static_cast<long>(k)) = (*this)(i, idx[k]);
    return m;
  }
  static Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
    Matrix m(a.rows_, a.cols_ + b.cols_);
    for (long i = 0; i < a.rows_; ++i) {
      for (long j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
      for (long j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
    }
    return m;
  }
  static Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (long i = 0; i < a.rows_; ++i)
      for (long j = 0; j < a.cols_; ++j)
        for (long k = 0; k < b.rows_; ++k)
          for (long l = 0; l < b.cols_; ++l)
            m(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
    return m;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix: shape mismatch");
  }
  long rows_, cols_;
  std::vector<T> data_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;
using CycMat = Matrix<CycNum>;

template <typename T>
Matrix<T> conj_entrywise(const Matrix<T>& a) {
  Matrix<T> m = a;
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) m(i, j) = FieldOps<T>::conj(m(i, j));
  return m;
}

template <typename T>
Matrix<T> conj_transpose(const Matrix<T>& a) {
  return conj_entrywise(a).transpose();
}

// Reduced row echelon form in place; returns pivot column indices.
template <typename T>
std::vector<long> rref_inplace(Matrix<T>& a) {
  std::vector<long> pivots;
  long r = 0;
  for (long j = 0; j < a.cols() && r < a.rows(); ++j) {
    long p = -1;
    for (long i = r; i < a.rows(); ++i)
      if (!FieldOps<T>::is_zero(a(i, j))) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (long k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(r, k));
    T inv = FieldOps<T>::inv(a(r, j));
    for (long k = j; k < a.cols(); ++k) a(r, k) = a(r, k) * inv;
    for (long i = 0; i < a.rows(); ++i) {
      if (i == r || FieldOps<T>::is_zero(a(i, j))) continue;
      T f = a(i, j);
      for (long k = j; k < a.cols(); ++k) a(i, k) = a(i, k) - f * a(r, k);
    }
    pivots.push_back(j);
    ++r;
  }
  return pivots;
}

template <typename T>
long rank_of(Matrix<T> a) {
  return static_cast<long>(rref_inplace(a).size());
}

// Columns span ker(a); empty matrix (n x 0) for trivial kernel.
template <typename T>
Matrix<T> kernel_basis(Matrix<T> a) {
  long n = a.cols();
  std::vector<long> pivots = rref_inplace(a);
  std::vector<bool> is_pivot(n, false);
  for (long p : pivots) is_pivot[p] = true;
  std::vector<long> free_cols;
  for (long j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix<T> k(n, static_cast<long>(free_cols.size()));
  for (size_t c = 0; c < free_cols.size(); ++c) {
    long f = free_cols[c];
    k(f, static_cast<long>(c)) = T(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      k(pivots[r], static_cast<long>(c)) = T(0) - a(static_cast<long>(r), f);
  }
  return k;
}

// Any exact solution of a * x = b (free variables set to 0), or nullopt when
// inconsistent.  b may have several columns.
template <typename T>
std::optional<Matrix<T>> solve_linear(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix<T> aug = Matrix<T>::hstack(a, b);
  std::vector<long> pivots = rref_inplace(aug);
  for (long p : pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix<T> x(a.cols(), b.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    for (long j = 0; j < b.cols(); ++j)
      x(pivots[r], j) = aug(static_cast<long>(r), a.cols() + j);
  return x;
}

template <typename T>
std::optional<Matrix<T>> inverse_of(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
  auto x = solve_linear(a, Matrix<T>::identity(a.rows()));
  if (!x || rank_of(a) != a.rows()) return std::nullopt;
  return x;
}

template <typename T>
T det_of(Matrix<T> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: not square");
  long n = a.rows();
  T d(1);
  for (long j = 0; j < n; ++j) {
    long p = -1;
    for (long i = j; i < n; ++i)
      if (!FieldOps<T>::is_zero(a(i, j))) { p = i; break; }
    if (p < 0) return T(0);
    if (p != j) {
      for (long k = 0; k < n; ++k) std::swap(a(p, k), a(j, k));
      d = T(0) - d;
    }
    d = d * a(j, j);
    T inv = FieldOps<T>::inv(a(j, j));
    for (long i = j + 1; i < n; ++i) {
      if (FieldOps<T>::is_zero(a(i, j))) continue;
      T f = a(i, j) * inv;
      for (long k = j; k < n; ++k) a(i, k) = a(i, k) - f * a(j, k);
    }
  }
  return d;
}

// Monic characteristic polynomial det(x*I - a), low degree first
// (Faddeev-LeVerrier; exact, division only by integers).
template <typename T>
std::vector<T> charpoly(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("charpoly: not square");
  long n = a.rows();
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  Matrix<T> m = Matrix<T>::identity(n);
  for (long k = 1; k <= n; ++k) {
    m = a * m;
    T tr(0);
    for (long i = 0; i < n; ++i) tr = tr + m(i, i);
    T ck = (T(0) - tr) * FieldOps<T>::inv(T(k));
    c[n - k] = ck;
    for (long i = 0; i < n; ++i) m(i, i) = m(i, i) + ck;
  }
  return c;
}

// span(a) == span(b) as column spans.
template <typename T>
bool spans_equal(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) return false;
  long ra = rank_of(a), rb = rank_of(b);
  return ra == rb && rank_of(Matrix<T>::hstack(a, b)) == ra;
}

template <typename T>
bool in_span(const Matrix<T>& a, const Matrix<T>& v) {
  return rank_of(Matrix<T>::hstack(a, v)) == rank_of(a);
}

template <typename T, typename U, typename Fn>
Matrix<U> map_matrix(const Matrix<T>& a, Fn fn) {
  Matrix<U> m(a.rows(), a.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) m(i, j) = fn(a(i, j));
  return m;
}

inline RatMat to_rat(const IntMat& a) {
  return map_matrix<Int, Rat>(a, [](const Int& z) { return Rat(z); });
}
inline CycMat to_cyc(const RatMat& a) {
  return map_matrix<Rat, CycNum>(a, [](const Rat& q) { return CycNum(q); });
}
inline CycMat to_cyc(const IntMat& a) { return to_cyc(to_rat(a)); }

}  // namespace cyhodge

#pragma once

// Dense exact matrices. MatZ (arbitrary-precision integers) carries the
// whole Coxeter/tau pipeline: the order matrix is unimodular triangular, so
// every inverse taken here is integral. MatQ backs the small rational solves.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "tamcox/arith.hpp"
#include "tamcox/errors.hpp"

namespace tamcox {

template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(long rows, long cols) : rows_(rows), cols_(cols), a_(check_size(rows, cols)) {}

  static Matrix identity(long n) {
    Matrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  T& at(long i, long j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const T& at(long i, long j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (long i = 0; i < rows_; ++i) {
      for (long j = 0; j < cols_; ++j) {
        if (at(i, j) != (i == j ? 1 : 0)) return false;
      }
    }
    return true;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (long i = 0; i < rows_; ++i) {
      for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    }
    return r;
  }

  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("Matrix: dimension mismatch in product");
    Matrix r(a.rows_, b.cols_);
    // i-k-j order keeps the inner loop running over contiguous rows of b.
    for (long i = 0; i < a.rows_; ++i) {
      for (long k = 0; k < a.cols_; ++k) {
        const T& aik = a.at(i, k);
        if (aik == 0) continue;
        for (long j = 0; j < b.cols_; ++j) {
          accumulate(r.at(i, j), aik, b.at(k, j));
        }
      }
    }
    return r;
  }

  T trace() const {
    if (rows_ != cols_) throw Error("Matrix: trace of non-square matrix");
    T s = 0;
    for (long i = 0; i < rows_; ++i) s += at(i, i);
    return s;
  }

  Matrix pow(unsigned long e) const {
    if (rows_ != cols_) throw Error("Matrix: power of non-square matrix");
    Matrix acc = identity(rows_);
    Matrix base = *this;
    while (e > 0) {
      if (e & 1UL) acc = acc * base;
      e >>= 1UL;
      if (e > 0) base = base * base;
    }
    return acc;
  }

 private:
  static std::vector<T> check_size(long rows, long cols) {
    if (rows < 0 || cols < 0) throw Error("Matrix: negative dimension");
    return std::vector<T>(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), T(0));
  }

  // r += a*b, with the fused GMP primitive when T is mpz_class.
  static void accumulate(T& r, const T& a, const T& b) {
    if constexpr (std::is_same_v<T, mpz_class>) {
      mpz_addmul(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    } else {
      r += a * b;
    }
  }

  long rows_, cols_;
  std::vector<T> a_;
};

using MatZ = Matrix<Int>;
using MatQ = Matrix<Rat>;

// Inverse of a unit lower triangular integer matrix by forward substitution;
// the result is integral.
inline MatZ inverse_unit_lower_triangular(const MatZ& m) {
  const long n = m.rows();
  if (n != m.cols()) throw Error("inverse_unit_lower_triangular: non-square");
  for (long i = 0; i < n; ++i) {
    if (m.at(i, i) != 1) throw Error("inverse_unit_lower_triangular: diagonal not 1");
    for (long j = i + 1; j < n; ++j) {
      if (m.at(i, j) != 0) throw Error("inverse_unit_lower_triangular: not lower triangular");
    }
  }
  MatZ inv = MatZ::identity(n);
  // Solve m * inv = I column by column; row i of inv depends on rows < i.
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j <= i; ++j) {
      Int s = (i == j) ? Int(1) : Int(0);
      for (long k = j; k < i; ++k) {
        mpz_submul(s.get_mpz_t(), m.at(i, k).get_mpz_t(), inv.at(k, j).get_mpz_t());
      }
      inv.at(i, j) = s;
    }
  }
  return inv;
}

// Least k in [1, bound] with m^k = I, if any.
inline std::optional<long> matrix_order(const MatZ& m, long bound) {
  if (m.rows() != m.cols()) throw Error("matrix_order: non-square");
  MatZ p = m;
  for (long k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    if (k < bound) p = p * m;
  }
  return std::nullopt;
}

// Solves A x = rhs exactly by Gaussian elimination with exact pivoting.
// Throws if A is singular.
inline std::vector<Rat> solve_linear(MatQ a, std::vector<Rat> rhs) {
  const long n = a.rows();
  if (a.cols() != n || static_cast<long>(rhs.size()) != n)
    throw Error("solve_linear: dimension mismatch");
  for (long col = 0; col < n; ++col) {
    long pivot = -1;
    for (long r = col; r < n; ++r) {
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw Error("solve_linear: singular system");
    if (pivot != col) {
      for (long j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      std::swap(rhs[static_cast<std::size_t>(pivot)], rhs[static_cast<std::size_t>(col)]);
    }
    const Rat p = a.at(col, col);
    for (long r = 0; r < n; ++r) {
      if (r == col || a.at(r, col) == 0) continue;
      const Rat f = a.at(r, col) / p;
      for (long j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
      rhs[static_cast<std::size_t>(r)] -= f * rhs[static_cast<std::size_t>(col)];
    }
  }
  std::vector<Rat> x(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = rhs[static_cast<std::size_t>(i)] / a.at(i, i);
  return x;
}

}  // namespace tamcox

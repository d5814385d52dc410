#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "dcmv/numeric.hpp"

namespace dcmv {

// Dense matrix, row-major.  Exact entries only (Int or Rat).
template <class T>
struct Mat {
  long rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Mat(std::initializer_list<std::initializer_list<T>> init) {
    rows = static_cast<long>(init.size());
    cols = rows ? static_cast<long>(init.begin()->size()) : 0;
    a.reserve(static_cast<size_t>(rows) * cols);
    for (const auto& row : init) {
      assert(static_cast<long>(row.size()) == cols);
      for (const auto& x : row) a.push_back(x);
    }
  }

  T& operator()(long i, long j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& operator()(long i, long j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  static Mat identity(long n) {
    Mat m(n, n);
    for (long i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Mat zero(long r, long c) { return Mat(r, c); }

  bool is_zero() const {
    for (const auto& x : a)
      if (x != 0) return false;
    return true;
  }

  std::vector<T> col(long j) const {
    std::vector<T> v(rows);
    for (long i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
  }

  std::vector<T> row(long i) const {
    std::vector<T> v(cols);
    for (long j = 0; j < cols; ++j) v[j] = (*this)(i, j);
    return v;
  }

  void set_col(long j, const std::vector<T>& v) {
    assert(static_cast<long>(v.size()) == rows);
    for (long i = 0; i < rows; ++i) (*this)(i, j) = v[i];
  }

  void swap_rows(long i, long j) {
    for (long c = 0; c < cols; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(long i, long j) {
    for (long r = 0; r < rows; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  // row i += f * row j
  void add_row(long i, long j, const T& f) {
    for (long c = 0; c < cols; ++c) (*this)(i, c) += f * (*this)(j, c);
  }
  // col i += f * col j
  void add_col(long i, long j, const T& f) {
    for (long r = 0; r < rows; ++r) (*this)(r, i) += f * (*this)(r, j);
  }
  void negate_row(long i) {
    for (long c = 0; c < cols; ++c) (*this)(i, c) = -(*this)(i, c);
  }
  void negate_col(long j) {
    for (long r = 0; r < rows; ++r) (*this)(r, j) = -(*this)(r, j);
  }
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

template <class T>
Mat<T> transpose(const Mat<T>& m) {
  Mat<T> t(m.cols, m.rows);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  return t;
}

template <class T>
Mat<T> mul(const Mat<T>& x, const Mat<T>& y) {
  assert(x.cols == y.rows);
  Mat<T> z(x.rows, y.cols);
  for (long i = 0; i < x.rows; ++i)
    for (long k = 0; k < x.cols; ++k) {
      const T& f = x(i, k);
      if (f == 0) continue;
      for (long j = 0; j < y.cols; ++j) z(i, j) += f * y(k, j);
    }
  return z;
}

template <class T>
std::vector<T> mul(const Mat<T>& m, const std::vector<T>& v) {
  assert(m.cols == static_cast<long>(v.size()));
  std::vector<T> w(m.rows, T(0));
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j)
      if (m(i, j) != 0) w[i] += m(i, j) * v[j];
  return w;
}

template <class T>
Mat<T> add(const Mat<T>& x, const Mat<T>& y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Mat<T> z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

template <class T>
Mat<T> sub(const Mat<T>& x, const Mat<T>& y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Mat<T> z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

template <class T>
Mat<T> neg(const Mat<T>& x) {
  Mat<T> z = x;
  for (auto& e : z.a) e = -e;
  return z;
}

template <class T>
Mat<T> scale(const Mat<T>& x, const T& f) {
  Mat<T> z = x;
  for (auto& e : z.a) e *= f;
  return z;
}

// [x | y]
template <class T>
Mat<T> hstack(const Mat<T>& x, const Mat<T>& y) {
  assert(x.rows == y.rows || x.cols == 0 || y.cols == 0);
  long rows = x.cols ? x.rows : y.rows;
  Mat<T> z(rows, x.cols + y.cols);
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < x.cols; ++j) z(i, j) = x(i, j);
    for (long j = 0; j < y.cols; ++j) z(i, x.cols + j) = y(i, j);
  }
  return z;
}

// [x ; y]
template <class T>
Mat<T> vstack(const Mat<T>& x, const Mat<T>& y) {
  assert(x.cols == y.cols || x.rows == 0 || y.rows == 0);
  long cols = x.rows ? x.cols : y.cols;
  Mat<T> z(x.rows + y.rows, cols);
  for (long i = 0; i < x.rows; ++i)
    for (long j = 0; j < cols; ++j) z(i, j) = x(i, j);
  for (long i = 0; i < y.rows; ++i)
    for (long j = 0; j < cols; ++j) z(x.rows + i, j) = y(i, j);
  return z;
}

template <class T>
Mat<T> submatrix_cols(const Mat<T>& m, const std::vector<long>& keep) {
  Mat<T> z(m.rows, static_cast<long>(keep.size()));
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < z.cols; ++j) z(i, j) = m(i, keep[j]);
  return z;
}

template <class T>
Mat<T> submatrix_rows(const Mat<T>& m, const std::vector<long>& keep) {
  Mat<T> z(static_cast<long>(keep.size()), m.cols);
  for (long i = 0; i < z.rows; ++i)
    for (long j = 0; j < m.cols; ++j) z(i, j) = m(keep[i], j);
  return z;
}

template <class T>
Mat<T> from_col(const std::vector<T>& v) {
  Mat<T> m(static_cast<long>(v.size()), 1);
  for (long i = 0; i < m.rows; ++i) m(i, 0) = v[i];
  return m;
}

inline RatMat to_rat(const IntMat& m) {
  RatMat q(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rat(m.a[i]);
  return q;
}

inline std::vector<Rat> to_rat(const std::vector<Int>& v) {
  std::vector<Rat> q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
  return q;
}

// valid only when every entry is integral
inline IntMat to_int(const RatMat& m) {
  IntMat z(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) {
    assert(is_integer(m.a[i]));
    z.a[i] = num(m.a[i]);
  }
  return z;
}

template <class T>
std::vector<T> vec_add(std::vector<T> x, const std::vector<T>& y) {
  assert(x.size() == y.size());
  for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}

template <class T>
std::vector<T> vec_sub(std::vector<T> x, const std::vector<T>& y) {
  assert(x.size() == y.size());
  for (size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
  return x;
}

template <class T>
std::vector<T> vec_neg(std::vector<T> x) {
  for (auto& e : x) e = -e;
  return x;
}

template <class T, class S>
std::vector<T> vec_scale(std::vector<T> x, const S& f) {
  for (auto& e : x) e *= f;
  return x;
}

template <class T>
bool vec_is_zero(const std::vector<T>& x) {
  for (const auto& e : x)
    if (e != 0) return false;
  return true;
}

template <class T>
std::vector<T> vec_concat(std::vector<T> x, const std::vector<T>& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

}  // namespace dcmv

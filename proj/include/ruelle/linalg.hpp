#pragma once

// Small exact linear algebra over Rational: dense matrices, sparse matrices
// for the defining representations, RREF kernels and definiteness tests.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "ruelle/errors.hpp"
#include "ruelle/exactnum.hpp"

namespace ruelle::linalg {

using Vec = std::vector<Rational>;

inline bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

inline Vec axpy(const Rational& a, const Vec& x, Vec y) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
  return y;
}

inline Vec scaled(const Rational& a, Vec x) {
  for (auto& v : x) v *= a;
  return x;
}

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] Vec column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_column(std::size_t c, const Vec& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
    RatMatrix out(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const Rational& a = x(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < y.cols_; ++j)
          if (!y(k, j).is_zero()) out(i, j) += a * y(k, j);
      }
    return out;
  }
  friend Vec operator*(const RatMatrix& x, const Vec& v) {
    Vec out(x.rows_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k)
        if (!x(i, k).is_zero() && !v[k].is_zero()) out[i] += x(i, k) * v[k];
    return out;
  }
  friend RatMatrix operator-(const RatMatrix& x, const RatMatrix& y) {
    RatMatrix out = x;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= y.data_[i];
    return out;
  }
  friend RatMatrix operator+(const RatMatrix& x, const RatMatrix& y) {
    RatMatrix out = x;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += y.data_[i];
    return out;
  }
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  [[nodiscard]] RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline RatMatrix scaled_identity(std::size_t n, const Rational& a) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = a;
  return m;
}

inline RatMatrix operator*(const Rational& a, RatMatrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= a;
  return m;
}

/// Vertical concatenation.
inline RatMatrix stack(const RatMatrix& top, const RatMatrix& bottom) {
  RatMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < bottom.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
  return out;
}

/// Basis of {x : A x = 0}, one vector per free column of the RREF.
inline std::vector<Vec> nullspace(RatMatrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && a(p, col).is_zero()) ++p;
    if (p == m) continue;
    if (p != row)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(row, j));
    Rational inv = a(row, col).reciprocal();
    for (std::size_t j = col; j < n; ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      Rational f = a(i, col);
      for (std::size_t j = col; j < n; ++j)
        if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n);
    v[free] = Rational(1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::size_t rank(const RatMatrix& a) { return a.cols() - nullspace(a).size(); }

/// Exact inverse by Gauss-Jordan; throws DivisionByZero if singular.
inline RatMatrix inverse(RatMatrix a) {
  const std::size_t n = a.rows();
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) throw DivisionByZero("singular matrix");
    if (p != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(col, j));
        std::swap(inv(p, j), inv(col, j));
      }
    Rational f = a(col, col).reciprocal();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= f;
      inv(col, j) *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      Rational g = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(i, j) -= g * a(col, j);
        if (!inv(col, j).is_zero()) inv(i, j) -= g * inv(col, j);
      }
    }
  }
  return inv;
}

/// Sylvester's criterion through elimination without pivoting: a symmetric
/// matrix is positive definite iff every pivot is positive.
inline bool is_positive_definite(RatMatrix a) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).sign() <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j)
        if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

/// Gram matrix G_ab = v_a^T B v_b.
inline RatMatrix restrict_form(const RatMatrix& form, const std::vector<Vec>& vs) {
  RatMatrix g(vs.size(), vs.size());
  std::vector<Vec> bv;
  bv.reserve(vs.size());
  for (const auto& v : vs) bv.push_back(form * v);
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = 0; b < vs.size(); ++b) {
      Rational s;
      for (std::size_t i = 0; i < vs[a].size(); ++i)
        if (!vs[a][i].is_zero() && !bv[b][i].is_zero()) s += vs[a][i] * bv[b][i];
      g(a, b) = s;
    }
  return g;
}

inline Rational bilinear(const RatMatrix& form, const Vec& x, const Vec& y) {
  Vec fy = form * y;
  Rational s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !fy[i].is_zero()) s += x[i] * fy[i];
  return s;
}

/// Sparse square matrix with exact entries; used for the defining
/// representations where most entries vanish.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  explicit SparseMatrix(int n) : n_(n) {}

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

  void add(int r, int c, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace({r, c}, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }
  [[nodiscard]] Rational at(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
  }
  [[nodiscard]] bool is_zero() const { return entries_.empty(); }

  friend SparseMatrix operator*(const SparseMatrix& x, const SparseMatrix& y) {
    SparseMatrix out(x.n_);
    for (const auto& [rc, v] : x.entries_) {
      auto it = y.entries_.lower_bound({rc.second, -1});
      for (; it != y.entries_.end() && it->first.first == rc.second; ++it)
        out.add(rc.first, it->first.second, v * it->second);
    }
    return out;
  }
  friend SparseMatrix operator+(const SparseMatrix& x, const SparseMatrix& y) {
    SparseMatrix out = x;
    for (const auto& [rc, v] : y.entries_) out.add(rc.first, rc.second, v);
    return out;
  }
  friend SparseMatrix operator-(const SparseMatrix& x, const SparseMatrix& y) {
    SparseMatrix out = x;
    for (const auto& [rc, v] : y.entries_) out.add(rc.first, rc.second, -v);
    return out;
  }
  friend SparseMatrix operator*(const Rational& a, const SparseMatrix& x) {
    SparseMatrix out(x.n_);
    if (a.is_zero()) return out;
    for (const auto& [rc, v] : x.entries_) out.add(rc.first, rc.second, a * v);
    return out;
  }
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

  [[nodiscard]] SparseMatrix transpose() const {
    SparseMatrix out(n_);
    for (const auto& [rc, v] : entries_) out.add(rc.second, rc.first, v);
    return out;
  }

  static SparseMatrix unit(int n, int r, int c) {
    SparseMatrix m(n);
    m.add(r, c, Rational(1));
    return m;
  }
  static SparseMatrix identity(int n) {
    SparseMatrix m(n);
    for (int i = 0; i < n; ++i) m.add(i, i, Rational(1));
    return m;
  }

 private:
  int n_ = 0;
  std::map<std::pair<int, int>, Rational> entries_;
};

inline SparseMatrix commutator(const SparseMatrix& x, const SparseMatrix& y) { return x * y - y * x; }

}  // namespace ruelle::linalg

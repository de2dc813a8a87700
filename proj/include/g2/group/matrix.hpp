#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "g2/error.hpp"
#include "g2/scalars/ring.hpp"

namespace g2 {

/// Dense row-major matrix over an exact ring.
template <RingElement T>
class Matrix {
 public:
  using ring_type = ring_of_t<T>;

  Matrix(const ring_type& ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, ring.zero()) {}

  static Matrix identity(const ring_type& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
  }
  static Matrix from_rows(const ring_type& ring, const std::vector<std::vector<T>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(ring, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DomainError("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  /// Integer entries mapped into `ring`.
  static Matrix from_ints(const ring_type& ring, const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<T>> converted;
    for (const auto& row : rows) {
      std::vector<T> r;
      for (long x : row) r.push_back(ring.from_integer(Integer(x)));
      converted.push_back(std::move(r));
    }
    return from_rows(ring, converted);
  }

  const ring_type& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    Matrix out(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix shapes do not compose");
    Matrix out(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = out(i, j) + aik * b(k, j);
      }
    }
    return out;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shapes differ");
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = out.data_[k] + b.data_[k];
    return out;
  }

  std::vector<T> apply(const std::vector<T>& x) const {
    if (x.size() != cols_) throw DomainError("vector length does not match matrix");
    std::vector<T> out(rows_, ring_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!(*this)(i, j).is_zero()) out[i] = out[i] + (*this)(i, j) * x[j];
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_identity() const { return *this == identity(ring_, rows_); }

  /// Gaussian elimination over a field, cofactor expansion otherwise.
  T determinant() const {
    if (!is_square()) throw DomainError("determinant of a non-square matrix");
    if constexpr (is_field_v<T>) {
      Matrix m = *this;
      T det = ring_.one();
      for (std::size_t c = 0; c < rows_; ++c) {
        std::size_t p = c;
        while (p < rows_ && m(p, c).is_zero()) ++p;
        if (p == rows_) return ring_.zero();
        if (p != c) {
          m.swap_rows(p, c);
          det = -det;
        }
        det = det * m(c, c);
        T inv = m(c, c).inverse();
        for (std::size_t r = c + 1; r < rows_; ++r) {
          if (m(r, c).is_zero()) continue;
          T f = m(r, c) * inv;
          for (std::size_t k = c; k < rows_; ++k) m(r, k) = m(r, k) - f * m(c, k);
        }
      }
      return det;
    } else {
      return cofactor_det(*this);
    }
  }

  /// Adjugate, so that A * adj(A) = det(A) I over any commutative ring.
  Matrix adjugate() const {
    if (!is_square()) throw DomainError("adjugate of a non-square matrix");
    Matrix out(ring_, rows_, rows_);
    if (rows_ == 1) {
      out(0, 0) = ring_.one();
      return out;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < rows_; ++j) {
        T minor = minor_matrix(i, j).determinant();
        out(j, i) = (i + j) % 2 == 0 ? minor : -minor;
      }
    }
    return out;
  }

  /// Gauss-Jordan with the first unit pivot in each column; throws
  /// DomainError if no unit pivot exists (singular over a field).
  Matrix inverse() const {
    if (!is_square()) throw DomainError("inverse of a non-square matrix");
    std::size_t n = rows_;
    Matrix m = *this;
    Matrix inv = identity(ring_, n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && !is_unit(m(p, c))) ++p;
      if (p == n) throw DomainError("matrix is not invertible");
      m.swap_rows(p, c);
      inv.swap_rows(p, c);
      T s = m(c, c).inverse();
      for (std::size_t k = 0; k < n; ++k) {
        m(c, k) = m(c, k) * s;
        inv(c, k) = inv(c, k) * s;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || m(r, c).is_zero()) continue;
        T f = m(r, c);
        for (std::size_t k = 0; k < n; ++k) {
          m(r, k) = m(r, k) - f * m(c, k);
          inv(r, k) = inv(r, k) - f * inv(c, k);
        }
      }
    }
    return inv;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
      out += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j > 0) out += " ";
        out += (*this)(i, j).to_string();
      }
      out += "]\n";
    }
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(data_[a * cols_ + k], data_[b * cols_ + k]);
  }

 private:
  Matrix minor_matrix(std::size_t skip_row, std::size_t skip_col) const {
    Matrix out(ring_, rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
      if (i == skip_row) continue;
      for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
        if (j == skip_col) continue;
        out(oi, oj++) = (*this)(i, j);
      }
      ++oi;
    }
    return out;
  }
  static T cofactor_det(const Matrix& m) {
    if (m.rows_ == 0) return m.ring_.one();
    if (m.rows_ == 1) return m(0, 0);
    T det = m.ring_.zero();
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (m(0, j).is_zero()) continue;
      T term = m(0, j) * cofactor_det(m.minor_matrix(0, j));
      det = j % 2 == 0 ? det + term : det - term;
    }
    return det;
  }

  ring_type ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

/// Row-reduced echelon form over a field; returns the pivot columns.
template <RingElement T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  static_assert(is_field_v<T>, "rref needs a field");
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    T s = m(r, c).inverse();
    for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) = m(r, k) * s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      T f = m(i, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = m(i, k) - f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <RingElement T>
std::size_t matrix_rank(Matrix<T> m) {
  return rref(m).size();
}

}  // namespace g2

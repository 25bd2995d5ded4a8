#pragma once

#include "gjet/core/gq.hpp"

#include <stdexcept>
#include <vector>

namespace gjet::ym {

// Dense matrix over an exact scalar ring (GQ or Q3). Small sizes only.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = s * a.data_[k];
    return r;
  }
  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const {
    for (const T& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

  T trace() const {
    T t{};
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix adjoint() const {  // conjugate transpose
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
    return r;
  }

  // Row echelon rank; T must provide inv() for nonzero entries.
  int rank() const {
    Matrix a = *this;
    int rk = 0;
    for (int col = 0; col < cols_ && rk < rows_; ++col) {
      int pivot = -1;
      for (int r = rk; r < rows_; ++r)
        if (!a(r, col).is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      for (int j = 0; j < cols_; ++j) std::swap(a(rk, j), a(pivot, j));
      T piv_inv = a(rk, col).inv();
      for (int j = 0; j < cols_; ++j) a(rk, j) = piv_inv * a(rk, j);
      for (int r = 0; r < rows_; ++r) {
        if (r == rk || a(r, col).is_zero()) continue;
        T f = a(r, col);
        for (int j = 0; j < cols_; ++j) a(r, j) = a(r, j) - f * a(rk, j);
      }
      ++rk;
    }
    return rk;
  }

  // Basis of the right null space (columns), via reduced row echelon form.
  std::vector<std::vector<T>> kernel() const {
    Matrix a = *this;
    std::vector<int> pivot_col;
    int rk = 0;
    for (int col = 0; col < cols_ && rk < rows_; ++col) {
      int pivot = -1;
      for (int r = rk; r < rows_; ++r)
        if (!a(r, col).is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      for (int j = 0; j < cols_; ++j) std::swap(a(rk, j), a(pivot, j));
      T piv_inv = a(rk, col).inv();
      for (int j = 0; j < cols_; ++j) a(rk, j) = piv_inv * a(rk, j);
      for (int r = 0; r < rows_; ++r) {
        if (r == rk || a(r, col).is_zero()) continue;
        T f = a(r, col);
        for (int j = 0; j < cols_; ++j) a(r, j) = a(r, j) - f * a(rk, j);
      }
      pivot_col.push_back(col);
      ++rk;
    }
    std::vector<std::vector<T>> basis;
    for (int col = 0; col < cols_; ++col) {
      bool is_pivot = false;
      for (int pc : pivot_col) is_pivot |= (pc == col);
      if (is_pivot) continue;
      std::vector<T> v(static_cast<std::size_t>(cols_));
      v[static_cast<std::size_t>(col)] = T(1);
      for (int r = 0; r < rk; ++r)
        v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = -a(r, col);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using MatGQ = Matrix<GQ>;

}  // namespace gjet::ym

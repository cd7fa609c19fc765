#pragma once

// Dense exact-rational linear algebra on the small matrices this project
// needs (dimensions <= ~10): rank, determinant, product, kernel. Gaussian
// elimination over Q is exact, no pivot tolerance anywhere.

#include <stdexcept>
#include <vector>

#include "pvlab/rational.hpp"

namespace pvlab {

class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return RatMatrix();
    RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Rat> row(std::size_t i) const {
    return std::vector<Rat>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  RatMatrix operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RatMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
      }
    return out;
  }

  RatMatrix transposed() const {
    RatMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  std::size_t rank() const {
    RatMatrix w(*this);
    std::size_t r = 0;
    for (std::size_t col = 0; col < w.cols_ && r < w.rows_; ++col) {
      std::size_t pivot = r;
      while (pivot < w.rows_ && w.at(pivot, col) == 0) ++pivot;
      if (pivot == w.rows_) continue;
      w.swap_rows(r, pivot);
      Rat inv = Rat(1) / w.at(r, col);
      for (std::size_t j = col; j < w.cols_; ++j) w.at(r, j) *= inv;
      for (std::size_t i = 0; i < w.rows_; ++i) {
        if (i == r || w.at(i, col) == 0) continue;
        Rat f = w.at(i, col);
        for (std::size_t j = col; j < w.cols_; ++j) w.at(i, j) -= f * w.at(r, j);
      }
      ++r;
    }
    return r;
  }

  Rat determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    RatMatrix w(*this);
    Rat det(1);
    for (std::size_t col = 0; col < w.cols_; ++col) {
      std::size_t pivot = col;
      while (pivot < w.rows_ && w.at(pivot, col) == 0) ++pivot;
      if (pivot == w.rows_) return Rat(0);
      if (pivot != col) {
        w.swap_rows(col, pivot);
        det = -det;
      }
      det *= w.at(col, col);
      Rat inv = Rat(1) / w.at(col, col);
      for (std::size_t i = col + 1; i < w.rows_; ++i) {
        if (w.at(i, col) == 0) continue;
        Rat f = w.at(i, col) * inv;
        for (std::size_t j = col; j < w.cols_; ++j) w.at(i, j) -= f * w.at(col, j);
      }
    }
    return det;
  }

  // Basis of { x : A x = 0 }, one vector per free column of the RREF.
  std::vector<std::vector<Rat>> kernel_basis() const {
    RatMatrix w(*this);
    std::vector<long> pivot_of_col(cols_, -1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < w.cols_ && r < w.rows_; ++col) {
      std::size_t pivot = r;
      while (pivot < w.rows_ && w.at(pivot, col) == 0) ++pivot;
      if (pivot == w.rows_) continue;
      w.swap_rows(r, pivot);
      Rat inv = Rat(1) / w.at(r, col);
      for (std::size_t j = col; j < w.cols_; ++j) w.at(r, j) *= inv;
      for (std::size_t i = 0; i < w.rows_; ++i) {
        if (i == r || w.at(i, col) == 0) continue;
        Rat f = w.at(i, col);
        for (std::size_t j = col; j < w.cols_; ++j) w.at(i, j) -= f * w.at(r, j);
      }
      pivot_of_col[col] = static_cast<long>(r);
      ++r;
    }
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (pivot_of_col[free] >= 0) continue;
      std::vector<Rat> v(cols_, Rat(0));
      v[free] = 1;
      for (std::size_t col = 0; col < cols_; ++col)
        if (pivot_of_col[col] >= 0)
          v[col] = -w.at(static_cast<std::size_t>(pivot_of_col[col]), free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

}  // namespace pvlab

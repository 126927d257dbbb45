#pragma once

#include <initializer_list>
#include <vector>

#include "trop/errors.hpp"
#include "trop/rational.hpp"

namespace trop {

// Minimal dense row-major container. The semantics (min-plus arithmetic,
// argmin sets) live in free functions, not in operators.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows <= 0 || cols <= 0) throw DimensionError("matrix dimensions must be positive");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = static_cast<int>(rows.size());
    if (rows_ == 0) throw DimensionError("matrix needs at least one row");
    cols_ = static_cast<int>(rows.begin()->size());
    if (cols_ == 0) throw DimensionError("matrix needs at least one column");
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != cols_) throw DimensionError("ragged matrix rows");
      for (const auto& x : row) data_.push_back(x);
    }
  }
  explicit Matrix(const std::vector<std::vector<T>>& rows) {
    rows_ = static_cast<int>(rows.size());
    if (rows_ == 0) throw DimensionError("matrix needs at least one row");
    cols_ = static_cast<int>(rows.front().size());
    if (cols_ == 0) throw DimensionError("matrix needs at least one column");
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != cols_) throw DimensionError("ragged matrix rows");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const T& operator()(int i, int j) const { return data_[index(i, j)]; }
  T& operator()(int i, int j) { return data_[index(i, j)]; }

  std::vector<T> column(int j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (int i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }
  std::vector<T> row(int i) const {
    std::vector<T> out;
    out.reserve(cols_);
    for (int j = 0; j < cols_; ++j) out.push_back((*this)(i, j));
    return out;
  }

  Matrix<T> transposed() const {
    Matrix<T> out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw DimensionError("matrix index out of range");
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  int rows_;
  int cols_;
  std::vector<T> data_;
};

using TropicalMatrix = Matrix<Rational>;

// Entries restricted to {-1, +1}; validated by the JSON reader and by the
// operations that consume it.
using SignPattern = Matrix<int>;

inline void validate_sign_pattern(const SignPattern& s) {
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j)
      if (s(i, j) != 1 && s(i, j) != -1) throw DimensionError("sign pattern entries must be +-1");
}

inline SignPattern all_plus_signs(int rows, int cols) { return SignPattern(rows, cols, 1); }

}  // namespace trop

// Exact linear algebra over Q.
#pragma once

#include "wca/rational.hpp"

#include <vector>

namespace wca {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static RationalMatrix from_columns(const std::vector<RationalVector>& columns, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  RationalVector column(int j) const;
  std::size_t nonzeros() const;

  /// Rows with the given indices, in that order.
  RationalMatrix select_rows(const std::vector<int>& indices) const;

  int rank() const;
  /// Basis of the right null space.
  std::vector<RationalVector> kernel_basis() const;
  /// Pivot columns of the original matrix; they span the column space.
  std::vector<RationalVector> column_space_basis() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  struct Echelon;
  /// Reduced row echelon form by Gauss-Jordan elimination.
  Echelon rref() const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Dimension of the span of the vectors (all of equal length).
int rank_of(const std::vector<RationalVector>& vectors, int length);

}  // namespace wca

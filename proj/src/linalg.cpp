#include "wca/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace wca {

struct RationalMatrix::Echelon {
  RationalMatrix reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, int rows) {
  RationalMatrix m(rows, static_cast<int>(columns.size()));
  for (int j = 0; j < m.cols_; ++j) {
    if (static_cast<int>(columns[j].size()) != rows)
      throw std::invalid_argument("from_columns: column length mismatch");
    for (int i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

RationalVector RationalMatrix::column(int j) const {
  RationalVector v(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& x : data_) n += !is_zero(x);
  return n;
}

RationalMatrix RationalMatrix::select_rows(const std::vector<int>& indices) const {
  RationalMatrix m(static_cast<int>(indices.size()), cols_);
  for (std::size_t r = 0; r < indices.size(); ++r)
    for (int j = 0; j < cols_; ++j) m.at(static_cast<int>(r), j) = at(indices[r], j);
  return m;
}

RationalMatrix::Echelon RationalMatrix::rref() const {
  Echelon e{*this, {}};
  RationalMatrix& a = e.reduced;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pivot = -1;
    for (int i = row; i < rows_; ++i)
      if (!is_zero(a.at(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < cols_; ++j) std::swap(a.at(pivot, j), a.at(row, j));
    const Rational inv = 1 / a.at(row, col);
    for (int j = col; j < cols_; ++j) a.at(row, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row || is_zero(a.at(i, col))) continue;
      const Rational factor = a.at(i, col);
      for (int j = col; j < cols_; ++j)
        if (!is_zero(a.at(row, j))) a.at(i, j) -= factor * a.at(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

int RationalMatrix::rank() const { return static_cast<int>(rref().pivots.size()); }

std::vector<RationalVector> RationalMatrix::kernel_basis() const {
  const Echelon e = rref();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(static_cast<std::size_t>(cols_));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RationalVector> RationalMatrix::column_space_basis() const {
  std::vector<RationalVector> basis;
  for (int p : rref().pivots) basis.push_back(column(p));
  return basis;
}

int rank_of(const std::vector<RationalVector>& vectors, int length) {
  if (vectors.empty()) return 0;
  return RationalMatrix::from_columns(vectors, length).rank();
}

}  // namespace wca

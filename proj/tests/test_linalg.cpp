#include "wca/linalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace wca;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> e(lo, hi);
  RationalMatrix A(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A.at(i, j) = e(rng);
  return A;
}

RationalMatrix product(const RationalMatrix& A, const RationalMatrix& B) {
  RationalMatrix C(A.rows(), B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j)
      for (int k = 0; k < A.cols(); ++k) C.at(i, j) += A.at(i, k) * B.at(k, j);
  return C;
}

RationalVector mat_vec(const RationalMatrix& A, const RationalVector& x) {
  RationalVector y(static_cast<std::size_t>(A.rows()));
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) y[static_cast<std::size_t>(i)] += A.at(i, j) * x[static_cast<std::size_t>(j)];
  return y;
}

RationalMatrix transpose(const RationalMatrix& A) {
  RationalMatrix T(A.cols(), A.rows());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) T.at(j, i) = A.at(i, j);
  return T;
}

// Lower-triangular with unit diagonal times upper-triangular with the first r
// diagonal entries nonzero has rank exactly r.
RationalMatrix known_rank(std::mt19937_64& rng, int n, int r) {
  RationalMatrix L = random_matrix(rng, n, n), U = random_matrix(rng, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j > i) L.at(i, j) = 0;
      if (i == j) L.at(i, j) = 1;
      if (j < i || i >= r) U.at(i, j) = 0;
      if (i == j && i < r) U.at(i, j) = 1 + (i % 3);
    }
  return product(L, U);
}

}  // namespace

TEST_CASE("rank of small matrices") {
  RationalMatrix A(2, 3);
  A.at(0, 0) = 1;
  A.at(0, 1) = 2;
  A.at(0, 2) = 3;
  A.at(1, 0) = 2;
  A.at(1, 1) = 4;
  A.at(1, 2) = 6;
  CHECK(A.rank() == 1);
  CHECK(A.kernel_basis().size() == 2);
  CHECK(A.column_space_basis() == std::vector<RationalVector>{{1, 2}});
  CHECK(RationalMatrix(0, 4).rank() == 0);
  CHECK(RationalMatrix(3, 0).kernel_basis().empty());
  CHECK(RationalMatrix(3, 2).kernel_basis().size() == 2);
  CHECK(A.nonzeros() == 6);
}

TEST_CASE("rank of matrices with known rank") {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 8; ++n)
    for (int r = 0; r <= n; ++r) {
      const RationalMatrix A = known_rank(rng, n, r);
      CHECK(A.rank() == r);
      CHECK(transpose(A).rank() == r);
    }
}

TEST_CASE("kernel vectors are independent and annihilated") {
  std::mt19937_64 rng(2);
  for (int s = 0; s < 30; ++s) {
    const int rows = 1 + s % 6, cols = 1 + (s * 7) % 9;
    RationalMatrix A = random_matrix(rng, rows, cols);
    if (s % 3 == 0) A = product(random_matrix(rng, rows, 2), random_matrix(rng, 2, cols));
    const auto K = A.kernel_basis();
    CHECK(static_cast<int>(K.size()) == cols - A.rank());
    CHECK(rank_of(K, cols) == static_cast<int>(K.size()));
    for (const auto& k : K)
      for (const auto& y : mat_vec(A, k)) CHECK(y == 0);
  }
}

TEST_CASE("column space basis uses original columns and spans") {
  std::mt19937_64 rng(3);
  for (int s = 0; s < 30; ++s) {
    const int rows = 2 + s % 5, cols = 1 + s % 7;
    const RationalMatrix A = product(random_matrix(rng, rows, 3), random_matrix(rng, 3, cols));
    const auto B = A.column_space_basis();
    CHECK(static_cast<int>(B.size()) == A.rank());
    std::vector<RationalVector> all;
    for (int j = 0; j < cols; ++j) all.push_back(A.column(j));
    for (const auto& b : B) CHECK(std::find(all.begin(), all.end(), b) != all.end());
    std::vector<RationalVector> joined = B;
    joined.insert(joined.end(), all.begin(), all.end());
    CHECK(rank_of(joined, rows) == static_cast<int>(B.size()));
  }
}

TEST_CASE("from_columns and select_rows") {
  const RationalMatrix A = RationalMatrix::from_columns({{1, 2, 3}, {4, 5, 6}}, 3);
  CHECK(A.rows() == 3);
  CHECK(A.cols() == 2);
  CHECK(A.at(2, 1) == 6);
  CHECK(A.column(0) == RationalVector{1, 2, 3});
  const RationalMatrix S = A.select_rows({2, 0});
  CHECK(S.column(1) == RationalVector{6, 4});
  CHECK_THROWS_AS(RationalMatrix::from_columns({{1, 2}}, 3), std::invalid_argument);
}

TEST_CASE("exact arithmetic with fractional pivots") {
  RationalMatrix A(2, 2);
  A.at(0, 0) = Rational(1, 3);
  A.at(0, 1) = Rational(1, 7);
  A.at(1, 0) = Rational(7, 3);
  A.at(1, 1) = 1;
  CHECK(A.rank() == 1);
  A.at(1, 1) = Rational(1000001, 1000000);
  CHECK(A.rank() == 2);
}

// Copyright 2026 The matroid-qss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "mqss/matrix.hpp"
#include "oracles.hpp"

namespace mqss {
namespace {

Matrix m2(std::vector<Vec> rows, unsigned q = 2) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  return Matrix::from_rows(Field::of_order(q), rows, cols);
}

Matrix random_matrix(std::mt19937& rng, unsigned q, std::size_t rows, std::size_t cols) {
  std::vector<Elem> e(rows * cols);
  for (auto& x : e) x = static_cast<Elem>(rng() % q);
  return Matrix(Field::of_order(q), rows, cols, e);
}

TEST(Rref, PermutedIdentity) {
  const RowReduction r = rref(m2({{0, 1}, {1, 0}}));
  EXPECT_EQ(r.reduced, m2({{1, 0}, {0, 1}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.rank, 2u);
}

TEST(Rref, DuplicateRows) {
  const RowReduction r = rref(m2({{1, 1, 1}, {1, 1, 1}}));
  EXPECT_EQ(r.reduced, m2({{1, 1, 1}, {0, 0, 0}}));
  EXPECT_EQ(r.rank, 1u);
}

TEST(Rref, DependentRowsOverGf3) {
  const RowReduction r = rref(m2({{1, 2}, {2, 1}}, 3));
  EXPECT_EQ(r.reduced, m2({{1, 2}, {0, 0}}, 3));
  EXPECT_EQ(r.rank, 1u);
}

TEST(Rref, IdempotentAndSpanPreserving) {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    const unsigned q = std::vector<unsigned>{2, 3, 4, 5}[t % 4];
    const Matrix m = random_matrix(rng, q, 1 + rng() % 4, 1 + rng() % 5);
    const RowReduction r = rref(m);
    EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
    EXPECT_EQ(oracle::span(r.reduced), oracle::span(m));
    EXPECT_EQ(r.pivots.size(), r.rank);
    // Pivot columns are unit vectors.
    for (std::size_t i = 0; i < r.rank; ++i)
      for (std::size_t row = 0; row < m.rows(); ++row) EXPECT_EQ(r.reduced(row, r.pivots[i]), row == i ? 1 : 0);
  }
}

TEST(NullSpace, Examples) {
  EXPECT_EQ(null_space(m2({{1, 1}})), m2({{1, 1}}));
  EXPECT_EQ(null_space(Matrix::identity(Field::of_order(3), 3)).rows(), 0u);
  const Matrix tetra = m2({{1, 1, 1, 0}, {0, 1, 2, 1}}, 3);
  const Matrix ns = null_space(tetra);
  EXPECT_EQ(ns.rows(), 2u);
  EXPECT_TRUE(row_space_equal(ns, tetra));
}

// rank + nullity = cols, every basis row is annihilated, and the kernel is
// the brute-force one.
TEST(NullSpace, RankNullityAgainstBruteForce) {
  std::mt19937 rng(5);
  for (int t = 0; t < 60; ++t) {
    const unsigned q = std::vector<unsigned>{2, 3, 5}[t % 3];
    const Matrix m = random_matrix(rng, q, 1 + rng() % 4, 1 + rng() % 5);
    const Matrix ns = null_space(m);
    EXPECT_EQ(rank(m) + ns.rows(), m.cols());
    EXPECT_EQ(rank(ns), ns.rows());
    const oracle::Gf g = oracle::gf_of(m.field());
    const oracle::WordSet kernel = oracle::dual(g, oracle::span(m), m.cols());
    if (ns.rows() == 0)
      EXPECT_EQ(kernel.size(), 1u);
    else
      EXPECT_EQ(oracle::span(ns), kernel);
  }
}

TEST(NullSpace, Biduality) {
  std::mt19937 rng(9);
  for (int t = 0; t < 40; ++t) {
    const Matrix m = rref(random_matrix(rng, 3, 3, 6)).reduced.drop_zero_rows();
    if (m.rows() == 0) continue;
    EXPECT_TRUE(row_space_equal(null_space(null_space(m)), m));
  }
}

TEST(RowSpace, Equality) {
  EXPECT_TRUE(row_space_equal(m2({{1, 1}}), m2({{1, 1}, {1, 1}})));
  EXPECT_FALSE(row_space_equal(m2({{1, 0}}), m2({{0, 1}})));
  const Matrix sigma = matrix_from_text(fixtures::kSigma0);
  EXPECT_TRUE(row_space_equal(sigma, rref(sigma).reduced));
  EXPECT_THROW((void)row_space_equal(m2({{1, 0}}), m2({{1, 0, 0}})), Error);
}

TEST(Matrix, ShapeOperations) {
  const Matrix a = m2({{1, 0, 1}, {0, 1, 1}});
  EXPECT_EQ(a.transpose(), m2({{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(a.column_to_front(2), m2({{1, 1, 0}, {1, 0, 1}}));
  EXPECT_EQ(a.remove_column(1), m2({{1, 1}, {0, 1}}));
  EXPECT_EQ(a.multiply(a.transpose()), m2({{0, 1}, {1, 0}}));
  EXPECT_THROW((void)a.multiply(a), Error);
  EXPECT_THROW((void)m2({{1, 2}}), Error);  // entry outside GF(2)
}

TEST(MatrixText, RoundTrip) {
  const Matrix m = matrix_from_text(fixtures::kHamming8);
  EXPECT_EQ(to_text(m), fixtures::kHamming8);
  EXPECT_EQ(matrix_from_text(to_text(m)), m);

  const Matrix g4 = Matrix::from_rows(Field::of_order(4), {{1, 2, 3}, {0, 1, 2}}, 3);
  const std::string text = to_text(g4);
  EXPECT_EQ(text.substr(0, text.find('\n')), "q 4 poly 1 1 1");
  EXPECT_EQ(matrix_from_text(text), g4);
  EXPECT_EQ(matrix_from_text("q 4\npoly 1 1 1\n2 3\n1 2 3\n0 1 2\n"), g4);
}

TEST(MatrixText, Malformed) {
  EXPECT_THROW((void)matrix_from_text(""), Error);
  EXPECT_THROW((void)matrix_from_text("q 2\n2 2\n1 0\n"), Error);
  EXPECT_THROW((void)matrix_from_text("q 2\n1 2\n1 2\n"), Error);
  EXPECT_THROW((void)matrix_from_text("q 6\n1 1\n1\n"), Error);
  EXPECT_THROW((void)matrix_from_text("q 2\n1 2\n1 x\n"), Error);
}

}  // namespace
}  // namespace mqss

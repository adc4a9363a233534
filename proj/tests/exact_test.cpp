// Copyright 2026 The polarcl Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polarcl/exact.hpp"

#include <random>

#include <gtest/gtest.h>

namespace polarcl {
namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

// Product of random factors has rank at most the inner dimension.
IntMatrix low_rank(std::mt19937_64& rng, int rows, int cols, int inner, int lo, int hi) {
  return random_matrix(rng, rows, inner, lo, hi) * random_matrix(rng, inner, cols, lo, hi);
}

long stacked_rank(const IntMatrix& m, const IntVector& v) {
  IntMatrix s(m.rows() + 1, m.cols());
  s.topRows(m.rows()) = m;
  s.row(m.rows()) = v.transpose();
  return bareiss_rank(s);
}

TEST(Bareiss, KnownRanks) {
  IntMatrix m(3, 3);
  m << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  EXPECT_EQ(bareiss_rank(m), 2);
  EXPECT_EQ(bareiss_rank(IntMatrix(IntMatrix::Identity(5, 5))), 5);
  EXPECT_EQ(bareiss_rank(IntMatrix(IntMatrix::Zero(4, 6))), 0);
  IntMatrix p(2, 2);
  p << 0, 1, 1, 0;
  EXPECT_EQ(bareiss_rank(p), 2);
}

TEST(ModularRank, AgreesWithBareissOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    const int rows = 1 + static_cast<int>(rng() % 12);
    const int cols = 1 + static_cast<int>(rng() % 12);
    const int inner = 1 + static_cast<int>(rng() % 8);
    const IntMatrix m = (t % 2 == 0) ? low_rank(rng, rows, cols, inner, -2, 2) : random_matrix(rng, rows, cols, 0, 1);
    const long expect = bareiss_rank(m);
    EXPECT_EQ(rank_mod_p(m), expect);
    EXPECT_EQ(RowSpace(m).rank(), expect);
    EXPECT_EQ(static_cast<long>(independent_rows_mod_p(m).size()), expect);
  }
}

TEST(RowSpace, KernelVectorsAreExact) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const IntMatrix m = low_rank(rng, 9, 14, 5, -3, 3);
    const RowSpace rs(m);
    EXPECT_EQ(static_cast<int>(rs.kernel().size()), rs.columns() - rs.rank());
    for (const auto& k : rs.kernel())
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        BigInt s = 0;
        for (Eigen::Index j = 0; j < m.cols(); ++j) s += k[j] * m(i, j);
        EXPECT_EQ(s, 0);
      }
  }
}

TEST(RowSpace, MembershipMatchesStackedRank) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    const IntMatrix m = low_rank(rng, 7, 10, 4, -2, 2);
    const RowSpace rs(m);
    const long r = bareiss_rank(m);
    const IntVector inside = m.transpose() * random_matrix(rng, 7, 1, -3, 3);
    const IntVector outside = random_matrix(rng, 10, 1, -3, 3);
    EXPECT_TRUE(rs.contains(inside));
    EXPECT_EQ(rs.contains(outside), stacked_rank(m, outside) == r);
    EXPECT_TRUE(image_membership(m, inside));
  }
}

TEST(RowSpace, ZeroAndRowsAreMembers) {
  IntMatrix m(2, 4);
  m << 1, 1, 0, 0, 0, 1, 1, 0;
  const RowSpace rs(m);
  EXPECT_TRUE(rs.contains(IntVector::Zero(4)));
  EXPECT_TRUE(rs.contains(m.row(0).transpose()));
  EXPECT_TRUE(rs.contains(m.row(1).transpose()));
  IntVector e(4);
  e << 0, 0, 0, 1;
  EXPECT_FALSE(rs.contains(e));
}

TEST(RowSpace, LargeEntriesUseTheRationalFallback) {
  std::mt19937_64 rng(17);
  const IntMatrix m = low_rank(rng, 6, 9, 4, -40000, 40000);
  const RowSpace rs(m);
  EXPECT_FALSE(rs.modular());
  EXPECT_EQ(rs.rank(), bareiss_rank(m));
  const IntVector inside = m.transpose() * random_matrix(rng, 6, 1, -5, 5);
  EXPECT_TRUE(rs.contains(inside));
  const IntVector outside = random_matrix(rng, 9, 1, -5, 5);
  EXPECT_EQ(rs.contains(outside), stacked_rank(m, outside) == rs.rank());
}

TEST(RowSpace, SmallIncidenceUsesModularRoute) {
  IntMatrix m(3, 3);
  m << 1, 1, 0, 0, 1, 1, 1, 0, 1;
  const RowSpace rs(m);
  EXPECT_TRUE(rs.modular());
  EXPECT_EQ(rs.rank(), 3);
  EXPECT_TRUE(rs.kernel().empty());
}

}  // namespace
}  // namespace polarcl

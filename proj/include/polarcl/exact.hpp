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

#ifndef POLARCL_EXACT_HPP_
#define POLARCL_EXACT_HPP_

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "polarcl/combinatorics.hpp"

namespace polarcl {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using BigMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

// The Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

// Rank over the rationals by fraction-free elimination.
long bareiss_rank(BigMatrix m);

template <typename Derived>
long bareiss_rank(const Eigen::MatrixBase<Derived>& m) {
  BigMatrix b(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) b(i, j) = BigInt(m(i, j));
  return bareiss_rank(std::move(b));
}

// Rank modulo kModulus, a lower bound for the rational rank.
int rank_mod_p(const IntMatrix& m);

// Rows forming a maximal independent set modulo kModulus. They are also
// independent over the rationals.
std::vector<int> independent_rows_mod_p(const IntMatrix& m);

// Row space of an integer matrix, i.e. the image of its transpose, described
// by an exact integer basis of the right kernel. Immutable after
// construction.
class RowSpace {
 public:
  explicit RowSpace(const IntMatrix& m);

  int rank() const { return rank_; }
  int columns() const { return cols_; }
  // v lies in the row space iff it is orthogonal to the kernel.
  bool contains(const IntVector& v) const;
  const std::vector<std::vector<BigInt>>& kernel() const { return kernel_; }
  // True when the kernel came from the modular route and was verified
  // exactly; false when the rational fallback was needed.
  bool modular() const { return modular_; }

 private:
  int rank_ = 0;
  int cols_ = 0;
  bool modular_ = true;
  std::vector<std::vector<BigInt>> kernel_;
  // Kernel as int64 when its entries are small enough for exact dot
  // products with 0/1 or small vectors.
  IntMatrix small_kernel_;
  std::int64_t kernel_max_ = 0;
};

// rank([m; v^t]) == rank(m), decided through the certified kernel of m.
bool image_membership(const IntMatrix& m, const IntVector& v);

}  // namespace polarcl

#endif  // POLARCL_EXACT_HPP_

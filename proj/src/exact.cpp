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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>

namespace polarcl {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

constexpr u64 P = kModulus;

u64 mulmod(u64 a, u64 b) {
  const u128 r = static_cast<u128>(a) * b;
  u64 lo = static_cast<u64>(r & P) + static_cast<u64>(r >> 61);
  if (lo >= P) lo -= P;
  return lo;
}

u64 submod(u64 a, u64 b) { return a >= b ? a - b : a + P - b; }

u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a) { return powmod(a, P - 2); }

u64 reduce(std::int64_t x) {
  const std::int64_t m = static_cast<std::int64_t>(P);
  std::int64_t r = x % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

using ModRows = std::vector<std::vector<u64>>;

ModRows to_mod(const IntMatrix& m) {
  ModRows a(m.rows(), std::vector<u64>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) a[i][j] = reduce(m(i, j));
  return a;
}

// In-place reduced echelon form; returns the pivot columns.
std::vector<int> rref_mod(ModRows& a, int cols) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(a.size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    const u64 s = invmod(a[r][c]);
    for (int j = c; j < cols; ++j) a[r][j] = mulmod(a[r][j], s);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const u64 f = a[i][c];
      for (int j = c; j < cols; ++j)
        if (a[r][j] != 0) a[i][j] = submod(a[i][j], mulmod(f, a[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

// Wang's rational reconstruction with symmetric bounds.
std::optional<Rational> reconstruct(u64 x) {
  const i128 bound = static_cast<i128>(std::sqrt(static_cast<double>(P) / 2.0));
  i128 r0 = P, r1 = x, t0 = 0, t1 = 1;
  while (r1 > bound) {
    const i128 qq = r0 / r1;
    i128 tmp = r0 - qq * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - qq * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || (t1 < 0 ? -t1 : t1) > bound) return std::nullopt;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  BigInt num = static_cast<long long>(r1);
  BigInt den = static_cast<long long>(t1);
  return Rational(num, den);
}

bool verify_kernel_vector(const IntMatrix& m, const std::vector<BigInt>& k) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    BigInt s = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && k[j] != 0) s += k[j] * m(i, j);
    if (s != 0) return false;
  }
  return true;
}

// Kernel basis over the rationals by Gauss-Jordan on cpp_rational.
std::vector<std::vector<BigInt>> rational_kernel(const IntMatrix& m, int& rank_out) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = Rational(m(i, j));
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    const Rational s = a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] /= s;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rank_out = r;
  std::vector<std::vector<BigInt>> kernel;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols, 0);
    x[f] = 1;
    for (int i = 0; i < r; ++i) x[pivots[i]] = -a[i][f];
    BigInt den = 1;
    for (const Rational& v : x) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(v));
    std::vector<BigInt> k(cols);
    for (int j = 0; j < cols; ++j) k[j] = boost::multiprecision::numerator(Rational(x[j] * den));
    kernel.push_back(std::move(k));
  }
  return kernel;
}

}  // namespace

long bareiss_rank(BigMatrix m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  BigInt prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return static_cast<long>(r);
}

int rank_mod_p(const IntMatrix& m) {
  ModRows a = to_mod(m);
  return static_cast<int>(rref_mod(a, static_cast<int>(m.cols())).size());
}

std::vector<int> independent_rows_mod_p(const IntMatrix& m) {
  const int cols = static_cast<int>(m.cols());
  std::vector<std::vector<u64>> basis;  // echelon rows, leading entry 1
  std::vector<int> lead;
  std::vector<int> chosen;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<u64> v(cols);
    for (int j = 0; j < cols; ++j) v[j] = reduce(m(i, j));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const u64 f = v[lead[b]];
      if (f == 0) continue;
      for (int j = lead[b]; j < cols; ++j)
        if (basis[b][j] != 0) v[j] = submod(v[j], mulmod(f, basis[b][j]));
    }
    int l = 0;
    while (l < cols && v[l] == 0) ++l;
    if (l == cols) continue;
    const u64 s = invmod(v[l]);
    for (int j = l; j < cols; ++j) v[j] = mulmod(v[j], s);
    basis.push_back(std::move(v));
    lead.push_back(l);
    chosen.push_back(static_cast<int>(i));
    if (static_cast<int>(chosen.size()) == cols) break;
  }
  return chosen;
}

RowSpace::RowSpace(const IntMatrix& m) : cols_(static_cast<int>(m.cols())) {
  ModRows a = to_mod(m);
  const std::vector<int> pivots = rref_mod(a, cols_);
  rank_ = static_cast<int>(pivots.size());
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;

  bool ok = true;
  for (int f = 0; f < cols_ && ok; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols_, 0);
    x[f] = 1;
    for (int i = 0; i < rank_ && ok; ++i) {
      const auto r = reconstruct(submod(0, a[i][f]));
      if (!r) ok = false;
      else x[pivots[i]] = *r;
    }
    if (!ok) break;
    BigInt den = 1;
    for (const Rational& v : x) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(v));
    std::vector<BigInt> k(cols_);
    for (int j = 0; j < cols_; ++j) k[j] = boost::multiprecision::numerator(Rational(x[j] * den));
    if (!verify_kernel_vector(m, k)) ok = false;
    else kernel_.push_back(std::move(k));
  }
  // cols - rank_p verified kernel vectors force rank_Q <= rank_p; with
  // rank_p <= rank_Q the modular rank is exact.
  if (!ok) {
    modular_ = false;
    kernel_ = rational_kernel(m, rank_);
  }

  BigInt maxabs = 0;
  for (const auto& k : kernel_)
    for (const BigInt& v : k) maxabs = std::max(maxabs, BigInt(boost::multiprecision::abs(v)));
  if (maxabs <= BigInt(std::numeric_limits<std::int32_t>::max())) {
    kernel_max_ = maxabs.convert_to<std::int64_t>();
    small_kernel_.resize(static_cast<Eigen::Index>(kernel_.size()), cols_);
    for (std::size_t i = 0; i < kernel_.size(); ++i)
      for (int j = 0; j < cols_; ++j) small_kernel_(i, j) = kernel_[i][j].convert_to<std::int64_t>();
  } else {
    kernel_max_ = -1;
  }
}

bool RowSpace::contains(const IntVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match the row space");
  if (kernel_.empty()) return true;
  std::int64_t vmax = 0;
  for (Eigen::Index j = 0; j < v.size(); ++j) vmax = std::max<std::int64_t>(vmax, std::llabs(v(j)));
  if (kernel_max_ >= 0 && vmax < (std::int64_t{1} << 30)) {
    // |k_j v_j| < 2^61 and at most a few thousand terms fit in __int128.
    for (Eigen::Index i = 0; i < small_kernel_.rows(); ++i) {
      i128 s = 0;
      for (Eigen::Index j = 0; j < cols_; ++j) s += static_cast<i128>(small_kernel_(i, j)) * v(j);
      if (s != 0) return false;
    }
    return true;
  }
  for (const auto& k : kernel_) {
    BigInt s = 0;
    for (int j = 0; j < cols_; ++j)
      if (v(j) != 0) s += k[j] * v(j);
    if (s != 0) return false;
  }
  return true;
}

bool image_membership(const IntMatrix& m, const IntVector& v) { return RowSpace(m).contains(v); }

}  // namespace polarcl

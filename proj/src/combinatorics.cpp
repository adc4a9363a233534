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

#include "polarcl/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "polarcl/field.hpp"

namespace polarcl {
namespace {

// q^(t/2) for an integer q; odd t requires q to be a perfect square.
BigInt half_power(int q, long long twice_exponent) {
  if (twice_exponent < 0) throw std::logic_error("negative exponent in an integral count");
  if (twice_exponent % 2 == 0) return ipow(BigInt(q), twice_exponent / 2);
  auto [p, n] = prime_power(q);
  if (n % 2 != 0) throw std::logic_error("half-integral power of non-square q = " + std::to_string(q));
  int root = 1;
  for (int i = 0; i < n / 2; ++i) root *= p;
  return ipow(BigInt(root), twice_exponent);
}

BigInt sign(long long k) { return (k % 2 == 0) ? BigInt(1) : BigInt(-1); }

BigInt profile(int d, int q, int e2, const BigInt& x, int i, bool in_set) {
  const BigInt qq(q);
  const long long t1 = 2 * binom2(i - 1) + static_cast<long long>(i - 1) * e2;
  BigInt result = 0;
  const BigInt g1 = gaussian_binomial(d - 1, i - 1, qq);
  if (g1 != 0) result += (in_set ? (x - 1) : x) * g1 * half_power(q, t1);
  if (in_set) {
    const BigInt g2 = gaussian_binomial(d - 1, i, qq);
    if (g2 != 0) result += g2 * half_power(q, 2LL * (i - 1) + e2 + t1);
  }
  return result;
}

}  // namespace

BigInt ipow(const BigInt& base, long long exponent) {
  if (exponent < 0) throw std::logic_error("negative exponent in ipow");
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

long long binom2(long long n) { return n * (n - 1) / 2; }

BigInt gaussian_binomial(long long n, long long k, const BigInt& q) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (long long i = 0; i < k; ++i) {
    num *= ipow(q, n - i) - 1;
    den *= ipow(q, i + 1) - 1;
  }
  return num / den;
}

bool q_binomial_theorem_check(int n, const BigInt& q, const Rational& t) {
  Rational lhs = 0;
  Rational tk = 1;
  for (int k = 0; k <= n; ++k) {
    lhs += Rational(gaussian_binomial(n, k, q) * ipow(q, binom2(k))) * tk;
    tk *= t;
  }
  Rational rhs = 1;
  for (int k = 0; k < n; ++k) rhs *= 1 + Rational(ipow(q, k)) * t;
  return lhs == rhs;
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits");
  return v.convert_to<std::int64_t>();
}

PolarCounts::PolarCounts(const PolarSpaceDescriptor& desc)
    : d_(desc.rank), q_(desc.q), e2_(desc.twice_e()) {}

BigInt PolarCounts::q_half_power(long long twice_exponent) const {
  return half_power(q_, twice_exponent);
}

BigInt PolarCounts::subspace_count(int k) const {
  if (k < -1 || k > d_ - 1) return 0;
  BigInt r = gaussian_binomial(d_, k + 1, BigInt(q_));
  for (int i = 1; i <= k + 1; ++i) r *= q_half_power(2LL * (d_ - i) + e2_) + 1;
  return r;
}

BigInt PolarCounts::subspaces_through(int m, int k) const {
  if (m > k || k > d_ - 1) return 0;
  BigInt r = gaussian_binomial(d_ - m - 1, k - m, BigInt(q_));
  for (int i = 1; i <= k - m; ++i) r *= q_half_power(2LL * (d_ - m - i - 1) + e2_) + 1;
  return r;
}

BigInt PolarCounts::pencil_size() const {
  BigInt r = 1;
  for (int i = 0; i <= d_ - 2; ++i) r *= q_half_power(2LL * i + e2_) + 1;
  return r;
}

BigInt PolarCounts::spread_size() const { return q_half_power(2LL * (d_ - 1) + e2_) + 1; }

BigInt PolarCounts::skew_count() const {
  return q_half_power(2 * binom2(d_) + static_cast<long long>(d_) * e2_);
}

BigInt PolarCounts::lambda() const {
  return q_half_power(2 * binom2(d_ - 1) + static_cast<long long>(d_ - 1) * e2_);
}

SchemeParameters SchemeParameters::from_descriptor(const PolarSpaceDescriptor& desc) {
  const PolarCounts pc(desc);
  const int d = desc.rank;
  const BigInt q(desc.q);
  SchemeParameters s;
  s.d = d;
  s.b.assign(d + 1, 0);
  s.c.assign(d + 1, 0);
  s.a.assign(d + 1, 0);
  s.k.assign(d + 1, 0);
  for (int i = 0; i < d; ++i) s.b[i] = pc.q_half_power(2LL * i + desc.twice_e()) * gaussian_binomial(d - i, 1, q);
  for (int i = 1; i <= d; ++i) s.c[i] = gaussian_binomial(i, 1, q);
  for (int i = 0; i <= d; ++i) s.a[i] = s.b[0] - s.b[i] - s.c[i];
  s.k[0] = 1;
  for (int i = 1; i <= d; ++i) s.k[i] = s.k[i - 1] * s.b[i - 1] / s.c[i];
  return s;
}

void SchemeParameters::build_cache() const {
  using Mat = std::vector<std::vector<BigInt>>;
  const int n = d + 1;
  auto zero = [&] { return Mat(n, std::vector<BigInt>(n, 0)); };
  auto mul = [&](const Mat& x, const Mat& y) {
    Mat r = zero();
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (x[i][l] != 0)
          for (int j = 0; j < n; ++j) r[i][j] += x[i][l] * y[l][j];
    return r;
  };
  cache_.assign(n, zero());
  for (int i = 0; i < n; ++i) cache_[0][i][i] = 1;
  if (d == 0) return;
  Mat& b1 = cache_[1];
  for (int j = 0; j < n; ++j) {
    if (j >= 1) b1[j - 1][j] = b[j - 1];
    b1[j][j] = a[j];
    if (j + 1 < n) b1[j + 1][j] = c[j + 1];
  }
  for (int i = 1; i + 1 < n; ++i) {
    Mat next = mul(cache_[1], cache_[i]);
    for (int r = 0; r < n; ++r)
      for (int col = 0; col < n; ++col) {
        next[r][col] -= b[i - 1] * cache_[i - 1][r][col] + a[i] * cache_[i][r][col];
        next[r][col] /= c[i + 1];
      }
    cache_[i + 1] = std::move(next);
  }
}

BigInt SchemeParameters::intersection_number(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i > d || j > d || k > d) return 0;
  if (cache_.empty()) build_cache();
  return cache_[i][k][j];
}

BigInt eigenvalue(int j, int i, const PolarSpaceDescriptor& desc) {
  const int d = desc.rank;
  const BigInt q(desc.q);
  const PolarCounts pc(desc);
  BigInt sum = 0;
  for (int u = std::max(0, j - i); u <= std::min(j, d - i); ++u) {
    const long long m = u + i - j;
    const long long twice = 2 * binom2(m) + 2 * binom2(j - u) + m * desc.twice_e();
    sum += sign(j + u) * gaussian_binomial(d - j, d - i - u, q) * gaussian_binomial(j, u, q) *
           pc.q_half_power(twice);
  }
  return sum;
}

BigInt disjointness_eigenvalue(int j, const PolarSpaceDescriptor& desc) {
  const int d = desc.rank;
  const long long twice = 2 * binom2(d) + static_cast<long long>(d - j) * (desc.twice_e() - 2 * j);
  return sign(j) * PolarCounts(desc).q_half_power(twice);
}

EigenvalueTable::EigenvalueTable(const PolarSpaceDescriptor& desc) : d_(desc.rank) {
  p_.assign(d_ + 1, std::vector<BigInt>(d_ + 1, 0));
  for (int j = 0; j <= d_; ++j)
    for (int i = 0; i <= d_; ++i) p_[j][i] = eigenvalue(j, i, desc);
  const auto sp = SchemeParameters::from_descriptor(desc);
  bool ok = true;
  for (int i = 0; i <= d_; ++i) ok = ok && p_[0][i] == sp.k[i];
  for (int j = 0; j <= d_; ++j) ok = ok && p_[j][d_] == disjointness_eigenvalue(j, desc);
  for (int j = 0; j <= d_; ++j)
    for (int l = j + 1; l <= d_; ++l) ok = ok && p_[j][1] != p_[l][1];
  consistent_ = ok;
}

std::vector<int> min_eigenvalue_spaces(const PolarSpaceDescriptor& desc) {
  const BigInt target = -PolarCounts(desc).lambda();
  std::vector<int> out;
  for (int j = 0; j <= desc.rank; ++j)
    if (disjointness_eigenvalue(j, desc) == target) out.push_back(j);
  return out;
}

std::vector<int> cl_eigenspaces(const PolarSpaceDescriptor& desc) {
  const int d = desc.rank;
  std::vector<int> s = {0, 1};
  if (d % 2 == 0 && desc.twice_e() == 0) s.push_back(d - 1);
  if (d % 2 == 1 && desc.twice_e() == 2) s.push_back(d);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

BigInt disjoint_to_two_count(const PolarSpaceDescriptor& desc, int v) {
  if (desc.family == Family::kHyperbolic) {
    // Q+(2d+1, q) has rank d+1.
    const int d = desc.rank - 1;
    if (v < -1 || v > d || ((v - d) % 2 + 2) % 2 != 0)
      throw std::invalid_argument("need v = d mod 2 for the hyperbolic two-generator count");
    const BigInt q(desc.q);
    const long long ex = (static_cast<long long>(d + v + 2) * (d + v)) / 4 - binom2(v + 1);
    BigInt r = ipow(q, ex);
    for (int i = 1; i <= (d - v) / 2; ++i) r *= ipow(q, 2 * i - 1) - 1;
    return r;
  }
  if (desc.family == Family::kHermitianOdd) {
    // H(2d+1, q^2) has rank d+1 and field order q^2.
    const int d = desc.rank - 1;
    if (v < -1 || v > d) throw std::invalid_argument("intersection dimension out of range");
    Field f(desc.q);
    const BigInt q(f.sqrt_order());
    BigInt r = ipow(q, static_cast<long long>(d + 1) * (d + 1) - binom2(d - v + 1));
    for (int i = 1; i <= d - v; ++i) r *= ipow(q, i) + sign(i);
    return r;
  }
  throw std::invalid_argument("two-generator count only for Q+(2d+1,q) and H(2d+1,q^2)");
}

BigInt class_disjoint_to_two_factor(int n, int q) {
  BigInt r = ipow(BigInt(q), static_cast<long long>(n) * (n - 1));
  for (int i = 1; i <= n - 1; ++i) r *= ipow(BigInt(q), 2 * i - 1) - 1;
  return r;
}

BigInt distance_profile(const PolarSpaceDescriptor& desc, const BigInt& x, int i, bool in_set) {
  return profile(desc.rank, desc.q, desc.twice_e(), x, i, in_set);
}

BigInt class_distance_profile(int d, int q, const BigInt& x, int i, bool in_set) {
  return profile(d, q, 0, x, 2 * i, in_set);
}

BigInt z_factor(const PolarSpaceDescriptor& desc, int j) {
  const PolarCounts pc(desc);
  return gaussian_binomial(desc.rank - 2, j, BigInt(desc.q)) *
         pc.q_half_power(2 * binom2(j) + static_cast<long long>(j) * desc.twice_e());
}

bool no_c_plus_one_disjoint(const BigInt& x, int q, int c) {
  const BigInt qq(q);
  const BigInt lhs = (x - 1) * qq * qq * qq;
  const BigInt rhs = BigInt(c) * (qq * qq * qq + x * (qq * qq + qq + 1)) -
                     BigInt(c) * (c + 1) / 2 * (2 * qq * qq + x * (qq + 1));
  return lhs < rhs;
}

BigInt regular_system_size(const PolarSpaceDescriptor& desc, int m) {
  return BigInt(m) * PolarCounts(desc).spread_size();
}

}  // namespace polarcl

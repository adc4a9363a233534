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

#ifndef POLARCL_COMBINATORICS_HPP_
#define POLARCL_COMBINATORICS_HPP_

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polarcl/descriptor.hpp"

namespace polarcl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt ipow(const BigInt& base, long long exponent);

// Generalised n(n-1)/2, so binom2(-1) == 1.
long long binom2(long long n);

// Number of k-dimensional subspaces of GF(q)^n; zero when k < 0 or k > n.
BigInt gaussian_binomial(long long n, long long k, const BigInt& q);

// Checks sum_k [n k]_q q^binom(k,2) t^k == prod_{k<n} (1 + q^k t) exactly.
bool q_binomial_theorem_check(int n, const BigInt& q, const Rational& t);

// Converts with a range check; throws std::overflow_error.
std::int64_t to_int64(const BigInt& v);

// Closed-form counts for one polar space.
class PolarCounts {
 public:
  explicit PolarCounts(const PolarSpaceDescriptor& desc);

  int rank() const { return d_; }
  int q() const { return q_; }
  int twice_e() const { return e2_; }

  // q^(twice_exponent / 2); odd exponents need a square q.
  BigInt q_half_power(long long twice_exponent) const;

  // Totally isotropic subspaces of projective dimension k, -1 <= k <= d-1.
  BigInt subspace_count(int k) const;
  // k-spaces through a fixed m-space, m <= k.
  BigInt subspaces_through(int m, int k) const;
  BigInt point_count() const { return subspace_count(0); }
  BigInt generator_count() const { return subspace_count(d_ - 1); }
  // Generators through a point.
  BigInt pencil_size() const;
  // q^(d+e-1) + 1.
  BigInt spread_size() const;
  // Generators disjoint from a fixed generator.
  BigInt skew_count() const;
  // q^(binom(d-1,2) + e(d-1)), minus the smallest eigenvalue of K.
  BigInt lambda() const;

 private:
  int d_;
  int q_;
  int e2_;
};

// Intersection array of the dual polar graph.
struct SchemeParameters {
  int d = 0;
  std::vector<BigInt> b;  // b[0..d], b[d] = 0
  std::vector<BigInt> c;  // c[0..d], c[0] = 0
  std::vector<BigInt> a;  // a[i] = b[0] - b[i] - c[i]
  std::vector<BigInt> k;  // valencies

  // p^k_ij from the tridiagonal recurrence.
  BigInt intersection_number(int i, int j, int k) const;

  static SchemeParameters from_descriptor(const PolarSpaceDescriptor& desc);

 private:
  mutable std::vector<std::vector<std::vector<BigInt>>> cache_;
  void build_cache() const;
};

// P_{j,i} by the alternating sum.
BigInt eigenvalue(int j, int i, const PolarSpaceDescriptor& desc);

// Full (d+1) x (d+1) eigenvalue matrix P[j][i].
class EigenvalueTable {
 public:
  explicit EigenvalueTable(const PolarSpaceDescriptor& desc);

  int diameter() const { return d_; }
  const BigInt& at(int j, int i) const { return p_[j][i]; }
  std::int64_t at64(int j, int i) const { return to_int64(p_[j][i]); }
  // Row 0 equals the valencies, column d matches its closed form, and the
  // P_{j,1} are pairwise distinct. Checked at construction.
  bool consistent() const { return consistent_; }

 private:
  int d_;
  std::vector<std::vector<BigInt>> p_;
  bool consistent_ = false;
};

// (-1)^j q^(binom(d,2) + (d-j)(e-j)).
BigInt disjointness_eigenvalue(int j, const PolarSpaceDescriptor& desc);

// Indices j with P_{j,d} equal to -lambda.
std::vector<int> min_eigenvalue_spaces(const PolarSpaceDescriptor& desc);

// Eigenspaces that may carry a Cameron-Liebler vector: {0,1} plus d-1 for
// Q+ with d even or d for e = 1 with d odd.
std::vector<int> cl_eigenspaces(const PolarSpaceDescriptor& desc);

// Generators disjoint to two generators meeting in a v-space. Valid for
// Q+(2d+1, q) with v = d mod 2 and for H(2d+1, q); throws
// std::invalid_argument otherwise.
BigInt disjoint_to_two_count(const PolarSpaceDescriptor& desc, int v);

// Factor q^(n(n-1)) prod_{i=1}^{n-1} (q^(2i-1) - 1) of the two-generator
// count in one class of Q+(4n-1, q).
BigInt class_disjoint_to_two_factor(int n, int q);

// Members of a parameter-x set meeting a generator in a (d-i-1)-space.
BigInt distance_profile(const PolarSpaceDescriptor& desc, const BigInt& x, int i, bool in_set);

// Same for one class of Q+(2d-1, q): members meeting in a (d-2i-1)-space.
BigInt class_distance_profile(int d, int q, const BigInt& x, int i, bool in_set);

// Right-hand side of the z-recursion factor [d-2 j]_q q^(binom(j,2) + je).
BigInt z_factor(const PolarSpaceDescriptor& desc, int j);

// True when (x-1)q^3 < c(q^3 + x(q^2+q+1)) - binom(c+1,2)(2q^2 + x(q+1)),
// which excludes c+1 pairwise disjoint members in one class of Q+(7, q).
bool no_c_plus_one_disjoint(const BigInt& x, int q, int c);

// Size of an m-regular system.
BigInt regular_system_size(const PolarSpaceDescriptor& desc, int m);

}  // namespace polarcl

#endif  // POLARCL_COMBINATORICS_HPP_

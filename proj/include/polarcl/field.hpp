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

#ifndef POLARCL_FIELD_HPP_
#define POLARCL_FIELD_HPP_

#include <cstdint>
#include <utility>
#include <vector>

namespace polarcl {

// Element of GF(q) in its canonical encoding sum c_i p^i.
using Elem = std::uint8_t;

// Finite field GF(p^n) with q <= 64, stored as full operation tables.
// The modulus is the least monic irreducible polynomial in coefficient
// encoding order. Immutable once built.
class Field {
 public:
  // Throws std::invalid_argument unless order is a prime power in [2, 64].
  explicit Field(int order);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return n_; }
  // Coefficients of the monic modulus, constant term first (length n+1).
  const std::vector<int>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  // Throws std::domain_error for a == 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, long long k) const;

  bool is_square_order() const { return sqrt_order_ > 0; }
  // sqrt(q) for even degree; throws std::logic_error otherwise.
  int sqrt_order() const;
  // a^sqrt(q); throws std::logic_error for odd degree.
  Elem conjugate(Elem a) const;

  // First (b, c) in encoding order with t^2 + b t + c irreducible.
  std::pair<Elem, Elem> find_irreducible_quadratic() const;

  bool operator==(const Field& o) const { return q_ == o.q_; }

 private:
  int q_ = 0;
  int p_ = 0;
  int n_ = 0;
  int sqrt_order_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<Elem> conj_;
};

// Returns (p, n) with q = p^n, or (0, 0) if q is not a prime power.
std::pair<int, int> prime_power(int q);

}  // namespace polarcl

#endif  // POLARCL_FIELD_HPP_

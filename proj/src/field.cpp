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

#include "polarcl/field.hpp"

#include <stdexcept>
#include <string>

namespace polarcl {
namespace {

using Poly = std::vector<int>;  // constant term first

Poly decode(int value, int p, int len) {
  Poly c(len, 0);
  for (int i = 0; i < len; ++i) {
    c[i] = value % p;
    value /= p;
  }
  return c;
}

int encode(const Poly& c, int p) {
  int v = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * p + c[i];
  return v;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int lead = a.back();
    for (int i = 0; i <= dm; ++i) {
      a[i + shift] = ((a[i + shift] - lead * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, int p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int deg = 1; deg <= n / 2; ++deg) {
    const int count = [&] {
      int c = 1;
      for (int i = 0; i < deg; ++i) c *= p;
      return c;
    }();
    for (int low = 0; low < count; ++low) {
      Poly g = decode(low, p, deg);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::pair<int, int> prime_power(int q) {
  if (q < 2) return {0, 0};
  int p = 2;
  while (q % p != 0) ++p;
  int n = 0;
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++n;
  }
  if (r != 1) return {0, 0};
  return {p, n};
}

Field::Field(int order) : q_(order) {
  auto [p, n] = prime_power(order);
  if (p == 0 || order > 64) {
    throw std::invalid_argument("unsupported field order " +
                                std::to_string(order) +
                                " (need a prime power in [2, 64])");
  }
  p_ = p;
  n_ = n;

  int count = 1;
  for (int i = 0; i < n; ++i) count *= p;
  for (int low = 0; low < count; ++low) {
    Poly f = decode(low, p, n);
    f.push_back(1);
    if (is_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    const Poly pa = decode(a, p, n);
    Poly na(n);
    for (int i = 0; i < n; ++i) na[i] = (p - pa[i]) % p;
    neg_[a] = static_cast<Elem>(encode(na, p));
    for (int b = 0; b < q_; ++b) {
      const Poly pb = decode(b, p, n);
      Poly s(n);
      for (int i = 0; i < n; ++i) s[i] = (pa[i] + pb[i]) % p;
      add_[a * q_ + b] = static_cast<Elem>(encode(s, p));
      Poly prod(2 * n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      Poly r = poly_mod(prod, modulus_, p);
      r.resize(n, 0);
      mul_[a * q_ + b] = static_cast<Elem>(encode(r, p));
    }
  }

  inv_.assign(q_, 0);
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elem>(b);

  if (n % 2 == 0) {
    sqrt_order_ = 1;
    for (int i = 0; i < n / 2; ++i) sqrt_order_ *= p;
    conj_.resize(q_);
    for (int a = 0; a < q_; ++a) conj_[a] = pow(static_cast<Elem>(a), sqrt_order_);
  }
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

Elem Field::pow(Elem a, long long k) const {
  if (k < 0) return pow(inv(a), -k);
  Elem result = 1;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int Field::sqrt_order() const {
  if (sqrt_order_ == 0)
    throw std::logic_error("GF(" + std::to_string(q_) + ") has odd degree; no square root order");
  return sqrt_order_;
}

Elem Field::conjugate(Elem a) const {
  if (sqrt_order_ == 0)
    throw std::logic_error("conjugation needs an even-degree field, got GF(" +
                           std::to_string(q_) + ")");
  return conj_[a];
}

std::pair<Elem, Elem> Field::find_irreducible_quadratic() const {
  for (int b = 0; b < q_; ++b) {
    for (int c = 0; c < q_; ++c) {
      bool has_root = false;
      for (int t = 0; t < q_ && !has_root; ++t) {
        const Elem tt = static_cast<Elem>(t);
        const Elem v = add(add(mul(tt, tt), mul(static_cast<Elem>(b), tt)), static_cast<Elem>(c));
        has_root = (v == 0);
      }
      if (!has_root) return {static_cast<Elem>(b), static_cast<Elem>(c)};
    }
  }
  throw std::logic_error("no irreducible quadratic found");
}

}  // namespace polarcl

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

#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

namespace polarcl {
namespace {

TEST(Field, SmallExamples) {
  Field f2(2);
  EXPECT_EQ(f2.add(1, 1), 0);
  Field f4(4);
  EXPECT_EQ(f4.mul(2, 2), 3);
  Field f3(3);
  EXPECT_EQ(f3.inv(2), 2);
}

TEST(Field, LeastModulus) {
  EXPECT_EQ(Field(4).modulus(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(Field(8).modulus(), (std::vector<int>{1, 1, 0, 1}));
  EXPECT_EQ(Field(9).modulus(), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(Field(16).modulus(), (std::vector<int>{1, 1, 0, 0, 1}));
}

TEST(Field, RejectsBadOrders) {
  EXPECT_THROW(Field(6), std::invalid_argument);
  EXPECT_THROW(Field(1), std::invalid_argument);
  EXPECT_THROW(Field(128), std::invalid_argument);
}

TEST(Field, InverseOfZeroThrows) { EXPECT_THROW(Field(5).inv(0), std::domain_error); }

class FieldAxioms : public ::testing::TestWithParam<int> {};

TEST_P(FieldAxioms, Exhaustive) {
  const Field f(GetParam());
  const int q = f.order();
  for (int a = 0; a < q; ++a) {
    const Elem x = static_cast<Elem>(a);
    EXPECT_EQ(f.add(x, 0), x);
    EXPECT_EQ(f.mul(x, 1), x);
    EXPECT_EQ(f.add(x, f.neg(x)), 0);
    if (a != 0) EXPECT_EQ(f.mul(x, f.inv(x)), 1);
    for (int b = 0; b < q; ++b) {
      const Elem y = static_cast<Elem>(b);
      EXPECT_EQ(f.add(x, y), f.add(y, x));
      EXPECT_EQ(f.mul(x, y), f.mul(y, x));
      for (int c = 0; c < q; ++c) {
        const Elem z = static_cast<Elem>(c);
        EXPECT_EQ(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
        EXPECT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        EXPECT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, FieldAxioms, ::testing::Values(2, 3, 4, 5, 7, 8, 9, 11, 13, 16));

TEST(Field, ConjugationInGF4) {
  Field f(4);
  EXPECT_EQ(f.conjugate(0), 0);
  EXPECT_EQ(f.conjugate(1), 1);
  EXPECT_EQ(f.conjugate(2), f.mul(2, 2));
}

TEST(Field, ConjugationInGF9) {
  Field f(9);
  // t is encoded as 3 and -t as 6.
  EXPECT_EQ(f.conjugate(3), 6);
}

TEST(Field, ConjugationIsInvolutoryAutomorphism) {
  for (int q : {4, 9, 16, 25}) {
    Field f(q);
    std::set<int> fixed;
    for (int a = 0; a < q; ++a) {
      const Elem x = static_cast<Elem>(a);
      EXPECT_EQ(f.conjugate(f.conjugate(x)), x);
      if (f.conjugate(x) == x) fixed.insert(a);
      for (int b = 0; b < q; ++b) {
        const Elem y = static_cast<Elem>(b);
        EXPECT_EQ(f.conjugate(f.add(x, y)), f.add(f.conjugate(x), f.conjugate(y)));
        EXPECT_EQ(f.conjugate(f.mul(x, y)), f.mul(f.conjugate(x), f.conjugate(y)));
      }
    }
    EXPECT_EQ(static_cast<int>(fixed.size()), f.sqrt_order());
  }
}

TEST(Field, ConjugationNeedsEvenDegree) {
  EXPECT_THROW(Field(8).conjugate(1), std::logic_error);
  EXPECT_THROW(Field(3).sqrt_order(), std::logic_error);
}

TEST(Field, IrreducibleQuadratic) {
  EXPECT_EQ(Field(2).find_irreducible_quadratic(), std::make_pair(Elem{1}, Elem{1}));
  EXPECT_EQ(Field(3).find_irreducible_quadratic(), std::make_pair(Elem{0}, Elem{1}));
  // GF(4): first (b, c) in scan order without a root; x^2 + x + omega.
  EXPECT_EQ(Field(4).find_irreducible_quadratic(), std::make_pair(Elem{1}, Elem{2}));
}

}  // namespace
}  // namespace polarcl

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

#include <functional>
#include <set>
#include <vector>

#include <gtest/gtest.h>

namespace polarcl {
namespace {

// Counts k-dimensional subspaces of GF(p)^n, p prime, by closing spans of
// every k-tuple of vectors.
long long brute_subspaces(int n, int k, int p) {
  int total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  auto add = [&](int a, int b) {
    int r = 0, m = 1;
    for (int i = 0; i < n; ++i, a /= p, b /= p, m *= p) r += ((a % p + b % p) % p) * m;
    return r;
  };
  auto scale = [&](int a, int s) {
    int r = 0, m = 1;
    for (int i = 0; i < n; ++i, a /= p, m *= p) r += ((a % p) * s % p) * m;
    return r;
  };
  std::set<std::set<int>> spans;
  std::vector<int> tuple(k, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      std::set<int> span = {0};
      for (int v : tuple) {
        std::set<int> next;
        for (int u : span)
          for (int s = 0; s < p; ++s) next.insert(add(u, scale(v, s)));
        span = next;
      }
      long long size = 1;
      for (int j = 0; j < k; ++j) size *= p;
      if (static_cast<long long>(span.size()) == size) spans.insert(span);
      return;
    }
    for (int v = 0; v < total; ++v) {
      tuple[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return static_cast<long long>(spans.size());
}

TEST(GaussianBinomial, MatchesBruteForce) {
  EXPECT_EQ(gaussian_binomial(4, 2, 2), brute_subspaces(4, 2, 2));
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
  EXPECT_EQ(gaussian_binomial(3, 1, 3), brute_subspaces(3, 1, 3));
  EXPECT_EQ(gaussian_binomial(5, 2, 2), brute_subspaces(5, 2, 2));
}

TEST(GaussianBinomial, EdgeCases) {
  EXPECT_EQ(gaussian_binomial(5, 0, 3), 1);
  EXPECT_EQ(gaussian_binomial(3, 1, 2), 7);
  EXPECT_EQ(gaussian_binomial(3, 2, 2), 7);
  EXPECT_EQ(gaussian_binomial(3, -1, 2), 0);
  EXPECT_EQ(gaussian_binomial(3, 4, 2), 0);
  EXPECT_EQ(binom2(-1), 1);
  EXPECT_EQ(binom2(0), 0);
  EXPECT_EQ(binom2(4), 6);
}

TEST(QBinomialTheorem, Holds) {
  EXPECT_TRUE(q_binomial_theorem_check(0, 2, Rational(5)));
  EXPECT_TRUE(q_binomial_theorem_check(3, 2, Rational(1)));
  EXPECT_TRUE(q_binomial_theorem_check(2, 3, Rational(-1)));
  for (int n = 0; n <= 6; ++n)
    for (int q : {2, 3, 4, 5}) EXPECT_TRUE(q_binomial_theorem_check(n, q, Rational(-3, 7)));
}

TEST(PolarCounts, GeneratorCounts) {
  auto gens = [](const char* name) { return PolarCounts(PolarSpaceDescriptor::parse(name)).generator_count(); };
  EXPECT_EQ(gens("Q+(5,2)"), 30);
  EXPECT_EQ(gens("Q+(7,2)"), 270);
  EXPECT_EQ(gens("Q(4,2)"), 15);
  EXPECT_EQ(gens("Q(6,2)"), 135);
  EXPECT_EQ(gens("Q-(5,2)"), 45);
  EXPECT_EQ(gens("W(3,2)"), 15);
  EXPECT_EQ(gens("W(3,3)"), 40);
  EXPECT_EQ(gens("W(5,2)"), 135);
  EXPECT_EQ(gens("H(3,4)"), 27);
  EXPECT_EQ(gens("H(4,4)"), 297);
}

TEST(PolarCounts, PointsAndPencils) {
  const PolarCounts w(PolarSpaceDescriptor::parse("W(3,2)"));
  EXPECT_EQ(w.point_count(), 15);
  EXPECT_EQ(w.pencil_size(), 3);
  EXPECT_EQ(w.spread_size(), 5);
  EXPECT_EQ(w.lambda(), 2);
  const PolarCounts e(PolarSpaceDescriptor::parse("Q-(5,2)"));
  EXPECT_EQ(e.point_count(), 27);
  EXPECT_EQ(e.pencil_size(), 5);
  const PolarCounts h(PolarSpaceDescriptor::parse("H(4,4)"));
  EXPECT_EQ(h.point_count(), 165);
  EXPECT_EQ(h.pencil_size(), 9);
  EXPECT_EQ(h.subspaces_through(-1, 1), h.generator_count());
}

TEST(SchemeParameters, ClosedForms) {
  const auto s = SchemeParameters::from_descriptor(PolarSpaceDescriptor::parse("Q(6,2)"));
  EXPECT_EQ(s.b[0], 14);
  EXPECT_EQ(s.c[3], 7);
  EXPECT_EQ(s.c[1], 1);
  const auto e = SchemeParameters::from_descriptor(PolarSpaceDescriptor::parse("Q-(5,2)"));
  EXPECT_EQ(e.b[0], 12);
  BigInt total = 0;
  for (const auto& k : s.k) total += k;
  EXPECT_EQ(total, 135);
}

TEST(SchemeParameters, IntersectionNumbers) {
  for (const char* name : {"Q+(7,2)", "Q(6,2)", "H(4,4)", "W(3,3)"}) {
    const auto s = SchemeParameters::from_descriptor(PolarSpaceDescriptor::parse(name));
    for (int i = 0; i <= s.d; ++i) {
      EXPECT_EQ(s.intersection_number(i, i, 0), s.k[i]) << name;
      for (int k = 0; k <= s.d; ++k) {
        BigInt row = 0;
        for (int j = 0; j <= s.d; ++j) {
          row += s.intersection_number(i, j, k);
          EXPECT_GE(s.intersection_number(i, j, k), 0);
          EXPECT_EQ(s.intersection_number(i, j, k) * s.k[k], s.intersection_number(i, k, j) * s.k[j]);
        }
        EXPECT_EQ(row, s.k[i]) << name;
      }
    }
  }
}

TEST(Eigenvalues, Examples) {
  EXPECT_EQ(eigenvalue(1, 2, PolarSpaceDescriptor::parse("W(3,2)")), -2);
  EXPECT_EQ(eigenvalue(1, 3, PolarSpaceDescriptor::parse("Q+(5,2)")), -2);
  for (const char* name : {"Q+(5,2)", "Q+(7,2)", "Q(6,2)", "Q-(5,2)", "W(3,3)", "H(3,4)", "H(4,4)"}) {
    const auto desc = PolarSpaceDescriptor::parse(name);
    EXPECT_EQ(eigenvalue(0, desc.rank, desc), PolarCounts(desc).skew_count()) << name;
    EXPECT_TRUE(EigenvalueTable(desc).consistent()) << name;
  }
}

TEST(Eigenvalues, MinimalEigenspaces) {
  EXPECT_EQ(min_eigenvalue_spaces(PolarSpaceDescriptor::parse("Q+(7,3)")), (std::vector<int>{1, 3}));
  EXPECT_EQ(min_eigenvalue_spaces(PolarSpaceDescriptor::parse("Q(6,3)")), (std::vector<int>{1, 3}));
  EXPECT_EQ(min_eigenvalue_spaces(PolarSpaceDescriptor::parse("Q-(5,3)")), (std::vector<int>{1}));
  EXPECT_EQ(cl_eigenspaces(PolarSpaceDescriptor::parse("Q+(7,2)")), (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(cl_eigenspaces(PolarSpaceDescriptor::parse("W(5,2)")), (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(cl_eigenspaces(PolarSpaceDescriptor::parse("H(4,4)")), (std::vector<int>{0, 1}));
}

TEST(TwoGeneratorCounts, ClosedForms) {
  const auto q7 = PolarSpaceDescriptor::parse("Q+(7,2)");
  EXPECT_EQ(disjoint_to_two_count(q7, -1), 28);
  EXPECT_EQ(disjoint_to_two_count(q7, 1), 32);
  EXPECT_THROW(disjoint_to_two_count(q7, 0), std::invalid_argument);
  EXPECT_EQ(disjoint_to_two_count(PolarSpaceDescriptor::parse("H(3,4)"), -1), 10);
  EXPECT_THROW(disjoint_to_two_count(PolarSpaceDescriptor::parse("W(3,2)"), -1), std::invalid_argument);
  EXPECT_EQ(class_disjoint_to_two_factor(2, 2), 4);
}

TEST(DistanceProfile, Examples) {
  const auto e = PolarSpaceDescriptor::parse("Q-(5,2)");
  EXPECT_EQ(distance_profile(e, 1, 1, true), 4);
  EXPECT_EQ(distance_profile(e, 1, 0, true), 1);
  EXPECT_EQ(distance_profile(e, 1, 0, false), 0);
  EXPECT_EQ(class_distance_profile(4, 2, 1, 1, false), 7);
  EXPECT_EQ(class_distance_profile(4, 2, 3, 0, true), 1);
  // Profiles of the full space sum to the generator count.
  for (const char* name : {"Q-(5,2)", "Q(4,3)", "H(4,4)", "Q+(5,2)"}) {
    const auto desc = PolarSpaceDescriptor::parse(name);
    const PolarCounts pc(desc);
    const BigInt x = pc.spread_size();
    BigInt sum = 0;
    for (int i = 0; i <= desc.rank; ++i) sum += distance_profile(desc, x, i, true);
    EXPECT_EQ(sum, pc.generator_count()) << name;
  }
}

TEST(RegularSystems, Size) {
  EXPECT_EQ(regular_system_size(PolarSpaceDescriptor::parse("W(3,2)"), 1), 5);
  EXPECT_EQ(regular_system_size(PolarSpaceDescriptor::parse("Q+(5,2)"), 2), 10);
}

}  // namespace
}  // namespace polarcl

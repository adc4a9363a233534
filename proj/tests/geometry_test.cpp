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

#include "polarcl/geometry.hpp"

#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "polarcl/combinatorics.hpp"

namespace polarcl {
namespace {

Vec vec(std::initializer_list<int> xs) {
  Vec v(static_cast<int>(xs.size()));
  int i = 0;
  for (int x : xs) v(i++) = static_cast<Elem>(x);
  return v;
}

Mat rows(std::initializer_list<std::initializer_list<int>> rs) {
  Mat m(static_cast<int>(rs.size()), static_cast<int>(rs.begin()->size()));
  int i = 0;
  for (const auto& r : rs) m.row(i++) = vec(r).transpose();
  return m;
}

TEST(Descriptor, ParametersAndNames) {
  const auto h = PolarSpaceDescriptor::parse("H(4,4)");
  EXPECT_EQ(h.family, Family::kHermitianEven);
  EXPECT_EQ(h.rank, 2);
  EXPECT_EQ(h.twice_e(), 3);
  EXPECT_EQ(h.name(), "H(4,4)");
  EXPECT_EQ(PolarSpaceDescriptor::parse("Q-(5,2)").twice_e(), 4);
  EXPECT_EQ(PolarSpaceDescriptor::parse("Q+(7,2)").type(), SpaceType::kII);
  EXPECT_EQ(PolarSpaceDescriptor::parse("Q(6,2)").type(), SpaceType::kIII);
  EXPECT_EQ(PolarSpaceDescriptor::parse("W(5,2)").type(), SpaceType::kIII);
  EXPECT_EQ(PolarSpaceDescriptor::parse("W(5,3)").type(), SpaceType::kIV);
  EXPECT_EQ(PolarSpaceDescriptor::parse("W(3,3)").type(), SpaceType::kI);
  EXPECT_THROW(PolarSpaceDescriptor::parse("H(3,2)"), std::invalid_argument);
  EXPECT_THROW(PolarSpaceDescriptor::parse("Q+(4,2)"), std::invalid_argument);
  EXPECT_THROW(PolarSpaceDescriptor::parse("W(3,6)"), std::invalid_argument);
}

TEST(Form, Evaluation) {
  const PolarGeometry q5(PolarSpaceDescriptor::parse("Q+(5,2)"));
  EXPECT_EQ(q5.evaluate_form(vec({1, 0, 0, 0, 0, 0})), 0);
  EXPECT_EQ(q5.evaluate_form(vec({1, 1, 0, 0, 0, 0})), 1);
  const PolarGeometry h3(PolarSpaceDescriptor::parse("H(3,4)"));
  EXPECT_EQ(h3.evaluate_form(vec({1, 2, 0, 0})), 0);
  EXPECT_THROW(h3.evaluate_form(vec({1, 0, 0})), std::invalid_argument);
  const PolarGeometry w(PolarSpaceDescriptor::parse("W(3,3)"));
  EXPECT_EQ(w.evaluate_form(vec({1, 2, 1, 0})), 0);
}

TEST(Form, HermitianPairingIsConjugateSymmetric) {
  const PolarGeometry h(PolarSpaceDescriptor::parse("H(3,4)"));
  const Field& f = h.field();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(0, 3);
  for (int t = 0; t < 200; ++t) {
    Vec u(4), v(4);
    for (int i = 0; i < 4; ++i) {
      u(i) = static_cast<Elem>(d(rng));
      v(i) = static_cast<Elem>(d(rng));
    }
    EXPECT_EQ(h.pair(u, v), f.conjugate(h.pair(v, u)));
  }
}

TEST(Form, SymplecticBasisConvention) {
  const PolarGeometry w(PolarSpaceDescriptor::parse("W(5,3)"));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec e = Vec::Zero(6), ep = Vec::Zero(6);
      e(i) = 1;
      ep(3 + j) = 1;
      EXPECT_EQ(w.pair(e, ep), i == j ? 1 : 0);
    }
}

TEST(Isotropy, Examples) {
  const PolarGeometry w(PolarSpaceDescriptor::parse("W(3,2)"));
  const Field& f = w.field();
  EXPECT_TRUE(w.is_totally_isotropic(Subspace::span(f, rows({{1, 0, 0, 0}, {0, 1, 0, 0}}))));
  EXPECT_FALSE(w.is_totally_isotropic(Subspace::span(f, rows({{1, 0, 0, 0}, {0, 0, 1, 0}}))));
  const PolarGeometry q(PolarSpaceDescriptor::parse("Q+(5,2)"));
  EXPECT_FALSE(q.is_totally_isotropic(Subspace::span(f, rows({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}}))));
  EXPECT_TRUE(q.is_totally_isotropic(Subspace::point(f, vec({1, 0, 0, 0, 0, 0}))));
}

// Brute-force isotropic point count: nonzero vectors with Q(v) = 0, divided
// by q - 1.
long long brute_points(const PolarGeometry& g) {
  const int n = g.vector_size();
  const int q = g.field().order();
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  long long count = 0;
  for (long long code = 1; code < total; ++code) {
    Vec v(n);
    long long c = code;
    for (int i = 0; i < n; ++i, c /= q) v(i) = static_cast<Elem>(c % q);
    if (g.evaluate_form(v) == 0) ++count;
  }
  return count / (q - 1);
}

TEST(Isotropy, PointCounts) {
  for (const char* name : {"Q+(3,2)", "Q+(5,2)", "Q+(5,3)", "Q(4,2)", "Q(4,3)", "Q(6,2)", "Q-(3,3)", "Q-(5,2)",
                           "Q-(5,3)", "W(3,2)", "W(3,3)", "W(5,2)", "H(3,4)", "H(4,4)", "H(2,9)"}) {
    const auto desc = PolarSpaceDescriptor::parse(name);
    const PolarGeometry g(desc);
    const long long formula = to_int64(PolarCounts(desc).point_count());
    EXPECT_EQ(brute_points(g), formula) << name;
    EXPECT_EQ(static_cast<long long>(g.isotropic_points().size()), formula) << name;
  }
}

TEST(Perp, Examples) {
  const PolarGeometry w(PolarSpaceDescriptor::parse("W(3,2)"));
  const Field& f = w.field();
  Mat all = Mat::Identity(4, 4);
  EXPECT_EQ(w.perp(Subspace::span(f, all)).dimension(), -1);
  const Subspace p = Subspace::point(f, vec({1, 0, 1, 1}));
  const Subspace pp = w.perp(p);
  EXPECT_EQ(pp.dimension(), 2);
  EXPECT_TRUE(pp.contains(f, vec({1, 0, 1, 1})));
}

TEST(Perp, NonIsotropicPointOfParabolicQuadric) {
  // Odd q: the perp of a non-isotropic point is a non-degenerate section.
  const PolarGeometry q3(PolarSpaceDescriptor::parse("Q(4,3)"));
  const Field& f3 = q3.field();
  for (const Vec& v : projective_points(f3, 5)) {
    if (q3.is_isotropic(v)) continue;
    const Subspace h = q3.perp(Subspace::point(f3, v));
    ASSERT_EQ(h.dimension(), 3);
    const Vec fun = q3.functional(v);
    const long long c = q3.section_point_count(fun);
    EXPECT_TRUE(c == 16 || c == 10) << c;
    EXPECT_NE(q3.classify_hyperplane_section(fun), SectionType::kTangent);
  }
  // Even q: every perp contains the nucleus, so the section is a cone.
  const PolarGeometry q2(PolarSpaceDescriptor::parse("Q(4,2)"));
  const Field& f2 = q2.field();
  for (const Vec& v : projective_points(f2, 5)) {
    if (q2.is_isotropic(v) || v == vec({1, 0, 0, 0, 0})) continue;
    const Vec fun = q2.functional(v);
    EXPECT_EQ(q2.section_point_count(fun), 7);
    EXPECT_EQ(q2.classify_hyperplane_section(fun), SectionType::kTangent);
  }
}

TEST(Perp, InvolutionAndInclusionReversal) {
  for (const char* name : {"W(3,3)", "Q+(5,2)", "H(3,4)", "Q-(5,2)"}) {
    const PolarGeometry g(PolarSpaceDescriptor::parse(name));
    const Field& f = g.field();
    const int n = g.vector_size();
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(0, f.order() - 1);
    for (int t = 0; t < 40; ++t) {
      const int r = 1 + t % (n - 1);
      Mat m(r, n);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = static_cast<Elem>(d(rng));
      const Subspace s = Subspace::span(f, m);
      const Subspace sp = g.perp(s);
      EXPECT_EQ(sp.dimension(), n - 2 - s.dimension()) << name;
      EXPECT_EQ(g.perp(sp), s) << name;
      // A larger subspace has a smaller perp.
      if (s.dimension() > 0) {
        const Subspace sub = Subspace::span(f, s.basis().topRows(1));
        const Subspace subp = g.perp(sub);
        for (int i = 0; i < sp.basis().rows(); ++i)
          EXPECT_TRUE(subp.contains(f, sp.basis().row(i).transpose())) << name;
      }
    }
  }
}

TEST(Sections, ParabolicQuadricCounts) {
  const PolarGeometry g(PolarSpaceDescriptor::parse("Q(4,2)"));
  int hyper = 0, ell = 0, tan = 0;
  for (const Vec& h : projective_points(g.field(), 5)) {
    const long long c = g.section_point_count(h);
    switch (g.classify_hyperplane_section(h)) {
      case SectionType::kHyperbolic: ++hyper; EXPECT_EQ(c, 9); break;
      case SectionType::kElliptic: ++ell; EXPECT_EQ(c, 5); break;
      case SectionType::kTangent: ++tan; EXPECT_EQ(c, 7); break;
      default: ADD_FAILURE();
    }
  }
  EXPECT_EQ(hyper + ell + tan, 31);
  EXPECT_GT(hyper, 0);
  EXPECT_GT(ell, 0);
  EXPECT_EQ(tan, 15);
}

TEST(Sections, TangentAtIsotropicPoint) {
  const PolarGeometry g(PolarSpaceDescriptor::parse("Q(6,2)"));
  for (const Vec& p : g.isotropic_points())
    EXPECT_EQ(g.classify_hyperplane_section(g.functional(p)), SectionType::kTangent);
  EXPECT_THROW(g.classify_hyperplane_section(Vec::Zero(7)), std::invalid_argument);
}

TEST(Sections, EllipticAndHermitian) {
  const PolarGeometry e(PolarSpaceDescriptor::parse("Q-(5,2)"));
  int parabolic = 0;
  for (const Vec& h : projective_points(e.field(), 6))
    if (e.classify_hyperplane_section(h) == SectionType::kParabolic) ++parabolic;
  EXPECT_GT(parabolic, 0);
  const PolarGeometry h(PolarSpaceDescriptor::parse("H(4,4)"));
  int herm = 0;
  for (const Vec& v : projective_points(h.field(), 5))
    if (h.classify_hyperplane_section(v) == SectionType::kHermitian) ++herm;
  // Hyperplanes not tangent: all minus the 165 tangent ones.
  EXPECT_EQ(herm, 341 - 165);
}

TEST(Subspace, SerializationRoundTrip) {
  const Field f(3);
  const Subspace s = Subspace::span(f, rows({{0, 2, 1, 0}, {1, 1, 0, 2}}));
  EXPECT_EQ(s.serialize(), "1,0,1,2;0,1,2,0");
  EXPECT_EQ(Subspace::parse(f, s.serialize(), 4), s);
  try {
    Subspace::parse(f, "0,2,1,0;1,1,0,2", 4);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("1,0,1,2;0,1,2,0"), std::string::npos);
  }
  EXPECT_THROW(Subspace::parse(f, "1,0,3,0", 4), std::invalid_argument);
  EXPECT_THROW(Subspace::parse(f, "1,0,0", 4), std::invalid_argument);
}

}  // namespace
}  // namespace polarcl

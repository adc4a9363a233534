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

#include "polarcl/scheme.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <string>

#include <gtest/gtest.h>

namespace polarcl {
namespace {

const SchemeContext& context(const std::string& name) {
  static std::map<std::string, std::unique_ptr<SchemeContext>> cache;
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<SchemeContext>(PolarSpaceDescriptor::parse(name));
  return *slot;
}

IntVector ones(int n) { return IntVector::Ones(n); }

class SchemeSpaces : public ::testing::TestWithParam<std::string> {};

TEST_P(SchemeSpaces, DistanceRegular) {
  const auto r = verify_distance_regularity(context(GetParam()));
  EXPECT_TRUE(r.ok) << r.detail;
  EXPECT_EQ(r.c[1], 1);
}

TEST_P(SchemeSpaces, BoseMesner) {
  std::string detail;
  EXPECT_TRUE(verify_bose_mesner(context(GetParam()), &detail)) << detail;
}

TEST_P(SchemeSpaces, Spectrum) {
  const SchemeContext& ctx = context(GetParam());
  const SpectrumReport r = verify_spectrum(ctx);
  EXPECT_TRUE(r.eigen_ok);
  EXPECT_TRUE(r.orthogonal_ok);
  EXPECT_TRUE(r.ranks_ok);
  EXPECT_TRUE(r.complete);
  // Multiplicity of P_{j,1} as an eigenvalue of the symmetric A_1, by
  // fraction-free elimination on the smaller schemes.
  if (ctx.size() > 150) return;
  for (int j = 0; j <= ctx.diameter(); ++j) {
    IntMatrix shifted = ctx.adjacency(1);
    shifted.diagonal().array() -= ctx.eigenvalues().at64(j, 1);
    EXPECT_EQ(ctx.size() - bareiss_rank(shifted), r.dimensions[j]) << "j = " << j;
  }
}

TEST_P(SchemeSpaces, RowSpaceOfGram) { EXPECT_TRUE(verify_rowspace_gram(context(GetParam()).point_incidence())); }

TEST_P(SchemeSpaces, Membership) {
  const SchemeContext& ctx = context(GetParam());
  const int d = ctx.diameter();
  EXPECT_TRUE(ctx.eigenspace_membership(ones(ctx.size()), {0}));
  EXPECT_FALSE(ctx.eigenspace_membership(ones(ctx.size()), {1}));
  const IntVector pencil = ctx.point_incidence().row(0).transpose();
  EXPECT_TRUE(ctx.eigenspace_membership(pencil, {0, 1}));
  EXPECT_FALSE(ctx.eigenspace_membership(pencil, {0}));
  std::vector<int> all;
  for (int j = 0; j <= d; ++j) all.push_back(j);
  IntVector e = IntVector::Zero(ctx.size());
  e(0) = 1;
  EXPECT_TRUE(ctx.eigenspace_membership(e, all));
  EXPECT_FALSE(ctx.eigenspace_membership(e, {0, 1}));
}

INSTANTIATE_TEST_SUITE_P(Small, SchemeSpaces,
                         ::testing::Values("W(3,2)", "Q(4,2)", "Q+(3,2)", "Q+(5,2)", "Q-(5,2)", "Q(6,2)", "W(5,2)",
                                           "H(3,4)", "Q(4,3)", "W(3,3)", "H(4,4)", "Q+(7,2)"),
                         [](const auto& info) {
                           std::string s;
                           for (char c : info.param)
                             s += std::isalnum(static_cast<unsigned char>(c)) ? c : (c == '+' ? 'p' : c == '-' ? 'm' : '_');
                           return s;
                         });

TEST(Distance, SymplecticQuadrangle) {
  const SchemeContext& ctx = context("W(3,2)");
  int meet = 0, disjoint = 0;
  for (int g = 0; g < ctx.size(); ++g) {
    EXPECT_EQ(ctx.distance(g, g), 0);
    const Bitset common = ctx.instance().generator_points(0) & ctx.instance().generator_points(g);
    if (g == 0) continue;
    if (common.count() == 1) {
      EXPECT_EQ(ctx.distance(0, g), 1);
      ++meet;
    } else {
      EXPECT_EQ(common.count(), 0u);
      EXPECT_EQ(ctx.distance(0, g), 2);
      ++disjoint;
    }
  }
  EXPECT_EQ(meet, 6);
  EXPECT_EQ(disjoint, 8);
}

TEST(DistanceRegularity, ParameterValues) {
  const auto q6 = verify_distance_regularity(context("Q(6,2)"));
  EXPECT_EQ(q6.b[0], 14);
  EXPECT_EQ(q6.c[3], 7);
  const auto qm = verify_distance_regularity(context("Q-(5,2)"));
  EXPECT_EQ(qm.b[0], 12);
}

TEST(Incidence, LevelsMatchSubspaces) {
  const SchemeContext& ctx = context("Q(6,2)");
  EXPECT_EQ(ctx.incidence(0).rows(), 1);
  EXPECT_EQ(ctx.incidence(1), ctx.point_incidence());
  const IntMatrix c2 = ctx.incidence(2);
  EXPECT_EQ(c2.rows(), static_cast<Eigen::Index>(ctx.instance().subspaces(1).size()));
  // Every line of Q(6,2) lies on q + 1 = 3 planes.
  for (Eigen::Index r = 0; r < c2.rows(); ++r) EXPECT_EQ(c2.row(r).sum(), 3);
  EXPECT_THROW(ctx.incidence(4), std::invalid_argument);
}

TEST(HyperbolicClasses, MatrixB) {
  const SchemeContext& ctx = context("Q(6,2)");
  const IntMatrix& b = ctx.build_B();
  EXPECT_EQ(b.rows(), 72);
  for (Eigen::Index r = 0; r < b.rows(); ++r) EXPECT_EQ(b.row(r).sum(), 15);
  for (Eigen::Index c = 0; c < b.cols(); ++c) EXPECT_EQ(b.col(c).sum(), 8);
  EXPECT_TRUE(verify_hyperbolic_gram(ctx));
  EXPECT_TRUE(verify_rowspace_gram(b));
  const RowSpace& rs = ctx.hyperbolic_rowspace();
  const IntMatrix& a = ctx.point_incidence();
  for (Eigen::Index p = 0; p < a.rows(); ++p) EXPECT_TRUE(rs.contains(a.row(p).transpose()));
}

TEST(HyperbolicClasses, SymplecticModel) {
  const SchemeContext& ctx = context("W(5,2)");
  EXPECT_TRUE(verify_hyperbolic_gram(ctx));
}

TEST(HyperbolicClasses, ClassDifferenceLiesInTopEigenspace) {
  const SchemeContext& ctx = context("Q(6,2)");
  const auto& classes = ctx.hyperbolic_classes();
  ASSERT_GE(classes.size(), 2u);
  IntVector diff = IntVector::Zero(ctx.size());
  for (int g : classes[0].members) diff(g) += 1;
  for (int g : classes[1].members) diff(g) -= 1;
  EXPECT_TRUE(ctx.eigenspace_membership(diff, {3}));
  EXPECT_FALSE(ctx.eigenspace_membership(diff, {0, 1}));
  IntVector sum = IntVector::Zero(ctx.size());
  for (int g : classes[0].members) sum(g) = 1;
  EXPECT_TRUE(ctx.eigenspace_membership(sum, {0, 1, 2, 3}));
  EXPECT_FALSE(ctx.point_rowspace().contains(sum));
  EXPECT_TRUE(ctx.hyperbolic_rowspace().contains(sum));
}

TEST(HyperbolicClasses, RejectedOnOtherTypes) {
  EXPECT_THROW(context("Q+(5,2)").build_B(), std::invalid_argument);
  EXPECT_THROW(context("W(3,3)").build_B(), std::invalid_argument);
}

TEST(ImageMembership, HyperbolicClassVector) {
  const SchemeContext& ctx = context("Q+(5,2)");
  const auto& labels = ctx.instance().class_labels();
  IntVector latin = IntVector::Zero(ctx.size());
  for (int g = 0; g < ctx.size(); ++g) latin(g) = labels[g] == 0 ? 1 : 0;
  EXPECT_FALSE(image_membership(ctx.point_incidence(), latin));
  EXPECT_TRUE(image_membership(ctx.point_incidence(), IntVector::Zero(ctx.size())));
  EXPECT_TRUE(image_membership(ctx.point_incidence(), ctx.point_incidence().row(3).transpose()));
  EXPECT_TRUE(ctx.eigenspace_membership(latin, {0, 3}));
  EXPECT_FALSE(ctx.eigenspace_membership(latin, {0, 1}));
}

TEST(ImageMembership, ClassPencilsOnEvenRank) {
  const SchemeContext& ctx = context("Q+(7,2)");
  const IntMatrix& b = ctx.class_point_incidence();
  EXPECT_EQ(b.rows(), 2 * ctx.instance().num_points());
  EXPECT_TRUE(verify_rowspace_gram(b));
  const auto& labels = ctx.instance().class_labels();
  IntVector latin = IntVector::Zero(ctx.size());
  for (int g = 0; g < ctx.size(); ++g) latin(g) = labels[g] == 0 ? 1 : 0;
  EXPECT_FALSE(ctx.point_rowspace().contains(latin));
  EXPECT_TRUE(ctx.class_point_rowspace().contains(latin));
}

TEST(RestrictedScheme, OneClassOfQPlus7) {
  const SchemeContext& ctx = context("Q+(7,2)");
  const ClassScheme& cs = ctx.restricted_scheme(0);
  EXPECT_EQ(cs.size(), 135);
  EXPECT_EQ(cs.diameter(), 2);
  EXPECT_EQ(cs.adjacency(0), IntMatrix(IntMatrix::Identity(135, 135)));
  // Brute-force degree: class members meeting member 0 in a line.
  const int g0 = cs.members()[0];
  int degree = 0;
  for (int g : cs.members())
    if (ctx.instance().intersection_dimension(g0, g) == 1) ++degree;
  EXPECT_EQ(cs.adjacency(1).row(0).sum(), degree);
  EXPECT_EQ(BigInt(degree), ctx.parameters().k[2]);
  EXPECT_TRUE(cs.first_relation_separates());
  EXPECT_TRUE(cs.eigenspace_membership(ones(135), {0}));
  const ClassSpectrumReport r = verify_class_spectrum(cs);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.dim_v0, 1);
  EXPECT_EQ(r.rank_point_incidence, r.dim_v0 + r.dim_v1);
  EXPECT_EQ(&ctx.restricted_scheme(0), &cs);
}

TEST(RestrictedScheme, Rejections) {
  EXPECT_THROW(context("Q(4,2)").restricted_scheme(0), std::invalid_argument);
  EXPECT_THROW(context("Q+(5,2)").restricted_scheme(2), std::invalid_argument);
}

TEST(Annihilator, SeparationRules) {
  const SchemeContext& ctx = context("Q(6,2)");
  std::vector<std::vector<BigInt>> p(4, std::vector<BigInt>(4));
  for (int j = 0; j <= 3; ++j)
    for (int i = 0; i <= 3; ++i) p[j][i] = ctx.eigenvalues().at(j, i);
  const auto a = make_annihilator(p, {0, 2});
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->size(), 2u);
  EXPECT_THROW(make_annihilator(p, {5}), std::invalid_argument);
  std::vector<std::vector<BigInt>> flat(2, std::vector<BigInt>{1, 3});
  EXPECT_FALSE(make_annihilator(flat, {0}).has_value());
}

}  // namespace
}  // namespace polarcl

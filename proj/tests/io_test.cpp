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

#include "polarcl/io.hpp"

#include <gtest/gtest.h>

namespace polarcl {
namespace {

TEST(IO, DescriptorRoundTrip) {
  for (const char* name : {"Q+(7,2)", "Q(6,2)", "Q-(5,2)", "W(3,3)", "H(3,4)", "H(4,4)"}) {
    const PolarSpaceDescriptor d = PolarSpaceDescriptor::parse(name);
    EXPECT_EQ(descriptor_from_json(to_json(d)), d) << name;
    Json by_code;
    by_code["family"] = d.family == Family::kHermitianEven ? "HE" : d.family_code();
    by_code["rank"] = d.rank;
    by_code["q"] = d.q;
    EXPECT_EQ(descriptor_from_json(by_code), d) << name;
  }
  EXPECT_THROW(descriptor_from_json(Json::parse(R"({"family":"X","rank":2,"q":2})")), std::invalid_argument);
  EXPECT_THROW(descriptor_from_json(Json::parse(R"({"rank":2})")), std::invalid_argument);
  EXPECT_THROW(descriptor_from_json(Json::parse(R"([1])")), std::invalid_argument);
}

TEST(IO, SpaceJsonVerifies) {
  const PolarSpaceInstance inst(PolarSpaceDescriptor::parse("Q+(5,2)"));
  Json j = space_to_json(inst);
  EXPECT_EQ(j["counts"], Json::parse("[35,105,30]"));
  EXPECT_EQ(j["class_labels"].size(), 30u);
  const Json reread = Json::parse(j.dump());
  EXPECT_EQ(descriptor_from_json(reread), inst.descriptor());
  EXPECT_NO_THROW(verify_space_json(reread, inst));
  std::swap(j["generators"][0], j["generators"][1]);
  EXPECT_THROW(verify_space_json(j, inst), std::runtime_error);
}

TEST(IO, SetFiles) {
  const PolarSpaceInstance inst(PolarSpaceDescriptor::parse("W(3,2)"));
  const std::vector<int> idx = parse_set("# pencil\nidx: 4, 1\nidx: 9\n\n", inst);
  EXPECT_EQ(idx, (std::vector<int>{1, 4, 9}));
  EXPECT_EQ(parse_set(format_set(idx), inst), idx);
  const std::string rows = inst.generators()[7].serialize() + "\n" + inst.generators()[2].serialize() + "\n";
  EXPECT_EQ(parse_set(rows, inst), (std::vector<int>{2, 7}));
  EXPECT_THROW(parse_set("idx: 15", inst), std::invalid_argument);
  EXPECT_THROW(parse_set("idx: 1 1", inst), std::invalid_argument);
  EXPECT_THROW(parse_set("idx: 1x", inst), std::invalid_argument);
  // A single point is not a generator.
  EXPECT_THROW(parse_set(inst.subspaces(0)[0].serialize(), inst), std::invalid_argument);
}

TEST(IO, ReportAndResults) {
  const SchemeContext sc(PolarSpaceDescriptor::parse("W(3,2)"));
  const CLContext ctx(sc);
  const Construction p = point_pencil(ctx, 0);
  const Json r = to_json(check(ctx, p.set), ctx);
  EXPECT_EQ(r["x"], "1");
  EXPECT_EQ(r["cameron_liebler"], true);
  EXPECT_EQ(r["spreads"]["verdict"], "vacuous");
  EXPECT_EQ(r["image_test"]["verdict"], "pass");

  const SearchResult s = find_spreads(ctx);
  const Json res = to_json(s, ctx);
  EXPECT_EQ(res["count"], 6);
  std::vector<std::vector<int>> spreads;
  for (const auto& c : res["certificates"]) spreads.push_back(c["generators"].get<std::vector<int>>());
  EXPECT_EQ(spreads_from_json(spreads_to_json(spreads)), spreads);
  EXPECT_THROW(spreads_from_json(Json::parse("{}")), std::invalid_argument);
}

}  // namespace
}  // namespace polarcl

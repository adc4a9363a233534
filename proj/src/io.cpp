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

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polarcl {
namespace {

std::vector<int> members(const Bitset& s) {
  std::vector<int> out;
  for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

Json outcome_json(const TestOutcome& t, const CLContext& ctx) {
  Json j;
  j["verdict"] = to_string(t.verdict);
  j["witness"] = t.witness >= 0 ? ctx.global_index(t.witness) : -1;
  if (!t.detail.empty()) j["detail"] = t.detail;
  return j;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Json to_json(const RunManifest& m) {
  Json j;
  j["command"] = m.command;
  j["space"] = m.space;
  j["seed"] = m.seed;
  j["version"] = kVersion;
  j["complete"] = m.complete;
  j["seconds"] = m.seconds;
  return j;
}

Json to_json(const PolarSpaceDescriptor& d) {
  Json j;
  j["name"] = d.name();
  j["family"] = d.family_code();
  j["rank"] = d.rank;
  j["q"] = d.q;
  j["twice_e"] = d.twice_e();
  j["type"] = to_string(d.type());
  return j;
}

Json to_json(const CLReport& r, const CLContext& ctx) {
  Json j;
  j["type"] = r.type_label;
  j["image"] = r.image_name;
  j["size"] = r.size;
  j["x"] = r.x.str();
  j["cameron_liebler"] = r.is_cl();
  j["consistent"] = r.consistent();
  j["disjointness"] = outcome_json(r.disjointness, ctx);
  j["eigenvector"] = outcome_json(r.eigenvector, ctx);
  j["eigenspace"] = outcome_json(r.eigenspace, ctx);
  j["image_test"] = outcome_json(r.image, ctx);
  j["spreads"] = outcome_json(r.spreads, ctx);
  return j;
}

Json to_json(const SearchResult& r, const CLContext& ctx) {
  Json j;
  Json certs = Json::array();
  for (std::size_t i = 0; i < r.sets.size(); ++i) {
    Json c;
    c["generators"] = ctx.to_global(r.sets[i]);
    if (i < r.labels.size()) c["label"] = r.labels[i];
    certs.push_back(std::move(c));
  }
  j["count"] = r.sets.size();
  j["certificates"] = std::move(certs);
  j["complete"] = r.complete;
  j["nodes"] = r.nodes;
  j["seconds"] = r.seconds;
  return j;
}

Json to_json(const SearchResult& r) {
  Json j;
  Json certs = Json::array();
  for (std::size_t i = 0; i < r.sets.size(); ++i) {
    Json c;
    c["members"] = members(r.sets[i]);
    if (i < r.labels.size()) c["label"] = r.labels[i];
    certs.push_back(std::move(c));
  }
  j["count"] = r.sets.size();
  j["certificates"] = std::move(certs);
  j["complete"] = r.complete;
  j["nodes"] = r.nodes;
  j["seconds"] = r.seconds;
  return j;
}

Json space_to_json(const PolarSpaceInstance& inst) {
  Json j;
  j["descriptor"] = to_json(inst.descriptor());
  Json counts = Json::array();
  for (int k = 0; k < inst.rank(); ++k) counts.push_back(inst.subspaces(k).size());
  j["counts"] = std::move(counts);
  Json points = Json::array();
  for (const Vec& v : inst.points()) {
    std::vector<int> row(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) row[i] = v[i];
    points.push_back(std::move(row));
  }
  j["points"] = std::move(points);
  Json gens = Json::array();
  for (const Subspace& g : inst.generators()) gens.push_back(g.serialize());
  j["generators"] = std::move(gens);
  if (inst.descriptor().family == Family::kHyperbolic) j["class_labels"] = inst.class_labels();
  return j;
}

PolarSpaceDescriptor descriptor_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("space: expected a JSON object");
  if (j.contains("descriptor")) return descriptor_from_json(j.at("descriptor"));
  try {
    if (j.contains("name")) return PolarSpaceDescriptor::parse(j.at("name").get<std::string>());
    if (j.contains("family") && j.contains("rank") && j.contains("q"))
      return PolarSpaceDescriptor::from_code(j.at("family").get<std::string>(), j.at("rank").get<int>(),
                                             j.at("q").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("space: ") + e.what());
  }
  throw std::invalid_argument("space: needs family, rank and q, or name");
}

void verify_space_json(const Json& j, const PolarSpaceInstance& inst) {
  if (!j.contains("generators")) return;
  const Json& gens = j.at("generators");
  if (!gens.is_array() || gens.size() != inst.generators().size())
    throw std::runtime_error("space: generator count differs from the enumeration");
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].get<std::string>() != inst.generators()[i].serialize())
      throw std::runtime_error("space: generator " + std::to_string(i) + " differs from the enumeration");
}

std::vector<int> parse_set(const std::string& text, const PolarSpaceInstance& inst) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "set line " + std::to_string(lineno) + ": ";
    if (line.rfind("idx:", 0) == 0) {
      std::string rest = line.substr(4);
      std::replace(rest.begin(), rest.end(), ',', ' ');
      std::istringstream nums(rest);
      std::string tok;
      while (nums >> tok) {
        std::size_t used = 0;
        int g = -1;
        try {
          g = std::stoi(tok, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != tok.size() || g < 0 || g >= inst.num_generators())
          throw std::invalid_argument(where + "bad generator index '" + tok + "'");
        out.push_back(g);
      }
      continue;
    }
    const Subspace s = Subspace::parse(inst.field(), line, inst.geometry().vector_size());
    if (s.dimension() != inst.rank() - 1) throw std::invalid_argument(where + "not a generator");
    const int g = inst.subspace_index(s);
    if (g < 0) throw std::invalid_argument(where + "not a generator of " + inst.descriptor().name());
    out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::invalid_argument("set: repeated generator");
  return out;
}

std::string format_set(const std::vector<int>& generators) {
  std::string out = "idx:";
  for (int g : generators) out += " " + std::to_string(g);
  return out + "\n";
}

std::vector<std::vector<int>> spreads_from_json(const Json& j) {
  try {
    if (j.contains("certificates")) {
      std::vector<std::vector<int>> out;
      for (const auto& c : j.at("certificates")) out.push_back(c.at("generators").get<std::vector<int>>());
      return out;
    }
    if (j.contains("result")) return spreads_from_json(j.at("result"));
    return j.at("spreads").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("spreads: ") + e.what());
  }
}

Json spreads_to_json(const std::vector<std::vector<int>>& spreads) {
  Json j;
  j["spreads"] = spreads;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace polarcl

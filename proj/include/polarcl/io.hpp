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

#ifndef POLARCL_IO_HPP_
#define POLARCL_IO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "polarcl/search.hpp"

namespace polarcl {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

struct RunManifest {
  std::vector<std::string> command;
  std::string space;
  std::uint64_t seed = 0;
  bool complete = true;
  double seconds = 0;
};

Json to_json(const RunManifest& m);
Json to_json(const PolarSpaceDescriptor& d);
// Witnesses and certificates are written as global generator indices.
Json to_json(const CLReport& r, const CLContext& ctx);
Json to_json(const SearchResult& r, const CLContext& ctx);
Json to_json(const SearchResult& r);

// Descriptor, counts and the canonical point and generator lists.
Json space_to_json(const PolarSpaceInstance& inst);
// Accepts {"name"} or {"family", "rank", "q"} with the codes of
// PolarSpaceDescriptor::from_code; a stored "descriptor" object is unwrapped. Throws std::invalid_argument on malformed input.
PolarSpaceDescriptor descriptor_from_json(const Json& j);
// Throws std::runtime_error if the stored generator list differs from the
// canonical enumeration.
void verify_space_json(const Json& j, const PolarSpaceInstance& inst);

// Set files hold either "idx:" lines of generator indices in canonical
// order, or one subspace per line as rows separated by ';' and entries by
// ','. Blank lines and '#' comments are ignored. Returns global indices.
std::vector<int> parse_set(const std::string& text, const PolarSpaceInstance& inst);
std::string format_set(const std::vector<int>& generators);

// {"spreads": [[global indices], ...]}; the certificates of a spread search
// result are read as well.
std::vector<std::vector<int>> spreads_from_json(const Json& j);
Json spreads_to_json(const std::vector<std::vector<int>>& spreads);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace polarcl

#endif  // POLARCL_IO_HPP_

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

#ifndef POLARCL_SEARCH_HPP_
#define POLARCL_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarcl/clsets.hpp"
#include "polarcl/gq.hpp"

namespace polarcl {

struct SearchBudget {
  long long max_nodes = 200'000'000;
  // Stop after this many results; 0 means no limit.
  std::size_t max_results = 0;

  // Default budget, with max_nodes taken from POLARCL_BUDGET_NODES if set.
  static SearchBudget from_environment();
};

struct SearchResult {
  // Canonical order: ascending by sorted member list.
  std::vector<Bitset> sets;
  std::vector<std::string> labels;
  // Whole search space explored.
  bool complete = true;
  long long nodes = 0;
  double seconds = 0;
};

// Partitions of the point set into generators of the universe, by exact
// cover with the fewest-candidates column rule. With anchor >= 0 only
// spreads containing that generator (local index) are listed.
SearchResult find_spreads(const CLContext& ctx, const SearchBudget& budget = {}, int anchor = -1);

// m-regular systems whose characteristic vector lies in the sum of the
// eigenspaces in S (no filter when S is empty).
SearchResult find_regular_systems(const CLContext& ctx, int m, const std::vector<int>& S,
                                  const SearchBudget& budget = {});

// All x-tight sets for 1 <= x <= x_max, labelled by classify_tight_set.
SearchResult find_tight_sets(const GeneralizedQuadrangle& gq, int x_max, const SearchBudget& budget = {});

// All Cameron-Liebler sets of parameter x (integral) through the
// disjointness counts, plus the meeting counts they imply on rank 2. Every
// result is re-verified with check().
SearchResult find_cl_sets(const CLContext& ctx, int x, const SearchBudget& budget = {});

// Parameter 1, labelled pencil / hyperbolic_class / base_plane / base_solid
// / other. Members pairwise meet, so this is a clique search in the meeting
// graph.
SearchResult find_cl_parameter1(const CLContext& ctx, const SearchBudget& budget = {});

// "pencils" for a union of pencils with pairwise non-collinear vertices,
// "embedded" for an embedded polar space, otherwise "other".
std::string classify_small_cl(const CLContext& ctx, const GeneratorSet& L);

// Largest set of pairwise disjoint members of L.
int max_disjoint_in(const CLContext& ctx, const GeneratorSet& L);

struct SpreadTransitivity {
  bool n2_constant = false;
  bool n3_constant = false;
  std::int64_t n2 = -1;
  std::int64_t n3 = -1;
  std::int64_t pairs = 0;
  std::int64_t triples = 0;
};

// Spreads through each pair and each triple of pairwise disjoint generators
// of the universe. Needs the complete spread list.
SpreadTransitivity spread_transitivity(const CLContext& ctx, const std::vector<Bitset>& spreads);

}  // namespace polarcl

#endif  // POLARCL_SEARCH_HPP_

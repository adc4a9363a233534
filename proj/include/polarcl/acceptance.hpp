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

#ifndef POLARCL_ACCEPTANCE_HPP_
#define POLARCL_ACCEPTANCE_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace polarcl {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 1;
  // Run only these criteria (1-based); all when empty.
  std::vector<int> only;
};

// Runs the desk-scale acceptance battery. Each criterion prints one line to
// out as soon as it finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, std::ostream& out);

std::string format_result(const CriterionResult& r);

}  // namespace polarcl

#endif  // POLARCL_ACCEPTANCE_HPP_

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

#ifndef POLARCL_GQ_HPP_
#define POLARCL_GQ_HPP_

#include <string>
#include <vector>

#include "polarcl/clsets.hpp"

namespace polarcl {

// A finite generalised quadrangle of order (s, t) given by its lines.
class GeneralizedQuadrangle {
 public:
  // Points and lines of a rank 2 polar space.
  static GeneralizedQuadrangle from_instance(const PolarSpaceInstance& inst);
  // Throws std::invalid_argument unless the incidence structure satisfies
  // the quadrangle axioms for some order (s, t) with s, t >= 1.
  static GeneralizedQuadrangle from_lines(int num_points, std::vector<std::vector<int>> lines);

  GeneralizedQuadrangle dual() const;

  int s() const { return s_; }
  int t() const { return t_; }
  int num_points() const { return np_; }
  int num_lines() const { return static_cast<int>(lines_.size()); }
  const std::vector<int>& line(int l) const { return lines_[l]; }
  const Bitset& line_points(int l) const { return line_bits_[l]; }
  const std::vector<int>& point_lines(int p) const { return point_lines_[p]; }
  // P^perp, including P.
  const Bitset& perp(int p) const { return perp_[p]; }
  // Point-line incidence, points as rows.
  IntMatrix incidence() const;

 private:
  GeneralizedQuadrangle() = default;

  int s_ = 0;
  int t_ = 0;
  int np_ = 0;
  std::vector<std::vector<int>> lines_;
  std::vector<Bitset> line_bits_;
  std::vector<std::vector<int>> point_lines_;
  std::vector<Bitset> perp_;
};

struct TightSetResult {
  Verdict verdict = Verdict::kFail;
  Rational i;
  int witness = -1;
};

// |P^perp cap T| is s + i for P in T and i otherwise, i = |T| / (s + 1).
TightSetResult tight_set_test(const GeneralizedQuadrangle& gq, const Bitset& T);

enum class TightSetLabel { kLineUnion, kSubquadrangle, kOther };
const char* to_string(TightSetLabel l);

// Union of pairwise disjoint lines, or the point set of a subquadrangle of
// order (s/t, t).
TightSetLabel classify_tight_set(const GeneralizedQuadrangle& gq, const Bitset& T);

// Line set checks, x = |L| / (t + 1).
struct GqReport {
  Rational x;
  Verdict image;            // chi in im(A^t), by fraction-free rank
  Verdict kernel;           // chi orthogonal to ker(A)
  Verdict disjoint_counts;  // (x - chi_l) t lines of L disjoint from l
  Verdict meeting_counts;   // x + chi_l (t - 1) lines of L meeting l in a point
  Verdict eigenvector;      // K-eigenvector for -t after the shift
  Verdict dual_tight;       // L is x-tight as a point set of the dual
  bool consistent() const;
  bool is_cl() const { return disjoint_counts == Verdict::kPass; }
};

GqReport gq_cl_test(const GeneralizedQuadrangle& gq, const Bitset& L);

}  // namespace polarcl

#endif  // POLARCL_GQ_HPP_

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

#ifndef POLARCL_CLSETS_HPP_
#define POLARCL_CLSETS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarcl/scheme.hpp"

namespace polarcl {

enum class Verdict { kPass, kFail, kVacuous, kNotApplicable };

const char* to_string(Verdict v);

// Membership over the universe of a CLContext, by local index.
using GeneratorSet = Bitset;

// The universe a Cameron-Liebler test runs on: every generator of a space,
// or one generator class of Q+(2d-1, q) with d even.
class CLContext {
 public:
  explicit CLContext(const SchemeContext& scheme);
  // Throws std::invalid_argument unless the space is Q+ with even rank.
  CLContext(const SchemeContext& scheme, int class_label);

  const SchemeContext& scheme() const { return *scheme_; }
  const PolarSpaceDescriptor& descriptor() const { return scheme_->descriptor(); }
  const PolarSpaceInstance& instance() const { return scheme_->instance(); }
  bool restricted() const { return cls_ != nullptr; }
  const ClassScheme* class_scheme() const { return cls_; }

  int size() const { return n_; }
  int global_index(int local) const { return cls_ ? cls_->members()[local] : local; }
  // -1 when the generator is outside the universe.
  int local_index(int global) const { return cls_ ? cls_->local_index(global) : global; }
  // Distance in the full dual polar graph.
  int distance(int a, int b) const { return scheme_->distance(global_index(a), global_index(b)); }
  const AdjacencyLists& disjoint_lists() const { return *disjoint_; }

  // "I", "II", "III", "IV", or "II-class" for one class.
  const std::string& type_label() const { return type_label_; }
  // Generators of the universe through a point; |L| / pencil_size() = x.
  const BigInt& pencil_size() const { return pencil_; }
  // Disjoint members per unit of x - chi, and minus the K eigenvalue.
  const BigInt& lambda() const { return lambda_; }
  const BigInt& spread_size() const { return spread_; }
  // Maximal parameter q^(d+e-1) + 1.
  const BigInt& max_parameter() const { return spread_; }
  // Eigenspaces admitted by the eigenspace test.
  const std::vector<int>& cl_eigenspaces() const { return eigenspaces_; }

  bool eigenspace_membership(const IntVector& v, const std::vector<int>& S) const;
  // Image used by the type-dispatched test; nullptr on type IV.
  const RowSpace* image() const;
  const std::string& image_name() const { return image_name_; }

  // Point-generator incidence restricted to the universe (columns).
  const IntMatrix& point_incidence() const;
  // Universe members through a point.
  const std::vector<int>& point_members(int p) const { return point_members_[p]; }

  IntVector characteristic(const GeneratorSet& L) const;
  Rational parameter(const GeneratorSet& L) const;
  GeneratorSet empty_set() const { return GeneratorSet(n_); }
  GeneratorSet from_global(const std::vector<int>& generators) const;
  std::vector<int> to_global(const GeneratorSet& L) const;

 private:
  const SchemeContext* scheme_;
  const ClassScheme* cls_ = nullptr;
  int n_ = 0;
  const AdjacencyLists* disjoint_ = nullptr;
  std::string type_label_;
  std::string image_name_;
  BigInt pencil_;
  BigInt lambda_;
  BigInt spread_;
  std::vector<int> eigenspaces_;
  std::vector<std::vector<int>> point_members_;
};

struct TestOutcome {
  Verdict verdict = Verdict::kNotApplicable;
  // Local index of the first generator violating the statement, or -1.
  int witness = -1;
  std::string detail;
};

// (i): for every pi, (x - chi_pi) * lambda members of L are disjoint from pi.
TestOutcome test_disjointness_counts(const CLContext& ctx, const GeneratorSet& L);
// (ii): chi - x/(q^(d+e-1)+1) j is a K-eigenvector for -lambda.
TestOutcome test_eigenvector(const CLContext& ctx, const GeneratorSet& L);
// (iii): chi lies in the sum of the admitted eigenspaces.
TestOutcome test_eigenspace(const CLContext& ctx, const GeneratorSet& L);
// Type I: im(A^t); type II full: im of the (point, class) incidence; one
// class: im(A'^t); type III: im(B^t); type IV: not applicable.
TestOutcome test_image(const CLContext& ctx, const GeneratorSet& L);
// (iv): |L cap S| = x for every supplied spread. Vacuous for an empty list.
// Throws std::invalid_argument if a supplied set is not a spread.
TestOutcome test_spread_intersections(const CLContext& ctx, const GeneratorSet& L,
                                      const std::vector<GeneratorSet>& spreads);

struct CLReport {
  std::string type_label;
  std::string image_name;
  int size = 0;
  Rational x;
  TestOutcome disjointness;
  TestOutcome eigenvector;
  TestOutcome eigenspace;
  TestOutcome image;
  TestOutcome spreads;

  // Every pass/fail verdict is the same.
  bool consistent() const;
  bool is_cl() const { return disjointness.verdict == Verdict::kPass; }
};

CLReport check(const CLContext& ctx, const GeneratorSet& L,
               const std::vector<GeneratorSet>& spreads = {});

// Every point lies in exactly m members, counted directly and through
// A chi = m j. Throws std::logic_error if the two disagree.
bool is_regular_system(const CLContext& ctx, const GeneratorSet& S, int m);
// Common number of members through a point, if there is one.
std::optional<int> regularity(const CLContext& ctx, const GeneratorSet& S);
bool is_spread(const CLContext& ctx, const GeneratorSet& S);

// chi_S - j / prod(q^(e+i)+1) is orthogonal to V_1, and to V_(d-1) when
// e = 0 with d even or to V_d when e = 1 with d odd. Full universe only.
bool spread_vector_check(const CLContext& ctx, const GeneratorSet& S);

struct Construction {
  std::string kind;
  std::string label;
  GeneratorSet set;
  Rational predicted_x;
};

Construction point_pencil(const CLContext& ctx, int point);
// Type III only.
Construction hyperbolic_class(const CLContext& ctx, int index);
// The generators inside the which-th suitable hyperplane section in canonical
// order: parabolic for Q-, hyperbolic for Q(2d, q), nondegenerate for H(2d, q)
// and, for W(2d-1, q) with q even, both classes of one hyperbolic section of
// the parabolic model. Throws std::invalid_argument when e < 1 or no such
// section exists.
Construction embedded_polar_space(const CLContext& ctx, int which);
int embedded_polar_space_count(const CLContext& ctx);
// Type III with d = 3: planes meeting pi in at least a line.
Construction base_plane(const CLContext& ctx, int pi);
// One class of Q+(7, q): class members meeting the opposite-class generator
// (global index) in a plane.
Construction base_solid(const CLContext& ctx, int center);
Construction complement(const CLContext& ctx, const Construction& a);
// Throws std::invalid_argument unless the sets are disjoint.
Construction disjoint_union(const Construction& a, const Construction& b);
// Throws std::invalid_argument unless b is contained in a.
Construction difference(const Construction& a, const Construction& b);

struct IntersectionProfile {
  int probe = -1;
  bool probe_in_set = false;
  // counts[i] members meeting the probe in a (d-i-1)-space; on one class
  // the index runs over i with dimension d-2i-1.
  std::vector<std::int64_t> counts;
  std::vector<BigInt> predicted;
  Verdict verdict = Verdict::kNotApplicable;
};

// Brute-force profile against the closed form. Not applicable unless chi
// lies in V_0 + V_1 (V'_0 + V'_1 on a class) with integral x.
IntersectionProfile intersection_distribution(const CLContext& ctx, const GeneratorSet& L, int probe);

struct ZProfile {
  std::vector<std::int64_t> z;  // z[j], j = 0..d-2
  Verdict verdict = Verdict::kNotApplicable;
};

// z_j = members meeting pi in a j-space through the point P (index into the
// points of the space). Needs a type I full universe, pi outside L and P on
// pi; throws std::invalid_argument otherwise.
ZProfile z_profile(const CLContext& ctx, const GeneratorSet& L, int pi, int point);

// Members of L disjoint from both of two generators.
std::int64_t disjoint_to_both(const CLContext& ctx, const GeneratorSet& L, int a, int b);

struct CorpusEntry {
  std::string label;
  GeneratorSet set;
};

// Constructions, set algebra on them, uniform random sets, and single-element
// perturbations of Cameron-Liebler sets; at least min_size entries.
std::vector<CorpusEntry> build_corpus(const CLContext& ctx, std::uint64_t seed, int min_size);

}  // namespace polarcl

#endif  // POLARCL_CLSETS_HPP_

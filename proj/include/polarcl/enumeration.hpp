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

#ifndef POLARCL_ENUMERATION_HPP_
#define POLARCL_ENUMERATION_HPP_

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "polarcl/geometry.hpp"

namespace polarcl {

using Bitset = boost::dynamic_bitset<>;

struct EnumerateOptions {
  std::size_t max_generators = 1'000'000;
};

// All totally isotropic subspaces of a polar space in canonical order.
// Immutable after construction.
class PolarSpaceInstance {
 public:
  // Throws std::length_error if the generator count exceeds the budget.
  explicit PolarSpaceInstance(const PolarSpaceDescriptor& desc, EnumerateOptions opts = {});

  const PolarGeometry& geometry() const { return geo_; }
  const PolarSpaceDescriptor& descriptor() const { return geo_.descriptor(); }
  const Field& field() const { return geo_.field(); }
  int rank() const { return descriptor().rank; }

  const std::vector<Vec>& points() const { return geo_.isotropic_points(); }
  int num_points() const { return static_cast<int>(points().size()); }
  // Index of the isotropic point spanned by v, or -1.
  int point_index(const Vec& v) const;
  // Isotropic points collinear with p, p included.
  const Bitset& collinear(int p) const { return collinear_[p]; }

  // Totally isotropic subspaces of projective dimension k, 0 <= k < d.
  const std::vector<Subspace>& subspaces(int k) const { return levels_[k]; }
  const std::vector<Bitset>& subspace_points(int k) const { return level_points_[k]; }
  // Index of s within its level, or -1.
  int subspace_index(const Subspace& s) const;

  const std::vector<Subspace>& generators() const { return levels_[rank() - 1]; }
  int num_generators() const { return static_cast<int>(generators().size()); }
  const Bitset& generator_points(int g) const { return level_points_[rank() - 1][g]; }
  // Generators through each point, ascending.
  const std::vector<int>& point_generators(int p) const { return point_generators_[p]; }
  // Projective dimension of the intersection of two subspaces given by their
  // point sets.
  int dimension_of(const Bitset& points) const;
  int intersection_dimension(int g1, int g2) const;

  // Q+ only: 0 for the class of generator 0 (Latin), 1 otherwise.
  const std::vector<int>& class_labels() const { return class_labels_; }

 private:
  PolarGeometry geo_;
  std::unordered_map<std::string, int> point_lookup_;
  std::vector<Bitset> collinear_;
  std::vector<std::vector<Subspace>> levels_;
  std::vector<std::vector<Bitset>> level_points_;
  std::vector<std::unordered_map<std::string, int>> level_lookup_;
  std::vector<std::vector<int>> point_generators_;
  std::vector<int> dim_by_size_;
  std::vector<int> class_labels_;
};

PolarSpaceInstance enumerate(const PolarSpaceDescriptor& desc, EnumerateOptions opts = {});

// Latin/Greek labels of the generators of Q+; throws for other families.
std::vector<int> split_hyperbolic_classes(const PolarSpaceInstance& inst);

struct HyperbolicClass {
  Vec hyperplane;            // functional of the section, in the Q(2d, q) model
  std::vector<int> members;  // generator indices, ascending
};

// Both generator classes of every hyperbolic section of Q(2d, q), d odd.
// W(2d-1, q) with q even is handled through the parabolic model obtained by
// projecting from the nucleus. Throws std::invalid_argument otherwise.
std::vector<HyperbolicClass> enumerate_hyperbolic_classes(const PolarSpaceInstance& inst);

}  // namespace polarcl

#endif  // POLARCL_ENUMERATION_HPP_

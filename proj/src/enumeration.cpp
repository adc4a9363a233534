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

#include "polarcl/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "polarcl/combinatorics.hpp"

namespace polarcl {
namespace {

Bitset point_set(const PolarSpaceInstance& inst, const Subspace& s) {
  Bitset b(inst.num_points());
  for (const Vec& v : s.points(inst.field())) {
    const int idx = inst.point_index(v);
    if (idx < 0) throw std::logic_error("subspace contains a non-isotropic point");
    b.set(idx);
  }
  return b;
}

}  // namespace

PolarSpaceInstance::PolarSpaceInstance(const PolarSpaceDescriptor& desc, EnumerateOptions opts)
    : geo_(desc) {
  const int d = desc.rank;
  const PolarCounts pc(desc);
  if (pc.generator_count() > BigInt(opts.max_generators)) {
    throw std::length_error(desc.name() + " has " + pc.generator_count().str() +
                            " generators, above the budget of " + std::to_string(opts.max_generators));
  }
  const Field& f = geo_.field();
  const int np = num_points();
  for (int i = 0; i < np; ++i) point_lookup_.emplace(vec_key(points()[i]), i);

  // Point count of a k-space is (q^(k+1) - 1)/(q - 1).
  {
    long long size = 0;
    long long qk = 1;
    dim_by_size_.assign(np + 1, -2);
    dim_by_size_[0] = -1;
    for (int k = 0; k < d; ++k) {
      size += qk;
      qk *= f.order();
      if (size <= np) dim_by_size_[size] = k;
    }
  }

  collinear_.assign(np, Bitset(np));
  for (int i = 0; i < np; ++i) {
    const Vec h = geo_.functional(points()[i]);
    for (int j = 0; j < np; ++j)
      if (dot(f, points()[j], h) == 0) collinear_[i].set(j);
  }

  levels_.resize(d);
  level_points_.resize(d);
  level_lookup_.resize(d);
  for (int i = 0; i < np; ++i) {
    levels_[0].push_back(Subspace::point(f, points()[i]));
    Bitset b(np);
    b.set(i);
    level_points_[0].push_back(b);
    level_lookup_[0].emplace(levels_[0].back().key(), i);
  }

  for (int k = 1; k < d; ++k) {
    std::unordered_map<std::string, Subspace> seen;
    for (int s = 0; s < static_cast<int>(levels_[k - 1].size()); ++s) {
      const Subspace& base = levels_[k - 1][s];
      const Mat& b = base.basis();
      Bitset cand(np);
      cand.set();
      for (int r = 0; r < b.rows(); ++r) cand &= collinear_[point_index(b.row(r).transpose())];
      cand -= level_points_[k - 1][s];
      Mat ext(b.rows() + 1, b.cols());
      ext.topRows(b.rows()) = b;
      for (auto p = cand.find_first(); p != Bitset::npos; p = cand.find_next(p)) {
        ext.row(b.rows()) = points()[p].transpose();
        Subspace next = Subspace::span(f, ext);
        seen.try_emplace(next.key(), std::move(next));
      }
    }
    std::vector<std::string> keys;
    keys.reserve(seen.size());
    for (const auto& kv : seen) keys.push_back(kv.first);
    std::sort(keys.begin(), keys.end());
    for (const std::string& key : keys) {
      level_lookup_[k].emplace(key, static_cast<int>(levels_[k].size()));
      levels_[k].push_back(seen.at(key));
    }
    for (const Subspace& sub : levels_[k]) level_points_[k].push_back(point_set(*this, sub));
  }

  point_generators_.assign(np, {});
  for (int g = 0; g < num_generators(); ++g) {
    const Bitset& pts = generator_points(g);
    for (auto p = pts.find_first(); p != Bitset::npos; p = pts.find_next(p))
      point_generators_[p].push_back(g);
  }

  if (desc.family == Family::kHyperbolic) class_labels_ = split_hyperbolic_classes(*this);
}

int PolarSpaceInstance::point_index(const Vec& v) const {
  auto it = point_lookup_.find(vec_key(normalized(field(), v)));
  return it == point_lookup_.end() ? -1 : it->second;
}

int PolarSpaceInstance::subspace_index(const Subspace& s) const {
  const int k = s.dimension();
  if (k < 0 || k >= rank()) return -1;
  auto it = level_lookup_[k].find(s.key());
  return it == level_lookup_[k].end() ? -1 : it->second;
}

int PolarSpaceInstance::dimension_of(const Bitset& pts) const {
  const std::size_t c = pts.count();
  if (c >= dim_by_size_.size() || dim_by_size_[c] == -2)
    throw std::logic_error("point set is not a subspace");
  return dim_by_size_[c];
}

int PolarSpaceInstance::intersection_dimension(int g1, int g2) const {
  return dimension_of(generator_points(g1) & generator_points(g2));
}

PolarSpaceInstance enumerate(const PolarSpaceDescriptor& desc, EnumerateOptions opts) {
  return PolarSpaceInstance(desc, opts);
}

std::vector<int> split_hyperbolic_classes(const PolarSpaceInstance& inst) {
  if (inst.descriptor().family != Family::kHyperbolic)
    throw std::invalid_argument("generator classes exist only on hyperbolic quadrics");
  const int d = inst.rank();
  const int n = inst.num_generators();
  std::vector<int> labels(n);
  for (int g = 0; g < n; ++g) labels[g] = ((d - 1 - inst.intersection_dimension(0, g)) % 2 + 2) % 2;
  // Every pair must obey the same parity rule.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const bool same = ((d - 1 - inst.intersection_dimension(a, b)) % 2 == 0);
      if (same != (labels[a] == labels[b]))
        throw std::logic_error("generator class parity is not transitive");
    }
  return labels;
}

std::vector<HyperbolicClass> enumerate_hyperbolic_classes(const PolarSpaceInstance& inst) {
  const PolarSpaceDescriptor& desc = inst.descriptor();
  const int d = desc.rank;
  if (d % 2 == 0) throw std::invalid_argument("hyperbolic classes need odd rank, got " + desc.name());

  if (desc.family == Family::kSymplectic) {
    if (desc.q % 2 != 0)
      throw std::invalid_argument("hyperbolic classes of W(2d-1,q) need q even");
    const PolarSpaceInstance model(PolarSpaceDescriptor::make(Family::kParabolic, d, desc.q));
    const Field& f = inst.field();
    std::vector<int> image(model.num_generators());
    for (int g = 0; g < model.num_generators(); ++g) {
      const Mat& b = model.generators()[g].basis();
      Mat proj = Mat::Zero(b.rows(), 2 * d);
      for (int r = 0; r < b.rows(); ++r)
        for (int i = 1; i <= d; ++i) {
          proj(r, i - 1) = b(r, 2 * i - 1);
          proj(r, d + i - 1) = b(r, 2 * i);
        }
      image[g] = inst.subspace_index(Subspace::span(f, proj));
      if (image[g] < 0) throw std::logic_error("nucleus projection left the symplectic space");
    }
    std::vector<HyperbolicClass> out = enumerate_hyperbolic_classes(model);
    for (HyperbolicClass& hc : out) {
      for (int& g : hc.members) g = image[g];
      std::sort(hc.members.begin(), hc.members.end());
    }
    return out;
  }

  if (desc.family != Family::kParabolic)
    throw std::invalid_argument("hyperbolic classes need Q(2d,q) or W(2d-1,q), got " + desc.name());

  const Field& f = inst.field();
  std::vector<HyperbolicClass> out;
  for (const Vec& h : projective_points(f, desc.vector_dimension())) {
    if (inst.geometry().classify_hyperplane_section(h) != SectionType::kHyperbolic) continue;
    std::vector<int> inside;
    for (int g = 0; g < inst.num_generators(); ++g) {
      const Mat& b = inst.generators()[g].basis();
      bool ok = true;
      for (int r = 0; r < b.rows() && ok; ++r) ok = dot(f, h, b.row(r).transpose()) == 0;
      if (ok) inside.push_back(g);
    }
    if (inside.empty()) continue;
    HyperbolicClass a{h, {}};
    HyperbolicClass b{h, {}};
    for (int g : inside) {
      const bool same = (d - 1 - inst.intersection_dimension(inside[0], g)) % 2 == 0;
      (same ? a : b).members.push_back(g);
    }
    out.push_back(std::move(a));
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace polarcl

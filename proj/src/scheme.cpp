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

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace polarcl {
namespace {

template <typename T>
bool run_annihilator(const std::vector<AdjacencyLists>& rel, const Annihilator& steps, std::vector<T> w) {
  std::vector<T> next(w.size());
  for (const auto& [i, theta] : steps) {
    const T th = static_cast<T>(theta);
    const AdjacencyLists& adj = rel[i];
    for (std::size_t g = 0; g < w.size(); ++g) {
      T s = 0;
      for (int h : adj[g]) s += w[h];
      next[g] = s - th * w[g];
    }
    std::swap(w, next);
  }
  return std::all_of(w.begin(), w.end(), [](const T& x) { return x == 0; });
}

IntMatrix shifted(const IntMatrix& a, std::int64_t theta) {
  IntMatrix m = a;
  m.diagonal().array() -= theta;
  return m;
}

}  // namespace

bool annihilates(const std::vector<AdjacencyLists>& relations, const Annihilator& steps, const IntVector& v) {
  BigInt bound = 0;
  for (Eigen::Index g = 0; g < v.size(); ++g) bound = std::max(bound, BigInt(std::llabs(v(g))));
  for (const auto& [i, theta] : steps) {
    std::size_t deg = 0;
    for (const auto& row : relations[i]) deg = std::max(deg, row.size());
    bound *= BigInt(deg) + boost::multiprecision::abs(theta);
  }
  if (bound < (BigInt(1) << 62)) {
    std::vector<std::int64_t> w(v.data(), v.data() + v.size());
    return run_annihilator(relations, steps, std::move(w));
  }
  std::vector<BigInt> w(v.size());
  for (Eigen::Index g = 0; g < v.size(); ++g) w[g] = v(g);
  return run_annihilator(relations, steps, std::move(w));
}

std::optional<Annihilator> make_annihilator(const std::vector<std::vector<BigInt>>& p, const std::vector<int>& keep) {
  const int d = static_cast<int>(p.size()) - 1;
  std::vector<bool> kept(d + 1, false);
  for (int j : keep) {
    if (j < 0 || j > d) throw std::invalid_argument("eigenspace index out of range");
    kept[j] = true;
  }
  // The product over kept j of (A_i - P_{j,i}) kills every kept eigenspace
  // and is invertible on the others when each factor separates j from all
  // excluded eigenspaces.
  Annihilator steps;
  for (int j = 0; j <= d; ++j) {
    if (!kept[j]) continue;
    int chosen = -1;
    for (int i = 1; i <= d && chosen < 0; ++i) {
      bool ok = true;
      for (int s = 0; s <= d && ok; ++s)
        if (!kept[s] && p[s][i] == p[j][i]) ok = false;
      if (ok) chosen = i;
    }
    if (chosen < 0) {
      bool any_excluded = false;
      for (int s = 0; s <= d; ++s) any_excluded = any_excluded || !kept[s];
      if (any_excluded) return std::nullopt;
      chosen = 1;
    }
    steps.emplace_back(chosen, p[j][chosen]);
  }
  return steps;
}

SchemeContext::SchemeContext(const PolarSpaceDescriptor& desc, EnumerateOptions opts)
    : SchemeContext(PolarSpaceInstance(desc, opts)) {}

SchemeContext::SchemeContext(PolarSpaceInstance inst)
    : inst_(std::move(inst)),
      params_(SchemeParameters::from_descriptor(inst_.descriptor())),
      table_(inst_.descriptor()) {
  build();
}

SchemeContext::~SchemeContext() = default;

void SchemeContext::build() {
  n_ = inst_.num_generators();
  d_ = inst_.rank();
  if (!table_.consistent()) throw std::logic_error("eigenvalue table failed its consistency checks");
  dist_.resize(n_, n_);
  for (int a = 0; a < n_; ++a)
    for (int b = a; b < n_; ++b) {
      const auto v = static_cast<std::int8_t>(d_ - 1 - inst_.intersection_dimension(a, b));
      dist_(a, b) = v;
      dist_(b, a) = v;
    }
  adj_.assign(d_ + 1, IntMatrix::Zero(n_, n_));
  lists_.assign(d_ + 1, AdjacencyLists(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      adj_[dist_(a, b)](a, b) = 1;
      lists_[dist_(a, b)][a].push_back(b);
    }
  const int np = inst_.num_points();
  point_incidence_ = IntMatrix::Zero(np, n_);
  for (int g = 0; g < n_; ++g) {
    const Bitset& pts = inst_.generator_points(g);
    for (auto p = pts.find_first(); p != Bitset::npos; p = pts.find_next(p)) point_incidence_(p, g) = 1;
  }
  p_.assign(d_ + 1, std::vector<BigInt>(d_ + 1));
  for (int j = 0; j <= d_; ++j)
    for (int i = 0; i <= d_; ++i) p_[j][i] = table_.at(j, i);
}

IntMatrix SchemeContext::incidence(int k) const {
  if (k < 0 || k > d_) throw std::invalid_argument("incidence level out of range");
  if (k == 0) return IntMatrix::Ones(1, n_);
  if (k == 1) return point_incidence_;
  const auto& subs = inst_.subspace_points(k - 1);
  IntMatrix c = IntMatrix::Zero(static_cast<Eigen::Index>(subs.size()), n_);
  for (std::size_t s = 0; s < subs.size(); ++s)
    for (int g = 0; g < n_; ++g)
      if (subs[s].is_subset_of(inst_.generator_points(g))) c(static_cast<Eigen::Index>(s), g) = 1;
  return c;
}

bool SchemeContext::eigenspace_membership(const IntVector& v, const std::vector<int>& S) const {
  if (v.size() != n_) throw std::invalid_argument("vector length does not match the generator count");
  const auto steps = make_annihilator(p_, S);
  if (!steps) throw std::logic_error("eigenvalues of A_1 fail to separate the eigenspaces");
  return annihilates(lists_, *steps, v);
}

const RowSpace& SchemeContext::point_rowspace() const {
  std::call_once(point_rs_once_, [&] { point_rs_ = std::make_unique<RowSpace>(point_incidence_); });
  return *point_rs_;
}

const std::vector<HyperbolicClass>& SchemeContext::hyperbolic_classes() const {
  std::call_once(hyp_once_, [&] {
    hyp_classes_ = enumerate_hyperbolic_classes(inst_);
    hyp_b_ = IntMatrix::Zero(static_cast<Eigen::Index>(hyp_classes_.size()), n_);
    for (std::size_t r = 0; r < hyp_classes_.size(); ++r)
      for (int g : hyp_classes_[r].members) hyp_b_(static_cast<Eigen::Index>(r), g) = 1;
    hyp_rs_ = std::make_unique<RowSpace>(hyp_b_);
  });
  return hyp_classes_;
}

const IntMatrix& SchemeContext::build_B() const {
  hyperbolic_classes();
  return hyp_b_;
}

const RowSpace& SchemeContext::hyperbolic_rowspace() const {
  hyperbolic_classes();
  return *hyp_rs_;
}

const IntMatrix& SchemeContext::class_point_incidence() const {
  std::call_once(cls_once_, [&] {
    const auto& labels = inst_.class_labels();
    if (labels.empty()) throw std::invalid_argument("class incidence needs a hyperbolic quadric");
    const int np = inst_.num_points();
    cls_b_ = IntMatrix::Zero(2 * np, n_);
    for (int p = 0; p < np; ++p)
      for (int g : inst_.point_generators(p)) cls_b_(2 * p + labels[g], g) = 1;
    cls_rs_ = std::make_unique<RowSpace>(cls_b_);
  });
  return cls_b_;
}

const RowSpace& SchemeContext::class_point_rowspace() const {
  class_point_incidence();
  return *cls_rs_;
}

const ClassScheme& SchemeContext::restricted_scheme(int label) const {
  if (descriptor().family != Family::kHyperbolic)
    throw std::invalid_argument("restricted scheme needs a hyperbolic quadric, got " + descriptor().name());
  if (label != 0 && label != 1) throw std::invalid_argument("class label must be 0 or 1");
  std::call_once(class_once_[label], [&] { class_schemes_[label] = std::make_unique<ClassScheme>(*this, label); });
  return *class_schemes_[label];
}

ClassScheme::ClassScheme(const SchemeContext& ctx, int label) : ctx_(&ctx), label_(label) {
  const auto& labels = ctx.instance().class_labels();
  const int full_d = ctx.diameter();
  if (labels.empty()) throw std::invalid_argument("restricted scheme needs a hyperbolic quadric");
  d_ = full_d / 2;
  local_.assign(ctx.size(), -1);
  for (int g = 0; g < ctx.size(); ++g)
    if (labels[g] == label) {
      local_[g] = static_cast<int>(members_.size());
      members_.push_back(g);
    }
  const int m = size();
  adj_.assign(d_ + 1, IntMatrix::Zero(m, m));
  lists_.assign(d_ + 1, AdjacencyLists(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int dist = ctx.distance(members_[a], members_[b]);
      if (dist % 2 != 0) throw std::logic_error("odd distance inside a generator class");
      adj_[dist / 2](a, b) = 1;
      lists_[dist / 2][a].push_back(b);
    }
  p_.assign(d_ + 1, std::vector<BigInt>(d_ + 1));
  for (int j = 0; j <= d_; ++j)
    for (int i = 0; i <= d_; ++i) p_[j][i] = ctx.eigenvalues().at(j, 2 * i);
  separates_ = true;
  for (int j = 0; j <= d_; ++j)
    for (int l = j + 1; l <= d_; ++l)
      if (d_ >= 1 && p_[j][1] == p_[l][1]) separates_ = false;
  const IntMatrix& a = ctx.point_incidence();
  point_incidence_.resize(a.rows(), m);
  for (int c = 0; c < m; ++c) point_incidence_.col(c) = a.col(members_[c]);
}

bool ClassScheme::eigenspace_membership(const IntVector& v, const std::vector<int>& S) const {
  if (v.size() != size()) throw std::invalid_argument("vector length does not match the class size");
  const auto steps = make_annihilator(p_, S);
  if (!steps) throw std::logic_error("restricted eigenvalues cannot separate the eigenspaces");
  return annihilates(lists_, *steps, v);
}

const RowSpace& ClassScheme::point_rowspace() const {
  std::call_once(rs_once_, [&] { rs_ = std::make_unique<RowSpace>(point_incidence_); });
  return *rs_;
}

DistanceRegularityReport verify_distance_regularity(const SchemeContext& ctx) {
  const int d = ctx.diameter();
  const int n = ctx.size();
  const SchemeParameters& sp = ctx.parameters();
  DistanceRegularityReport r;
  r.b.assign(d + 1, -1);
  r.c.assign(d + 1, -1);
  r.b[d] = 0;
  r.c[0] = 0;
  const IntMatrix& a1 = ctx.adjacency(1);
  for (int i = 0; i <= d; ++i) {
    const IntMatrix cm = i >= 1 ? IntMatrix(ctx.adjacency(i - 1) * a1) : IntMatrix();
    const IntMatrix bm = i < d ? IntMatrix(ctx.adjacency(i + 1) * a1) : IntMatrix();
    for (int x = 0; x < n && r.ok; ++x)
      for (int z = 0; z < n && r.ok; ++z) {
        if (ctx.distance(x, z) != i) continue;
        auto check = [&](std::int64_t value, std::vector<std::int64_t>& slot, const BigInt& closed, const char* name) {
          if (slot[i] < 0) slot[i] = value;
          if (value != slot[i] || BigInt(value) != closed) {
            r.ok = false;
            r.g1 = x;
            r.g2 = z;
            r.detail = std::string(name) + "_" + std::to_string(i) + " = " + std::to_string(value) +
                       ", closed form " + closed.str();
          }
        };
        if (i >= 1) check(cm(x, z), r.c, sp.c[i], "c");
        if (i < d) check(bm(x, z), r.b, sp.b[i], "b");
      }
  }
  return r;
}

bool verify_bose_mesner(const SchemeContext& ctx, std::string* detail) {
  const int d = ctx.diameter();
  const int n = ctx.size();
  const SchemeParameters& sp = ctx.parameters();
  IntMatrix sum = IntMatrix::Zero(n, n);
  for (int i = 0; i <= d; ++i) sum += ctx.adjacency(i);
  if (sum != IntMatrix::Ones(n, n) || ctx.adjacency(0) != IntMatrix::Identity(n, n)) {
    if (detail) *detail = "relations do not partition the pairs";
    return false;
  }
  for (int i = 1; i <= d; ++i)
    for (int j = i; j <= d; ++j) {
      const IntMatrix prod = ctx.adjacency(i) * ctx.adjacency(j);
      std::vector<std::int64_t> expect(d + 1);
      for (int k = 0; k <= d; ++k) expect[k] = to_int64(sp.intersection_number(i, j, k));
      for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z)
          if (prod(x, z) != expect[ctx.distance(x, z)]) {
            if (detail)
              *detail = "A_" + std::to_string(i) + " A_" + std::to_string(j) + " differs at (" + std::to_string(x) +
                        "," + std::to_string(z) + ")";
            return false;
          }
    }
  return true;
}

bool verify_hyperbolic_gram(const SchemeContext& ctx) {
  const IntMatrix& b = ctx.build_B();
  const IntMatrix g = b.transpose() * b;
  const int d = ctx.diameter();
  const std::int64_t q = ctx.descriptor().q;
  for (int x = 0; x < ctx.size(); ++x)
    for (int z = 0; z < ctx.size(); ++z) {
      const int dist = ctx.distance(x, z);
      std::int64_t expect = dist % 2 == 0 ? 1 : 0;
      for (int t = 0; t < d - dist; ++t) expect *= q;
      if (g(x, z) != expect) return false;
    }
  return true;
}

bool verify_rowspace_gram(const IntMatrix& m) {
  const IntMatrix g = m.transpose() * m;
  return RowSpace(g).rank() == RowSpace(m).rank();
}

SpectrumReport verify_spectrum(const SchemeContext& ctx) {
  const int d = ctx.diameter();
  const int n = ctx.size();
  const IntMatrix& a1 = ctx.adjacency(1);
  const IntMatrix& k = ctx.disjointness();
  const EigenvalueTable& p = ctx.eigenvalues();
  SpectrumReport r;
  IntMatrix prod = IntMatrix::Identity(n, n);
  IntMatrix previous;
  int total = 0;
  for (int j = 0; j <= d; ++j) {
    const IntMatrix c = ctx.incidence(j);
    const IntMatrix w = prod * c.transpose();
    r.vectors_checked += w.cols();
    const IntMatrix aw = a1 * w;
    const IntMatrix kw = k * w;
    if (aw != p.at64(j, 1) * w || kw != p.at64(j, d) * w) r.eigen_ok = false;
    if (j >= 1 && !IntMatrix(previous * w).isZero()) r.orthogonal_ok = false;
    const IntMatrix wt = w.transpose();
    r.dimensions.push_back(static_cast<int>(independent_rows_mod_p(wt).size()));
    total += r.dimensions.back();
    r.incidence_ranks.push_back(RowSpace(c).rank());
    if (r.incidence_ranks.back() != total) r.ranks_ok = false;
    previous = c;
    prod = shifted(a1, p.at64(j, 1)) * prod;
  }
  r.complete = total == n;
  return r;
}

ClassSpectrumReport verify_class_spectrum(const ClassScheme& cs) {
  ClassSpectrumReport r;
  const int m = cs.size();
  std::vector<int> dims;
  int total = 0;
  for (int j = 0; j <= cs.diameter(); ++j) {
    const int mult = m - RowSpace(shifted(cs.adjacency(1), to_int64(cs.eigenvalue(j, 1)))).rank();
    dims.push_back(mult);
    total += mult;
  }
  r.dim_v0 = dims[0];
  r.dim_v1 = dims.size() > 1 ? dims[1] : 0;
  r.rank_point_incidence = cs.point_rowspace().rank();
  bool rows_ok = true;
  const IntMatrix& a = cs.point_incidence();
  for (Eigen::Index p = 0; p < a.rows() && rows_ok; ++p)
    rows_ok = cs.eigenspace_membership(a.row(p).transpose(), {0, 1});
  r.ok = cs.first_relation_separates() && total == m && rows_ok && r.rank_point_incidence == r.dim_v0 + r.dim_v1;
  return r;
}

}  // namespace polarcl

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

#ifndef POLARCL_SCHEME_HPP_
#define POLARCL_SCHEME_HPP_

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "polarcl/combinatorics.hpp"
#include "polarcl/enumeration.hpp"
#include "polarcl/exact.hpp"

namespace polarcl {

using AdjacencyLists = std::vector<std::vector<int>>;

// Shift-and-multiply steps (relation index, eigenvalue) whose product kills
// the kept eigenspaces and is invertible on the rest.
using Annihilator = std::vector<std::pair<int, BigInt>>;

// Applies prod (A_i - theta I) to v using the relation lists and reports
// whether the result vanishes. Switches to big integers when the int64
// bound could be exceeded.
bool annihilates(const std::vector<AdjacencyLists>& relations, const Annihilator& steps,
                 const IntVector& v);

// Chooses, for every kept eigenspace j, a relation i whose eigenvalue on V_j
// differs from its eigenvalue on every excluded eigenspace. P is indexed
// P[j][i]. Returns std::nullopt if some j cannot be separated.
std::optional<Annihilator> make_annihilator(const std::vector<std::vector<BigInt>>& p,
                                            const std::vector<int>& keep);

class ClassScheme;

// The dual polar graph of an enumerated polar space with all of its
// relation matrices. Immutable once built; lazily built members are
// guarded and safe for concurrent readers.
class SchemeContext {
 public:
  explicit SchemeContext(const PolarSpaceDescriptor& desc, EnumerateOptions opts = {});
  explicit SchemeContext(PolarSpaceInstance inst);
  ~SchemeContext();

  SchemeContext(const SchemeContext&) = delete;
  SchemeContext& operator=(const SchemeContext&) = delete;

  const PolarSpaceInstance& instance() const { return inst_; }
  const PolarSpaceDescriptor& descriptor() const { return inst_.descriptor(); }
  int size() const { return n_; }
  int diameter() const { return d_; }

  int distance(int g1, int g2) const { return dist_(g1, g2); }
  const IntMatrix& adjacency(int i) const { return adj_[i]; }
  const IntMatrix& disjointness() const { return adj_[d_]; }
  const AdjacencyLists& relation(int i) const { return lists_[i]; }
  const std::vector<AdjacencyLists>& relations() const { return lists_; }

  // C_k: rows are the (k-1)-spaces, columns the generators. C_0 is a single
  // row of ones and C_1 = A is the point-generator incidence.
  IntMatrix incidence(int k) const;
  const IntMatrix& point_incidence() const { return point_incidence_; }

  const SchemeParameters& parameters() const { return params_; }
  const EigenvalueTable& eigenvalues() const { return table_; }

  // v in the sum of the V_j, j in S.
  bool eigenspace_membership(const IntVector& v, const std::vector<int>& S) const;

  // Row space of A, for the image test on type I spaces.
  const RowSpace& point_rowspace() const;

  // Type III only: hyperbolic classes, their incidence B, and im(B^t).
  const std::vector<HyperbolicClass>& hyperbolic_classes() const;
  const IntMatrix& build_B() const;
  const RowSpace& hyperbolic_rowspace() const;

  // Q+ with even rank: rows (P, i) for each point P and class i.
  const IntMatrix& class_point_incidence() const;
  const RowSpace& class_point_rowspace() const;

  // The scheme on one generator class of Q+(2d-1, q), d even.
  const ClassScheme& restricted_scheme(int label) const;

 private:
  void build();

  PolarSpaceInstance inst_;
  int n_ = 0;
  int d_ = 0;
  Eigen::Matrix<std::int8_t, Eigen::Dynamic, Eigen::Dynamic> dist_;
  std::vector<IntMatrix> adj_;
  std::vector<AdjacencyLists> lists_;
  IntMatrix point_incidence_;
  SchemeParameters params_;
  EigenvalueTable table_;
  std::vector<std::vector<BigInt>> p_;

  mutable std::once_flag point_rs_once_;
  mutable std::unique_ptr<RowSpace> point_rs_;
  mutable std::once_flag hyp_once_;
  mutable std::vector<HyperbolicClass> hyp_classes_;
  mutable IntMatrix hyp_b_;
  mutable std::unique_ptr<RowSpace> hyp_rs_;
  mutable std::once_flag cls_once_;
  mutable IntMatrix cls_b_;
  mutable std::unique_ptr<RowSpace> cls_rs_;
  mutable std::array<std::once_flag, 2> class_once_;
  mutable std::array<std::unique_ptr<ClassScheme>, 2> class_schemes_;
};

// A'_i = A_{2i} restricted to one generator class, with eigenvalues
// P_{j,2i} on V'_j for j = 0..d/2.
class ClassScheme {
 public:
  ClassScheme(const SchemeContext& ctx, int label);

  const SchemeContext& parent() const { return *ctx_; }
  int label() const { return label_; }
  int size() const { return static_cast<int>(members_.size()); }
  int diameter() const { return d_; }
  // Global generator indices, ascending.
  const std::vector<int>& members() const { return members_; }
  // Position within the class, or -1.
  int local_index(int g) const { return local_[g]; }

  const IntMatrix& adjacency(int i) const { return adj_[i]; }
  const std::vector<AdjacencyLists>& relations() const { return lists_; }
  const BigInt& eigenvalue(int j, int i) const { return p_[j][i]; }
  // True when the eigenvalues of A'_1 are pairwise distinct.
  bool first_relation_separates() const { return separates_; }

  // v (indexed by class position) in the sum of the V'_j, j in S.
  bool eigenspace_membership(const IntVector& v, const std::vector<int>& S) const;

  // Point-generator incidence restricted to the class, and its row space.
  const IntMatrix& point_incidence() const { return point_incidence_; }
  const RowSpace& point_rowspace() const;

 private:
  const SchemeContext* ctx_;
  int label_;
  int d_;
  std::vector<int> members_;
  std::vector<int> local_;
  std::vector<IntMatrix> adj_;
  std::vector<AdjacencyLists> lists_;
  std::vector<std::vector<BigInt>> p_;
  bool separates_ = false;
  IntMatrix point_incidence_;
  mutable std::once_flag rs_once_;
  mutable std::unique_ptr<RowSpace> rs_;
};

struct DistanceRegularityReport {
  bool ok = true;
  std::vector<std::int64_t> b;  // empirical, b[d] = 0
  std::vector<std::int64_t> c;  // empirical, c[0] = 0
  // First violating pair, if any.
  int g1 = -1;
  int g2 = -1;
  std::string detail;
};

// Empirical b_i, c_i over all vertex pairs compared with the closed forms.
DistanceRegularityReport verify_distance_regularity(const SchemeContext& ctx);

// A_i A_j = sum_k p^k_ij A_k for all i <= j, plus sum A_i = J and A_0 = I.
bool verify_bose_mesner(const SchemeContext& ctx, std::string* detail = nullptr);

// B^t B = sum over even i of q^(d-i) A_i on type III spaces. Generators at
// odd distance never share a hyperbolic class.
bool verify_hyperbolic_gram(const SchemeContext& ctx);

// im(M^t M) = im(M^t) by rank equality.
bool verify_rowspace_gram(const IntMatrix& m);

struct SpectrumReport {
  // Certified dimensions of V_0..V_d; exact once they sum to |Omega|.
  std::vector<int> dimensions;
  // Certified rank of C_k^t for k = 0..d.
  std::vector<int> incidence_ranks;
  long long vectors_checked = 0;
  bool eigen_ok = true;       // A_1 w = P_{j,1} w and K w = P_{j,d} w
  bool orthogonal_ok = true;  // C_{j-1} w = 0
  bool ranks_ok = true;       // rank C_k^t = dim V_0 + ... + dim V_k
  bool complete = false;      // dimensions sum to |Omega|
  bool ok() const { return eigen_ok && orthogonal_ok && ranks_ok && complete; }
};

// Builds V_j as prod_{l<j}(A_1 - P_{l,1} I) im(C_j^t) and checks every
// spanning vector.
SpectrumReport verify_spectrum(const SchemeContext& ctx);

// The same on one class of Q+(2d-1, q), d even, for the incidence A'.
struct ClassSpectrumReport {
  int rank_point_incidence = 0;
  int dim_v0 = 0;
  int dim_v1 = 0;
  bool ok = false;
};
ClassSpectrumReport verify_class_spectrum(const ClassScheme& cs);

}  // namespace polarcl

#endif  // POLARCL_SCHEME_HPP_

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

#ifndef POLARCL_GEOMETRY_HPP_
#define POLARCL_GEOMETRY_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "polarcl/descriptor.hpp"
#include "polarcl/field.hpp"

namespace polarcl {

using Vec = Eigen::Matrix<Elem, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Elem, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Reduced row echelon form with zero rows removed.
Mat rref(const Field& f, const Mat& m);
int rank(const Field& f, const Mat& m);
// Basis (as rows, in echelon form) of {v : m v = 0}.
Mat nullspace(const Field& f, const Mat& m, int cols);
// Scales v so that its first nonzero entry is 1.
Vec normalized(const Field& f, const Vec& v);

// A projective subspace given by its canonical reduced echelon basis.
class Subspace {
 public:
  // The empty subspace of GF(q)^n.
  explicit Subspace(int n = 0) : basis_(0, n) {}

  static Subspace span(const Field& f, const Mat& rows);
  static Subspace point(const Field& f, const Vec& v);
  // Reads "r0;r1;..." with comma-separated encodings. Throws
  // std::invalid_argument for malformed or non-canonical input; the message
  // carries the canonical form when the rows span a subspace.
  static Subspace parse(const Field& f, std::string_view text, int n);

  const Mat& basis() const { return basis_; }
  // Projective dimension, -1 for the empty subspace.
  int dimension() const { return static_cast<int>(basis_.rows()) - 1; }
  int ambient_size() const { return static_cast<int>(basis_.cols()); }
  std::string serialize() const;
  // Row-major entries as bytes; byte order is the canonical order.
  std::string key() const;
  // All normalized vectors of the subspace, sorted.
  std::vector<Vec> points(const Field& f) const;
  bool contains(const Field& f, const Vec& v) const;

  bool operator==(const Subspace& o) const { return key() == o.key(); }
  bool operator<(const Subspace& o) const { return key() < o.key(); }

 private:
  Mat basis_;
};

std::string vec_key(const Vec& v);

enum class FormKind { kQuadratic, kHermitian, kAlternating };

enum class SectionType { kTangent, kHyperbolic, kElliptic, kParabolic, kHermitian };
const char* to_string(SectionType t);

// A polar space given by its standard form over GF(q).
class PolarGeometry {
 public:
  explicit PolarGeometry(const PolarSpaceDescriptor& desc);

  const PolarSpaceDescriptor& descriptor() const { return desc_; }
  const Field& field() const { return field_; }
  FormKind kind() const { return kind_; }
  int vector_size() const { return n_; }
  // Upper-triangular for quadrics, identity for Hermitian, pairing for W.
  const Mat& form_matrix() const { return form_; }
  const Mat& pairing_matrix() const { return pairing_; }

  // Q(v) for quadrics, f(v, v) for Hermitian forms, 0 for W. Throws
  // std::invalid_argument on a length mismatch.
  Elem evaluate_form(const Vec& v) const;
  Elem pair(const Vec& u, const Vec& v) const;
  bool is_isotropic(const Vec& v) const;
  bool is_totally_isotropic(const Subspace& s) const;
  Subspace perp(const Subspace& s) const;
  // Linear functional h with h . v = pair(v, w).
  Vec functional(const Vec& w) const;

  // Isotropic points in canonical order.
  const std::vector<Vec>& isotropic_points() const { return points_; }
  // Throws std::invalid_argument for the zero functional.
  SectionType classify_hyperplane_section(const Vec& hyperplane) const;
  long long section_point_count(const Vec& hyperplane) const;

 private:
  PolarSpaceDescriptor desc_;
  Field field_;
  FormKind kind_;
  int n_;
  Mat form_;
  Mat pairing_;
  std::vector<Vec> points_;
};

// Dot product over GF(q).
Elem dot(const Field& f, const Vec& a, const Vec& b);
// All normalized vectors of GF(q)^n, sorted.
std::vector<Vec> projective_points(const Field& f, int n);

}  // namespace polarcl

#endif  // POLARCL_GEOMETRY_HPP_

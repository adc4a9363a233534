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

#ifndef POLARCL_DESCRIPTOR_HPP_
#define POLARCL_DESCRIPTOR_HPP_

#include <string>
#include <string_view>

namespace polarcl {

enum class Family {
  kHyperbolic,     // Q+(2d-1, q)
  kParabolic,      // Q(2d, q)
  kElliptic,       // Q-(2d+1, q)
  kHermitianOdd,   // H(2d-1, q), q square
  kHermitianEven,  // H(2d, q), q square
  kSymplectic,     // W(2d-1, q)
};

// Which characterisation of Cameron-Liebler sets applies.
enum class SpaceType {
  kI,    // image of the point-generator incidence transpose
  kII,   // Q+(2d-1, q), d even: one class at a time
  kIII,  // Q(2d, q) or W(2d-1, q) q even, d odd: hyperbolic classes
  kIV,   // W(2d-1, q), q odd, d odd: no image characterisation
};

const char* to_string(SpaceType t);

// Family, rank and field order of a finite classical polar space. The
// parameter e is kept doubled so that Hermitian spaces stay integral.
struct PolarSpaceDescriptor {
  Family family = Family::kSymplectic;
  int rank = 2;
  int q = 2;

  // Validates rank >= 1, prime power q, square q for Hermitian families.
  static PolarSpaceDescriptor make(Family family, int rank, int q);
  // Parses names such as "Q+(5,2)", "Q(6,2)", "Q-(5,2)", "W(3,2)", "H(4,4)".
  static PolarSpaceDescriptor parse(std::string_view name);
  // Family code and rank: "Q+", "Q", "Q-", "W", "H" for H(2d-1, q) and "HE"
  // for H(2d, q).
  static PolarSpaceDescriptor from_code(std::string_view code, int rank, int q);

  int ambient_dimension() const;
  int vector_dimension() const { return ambient_dimension() + 1; }
  int twice_e() const;
  bool is_quadric() const;
  bool is_hermitian() const;
  SpaceType type() const;
  // "Q+", "Q", "Q-", "W" or "H".
  std::string family_code() const;
  std::string name() const;

  bool operator==(const PolarSpaceDescriptor&) const = default;
};

}  // namespace polarcl

#endif  // POLARCL_DESCRIPTOR_HPP_

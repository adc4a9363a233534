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

#include "polarcl/descriptor.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include "polarcl/field.hpp"

namespace polarcl {

const char* to_string(SpaceType t) {
  switch (t) {
    case SpaceType::kI: return "I";
    case SpaceType::kII: return "II";
    case SpaceType::kIII: return "III";
    case SpaceType::kIV: return "IV";
  }
  return "?";
}

PolarSpaceDescriptor PolarSpaceDescriptor::make(Family family, int rank, int q) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  auto [p, n] = prime_power(q);
  if (p == 0) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  if ((family == Family::kHermitianOdd || family == Family::kHermitianEven) && n % 2 != 0) {
    throw std::invalid_argument("Hermitian spaces need a square field order, got q = " +
                                std::to_string(q));
  }
  return PolarSpaceDescriptor{family, rank, q};
}

PolarSpaceDescriptor PolarSpaceDescriptor::parse(std::string_view name) {
  const auto open = name.find('(');
  const auto comma = name.find(',');
  const auto close = name.find(')');
  if (open == std::string_view::npos || comma == std::string_view::npos ||
      close == std::string_view::npos || !(open < comma && comma < close)) {
    throw std::invalid_argument("cannot parse polar space name '" + std::string(name) + "'");
  }
  const std::string_view code = name.substr(0, open);
  int n = 0;
  int q = 0;
  auto parse_int = [&](std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw std::invalid_argument("bad number in '" + std::string(name) + "'");
  };
  parse_int(name.substr(open + 1, comma - open - 1), n);
  parse_int(name.substr(comma + 1, close - comma - 1), q);
  auto need = [&](bool ok) {
    if (!ok) throw std::invalid_argument("dimension does not fit family in '" + std::string(name) + "'");
  };
  if (code == "Q+") {
    need(n % 2 == 1);
    return make(Family::kHyperbolic, (n + 1) / 2, q);
  }
  if (code == "Q") {
    need(n % 2 == 0);
    return make(Family::kParabolic, n / 2, q);
  }
  if (code == "Q-") {
    need(n % 2 == 1);
    return make(Family::kElliptic, (n - 1) / 2, q);
  }
  if (code == "W") {
    need(n % 2 == 1);
    return make(Family::kSymplectic, (n + 1) / 2, q);
  }
  if (code == "H") {
    if (n % 2 == 1) return make(Family::kHermitianOdd, (n + 1) / 2, q);
    return make(Family::kHermitianEven, n / 2, q);
  }
  throw std::invalid_argument("unknown family '" + std::string(code) + "'");
}

PolarSpaceDescriptor PolarSpaceDescriptor::from_code(std::string_view code, int rank, int q) {
  if (code == "Q+") return make(Family::kHyperbolic, rank, q);
  if (code == "Q") return make(Family::kParabolic, rank, q);
  if (code == "Q-") return make(Family::kElliptic, rank, q);
  if (code == "W") return make(Family::kSymplectic, rank, q);
  if (code == "H") return make(Family::kHermitianOdd, rank, q);
  if (code == "HE") return make(Family::kHermitianEven, rank, q);
  throw std::invalid_argument("unknown family '" + std::string(code) + "'");
}

int PolarSpaceDescriptor::ambient_dimension() const {
  switch (family) {
    case Family::kHyperbolic:
    case Family::kSymplectic:
    case Family::kHermitianOdd:
      return 2 * rank - 1;
    case Family::kParabolic:
    case Family::kHermitianEven:
      return 2 * rank;
    case Family::kElliptic:
      return 2 * rank + 1;
  }
  return -1;
}

int PolarSpaceDescriptor::twice_e() const {
  switch (family) {
    case Family::kHyperbolic: return 0;
    case Family::kHermitianOdd: return 1;
    case Family::kParabolic:
    case Family::kSymplectic: return 2;
    case Family::kHermitianEven: return 3;
    case Family::kElliptic: return 4;
  }
  return -1;
}

bool PolarSpaceDescriptor::is_quadric() const {
  return family == Family::kHyperbolic || family == Family::kParabolic ||
         family == Family::kElliptic;
}

bool PolarSpaceDescriptor::is_hermitian() const {
  return family == Family::kHermitianOdd || family == Family::kHermitianEven;
}

SpaceType PolarSpaceDescriptor::type() const {
  const bool d_odd = rank % 2 == 1;
  switch (family) {
    case Family::kHyperbolic:
      return d_odd ? SpaceType::kI : SpaceType::kII;
    case Family::kParabolic:
      return d_odd ? SpaceType::kIII : SpaceType::kI;
    case Family::kSymplectic:
      if (!d_odd) return SpaceType::kI;
      return q % 2 == 0 ? SpaceType::kIII : SpaceType::kIV;
    default:
      return SpaceType::kI;
  }
}

std::string PolarSpaceDescriptor::family_code() const {
  switch (family) {
    case Family::kHyperbolic: return "Q+";
    case Family::kParabolic: return "Q";
    case Family::kElliptic: return "Q-";
    case Family::kSymplectic: return "W";
    case Family::kHermitianOdd:
    case Family::kHermitianEven: return "H";
  }
  return "?";
}

std::string PolarSpaceDescriptor::name() const {
  return family_code() + "(" + std::to_string(ambient_dimension()) + "," + std::to_string(q) + ")";
}

}  // namespace polarcl

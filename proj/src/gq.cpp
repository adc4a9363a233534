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

#include "polarcl/gq.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace polarcl {

GeneralizedQuadrangle GeneralizedQuadrangle::from_instance(const PolarSpaceInstance& inst) {
  if (inst.rank() != 2) throw std::invalid_argument("a generalised quadrangle needs rank 2, got " + inst.descriptor().name());
  std::vector<std::vector<int>> lines;
  for (int g = 0; g < inst.num_generators(); ++g) {
    std::vector<int> pts;
    const Bitset& b = inst.generator_points(g);
    for (auto p = b.find_first(); p != Bitset::npos; p = b.find_next(p)) pts.push_back(static_cast<int>(p));
    lines.push_back(std::move(pts));
  }
  return from_lines(inst.num_points(), std::move(lines));
}

GeneralizedQuadrangle GeneralizedQuadrangle::from_lines(int num_points, std::vector<std::vector<int>> lines) {
  if (num_points <= 0 || lines.empty()) throw std::invalid_argument("empty incidence structure");
  GeneralizedQuadrangle gq;
  gq.np_ = num_points;
  gq.point_lines_.assign(num_points, {});
  for (auto& l : lines) {
    std::sort(l.begin(), l.end());
    if (std::adjacent_find(l.begin(), l.end()) != l.end()) throw std::invalid_argument("repeated point on a line");
    Bitset b(num_points);
    for (int p : l) {
      if (p < 0 || p >= num_points) throw std::invalid_argument("point index out of range");
      b.set(p);
    }
    gq.line_bits_.push_back(std::move(b));
  }
  gq.lines_ = std::move(lines);
  const int s1 = static_cast<int>(gq.lines_[0].size());
  for (int l = 0; l < gq.num_lines(); ++l) {
    if (static_cast<int>(gq.lines_[l].size()) != s1) throw std::invalid_argument("lines of unequal size");
    for (int p : gq.lines_[l]) gq.point_lines_[p].push_back(l);
  }
  const int t1 = static_cast<int>(gq.point_lines_[0].size());
  for (int p = 0; p < num_points; ++p)
    if (static_cast<int>(gq.point_lines_[p].size()) != t1) throw std::invalid_argument("points on unequal numbers of lines");
  if (s1 < 2 || t1 < 2) throw std::invalid_argument("order must satisfy s, t >= 1");
  gq.s_ = s1 - 1;
  gq.t_ = t1 - 1;
  gq.perp_.assign(num_points, Bitset(num_points));
  for (int p = 0; p < num_points; ++p) {
    int covered = 0;
    for (int l : gq.point_lines_[p]) {
      gq.perp_[p] |= gq.line_bits_[l];
      covered += s1 - 1;
    }
    gq.perp_[p].set(p);
    // Two points on at most one line.
    if (static_cast<int>(gq.perp_[p].count()) != covered + 1) throw std::invalid_argument("two lines share two points");
  }
  for (int p = 0; p < num_points; ++p)
    for (int l = 0; l < gq.num_lines(); ++l) {
      if (gq.line_bits_[l].test(p)) continue;
      if ((gq.perp_[p] & gq.line_bits_[l]).count() != 1)
        throw std::invalid_argument("point " + std::to_string(p) + " and line " + std::to_string(l) +
                                    " violate the quadrangle axiom");
    }
  return gq;
}

GeneralizedQuadrangle GeneralizedQuadrangle::dual() const {
  std::vector<std::vector<int>> lines(point_lines_.begin(), point_lines_.end());
  return from_lines(num_lines(), std::move(lines));
}

IntMatrix GeneralizedQuadrangle::incidence() const {
  IntMatrix a = IntMatrix::Zero(np_, num_lines());
  for (int l = 0; l < num_lines(); ++l)
    for (int p : lines_[l]) a(p, l) = 1;
  return a;
}

TightSetResult tight_set_test(const GeneralizedQuadrangle& gq, const Bitset& T) {
  if (static_cast<int>(T.size()) != gq.num_points()) throw std::invalid_argument("point set size mismatch");
  TightSetResult r;
  const BigInt size = T.count();
  r.i = Rational(size, BigInt(gq.s() + 1));
  r.verdict = Verdict::kPass;
  for (int p = 0; p < gq.num_points(); ++p) {
    const BigInt c = (gq.perp(p) & T).count();
    // c = s chi_P + |T| / (s + 1), cleared of the denominator.
    if (c * (gq.s() + 1) != BigInt(gq.s() * (gq.s() + 1) * (T.test(p) ? 1 : 0)) + size) {
      r.verdict = Verdict::kFail;
      r.witness = p;
      break;
    }
  }
  return r;
}

const char* to_string(TightSetLabel l) {
  switch (l) {
    case TightSetLabel::kLineUnion:
      return "line_union";
    case TightSetLabel::kSubquadrangle:
      return "subquadrangle";
    case TightSetLabel::kOther:
      return "other";
  }
  return "?";
}

namespace {

bool is_line_union(const GeneralizedQuadrangle& gq, const Bitset& T) {
  std::vector<int> inside;
  for (int l = 0; l < gq.num_lines(); ++l)
    if (gq.line_points(l).is_subset_of(T)) inside.push_back(l);
  std::function<bool(const Bitset&)> cover = [&](const Bitset& left) {
    const auto p = left.find_first();
    if (p == Bitset::npos) return true;
    for (int l : gq.point_lines(static_cast<int>(p))) {
      if (!std::binary_search(inside.begin(), inside.end(), l)) continue;
      if (!gq.line_points(l).is_subset_of(left)) continue;
      if (cover(left - gq.line_points(l))) return true;
    }
    return false;
  };
  return cover(T);
}

bool is_subquadrangle(const GeneralizedQuadrangle& gq, const Bitset& T) {
  if (gq.s() % gq.t() != 0) return false;
  const int sub_s = gq.s() / gq.t();
  std::vector<int> index(gq.num_points(), -1);
  int m = 0;
  for (auto p = T.find_first(); p != Bitset::npos; p = T.find_next(p)) index[p] = m++;
  if (m == 0) return false;
  std::vector<std::vector<int>> lines;
  for (int l = 0; l < gq.num_lines(); ++l) {
    const Bitset meet = gq.line_points(l) & T;
    if (meet.count() < 2) continue;
    std::vector<int> pts;
    for (auto p = meet.find_first(); p != Bitset::npos; p = meet.find_next(p)) pts.push_back(index[p]);
    lines.push_back(std::move(pts));
  }
  if (lines.empty()) return false;
  try {
    const GeneralizedQuadrangle sub = GeneralizedQuadrangle::from_lines(m, std::move(lines));
    return sub.s() == sub_s && sub.t() == gq.t();
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

TightSetLabel classify_tight_set(const GeneralizedQuadrangle& gq, const Bitset& T) {
  if (is_line_union(gq, T)) return TightSetLabel::kLineUnion;
  if (is_subquadrangle(gq, T)) return TightSetLabel::kSubquadrangle;
  return TightSetLabel::kOther;
}

bool GqReport::consistent() const {
  for (Verdict v : {kernel, disjoint_counts, meeting_counts, eigenvector, dual_tight})
    if (v != image) return false;
  return true;
}

GqReport gq_cl_test(const GeneralizedQuadrangle& gq, const Bitset& L) {
  if (static_cast<int>(L.size()) != gq.num_lines()) throw std::invalid_argument("line set size mismatch");
  auto verdict = [](bool ok) { return ok ? Verdict::kPass : Verdict::kFail; };
  const int n = gq.num_lines();
  const int s = gq.s();
  const int t = gq.t();
  const BigInt size = L.count();
  GqReport r;
  r.x = Rational(size, BigInt(t + 1));

  const IntMatrix a = gq.incidence();
  IntVector chi = IntVector::Zero(n);
  for (int l = 0; l < n; ++l) chi(l) = L.test(l);
  IntMatrix stacked(a.rows() + 1, n);
  stacked.topRows(a.rows()) = a;
  stacked.row(a.rows()) = chi.transpose();
  r.image = verdict(bareiss_rank(stacked) == bareiss_rank(a));
  r.kernel = verdict(RowSpace(a).contains(chi));

  // Lines of L disjoint from / meeting each line.
  bool disjoint_ok = true, meeting_ok = true, eigen_ok = true;
  const BigInt scale = BigInt(t + 1) * (BigInt(s) * t + 1);
  for (int l = 0; l < n; ++l) {
    std::int64_t meet = 0, disjoint = 0, degree = 0;
    Bitset touching(n);
    for (int p : gq.line(l))
      for (int m : gq.point_lines(p)) touching.set(m);
    touching.reset(l);
    for (int m = 0; m < n; ++m) {
      if (m == l) continue;
      if (touching.test(m)) meet += L.test(m);
      else {
        disjoint += L.test(m);
        ++degree;
      }
    }
    const int c = L.test(l) ? 1 : 0;
    disjoint_ok = disjoint_ok && BigInt(disjoint) * (t + 1) == (size - c * (t + 1)) * t;
    meeting_ok = meeting_ok && BigInt(meet) * (t + 1) == size + c * (t - 1) * (t + 1);
    // w = scale chi - |L| j with x / (st + 1) = |L| / scale.
    const BigInt kw = scale * disjoint - size * degree;
    const BigInt w = scale * c - size;
    eigen_ok = eigen_ok && kw == -BigInt(t) * w;
  }
  r.disjoint_counts = verdict(disjoint_ok);
  r.meeting_counts = verdict(meeting_ok);
  r.eigenvector = verdict(eigen_ok);
  r.dual_tight = tight_set_test(gq.dual(), L).verdict;
  return r;
}

}  // namespace polarcl

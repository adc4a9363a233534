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

#include "polarcl/clsets.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace polarcl {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kVacuous:
      return "vacuous";
    case Verdict::kNotApplicable:
      return "not_applicable";
  }
  return "?";
}

CLContext::CLContext(const SchemeContext& scheme) : scheme_(&scheme), n_(scheme.size()) {
  const PolarSpaceDescriptor& desc = scheme.descriptor();
  const PolarCounts counts(desc);
  disjoint_ = &scheme.relation(scheme.diameter());
  type_label_ = to_string(desc.type());
  pencil_ = counts.pencil_size();
  lambda_ = counts.lambda();
  spread_ = counts.spread_size();
  eigenspaces_ = polarcl::cl_eigenspaces(desc);
  switch (desc.type()) {
    case SpaceType::kI:
      image_name_ = "A";
      break;
    case SpaceType::kII:
      image_name_ = "A_class";
      break;
    case SpaceType::kIII:
      image_name_ = "B";
      break;
    case SpaceType::kIV:
      image_name_ = "none";
      break;
  }
  const int np = instance().num_points();
  point_members_.resize(np);
  for (int p = 0; p < np; ++p) point_members_[p] = instance().point_generators(p);
}

CLContext::CLContext(const SchemeContext& scheme, int class_label) : scheme_(&scheme) {
  const PolarSpaceDescriptor& desc = scheme.descriptor();
  if (desc.family != Family::kHyperbolic || desc.rank % 2 != 0)
    throw std::invalid_argument("class universe needs Q+(2d-1, q) with d even, got " + desc.name());
  cls_ = &scheme.restricted_scheme(class_label);
  n_ = cls_->size();
  disjoint_ = &cls_->relations()[cls_->diameter()];
  const PolarCounts counts(desc);
  type_label_ = "II-class";
  image_name_ = "A'";
  pencil_ = counts.pencil_size() / 2;
  lambda_ = counts.lambda();
  spread_ = counts.spread_size();
  eigenspaces_ = {0, 1};
  const int np = instance().num_points();
  point_members_.resize(np);
  for (int p = 0; p < np; ++p)
    for (int g : instance().point_generators(p))
      if (cls_->local_index(g) >= 0) point_members_[p].push_back(cls_->local_index(g));
}

bool CLContext::eigenspace_membership(const IntVector& v, const std::vector<int>& S) const {
  return cls_ ? cls_->eigenspace_membership(v, S) : scheme_->eigenspace_membership(v, S);
}

const RowSpace* CLContext::image() const {
  if (cls_) return &cls_->point_rowspace();
  switch (descriptor().type()) {
    case SpaceType::kI:
      return &scheme_->point_rowspace();
    case SpaceType::kII:
      return &scheme_->class_point_rowspace();
    case SpaceType::kIII:
      return &scheme_->hyperbolic_rowspace();
    case SpaceType::kIV:
      return nullptr;
  }
  return nullptr;
}

const IntMatrix& CLContext::point_incidence() const {
  return cls_ ? cls_->point_incidence() : scheme_->point_incidence();
}

IntVector CLContext::characteristic(const GeneratorSet& L) const {
  IntVector v = IntVector::Zero(n_);
  for (auto i = L.find_first(); i != GeneratorSet::npos; i = L.find_next(i)) v(static_cast<Eigen::Index>(i)) = 1;
  return v;
}

Rational CLContext::parameter(const GeneratorSet& L) const {
  return Rational(BigInt(L.count()), pencil_);
}

GeneratorSet CLContext::from_global(const std::vector<int>& generators) const {
  GeneratorSet s(n_);
  for (int g : generators) {
    const int l = local_index(g);
    if (l < 0) throw std::invalid_argument("generator " + std::to_string(g) + " is outside the universe");
    s.set(l);
  }
  return s;
}

std::vector<int> CLContext::to_global(const GeneratorSet& L) const {
  std::vector<int> out;
  for (auto i = L.find_first(); i != GeneratorSet::npos; i = L.find_next(i))
    out.push_back(global_index(static_cast<int>(i)));
  return out;
}

namespace {

void check_size(const CLContext& ctx, const GeneratorSet& L) {
  if (static_cast<int>(L.size()) != ctx.size())
    throw std::invalid_argument("set size does not match the universe");
}

std::int64_t count_in(const std::vector<int>& list, const GeneratorSet& L) {
  std::int64_t c = 0;
  for (int g : list) c += L.test(g);
  return c;
}

bool is_integral(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

}  // namespace

TestOutcome test_disjointness_counts(const CLContext& ctx, const GeneratorSet& L) {
  check_size(ctx, L);
  const BigInt size = L.count();
  TestOutcome out;
  out.verdict = Verdict::kPass;
  for (int pi = 0; pi < ctx.size(); ++pi) {
    const BigInt cnt = count_in(ctx.disjoint_lists()[pi], L);
    const BigInt chi = L.test(pi) ? 1 : 0;
    // cnt = (|L|/pencil - chi) lambda, cleared of the denominator.
    if (cnt * ctx.pencil_size() != (size - chi * ctx.pencil_size()) * ctx.lambda()) {
      out.verdict = Verdict::kFail;
      out.witness = pi;
      out.detail = std::to_string(static_cast<long long>(cnt)) + " disjoint members of L";
      return out;
    }
  }
  return out;
}

TestOutcome test_eigenvector(const CLContext& ctx, const GeneratorSet& L) {
  check_size(ctx, L);
  const BigInt size = L.count();
  const BigInt scale = ctx.pencil_size() * ctx.spread_size();
  TestOutcome out;
  out.verdict = Verdict::kPass;
  // w = scale * (chi - x/(q^(d+e-1)+1) j) = scale chi - |L| j.
  for (int pi = 0; pi < ctx.size(); ++pi) {
    const auto& nbrs = ctx.disjoint_lists()[pi];
    const BigInt kw = scale * count_in(nbrs, L) - size * static_cast<long long>(nbrs.size());
    const BigInt w = scale * (L.test(pi) ? 1 : 0) - size;
    if (kw != -ctx.lambda() * w) {
      out.verdict = Verdict::kFail;
      out.witness = pi;
      out.detail = "K w differs from -lambda w";
      return out;
    }
  }
  return out;
}

TestOutcome test_eigenspace(const CLContext& ctx, const GeneratorSet& L) {
  check_size(ctx, L);
  TestOutcome out;
  out.verdict = ctx.eigenspace_membership(ctx.characteristic(L), ctx.cl_eigenspaces()) ? Verdict::kPass
                                                                                          : Verdict::kFail;
  return out;
}

TestOutcome test_image(const CLContext& ctx, const GeneratorSet& L) {
  check_size(ctx, L);
  TestOutcome out;
  const RowSpace* rs = ctx.image();
  if (!rs) {
    out.verdict = Verdict::kNotApplicable;
    out.detail = "no image characterisation on " + ctx.descriptor().name();
    return out;
  }
  out.verdict = rs->contains(ctx.characteristic(L)) ? Verdict::kPass : Verdict::kFail;
  return out;
}

TestOutcome test_spread_intersections(const CLContext& ctx, const GeneratorSet& L,
                                      const std::vector<GeneratorSet>& spreads) {
  check_size(ctx, L);
  TestOutcome out;
  if (spreads.empty()) {
    out.verdict = Verdict::kVacuous;
    out.detail = "no spreads supplied";
    return out;
  }
  const BigInt size = L.count();
  out.verdict = Verdict::kPass;
  for (std::size_t s = 0; s < spreads.size(); ++s) {
    if (!is_spread(ctx, spreads[s])) throw std::invalid_argument("set " + std::to_string(s) + " is not a spread");
    if (out.verdict == Verdict::kPass && BigInt((L & spreads[s]).count()) * ctx.pencil_size() != size) {
      out.verdict = Verdict::kFail;
      out.detail = "spread " + std::to_string(s) + " meets L in " + std::to_string((L & spreads[s]).count());
    }
  }
  return out;
}

bool CLReport::consistent() const {
  std::optional<Verdict> seen;
  for (const TestOutcome* t : {&disjointness, &eigenvector, &eigenspace, &image, &spreads}) {
    if (t->verdict != Verdict::kPass && t->verdict != Verdict::kFail) continue;
    if (seen && *seen != t->verdict) return false;
    seen = t->verdict;
  }
  return true;
}

CLReport check(const CLContext& ctx, const GeneratorSet& L, const std::vector<GeneratorSet>& spreads) {
  CLReport r;
  r.type_label = ctx.type_label();
  r.image_name = ctx.image_name();
  r.size = static_cast<int>(L.count());
  r.x = ctx.parameter(L);
  r.disjointness = test_disjointness_counts(ctx, L);
  r.eigenvector = test_eigenvector(ctx, L);
  r.eigenspace = test_eigenspace(ctx, L);
  r.image = test_image(ctx, L);
  r.spreads = test_spread_intersections(ctx, L, spreads);
  return r;
}

std::optional<int> regularity(const CLContext& ctx, const GeneratorSet& S) {
  check_size(ctx, S);
  const int np = ctx.instance().num_points();
  std::optional<int> direct;
  bool regular = true;
  std::vector<std::int64_t> counts(np);
  for (int p = 0; p < np; ++p) {
    counts[p] = count_in(ctx.point_members(p), S);
    if (!direct) direct = static_cast<int>(counts[p]);
    else if (*direct != counts[p]) regular = false;
  }
  const IntVector a_chi = ctx.point_incidence() * ctx.characteristic(S);
  for (int p = 0; p < np; ++p)
    if (a_chi(p) != counts[p]) throw std::logic_error("point counts disagree with A chi");
  if (!regular) return std::nullopt;
  return direct.value_or(0);
}

bool is_regular_system(const CLContext& ctx, const GeneratorSet& S, int m) {
  const auto r = regularity(ctx, S);
  return r && *r == m;
}

bool is_spread(const CLContext& ctx, const GeneratorSet& S) { return is_regular_system(ctx, S, 1); }

bool spread_vector_check(const CLContext& ctx, const GeneratorSet& S) {
  check_size(ctx, S);
  // Orthogonal to V_0 exactly when |S| = |Omega| / pencil.
  if (BigInt(S.count()) * ctx.pencil_size() != ctx.size()) return false;
  const int diameter = ctx.restricted() ? ctx.class_scheme()->diameter() : ctx.scheme().diameter();
  std::vector<int> keep;
  for (int j = 0; j <= diameter; ++j) {
    const auto& cl = ctx.cl_eigenspaces();
    if (j == 0 || std::find(cl.begin(), cl.end(), j) == cl.end()) keep.push_back(j);
  }
  return ctx.eigenspace_membership(ctx.characteristic(S), keep);
}

Construction point_pencil(const CLContext& ctx, int point) {
  if (point < 0 || point >= ctx.instance().num_points()) throw std::invalid_argument("point index out of range");
  Construction c{"point_pencil", "pencil(" + std::to_string(point) + ")", ctx.empty_set(), Rational(1)};
  for (int g : ctx.point_members(point)) c.set.set(g);
  return c;
}

Construction hyperbolic_class(const CLContext& ctx, int index) {
  if (ctx.restricted() || ctx.descriptor().type() != SpaceType::kIII)
    throw std::invalid_argument("hyperbolic classes need a type III space");
  const auto& classes = ctx.scheme().hyperbolic_classes();
  if (index < 0 || index >= static_cast<int>(classes.size()))
    throw std::invalid_argument("hyperbolic class index out of range");
  Construction c{"hyperbolic_class", "hyperbolic_class(" + std::to_string(index) + ")", ctx.empty_set(), Rational(1)};
  for (int g : classes[index].members) c.set.set(g);
  return c;
}

namespace {

std::vector<GeneratorSet> embedded_sections(const CLContext& ctx) {
  const PolarSpaceDescriptor& desc = ctx.descriptor();
  if (ctx.restricted()) throw std::invalid_argument("embedded polar spaces need the full generator set");
  if (desc.twice_e() < 2) throw std::invalid_argument("embedded polar spaces need e >= 1, got " + desc.name());
  std::vector<GeneratorSet> out;
  if (desc.family == Family::kSymplectic) {
    if (desc.type() != SpaceType::kIII)
      throw std::invalid_argument("embedded sections of " + desc.name() + " are not supported");
    const auto& classes = ctx.scheme().hyperbolic_classes();
    for (std::size_t a = 0; a < classes.size(); ++a)
      for (std::size_t b = a + 1; b < classes.size(); ++b) {
        if (classes[a].hyperplane != classes[b].hyperplane) continue;
        GeneratorSet s(ctx.size());
        for (int g : classes[a].members) s.set(g);
        for (int g : classes[b].members) s.set(g);
        out.push_back(std::move(s));
      }
    return out;
  }
  SectionType wanted;
  switch (desc.family) {
    case Family::kElliptic:
      wanted = SectionType::kParabolic;
      break;
    case Family::kParabolic:
      wanted = SectionType::kHyperbolic;
      break;
    case Family::kHermitianEven:
      wanted = SectionType::kHermitian;
      break;
    default:
      throw std::invalid_argument("no embedded polar space construction for " + desc.name());
  }
  const PolarSpaceInstance& inst = ctx.instance();
  const PolarGeometry& geo = inst.geometry();
  const Field& f = inst.field();
  for (const Vec& h : projective_points(f, desc.vector_dimension())) {
    if (geo.classify_hyperplane_section(h) != wanted) continue;
    Bitset pts(inst.num_points());
    for (int p = 0; p < inst.num_points(); ++p)
      if (dot(f, h, inst.points()[p]) == 0) pts.set(p);
    GeneratorSet s(ctx.size());
    for (int g = 0; g < ctx.size(); ++g)
      if (inst.generator_points(g).is_subset_of(pts)) s.set(g);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

int embedded_polar_space_count(const CLContext& ctx) { return static_cast<int>(embedded_sections(ctx).size()); }

Construction embedded_polar_space(const CLContext& ctx, int which) {
  auto sections = embedded_sections(ctx);
  if (which < 0 || which >= static_cast<int>(sections.size()))
    throw std::invalid_argument("embedded section index out of range");
  const PolarCounts counts(ctx.descriptor());
  const BigInt x = counts.q_half_power(ctx.descriptor().twice_e() - 2) + 1;
  return Construction{"embedded_polar_space", "embedded(" + std::to_string(which) + ")", std::move(sections[which]),
                      Rational(x)};
}

Construction base_plane(const CLContext& ctx, int pi) {
  if (ctx.restricted() || ctx.descriptor().type() != SpaceType::kIII || ctx.descriptor().rank != 3)
    throw std::invalid_argument("base-planes need a type III space of rank 3");
  if (pi < 0 || pi >= ctx.size()) throw std::invalid_argument("generator index out of range");
  Construction c{"base_plane", "base_plane(" + std::to_string(pi) + ")", ctx.empty_set(), Rational(1)};
  for (int g = 0; g < ctx.size(); ++g)
    if (ctx.distance(g, pi) <= 1) c.set.set(g);
  return c;
}

Construction base_solid(const CLContext& ctx, int center) {
  if (!ctx.restricted() || ctx.descriptor().rank != 4)
    throw std::invalid_argument("base-solids need one class of Q+(7, q)");
  const ClassScheme& cs = *ctx.class_scheme();
  if (center < 0 || center >= ctx.scheme().size()) throw std::invalid_argument("generator index out of range");
  if (cs.local_index(center) >= 0) throw std::invalid_argument("the center must lie in the opposite class");
  Construction c{"base_solid", "base_solid(" + std::to_string(center) + ")", ctx.empty_set(), Rational(1)};
  // Meeting in a plane is distance d - 1 - 2 = 1.
  for (int l = 0; l < ctx.size(); ++l)
    if (ctx.scheme().distance(cs.members()[l], center) == 1) c.set.set(l);
  return c;
}

Construction complement(const CLContext& ctx, const Construction& a) {
  return Construction{"complement", "complement(" + a.label + ")", ~a.set,
                      Rational(ctx.max_parameter()) - a.predicted_x};
}

Construction disjoint_union(const Construction& a, const Construction& b) {
  if (a.set.size() != b.set.size() || a.set.intersects(b.set))
    throw std::invalid_argument("union needs disjoint sets over one universe");
  return Construction{"union", "union(" + a.label + "," + b.label + ")", a.set | b.set, a.predicted_x + b.predicted_x};
}

Construction difference(const Construction& a, const Construction& b) {
  if (a.set.size() != b.set.size() || !b.set.is_subset_of(a.set))
    throw std::invalid_argument("difference needs the second set inside the first");
  return Construction{"difference", "difference(" + a.label + "," + b.label + ")", a.set - b.set,
                      a.predicted_x - b.predicted_x};
}

IntersectionProfile intersection_distribution(const CLContext& ctx, const GeneratorSet& L, int probe) {
  check_size(ctx, L);
  if (probe < 0 || probe >= ctx.size()) throw std::invalid_argument("probe index out of range");
  IntersectionProfile r;
  r.probe = probe;
  r.probe_in_set = L.test(probe);
  const int d = ctx.descriptor().rank;
  const int steps = ctx.restricted() ? ctx.class_scheme()->diameter() : d;
  const int stride = ctx.restricted() ? 2 : 1;
  r.counts.assign(steps + 1, 0);
  for (auto s = L.find_first(); s != GeneratorSet::npos; s = L.find_next(s))
    r.counts[ctx.distance(static_cast<int>(s), probe) / stride]++;
  const Rational x = ctx.parameter(L);
  if (!is_integral(x) || !ctx.eigenspace_membership(ctx.characteristic(L), {0, 1})) return r;
  const BigInt xi = boost::multiprecision::numerator(x);
  r.verdict = Verdict::kPass;
  for (int i = 0; i <= steps; ++i) {
    r.predicted.push_back(ctx.restricted() ? class_distance_profile(d, ctx.descriptor().q, xi, i, r.probe_in_set)
                                           : distance_profile(ctx.descriptor(), xi, i, r.probe_in_set));
    if (r.predicted.back() != r.counts[i]) r.verdict = Verdict::kFail;
  }
  return r;
}

ZProfile z_profile(const CLContext& ctx, const GeneratorSet& L, int pi, int point) {
  check_size(ctx, L);
  if (ctx.restricted() || ctx.descriptor().type() != SpaceType::kI)
    throw std::invalid_argument("z-profile needs a type I space");
  if (pi < 0 || pi >= ctx.size() || L.test(pi)) throw std::invalid_argument("pi must be a generator outside L");
  const PolarSpaceInstance& inst = ctx.instance();
  const Bitset& pi_points = inst.generator_points(pi);
  if (point < 0 || point >= inst.num_points() || !pi_points.test(point))
    throw std::invalid_argument("P must be a point of pi");
  const int d = ctx.descriptor().rank;
  ZProfile r;
  r.z.assign(d - 1, 0);
  for (auto s = L.find_first(); s != GeneratorSet::npos; s = L.find_next(s)) {
    const Bitset meet = inst.generator_points(static_cast<int>(s)) & pi_points;
    if (!meet.test(point)) continue;
    r.z[inst.dimension_of(meet)]++;
  }
  if (test_disjointness_counts(ctx, L).verdict != Verdict::kPass) return r;
  r.verdict = Verdict::kPass;
  for (int j = 0; j <= d - 2; ++j)
    if (BigInt(r.z[d - j - 2]) != r.z[d - 2] * z_factor(ctx.descriptor(), j)) r.verdict = Verdict::kFail;
  return r;
}

std::int64_t disjoint_to_both(const CLContext& ctx, const GeneratorSet& L, int a, int b) {
  check_size(ctx, L);
  const int d = ctx.descriptor().rank;
  std::int64_t c = 0;
  for (auto s = L.find_first(); s != GeneratorSet::npos; s = L.find_next(s))
    if (ctx.distance(static_cast<int>(s), a) == d && ctx.distance(static_cast<int>(s), b) == d) ++c;
  return c;
}

std::vector<CorpusEntry> build_corpus(const CLContext& ctx, std::uint64_t seed, int min_size) {
  std::mt19937_64 rng(seed);
  const int n = ctx.size();
  const int np = ctx.instance().num_points();
  auto pick = [&](int bound) { return static_cast<int>(std::uniform_int_distribution<int>(0, bound - 1)(rng)); };

  std::vector<Construction> base;
  for (int k = 0; k < std::min(np, 24); ++k) base.push_back(point_pencil(ctx, pick(np)));
  const PolarSpaceDescriptor& desc = ctx.descriptor();
  if (!ctx.restricted() && desc.type() == SpaceType::kIII) {
    const int h = static_cast<int>(ctx.scheme().hyperbolic_classes().size());
    for (int k = 0; k < 12; ++k) base.push_back(hyperbolic_class(ctx, pick(h)));
    if (desc.rank == 3)
      for (int k = 0; k < 12; ++k) base.push_back(base_plane(ctx, pick(n)));
  }
  int sections = 0;
  try {
    sections = embedded_polar_space_count(ctx);
  } catch (const std::invalid_argument&) {
  }
  for (int k = 0; k < std::min(sections, 8); ++k) base.push_back(embedded_polar_space(ctx, pick(sections)));
  if (ctx.restricted() && desc.rank == 4) {
    const ClassScheme& cs = *ctx.class_scheme();
    for (int k = 0; k < 12; ++k) {
      int g = pick(ctx.scheme().size());
      while (cs.local_index(g) >= 0) g = pick(ctx.scheme().size());
      base.push_back(base_solid(ctx, g));
    }
  }
  if (!ctx.restricted() && desc.type() == SpaceType::kII) {
    // Pencils of one class at P joined with pencils of the other class at P'.
    const auto& labels = ctx.instance().class_labels();
    for (int k = 0; k < 12; ++k) {
      const int p1 = pick(np), p2 = pick(np);
      Construction c{"mixed_pencils", "mixed(" + std::to_string(p1) + "," + std::to_string(p2) + ")",
                     ctx.empty_set(), Rational(1)};
      for (int g : ctx.point_members(p1))
        if (labels[g] == 0) c.set.set(g);
      for (int g : ctx.point_members(p2))
        if (labels[g] == 1) c.set.set(g);
      base.push_back(std::move(c));
    }
  }
  Construction all{"all", "all", ~ctx.empty_set(), Rational(ctx.max_parameter())};
  Construction none{"empty", "empty", ctx.empty_set(), Rational(0)};

  std::vector<CorpusEntry> out;
  std::vector<GeneratorSet> positives;
  auto add = [&](const std::string& label, const GeneratorSet& s) { out.push_back({label, s}); };
  auto add_cl = [&](const Construction& c) {
    add(c.label, c.set);
    positives.push_back(c.set);
  };
  add_cl(all);
  add_cl(none);
  for (const auto& c : base) {
    add_cl(c);
    add_cl(complement(ctx, c));
  }
  for (std::size_t a = 0; a < base.size(); ++a)
    for (std::size_t b = a + 1; b < base.size(); ++b)
      if (!base[a].set.intersects(base[b].set)) {
        const Construction u = disjoint_union(base[a], base[b]);
        add_cl(u);
        add_cl(difference(u, base[b]));
      }
  const std::size_t n_pos = positives.size();
  for (std::size_t k = 0; k < n_pos; ++k) {
    GeneratorSet s = positives[k];
    s.flip(pick(n));
    add("flip(" + out[k].label + ")", s);
    // Swap one member for a non-member to keep |L| and x.
    GeneratorSet t = positives[k];
    if (t.any() && !t.all()) {
      int in = pick(n), outside = pick(n);
      while (!t.test(in)) in = pick(n);
      while (t.test(outside)) outside = pick(n);
      t.reset(in);
      t.set(outside);
      add("swap(" + out[k].label + ")", t);
    }
  }
  const int pencil = static_cast<int>(to_int64(ctx.pencil_size()));
  while (static_cast<int>(out.size()) < min_size) {
    GeneratorSet s(n);
    if (out.size() % 2 == 0) {
      for (int g = 0; g < n; ++g)
        if (rng() & 1) s.set(g);
      add("random", s);
    } else {
      const int target = std::min(n, pencil * (1 + pick(3)));
      while (static_cast<int>(s.count()) < target) s.set(pick(n));
      add("random_sized", s);
    }
  }
  return out;
}

}  // namespace polarcl

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

#include "polarcl/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "polarcl/search.hpp"

namespace polarcl {
namespace {

const char* const kCountSpaces[] = {"Q+(5,2)", "Q+(7,2)", "Q(4,2)", "Q(6,2)",  "Q-(5,2)",
                                    "W(3,2)",  "W(3,3)",  "W(5,2)", "H(3,4)", "H(4,4)"};
const char* const kSchemeSpaces[] = {"Q(6,2)", "Q-(5,2)", "H(3,4)", "Q+(7,2)"};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 5) failures.push_back(what);
    }
  }
};

class Spaces {
 public:
  const SchemeContext& get(const std::string& name) {
    auto& slot = cache_[name];
    if (!slot) slot = std::make_unique<SchemeContext>(PolarSpaceDescriptor::parse(name));
    return *slot;
  }

 private:
  std::map<std::string, std::unique_ptr<SchemeContext>> cache_;
};

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<int> members(const Bitset& s) {
  std::vector<int> out;
  for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> even_probes(int size, int count) {
  std::vector<int> out;
  for (int k = 0; k < std::min(size, count); ++k) out.push_back(static_cast<int>(std::int64_t{k} * size / count));
  return out;
}

// A construction with the universe it lives on.
struct Example {
  std::string space;
  int class_label = -1;
  Construction c;
};

std::vector<Example> examples(Spaces& spaces) {
  std::vector<Example> out;
  for (const char* name : kCountSpaces) {
    const CLContext ctx(spaces.get(name));
    out.push_back({name, -1, point_pencil(ctx, 0)});
  }
  {
    const CLContext cls(spaces.get("Q+(7,2)"), 0);
    out.push_back({"Q+(7,2)", 0, point_pencil(cls, 0)});
    int center = 0;
    while (cls.local_index(center) >= 0) ++center;
    out.push_back({"Q+(7,2)", 0, base_solid(cls, center)});
  }
  {
    const CLContext ctx(spaces.get("Q-(5,2)"));
    out.push_back({"Q-(5,2)", -1, embedded_polar_space(ctx, 0)});
  }
  {
    const CLContext ctx(spaces.get("Q(6,2)"));
    out.push_back({"Q(6,2)", -1, hyperbolic_class(ctx, 0)});
    out.push_back({"Q(6,2)", -1, base_plane(ctx, 0)});
  }
  {
    const CLContext ctx(spaces.get("W(5,2)"));
    out.push_back({"W(5,2)", -1, base_plane(ctx, 0)});
  }
  return out;
}

CLContext context_of(Spaces& spaces, const Example& e) {
  return e.class_label < 0 ? CLContext(spaces.get(e.space)) : CLContext(spaces.get(e.space), e.class_label);
}

std::string tag(const Example& e) {
  return e.space + (e.class_label >= 0 ? "[class]" : "") + " " + e.c.label;
}

bool no_failures(const CLReport& r) {
  for (const TestOutcome* t : {&r.disjointness, &r.eigenvector, &r.eigenspace, &r.image, &r.spreads})
    if (t->verdict == Verdict::kFail) return false;
  return r.is_cl();
}

void count_oracle(Spaces& spaces, Outcome& o) {
  const std::map<std::string, std::int64_t> expected = {
      {"Q+(5,2)", 30}, {"Q+(7,2)", 270}, {"Q(4,2)", 15},  {"Q(6,2)", 135}, {"Q-(5,2)", 45},
      {"W(3,2)", 15},  {"W(3,3)", 40},   {"W(5,2)", 135}, {"H(3,4)", 27},  {"H(4,4)", 297}};
  int levels = 0;
  for (const char* name : kCountSpaces) {
    const PolarSpaceInstance& inst = spaces.get(name).instance();
    const PolarCounts pc(inst.descriptor());
    for (int k = 0; k < inst.rank(); ++k) {
      ++levels;
      o.require(BigInt(inst.subspaces(k).size()) == pc.subspace_count(k),
                std::string(name) + " level " + std::to_string(k));
    }
    o.require(inst.num_generators() == expected.at(name), std::string(name) + " generators");
  }
  o.detail << levels << " levels on 10 spaces match the closed form";
}

void distance_regularity(Spaces& spaces, Outcome& o) {
  for (const char* name : kSchemeSpaces) {
    const DistanceRegularityReport r = verify_distance_regularity(spaces.get(name));
    o.require(r.ok, std::string(name) + ": " + r.detail);
    o.detail << name << " b=" << join(r.b) << " c=" << join(r.c) << "; ";
  }
}

void spectrum(Spaces& spaces, Outcome& o) {
  for (const char* name : kSchemeSpaces) {
    const SchemeContext& sc = spaces.get(name);
    const SpectrumReport r = verify_spectrum(sc);
    o.require(r.ok() && sc.eigenvalues().consistent(), name);
    std::vector<std::int64_t> dims(r.dimensions.begin(), r.dimensions.end());
    o.detail << name << " dims=" << join(dims) << " vectors=" << r.vectors_checked << "; ";
  }
}

void equivalence(Spaces& spaces, std::uint64_t seed, Outcome& o) {
  std::map<std::string, std::vector<GeneratorSet>> spreads;
  for (const char* name : {"W(3,2)", "Q-(5,2)", "Q+(5,2)"}) {
    const SearchResult r = find_spreads(CLContext(spaces.get(name)));
    o.require(r.complete, std::string(name) + " spread search incomplete");
    spreads[name] = r.sets;
  }
  long long sets = 0, positives = 0, with_spreads = 0, vacuous_iv = 0;
  auto run = [&](const CLContext& ctx, const std::string& name) {
    const auto it = spreads.find(name);
    const std::vector<GeneratorSet> none;
    const std::vector<GeneratorSet>& sp = (!ctx.restricted() && it != spreads.end()) ? it->second : none;
    const auto corpus = build_corpus(ctx, seed, 500);
    o.require(corpus.size() >= 500, name + " corpus too small");
    for (const auto& e : corpus) {
      const CLReport r = check(ctx, e.set, sp);
      ++sets;
      positives += r.is_cl();
      if (!sp.empty()) ++with_spreads;
      if (it != spreads.end() && !ctx.restricted() && r.spreads.verdict == Verdict::kVacuous) ++vacuous_iv;
      o.require(r.consistent(), name + " " + e.label);
    }
  };
  for (const char* name : kCountSpaces) {
    const SchemeContext& sc = spaces.get(name);
    if (sc.size() > 300) continue;
    run(CLContext(sc), name);
    if (sc.descriptor().family == Family::kHyperbolic && sc.descriptor().rank % 2 == 0)
      for (int label : {0, 1}) run(CLContext(sc, label), std::string(name) + "[class " + std::to_string(label) + "]");
  }
  o.detail << sets << " sets, " << positives << " CL; (iv) on " << with_spreads << " sets with "
           << spreads["W(3,2)"].size() << "/" << spreads["Q-(5,2)"].size() << "/" << spreads["Q+(5,2)"].size()
           << " spreads of W(3,2)/Q-(5,2)/Q+(5,2); (iv) vacuous on " << vacuous_iv
           << " Q+(5,2) sets, which has no spreads";
}

void example_parameters(Spaces& spaces, Outcome& o) {
  int checked = 0;
  for (const Example& e : examples(spaces)) {
    const CLContext ctx = context_of(spaces, e);
    const CLReport r = check(ctx, e.c.set);
    o.require(no_failures(r) && r.x == e.c.predicted_x, tag(e) + " x=" + r.x.str());
    const Construction comp = complement(ctx, e.c);
    const CLReport rc = check(ctx, comp.set);
    const Rational expect = Rational(ctx.max_parameter()) - r.x;
    o.require(no_failures(rc) && rc.x == expect, tag(e) + " complement x=" + rc.x.str());
    checked += 2;
    if (e.c.kind != "point_pencil") o.detail << tag(e) << " x=" << r.x << ", complement " << rc.x << "; ";
  }
  o.detail << checked << " sets incl. complements and 10 pencils with x=1";
}

void distribution(Spaces& spaces, Outcome& o) {
  int profiles = 0;
  std::vector<std::string> skipped;
  for (const Example& e : examples(spaces)) {
    const CLContext ctx = context_of(spaces, e);
    for (const Construction& c : {e.c, complement(ctx, e.c)}) {
      int applicable = 0;
      for (int probe : even_probes(ctx.size(), 24)) {
        const IntersectionProfile p = intersection_distribution(ctx, c.set, probe);
        if (p.verdict == Verdict::kNotApplicable) continue;
        ++applicable;
        o.require(p.verdict == Verdict::kPass, tag(e) + " probe " + std::to_string(probe));
      }
      // Members of L are probes of their own case.
      const int member = static_cast<int>(c.set.find_first());
      if (member >= 0 && intersection_distribution(ctx, c.set, member).verdict == Verdict::kFail)
        o.require(false, tag(e) + " member probe");
      if (applicable == 0) {
        skipped.push_back(e.space + " " + c.label);
      } else {
        // Spaces with fewer than 20 generators are probed exhaustively.
        o.require(applicable >= std::min(20, ctx.size()), tag(e) + " too few probes");
        profiles += applicable;
      }
    }
  }
  int z_checks = 0;
  {
    const CLContext ctx(spaces.get("Q-(5,2)"));
    for (const Construction& c : {point_pencil(ctx, 0), embedded_polar_space(ctx, 0)}) {
      for (int pi = 0; pi < ctx.size(); pi += 2) {
        if (c.set.test(pi)) continue;
        const Bitset& pts = ctx.instance().generator_points(pi);
        for (auto p = pts.find_first(); p != Bitset::npos; p = pts.find_next(p)) {
          const ZProfile z = z_profile(ctx, c.set, pi, static_cast<int>(p));
          o.require(z.verdict == Verdict::kPass, "z on Q-(5,2) " + c.label);
          ++z_checks;
        }
      }
    }
  }
  o.detail << profiles << " profiles, " << z_checks << " z checks on Q-(5,2)";
  if (!skipped.empty()) {
    o.detail << "; outside V0+V1, no closed form: ";
    for (std::size_t i = 0; i < skipped.size(); ++i) o.detail << (i ? ", " : "") << skipped[i];
  }
}

void regular_systems(Spaces& spaces, Outcome& o) {
  const CLContext ctx(spaces.get("Q+(5,2)"));
  const SearchResult r = find_regular_systems(ctx, 2, {0, 2});
  o.require(!r.sets.empty(), "no 2-regular system in V0+V2");
  int failing = 0;
  for (const auto& s : r.sets) {
    o.require(ctx.eigenspace_membership(ctx.characteristic(s), {0, 2}), "membership");
    o.require(is_regular_system(ctx, s, 2), "not 2-regular");
    const CLReport rep = check(ctx, s);
    o.require(rep.consistent(), "inconsistent verdicts");
    failing += !rep.is_cl();
  }
  o.require(failing > 0, "all found systems are CL");
  o.detail << r.sets.size() << " systems of size " << (r.sets.empty() ? 0 : r.sets[0].count()) << " in V0+V2, "
           << failing << " fail the CL tests; complete=" << r.complete << ", " << r.nodes << " nodes";
}

std::map<std::string, int> tally(const SearchResult& r) {
  std::map<std::string, int> m;
  for (const auto& l : r.labels) ++m[l];
  return m;
}

std::string show(const std::map<std::string, int>& m) {
  std::string s;
  for (const auto& [k, v] : m) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s;
}

void parameter_one(Spaces& spaces, Outcome& o) {
  struct Case {
    std::string space;
    int class_label;
    std::map<std::string, int> expected;
  };
  const std::vector<Case> cases = {
      {"W(3,2)", -1, {{"pencil", 15}}},
      {"Q-(5,2)", -1, {{"pencil", 27}}},
      {"Q(6,2)", -1, {{"base_plane", 135}, {"hyperbolic_class", 72}, {"pencil", 63}}},
      {"Q+(7,2)", 0, {{"base_solid", 135}, {"pencil", 135}}},
  };
  for (const Case& c : cases) {
    const SchemeContext& sc = spaces.get(c.space);
    const SearchResult r = find_cl_parameter1(c.class_label < 0 ? CLContext(sc) : CLContext(sc, c.class_label));
    const auto t = tally(r);
    o.require(r.complete && t == c.expected, c.space + ": " + show(t));
    o.detail << c.space << (c.class_label >= 0 ? "[class]" : "") << " " << show(t) << "; ";
  }
}

void tight_sets(Outcome& o) {
  for (const auto& [name, x_max] : std::vector<std::pair<std::string, int>>{{"W(3,2)", 2}, {"H(3,4)", 3}}) {
    const GeneralizedQuadrangle gq =
        GeneralizedQuadrangle::from_instance(PolarSpaceInstance(PolarSpaceDescriptor::parse(name)));
    const SearchResult r = find_tight_sets(gq, x_max);
    const auto t = tally(r);
    bool other = false;
    for (const auto& [label, n] : t) other |= label.find("other") != std::string::npos;
    o.require(r.complete && !other && !t.empty(), name + ": " + show(t));
    o.detail << "GQ(" << gq.s() << "," << gq.t() << ") " << show(t) << "; ";
  }
}

void small_parameters(Spaces& spaces, Outcome& o) {
  const CLContext ctx(spaces.get("Q-(5,2)"));
  for (int x = 1; x <= 3; ++x) {
    const SearchResult r = find_cl_sets(ctx, x);
    std::map<std::string, int> kinds;
    for (const auto& s : r.sets) ++kinds[classify_small_cl(ctx, s)];
    o.require(r.complete && !r.sets.empty() && kinds.count("other") == 0, "x=" + std::to_string(x) + " " + show(kinds));
    o.require(x == 3 || kinds.count("embedded") == 0, "embedded below x=3");
    o.detail << "x=" << x << ": " << show(kinds) << " (" << r.nodes << " nodes); ";
  }
}

void two_generator_counts(Spaces& spaces, Outcome& o) {
  for (const char* name : {"Q+(7,2)", "H(3,4)"}) {
    const SchemeContext& sc = spaces.get(name);
    const int n = sc.size();
    const int d = sc.diameter();
    std::vector<Bitset> disjoint(n, Bitset(n));
    for (int a = 0; a < n; ++a)
      for (int b : sc.relation(d)[a]) disjoint[a].set(b);
    std::map<int, std::int64_t> seen;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const int v = d - 1 - sc.distance(a, b);
        BigInt predicted;
        try {
          predicted = disjoint_to_two_count(sc.descriptor(), v);
        } catch (const std::invalid_argument&) {
          continue;
        }
        const auto count = static_cast<std::int64_t>((disjoint[a] & disjoint[b]).count());
        o.require(BigInt(count) == predicted, std::string(name) + " v=" + std::to_string(v));
        seen[v] = count;
      }
    }
    o.detail << name;
    for (const auto& [v, c] : seen) o.detail << " v=" << v << ":" << c;
    o.detail << "; ";
  }
  // One class of Q+(7,2): the factor with exponent n(n-1).
  const SchemeContext& sc = spaces.get("Q+(7,2)");
  const CLContext cls(sc, 0);
  const BigInt factor = class_disjoint_to_two_factor(2, 2);
  int center = 0;
  while (cls.local_index(center) >= 0) ++center;
  std::vector<GeneratorSet> sets = {~cls.empty_set(), point_pencil(cls, 0).set, base_solid(cls, center).set};
  sets.push_back(~sets[1]);
  long long pairs = 0;
  for (const GeneratorSet& L : sets) {
    o.require(check(cls, L).is_cl(), "class set not CL");
    const Rational x = cls.parameter(L);
    for (int a = 0; a < cls.size(); ++a) {
      for (int b = a + 1; b < cls.size(); ++b) {
        if (cls.distance(a, b) != sc.diameter()) continue;
        const Rational predicted = (x - int(L.test(a)) - int(L.test(b))) * factor;
        o.require(Rational(disjoint_to_both(cls, L, a, b)) == predicted, "class count");
        ++pairs;
      }
    }
  }
  const GeneratorSet all = ~cls.empty_set();
  int b = 1;
  while (cls.distance(0, b) != sc.diameter()) ++b;
  o.detail << "class of Q+(7,2): " << pairs << " disjoint pairs over 4 CL sets match factor " << factor
           << " = q^(n(n-1)) prod; full class count " << disjoint_to_both(cls, all, 0, b);
}

void spread_facts(Spaces& spaces, Outcome& o) {
  // Class purity.
  int pure_checked = 0;
  for (const char* name : {"Q+(5,2)", "Q+(3,2)", "Q+(7,2)"}) {
    const SchemeContext& sc = spaces.get(name);
    const CLContext ctx(sc);
    const SearchResult r = find_spreads(ctx);
    o.require(r.complete, std::string(name) + " incomplete");
    const auto& labels = sc.instance().class_labels();
    for (const auto& s : r.sets) {
      const auto m = members(s);
      o.require(std::all_of(m.begin(), m.end(), [&](int g) { return labels[g] == labels[m[0]]; }),
                std::string(name) + " mixed spread");
      o.require(spread_vector_check(ctx, s), std::string(name) + " spread vector");
      ++pure_checked;
    }
    o.detail << name << " " << r.sets.size() << " spreads all class-pure"
             << (r.sets.empty() ? " (vacuous)" : "") << "; ";
  }
  // Spread vectors and intersections with CL sets.
  long long meets = 0;
  for (const char* name : {"W(3,2)", "Q-(5,2)", "W(5,2)"}) {
    const CLContext ctx(spaces.get(name));
    const SearchResult r = find_spreads(ctx);
    for (const auto& s : r.sets) o.require(spread_vector_check(ctx, s), std::string(name) + " spread vector");
    for (const auto& e : build_corpus(ctx, 3, 100)) {
      if (!check(ctx, e.set).is_cl()) continue;
      const Rational x = ctx.parameter(e.set);
      for (const auto& s : r.sets) {
        o.require(Rational((e.set & s).count()) == x, std::string(name) + " |L cap S|");
        ++meets;
      }
    }
    o.detail << name << " " << r.sets.size() << " spreads; ";
  }
  {
    const CLContext cls(spaces.get("Q+(7,2)"), 0);
    const SearchResult r = find_spreads(cls);
    int center = 0;
    while (cls.local_index(center) >= 0) ++center;
    for (const Construction& c : {point_pencil(cls, 3), base_solid(cls, center)}) {
      const Rational x = cls.parameter(c.set);
      for (const auto& s : r.sets) {
        o.require(Rational((c.set & s).count()) == x, "class |L cap S|");
        ++meets;
      }
    }
    o.detail << "Q+(7,2)[class] " << r.sets.size() << " spreads; ";
  }
  // m-regular systems.
  long long regular_meets = 0;
  for (const auto& [name, m] : std::vector<std::pair<std::string, int>>{{"Q+(5,2)", 2}, {"W(3,2)", 2}}) {
    const CLContext ctx(spaces.get(name));
    const SearchResult r = find_regular_systems(ctx, m, {});
    o.require(r.complete && !r.sets.empty(), name + " regular systems");
    for (const auto& s : r.sets)
      o.require(BigInt(s.count()) == regular_system_size(ctx.descriptor(), m), name + " system size");
    int cl_sets = 0;
    for (const auto& e : build_corpus(ctx, 5, 100)) {
      if (!check(ctx, e.set).is_cl()) continue;
      ++cl_sets;
      const Rational x = ctx.parameter(e.set);
      for (const auto& s : r.sets) {
        o.require(Rational((e.set & s).count()) == x * m, name + " |L cap R|");
        ++regular_meets;
      }
    }
    o.detail << name << " " << r.sets.size() << " " << m << "-regular systems vs " << cl_sets << " CL sets; ";
  }
  o.detail << pure_checked << " class checks, " << meets << " spread and " << regular_meets
           << " regular-system intersections";
}

}  // namespace

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name << " (" << std::fixed;
  s.precision(1);
  s << r.seconds << " s): " << r.detail;
  return s.str();
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, std::ostream& out) {
  Spaces spaces;
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"count oracle", [&](Outcome& o) { count_oracle(spaces, o); }},
      {"distance-regularity", [&](Outcome& o) { distance_regularity(spaces, o); }},
      {"spectrum", [&](Outcome& o) { spectrum(spaces, o); }},
      {"characterisation equivalence", [&](Outcome& o) { equivalence(spaces, opts.seed, o); }},
      {"example parameters", [&](Outcome& o) { example_parameters(spaces, o); }},
      {"intersection distributions", [&](Outcome& o) { distribution(spaces, o); }},
      {"2-regular systems in V0+V2 on Q+(5,2)", [&](Outcome& o) { regular_systems(spaces, o); }},
      {"parameter-1 classification", [&](Outcome& o) { parameter_one(spaces, o); }},
      {"tight-set classification", [&](Outcome& o) { tight_sets(o); }},
      {"small-x classification on Q-(5,2)", [&](Outcome& o) { small_parameters(spaces, o); }},
      {"two-generator counts", [&](Outcome& o) { two_generator_counts(spaces, o); }},
      {"spread facts", [&](Outcome& o) { spread_facts(spaces, o); }},
  };
  std::vector<CriterionResult> results;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), id) == opts.only.end()) continue;
    CriterionResult r;
    r.id = id;
    r.name = criteria[i].first;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.pass = o.pass;
    r.detail = o.detail.str();
    for (const auto& f : o.failures) r.detail += " | failed: " + f;
    results.push_back(r);
    out << format_result(r) << std::endl;
  }
  return results;
}

}  // namespace polarcl

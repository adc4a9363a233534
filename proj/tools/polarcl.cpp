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

// polarcl: command-line front end. Exit codes: 0 success, 1 verification
// failure, 2 usage or input error.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "polarcl/acceptance.hpp"
#include "polarcl/io.hpp"

namespace polarcl {
namespace {

constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Common {
  std::vector<std::string> argv;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 1;
};

RunManifest manifest(const Common& c, const std::string& space, bool complete, Clock::time_point start) {
  RunManifest m;
  m.command = c.argv;
  m.space = space;
  m.seed = c.seed;
  m.complete = complete;
  m.seconds = since(start);
  return m;
}

void emit(const Json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
}

// A space.json file, or a name such as "Q(6,2)".
struct LoadedSpace {
  std::unique_ptr<SchemeContext> scheme;
};

LoadedSpace load_space(const std::string& arg) {
  PolarSpaceDescriptor desc;
  Json stored;
  if (std::filesystem::exists(arg)) {
    try {
      stored = Json::parse(read_file(arg));
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError(arg + ": " + e.what());
    }
    desc = descriptor_from_json(stored);
  } else {
    desc = PolarSpaceDescriptor::parse(arg);
  }
  LoadedSpace s;
  s.scheme = std::make_unique<SchemeContext>(desc);
  if (!stored.is_null()) verify_space_json(stored, s.scheme->instance());
  return s;
}

int class_label(const std::string& name) {
  if (name.empty()) return -1;
  if (name == "latin") return 0;
  if (name == "greek") return 1;
  throw UsageError("--class must be latin or greek");
}

CLContext make_context(const SchemeContext& sc, const std::string& cls) {
  const int label = class_label(cls);
  return label < 0 ? CLContext(sc) : CLContext(sc, label);
}

PolarSpaceDescriptor descriptor_from_options(const std::string& name, const std::string& family, int rank, int q) {
  if (!name.empty()) return PolarSpaceDescriptor::parse(name);
  if (family.empty() || rank <= 0 || q <= 0) throw UsageError("give --name, or --family with --rank and --q");
  return PolarSpaceDescriptor::from_code(family, rank, q);
}

std::string half(int twice) {
  return twice % 2 == 0 ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
}

std::string level_name(int k, int rank) {
  static const char* const names[] = {"points", "lines", "planes", "solids"};
  const std::string base = k < 4 ? names[k] : std::to_string(k) + "-spaces";
  return k == rank - 1 ? base + " (generators)" : base;
}

// space info
int space_info(const PolarSpaceDescriptor& d, bool json) {
  const PolarCounts pc(d);
  const SchemeParameters sp = SchemeParameters::from_descriptor(d);
  const EigenvalueTable table(d);
  if (json) {
    Json j;
    j["descriptor"] = to_json(d);
    Json counts = Json::array();
    for (int k = 0; k < d.rank; ++k) counts.push_back(pc.subspace_count(k).str());
    j["counts"] = counts;
    j["e"] = half(d.twice_e());
    auto strings = [](const std::vector<BigInt>& v) {
      Json a = Json::array();
      for (const auto& x : v) a.push_back(x.str());
      return a;
    };
    j["b"] = strings(sp.b);
    j["c"] = strings(sp.c);
    j["a"] = strings(sp.a);
    j["k"] = strings(sp.k);
    Json p = Json::array();
    for (int r = 0; r <= d.rank; ++r) {
      std::vector<BigInt> row;
      for (int i = 0; i <= d.rank; ++i) row.push_back(table.at(r, i));
      p.push_back(strings(row));
    }
    j["P"] = p;
    j["pencil"] = pc.pencil_size().str();
    j["spread_size"] = pc.spread_size().str();
    j["lambda"] = pc.lambda().str();
    std::cout << j.dump(2) << "\n";
    return table.consistent() ? 0 : kVerificationFailure;
  }
  std::cout << d.name() << "  rank " << d.rank << "  q " << d.q << "  e " << half(d.twice_e()) << "  type "
            << to_string(d.type()) << "\n";
  for (int k = 0; k < d.rank; ++k) std::cout << "  " << pc.subspace_count(k) << " " << level_name(k, d.rank) << "\n";
  std::cout << "  generators per point " << pc.pencil_size() << ", spread size " << pc.spread_size()
            << ", lambda " << pc.lambda() << "\n";
  auto row = [](const char* label, const std::vector<BigInt>& v) {
    std::cout << "  " << label;
    for (const auto& x : v) std::cout << " " << x;
    std::cout << "\n";
  };
  row("b:", sp.b);
  row("c:", sp.c);
  row("k:", sp.k);
  std::size_t width = 1;
  for (int r = 0; r <= d.rank; ++r)
    for (int i = 0; i <= d.rank; ++i) width = std::max(width, table.at(r, i).str().size());
  std::cout << "  P (rows V_j, columns A_i):\n";
  for (int r = 0; r <= d.rank; ++r) {
    std::cout << "   ";
    for (int i = 0; i <= d.rank; ++i) std::cout << " " << std::setw(static_cast<int>(width)) << table.at(r, i);
    std::cout << "\n";
  }
  return table.consistent() ? 0 : kVerificationFailure;
}

// space enumerate
int space_enumerate(const Common& c, const PolarSpaceDescriptor& d, const std::string& out) {
  const auto start = Clock::now();
  const PolarSpaceInstance inst(d);
  Json j = space_to_json(inst);
  Json wrapped;
  wrapped["manifest"] = to_json(manifest(c, d.name(), true, start));
  for (auto& [k, v] : j.items()) wrapped[k] = v;
  emit(wrapped, out);
  if (!out.empty())
    std::cerr << d.name() << ": " << inst.num_points() << " points, " << inst.num_generators() << " generators -> "
              << out << "\n";
  return 0;
}

// scheme verify
int scheme_verify(const Common& c, const std::string& space, const std::string& out) {
  const auto start = Clock::now();
  const LoadedSpace ls = load_space(space);
  const SchemeContext& sc = *ls.scheme;
  const PolarSpaceDescriptor& d = sc.descriptor();
  Json checks;
  bool ok = true;
  auto record = [&](const std::string& name, bool pass, Json extra = Json::object()) {
    extra["pass"] = pass;
    checks[name] = std::move(extra);
    ok = ok && pass;
  };
  const DistanceRegularityReport dr = verify_distance_regularity(sc);
  record("distance_regularity", dr.ok, {{"b", dr.b}, {"c", dr.c}});
  std::string bm_detail;
  record("bose_mesner", verify_bose_mesner(sc, &bm_detail));
  record("eigenvalue_table", sc.eigenvalues().consistent());
  const SpectrumReport sr = verify_spectrum(sc);
  record("spectrum", sr.ok(),
         {{"dimensions", sr.dimensions}, {"incidence_ranks", sr.incidence_ranks},
          {"vectors_checked", sr.vectors_checked}});
  if (d.type() == SpaceType::kIII) record("hyperbolic_gram", verify_hyperbolic_gram(sc));
  if (d.family == Family::kHyperbolic && d.rank % 2 == 0) {
    for (int label : {0, 1}) {
      const ClassSpectrumReport cr = verify_class_spectrum(sc.restricted_scheme(label));
      record(label == 0 ? "class_spectrum_latin" : "class_spectrum_greek", cr.ok,
             {{"rank", cr.rank_point_incidence}, {"dim_v0", cr.dim_v0}, {"dim_v1", cr.dim_v1}});
    }
  }
  Json j;
  j["manifest"] = to_json(manifest(c, d.name(), true, start));
  j["descriptor"] = to_json(d);
  const SchemeParameters& sp = sc.parameters();
  auto strings = [](const std::vector<BigInt>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
  };
  j["parameters"] = {{"b", strings(sp.b)}, {"c", strings(sp.c)}, {"k", strings(sp.k)}};
  Json p = Json::array();
  for (int r = 0; r <= sc.diameter(); ++r) {
    std::vector<BigInt> row;
    for (int i = 0; i <= sc.diameter(); ++i) row.push_back(sc.eigenvalues().at(r, i));
    p.push_back(strings(row));
  }
  j["P"] = p;
  j["checks"] = checks;
  j["pass"] = ok;
  emit(j, out);
  if (!out.empty()) std::cerr << d.name() << ": scheme checks " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? 0 : kVerificationFailure;
}

// construct
int construct(const Common&, const std::string& space, const std::string& cls, const std::string& kind, int index,
              bool comp, const std::string& out) {
  const LoadedSpace ls = load_space(space);
  const CLContext ctx = make_context(*ls.scheme, cls);
  Construction con;
  if (kind == "pencil") {
    con = point_pencil(ctx, index);
  } else if (kind == "hyperbolic_class") {
    con = hyperbolic_class(ctx, index);
  } else if (kind == "embedded") {
    con = embedded_polar_space(ctx, index);
  } else if (kind == "base_plane") {
    con = base_plane(ctx, index);
  } else if (kind == "base_solid") {
    int center = index;
    if (center < 0) {
      center = 0;
      while (ctx.local_index(center) >= 0) ++center;
    }
    con = base_solid(ctx, center);
  } else {
    throw UsageError("unknown construction '" + kind + "'");
  }
  if (comp) con = complement(ctx, con);
  const std::string text = "# " + ctx.descriptor().name() + " " + con.label + " x=" + con.predicted_x.str() + "\n" +
                           format_set(ctx.to_global(con.set));
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
    std::cerr << con.label << ": " << con.set.count() << " generators -> " << out << "\n";
  }
  return 0;
}

// check
int check_set(const Common& c, const std::string& space, const std::string& cls, const std::string& set_path,
              const std::string& spreads_path, const std::string& out) {
  const auto start = Clock::now();
  const LoadedSpace ls = load_space(space);
  const CLContext ctx = make_context(*ls.scheme, cls);
  const GeneratorSet L = ctx.from_global(parse_set(read_file(set_path), ctx.instance()));
  std::vector<GeneratorSet> spreads;
  if (!spreads_path.empty())
    for (const auto& s : spreads_from_json(Json::parse(read_file(spreads_path)))) spreads.push_back(ctx.from_global(s));
  const CLReport r = check(ctx, L, spreads);
  Json j;
  j["manifest"] = to_json(manifest(c, ctx.descriptor().name(), true, start));
  j["report"] = to_json(r, ctx);
  emit(j, out);
  std::cerr << ctx.descriptor().name() << ": |L| = " << r.size << ", x = " << r.x
            << ", Cameron-Liebler: " << (r.is_cl() ? "true" : "false")
            << (r.consistent() ? "" : " (verdicts disagree)") << "\n";
  return r.consistent() ? 0 : kVerificationFailure;
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad integer list '" + s + "'");
    }
  }
  return out;
}

void append(SearchResult& acc, const SearchResult& r) {
  acc.sets.insert(acc.sets.end(), r.sets.begin(), r.sets.end());
  acc.labels.insert(acc.labels.end(), r.labels.begin(), r.labels.end());
  acc.complete = acc.complete && r.complete;
  acc.nodes += r.nodes;
  acc.seconds += r.seconds;
}

struct SearchOptions {
  std::string kind;
  std::string space;
  std::string cls;
  int m = -1;
  int xmax = -1;
  std::string eigenspaces;
  int anchor = -1;
  bool dual = false;
  std::string out;
};

// search spread|regular|tight|cl
int search(const Common& c, const SearchOptions& o) {
  const auto start = Clock::now();
  const LoadedSpace ls = load_space(o.space);
  const SearchBudget budget = SearchBudget::from_environment();
  Json j;
  SearchResult r;
  std::string name = ls.scheme->descriptor().name();
  if (o.kind == "tight") {
    if (!o.cls.empty()) throw UsageError("--class does not apply to tight sets");
    GeneralizedQuadrangle gq = GeneralizedQuadrangle::from_instance(ls.scheme->instance());
    if (o.dual) {
      gq = gq.dual();
      name = "dual of " + name;
    }
    r = find_tight_sets(gq, o.xmax < 0 ? 2 : o.xmax, budget);
    j["manifest"] = to_json(manifest(c, name, r.complete, start));
    j["search"] = {{"kind", "tight"}, {"s", gq.s()}, {"t", gq.t()}, {"xmax", o.xmax < 0 ? 2 : o.xmax}};
    j["result"] = to_json(r);
  } else {
    const CLContext ctx = make_context(*ls.scheme, o.cls);
    Json params = {{"kind", o.kind}, {"universe", ctx.restricted() ? o.cls : "all"}};
    if (o.kind == "spread") {
      r = find_spreads(ctx, budget, o.anchor);
      params["anchor"] = o.anchor;
    } else if (o.kind == "regular") {
      if (o.m < 0) throw UsageError("search regular needs --m");
      const std::vector<int> S = o.eigenspaces.empty() ? std::vector<int>{} : parse_list(o.eigenspaces);
      r = find_regular_systems(ctx, o.m, S, budget);
      params["m"] = o.m;
      params["eigenspaces"] = S;
    } else if (o.kind == "cl") {
      const int xmax = o.xmax < 0 ? 1 : o.xmax;
      for (int x = 1; x <= xmax; ++x) {
        SearchResult part = x == 1 ? find_cl_parameter1(ctx, budget) : find_cl_sets(ctx, x, budget);
        part.labels.resize(part.sets.size());
        for (std::size_t i = 0; i < part.sets.size(); ++i) {
          const std::string kind = x == 1 ? part.labels[i] : classify_small_cl(ctx, part.sets[i]);
          part.labels[i] = "x=" + std::to_string(x) + ":" + kind;
        }
        append(r, part);
      }
      params["xmax"] = xmax;
    } else {
      throw UsageError("unknown search '" + o.kind + "'");
    }
    j["manifest"] = to_json(manifest(c, name, r.complete, start));
    j["search"] = params;
    j["result"] = to_json(r, ctx);
  }
  emit(j, o.out);
  std::cerr << name << ": " << o.kind << " search found " << r.sets.size() << " sets, "
            << (r.complete ? "complete" : "budget exhausted") << ", " << r.nodes << " nodes\n";
  return 0;
}

int suite(const Common& c, const std::string& level) {
  if (level != "desk") throw UsageError("only --level desk is available");
  AcceptanceOptions opts;
  opts.seed = c.seed;
  const auto results = run_acceptance(opts, std::cout);
  int failed = 0;
  for (const auto& r : results) failed += !r.pass;
  std::cout << "\n" << std::left << std::setw(4) << "#" << std::setw(44) << "criterion" << "result\n";
  for (const auto& r : results)
    std::cout << std::setw(4) << r.id << std::setw(44) << r.name << (r.pass ? "pass" : "FAIL") << "\n";
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : kVerificationFailure;
}

int run(int argc, char** argv) {
  CLI::App app{"Cameron-Liebler sets of generators in finite classical polar spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  common.argv.assign(argv, argv + argc);
  app.add_option("--threads", common.threads, "Worker threads (searches currently run on one)")->check(CLI::PositiveNumber);
  app.add_option("--seed", common.seed, "Seed for randomized corpora");

  std::string name, family, space, cls, out;
  int rank = 0, q = 0;
  bool json = false;

  auto* space_cmd = app.add_subcommand("space", "Polar space counts and enumeration");
  space_cmd->require_subcommand(1);
  auto* info = space_cmd->add_subcommand("info", "Counts, intersection array and eigenvalue table");
  auto* enumerate = space_cmd->add_subcommand("enumerate", "Write the canonical point and generator lists");
  for (auto* cmd : {info, enumerate}) {
    cmd->add_option("--name", name, "Space name such as Q(6,2) or H(4,4)");
    cmd->add_option("--family", family, "Q+, Q, Q-, W, H (H(2d-1,q)) or HE (H(2d,q))");
    cmd->add_option("--rank", rank, "Rank d");
    cmd->add_option("--q", q, "Field order; the square order for Hermitian spaces");
  }
  info->add_flag("--json", json, "JSON instead of text");
  enumerate->add_option("--out", out, "Output space.json");

  auto* scheme_cmd = app.add_subcommand("scheme", "Association scheme checks");
  scheme_cmd->require_subcommand(1);
  auto* verify = scheme_cmd->add_subcommand("verify", "Verify distance-regularity and the spectrum");
  verify->add_option("--space", space, "space.json or a space name")->required();
  verify->add_option("--out", out, "Output report.json");

  std::string kind;
  int index = 0;
  bool comp = false;
  auto* construct_cmd = app.add_subcommand("construct", "Write a known Cameron-Liebler set");
  construct_cmd->add_option("--space", space, "space.json or a space name")->required();
  construct_cmd->add_option("--kind", kind, "pencil, hyperbolic_class, embedded, base_plane or base_solid")
      ->required();
  construct_cmd->add_option("--index", index,
                            "Point for pencils, generator for base_plane (universe index) and base_solid (global "
                            "index), or section number");
  construct_cmd->add_option("--class", cls, "latin or greek: one class of Q+(2d-1,q), d even");
  construct_cmd->add_flag("--complement", comp, "Write the complement");
  construct_cmd->add_option("--out", out, "Output set file");

  std::string set_path, spreads_path;
  auto* check_cmd = app.add_subcommand("check", "Run every Cameron-Liebler test on a set");
  check_cmd->add_option("--space", space, "space.json or a space name")->required();
  check_cmd->add_option("--set", set_path, "Set file")->required()->check(CLI::ExistingFile);
  check_cmd->add_option("--spreads", spreads_path, "spreads.json or spread search results")
      ->check(CLI::ExistingFile);
  check_cmd->add_option("--class", cls, "latin or greek");
  check_cmd->add_option("--out", out, "Output report.json");

  SearchOptions so;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive searches with certificates");
  search_cmd->add_option("kind", so.kind, "spread, regular, tight or cl")
      ->required()
      ->check(CLI::IsMember({"spread", "regular", "tight", "cl"}));
  search_cmd->add_option("--space", so.space, "space.json or a space name")->required();
  search_cmd->add_option("--class", so.cls, "latin or greek");
  search_cmd->add_option("--m", so.m, "Regularity m");
  search_cmd->add_option("--xmax", so.xmax, "Largest parameter for tight and cl");
  search_cmd->add_option("--eigenspaces", so.eigenspaces, "Comma separated eigenspace indices, e.g. 0,2");
  search_cmd->add_option("--anchor", so.anchor, "Only spreads through this generator (universe index)");
  search_cmd->add_flag("--dual", so.dual, "Tight sets of the dual quadrangle");
  search_cmd->add_option("--out", so.out, "Output results.json");

  std::string level = "desk";
  auto* suite_cmd = app.add_subcommand("suite", "Run the acceptance battery");
  suite_cmd->add_option("--level", level, "Only desk")->check(CLI::IsMember({"desk"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*info) return space_info(descriptor_from_options(name, family, rank, q), json);
    if (*enumerate) return space_enumerate(common, descriptor_from_options(name, family, rank, q), out);
    if (*verify) return scheme_verify(common, space, out);
    if (*construct_cmd) return construct(common, space, cls, kind, index, comp, out);
    if (*check_cmd) return check_set(common, space, cls, set_path, spreads_path, out);
    if (*search_cmd) return search(common, so);
    if (*suite_cmd) return suite(common, level);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace
}  // namespace polarcl

int main(int argc, char** argv) { return polarcl::run(argc, argv); }

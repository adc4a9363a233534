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

#include "polarcl/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace polarcl {

SearchBudget SearchBudget::from_environment() {
  SearchBudget b;
  if (const char* env = std::getenv("POLARCL_BUDGET_NODES")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) b.max_nodes = v;
  }
  return b;
}

namespace {

// Counting constraints over 0/1 variables with incremental propagation.
// A count constraint asks for target0 or target1 selected variables among
// vars, depending on the value of its owner (target0 when it has none). An
// all-or-at-most constraint asks that vars are all selected or at most bound
// of them are. An optional global constraint fixes the number selected.
class Propagator {
 public:
  struct Constraint {
    int owner = -1;
    std::vector<int> vars;
    int target0 = 0;
    int target1 = 0;
    bool all_or_at_most = false;
  };

  Propagator(int n, std::vector<Constraint> cs, int total)
      : n_(n), cs_(std::move(cs)), total_(total), value_(n, -1), var_in_(n), owns_(n) {
    in_.assign(cs_.size(), 0);
    zeros_.assign(cs_.size(), 0);
    undec_.resize(cs_.size());
    queued_.assign(cs_.size(), false);
    for (std::size_t c = 0; c < cs_.size(); ++c) {
      undec_[c] = static_cast<int>(cs_[c].vars.size());
      for (int v : cs_[c].vars) var_in_[v].push_back(static_cast<int>(c));
      if (cs_[c].owner >= 0) owns_[cs_[c].owner].push_back(static_cast<int>(c));
      enqueue(static_cast<int>(c));
    }
    undecided_ = n;
  }

  int value(int v) const { return value_[v]; }
  std::size_t mark() const { return trail_.size(); }

  bool assign(int v, int val) {
    if (value_[v] >= 0) return value_[v] == val;
    value_[v] = val;
    trail_.push_back(v);
    --undecided_;
    selected_ += val;
    for (int c : var_in_[v]) {
      --undec_[c];
      if (val) ++in_[c];
      else ++zeros_[c];
      enqueue(c);
    }
    for (int c : owns_[v]) enqueue(c);
    global_dirty_ = true;
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int v = trail_.back();
      trail_.pop_back();
      const int val = value_[v];
      for (int c : var_in_[v]) {
        ++undec_[c];
        if (val) --in_[c];
        else --zeros_[c];
      }
      ++undecided_;
      selected_ -= val;
      value_[v] = -1;
    }
    for (int c : queue_) queued_[c] = false;
    queue_.clear();
  }

  bool propagate() {
    while (true) {
      if (global_dirty_) {
        global_dirty_ = false;
        if (!check_global()) return fail();
        continue;
      }
      if (queue_.empty()) return true;
      const int c = queue_.back();
      queue_.pop_back();
      queued_[c] = false;
      if (!check(c)) return fail();
    }
  }

  // Undecided variable of the most constrained open count constraint, or
  // the first undecided variable.
  int choose() const {
    int best = -1, best_undec = 1 << 30;
    for (std::size_t c = 0; c < cs_.size(); ++c) {
      if (cs_[c].all_or_at_most || undec_[c] == 0) continue;
      const int t = target(static_cast<int>(c));
      if (t < 0 || t - in_[c] <= 0) continue;
      if (undec_[c] < best_undec) {
        best_undec = undec_[c];
        best = static_cast<int>(c);
      }
    }
    if (best >= 0)
      for (int v : cs_[best].vars)
        if (value_[v] < 0) return v;
    for (int v = 0; v < n_; ++v)
      if (value_[v] < 0) return v;
    return -1;
  }

  Bitset selection() const {
    Bitset b(n_);
    for (int v = 0; v < n_; ++v)
      if (value_[v] == 1) b.set(v);
    return b;
  }

 private:
  void enqueue(int c) {
    if (!queued_[c]) {
      queued_[c] = true;
      queue_.push_back(c);
    }
  }

  bool fail() {
    for (int c : queue_) queued_[c] = false;
    queue_.clear();
    global_dirty_ = false;
    return false;
  }

  int target(int c) const {
    const Constraint& k = cs_[c];
    if (k.owner < 0) return k.target0;
    if (value_[k.owner] < 0) return -1;
    return value_[k.owner] ? k.target1 : k.target0;
  }

  bool set_undecided(int c, int val) {
    for (int v : cs_[c].vars)
      if (value_[v] < 0 && !assign(v, val)) return false;
    return true;
  }

  bool check(int c) {
    const Constraint& k = cs_[c];
    if (k.all_or_at_most) {
      const int bound = k.target0;
      if (zeros_[c] > 0 && in_[c] > bound) return false;
      if (undec_[c] == 0) return true;
      if (in_[c] > bound) return set_undecided(c, 1);
      if (zeros_[c] > 0 && in_[c] == bound) return set_undecided(c, 0);
      return true;
    }
    if (k.owner >= 0 && value_[k.owner] < 0) {
      const bool ok0 = in_[c] <= k.target0 && k.target0 <= in_[c] + undec_[c];
      const bool ok1 = in_[c] <= k.target1 && k.target1 <= in_[c] + undec_[c];
      if (!ok0 && !ok1) return false;
      if (ok0 != ok1) return assign(k.owner, ok1 ? 1 : 0);
      return true;
    }
    const int t = target(c);
    if (in_[c] > t || in_[c] + undec_[c] < t) return false;
    if (undec_[c] == 0) return true;
    if (in_[c] == t) return set_undecided(c, 0);
    if (in_[c] + undec_[c] == t) return set_undecided(c, 1);
    return true;
  }

  bool check_global() {
    if (total_ < 0) return true;
    if (selected_ > total_ || selected_ + undecided_ < total_) return false;
    if (undecided_ == 0) return true;
    const int val = selected_ == total_ ? 0 : (selected_ + undecided_ == total_ ? 1 : -1);
    if (val < 0) return true;
    for (int v = 0; v < n_; ++v)
      if (value_[v] < 0 && !assign(v, val)) return false;
    return true;
  }

  int n_;
  std::vector<Constraint> cs_;
  int total_;
  std::vector<int> value_;
  std::vector<std::vector<int>> var_in_;
  std::vector<std::vector<int>> owns_;
  std::vector<int> in_, zeros_, undec_;
  std::vector<char> queued_;
  std::vector<int> queue_;
  std::vector<int> trail_;
  int undecided_ = 0;
  int selected_ = 0;
  bool global_dirty_ = true;
};

using Clock = std::chrono::steady_clock;

std::vector<int> members(const Bitset& b) {
  std::vector<int> out;
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

// Accepts a complete assignment; returns the label to keep it under, or
// nothing to drop it.
using Leaf = std::function<std::optional<std::string>(const Bitset&)>;

SearchResult run(Propagator& prop, const SearchBudget& budget, const Leaf& leaf,
                 const std::vector<std::pair<int, int>>& fixed = {}) {
  const auto start = Clock::now();
  SearchResult r;
  std::vector<std::pair<Bitset, std::string>> found;
  bool stop = false;
  std::function<void()> dfs = [&]() {
    if (stop) return;
    if (++r.nodes > budget.max_nodes) {
      r.complete = false;
      stop = true;
      return;
    }
    const int v = prop.choose();
    if (v < 0) {
      const Bitset b = prop.selection();
      if (auto label = leaf(b)) {
        found.emplace_back(b, *label);
        if (budget.max_results && found.size() >= budget.max_results) {
          r.complete = false;
          stop = true;
        }
      }
      return;
    }
    for (int val : {1, 0}) {
      const std::size_t m = prop.mark();
      if (prop.assign(v, val) && prop.propagate()) dfs();
      prop.undo(m);
      if (stop) return;
    }
  };
  bool ok = true;
  for (const auto& [v, val] : fixed) ok = ok && prop.assign(v, val);
  if (ok && prop.propagate()) dfs();
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return members(a.first) < members(b.first); });
  for (auto& [b, label] : found) {
    r.sets.push_back(std::move(b));
    r.labels.push_back(std::move(label));
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::vector<Propagator::Constraint> point_constraints(const CLContext& ctx, int m) {
  std::vector<Propagator::Constraint> cs;
  for (int p = 0; p < ctx.instance().num_points(); ++p) {
    Propagator::Constraint c;
    c.vars = ctx.point_members(p);
    c.target0 = m;
    cs.push_back(std::move(c));
  }
  return cs;
}

}  // namespace

SearchResult find_spreads(const CLContext& ctx, const SearchBudget& budget, int anchor) {
  if (anchor >= ctx.size()) throw std::invalid_argument("anchor out of range");
  Propagator prop(ctx.size(), point_constraints(ctx, 1), -1);
  std::vector<std::pair<int, int>> fixed;
  if (anchor >= 0) fixed.emplace_back(anchor, 1);
  return run(
      prop, budget,
      [&](const Bitset& b) -> std::optional<std::string> {
        if (!is_spread(ctx, b) || BigInt(b.count()) != ctx.spread_size())
          throw std::logic_error("spread search produced a non-spread");
        return "spread";
      },
      fixed);
}

SearchResult find_regular_systems(const CLContext& ctx, int m, const std::vector<int>& S,
                                  const SearchBudget& budget) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  Propagator prop(ctx.size(), point_constraints(ctx, m), -1);
  return run(prop, budget, [&](const Bitset& b) -> std::optional<std::string> {
    if (!is_regular_system(ctx, b, m)) throw std::logic_error("regular system search produced a wrong set");
    if (!S.empty() && !ctx.eigenspace_membership(ctx.characteristic(b), S)) return std::nullopt;
    return std::to_string(m) + "-regular";
  });
}

SearchResult find_tight_sets(const GeneralizedQuadrangle& gq, int x_max, const SearchBudget& budget) {
  SearchResult all;
  const auto start = Clock::now();
  for (int x = 1; x <= x_max; ++x) {
    std::vector<Propagator::Constraint> cs;
    for (int p = 0; p < gq.num_points(); ++p) {
      Propagator::Constraint c;
      c.owner = p;
      Bitset nb = gq.perp(p);
      nb.reset(p);
      c.vars = members(nb);
      c.target0 = x;
      c.target1 = gq.s() + x - 1;
      cs.push_back(std::move(c));
    }
    // A line lies in T or carries at most x of its points.
    for (int l = 0; l < gq.num_lines(); ++l) {
      Propagator::Constraint c;
      c.vars = gq.line(l);
      c.target0 = x;
      c.all_or_at_most = true;
      cs.push_back(std::move(c));
    }
    Propagator prop(gq.num_points(), std::move(cs), x * (gq.s() + 1));
    SearchBudget b = budget;
    b.max_nodes = budget.max_nodes - all.nodes;
    SearchResult r = run(prop, b, [&](const Bitset& t) -> std::optional<std::string> {
      const TightSetResult tr = tight_set_test(gq, t);
      if (tr.verdict != Verdict::kPass || tr.i != x) throw std::logic_error("tight set search produced a wrong set");
      return std::string(to_string(classify_tight_set(gq, t)));
    });
    all.nodes += r.nodes;
    all.complete = all.complete && r.complete;
    for (std::size_t k = 0; k < r.sets.size(); ++k) {
      all.sets.push_back(std::move(r.sets[k]));
      all.labels.push_back(std::to_string(x) + ":" + r.labels[k]);
    }
    if (!r.complete) break;
  }
  all.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return all;
}

SearchResult find_cl_sets(const CLContext& ctx, int x, const SearchBudget& budget) {
  if (x < 0 || BigInt(x) > ctx.max_parameter()) throw std::invalid_argument("parameter out of range");
  const int lambda = static_cast<int>(to_int64(ctx.lambda()));
  std::vector<Propagator::Constraint> cs;
  for (int pi = 0; pi < ctx.size(); ++pi) {
    Propagator::Constraint c;
    c.owner = pi;
    c.vars = ctx.disjoint_lists()[pi];
    c.target0 = x * lambda;
    c.target1 = (x - 1) * lambda;
    cs.push_back(std::move(c));
  }
  const int size = static_cast<int>(x * to_int64(ctx.pencil_size()));
  if (!ctx.restricted() && ctx.descriptor().rank == 2) {
    // Members meeting pi in a point: |L| - chi - disjoint members.
    for (int pi = 0; pi < ctx.size(); ++pi) {
      Propagator::Constraint c;
      c.owner = pi;
      c.vars = ctx.scheme().relation(1)[pi];
      c.target0 = size - x * lambda;
      c.target1 = size - 1 - (x - 1) * lambda;
      cs.push_back(std::move(c));
    }
  }
  Propagator prop(ctx.size(), std::move(cs), size);
  return run(prop, budget, [&](const Bitset& b) -> std::optional<std::string> {
    const CLReport r = check(ctx, b);
    if (!r.is_cl() || !r.consistent() || r.x != x) throw std::logic_error("CL search produced a set that fails");
    return "cl";
  });
}

namespace {

std::string label_parameter1(const CLContext& ctx, const GeneratorSet& L) {
  const PolarSpaceInstance& inst = ctx.instance();
  Bitset common(inst.num_points());
  common.set();
  for (int g : ctx.to_global(L)) common &= inst.generator_points(g);
  if (common.any() && BigInt(L.count()) == ctx.pencil_size()) return "pencil";
  const PolarSpaceDescriptor& desc = ctx.descriptor();
  if (!ctx.restricted() && desc.type() == SpaceType::kIII) {
    for (const auto& h : ctx.scheme().hyperbolic_classes())
      if (ctx.from_global(h.members) == L) return "hyperbolic_class";
    if (desc.rank == 3)
      for (auto g = L.find_first(); g != Bitset::npos; g = L.find_next(g))
        if (base_plane(ctx, static_cast<int>(g)).set == L) return "base_plane";
  }
  if (ctx.restricted() && desc.rank == 4)
    for (int g = 0; g < ctx.scheme().size(); ++g)
      if (ctx.local_index(g) < 0 && base_solid(ctx, g).set == L) return "base_solid";
  return "other";
}

}  // namespace

SearchResult find_cl_parameter1(const CLContext& ctx, const SearchBudget& budget) {
  SearchResult r = find_cl_sets(ctx, 1, budget);
  for (std::size_t k = 0; k < r.sets.size(); ++k) r.labels[k] = label_parameter1(ctx, r.sets[k]);
  return r;
}

std::string classify_small_cl(const CLContext& ctx, const GeneratorSet& L) {
  const PolarSpaceInstance& inst = ctx.instance();
  std::vector<int> vertices;
  GeneratorSet covered = ctx.empty_set();
  for (int p = 0; p < inst.num_points(); ++p) {
    const auto& pm = ctx.point_members(p);
    if (pm.empty() || !std::all_of(pm.begin(), pm.end(), [&](int g) { return L.test(g); })) continue;
    vertices.push_back(p);
    for (int g : pm) covered.set(g);
  }
  bool non_collinear = true;
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (inst.collinear(vertices[a]).test(vertices[b])) non_collinear = false;
  if (covered == L && non_collinear) return "pencils";
  try {
    const int n = embedded_polar_space_count(ctx);
    for (int k = 0; k < n; ++k)
      if (embedded_polar_space(ctx, k).set == L) return "embedded";
  } catch (const std::invalid_argument&) {
  }
  return "other";
}

int max_disjoint_in(const CLContext& ctx, const GeneratorSet& L) {
  const std::vector<int> m = members(L);
  const int k = static_cast<int>(m.size());
  std::vector<Bitset> adj(k, Bitset(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && ctx.distance(m[a], m[b]) == ctx.descriptor().rank) adj[a].set(b);
  int best = 0;
  std::function<void(int, const Bitset&)> grow = [&](int size, const Bitset& cand) {
    if (size > best) best = size;
    if (size + static_cast<int>(cand.count()) <= best) return;
    for (auto v = cand.find_first(); v != Bitset::npos; v = cand.find_next(v)) {
      Bitset next = cand & adj[v];
      // Only extend with larger indices so each clique is built once.
      for (auto u = next.find_first(); u != Bitset::npos && u <= v; u = next.find_next(u)) next.reset(u);
      grow(size + 1, next);
    }
  };
  Bitset all(k);
  all.set();
  grow(0, all);
  return best;
}

SpreadTransitivity spread_transitivity(const CLContext& ctx, const std::vector<Bitset>& spreads) {
  const int n = ctx.size();
  const int d = ctx.descriptor().rank;
  auto key2 = [n](int a, int b) { return static_cast<std::int64_t>(a) * n + b; };
  auto key3 = [n](int a, int b, int c) { return (static_cast<std::int64_t>(a) * n + b) * n + c; };
  std::unordered_map<std::int64_t, std::int64_t> c2, c3;
  for (const Bitset& s : spreads) {
    const std::vector<int> m = members(s);
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = a + 1; b < m.size(); ++b) {
        ++c2[key2(m[a], m[b])];
        for (std::size_t c = b + 1; c < m.size(); ++c) ++c3[key3(m[a], m[b], m[c])];
      }
  }
  SpreadTransitivity r;
  r.n2_constant = r.n3_constant = true;
  auto lookup = [](const auto& map, std::int64_t k) {
    const auto it = map.find(k);
    return it == map.end() ? std::int64_t{0} : it->second;
  };
  for (int a = 0; a < n; ++a)
    for (int b : ctx.disjoint_lists()[a]) {
      if (b <= a) continue;
      ++r.pairs;
      const std::int64_t v = lookup(c2, key2(a, b));
      if (r.n2 < 0) r.n2 = v;
      else if (r.n2 != v) r.n2_constant = false;
      for (int c : ctx.disjoint_lists()[b]) {
        if (c <= b || ctx.distance(a, c) != d) continue;
        ++r.triples;
        const std::int64_t w = lookup(c3, key3(a, b, c));
        if (r.n3 < 0) r.n3 = w;
        else if (r.n3 != w) r.n3_constant = false;
      }
    }
  if (r.pairs == 0) r.n2_constant = false;
  if (r.triples == 0) r.n3_constant = false;
  return r;
}

}  // namespace polarcl

#include "coalition/chains.hpp"

#include <functional>
#include <map>

#include "coalition/coalition_graph.hpp"
#include "coalition/domination.hpp"
#include "coalition/families.hpp"

namespace coalition {

ChainResult sc_chain(const Graph& g, int max_steps) {
  if (max_steps < 1) throw GraphError("sc_chain: max_steps must be at least 1");
  if (g.order() > kMaxCanonicalOrder) {
    throw GraphError("sc_chain: order " + std::to_string(g.order()) + " exceeds " +
                     std::to_string(kMaxCanonicalOrder));
  }
  ChainResult chain;
  std::map<CanonicalCode, int> seen;
  chain.sequence.push_back(g);
  chain.codes.push_back(canonical_form(g));
  seen.emplace(chain.codes.back(), 0);
  for (int steps = 0;; ++steps) {
    const int last = static_cast<int>(chain.sequence.size()) - 1;
    if (!is_sp_graph(chain.sequence.back())) {
      chain.outcome = TerminatedNonSp{last};
      return chain;
    }
    if (steps == max_steps) {
      chain.outcome = StepCap{max_steps};
      return chain;
    }
    Graph next = sc_graph(chain.sequence.back());
    CanonicalCode code = canonical_form(next);
    chain.sequence.push_back(std::move(next));
    chain.codes.push_back(code);
    if (auto it = seen.find(code); it != seen.end()) {
      chain.outcome = Cycle{it->second, last + 1 - it->second};
      return chain;
    }
    seen.emplace(std::move(code), last + 1);
  }
}

std::string LsccValue::to_string() const {
  switch (kind) {
    case Kind::kFinite: return std::to_string(value);
    case Kind::kInfinite: return "inf";
    case Kind::kUnknown: return "unknown(" + std::to_string(value) + ")";
  }
  return "?";
}

LsccValue l_scc(const ChainResult& chain) {
  LsccValue out;
  if (const auto* t = std::get_if<TerminatedNonSp>(&chain.outcome)) {
    out.value = t->last_index;
    out.start_not_sp = t->last_index == 0;
  } else if (const auto* c = std::get_if<Cycle>(&chain.outcome)) {
    // Length zero only when every graph of the chain is isomorphic to the
    // first; any other repeat never terminates.
    if (c->entry_index != 0 || c->period != 1) out.kind = LsccValue::Kind::kInfinite;
  } else {
    out.kind = LsccValue::Kind::kUnknown;
    out.value = std::get<StepCap>(chain.outcome).cap;
  }
  return out;
}

LsccValue l_scc(const Graph& g) { return l_scc(sc_chain(g)); }

Graph m1_graph() {
  return Graph::from_edges(5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {0, 4}, {0, 3}});
}

Graph m2_graph() {
  return Graph::from_edges(5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {0, 4}, {0, 3}, {2, 3}});
}

Graph h22_one_missing(int l, int r) {
  if (l < 1 || r < 1) throw GraphError("h22_one_missing: l and r must be positive");
  Graph g(3 + l + r);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  for (int i = 0; i < l; ++i) {
    g.add_edge(3 + i, 0);
    g.add_edge(3 + i, 2);
  }
  for (int i = 0; i < r; ++i) {
    const int v = 3 + l + i;
    g.add_edge(v, 1);
    g.add_edge(v, 2);
    if (i > 0) g.add_edge(v, 0);
  }
  return g;
}

namespace {

// A template is a pattern over chain positions plus an ending: terminal
// (the last position is the non-SP endpoint) or periodic (the chain
// repeats with the given period and the pattern is read on its unfolding).
using StepCheck = std::function<bool(const Graph&, const CanonicalCode&)>;

struct Template {
  std::string label;
  std::vector<StepCheck> steps;
  int period = 0;
};

using Build = std::function<Graph()>;

// The named graph, or nothing when its parameters are out of range.
std::optional<Graph> try_build(const Build& build) {
  try {
    return build();
  } catch (const GraphError&) {
    return std::nullopt;
  }
}

StepCheck any() {
  return [](const Graph&, const CanonicalCode&) { return true; };
}

StepCheck iso(const Build& build) {
  return [build](const Graph& g, const CanonicalCode& code) {
    const std::optional<Graph> named = try_build(build);
    return named && named->order() == g.order() && canonical_form(*named) == code;
  };
}

StepCheck iso_any(const std::function<std::vector<Graph>()>& build) {
  return [build](const Graph&, const CanonicalCode& code) {
    for (const Graph& named : build()) {
      if (canonical_form(named) == code) return true;
    }
    return false;
  };
}

StepCheck in_h1() {
  return [](const Graph& g, const CanonicalCode&) { return recognize_h1(g).has_value(); };
}

StepCheck in_h2(int subfamily) {
  return [subfamily](const Graph& g, const CanonicalCode&) {
    return subfamily == 0 ? recognize_h2(g).has_value()
                          : recognize_h2_subfamily(g, subfamily).has_value();
  };
}

StepCheck both(StepCheck a, StepCheck b) {
  return [a, b](const Graph& g, const CanonicalCode& c) { return a(g, c) && b(g, c); };
}

std::vector<StepCheck> concat(std::vector<StepCheck> a, const std::vector<StepCheck>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Number of leading positions that agree with the template, or -1 when the
// chain's length or cycle shape already differs. A full match returns the
// template length.
int agreement(const Template& t, const ChainResult& chain) {
  const int m = static_cast<int>(t.steps.size());
  const int stored = static_cast<int>(chain.sequence.size());
  int entry = 0;
  if (t.period == 0) {
    const auto* term = std::get_if<TerminatedNonSp>(&chain.outcome);
    if (!term || term->last_index != m - 1) return -1;
  } else {
    const auto* cycle = std::get_if<Cycle>(&chain.outcome);
    if (!cycle || cycle->period != t.period || cycle->entry_index + cycle->period > m - 1) {
      return -1;
    }
    entry = cycle->entry_index;
  }
  for (int i = 0; i < m; ++i) {
    const int at = i < stored ? i : entry + (i - entry) % t.period;
    if (!t.steps[i](chain.sequence[at], chain.codes[at])) return i;
  }
  return m;
}

bool matches(const Template& t, const ChainResult& chain) {
  return agreement(t, chain) == static_cast<int>(t.steps.size());
}

Graph bar(int n) { return empty_graph(n); }
Graph k(int n) { return complete_graph(n); }
Graph k1_k2() { return disjoint_union(k(1), k(2)); }

// Named graphs at order n.
struct Named {
  int n;

  Build k1_union_k(int m) const {
    return [m] { return disjoint_union(k(1), k(m)); };
  }
  Build star_plus_isolate() const {
    const int m = n - 2;
    return [m] { return disjoint_union(k(1), complete_bipartite(1, m)); };
  }
  Build k2_bip() const {
    const int m = n - 2;
    return [m] { return complete_bipartite(2, m); };
  }
  Build k1_join_star() const {
    const int m = n - 2;
    return [m] { return join(k(1), complete_bipartite(1, m)); };
  }
  Build k2_join_bar() const {
    const int m = n - 2;
    return [m] { return join(k(2), bar(m)); };
  }
  // K2 + K̄_{n-2} with one edge inside the independent side.
  Build k2_join_bar_plus_edge() const {
    const int m = n - 2;
    return [m] {
      Graph g = join(k(2), bar(m));
      g.add_edge(2, 3);
      return g;
    };
  }
  Build k3_bip() const {
    const int m = n - 3;
    return [m] { return complete_bipartite(3, m); };
  }
  Build k1k2_join_bar() const {
    const int m = n - 3;
    return [m] { return join(k1_k2(), bar(m)); };
  }
  Build p3_join_bar() const {
    const int m = n - 3;
    return [m] { return join(path_graph(3), bar(m)); };
  }
  Build k1_union_k2bip() const {
    const int m = n - 3;
    return [m] { return disjoint_union(k(1), complete_bipartite(2, m)); };
  }
  std::function<std::vector<Graph>()> m3_set() const {
    const int order = n;
    return [order] { return sc_graphs_of_one_missing(order, 2, order); };
  }
  std::function<std::vector<Graph>()> m4_set() const {
    const int order = n;
    return [order] { return sc_graphs_of_one_missing(order, 1, 1); };
  }

  // SC-graphs of h22_one_missing(l, n - 3 - l) for l in [lo, hi], r ≥ 1,
  // restricted to SP inputs (M3: l ≥ 2; M4: l = 1, r ≥ 2).
  static std::vector<Graph> sc_graphs_of_one_missing(int order, int lo, int hi) {
    std::vector<Graph> out;
    for (int l = lo; l <= hi; ++l) {
      const int r = order - 3 - l;
      if (r < 1 || (l == 1 && r < 2)) continue;
      const Graph b = h22_one_missing(l, r);
      if (is_sp_graph(b)) out.push_back(sc_graph(b));
    }
    return out;
  }
};

const Build kK1 = [] { return k(1); };
const Build kK2 = [] { return k(2); };
const Build kBar2 = [] { return bar(2); };
const Build kP3 = [] { return path_graph(3); };
const Build kK1K2 = [] { return k1_k2(); };
const Build kC4 = [] { return cycle_graph(4); };
const Build kC5 = [] { return cycle_graph(5); };
const Build kK4 = [] { return k(4); };
const Build kBar4 = [] { return bar(4); };
const Build kBar3UK2 = [] { return disjoint_union(bar(3), k(2)); };
const Build kBar2UK2 = [] { return disjoint_union(bar(2), k(2)); };
const Build kBar2UP3 = [] { return disjoint_union(bar(2), path_graph(3)); };
const Build kBar2JK3 = [] { return join(bar(2), k(3)); };
const Build kBar2JK1K2 = [] { return join(bar(2), k1_k2()); };
const Build kBar3JBar2 = [] { return join(bar(3), bar(2)); };
const Build kCorona = [] { return corona_k3_k1(); };
const Build kM1 = [] { return m1_graph(); };
const Build kM2 = [] { return m2_graph(); };

// Tails shared between cases: the chain from a δ = 1 graph without a full
// vertex, from an H2¹ graph, and the M1 / M2 / named-graph runs.
std::vector<StepCheck> h1_tail() { return {in_h1()}; }
std::vector<StepCheck> c4_tail() { return {iso(kC4), iso(kK4), iso(kBar4)}; }
std::vector<StepCheck> k2bip_tail(const Named& nm) {
  return {iso(nm.k2_bip()), iso(nm.k1_join_star())};
}
std::vector<StepCheck> m1_run() {
  return {iso(kM1), iso(kBar2JK1K2), iso(kBar2JK3), iso(kBar3UK2)};
}
std::vector<StepCheck> m2_run() { return {iso(kM2), iso(kBar2JK3), iso(kBar3UK2)}; }
std::vector<StepCheck> bar2jk3_run() { return {iso(kBar2JK3), iso(kBar3UK2)}; }

void add_thm16_like(std::vector<Template>& out, const std::string& prefix_label,
                    const std::vector<StepCheck>& prefix, const Named& nm, char first) {
  out.push_back({prefix_label + "(" + char(first) + ")", concat(prefix, h1_tail())});
  out.push_back({prefix_label + "(" + char(first + 1) + ")", concat(prefix, c4_tail())});
  out.push_back({prefix_label + "(" + char(first + 2) + ")", concat(prefix, k2bip_tail(nm))});
}

void add_lem18_like(std::vector<Template>& out, const std::string& prefix_label,
                    const std::vector<StepCheck>& prefix, char first) {
  const Build ends[] = {kBar4, kBar3UK2, kBar2UK2, kBar2UP3};
  for (int i = 0; i < 4; ++i) {
    out.push_back({prefix_label + "(" + char(first + i) + ")", concat(prefix, {iso(ends[i])})});
  }
}

// Lemma 19 (f)-(j) endings after the prefix.
void add_lem19_tail(std::vector<Template>& out, const std::string& prefix_label,
                    const std::vector<StepCheck>& prefix, const Named& nm, char first) {
  const std::vector<StepCheck> ends = {iso(kCorona), iso_any(nm.m3_set()), iso_any(nm.m4_set()),
                                       iso(nm.k2_join_bar()), iso(nm.k2_join_bar_plus_edge())};
  for (int i = 0; i < 5; ++i) {
    out.push_back({prefix_label + "(" + char(first + i) + ")", concat(prefix, {ends[i]})});
  }
}

std::vector<Template> templates_delta0(const Named& nm) {
  std::vector<Template> t;
  t.push_back({"Thm14(a)", {iso(kK1), iso(kK1)}, 1});
  t.push_back({"Thm14(b)", {iso(kBar2), iso(kK2), iso(kBar2)}, 2});
  if (nm.n > 3) {
    const int m = nm.n - 1;
    t.push_back({"Thm14(c)", {iso(nm.k1_union_k(m)), iso([m] { return complete_bipartite(1, m); })}});
  }
  t.push_back({"Thm14(d)", {iso(kK1K2), iso(kP3), iso(kK1K2)}, 2});
  return t;
}

std::vector<Template> templates_delta1_full(const Named& nm) {
  std::vector<Template> t;
  t.push_back({"Thm15(a)", {iso(kK2), iso(kBar2), iso(kK2)}, 2});
  if (nm.n > 3) t.push_back({"Thm15(b)", {any(), iso(nm.star_plus_isolate())}});
  t.push_back({"Thm15(c)", {iso(kP3), iso(kK1K2), iso(kP3)}, 2});
  return t;
}

std::vector<Template> templates_delta1_no_full(const Named& nm) {
  std::vector<Template> t;
  add_thm16_like(t, "Thm16", {any()}, nm, 'a');
  return t;
}

std::vector<Template> templates_delta2_no_full(const Named& nm) {
  std::vector<Template> t;
  t.push_back({"Thm20(B-nonSP)", {any(), in_h2(0)}});

  const StepCheck b1 = in_h2(1);
  add_lem18_like(t, "Lem18", {any(), b1}, 'a');

  const StepCheck b2 = in_h2(2);
  const std::vector<StepCheck> p2 = {any(), b2};
  add_thm16_like(t, "Lem19", p2, nm, 'a');
  t.push_back({"Lem19(d)", concat({any()}, {both(b2, iso(kM1)), iso(kBar2JK1K2), iso(kBar2JK3),
                                            iso(kBar3UK2)})});
  t.push_back({"Lem19(e)", concat({any()}, {both(b2, iso(kM2)), iso(kBar2JK3), iso(kBar3UK2)})});
  add_lem19_tail(t, "Lem19", p2, nm, 'f');

  const std::string l3 = "Lem-lemcase3";
  const StepCheck b3 = in_h2(3);
  const std::vector<StepCheck> p3 = {any(), b3};
  add_thm16_like(t, l3, p3, nm, 'a');
  t.push_back({l3 + "(d)", {any(), both(b3, iso(kC5)), iso(kC5)}, 1});
  t.push_back({l3 + "(e)", concat({any()}, concat({both(b3, iso(kM1))},
                                                  {iso(kBar2JK1K2), iso(kBar2JK3), iso(kBar3UK2)}))});
  t.push_back({l3 + "(f)", concat({any(), both(b3, iso(kBar3JBar2))}, bar2jk3_run())});
  t.push_back({l3 + "(g)", concat({any(), both(b3, iso(kBar2JK1K2))}, bar2jk3_run())});
  const std::vector<StepCheck> p3c = {any(), b3, any()};
  add_lem18_like(t, l3, p3c, 'h');
  add_thm16_like(t, l3, p3c, nm, 'l');
  t.push_back({l3 + "(o)", concat(p3, m1_run())});
  t.push_back({l3 + "(p)", concat(p3, m2_run())});
  add_lem19_tail(t, l3, p3c, nm, 'q');
  t.push_back({l3 + "(v)", {any(), both(b3, iso(nm.k3_bip())), iso(nm.k3_bip())}, 1});
  t.push_back({l3 + "(w)", {any(), both(b3, iso(nm.k1k2_join_bar())), iso(nm.p3_join_bar()),
                            iso(nm.k1_union_k2bip())}});
  return t;
}

struct Classified {
  ChainResult chain;
  std::vector<Template> candidates;
};

Classified prepare(const Graph& g) {
  const DegreeStats stats = degree_stats(g);
  if (stats.min_degree > 2) {
    throw ClassificationError(ClassificationError::Kind::kOutOfRange,
                              "classify_chain: minimum degree " + std::to_string(stats.min_degree) +
                                  " is outside the characterized range");
  }
  if (!is_sp_graph(g)) {
    throw ClassificationError(ClassificationError::Kind::kNotSp,
                              "classify_chain: start graph is not an SP-graph");
  }
  const Named nm{g.order()};
  Classified out{sc_chain(g), {}};
  const bool has_full = !stats.full_vertices.empty();
  switch (stats.min_degree) {
    case 0: out.candidates = templates_delta0(nm); break;
    case 1: out.candidates = has_full ? templates_delta1_full(nm) : templates_delta1_no_full(nm); break;
    default:
      if (has_full) {
        out.candidates.push_back({"Thm17", {any(), any()}});
      } else {
        out.candidates = templates_delta2_no_full(nm);
      }
  }
  return out;
}

}  // namespace

std::vector<std::string> matching_templates(const Graph& g) {
  const Classified c = prepare(g);
  std::vector<std::string> labels;
  for (const Template& t : c.candidates) {
    if (matches(t, c.chain)) labels.push_back(t.label);
  }
  return labels;
}

ChainTemplate classify_chain(const Graph& g) {
  const Classified c = prepare(g);
  for (const Template& t : c.candidates) {
    if (matches(t, c.chain)) return {t.label, g.order()};
  }
  std::string detail = "classify_chain: no template matches the chain of " + emit_graph6(g) +
                       " (" + std::to_string(c.chain.sequence.size() - 1) + " arrows)";
  const Template* closest = nullptr;
  int best = 0;
  for (const Template& t : c.candidates) {
    if (const int a = agreement(t, c.chain); a > best) {
      best = a;
      closest = &t;
    }
  }
  if (closest) {
    detail += "; closest " + closest->label + " agrees up to position " + std::to_string(best - 1) +
              ", differs at " + describe(c.chain.sequence[best]);
  } else {
    detail += "; no template has this chain shape";
  }
  throw ClassificationError(ClassificationError::Kind::kNoTemplate, detail);
}

}  // namespace coalition

#include "coalition/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <thread>

#include "coalition/canonical.hpp"
#include "coalition/coalition_graph.hpp"
#include "coalition/domination.hpp"
#include "coalition/families.hpp"

namespace coalition {

int default_jobs() {
  if (const char* env = std::getenv("COALITION_KIT_JOBS")) {
    char* end = nullptr;
    const long jobs = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && jobs > 0) return static_cast<int>(std::min(jobs, 1024L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Runs fn(i) for i in [0, count) on a worker pool; results land in index
// order, so aggregation is deterministic whatever the scheduling.
template <class Result, class Fn>
std::vector<Result> parallel_map(int count, int jobs, Fn fn) {
  std::vector<Result> out(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i; (i = next.fetch_add(1)) < count;) out[i] = fn(i);
  };
  const int threads = std::min(jobs <= 0 ? default_jobs() : jobs, count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

struct Failure {
  int subcheck;
  std::string detail;
};

// Everything one checked graph (or generated instance) contributes to a
// report.
struct Probe {
  std::string graph6;
  std::vector<long> checked;
  std::vector<Failure> failures;
  std::vector<std::string> bins;

  template <class Detail>
  void expect(int subcheck, bool ok, Detail&& detail) {
    if (checked.size() <= static_cast<std::size_t>(subcheck)) checked.resize(subcheck + 1);
    ++checked[subcheck];
    if (!ok) failures.push_back({subcheck, detail()});
  }
  void bin(std::string key) { bins.push_back(std::move(key)); }
};

using Check = std::function<void(const Graph&, Probe&)>;

struct TheoremDef {
  std::string id;
  int min_order = 1;
  std::vector<std::string> subchecks;
  GraphPredicate hypothesis;
  Check check;
  std::vector<std::string> notes;
  /// Extra instances beyond the hypothesis class (seeded generation).
  std::function<std::vector<Probe>(int jobs)> extra;
  /// Graph source replacing enumeration (cycles for obs7).
  std::function<std::vector<Graph>(int n_max)> source;
};

// ---------------------------------------------------------------------------
// Shared helpers

bool is_cycle(const Graph& g) {
  if (g.order() < 3) return false;
  for (int v : g.vertices()) {
    if (g.degree(v) != 2) return false;
  }
  VertexSet reached = VertexSet::single(0);
  for (VertexSet frontier = reached; !frontier.empty();) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    frontier = next - reached;
    reached |= next;
  }
  return reached == g.vertices();
}

LsccValue finite(int k) { return {LsccValue::Kind::kFinite, k, false}; }
LsccValue infinite() { return {LsccValue::Kind::kInfinite, 0, false}; }

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string first_with_prefix(const std::vector<std::string>& labels, const std::string& prefix) {
  for (const auto& l : labels) {
    if (l.rfind(prefix, 0) == 0) return l;
  }
  return {};
}

std::string joined(const std::vector<std::string>& v) {
  if (v.empty()) return "none";
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
  return out;
}

std::string chain_text(const Graph& g) {
  const ChainResult chain = sc_chain(g);
  std::string out;
  for (const Graph& h : chain.sequence) out += (out.empty() ? "" : " -> ") + emit_graph6(h);
  return out + " (L_SCC " + l_scc(chain).to_string() + ")";
}

auto text(std::string s) {
  return [s = std::move(s)] { return s; };
}

DegreeFilter filter(int delta, int full = -1, int full_at_least = 0) {
  DegreeFilter f;
  f.min_degree = delta;
  f.full_vertices = full;
  f.full_vertices_at_least = full_at_least;
  return f;
}

GraphPredicate with(GraphPredicate a, GraphPredicate b) {
  return [a, b](const Graph& g) { return a(g) && b(g); };
}

const GraphPredicate kSp = [](const Graph& g) { return is_sp_graph(g); };

// SP, δ = 2, no full vertex, B = CG(G, Γ₁) SP and in the given H2 subfamily.
GraphPredicate lemma_hypothesis(int subfamily) {
  return with(with(filter(2, 0), kSp), [subfamily](const Graph& g) {
    const Graph b = sc_graph(g);
    return is_sp_graph(b) && recognize_h2_subfamily(b, subfamily).has_value();
  });
}

Check lemma_check(const std::string& prefix) {
  return [prefix](const Graph& g, Probe& p) {
    const std::string label = first_with_prefix(matching_templates(g), prefix);
    p.expect(0, !label.empty(), [&] { return "no case matches: " + chain_text(g); });
    p.bin(label.empty() ? "unmatched" : label);
  };
}

// ---------------------------------------------------------------------------
// Theorem registry

std::vector<Probe> generated_f1(int jobs) {
  constexpr int kInstances = 500;
  return parallel_map<Probe>(kInstances, jobs, [](int i) {
    // Orders 4..9 in rotation; Q cycles through its admissible sizes.
    const int order = 4 + i % 6;
    const int pq = order - 3;
    std::vector<int> q_sizes = {0};
    for (int q = 2; q <= pq; ++q) q_sizes.push_back(q);
    const int q = q_sizes[(i / 6) % q_sizes.size()];
    const std::string spec_text = "f1:P=" + std::to_string(pq - q) + ",Q=" + std::to_string(q) +
                                  ",seed=" + std::to_string(i);
    Probe p;
    try {
      const Graph g = generate_family(parse_family_spec(spec_text));
      p.graph6 = emit_graph6(g);
      p.expect(1, recognize_f1(g).has_value(), text(spec_text + ": generated graph not recognized as F1"));
      const bool sp = is_sp_graph(g);
      p.expect(2, sp && recognize_h1(sc_graph(g)).has_value(), [&] {
        return spec_text + (sp ? ": CG(G,Γ1) = " + emit_graph6(sc_graph(g)) + " not in H1" : ": not SP");
      });
    } catch (const std::exception& e) {
      p.graph6 = "";
      p.expect(2, false, text(spec_text + ": generation failed: " + e.what()));
    }
    return p;
  });
}

std::vector<TheoremDef> build_registry() {
  std::vector<TheoremDef> defs;

  defs.push_back({"thm1", 1, {"sp => K1 u K(n-1)", "K1 u K(n-1) => sp"}, filter(0),
                  [](const Graph& g, Probe& p) {
                    const int n = g.order();
                    const Graph target = n == 1 ? complete_graph(1)
                                                : disjoint_union(complete_graph(1), complete_graph(n - 1));
                    const bool sp = is_sp_graph(g);
                    const bool iso = are_isomorphic(g, target);
                    p.expect(0, !sp || iso, text("SP but not K1 u K(n-1): " + describe(g)));
                    p.expect(1, !iso || sp, text("K1 u K(n-1) but not SP"));
                  }});

  defs.push_back({"thm2", 3, {"sp => K(n-1) plus pendant", "K(n-1) plus pendant => sp"},
                  with(filter(1, 1), [](const Graph& g) { return g.order() >= 3; }),
                  [](const Graph& g, Probe& p) {
                    Graph target = disjoint_union(complete_graph(1), complete_graph(g.order() - 1));
                    target.add_edge(0, 1);
                    const bool sp = is_sp_graph(g);
                    const bool iso = are_isomorphic(g, target);
                    p.expect(0, !sp || iso, text("SP but not K(n-1) plus a pendant edge: " + describe(g)));
                    p.expect(1, !iso || sp, text("K(n-1) plus a pendant edge but not SP"));
                  }});

  defs.push_back({"thm4", 4, {"sp => F1", "F1 => sp"}, filter(1, 0), [](const Graph& g, Probe& p) {
                    const bool sp = is_sp_graph(g);
                    const auto wit = recognize_f1(g);
                    p.expect(0, !sp || wit, text("SP but no F1 witness: " + describe(g)));
                    p.expect(1, !wit || sp, [&] { return "F1 witness " + to_string(*wit) + " but not SP"; });
                  }});

  {
    TheoremDef d{"thm6", 4,
                 {"enumerated F1: CG in H1", "generated F1: recognized as F1", "generated F1: CG in H1"},
                 with(filter(1, 0), [](const Graph& g) { return recognize_f1(g).has_value(); }),
                 [](const Graph& g, Probe& p) {
                   const bool sp = is_sp_graph(g);
                   p.expect(0, sp && recognize_h1(sc_graph(g)).has_value(), [&] {
                     return sp ? "CG(G,Γ1) = " + emit_graph6(sc_graph(g)) + " not in H1" : std::string("F1 but not SP");
                   });
                 }};
    d.extra = generated_f1;
    d.notes.push_back("generated instances: 500 F1 graphs, orders 4..9, spec f1:P=..,Q=..,seed=i for i in 0..499");
    defs.push_back(std::move(d));
  }

  {
    TheoremDef d{"obs7", 3,
                 {"sp <=> 3 <= n <= 6", "F2 <=> 4 <= n <= 6", "sp without full vertex => 4 <= n <= 6 and F2"},
                 is_cycle, [](const Graph& g, Probe& p) {
                   const int n = g.order();
                   const bool sp = is_sp_graph(g);
                   const auto wit = recognize_f2(g);
                   p.expect(0, sp == (n >= 3 && n <= 6), text("C" + std::to_string(n) + (sp ? " is" : " is not") + " SP"));
                   p.expect(1, wit.has_value() == (n >= 4 && n <= 6),
                            text("C" + std::to_string(n) + (wit ? " is" : " is not") + " in F2"));
                   if (n > 3) {
                     p.expect(2, !sp || (n <= 6 && wit), text("C" + std::to_string(n) + " SP outside the stated range"));
                   }
                   p.bin(sp ? "sp" : "not-sp");
                 }};
    d.source = [](int n_max) {
      std::vector<Graph> cycles;
      for (int n = 3; n <= std::min(std::max(n_max, 10), kMaxOrder); ++n) cycles.push_back(cycle_graph(n));
      return cycles;
    };
    d.notes.push_back(
        "C3 is an SP-graph (all its vertices are full) although 3 lies outside 4..6; the range is checked "
        "for cycles without a full vertex, and full SP-ness over cycles is checked as 3 <= n <= 6");
    d.notes.push_back("cycles C3..C(max(n_max,10)) are built directly; no enumeration");
    defs.push_back(std::move(d));
  }

  defs.push_back({"thm8", 4, {"sp => F2", "F2 => sp"}, filter(2, 0), [](const Graph& g, Probe& p) {
                    const bool sp = is_sp_graph(g);
                    const auto wit = recognize_f2(g);
                    p.expect(0, !sp || wit, text("SP but no F2 witness: " + describe(g)));
                    p.expect(1, !wit || sp, [&] { return "F2 witness " + to_string(*wit) + " but not SP"; });
                  }});

  defs.push_back(
      {"thm9", 3,
       {"one full vertex f: sp => G-f in F1", "one full vertex f: G-f in F1 => sp",
        "two full vertices: sp => (K1 u K(n-3)) + K2", "two full vertices: (K1 u K(n-3)) + K2 => sp",
        "three or more full vertices => C3"},
       filter(2, -1, 1), [](const Graph& g, Probe& p) {
         const VertexSet full = degree_stats(g).full_vertices;
         const bool sp = is_sp_graph(g);
         if (full.size() == 1) {
           const bool f1 = recognize_f1(remove_vertex(g, full.first())).has_value();
           p.expect(0, !sp || f1, text("SP but G-f not in F1: " + describe(g)));
           p.expect(1, !f1 || sp, text("G-f in F1 but G not SP: " + describe(g)));
         } else if (full.size() == 2) {
           const int n = g.order();
           const bool iso = n >= 4 && are_isomorphic(g, join(disjoint_union(complete_graph(1), complete_graph(n - 3)),
                                                             complete_graph(2)));
           p.expect(2, !sp || iso, text("SP but not (K1 u K(n-3)) + K2: " + describe(g)));
           p.expect(3, !iso || sp, text("(K1 u K(n-3)) + K2 but not SP"));
         } else {
           p.expect(4, are_isomorphic(g, cycle_graph(3)), text("three full vertices but not C3: " + describe(g)));
         }
         p.bin(std::to_string(std::min(full.size(), 3)) + (full.size() >= 3 ? "+" : "") + " full");
       }});

  defs.push_back({"thm13", 4, {"F2 => sp", "F2 => CG in H2"},
                  with(filter(2, 0), [](const Graph& g) { return recognize_f2(g).has_value(); }),
                  [](const Graph& g, Probe& p) {
                    const bool sp = is_sp_graph(g);
                    p.expect(0, sp, text("F2 but not SP: " + describe(g)));
                    if (sp) {
                      const Graph b = sc_graph(g);
                      const auto wit = recognize_h2(b);
                      p.expect(1, wit.has_value(), text("CG(G,Γ1) = " + emit_graph6(b) + " not in H2"));
                      if (wit) p.bin("H2." + std::to_string(wit->subfamily));
                    }
                  }});

  defs.push_back({"thm14", 1, {"chain matches the case for n", "L_SCC matches the case for n"},
                  with(filter(0), kSp), [](const Graph& g, Probe& p) {
                    const int n = g.order();
                    const std::string want = n == 1 ? "Thm14(a)" : n == 2 ? "Thm14(b)" : n == 3 ? "Thm14(d)" : "Thm14(c)";
                    const LsccValue want_l = n == 1 ? finite(0) : n <= 3 ? infinite() : finite(1);
                    const auto labels = matching_templates(g);
                    const LsccValue l = l_scc(g);
                    p.expect(0, contains(labels, want), [&] { return "expected " + want + ", matched " + joined(labels) + ": " + chain_text(g); });
                    p.expect(1, l == want_l, [&] { return "expected L_SCC " + want_l.to_string() + ", got " + l.to_string(); });
                    p.bin(want);
                  }});

  {
    TheoremDef d{"thm15", 2, {"chain matches the case for n", "L_SCC matches the case for n"},
                 with(filter(1, -1, 1), kSp), [](const Graph& g, Probe& p) {
                   const int n = g.order();
                   const std::string want = n == 2 ? "Thm15(a)" : n == 3 ? "Thm15(c)" : "Thm15(b)";
                   const LsccValue want_l = n <= 3 ? infinite() : finite(1);
                   const auto labels = matching_templates(g);
                   const LsccValue l = l_scc(g);
                   p.expect(0, contains(labels, want), [&] { return "expected " + want + ", matched " + joined(labels) + ": " + chain_text(g); });
                   p.expect(1, l == want_l, [&] { return "expected L_SCC " + want_l.to_string() + ", got " + l.to_string(); });
                   p.bin(want);
                 }};
    d.notes.push_back(
        "case (b) is stated under the hypothesis L_SCC(G) = 1, which is what its argument derives; checked "
        "without that hypothesis: for n > 3 the chain is G -> K1 u K(1,n-2) and L_SCC(G) = 1");
    defs.push_back(std::move(d));
  }

  defs.push_back({"thm16", 4, {"chain matches case (a), (b) or (c)", "L_SCC agrees with the matched case"},
                  with(filter(1, 0), kSp), [](const Graph& g, Probe& p) {
                    const std::string label = first_with_prefix(matching_templates(g), "Thm16");
                    const LsccValue l = l_scc(g);
                    p.expect(0, !label.empty(), [&] { return "no case matches: " + chain_text(g); });
                    if (!label.empty()) {
                      const int want = label == "Thm16(a)" ? 1 : label == "Thm16(b)" ? 3 : 2;
                      p.expect(1, l == finite(want), [&] { return label + " but L_SCC " + l.to_string(); });
                    }
                    p.bin(label.empty() ? "unmatched" : label);
                  }});

  defs.push_back({"thm17", 3, {"L_SCC = 1"}, with(filter(2, -1, 1), kSp), [](const Graph& g, Probe& p) {
                    const LsccValue l = l_scc(g);
                    p.expect(0, l == finite(1), [&] { return "L_SCC " + l.to_string() + ": " + chain_text(g); });
                    p.bin(l.to_string());
                  }});

  const std::string m34_note =
      "M3 and M4 are matched as the SC-graphs of the H2-subfamily-2 graphs with exactly one missing "
      "R1'-{x',z'} edge (|L1'| >= 2 for M3; |L1'| = 1, |R1'| >= 2 for M4)";
  defs.push_back({"lem18", 4, {"chain matches a case of the lemma"}, lemma_hypothesis(1), lemma_check("Lem18(")});
  defs.push_back({"lem19", 5, {"chain matches a case of the lemma"}, lemma_hypothesis(2), lemma_check("Lem19("),
                  {m34_note}});
  defs.push_back({"lem-h23", 5, {"chain matches a case of the lemma"}, lemma_hypothesis(3),
                  lemma_check("Lem-lemcase3("), {m34_note}});

  {
    TheoremDef d{"thm20", 4, {"L_SCC infinite or at most 5"}, with(filter(2, 0), kSp), [](const Graph& g, Probe& p) {
                   const ChainResult chain = sc_chain(g);
                   const LsccValue l = l_scc(chain);
                   const bool ok = l.kind == LsccValue::Kind::kInfinite ||
                                   (l.kind == LsccValue::Kind::kFinite && l.value <= 5);
                   p.expect(0, ok, [&] { return "L_SCC " + l.to_string() + ": " + chain_text(g); });
                   const auto* cycle = std::get_if<Cycle>(&chain.outcome);
                   p.bin(l.to_string() + (cycle && cycle->entry_index > 0 ? ":late-repeat" : ""));
                 }};
    d.notes.push_back(
        "histogram keys are L_SCC values; ':late-repeat' marks infinite chains whose first repeated graph is not "
        "the start graph");
    defs.push_back(std::move(d));
  }
  return defs;
}

const std::vector<TheoremDef>& registry() {
  static const std::vector<TheoremDef> defs = build_registry();
  return defs;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.push_back(d.id);
    return out;
  }();
  return ids;
}

TheoremReport verify_theorem(const std::string& id, const VerifyOptions& options) {
  const auto& defs = registry();
  const auto it = std::find_if(defs.begin(), defs.end(), [&](const TheoremDef& d) { return d.id == id; });
  if (it == defs.end()) throw VerifyError("unknown theorem id '" + id + "'");
  const TheoremDef& def = *it;
  const auto start = std::chrono::steady_clock::now();

  TheoremReport report;
  report.theorem_id = id;
  report.notes = def.notes;
  for (const auto& name : def.subchecks) report.subchecks.push_back({name});

  std::vector<Graph> graphs;
  if (options.graphs) {
    for (const Graph& g : *options.graphs) {
      if (def.hypothesis(g)) graphs.push_back(g);
    }
    report.order_min = options.graphs->empty() ? 0 : options.graphs->front().order();
    for (const Graph& g : *options.graphs) {
      report.order_min = std::min(report.order_min, g.order());
      report.order_max = std::max(report.order_max, g.order());
    }
  } else {
    if (options.n_max < def.min_order) {
      throw VerifyError(id + ": n_max " + std::to_string(options.n_max) +
                        " is below the smallest order in the hypothesis class (" +
                        std::to_string(def.min_order) + ")");
    }
    report.order_min = def.min_order;
    if (def.source) {
      graphs = def.source(options.n_max);
      report.order_max = graphs.back().order();
    } else {
      if (options.n_max > kMaxEnumerationOrder) {
        throw VerifyError(id + ": n_max above " + std::to_string(kMaxEnumerationOrder) +
                          " requires a graph6 file");
      }
      report.order_max = options.n_max;
      for (int n = def.min_order; n <= options.n_max; ++n) {
        for (Graph& g : enumerate_graphs(n, def.hypothesis)) graphs.push_back(std::move(g));
      }
    }
  }

  std::vector<Probe> probes = parallel_map<Probe>(static_cast<int>(graphs.size()), options.jobs, [&](int i) {
    Probe p;
    p.graph6 = emit_graph6(graphs[i]);
    try {
      def.check(graphs[i], p);
    } catch (const std::exception& e) {
      p.expect(0, false, text(std::string("exception: ") + e.what()));
    }
    return p;
  });
  if (def.extra && !options.graphs) {
    std::vector<Probe> more = def.extra(options.jobs);
    probes.insert(probes.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }

  for (const Probe& p : probes) {
    ++report.graphs_checked;
    for (std::size_t s = 0; s < p.checked.size(); ++s) report.subchecks[s].checked += p.checked[s];
    for (const Failure& f : p.failures) {
      ++report.subchecks[f.subcheck].failed;
      report.counterexamples.push_back({p.graph6, "[" + def.subchecks[f.subcheck] + "] " + f.detail});
    }
    for (const auto& key : p.bins) ++report.histogram[key];
  }
  report.passed = report.counterexamples.empty();
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<SweepRecord> sweep_chains(const std::vector<Graph>& graphs, int jobs) {
  return parallel_map<SweepRecord>(static_cast<int>(graphs.size()), jobs, [&](int i) {
    const Graph& g = graphs[i];
    SweepRecord rec;
    rec.graph6 = emit_graph6(g);
    rec.order = g.order();
    rec.min_degree = degree_stats(g).min_degree;
    try {
      const ChainResult chain = sc_chain(g);
      for (const Graph& h : chain.sequence) rec.chain.push_back(emit_graph6(h));
      rec.l_scc = l_scc(chain);
      if (rec.min_degree > 2) {
        rec.label = "out-of-characterized-range";
      } else if (!is_sp_graph(g)) {
        rec.label = "not-sp";
      } else {
        try {
          rec.label = classify_chain(g).label;
        } catch (const ClassificationError& e) {
          rec.label = "unclassified";
          rec.detail = e.what();
        }
      }
    } catch (const std::exception& e) {
      rec.label = "error";
      rec.detail = e.what();
    }
    return rec;
  });
}

nlohmann::json to_json(const LsccValue& value) {
  nlohmann::json j;
  switch (value.kind) {
    case LsccValue::Kind::kFinite:
      j["kind"] = "Finite";
      j["value"] = value.value;
      break;
    case LsccValue::Kind::kInfinite:
      j["kind"] = "Infinite";
      break;
    case LsccValue::Kind::kUnknown:
      j["kind"] = "Unknown";
      j["cap"] = value.value;
      break;
  }
  if (value.start_not_sp) j["start_not_sp"] = true;
  return j;
}

nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["theorem_id"] = r.theorem_id;
  j["order_range"] = {r.order_min, r.order_max};
  j["graphs_checked"] = r.graphs_checked;
  j["passed"] = r.passed;
  j["counterexamples"] = nlohmann::json::array();
  for (const auto& c : r.counterexamples) j["counterexamples"].push_back({{"graph6", c.graph6}, {"detail", c.detail}});
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["subchecks"] = nlohmann::json::array();
  for (const auto& s : r.subchecks) {
    j["subchecks"].push_back({{"name", s.name}, {"checked", s.checked}, {"failed", s.failed}});
  }
  j["histogram"] = r.histogram;
  j["notes"] = r.notes;
  return j;
}

nlohmann::json to_json(const SweepRecord& r) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["graph6"] = r.graph6;
  j["order"] = r.order;
  j["min_degree"] = r.min_degree;
  j["l_scc"] = r.l_scc ? to_json(*r.l_scc) : nlohmann::json(nullptr);
  j["label"] = r.label;
  if (!r.detail.empty()) j["detail"] = r.detail;
  j["chain"] = r.chain;
  return j;
}

}  // namespace coalition

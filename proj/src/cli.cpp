#include "coalition/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "coalition/canonical.hpp"
#include "coalition/chains.hpp"
#include "coalition/coalition_graph.hpp"
#include "coalition/domination.hpp"
#include "coalition/families.hpp"
#include "coalition/graph.hpp"
#include "coalition/verify.hpp"

namespace coalition::cli {
namespace {

using nlohmann::json;

/// Bad input detected after CLI11 parsing succeeded; reported like a usage
/// error together with the subcommand's grammar.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read graph file '" + path + "'");
  std::vector<Graph> graphs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty() || line[0] == '#') continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const GraphError& e) {
      throw InputError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return graphs;
}

struct GraphInput {
  std::vector<std::string> named;
  std::vector<std::string> g6;
  std::string file;

  void attach(CLI::App* app, bool allow_repeat = false) {
    auto* n = app->add_option("--named", named, "named-graph expression, e.g. \"C(5)\", \"join(K(1),Kbar(3))\"");
    auto* g = app->add_option("--g6", g6, "graph6 literal");
    auto* f = app->add_option("--file", file, "graph6 file, one graph per line");
    if (!allow_repeat) {
      n->expected(1);
      g->expected(1);
      n->excludes(g);
      n->excludes(f);
      g->excludes(f);
    }
  }

  /// Exactly one of the three sources, which may hold several graphs only
  /// when it is a file.
  std::vector<Graph> load() const {
    const int sources = (named.empty() ? 0 : 1) + (g6.empty() ? 0 : 1) + (file.empty() ? 0 : 1);
    if (sources != 1 || named.size() > 1 || g6.size() > 1) {
      throw InputError("exactly one of --named, --g6, --file is required");
    }
    return load_all();
  }

  std::vector<Graph> load_all() const {
    std::vector<Graph> graphs;
    try {
      for (const auto& e : named) graphs.push_back(build_named(e));
      for (const auto& s : g6) graphs.push_back(parse_graph6(s));
    } catch (const GraphError& e) {
      throw InputError(e.what());
    }
    if (!file.empty()) {
      auto more = read_graph_file(file);
      graphs.insert(graphs.end(), more.begin(), more.end());
    }
    return graphs;
  }
};

json vertex_list(VertexSet s) {
  json a = json::array();
  for (int v : s) a.push_back(v);
  return a;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

// ---- sp ----

int cmd_sp(const std::vector<Graph>& graphs, bool as_json, std::ostream& out) {
  int code = kOk;
  for (const Graph& g : graphs) {
    const SpVerdict v = sp_check(g);
    if (!v.is_sp) code = kFalse;
    if (as_json) {
      json j{{"graph6", emit_graph6(g)}, {"order", g.order()}, {"is_sp", v.is_sp}};
      j["full_vertices"] = vertex_list(v.full_vertices);
      if (v.is_sp) j["partner"] = v.partner;
      j["blocking_vertex"] = v.blocking_vertex ? json(*v.blocking_vertex) : json(nullptr);
      emit(out, j);
    } else {
      out << emit_graph6(g) << "  sp=" << (v.is_sp ? "true" : "false");
      if (v.blocking_vertex) out << "  blocking_vertex=" << *v.blocking_vertex;
      if (!v.full_vertices.empty()) out << "  full=" << v.full_vertices.to_string();
      out << '\n';
    }
  }
  return code;
}

// ---- cnum ----

int cmd_cnum(const std::vector<Graph>& graphs, bool as_json, std::ostream& out) {
  for (const Graph& g : graphs) {
    CoalitionNumberResult r;
    try {
      r = coalition_number_exact(g);
    } catch (const GraphError& e) {
      throw InputError(e.what());
    }
    if (as_json) {
      json j{{"graph6", emit_graph6(g)}, {"order", g.order()}, {"coalition_number", r.value}};
      j["witness"] = r.witness ? json(r.witness->to_string()) : json(nullptr);
      emit(out, j);
    } else if (graphs.size() == 1) {
      out << r.value << '\n';
    } else {
      out << emit_graph6(g) << ' ' << r.value << '\n';
    }
  }
  return kOk;
}

// ---- cg ----

int cmd_cg(const Graph& g, const std::string& partition_text, bool as_json, std::ostream& out) {
  Partition p;
  try {
    p = partition_text.empty() ? singleton_partition(g) : parse_partition(partition_text);
    check_partition(g, p);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const PartitionVerdict verdict = is_coalition_partition(g, p);
  if (!verdict.valid) {
    if (as_json) {
      json bad = json::array();
      for (const auto& pv : verdict.per_part) {
        if (pv.status == PartStatus::kInvalid) bad.push_back({{"part", pv.part}, {"reason", pv.reason}});
      }
      emit(out, {{"graph6", emit_graph6(g)}, {"partition", p.to_string()}, {"valid", false}, {"invalid_parts", bad}});
    } else {
      out << "not a coalition partition: " << p.to_string() << '\n';
      for (const auto& pv : verdict.per_part) {
        if (pv.status == PartStatus::kInvalid) out << "  part " << pv.part << ": " << pv.reason << '\n';
      }
    }
    return kFalse;
  }
  const CoalitionGraphResult cg = coalition_graph(g, p);
  if (as_json) {
    emit(out, {{"graph6", emit_graph6(g)},
               {"partition", p.to_string()},
               {"valid", true},
               {"coalition_graph", emit_graph6(cg.graph)},
               {"part_of_vertex", cg.part_of_vertex}});
  } else {
    out << "partition       " << p.to_string() << '\n';
    out << "coalition graph " << emit_graph6(cg.graph) << "  " << describe(cg.graph) << '\n';
  }
  return kOk;
}

// ---- chain ----

std::string outcome_name(const ChainOutcome& o) {
  if (std::holds_alternative<TerminatedNonSp>(o)) return "terminated-non-sp";
  if (std::holds_alternative<Cycle>(o)) return "cycle";
  return "step-cap";
}

json chain_json(const Graph& g, const ChainResult& chain, const LsccValue& value, const std::optional<std::string>& label) {
  json j{{"graph6", emit_graph6(g)}, {"schema_version", kReportSchemaVersion}};
  switch (value.kind) {
    case LsccValue::Kind::kFinite: j["kind"] = "Finite"; j["value"] = value.value; break;
    case LsccValue::Kind::kInfinite: j["kind"] = "Infinite"; break;
    case LsccValue::Kind::kUnknown: j["kind"] = "Unknown"; j["cap"] = value.value; break;
  }
  if (value.start_not_sp) j["start_not_sp"] = true;
  if (const auto* c = std::get_if<Cycle>(&chain.outcome)) {
    j["entry"] = c->entry_index;
    j["period"] = c->period;
  }
  json seq = json::array();
  for (const Graph& h : chain.sequence) seq.push_back(emit_graph6(h));
  j["sequence"] = seq;
  j["outcome"] = outcome_name(chain.outcome);
  j["template"] = label ? json(*label) : json(nullptr);
  return j;
}

int cmd_chain(const std::vector<Graph>& graphs, int max_steps, bool as_json, std::ostream& out) {
  for (const Graph& g : graphs) {
    ChainResult chain;
    try {
      chain = sc_chain(g, max_steps);
    } catch (const GraphError& e) {
      throw InputError(e.what());
    }
    const LsccValue value = l_scc(chain);
    std::optional<std::string> label;
    std::string why;
    try {
      label = classify_chain(g).label;
    } catch (const ClassificationError& e) {
      why = e.what();
    }
    if (as_json) {
      emit(out, chain_json(g, chain, value, label));
      continue;
    }
    for (std::size_t i = 0; i < chain.sequence.size(); ++i) {
      out << (i == 0 ? "   " : "-> ") << emit_graph6(chain.sequence[i]) << "  " << describe(chain.sequence[i]) << '\n';
    }
    out << "outcome  " << outcome_name(chain.outcome);
    if (const auto* c = std::get_if<Cycle>(&chain.outcome)) out << " (entry " << c->entry_index << ", period " << c->period << ")";
    out << '\n' << "L_SCC    " << value.to_string() << '\n';
    out << "template " << (label ? *label : "none (" + why + ")") << '\n';
  }
  return kOk;
}

// ---- family ----

struct Recognized {
  std::string family;
  std::string witness;
};

std::vector<Recognized> recognize_all(const Graph& g, const std::string& which) {
  std::vector<Recognized> hits;
  auto want = [&](const std::string& name) { return which == "all" || which == name || name.rfind(which + ".", 0) == 0; };
  if (want("f1")) {
    if (auto w = recognize_f1(g)) hits.push_back({"f1", to_string(*w)});
  }
  if (want("h1")) {
    if (auto w = recognize_h1(g)) hits.push_back({"h1", to_string(*w)});
  }
  for (int k = 1; k <= 3; ++k) {
    const std::string name = "f2." + std::to_string(k);
    if (!want(name)) continue;
    if (auto w = recognize_f2_subfamily(g, k)) hits.push_back({name, to_string(*w)});
  }
  for (int k = 1; k <= 3; ++k) {
    const std::string name = "h2." + std::to_string(k);
    if (!want(name)) continue;
    if (auto w = recognize_h2_subfamily(g, k)) hits.push_back({name, to_string(*w)});
  }
  return hits;
}

int cmd_recognize(const std::vector<Graph>& graphs, const std::string& which, bool as_json, std::ostream& out) {
  static const std::vector<std::string> kChoices = {"all", "f1", "h1", "f2", "h2", "f2.1", "f2.2", "f2.3", "h2.1", "h2.2", "h2.3"};
  if (std::find(kChoices.begin(), kChoices.end(), which) == kChoices.end()) {
    throw InputError("unknown family '" + which + "'");
  }
  int code = kOk;
  for (const Graph& g : graphs) {
    const auto hits = recognize_all(g, which);
    if (hits.empty()) code = kFalse;
    if (as_json) {
      json members = json::array();
      for (const auto& h : hits) members.push_back({{"family", h.family}, {"witness", h.witness}});
      emit(out, {{"graph6", emit_graph6(g)}, {"members", members}});
    } else {
      out << emit_graph6(g) << (hits.empty() ? "  no family matched\n" : "\n");
      for (const auto& h : hits) out << "  " << std::left << std::setw(5) << h.family << ' ' << h.witness << '\n';
    }
  }
  return code;
}

int cmd_generate(const std::string& spec_text, bool as_json, std::ostream& out) {
  Graph g(1);
  FamilySpec spec;
  try {
    spec = parse_family_spec(spec_text);
    g = generate_family(spec);
  } catch (const GraphError& e) {
    throw InputError(e.what());
  }
  if (as_json) {
    emit(out, {{"family", family_name(spec.family)}, {"seed", spec.seed}, {"graph6", emit_graph6(g)}, {"order", g.order()}});
  } else {
    out << emit_graph6(g) << '\n';
  }
  return kOk;
}

// ---- verify / sweep ----

int cmd_verify(std::vector<std::string> ids, int n_max, int jobs, const std::string& file, bool as_json, std::ostream& out) {
  const auto& known = theorem_ids();
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) ids = known;
  for (const auto& id : ids) {
    if (std::find(known.begin(), known.end(), id) == known.end()) throw InputError("unknown theorem id '" + id + "'");
  }
  std::vector<Graph> graphs;
  VerifyOptions opts;
  opts.n_max = n_max;
  opts.jobs = jobs;
  if (!file.empty()) {
    graphs = read_graph_file(file);
    opts.graphs = &graphs;
  }
  int code = kOk;
  for (const auto& id : ids) {
    TheoremReport r;
    try {
      r = verify_theorem(id, opts);
    } catch (const VerifyError& e) {
      throw InputError(e.what());
    }
    if (!r.passed) code = kFalse;
    if (as_json) {
      emit(out, to_json(r));
      continue;
    }
    out << std::left << std::setw(8) << r.theorem_id << (r.passed ? "PASS" : "FAIL") << "  orders " << r.order_min
        << ".." << r.order_max << "  graphs " << r.graphs_checked << "  counterexamples " << r.counterexamples.size()
        << "  " << std::fixed << std::setprecision(2) << r.elapsed_seconds << "s\n";
    for (const auto& s : r.subchecks) {
      out << "        " << s.name << ": " << s.checked - s.failed << "/" << s.checked << '\n';
    }
    if (!r.histogram.empty()) {
      out << "        histogram:";
      for (const auto& [k, v] : r.histogram) out << ' ' << k << '=' << v;
      out << '\n';
    }
    for (std::size_t i = 0; i < r.counterexamples.size() && i < 5; ++i) {
      out << "        " << r.counterexamples[i].graph6 << "  " << r.counterexamples[i].detail << '\n';
    }
    if (r.counterexamples.size() > 5) out << "        ... " << r.counterexamples.size() - 5 << " more (use --json)\n";
    for (const auto& n : r.notes) out << "        note: " << n << '\n';
  }
  return code;
}

int cmd_sweep(const std::vector<Graph>& graphs, int jobs, bool as_json, std::ostream& out) {
  const auto records = sweep_chains(graphs, jobs);
  for (const auto& r : records) {
    if (as_json) {
      emit(out, to_json(r));
    } else {
      out << std::left << std::setw(12) << r.graph6 << " n=" << r.order << " δ=" << r.min_degree << "  L_SCC="
          << std::setw(12) << (r.l_scc ? r.l_scc->to_string() : "-") << ' ' << r.label << '\n';
    }
  }
  return kOk;
}

// ---- iso ----

int cmd_iso(const std::vector<Graph>& graphs, bool as_json, std::ostream& out) {
  if (graphs.size() != 2) throw InputError("iso needs exactly two graphs (got " + std::to_string(graphs.size()) + ")");
  bool iso;
  try {
    iso = are_isomorphic(graphs[0], graphs[1]);
  } catch (const GraphError& e) {
    throw InputError(e.what());
  }
  if (as_json) {
    emit(out, {{"a", emit_graph6(graphs[0])}, {"b", emit_graph6(graphs[1])}, {"isomorphic", iso}});
  } else {
    out << (iso ? "isomorphic" : "not isomorphic") << '\n';
  }
  return iso ? kOk : kFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"coalition_kit: coalition numbers, SP-graphs, coalition graphs and SC chains"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand help for every subcommand");
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output (JSON Lines)");

  const int env_jobs = default_jobs();

  GraphInput sp_in;
  auto* sp = app.add_subcommand("sp", "check whether the singleton partition is a coalition partition");
  sp_in.attach(sp);
  sp->add_flag("--json", as_json);

  GraphInput cnum_in;
  auto* cnum = app.add_subcommand("cnum", "exact coalition number (order <= 9)");
  cnum_in.attach(cnum);
  cnum->add_flag("--json", as_json);

  GraphInput cg_in;
  std::string partition_text;
  auto* cg = app.add_subcommand("cg", "coalition graph of a partition (default: singletons)");
  cg_in.attach(cg);
  cg->add_option("--partition", partition_text, "parts separated by ';', vertices by ',', e.g. \"0,1;2;3\"");
  cg->add_flag("--json", as_json);

  GraphInput chain_in;
  int max_steps = kDefaultChainSteps;
  auto* chain = app.add_subcommand("chain", "SC chain, its length and matching template");
  chain_in.attach(chain);
  chain->add_option("--max-steps", max_steps, "step cap")->check(CLI::PositiveNumber);
  chain->add_flag("--json", as_json);

  auto* family = app.add_subcommand("family", "recognize or generate F1/H1/F2/H2 family members");
  family->require_subcommand(1);
  GraphInput rec_in;
  std::string which = "all";
  auto* recognize = family->add_subcommand("recognize", "witness for each matching family");
  rec_in.attach(recognize);
  recognize->add_option("--family", which, "all | f1 | h1 | f2 | h2 | f2.1 .. f2.3 | h2.1 .. h2.3");
  recognize->add_flag("--json", as_json);
  std::string spec_text;
  auto* generate = family->add_subcommand("generate", "seeded member of a family");
  generate->add_option("--spec", spec_text, "e.g. \"f2.1:R1=1,L1=2,seed=7,p=0.5\"")->required();
  generate->add_flag("--json", as_json);

  std::vector<std::string> theorem_list;
  int n_max = kDefaultVerifyOrder;
  int verify_jobs = env_jobs;
  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "exhaustively check theorems");
  verify->add_option("--theorem", theorem_list, "theorem id, repeatable; 'all' (default) runs every id");
  verify->add_option("--n-max", n_max, "largest enumerated order (<= 7)");
  verify->add_option("--jobs", verify_jobs, "worker threads (default: COALITION_KIT_JOBS or all cores)")->check(CLI::PositiveNumber);
  verify->add_option("--file", verify_file, "graph6 file replacing enumeration");
  verify->add_flag("--json", as_json);

  GraphInput sweep_in;
  int sweep_order = 0;
  int sweep_jobs = env_jobs;
  int min_degree = -1;
  int min_degree_at_least = 0;
  bool sp_only = false;
  auto* sweep = app.add_subcommand("sweep", "chain length and template of every input graph");
  sweep_in.attach(sweep);
  auto* order_opt = sweep->add_option("--order", sweep_order, "enumerate all graphs of this order (<= 7)");
  sweep->add_option("--min-degree", min_degree, "keep graphs with exactly this minimum degree");
  sweep->add_option("--min-degree-at-least", min_degree_at_least, "keep graphs with minimum degree at least this");
  sweep->add_flag("--sp-only", sp_only, "keep SP-graphs only");
  sweep->add_option("--jobs", sweep_jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_flag("--json", as_json);

  GraphInput iso_in;
  auto* iso = app.add_subcommand("iso", "isomorphism test of two graphs (give --named/--g6 twice, or a two-line --file)");
  iso_in.attach(iso, /*allow_repeat=*/true);
  iso->add_flag("--json", as_json);

  CLI::App* active = &app;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    for (auto* sub : app.get_subcommands()) {
      active = sub;
      for (auto* inner : sub->get_subcommands()) active = inner;
    }

    if (sp->parsed()) return cmd_sp(sp_in.load(), as_json, out);
    if (cnum->parsed()) return cmd_cnum(cnum_in.load(), as_json, out);
    if (cg->parsed()) {
      const auto graphs = cg_in.load();
      if (graphs.size() != 1) throw InputError("cg takes a single graph");
      return cmd_cg(graphs[0], partition_text, as_json, out);
    }
    if (chain->parsed()) return cmd_chain(chain_in.load(), max_steps, as_json, out);
    if (recognize->parsed()) return cmd_recognize(rec_in.load(), which, as_json, out);
    if (generate->parsed()) return cmd_generate(spec_text, as_json, out);
    if (verify->parsed()) return cmd_verify(theorem_list, n_max, verify_jobs, verify_file, as_json, out);
    if (sweep->parsed()) {
      std::vector<Graph> graphs;
      if (order_opt->count() > 0) {
        if (!sweep_in.named.empty() || !sweep_in.g6.empty() || !sweep_in.file.empty()) {
          throw InputError("--order excludes --named, --g6, --file");
        }
        if (sweep_order < 1 || sweep_order > kMaxEnumerationOrder) {
          throw InputError("--order must be in 1.." + std::to_string(kMaxEnumerationOrder));
        }
        graphs = enumerate_graphs(sweep_order);
      } else {
        graphs = sweep_in.load();
      }
      DegreeFilter filter;
      filter.min_degree = min_degree;
      filter.min_degree_at_least = min_degree_at_least;
      std::erase_if(graphs, [&](const Graph& g) { return !filter(g) || (sp_only && !is_sp_graph(g)); });
      return cmd_sweep(graphs, sweep_jobs, as_json, out);
    }
    if (iso->parsed()) return cmd_iso(iso_in.load_all(), as_json, out);
    throw InputError("no subcommand");
  } catch (const CLI::CallForHelp&) {
    out << active->help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kUsage;
  }
}

}  // namespace coalition::cli

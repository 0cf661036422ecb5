#include "coalition/families.hpp"

#include <random>
#include <sstream>
#include <utility>
#include <vector>

namespace coalition {
namespace {

bool adjacent_to_all(const Graph& g, int v, VertexSet s) {
  return (s - VertexSet::single(v)).subset_of(g.neighbors(v));
}

std::vector<int> members(VertexSet s) { return {s.begin(), s.end()}; }

bool is_clique(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (!adjacent_to_all(g, v, s)) return false;
  }
  return true;
}

bool is_independent(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

bool has_full_vertex(const Graph& g) { return !degree_stats(g).full_vertices.empty(); }

VertexSet without(VertexSet s, std::initializer_list<int> drop) {
  for (int v : drop) s.erase(v);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Recognizers

std::optional<F1Witness> recognize_f1(const Graph& g) {
  if (has_full_vertex(g)) return std::nullopt;
  const VertexSet all = g.vertices();
  for (int x : all) {
    if (g.degree(x) != 1) continue;
    const int y = g.neighbors(x).first();
    for (int w : without(all, {x, y})) {
      const VertexSet rest = without(all, {x, y, w});
      if (rest.empty() || g.neighbors(w) != rest) continue;
      // P must hold every vertex universal inside P ∪ Q: such a vertex would
      // be full in G[Q] if it sat in Q.
      F1Witness wit{x, y, w, {}, {}};
      for (int s : rest) {
        (adjacent_to_all(g, s, rest) ? wit.P : wit.Q).insert(s);
      }
      if (!wit.Q.empty() && (wit.Q.size() < 2 || !wit.Q.subset_of(g.neighbors(y)))) continue;
      return wit;
    }
  }
  return std::nullopt;
}

std::optional<H1Witness> recognize_h1(const Graph& g) {
  const VertexSet all = g.vertices();
  for (int x1 : all) {
    for (int y1 : all) {
      if (x1 == y1 || g.adjacent(x1, y1)) continue;
      const VertexSet side = without(all, {x1, y1});
      if (side.size() < 2 || g.neighbors(y1) != side || !is_independent(g, side)) continue;
      const VertexSet seen_by_x = g.neighbors(x1);
      if (seen_by_x.empty() || !seen_by_x.subset_of(side)) continue;
      H1Witness wit;
      wit.x1 = x1;
      wit.y1 = y1;
      wit.w1 = seen_by_x.first();
      wit.P1 = without(seen_by_x, {wit.w1});
      wit.Q1 = side - seen_by_x;
      if (wit.Q1.size() == 1) continue;
      return wit;
    }
  }
  return std::nullopt;
}

namespace {

std::optional<F2Witness> f2_with_roles(const Graph& g, int subfamily, int x, int y, int z) {
  const VertexSet vx = without(g.vertices(), {x, y, z});
  const VertexSet ny = g.neighbors(y);
  const VertexSet nz = g.neighbors(z);
  F2Witness wit;
  wit.subfamily = subfamily;
  wit.x = x;
  wit.y = y;
  wit.z = z;

  switch (subfamily) {
    case 1:
      if (g.adjacent(y, z) || vx.empty() || !vx.subset_of(ny & nz)) return std::nullopt;
      wit.R1 = vx;
      return wit;
    case 2:
      if (g.adjacent(y, z) || !vx.subset_of(ny)) return std::nullopt;
      wit.L1 = vx - nz;
      wit.R1 = vx & nz;
      if (wit.L1.empty() || wit.R1.empty() || !is_clique(g, wit.L1)) return std::nullopt;
      return wit;
    case 3: {
      wit.L1 = (vx & ny) - nz;
      wit.R1 = vx & ny & nz;
      wit.R2 = (vx & nz) - ny;
      wit.L2 = vx - ny - nz;
      for (int w : vx) {
        if (adjacent_to_all(g, w, vx)) wit.W.insert(w);
      }
      if (wit.L1.empty() || wit.R2.empty() || wit.W.empty()) return std::nullopt;
      if (!wit.L2.subset_of(wit.W)) return std::nullopt;
      for (int r : wit.R1) {
        if (!adjacent_to_all(g, r, wit.L1) && !adjacent_to_all(g, r, wit.R2)) return std::nullopt;
      }
      if (!g.adjacent(y, z)) {
        if (!is_clique(g, wit.L1) || !is_clique(g, wit.R2)) return std::nullopt;
      } else {
        for (int l : wit.L1) {
          if (!adjacent_to_all(g, l, wit.L1) && !adjacent_to_all(g, l, wit.R2)) return std::nullopt;
        }
        for (int r : wit.R2) {
          if (!adjacent_to_all(g, r, wit.R2) && !adjacent_to_all(g, r, wit.L1)) return std::nullopt;
        }
      }
      return wit;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<F2Witness> recognize_f2_subfamily(const Graph& g, int subfamily) {
  const DegreeStats stats = degree_stats(g);
  if (stats.min_degree != 2 || !stats.full_vertices.empty()) return std::nullopt;
  for (int x : g.vertices()) {
    if (g.degree(x) != 2) continue;
    const int a = g.neighbors(x).first();
    const int b = (g.neighbors(x) - VertexSet::single(a)).first();
    for (auto [y, z] : {std::pair{a, b}, std::pair{b, a}}) {
      if (auto wit = f2_with_roles(g, subfamily, x, y, z)) return wit;
    }
  }
  return std::nullopt;
}

std::optional<F2Witness> recognize_f2(const Graph& g) {
  for (int k = 1; k <= 3; ++k) {
    if (auto wit = recognize_f2_subfamily(g, k)) return wit;
  }
  return std::nullopt;
}

std::optional<H2Witness> recognize_h2_subfamily(const Graph& g, int subfamily) {
  const VertexSet all = g.vertices();
  for (int x : all) {
    for (int y : without(all, {x})) {
      for (int z : without(all, {x, y})) {
        const VertexSet rest = without(all, {x, y, z});
        H2Witness wit;
        wit.subfamily = subfamily;
        wit.x = x;
        wit.y = y;
        wit.z = z;
        if (subfamily == 1) {
          if (z < y || !g.adjacent(x, y) || !g.adjacent(x, z) || !g.adjacent(y, z)) continue;
          if (rest.empty() || !is_independent(g, rest)) continue;
          if (!rest.subset_of(g.neighbors(y) & g.neighbors(z))) continue;
          wit.R1 = rest;
          return wit;
        }
        if (subfamily == 2) {
          if (!g.adjacent(x, y) || !g.adjacent(y, z) || g.adjacent(x, z)) continue;
          wit.R1 = rest & g.neighbors(y);
          wit.L1 = rest - g.neighbors(y);
          if (wit.R1.empty() || wit.L1.empty()) continue;
          if (!wit.L1.subset_of(g.neighbors(z)) || !is_independent(g, rest)) continue;
          bool confined = true;
          for (int l : wit.L1) {
            confined = confined && g.neighbors(l).subset_of(VertexSet{x, z});
          }
          if (!confined) continue;
          return wit;
        }
        if (subfamily == 3) {
          if (z < y) continue;
          wit.W = g.neighbors(x);
          if (wit.W.empty() || wit.W.contains(y) || wit.W.contains(z)) continue;
          if (!is_independent(g, rest)) continue;
          const VertexSet others = rest - wit.W;
          const VertexSet ny = g.neighbors(y);
          const VertexSet nz = g.neighbors(z);
          if (!others.subset_of(ny | nz)) continue;
          wit.L1 = (others & ny) - nz;
          wit.R1 = others & ny & nz;
          wit.R2 = (others & nz) - ny;
          return wit;
        }
        return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

std::optional<H2Witness> recognize_h2(const Graph& g) {
  for (int k = 1; k <= 3; ++k) {
    if (auto wit = recognize_h2_subfamily(g, k)) return wit;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Validators

namespace {

class Checker {
 public:
  explicit Checker(std::string* why) : why_(why) {}

  bool require(bool condition, const char* what) {
    if (!condition && ok_) {
      ok_ = false;
      if (why_) *why_ = what;
    }
    return condition;
  }
  bool ok() const { return ok_; }

 private:
  std::string* why_;
  bool ok_ = true;
};

bool is_vertex(const Graph& g, int v) { return v >= 0 && v < g.order(); }

// The listed vertices and sets are distinct/disjoint and cover V(g).
bool covers_exactly(const Graph& g, std::initializer_list<int> singles,
                    std::initializer_list<VertexSet> sets) {
  VertexSet seen;
  int total = 0;
  for (int v : singles) {
    if (!is_vertex(g, v)) return false;
    seen.insert(v);
    ++total;
  }
  for (VertexSet s : sets) {
    seen |= s;
    total += s.size();
  }
  return total == g.order() && seen == g.vertices();
}

}  // namespace

bool validate(const Graph& g, const F1Witness& w, std::string* why) {
  Checker c(why);
  if (!c.require(covers_exactly(g, {w.x, w.y, w.w}, {w.P, w.Q}), "roles do not partition V")) {
    return false;
  }
  const VertexSet pq = w.P | w.Q;
  c.require(pq.size() >= 1, "|P ∪ Q| < 1");
  c.require(g.neighbors(w.x) == VertexSet::single(w.y), "N(x) != {y}");
  c.require(g.neighbors(w.w) == pq, "N(w) != P ∪ Q");
  for (int p : w.P) c.require(adjacent_to_all(g, p, pq), "a P vertex misses part of P ∪ Q");
  if (!w.Q.empty()) {
    c.require(w.Q.size() >= 2, "Q nonempty with |Q| < 2");
    c.require(w.Q.subset_of(g.neighbors(w.y)), "Q not inside N(y)");
    for (int q : w.Q) c.require(!adjacent_to_all(g, q, w.Q), "G[Q] has a full vertex");
  }
  c.require(!has_full_vertex(g), "graph has a full vertex");
  return c.ok();
}

bool validate(const Graph& g, const H1Witness& w, std::string* why) {
  Checker c(why);
  if (!c.require(covers_exactly(g, {w.x1, w.y1, w.w1}, {w.P1, w.Q1}), "roles do not partition V")) {
    return false;
  }
  const VertexSet side = w.P1 | w.Q1 | VertexSet::single(w.w1);
  c.require(!g.adjacent(w.x1, w.y1), "x1 adjacent to y1");
  c.require(g.neighbors(w.y1) == side, "N(y1) != B1");
  c.require(g.neighbors(w.x1) == (w.P1 | VertexSet::single(w.w1)), "N(x1) != P1 ∪ {w1}");
  c.require(is_independent(g, side), "B1 not independent");
  c.require((w.P1 | w.Q1).size() >= 1, "|P1 ∪ Q1| < 1");
  c.require(w.Q1.empty() || w.Q1.size() >= 2, "Q1 nonempty with |Q1| < 2");
  return c.ok();
}

bool validate(const Graph& g, const F2Witness& w, std::string* why) {
  Checker c(why);
  if (!c.require(covers_exactly(g, {w.x, w.y, w.z}, {w.L1, w.R1, w.R2, w.L2}),
                 "roles do not partition V")) {
    return false;
  }
  const VertexSet vx = w.L1 | w.R1 | w.R2 | w.L2;
  const DegreeStats stats = degree_stats(g);
  c.require(g.neighbors(w.x) == VertexSet({w.y, w.z}), "N(x) != {y, z}");
  c.require(stats.min_degree == 2, "minimum degree != 2");
  c.require(stats.full_vertices.empty(), "graph has a full vertex");
  c.require(w.W.subset_of(vx), "W outside V \\ {x, y, z}");
  const bool yz = g.adjacent(w.y, w.z);

  switch (w.subfamily) {
    case 1:
      c.require(w.L1.empty() && w.R2.empty() && w.L2.empty() && w.W.empty(),
                "F2¹ uses only R1");
      c.require(!w.R1.empty(), "R1 empty");
      c.require(!yz, "yz present");
      for (int r : w.R1) c.require(g.adjacent(r, w.y) && g.adjacent(r, w.z), "R1 vertex misses y or z");
      break;
    case 2:
      c.require(w.W.empty() && w.L2.empty() && w.R2.empty(), "F2² uses only L1 and R1");
      c.require(!w.L1.empty() && !w.R1.empty(), "L1 or R1 empty");
      c.require(!yz, "yz present");
      for (int v : w.L1 | w.R1) c.require(g.adjacent(v, w.y), "y misses part of L1 ∪ R1");
      for (int r : w.R1) c.require(g.adjacent(r, w.z), "z misses part of R1");
      for (int l : w.L1) c.require(!g.adjacent(l, w.z), "z adjacent to L1");
      c.require(is_clique(g, w.L1), "L1 not a clique");
      break;
    case 3: {
      c.require(!w.L1.empty() && !w.R2.empty() && !w.W.empty(), "L1, R2 or W empty");
      c.require(w.L2.subset_of(w.W), "L2 not inside W");
      c.require(is_clique(g, w.W), "W not a clique");
      for (int v : w.W) {
        c.require(adjacent_to_all(g, v, w.L1 | w.R1 | w.R2), "W vertex misses part of L1 ∪ R1 ∪ R2");
      }
      for (int v : w.L1 | w.R1) c.require(g.adjacent(v, w.y), "y misses part of L1 ∪ R1");
      for (int v : w.R2) c.require(!g.adjacent(v, w.y), "y adjacent to R2");
      for (int v : w.R1 | w.R2) c.require(g.adjacent(v, w.z), "z misses part of R1 ∪ R2");
      for (int v : w.L1) c.require(!g.adjacent(v, w.z), "z adjacent to L1");
      for (int v : w.L2) c.require(!g.adjacent(v, w.y) && !g.adjacent(v, w.z), "L2 vertex sees y or z");
      for (int r : w.R1) {
        c.require(adjacent_to_all(g, r, w.L1) || adjacent_to_all(g, r, w.R2),
                  "R1 vertex joined to neither all of L1 nor all of R2");
      }
      if (!yz) {
        c.require(is_clique(g, w.L1) && is_clique(g, w.R2), "yz absent but L1 or R2 not a clique");
      } else {
        for (int l : w.L1) {
          c.require(adjacent_to_all(g, l, w.L1) || adjacent_to_all(g, l, w.R2),
                    "L1 vertex joined to neither all of L1 nor all of R2");
        }
        for (int r : w.R2) {
          c.require(adjacent_to_all(g, r, w.R2) || adjacent_to_all(g, r, w.L1),
                    "R2 vertex joined to neither all of R2 nor all of L1");
        }
      }
      break;
    }
    default:
      c.require(false, "unknown subfamily");
  }
  return c.ok();
}

bool validate(const Graph& g, const H2Witness& w, std::string* why) {
  Checker c(why);
  if (!c.require(covers_exactly(g, {w.x, w.y, w.z}, {w.R1, w.L1, w.R2, w.W}),
                 "roles do not partition V")) {
    return false;
  }
  switch (w.subfamily) {
    case 1:
      c.require(w.L1.empty() && w.R2.empty() && w.W.empty(), "H2¹ uses only R1'");
      c.require(g.adjacent(w.x, w.y) && g.adjacent(w.x, w.z) && g.adjacent(w.y, w.z),
                "x'y'z' not a triangle");
      c.require(!w.R1.empty(), "R1' empty");
      c.require(is_independent(g, w.R1), "R1' not independent");
      for (int r : w.R1) c.require(g.adjacent(r, w.y) && g.adjacent(r, w.z), "R1' vertex misses y' or z'");
      break;
    case 2:
      c.require(w.R2.empty() && w.W.empty(), "H2² uses only L1' and R1'");
      c.require(!w.L1.empty() && !w.R1.empty(), "L1' or R1' empty");
      c.require(g.adjacent(w.x, w.y) && g.adjacent(w.y, w.z), "x'y' or y'z' missing");
      c.require(!g.adjacent(w.x, w.z), "x'z' present");
      for (int r : w.R1) c.require(g.adjacent(r, w.y), "y' misses part of R1'");
      for (int l : w.L1) {
        c.require(!g.adjacent(l, w.y), "y' adjacent to L1'");
        c.require(g.adjacent(l, w.z), "z' misses part of L1'");
        c.require(g.neighbors(l).subset_of(VertexSet{w.x, w.z}), "L1' vertex outside {x', z'}");
      }
      c.require(is_independent(g, w.L1 | w.R1), "L1' ∪ R1' not independent");
      break;
    case 3: {
      const VertexSet others = w.L1 | w.R1 | w.R2;
      c.require(!w.W.empty(), "W' empty");
      c.require(g.neighbors(w.x) == w.W, "N(x') != W'");
      c.require(is_independent(g, others | w.W), "L1' ∪ R1' ∪ R2' ∪ W' not independent");
      for (int v : others) {
        c.require(g.adjacent(v, w.y) || g.adjacent(v, w.z), "vertex of L1' ∪ R1' ∪ R2' sees neither y' nor z'");
      }
      break;
    }
    default:
      c.require(false, "unknown subfamily");
  }
  return c.ok();
}

std::string to_string(const F1Witness& w) {
  std::ostringstream os;
  os << "x=" << w.x << " y=" << w.y << " w=" << w.w << " P=" << w.P.to_string()
     << " Q=" << w.Q.to_string();
  return os.str();
}

std::string to_string(const H1Witness& w) {
  std::ostringstream os;
  os << "x1=" << w.x1 << " y1=" << w.y1 << " w1=" << w.w1 << " P1=" << w.P1.to_string()
     << " Q1=" << w.Q1.to_string();
  return os.str();
}

std::string to_string(const F2Witness& w) {
  std::ostringstream os;
  os << "F2." << w.subfamily << " x=" << w.x << " y=" << w.y << " z=" << w.z
     << " L1=" << w.L1.to_string() << " R1=" << w.R1.to_string() << " R2=" << w.R2.to_string()
     << " L2=" << w.L2.to_string() << " W=" << w.W.to_string();
  return os.str();
}

std::string to_string(const H2Witness& w) {
  std::ostringstream os;
  os << "H2." << w.subfamily << " x'=" << w.x << " y'=" << w.y << " z'=" << w.z
     << " R1'=" << w.R1.to_string() << " L1'=" << w.L1.to_string()
     << " R2'=" << w.R2.to_string() << " W'=" << w.W.to_string();
  return os.str();
}

// ---------------------------------------------------------------------------
// Generators

std::string family_name(Family f) {
  switch (f) {
    case Family::kF1: return "f1";
    case Family::kH1: return "h1";
    case Family::kF2_1: return "f2.1";
    case Family::kF2_2: return "f2.2";
    case Family::kF2_3: return "f2.3";
    case Family::kH2_1: return "h2.1";
    case Family::kH2_2: return "h2.2";
    case Family::kH2_3: return "h2.3";
  }
  return "?";
}

int FamilySpec::size(const std::string& key) const {
  auto it = sizes.find(key);
  return it == sizes.end() ? 0 : it->second;
}

FamilySpec parse_family_spec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  FamilySpec spec;
  bool known = false;
  for (Family f : {Family::kF1, Family::kH1, Family::kF2_1, Family::kF2_2, Family::kF2_3,
                   Family::kH2_1, Family::kH2_2, Family::kH2_3}) {
    if (family_name(f) == name) {
      spec.family = f;
      known = true;
    }
  }
  if (!known) throw FamilyError("family spec: unknown family '" + name + "'");
  if (colon == std::string::npos) return spec;

  std::stringstream items(text.substr(colon + 1));
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw FamilyError("family spec: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      std::size_t used = 0;
      if (key == "seed") {
        spec.seed = std::stoull(value, &used);
      } else if (key == "p") {
        spec.edge_probability = std::stod(value, &used);
        if (spec.edge_probability < 0.0 || spec.edge_probability > 1.0) {
          throw FamilyError("family spec: p must lie in [0, 1]");
        }
      } else if (key == "yz") {
        const int flag = std::stoi(value, &used);
        if (flag != 0 && flag != 1) throw FamilyError("family spec: yz must be 0 or 1");
        spec.yz_edge = flag == 1;
      } else {
        static const char* kKeys[] = {"P", "Q", "R1", "L1", "R2", "L2", "W", "P1", "Q1"};
        bool ok = false;
        for (const char* k : kKeys) ok = ok || key == k;
        if (!ok) throw FamilyError("family spec: unknown key '" + key + "'");
        const int n = std::stoi(value, &used);
        if (n < 0) throw FamilyError("family spec: negative size for " + key);
        spec.sizes[key] = n;
      }
      if (used != value.size()) throw FamilyError("family spec: bad value '" + value + "'");
    } catch (const std::logic_error&) {
      throw FamilyError("family spec: bad value '" + value + "' for " + key);
    }
  }
  return spec;
}

namespace {

constexpr int kGenerationAttempts = 1000;

// Sequential vertex numbering for role sets.
class Layout {
 public:
  int take() { return next_++; }
  VertexSet take(int count) {
    VertexSet s;
    for (int i = 0; i < count; ++i) s.insert(next_++);
    return s;
  }
  int order() const { return next_; }

 private:
  int next_ = 0;
};

void join_sets(Graph& g, VertexSet a, VertexSet b) {
  for (int u : a) {
    for (int v : b) {
      if (u != v) g.add_edge(u, v);
    }
  }
}

class Sampler {
 public:
  Sampler(std::uint64_t seed, double p) : rng_(seed), p_(p) {}

  bool coin() { return std::bernoulli_distribution(p_)(rng_); }
  bool fair() { return std::bernoulli_distribution(0.5)(rng_); }
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  // Each pair in `pairs` independently with probability p.
  void maybe_join(Graph& g, VertexSet a, VertexSet b) {
    for (int u : a) {
      for (int v : b) {
        if (u < v || !a.contains(v) || !b.contains(u)) {
          if (u != v && !g.adjacent(u, v) && coin()) g.add_edge(u, v);
        }
      }
    }
  }

 private:
  std::mt19937_64 rng_;
  double p_;
};

void require_sizes(bool ok, const std::string& what) {
  if (!ok) throw FamilyError("family parameters: " + what);
}

bool degree_ok_f2(const Graph& g) {
  const DegreeStats s = degree_stats(g);
  return s.min_degree == 2 && s.full_vertices.empty();
}

std::optional<Graph> attempt(const FamilySpec& spec, Sampler& rng) {
  Layout at;
  switch (spec.family) {
    case Family::kF1: {
      const int x = at.take(), y = at.take(), w = at.take();
      const VertexSet P = at.take(spec.size("P")), Q = at.take(spec.size("Q"));
      Graph g(at.order());
      g.add_edge(x, y);
      join_sets(g, VertexSet::single(w), P | Q);
      join_sets(g, P, P | Q);
      join_sets(g, VertexSet::single(y), Q);
      rng.maybe_join(g, VertexSet::single(y), P);
      rng.maybe_join(g, Q, Q);
      // Repair: a vertex full in G[Q] loses one Q-edge. Each removal drops
      // the edge count, so this ends, and it never touches a required edge.
      for (bool changed = Q.size() >= 2; changed;) {
        changed = false;
        for (int q : Q) {
          if (!adjacent_to_all(g, q, Q)) continue;
          const std::vector<int> mates = members(g.neighbors(q) & Q);
          g.remove_edge(q, mates[rng.pick(static_cast<int>(mates.size()))]);
          changed = true;
        }
      }
      return g;
    }
    case Family::kH1: {
      const int x1 = at.take(), y1 = at.take(), w1 = at.take();
      const VertexSet P1 = at.take(spec.size("P1")), Q1 = at.take(spec.size("Q1"));
      Graph g(at.order());
      join_sets(g, VertexSet::single(y1), P1 | Q1 | VertexSet::single(w1));
      join_sets(g, VertexSet::single(x1), P1 | VertexSet::single(w1));
      return g;
    }
    case Family::kF2_1: {
      const int x = at.take(), y = at.take(), z = at.take();
      const VertexSet R1 = at.take(spec.size("R1"));
      Graph g(at.order());
      g.add_edge(x, y);
      g.add_edge(x, z);
      join_sets(g, VertexSet{y, z}, R1);
      rng.maybe_join(g, R1, R1);
      if (!degree_ok_f2(g)) return std::nullopt;
      return g;
    }
    case Family::kF2_2: {
      const int x = at.take(), y = at.take(), z = at.take();
      const VertexSet L1 = at.take(spec.size("L1")), R1 = at.take(spec.size("R1"));
      Graph g(at.order());
      g.add_edge(x, y);
      g.add_edge(x, z);
      join_sets(g, VertexSet::single(y), L1 | R1);
      join_sets(g, VertexSet::single(z), R1);
      join_sets(g, L1, L1);
      rng.maybe_join(g, R1, R1);
      rng.maybe_join(g, L1, R1);
      if (!degree_ok_f2(g)) return std::nullopt;
      return g;
    }
    case Family::kF2_3: {
      const int x = at.take(), y = at.take(), z = at.take();
      const VertexSet L1 = at.take(spec.size("L1")), R1 = at.take(spec.size("R1"));
      const VertexSet R2 = at.take(spec.size("R2")), L2 = at.take(spec.size("L2"));
      // W is L2 plus a seeded sample of L1 ∪ R1 ∪ R2.
      VertexSet W = L2;
      const VertexSet candidates = L1 | R1 | R2;
      std::vector<int> pool(candidates.begin(), candidates.end());
      for (int extra = spec.size("W") - L2.size(); extra > 0; --extra) {
        const int i = rng.pick(static_cast<int>(pool.size()));
        W.insert(pool[i]);
        pool.erase(pool.begin() + i);
      }
      Graph g(at.order());
      g.add_edge(x, y);
      g.add_edge(x, z);
      join_sets(g, W, W);
      join_sets(g, W, L1 | R1 | R2);
      join_sets(g, VertexSet::single(y), L1 | R1);
      join_sets(g, VertexSet::single(z), R1 | R2);
      for (int r : R1) join_sets(g, VertexSet::single(r), rng.fair() ? L1 : R2);
      const bool yz = spec.yz_edge.value_or(rng.fair());
      if (!yz) {
        join_sets(g, L1, L1);
        join_sets(g, R2, R2);
      } else {
        g.add_edge(y, z);
        for (int l : L1) join_sets(g, VertexSet::single(l), rng.fair() ? L1 : R2);
        for (int r : R2) join_sets(g, VertexSet::single(r), rng.fair() ? R2 : L1);
      }
      const VertexSet vx = L1 | R1 | R2 | L2;
      rng.maybe_join(g, vx, vx);
      if (!degree_ok_f2(g)) return std::nullopt;
      return g;
    }
    case Family::kH2_1: {
      const int x = at.take(), y = at.take(), z = at.take();
      const VertexSet R1 = at.take(spec.size("R1"));
      Graph g(at.order());
      g.add_edge(x, y);
      g.add_edge(x, z);
      g.add_edge(y, z);
      join_sets(g, VertexSet{y, z}, R1);
      rng.maybe_join(g, VertexSet::single(x), R1);
      return g;
    }
    case Family::kH2_2: {
      const int x = at.take(), y = at.take(), z = at.take();
      const VertexSet L1 = at.take(spec.size("L1")), R1 = at.take(spec.size("R1"));
      Graph g(at.order());
      g.add_edge(x, y);
      g.add_edge(y, z);
      join_sets(g, VertexSet::single(y), R1);
      join_sets(g, VertexSet::single(z), L1);
      rng.maybe_join(g, VertexSet::single(x), L1 | R1);
      rng.maybe_join(g, VertexSet::single(z), R1);
      return g;
    }
    case Family::kH2_3: {
      const int x = at.take(), y = at.take(), z = at.take();
      const VertexSet L1 = at.take(spec.size("L1")), R1 = at.take(spec.size("R1"));
      const VertexSet R2 = at.take(spec.size("R2")), W = at.take(spec.size("W"));
      Graph g(at.order());
      join_sets(g, VertexSet::single(x), W);
      for (int v : L1 | R1 | R2) {
        switch (rng.pick(3)) {
          case 0: g.add_edge(v, y); break;
          case 1: g.add_edge(v, z); break;
          default: g.add_edge(v, y); g.add_edge(v, z);
        }
      }
      rng.maybe_join(g, VertexSet{y, z}, W);
      if (rng.coin()) g.add_edge(y, z);
      return g;
    }
  }
  return std::nullopt;
}

}  // namespace

Graph generate_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kF1:
      require_sizes(spec.size("P") + spec.size("Q") >= 1, "F1 needs |P ∪ Q| >= 1");
      require_sizes(spec.size("Q") != 1, "F1 needs |Q| = 0 or |Q| >= 2");
      break;
    case Family::kH1:
      require_sizes(spec.size("P1") + spec.size("Q1") >= 1, "H1 needs |P1 ∪ Q1| >= 1");
      require_sizes(spec.size("Q1") != 1, "H1 needs |Q1| = 0 or |Q1| >= 2");
      break;
    case Family::kF2_1:
    case Family::kH2_1:
      require_sizes(spec.size("R1") >= 1, "needs R1 nonempty");
      break;
    case Family::kF2_2:
    case Family::kH2_2:
      require_sizes(spec.size("L1") >= 1 && spec.size("R1") >= 1, "needs L1 and R1 nonempty");
      break;
    case Family::kF2_3: {
      const int vx = spec.size("L1") + spec.size("R1") + spec.size("R2") + spec.size("L2");
      require_sizes(spec.size("L1") >= 1 && spec.size("R2") >= 1, "F2³ needs L1 and R2 nonempty");
      require_sizes(spec.size("W") >= 1, "F2³ needs W nonempty");
      require_sizes(spec.size("W") >= spec.size("L2"), "F2³ needs L2 ⊆ W, so |W| >= |L2|");
      require_sizes(spec.size("W") <= vx, "F2³ needs W ⊆ L1 ∪ R1 ∪ R2 ∪ L2");
      break;
    }
    case Family::kH2_3:
      require_sizes(spec.size("W") >= 1, "H2³ needs W' nonempty");
      break;
  }
  int total = 3;
  for (const auto& [key, n] : spec.sizes) {
    if (!(spec.family == Family::kF2_3 && key == "W")) total += n;
  }
  require_sizes(total <= kMaxOrder, "order exceeds " + std::to_string(kMaxOrder));

  Sampler rng(spec.seed, spec.edge_probability);
  for (int i = 0; i < kGenerationAttempts; ++i) {
    if (auto g = attempt(spec, rng)) return *g;
  }
  throw FamilyError("generate " + family_name(spec.family) + ": no sample met the degree constraints after " +
                    std::to_string(kGenerationAttempts) + " attempts");
}

}  // namespace coalition

#include "coalition/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>

namespace coalition {
namespace {

constexpr int kCells = kMaxCanonicalOrder;

// Ordered partition of the vertex set; cells are kept in their refinement order.
struct OrderedPartition {
  std::array<VertexSet, kCells> cells{};
  int count = 0;

  bool discrete(int n) const { return count == n; }
};

// Upper triangle in graph6 order, most significant bit first. 120 bits cover order 16.
using LeafCode = std::array<std::uint64_t, 2>;
using Labeling = std::array<int, kCells>;

// Splits every cell by the number of neighbors each vertex has in every cell,
// ordering the pieces by that count vector, until nothing splits. The result
// depends only on the graph structure and the input cell order.
void refine(const Graph& g, OrderedPartition& p) {
  const int n = g.order();
  while (true) {
    std::array<std::array<std::uint8_t, kCells>, kCells> sig{};
    for (int v = 0; v < n; ++v) {
      for (int c = 0; c < p.count; ++c) {
        sig[v][c] = static_cast<std::uint8_t>((g.neighbors(v) & p.cells[c]).size());
      }
    }
    OrderedPartition next;
    for (int c = 0; c < p.count; ++c) {
      const VertexSet cell = p.cells[c];
      if (cell.size() == 1) {
        next.cells[next.count++] = cell;
        continue;
      }
      std::array<int, kCells> members{};
      int m = 0;
      for (int v : cell) members[m++] = v;
      std::sort(members.begin(), members.begin() + m,
                [&](int a, int b) { return sig[a] < sig[b]; });
      VertexSet piece = VertexSet::single(members[0]);
      for (int i = 1; i < m; ++i) {
        if (sig[members[i]] != sig[members[i - 1]]) {
          next.cells[next.count++] = piece;
          piece = VertexSet();
        }
        piece.insert(members[i]);
      }
      next.cells[next.count++] = piece;
    }
    const bool changed = next.count != p.count;
    p = next;
    if (!changed) return;
  }
}

LeafCode leaf_code(const Graph& g, const Labeling& lab) {
  LeafCode code{};
  int k = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(lab[i], lab[j])) code[k / 64] |= std::uint64_t{1} << (63 - k % 64);
    }
  }
  return code;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  Labeling run() {
    OrderedPartition root;
    root.cells[0] = g_.vertices();
    root.count = 1;
    visit(root);
    return best_lab_;
  }

 private:
  static constexpr int kKeepGoing = std::numeric_limits<int>::max();

  using Perm = std::array<int, kCells>;

  int visit(OrderedPartition p) {
    refine(g_, p);
    if (p.discrete(n_)) return leaf(p);

    const int depth = static_cast<int>(path_.size());
    int target = 0;
    while (p.cells[target].size() == 1) ++target;

    if (static_cast<int>(explored_.size()) <= depth) explored_.resize(depth + 1);
    explored_[depth].clear();

    for (int v : p.cells[target]) {
      if (equivalent_to_explored(depth, v)) continue;
      explored_[depth].push_back(v);

      OrderedPartition child;
      for (int c = 0; c < p.count; ++c) {
        if (c == target) {
          child.cells[child.count++] = VertexSet::single(v);
          child.cells[child.count++] = p.cells[c] - VertexSet::single(v);
        } else {
          child.cells[child.count++] = p.cells[c];
        }
      }
      path_.push_back(v);
      const int resume = visit(child);
      path_.pop_back();
      if (resume < depth) return resume;
    }
    return kKeepGoing;
  }

  int leaf(const OrderedPartition& p) {
    Labeling lab{};
    for (int i = 0; i < n_; ++i) lab[i] = p.cells[i].first();
    const LeafCode code = leaf_code(g_, lab);

    if (!have_first_) {
      have_first_ = true;
      first_code_ = best_code_ = code;
      first_lab_ = best_lab_ = lab;
      return kKeepGoing;
    }
    if (code == first_code_) {
      add_automorphism(first_lab_, lab);
      return shallowest_redundant_depth();
    }
    if (code == best_code_) {
      add_automorphism(best_lab_, lab);
      return shallowest_redundant_depth();
    }
    if (code < best_code_) {
      best_code_ = code;
      best_lab_ = lab;
    }
    return kKeepGoing;
  }

  void add_automorphism(const Labeling& from, const Labeling& to) {
    Perm gamma{};
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    generators_.push_back(gamma);
  }

  // Orbits of the group generated by the stored automorphisms that fix the
  // first `prefix` path vertices. Returned as a union-find root per vertex.
  Perm orbits_fixing_prefix(int prefix) const {
    Perm parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const Perm& gamma : generators_) {
      bool fixes = true;
      for (int k = 0; k < prefix && fixes; ++k) fixes = gamma[path_[k]] == path_[k];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v);
        const int b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  // A child whose vertex shares an orbit (under automorphisms fixing the path
  // to this node) with an already explored child roots an isomorphic subtree.
  bool equivalent_to_explored(int depth, int v) const {
    if (explored_[depth].empty() || generators_.empty()) return false;
    const Perm orbit = orbits_fixing_prefix(depth);
    return std::any_of(explored_[depth].begin(), explored_[depth].end(),
                       [&](int u) { return orbit[u] == orbit[v]; });
  }

  // After a new automorphism, the shallowest node whose active child became
  // equivalent to an earlier sibling; the search resumes there.
  int shallowest_redundant_depth() const {
    for (int depth = 0; depth < static_cast<int>(path_.size()); ++depth) {
      const auto& tried = explored_[depth];
      if (tried.size() < 2) continue;
      const Perm orbit = orbits_fixing_prefix(depth);
      const int active = tried.back();
      for (std::size_t i = 0; i + 1 < tried.size(); ++i) {
        if (orbit[tried[i]] == orbit[active]) return depth;
      }
    }
    return kKeepGoing;
  }

  const Graph& g_;
  const int n_;
  bool have_first_ = false;
  LeafCode first_code_{};
  LeafCode best_code_{};
  Labeling first_lab_{};
  Labeling best_lab_{};
  std::vector<Perm> generators_;
  std::vector<int> path_;
  std::vector<std::vector<int>> explored_;
};

}  // namespace

CanonicalCode canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw GraphError("canonical_form: order " + std::to_string(g.order()) + " exceeds cap " +
                     std::to_string(kMaxCanonicalOrder));
  }
  const Labeling lab = CanonicalSearch(g).run();
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[lab[i]] = i;
  return CanonicalCode(emit_graph6(relabel(g, perm)));
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() > kMaxCanonicalOrder || h.order() > kMaxCanonicalOrder) {
    throw GraphError("are_isomorphic: order exceeds cap " + std::to_string(kMaxCanonicalOrder));
  }
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

bool DegreeFilter::operator()(const Graph& g) const {
  const DegreeStats s = degree_stats(g);
  if (min_degree >= 0 && s.min_degree != min_degree) return false;
  if (s.min_degree < min_degree_at_least) return false;
  if (full_vertices >= 0 && s.full_vertices.size() != full_vertices) return false;
  if (s.full_vertices.size() < full_vertices_at_least) return false;
  return true;
}

namespace {

// Classes of order n, built by attaching a new vertex to every neighbor subset
// of every class of order n-1 and deduplicating canonically. Every graph of
// order n arises this way from the graph left after deleting its last vertex.
const std::vector<Graph>& classes_of_order(int n) {
  static std::mutex mu;
  static std::array<std::optional<std::vector<Graph>>, kMaxEnumerationOrder + 1> cache;
  std::lock_guard lock(mu);
  for (int k = 1; k <= n; ++k) {
    if (cache[k]) continue;
    std::set<CanonicalCode> codes;
    if (k == 1) {
      codes.insert(canonical_form(Graph(1)));
    } else {
      for (const Graph& smaller : *cache[k - 1]) {
        for (VertexSet::Word mask = 0; mask < (VertexSet::Word{1} << (k - 1)); ++mask) {
          Graph g(k);
          for (int u = 0; u < k - 1; ++u) {
            for (int v : smaller.neighbors(u)) {
              if (u < v) g.add_edge(u, v);
            }
          }
          for (int u : VertexSet(mask)) g.add_edge(u, k - 1);
          codes.insert(canonical_form(g));
        }
      }
    }
    std::vector<Graph> reps;
    reps.reserve(codes.size());
    for (const CanonicalCode& c : codes) reps.push_back(c.graph());
    cache[k] = std::move(reps);
  }
  return *cache[n];
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, const GraphPredicate& keep) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw GraphError("enumerate_graphs: built-in enumeration covers orders 1.." +
                     std::to_string(kMaxEnumerationOrder) +
                     "; supply larger orders as graph6 input");
  }
  const std::vector<Graph>& all = classes_of_order(n);
  if (!keep) return all;
  std::vector<Graph> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), keep);
  return out;
}

}  // namespace coalition

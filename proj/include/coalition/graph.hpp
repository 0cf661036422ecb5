#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coalition/vertex_set.hpp"

namespace coalition {

/// Largest order representable by Graph (one word per adjacency row).
inline constexpr int kMaxOrder = 32;
/// Largest order accepted by canonical_form / are_isomorphic.
inline constexpr int kMaxCanonicalOrder = 16;
/// Largest order handled by the built-in enumerator.
inline constexpr int kMaxEnumerationOrder = 7;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..order-1.
///
/// Rows are kept symmetric with clear diagonals; every mutating member
/// preserves that, so a Graph value is always a valid simple graph.
class Graph {
 public:
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int order, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(order, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  int order() const { return order_; }
  VertexSet vertices() const { return VertexSet::range(order_); }

  VertexSet neighbors(int v) const { return rows_[v]; }
  VertexSet closed_neighbors(int v) const { return rows_[v] | VertexSet::single(v); }
  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  int degree(int v) const { return rows_[v].size(); }
  int edge_count() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int order_;
  std::array<VertexSet, kMaxOrder> rows_{};
};

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  VertexSet full_vertices;
};

DegreeStats degree_stats(const Graph& g);

/// Image of g under the vertex map v -> perm[v]; perm must be a permutation.
Graph relabel(const Graph& g, std::span<const int> perm);

/// Subgraph induced by keep, renumbered in increasing index order.
Graph induced_subgraph(const Graph& g, VertexSet keep);
Graph remove_vertex(const Graph& g, int v);
Graph complement(const Graph& g);

/// a ∪ b with b's vertices shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
/// disjoint_union plus every a–b edge.
Graph join(const Graph& a, const Graph& b);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
/// K3 with one pendant vertex on each triangle vertex.
Graph corona_k3_k1();

/// Builds a graph from the expression grammar
///   K(n) | Kbar(n) | C(n) | P(n) | Kbip(a,b) | union(s,t) | join(s,t) | corona_k3_k1
Graph build_named(std::string_view expr);

/// graph6 decoding failures, each with its own kind.
class Graph6Error : public GraphError {
 public:
  enum class Kind { kEmpty, kByteOutOfRange, kOrderOutOfRange, kTruncated, kTrailingData, kPaddingBits };
  Graph6Error(Kind kind, const std::string& what) : GraphError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Human-readable edge list, e.g. "n=4 {0-1,1-2}".
std::string describe(const Graph& g);

}  // namespace coalition

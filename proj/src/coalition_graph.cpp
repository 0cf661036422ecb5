#include "coalition/coalition_graph.hpp"

#include <numeric>

namespace coalition {

CoalitionGraphResult coalition_graph(const Graph& g, const Partition& p) {
  check_partition(g, p);
  const int k = p.size();
  std::vector<VertexSet> reach(k);
  std::vector<bool> dominating(k);
  for (int i = 0; i < k; ++i) {
    reach[i] = closed_neighborhood(g, p.parts[i]);
    dominating[i] = reach[i] == g.vertices();
  }
  CoalitionGraphResult result{Graph(k), std::vector<int>(k)};
  std::iota(result.part_of_vertex.begin(), result.part_of_vertex.end(), 0);
  for (int i = 0; i < k; ++i) {
    if (dominating[i]) continue;
    for (int j = i + 1; j < k; ++j) {
      if (!dominating[j] && (reach[i] | reach[j]) == g.vertices()) result.graph.add_edge(i, j);
    }
  }
  return result;
}

NotSpError::NotSpError(int blocking_vertex)
    : GraphError("not an SP-graph: vertex " + std::to_string(blocking_vertex) +
                 " has no singleton coalition partner"),
      blocking_vertex_(blocking_vertex) {}

Graph sc_graph(const Graph& g) {
  const SpVerdict verdict = sp_check(g);
  if (!verdict.is_sp) throw NotSpError(*verdict.blocking_vertex);
  return coalition_graph(g, singleton_partition(g)).graph;
}

}  // namespace coalition

#pragma once

#include <vector>

#include "coalition/domination.hpp"
#include "coalition/graph.hpp"

namespace coalition {

struct CoalitionGraphResult {
  Graph graph;
  /// CG vertex i stands for part part_of_vertex[i] of the input partition.
  std::vector<int> part_of_vertex;
};

/// CG(g, p): one vertex per part in stored order, edges between parts that
/// form a coalition. Throws GraphError if p does not partition V(g).
CoalitionGraphResult coalition_graph(const Graph& g, const Partition& p);

/// Raised by sc_graph for graphs whose singleton partition is not a
/// coalition partition.
class NotSpError : public GraphError {
 public:
  explicit NotSpError(int blocking_vertex);
  int blocking_vertex() const { return blocking_vertex_; }

 private:
  int blocking_vertex_;
};

/// CG(g, Γ₁) with vertex labels equal to g's. Requires an SP-graph.
Graph sc_graph(const Graph& g);

}  // namespace coalition

#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "coalition/graph.hpp"

namespace coalition {

/// Labeling-independent code of a graph: the graph6 string of its canonical
/// relabeling. Equal codes mean isomorphic graphs.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  int order() const { return bytes_.empty() ? 0 : static_cast<unsigned char>(bytes_[0]) - 63; }
  /// The canonical representative itself.
  Graph graph() const { return parse_graph6(bytes_); }

  bool operator==(const CanonicalCode&) const = default;
  auto operator<=>(const CanonicalCode&) const = default;

 private:
  std::string bytes_;
};

/// Canonical code by individualization-refinement with automorphism pruning.
/// Throws GraphError when g.order() > kMaxCanonicalOrder.
CanonicalCode canonical_form(const Graph& g);

/// True iff g and h are isomorphic (canonical-code equality).
bool are_isomorphic(const Graph& g, const Graph& h);

using GraphPredicate = std::function<bool(const Graph&)>;

/// One representative per isomorphism class of order n, in increasing
/// canonical-code order, optionally filtered. Representatives are the
/// canonical graphs. Throws GraphError for n outside 1..kMaxEnumerationOrder.
std::vector<Graph> enumerate_graphs(int n, const GraphPredicate& keep = {});

/// Predicate on minimum degree and number of full vertices, the filters the
/// verification sweeps need.
struct DegreeFilter {
  int min_degree = -1;        ///< exact δ, or -1 for any
  int min_degree_at_least = 0;
  int full_vertices = -1;     ///< exact count, or -1 for any
  int full_vertices_at_least = 0;

  bool operator()(const Graph& g) const;
};

}  // namespace coalition

template <>
struct std::hash<coalition::CanonicalCode> {
  std::size_t operator()(const coalition::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes());
  }
};

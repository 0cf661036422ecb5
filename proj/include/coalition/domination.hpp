#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coalition/graph.hpp"

namespace coalition {

/// Ordered list of vertex sets. A valid Partition of a graph has nonempty,
/// pairwise disjoint parts covering every vertex; see check_partition.
struct Partition {
  std::vector<VertexSet> parts;

  int size() const { return static_cast<int>(parts.size()); }
  bool operator==(const Partition&) const = default;

  /// "0,1;2;3"
  std::string to_string() const;
};

/// Parses the "0,1;2;3" part grammar. Does not check it against a graph.
Partition parse_partition(const std::string& text);

/// Throws GraphError unless p partitions V(g).
void check_partition(const Graph& g, const Partition& p);

/// All-singletons partition {{0},...,{n-1}}.
Partition singleton_partition(const Graph& g);

VertexSet closed_neighborhood(const Graph& g, VertexSet s);
bool is_dominating(const Graph& g, VertexSet s);

/// Neither a nor b dominates g, but a ∪ b does.
/// Throws GraphError when a or b is empty or they overlap.
bool forms_coalition(const Graph& g, VertexSet a, VertexSet b);

enum class PartStatus { kSingletonDominating, kCoalition, kInvalid };

struct PartVerdict {
  int part = 0;
  PartStatus status = PartStatus::kInvalid;
  int partner = -1;  ///< least coalition partner, for kCoalition
  std::string reason;
};

struct PartitionVerdict {
  bool valid = false;
  std::vector<PartVerdict> per_part;
};

/// Throws GraphError if p is not a partition of V(g); an invalid coalition
/// partition is reported through the verdict instead.
PartitionVerdict is_coalition_partition(const Graph& g, const Partition& p);

struct SpVerdict {
  bool is_sp = false;
  VertexSet full_vertices;
  /// partner[v] for each non-full v when is_sp; -1 for full vertices.
  std::vector<int> partner;
  std::optional<int> blocking_vertex;
};

/// Decides whether the all-singletons partition is a coalition partition.
/// Partners and the blocking vertex are least-index choices.
SpVerdict sp_check(const Graph& g);

inline bool is_sp_graph(const Graph& g) { return sp_check(g).is_sp; }

/// Largest order coalition_number_exact accepts.
inline constexpr int kMaxCoalitionSearchOrder = 9;

struct CoalitionNumberResult {
  int value = 0;
  std::optional<Partition> witness;
};

/// Exact coalition number by search over set partitions (restricted growth
/// strings), largest part count first. Value 0 with no witness means no
/// coalition partition exists.
CoalitionNumberResult coalition_number_exact(const Graph& g);

/// Same search without the singleton-partition shortcut; every part count
/// from order() down is tried by enumeration.
CoalitionNumberResult coalition_number_search(const Graph& g);

}  // namespace coalition

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "coalition/graph.hpp"

namespace coalition {

// Role assignments certifying membership in the constructive families.
// Field names follow the construction: x is the low-degree vertex, y and z
// its neighbors, and the capitalized sets are the role classes.

/// δ = 1, no full vertex: N(x) = {y}, N(w) = P ∪ Q, P universal inside P ∪ Q,
/// Q ⊆ N(y) with |Q| = 0 or ≥ 2 and no vertex of G[Q] full in G[Q].
struct F1Witness {
  int x = -1, y = -1, w = -1;
  VertexSet P, Q;
};

/// Bipartite with sides {x1, y1} and B1 = P1 ∪ {w1} ∪ Q1; y1 sees all of B1,
/// x1 sees exactly P1 ∪ {w1}.
struct H1Witness {
  int x1 = -1, y1 = -1, w1 = -1;
  VertexSet P1, Q1;
};

/// δ = 2, no full vertex, N(x) = {y, z}. Vx = V \ {x, y, z} splits into
/// L1 (y only), R1 (both), R2 (z only), L2 (neither); W ⊆ Vx.
struct F2Witness {
  int subfamily = 0;
  int x = -1, y = -1, z = -1;
  VertexSet L1, R1, R2, L2, W;
};

struct H2Witness {
  int subfamily = 0;
  int x = -1, y = -1, z = -1;  ///< x', y', z'
  VertexSet R1, L1, R2, W;     ///< R1', L1', R2', W'
};

std::optional<F1Witness> recognize_f1(const Graph& g);
std::optional<H1Witness> recognize_h1(const Graph& g);
/// Subfamilies are tried in order 1, 2, 3.
std::optional<F2Witness> recognize_f2(const Graph& g);
std::optional<F2Witness> recognize_f2_subfamily(const Graph& g, int subfamily);
std::optional<H2Witness> recognize_h2(const Graph& g);
std::optional<H2Witness> recognize_h2_subfamily(const Graph& g, int subfamily);

// Witness validators check every stated condition directly against the
// graph. They share no code with the recognizers. On failure `why` (if
// given) receives the first violated condition.
bool validate(const Graph& g, const F1Witness& w, std::string* why = nullptr);
bool validate(const Graph& g, const H1Witness& w, std::string* why = nullptr);
bool validate(const Graph& g, const F2Witness& w, std::string* why = nullptr);
bool validate(const Graph& g, const H2Witness& w, std::string* why = nullptr);

std::string to_string(const F1Witness& w);
std::string to_string(const H1Witness& w);
std::string to_string(const F2Witness& w);
std::string to_string(const H2Witness& w);

enum class Family { kF1, kH1, kF2_1, kF2_2, kF2_3, kH2_1, kH2_2, kH2_3 };

std::string family_name(Family f);

/// Parameters for generate_family. Sizes are keyed by role-set name
/// ("P", "Q", "R1", "L1", "R2", "L2", "W", "P1", "Q1"); unspecified sizes
/// are zero. Free edges are included independently with probability
/// edge_probability, drawn from seed.
struct FamilySpec {
  Family family = Family::kF1;
  std::map<std::string, int> sizes;
  std::uint64_t seed = 0;
  double edge_probability = 0.5;
  /// F2³ only: force yz absent (0) or present (1); unset draws it.
  std::optional<bool> yz_edge;

  int size(const std::string& key) const;
};

/// Grammar: `<family>:<key>=<value>,...` with family one of f1, h1, f2.1,
/// f2.2, f2.3, h1, h2.1, h2.2, h2.3 and keys the role-set sizes plus
/// `seed=<u64>`, `p=<prob>`, `yz=0|1`.
FamilySpec parse_family_spec(const std::string& text);

class FamilyError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Builds a member of the family. Throws FamilyError when the sizes break
/// the family's cardinality rules, or when no sampled set of free edges
/// satisfies the global degree constraints within the retry budget.
Graph generate_family(const FamilySpec& spec);

}  // namespace coalition

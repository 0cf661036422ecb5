#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coalition/canonical.hpp"
#include "coalition/graph.hpp"

namespace coalition {

struct TerminatedNonSp {
  int last_index = 0;
};

/// codes[entry_index + period] == codes[entry_index]; the repeated graph is
/// the last element of the sequence.
struct Cycle {
  int entry_index = 0;
  int period = 0;
};

struct StepCap {
  int cap = 0;
};

using ChainOutcome = std::variant<TerminatedNonSp, Cycle, StepCap>;

struct ChainResult {
  std::vector<Graph> sequence;
  std::vector<CanonicalCode> codes;
  ChainOutcome outcome;
};

inline constexpr int kDefaultChainSteps = 64;

/// Iterates sc_graph from g. The non-SP endpoint, or the first repeated
/// graph, is the last element of `sequence`. Throws GraphError for orders
/// above kMaxCanonicalOrder or max_steps < 1.
ChainResult sc_chain(const Graph& g, int max_steps = kDefaultChainSteps);

struct LsccValue {
  enum class Kind { kFinite, kInfinite, kUnknown };
  Kind kind = Kind::kFinite;
  int value = 0;         ///< length for kFinite, step cap for kUnknown
  bool start_not_sp = false;

  std::string to_string() const;  ///< "2", "inf", "unknown(64)"
  bool operator==(const LsccValue&) const = default;
};

LsccValue l_scc(const ChainResult& chain);
LsccValue l_scc(const Graph& g);

struct ChainTemplate {
  std::string label;  ///< e.g. "Thm14(c)", "Lem19(f)", "Lem-lemcase3(v)"
  int order = 0;
};

class ClassificationError : public GraphError {
 public:
  enum class Kind { kOutOfRange, kNotSp, kNoTemplate };
  ClassificationError(Kind kind, const std::string& what) : GraphError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Matches the chain of g against the closed list of templates for
/// minimum degree ≤ 2. Every named graph a template mentions is built and
/// compared by isomorphism against the computed chain. Returns the first
/// match in case order.
ChainTemplate classify_chain(const Graph& g);

/// All template labels matched by g's chain (normally exactly one).
/// Throws ClassificationError like classify_chain, except kNoTemplate.
std::vector<std::string> matching_templates(const Graph& g);

// Auxiliary graphs of the template list, on vertices x'=0, y'=1, z'=2,
// then the remaining roles.

/// Order 5: edges x'y', y'z', y'r, z'l, x'l, plus r joined to x' (M1) or to
/// both x' and z' (M2). Vertices r = 3, l = 4.
Graph m1_graph();
Graph m2_graph();

/// Order 3 + l + r: x'y', y'z'; l vertices joined to x' and z'; r vertices
/// joined to y', x', z', except that the first r vertex misses x'. Its
/// SC-graph is M3 when l ≥ 2, r ≥ 1 and M4 when l = 1, r ≥ 2.
Graph h22_one_missing(int l, int r);

}  // namespace coalition

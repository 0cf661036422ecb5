#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coalition/chains.hpp"
#include "coalition/graph.hpp"

namespace coalition {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr int kDefaultVerifyOrder = 6;

struct Counterexample {
  std::string graph6;
  std::string detail;
};

/// One direction or clause of a theorem, counted separately so a failure
/// localizes.
struct SubcheckReport {
  std::string name;
  long checked = 0;
  long failed = 0;
};

struct TheoremReport {
  std::string theorem_id;
  int order_min = 0;
  int order_max = 0;
  long graphs_checked = 0;
  bool passed = true;
  std::vector<Counterexample> counterexamples;
  double elapsed_seconds = 0.0;
  std::vector<SubcheckReport> subchecks;
  std::map<std::string, long> histogram;
  std::vector<std::string> notes;
};

struct VerifyOptions {
  int n_max = kDefaultVerifyOrder;
  int jobs = 0;  ///< 0 = default_jobs()
  /// When set, these graphs replace enumeration (and seeded generation).
  const std::vector<Graph>* graphs = nullptr;
};

class VerifyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "thm1", "thm2", "thm4", "thm6", "obs7", "thm8", "thm9", "thm13",
/// "thm14", "thm15", "thm16", "thm17", "lem18", "lem19", "lem-h23", "thm20".
const std::vector<std::string>& theorem_ids();

/// Throws VerifyError for an unknown id, n_max below the smallest graph of
/// the hypothesis class, or n_max above kMaxEnumerationOrder without a
/// supplied graph list.
TheoremReport verify_theorem(const std::string& id, const VerifyOptions& options = {});

/// COALITION_KIT_JOBS if set to a positive integer, else the hardware
/// concurrency (at least 1).
int default_jobs();

struct SweepRecord {
  std::string graph6;
  int order = 0;
  int min_degree = 0;
  std::optional<LsccValue> l_scc;  ///< unset when the chain could not be computed
  /// Template label, or "not-sp", "out-of-characterized-range",
  /// "unclassified", "error".
  std::string label;
  std::string detail;
  std::vector<std::string> chain;  ///< graph6 of each chain graph
};

/// One record per input graph, in input order. Never throws on individual
/// graphs.
std::vector<SweepRecord> sweep_chains(const std::vector<Graph>& graphs, int jobs = 0);

nlohmann::json to_json(const TheoremReport& report);
nlohmann::json to_json(const SweepRecord& record);
nlohmann::json to_json(const LsccValue& value);

}  // namespace coalition

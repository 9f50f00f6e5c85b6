#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ngtw/checks.hpp"
#include "ngtw/graph.hpp"
#include "ngtw/report.hpp"

namespace ngtw {

// Where the graphs of a sweep come from.
struct SourceSpec {
  enum class Kind { kEnumerate, kGraph6File, kGraph6List, kRandomKtrees, kGnp };
  Kind kind = Kind::kGraph6List;
  int n = 0;                        // enumerate, random-ktrees, gnp
  int k = 0;                        // random-ktrees
  int count = 0;                    // random-ktrees, gnp
  double p = 0.5;                   // gnp
  std::string path;                 // graph6-file
  std::vector<std::string> graph6;  // graph6-list
};

std::string source_kind_name(SourceSpec::Kind kind);
SourceSpec::Kind source_kind_from_name(const std::string& name);

// A reproducible sweep: check token, input source, seed, parallelism and
// output path. Replaying a manifest yields byte-identical reports at any
// jobs setting.
struct SweepManifest {
  std::string check = "main";
  SourceSpec source;
  uint64_t seed = 0;
  int jobs = 0;  // 0 = hardware concurrency
  std::string out;
  std::optional<int> k;  // lemma2 parameter
  int cap = kDefaultExactCap;
  bool heuristic = false;
};

nlohmann::json manifest_to_json(const SweepManifest& m);
SweepManifest manifest_from_json(const nlohmann::json& j);

struct SweepItem {
  std::vector<Graph> graphs;
  std::optional<uint64_t> seed;
};

// Materialized input stream; item(i) is pure, so items can be evaluated
// concurrently and in any order.
class GraphSource {
 public:
  GraphSource(const SourceSpec& spec, int arity, uint64_t seed);
  size_t count() const { return count_; }
  SweepItem item(size_t i) const;

 private:
  SourceSpec spec_;
  int arity_ = 1;
  uint64_t seed_ = 0;
  size_t count_ = 0;
  std::vector<Graph> loaded_;  // parsed up front for file/list sources
};

struct SweepSummary {
  std::string check;
  size_t total = 0;
  size_t pass = 0;
  size_t fail = 0;
  size_t inapplicable = 0;
  size_t inconclusive = 0;
  // tightest margin of the check's inequality over all conclusive reports,
  // with the first witness attaining it (input order)
  std::optional<long long> min_slack;
  std::string min_slack_graph6;
  size_t min_slack_index = 0;
  std::string quantity;                      // headline quantity
  std::map<long long, size_t> distribution;  // its histogram

  nlohmann::json to_json() const;
};

// Margin of the report's inequality (>= 0 iff it holds); nullopt when the
// report is inapplicable/inconclusive.
std::optional<long long> report_slack(const Report& r);

// Runs every item of the manifest, invoking `sink` with reports in input
// order (when provided), and aggregates the summary. Parallel execution
// never changes any report or the summary.
SweepSummary run_sweep(const SweepManifest& m,
                       const std::function<void(size_t, const Report&)>& sink = {});

}  // namespace ngtw

#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "minorlab/graph.hpp"
#include "minorlab/minor.hpp"

namespace minorlab {

inline constexpr int kSchemaVersion = 1;

struct AuditBudgets {
  int max_chi = 16;       // exact colouring refusal threshold
  int max_oracle = 9;     // complete-minor oracle refusal threshold
  int max_enum = 8;       // all-representations enumeration threshold
};

// One corpus graph, fully audited.  Fields stay empty when the relevant
// oracle was over budget or undefined for the graph; a SKIPPED flag marks
// graphs that got no audit at all.  Flag meanings:
//   GREEDY_BELOW_CHI       greedy terminal order below the chromatic number
//   GREEDY_BELOW_HADWIGER  greedy stopped short of the largest complete minor
//   STEPCOUNT_EXCEEDS_L    more steps than order minus chromatic number
//   STEPCOUNT_EXCEEDS_K    more steps than the chromatic number itself
//   CHI_EXCEEDS_HADWIGER   chromatic number above the largest complete minor
//   SKIPPED                not audited (over budget or disconnected)
struct GraphAuditRecord {
  std::string graph6;
  int order = 0;
  int size = 0;
  std::optional<int> chi;
  std::optional<int> hadwiger;
  std::optional<int> greedy_terminal;
  std::optional<int> greedy_steps;
  std::optional<bool> contraction_sensitive;
  // Some minimal representation has every multi-element part essentially
  // singleton.  Serialized under the JSONL key "thm31".
  std::optional<bool> singleton_condition;
  std::vector<std::string> flags;
  bool operator==(const GraphAuditRecord&) const = default;
};

std::vector<Graph> all_labeled_connected(int max_n);

GraphAuditRecord audit_graph(const Graph& g, const AuditBudgets& budgets);

// Audits a whole corpus, one record per input graph, returned sorted by
// graph6 string.  threads == 0 picks the hardware concurrency.
std::vector<GraphAuditRecord> sweep(const std::vector<Graph>& corpus,
                                    const AuditBudgets& budgets,
                                    int threads = 0);

std::string record_to_jsonl(const GraphAuditRecord& rec);

// JSONL (one record per line) plus a per-order CSV aggregate with columns
// order,graphs,greedy_success,greedy_fail,skipped,max_steps.  Files are
// staged with a .partial suffix and renamed only after a complete write.
void write_reports(const std::vector<GraphAuditRecord>& records,
                   const std::filesystem::path& jsonl_path,
                   const std::filesystem::path& csv_path);

std::string render_csv(const std::vector<GraphAuditRecord>& records);

// Agreement audit between contraction sensitivity and the essentially-
// singleton condition, quantified over every minimal representation.
struct SensitivityAudit {
  int budget = 8;
  long analyzed = 0;
  long skipped = 0;  // edgeless or over budget, listed below
  long sensitive_condition_some = 0;    // sensitive, condition in some rep
  long sensitive_condition_none = 0;    // sensitive, condition in no rep
  long insensitive_condition_some = 0;  // not sensitive, condition in some rep
  long insensitive_condition_none = 0;
  long condition_all_reps = 0;  // condition held in every rep
  long condition_vacuous = 0;   // some rep had only singleton parts
  std::vector<std::string> skipped_graphs;
  std::vector<std::string> sensitive_condition_none_graphs;
  std::vector<std::string> insensitive_condition_some_graphs;
};

SensitivityAudit audit_sensitivity(const std::vector<Graph>& corpus,
                                   int max_order = 8);

std::string audit_to_json(const SensitivityAudit& audit);

// Literal-versus-exact updater comparison over every directed adjacent
// pair of every corpus graph.  Divergent contractions are emitted as JSON
// lines {graph6, removed, survivor, mismatches}; agreement is silent.
struct CensusSummary {
  long long graphs = 0;
  long long directed_edges = 0;
  long long divergent_edges = 0;
  long long mismatch_positions = 0;
};

CensusSummary run_divergence_census(const std::vector<Graph>& corpus,
                                    std::ostream& jsonl_out);

std::string trace_to_json(const ContractionTrace& trace);

}  // namespace minorlab

#include "minorlab/lab.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <thread>

#include "json.hpp"
#include "minorlab/chromatic.hpp"

namespace minorlab {

namespace {

using ordered_json = nlohmann::ordered_json;

bool condition_in_rep(const Graph& g, const PartiteRepresentation& rep) {
  for (std::size_t i = 0; i < rep.parts.size(); ++i)
    if (vcount(rep.parts[i]) > 1 &&
        !is_essentially_singleton(g, rep, static_cast<int>(i)))
      return false;
  return true;
}

bool rep_all_singletons(const PartiteRepresentation& rep) {
  for (VertexSet part : rep.parts)
    if (vcount(part) > 1) return false;
  return true;
}

}  // namespace

std::vector<Graph> all_labeled_connected(int max_n) {
  std::vector<Graph> corpus;
  for_each_labeled_connected(max_n,
                             [&](const Graph& g) { corpus.push_back(g); });
  return corpus;
}

GraphAuditRecord audit_graph(const Graph& g, const AuditBudgets& budgets) {
  GraphAuditRecord rec;
  rec.graph6 = emit_graph6(g);
  rec.order = g.order();
  rec.size = g.size();
  if (!g.is_connected() || rec.order > budgets.max_chi) {
    rec.flags.push_back("SKIPPED");
    return rec;
  }
  rec.chi = chromatic_number(g, budgets.max_chi);
  const ContractionTrace trace = greedy_contract(g);
  rec.greedy_terminal = trace.terminal_order;
  rec.greedy_steps = trace.step_count();
  if (rec.order <= budgets.max_oracle)
    rec.hadwiger = hadwiger_number(g, budgets.max_oracle).number;
  if (rec.size >= 1)
    rec.contraction_sensitive = is_contraction_sensitive(g, budgets.max_chi);
  if (rec.order <= budgets.max_enum) {
    bool some = false;
    for (const PartiteRepresentation& rep :
         all_minimal_representations(g, budgets.max_enum))
      if (condition_in_rep(g, rep)) {
        some = true;
        break;
      }
    rec.singleton_condition = some;
  }

  if (*rec.greedy_terminal < *rec.chi) rec.flags.push_back("GREEDY_BELOW_CHI");
  if (rec.hadwiger && *rec.greedy_terminal < *rec.hadwiger)
    rec.flags.push_back("GREEDY_BELOW_HADWIGER");
  if (*rec.greedy_steps > rec.order - *rec.chi)
    rec.flags.push_back("STEPCOUNT_EXCEEDS_L");
  if (*rec.greedy_steps > *rec.chi) rec.flags.push_back("STEPCOUNT_EXCEEDS_K");
  if (rec.hadwiger && *rec.chi > *rec.hadwiger)
    rec.flags.push_back("CHI_EXCEEDS_HADWIGER");
  return rec;
}

std::vector<GraphAuditRecord> sweep(const std::vector<Graph>& corpus,
                                    const AuditBudgets& budgets, int threads) {
  std::vector<GraphAuditRecord> records(corpus.size());
  unsigned n =
      threads > 0 ? static_cast<unsigned>(threads)
                  : std::max(1u, std::thread::hardware_concurrency());
  n = std::min(n, static_cast<unsigned>(corpus.empty() ? 1 : corpus.size()));
  if (n <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i)
      records[i] = audit_graph(corpus[i], budgets);
  } else {
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
      for (std::size_t i = cursor.fetch_add(1); i < corpus.size();
           i = cursor.fetch_add(1))
        records[i] = audit_graph(corpus[i], budgets);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::sort(records.begin(), records.end(),
            [](const GraphAuditRecord& a, const GraphAuditRecord& b) {
              return a.graph6 < b.graph6;
            });
  return records;
}

std::string record_to_jsonl(const GraphAuditRecord& rec) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["graph6"] = rec.graph6;
  j["order"] = rec.order;
  j["size"] = rec.size;
  if (rec.chi) j["chi"] = *rec.chi;
  if (rec.hadwiger) j["hadwiger"] = *rec.hadwiger;
  if (rec.greedy_terminal) j["greedy_terminal"] = *rec.greedy_terminal;
  if (rec.greedy_steps) j["greedy_steps"] = *rec.greedy_steps;
  if (rec.contraction_sensitive)
    j["contraction_sensitive"] = *rec.contraction_sensitive;
  if (rec.singleton_condition) j["thm31"] = *rec.singleton_condition;
  j["flags"] = rec.flags;
  return j.dump();
}

std::string render_csv(const std::vector<GraphAuditRecord>& records) {
  struct Row {
    long graphs = 0, success = 0, fail = 0, skipped = 0;
    int max_steps = 0;
  };
  std::map<int, Row> rows;
  for (const GraphAuditRecord& rec : records) {
    Row& row = rows[rec.order];
    ++row.graphs;
    const bool skipped =
        std::find(rec.flags.begin(), rec.flags.end(), "SKIPPED") !=
        rec.flags.end();
    if (skipped) {
      ++row.skipped;
      continue;
    }
    if (rec.chi && rec.greedy_terminal) {
      if (*rec.greedy_terminal >= *rec.chi)
        ++row.success;
      else
        ++row.fail;
    }
    if (rec.greedy_steps) row.max_steps = std::max(row.max_steps, *rec.greedy_steps);
  }
  std::string out = "order,graphs,greedy_success,greedy_fail,skipped,max_steps\n";
  for (const auto& [order, row] : rows) {
    out += std::to_string(order) + "," + std::to_string(row.graphs) + "," +
           std::to_string(row.success) + "," + std::to_string(row.fail) + "," +
           std::to_string(row.skipped) + "," + std::to_string(row.max_steps) +
           "\n";
  }
  return out;
}

namespace {

void write_atomically(const std::filesystem::path& path,
                      const std::string& content) {
  const std::filesystem::path staged = path.string() + ".partial";
  {
    std::ofstream out(staged, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + staged.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + staged.string());
  }
  std::filesystem::rename(staged, path);
}

}  // namespace

void write_reports(const std::vector<GraphAuditRecord>& records,
                   const std::filesystem::path& jsonl_path,
                   const std::filesystem::path& csv_path) {
  std::string jsonl;
  for (const GraphAuditRecord& rec : records) {
    jsonl += record_to_jsonl(rec);
    jsonl += '\n';
  }
  write_atomically(jsonl_path, jsonl);
  write_atomically(csv_path, render_csv(records));
}

SensitivityAudit audit_sensitivity(const std::vector<Graph>& corpus,
                                   int max_order) {
  SensitivityAudit audit;
  audit.budget = max_order;
  std::vector<std::pair<std::string, const Graph*>> sorted;
  sorted.reserve(corpus.size());
  for (const Graph& g : corpus) sorted.emplace_back(emit_graph6(g), &g);
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [g6, gp] : sorted) {
    const Graph& g = *gp;
    if (g.order() > max_order || g.size() == 0 || !g.is_connected()) {
      ++audit.skipped;
      audit.skipped_graphs.push_back(g6);
      continue;
    }
    ++audit.analyzed;
    const bool sensitive = is_contraction_sensitive(g, max_order);
    bool some = false;
    bool all = true;
    bool vacuous = false;
    for (const PartiteRepresentation& rep :
         all_minimal_representations(g, max_order)) {
      const bool cond = condition_in_rep(g, rep);
      some = some || cond;
      all = all && cond;
      vacuous = vacuous || rep_all_singletons(rep);
    }
    if (all) ++audit.condition_all_reps;
    if (vacuous) ++audit.condition_vacuous;
    if (sensitive && some) ++audit.sensitive_condition_some;
    if (sensitive && !some) {
      ++audit.sensitive_condition_none;
      audit.sensitive_condition_none_graphs.push_back(g6);
    }
    if (!sensitive && some) {
      ++audit.insensitive_condition_some;
      audit.insensitive_condition_some_graphs.push_back(g6);
    }
    if (!sensitive && !some) ++audit.insensitive_condition_none;
  }
  return audit;
}

std::string audit_to_json(const SensitivityAudit& audit) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["budget_max_order"] = audit.budget;
  j["analyzed"] = audit.analyzed;
  j["skipped"] = audit.skipped;
  j["table"] = {
      {"sensitive_condition_some", audit.sensitive_condition_some},
      {"sensitive_condition_none", audit.sensitive_condition_none},
      {"insensitive_condition_some", audit.insensitive_condition_some},
      {"insensitive_condition_none", audit.insensitive_condition_none},
  };
  j["condition_all_reps"] = audit.condition_all_reps;
  j["condition_vacuous"] = audit.condition_vacuous;
  j["counterexamples"] = {
      {"sensitive_condition_none", audit.sensitive_condition_none_graphs},
      {"insensitive_condition_some", audit.insensitive_condition_some_graphs},
  };
  j["skipped_graphs"] = audit.skipped_graphs;
  return j.dump(2) + "\n";
}

CensusSummary run_divergence_census(const std::vector<Graph>& corpus,
                                    std::ostream& jsonl_out) {
  CensusSummary summary;
  std::vector<std::pair<std::string, const Graph*>> sorted;
  sorted.reserve(corpus.size());
  for (const Graph& g : corpus) sorted.emplace_back(emit_graph6(g), &g);
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [g6, gp] : sorted) {
    const Graph& g = *gp;
    ++summary.graphs;
    const TransparencyMatrix t = TransparencyMatrix::compute(g);
    for (int removed : g.vertices())
      for (int survivor : g.vertices()) {
        if (removed == survivor || !g.has_edge(removed, survivor)) continue;
        ++summary.directed_edges;
        const auto positions = divergence_positions(t, g, removed, survivor);
        if (positions.empty()) continue;
        ++summary.divergent_edges;
        summary.mismatch_positions += static_cast<long long>(positions.size());
        ordered_json j;
        j["graph6"] = g6;
        j["removed"] = removed;
        j["survivor"] = survivor;
        j["mismatches"] = ordered_json::array();
        for (auto [m, n] : positions)
          j["mismatches"].push_back(ordered_json::array({m, n}));
        jsonl_out << j.dump() << '\n';
      }
  }
  return summary;
}

std::string trace_to_json(const ContractionTrace& trace) {
  ordered_json j;
  j["initial_order"] = trace.initial_order;
  j["terminal_order"] = trace.terminal_order;
  j["steps"] = ordered_json::array();
  for (const ContractionStep& step : trace.steps)
    j["steps"].push_back({{"removed", step.removed},
                          {"survivor", step.survivor},
                          {"replacements", step.replacements}});
  return j.dump();
}

}  // namespace minorlab

// Command line front end: single-graph analysis plus corpus sweeps.
//
//   minorlab analyze --gen cycle:5
//   minorlab contract --g6 DQc --removed 0 --survivor 4
//   minorlab greedy --gen complete_minus_edge:4 --format json
//   minorlab hadwiger --gen petersen --max-oracle 10
//   minorlab sweep --gen all_connected:6 --out reports/
//   minorlab audit31 --gen all_connected:5 --out reports/
//
// Exit codes: 0 success, 1 input error, 2 nothing but budget skips.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "minorlab/chromatic.hpp"
#include "minorlab/contraction.hpp"
#include "minorlab/graph.hpp"
#include "minorlab/lab.hpp"
#include "minorlab/minor.hpp"
#include "minorlab/transparency.hpp"

namespace {

using minorlab::Graph;
using minorlab::TransparencyMatrix;
using ordered_json = nlohmann::ordered_json;

struct Options {
  std::string input_file;
  std::string g6;
  std::string gen;
  std::optional<std::uint64_t> seed;
  int max_oracle = 9;
  int max_chi = 16;
  int threads = 0;
  std::string out_dir;
  std::string format = "text";
  int removed = -1;
  int survivor = -1;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::vector<Graph> graphs_from_gen(const Options& opt) {
  const std::vector<std::string> parts = split(opt.gen, ':');
  const std::string& kind = parts[0];
  auto arg_int = [&](std::size_t i) {
    if (i >= parts.size())
      throw std::invalid_argument("generator spec " + opt.gen +
                                  " is missing an argument");
    return std::stoi(parts[i]);
  };
  if (kind == "cycle") return {minorlab::make_cycle(arg_int(1))};
  if (kind == "complete") return {minorlab::make_complete(arg_int(1))};
  if (kind == "complete_minus_edge")
    return {minorlab::make_complete_minus_edge(arg_int(1))};
  if (kind == "petersen") return {minorlab::make_petersen()};
  if (kind == "gnp") {
    const int n = arg_int(1);
    if (parts.size() < 3)
      throw std::invalid_argument("gnp spec needs gnp:n:p[:seed]");
    const double p = std::stod(parts[2]);
    std::uint64_t seed;
    if (parts.size() >= 4)
      seed = std::stoull(parts[3]);
    else if (opt.seed)
      seed = *opt.seed;
    else
      throw std::invalid_argument("gnp needs a seed (gnp:n:p:seed or --seed)");
    return {minorlab::make_gnp(n, p, seed)};
  }
  if (kind == "all_connected" || kind == "all_labeled_connected")
    return minorlab::all_labeled_connected(arg_int(1));
  throw std::invalid_argument("unknown generator spec: " + opt.gen);
}

std::vector<Graph> load_graphs(const Options& opt) {
  const int sources = (!opt.input_file.empty() ? 1 : 0) +
                      (!opt.g6.empty() ? 1 : 0) + (!opt.gen.empty() ? 1 : 0);
  if (sources != 1)
    throw std::invalid_argument(
        "exactly one of --input, --g6, --gen must be given");
  if (!opt.g6.empty()) return {minorlab::parse_graph6(opt.g6)};
  if (!opt.gen.empty()) return graphs_from_gen(opt);
  std::ifstream in(opt.input_file);
  if (!in)
    throw std::invalid_argument("cannot open input file " + opt.input_file);
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(minorlab::parse_graph6(line));
  }
  if (graphs.empty())
    throw std::invalid_argument("input file holds no graphs");
  return graphs;
}

ordered_json matrix_json(const TransparencyMatrix& t) {
  ordered_json rows = ordered_json::array();
  const std::vector<int> verts = t.vertices();
  for (int m : verts) {
    ordered_json row = ordered_json::array();
    for (int n : verts) {
      const minorlab::Dist d = t.at(m, n);
      if (d.is_unreachable())
        row.push_back(nullptr);
      else
        row.push_back(d.hops());
    }
    rows.push_back(row);
  }
  return rows;
}

ordered_json vertex_sets_json(const std::vector<minorlab::VertexSet>& sets) {
  ordered_json out = ordered_json::array();
  for (minorlab::VertexSet set : sets) {
    ordered_json one = ordered_json::array();
    minorlab::for_each_vertex(set, [&](int v) { one.push_back(v); });
    out.push_back(one);
  }
  return out;
}

std::string set_str(minorlab::VertexSet set) {
  std::string out = "{";
  bool first = true;
  minorlab::for_each_vertex(set, [&](int v) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(v);
  });
  return out + "}";
}

void emit(const std::string& text) { std::cout << text; }

int cmd_analyze(const Options& opt, const Graph& g) {
  const TransparencyMatrix t = TransparencyMatrix::compute(g);
  const int chi = minorlab::chromatic_number(g, opt.max_chi);
  const minorlab::PartiteRepresentation rep =
      minorlab::minimal_partite_representation(g, opt.max_chi);
  const auto separators = minorlab::find_separators(g, rep);
  if (opt.format == "json") {
    ordered_json j;
    j["graph6"] = minorlab::emit_graph6(g);
    j["order"] = g.order();
    j["size"] = g.size();
    j["vertices"] = t.vertices();
    j["matrix"] = matrix_json(t);
    ordered_json degrees = ordered_json::array();
    for (int v : t.vertices())
      degrees.push_back(ordered_json::array({v, t.degree_of(v)}));
    j["degrees"] = degrees;
    j["clique_number"] = t.clique_number();
    j["independence_number"] = t.independence_number();
    j["chromatic_number"] = chi;
    j["parts"] = vertex_sets_json(rep.parts);
    ordered_json seps = ordered_json::array();
    for (const auto& s : separators)
      seps.push_back(ordered_json::array({s.first, s.second, s.witness}));
    j["separators"] = seps;
    emit(j.dump(2) + "\n");
    return 0;
  }
  emit(t.dump());
  emit("order " + std::to_string(g.order()) + "\n");
  emit("size " + std::to_string(g.size()) + "\n");
  for (int v : t.vertices())
    emit("degree " + std::to_string(v) + " " + std::to_string(t.degree_of(v)) +
         "\n");
  emit("clique_number " + std::to_string(t.clique_number()) + "\n");
  emit("independence_number " + std::to_string(t.independence_number()) +
       "\n");
  emit("chromatic_number " + std::to_string(chi) + "\n");
  for (minorlab::VertexSet part : rep.parts) emit("part " + set_str(part) + "\n");
  for (const auto& s : separators)
    emit("separator " + std::to_string(s.first) + " " +
         std::to_string(s.second) + " witness " + std::to_string(s.witness) +
         "\n");
  return 0;
}

int cmd_contract(const Options& opt, const Graph& g) {
  if (opt.removed < 0 || opt.survivor < 0)
    throw std::invalid_argument("contract needs --removed and --survivor");
  const TransparencyMatrix t = TransparencyMatrix::compute(g);
  const TransparencyMatrix exact =
      minorlab::update_exact(t, g, opt.removed, opt.survivor);
  const TransparencyMatrix literal =
      minorlab::update_paper_literal(t, opt.removed, opt.survivor);
  const auto mismatches =
      minorlab::divergence_positions(t, g, opt.removed, opt.survivor);
  if (opt.format == "json") {
    ordered_json j;
    j["graph6"] = minorlab::emit_graph6(g);
    j["removed"] = opt.removed;
    j["survivor"] = opt.survivor;
    j["vertices"] = exact.vertices();
    j["exact"] = matrix_json(exact);
    j["literal"] = matrix_json(literal);
    ordered_json mm = ordered_json::array();
    for (auto [m, n] : mismatches)
      mm.push_back(ordered_json::array({m, n}));
    j["mismatches"] = mm;
    emit(j.dump(2) + "\n");
    return 0;
  }
  std::string verts = "vertices";
  for (int v : exact.vertices()) verts += " " + std::to_string(v);
  emit(verts + "\n");
  emit("exact:\n" + exact.dump());
  emit("literal:\n" + literal.dump());
  if (mismatches.empty()) {
    emit("updaters agree\n");
  } else {
    for (auto [m, n] : mismatches)
      emit("mismatch " + std::to_string(m) + " " + std::to_string(n) +
           " exact " + exact.at(m, n).str() + " literal " +
           literal.at(m, n).str() + "\n");
  }
  return 0;
}

int cmd_greedy(const Options& opt, const Graph& g) {
  const minorlab::ContractionTrace trace = minorlab::greedy_contract(g);
  if (opt.format == "json") {
    emit(minorlab::trace_to_json(trace) + "\n");
    return 0;
  }
  int i = 0;
  for (const minorlab::ContractionStep& step : trace.steps)
    emit("step " + std::to_string(++i) + ": (" + std::to_string(step.removed) +
         " => " + std::to_string(step.survivor) + ") replacements " +
         std::to_string(step.replacements) + "\n");
  emit("terminal order " + std::to_string(trace.terminal_order) + "\n");
  return 0;
}

int cmd_hadwiger(const Options& opt, const Graph& g) {
  const minorlab::HadwigerResult result =
      minorlab::hadwiger_number(g, opt.max_oracle);
  if (opt.format == "json") {
    ordered_json j;
    j["graph6"] = minorlab::emit_graph6(g);
    j["hadwiger"] = result.number;
    j["branch_sets"] = vertex_sets_json(result.certificate.branch_sets);
    emit(j.dump(2) + "\n");
    return 0;
  }
  emit("hadwiger_number " + std::to_string(result.number) + "\n");
  for (minorlab::VertexSet set : result.certificate.branch_sets)
    emit("branch_set " + set_str(set) + "\n");
  return 0;
}

int cmd_chroma(const Options& opt, const Graph& g) {
  const int chi = minorlab::chromatic_number(g, opt.max_chi);
  const minorlab::PartiteRepresentation rep =
      minorlab::minimal_partite_representation(g, opt.max_chi);
  if (opt.format == "json") {
    ordered_json j;
    j["graph6"] = minorlab::emit_graph6(g);
    j["chromatic_number"] = chi;
    j["parts"] = vertex_sets_json(rep.parts);
    emit(j.dump(2) + "\n");
    return 0;
  }
  emit("chromatic_number " + std::to_string(chi) + "\n");
  for (minorlab::VertexSet part : rep.parts) emit("part " + set_str(part) + "\n");
  return 0;
}

int cmd_sweep(const Options& opt, const std::vector<Graph>& graphs) {
  if (opt.out_dir.empty())
    throw std::invalid_argument("sweep needs --out DIR");
  std::filesystem::create_directories(opt.out_dir);
  minorlab::AuditBudgets budgets;
  budgets.max_chi = opt.max_chi;
  budgets.max_oracle = opt.max_oracle;
  const auto records = minorlab::sweep(graphs, budgets, opt.threads);
  const std::filesystem::path dir(opt.out_dir);
  minorlab::write_reports(records, dir / "sweep.jsonl", dir / "sweep.csv");
  long skipped = 0;
  for (const auto& rec : records)
    if (std::find(rec.flags.begin(), rec.flags.end(), "SKIPPED") !=
        rec.flags.end())
      ++skipped;
  emit("records " + std::to_string(records.size()) + " skipped " +
       std::to_string(skipped) + "\n");
  emit(minorlab::render_csv(records));
  return (!records.empty() && skipped == static_cast<long>(records.size()))
             ? 2
             : 0;
}

int cmd_audit31(const Options& opt, const std::vector<Graph>& graphs) {
  if (opt.out_dir.empty())
    throw std::invalid_argument("audit31 needs --out DIR");
  std::filesystem::create_directories(opt.out_dir);
  const minorlab::SensitivityAudit audit = minorlab::audit_sensitivity(graphs);
  const std::string json = minorlab::audit_to_json(audit);
  {
    const std::filesystem::path path =
        std::filesystem::path(opt.out_dir) / "audit31.json";
    std::ofstream out(path.string() + ".partial",
                      std::ios::binary | std::ios::trunc);
    out << json;
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.close();
    std::filesystem::rename(path.string() + ".partial", path);
  }
  emit("analyzed " + std::to_string(audit.analyzed) + " skipped " +
       std::to_string(audit.skipped) + "\n");
  emit("sensitive_condition_some " +
       std::to_string(audit.sensitive_condition_some) + "\n");
  emit("sensitive_condition_none " +
       std::to_string(audit.sensitive_condition_none) + "\n");
  emit("insensitive_condition_some " +
       std::to_string(audit.insensitive_condition_some) + "\n");
  emit("insensitive_condition_none " +
       std::to_string(audit.insensitive_condition_none) + "\n");
  return (audit.analyzed == 0 && audit.skipped > 0) ? 2 : 0;
}

int run_per_graph(const Options& opt, const std::vector<Graph>& graphs,
                  int (*cmd)(const Options&, const Graph&)) {
  int rc = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (graphs.size() > 1)
      emit((i ? "\n" : "") + std::string("# ") +
           minorlab::emit_graph6(graphs[i]) + "\n");
    rc = std::max(rc, cmd(opt, graphs[i]));
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transparency-matrix contraction laboratory"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool wants_pair) {
    sub->add_option("--input", opt.input_file, "graph6 file, one per line");
    sub->add_option("--g6", opt.g6, "inline graph6 string");
    sub->add_option("--gen", opt.gen,
                    "generator spec: cycle:N complete:N complete_minus_edge:N "
                    "petersen gnp:N:P[:SEED] all_connected:N");
    sub->add_option("--seed", opt.seed, "seed for gnp without inline seed");
    sub->add_option("--max-oracle", opt.max_oracle,
                    "complete-minor oracle order budget");
    sub->add_option("--max-chi", opt.max_chi, "exact colouring order budget");
    sub->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    if (wants_pair) {
      sub->add_option("--removed", opt.removed, "vertex that disappears");
      sub->add_option("--survivor", opt.survivor, "vertex that remains");
    }
  };

  CLI::App* analyze = app.add_subcommand("analyze", "matrix and invariants");
  add_common(analyze, false);
  CLI::App* contract =
      app.add_subcommand("contract", "one contraction step, both updaters");
  add_common(contract, true);
  CLI::App* greedy = app.add_subcommand("greedy", "greedy contraction trace");
  add_common(greedy, false);
  CLI::App* hadwiger =
      app.add_subcommand("hadwiger", "largest complete minor with certificate");
  add_common(hadwiger, false);
  CLI::App* chroma =
      app.add_subcommand("chroma", "chromatic number and colour classes");
  add_common(chroma, false);
  CLI::App* sweep = app.add_subcommand("sweep", "audit a corpus into reports");
  add_common(sweep, false);
  sweep->add_option("--out", opt.out_dir, "report directory");
  sweep->add_option("--threads", opt.threads, "worker threads (0 = auto)");
  CLI::App* audit31 = app.add_subcommand(
      "audit31", "sensitivity versus essentially-singleton audit");
  add_common(audit31, false);
  audit31->add_option("--out", opt.out_dir, "report directory");

  CLI11_PARSE(app, argc, argv);

  try {
    const std::vector<Graph> graphs = load_graphs(opt);
    if (analyze->parsed()) return run_per_graph(opt, graphs, cmd_analyze);
    if (contract->parsed()) return run_per_graph(opt, graphs, cmd_contract);
    if (greedy->parsed()) return run_per_graph(opt, graphs, cmd_greedy);
    if (hadwiger->parsed()) return run_per_graph(opt, graphs, cmd_hadwiger);
    if (chroma->parsed()) return run_per_graph(opt, graphs, cmd_chroma);
    if (sweep->parsed()) return cmd_sweep(opt, graphs);
    if (audit31->parsed()) return cmd_audit31(opt, graphs);
  } catch (const minorlab::BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ngtw/checks.hpp"
#include "ngtw/elimination.hpp"
#include "ngtw/errors.hpp"
#include "ngtw/graph6.hpp"
#include "ngtw/report.hpp"
#include "ngtw/sweep.hpp"
#include "ngtw/treewidth.hpp"

namespace {

using namespace ngtw;

// exit codes: 0 all-pass, 1 theorem violation, 2 input error, 3 capability
// error, 4 internal error
constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapability = 3;
constexpr int kExitInternal = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::map<std::string, std::string> parse_kv(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("expected key=value, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

long long kv_int(const std::map<std::string, std::string>& kv,
                 const std::string& key, std::optional<long long> fallback = {}) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    if (fallback) return *fallback;
    throw std::invalid_argument("missing '" + key + "' parameter");
  }
  return std::stoll(it->second);
}

double kv_probability(const std::map<std::string, std::string>& kv,
                      const std::string& key, double fallback) {
  auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  const std::string& s = it->second;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    double num = std::stod(s.substr(0, slash));
    double den = std::stod(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("probability denominator is zero");
    return num / den;
  }
  return std::stod(s);
}

struct SourceFlags {
  std::vector<std::string> graph6;
  std::string edges_path;
  std::string graph6_file;
  int enumerate_n = -1;
  std::string random_ktrees;
  std::string gnp;
};

// Folds the source flags into the manifest; exactly one source is allowed.
void apply_source(const SourceFlags& f, SweepManifest& m) {
  int sources = 0;
  if (!f.graph6.empty() || !f.edges_path.empty()) ++sources;
  if (!f.graph6_file.empty()) ++sources;
  if (f.enumerate_n >= 0) ++sources;
  if (!f.random_ktrees.empty()) ++sources;
  if (!f.gnp.empty()) ++sources;
  if (sources != 1)
    throw std::invalid_argument(
        "choose exactly one input source (--graph6/--edges, --graph6-file, "
        "--enumerate, --random-ktrees, --gnp)");

  if (!f.graph6.empty() || !f.edges_path.empty()) {
    m.source.kind = SourceSpec::Kind::kGraph6List;
    m.source.graph6 = f.graph6;
    if (!f.edges_path.empty())
      m.source.graph6.push_back(emit_graph6(parse_edge_list(read_file(f.edges_path))));
  } else if (!f.graph6_file.empty()) {
    m.source.kind = SourceSpec::Kind::kGraph6File;
    m.source.path = f.graph6_file;
  } else if (f.enumerate_n >= 0) {
    m.source.kind = SourceSpec::Kind::kEnumerate;
    m.source.n = f.enumerate_n;
  } else if (!f.random_ktrees.empty()) {
    auto kv = parse_kv(f.random_ktrees);
    m.source.kind = SourceSpec::Kind::kRandomKtrees;
    m.source.k = static_cast<int>(kv_int(kv, "k"));
    m.source.n = static_cast<int>(kv_int(kv, "n"));
    m.source.count = static_cast<int>(kv_int(kv, "count"));
    m.seed = static_cast<uint64_t>(kv_int(kv, "seed", 0));
  } else {
    auto kv = parse_kv(f.gnp);
    m.source.kind = SourceSpec::Kind::kGnp;
    m.source.n = static_cast<int>(kv_int(kv, "n"));
    m.source.p = kv_probability(kv, "p", 0.5);
    m.source.count = static_cast<int>(kv_int(kv, "trials", 1));
    m.seed = static_cast<uint64_t>(kv_int(kv, "seed", 0));
  }
}

int exit_code_for(const SweepSummary& s, bool strict) {
  if (s.fail > 0) return kExitViolation;
  if (strict && s.inapplicable > 0) return kExitViolation;
  return kExitPass;
}

struct TwArgs {
  std::string graph6;
  std::string edges_path;
  bool heuristic = false;
  std::string strategy = "min-fill";
  int cap = kDefaultExactCap;
  std::string format = "human";
};

int run_tw(const TwArgs& a) {
  Graph g;
  if (!a.graph6.empty() && a.edges_path.empty())
    g = parse_graph6(a.graph6);
  else if (a.graph6.empty() && !a.edges_path.empty())
    g = parse_edge_list(read_file(a.edges_path));
  else
    throw std::invalid_argument("tw: provide exactly one of --graph6, --edges");

  Report r;
  r.check = "tw";
  r.graph6_inputs = {emit_graph6(g)};
  r.n = g.n();
  r.verdict = "pass";

  if (g.n() > a.cap && !a.heuristic)
    throw capability_error("tw: n = " + std::to_string(g.n()) +
                           " exceeds cap " + std::to_string(a.cap) +
                           "; rerun with --heuristic");

  EliminationOrder order;
  if (a.heuristic) {
    auto strat = a.strategy == "min-degree" ? EliminationStrategy::kMinDegree
                                            : EliminationStrategy::kMinFill;
    order = width_upper_heuristic(g, strat);
    r.quantities["treewidth_upper_bound"] = order.width;
    r.quantities["strategy"] = a.strategy;
  } else {
    TreewidthResult t = treewidth_exact(g, a.cap);
    order = std::move(t.order);
    r.quantities["treewidth"] = t.width;
  }
  r.certificates["elimination_order"] = order.order;

  if (a.format == "json") {
    std::cout << report_to_jsonl(r) << "\n";
  } else {
    std::cout << "n: " << g.n() << "\n";
    if (a.heuristic)
      std::cout << "treewidth upper bound (" << a.strategy
                << "): " << order.width << "\n";
    else
      std::cout << "treewidth: " << order.width << "\n";
    std::cout << "elimination order:";
    for (int v : order.order) std::cout << " " << v;
    std::cout << "\n";
  }
  return kExitPass;
}

struct CheckArgs {
  std::string token;
  SourceFlags source;
  std::optional<int> k;
  bool strict = false;
  bool heuristic = false;
  int cap = kDefaultExactCap;
  int jobs = 0;
  std::string out;
  std::string format = "human";
};

int run_check_cmd(const CheckArgs& a) {
  SweepManifest m;
  m.check = a.token;
  apply_source(a.source, m);
  m.k = a.k;
  m.cap = a.cap;
  m.heuristic = a.heuristic;
  m.jobs = a.jobs;
  m.out = a.out;

  std::ofstream out_file;
  if (!m.out.empty()) {
    out_file.open(m.out, std::ios::binary);
    if (!out_file)
      throw std::runtime_error("cannot write to '" + m.out + "'");
  }
  auto sink = [&](size_t, const Report& r) {
    if (a.format == "json")
      std::cout << report_to_jsonl(r) << "\n";
    else
      std::cout << report_to_human(r) << "\n";
    if (out_file.is_open()) out_file << report_to_jsonl(r) << "\n";
  };
  SweepSummary summary = run_sweep(m, sink);
  std::cerr << summary.total << " reports: " << summary.pass << " pass, "
            << summary.fail << " fail, " << summary.inapplicable
            << " inapplicable, " << summary.inconclusive << " inconclusive\n";
  return exit_code_for(summary, a.strict);
}

struct SweepArgs {
  std::string token = "main";
  SourceFlags source;
  std::string manifest_path;
  std::string manifest_out;
  std::optional<int> k;
  bool strict = false;
  bool heuristic = false;
  int cap = kDefaultExactCap;
  int jobs = -1;  // -1: not set on the command line
  std::string out;
  std::string format = "human";
  bool token_given = false;
};

int run_sweep_cmd(const SweepArgs& a) {
  SweepManifest m;
  if (!a.manifest_path.empty()) {
    m = manifest_from_json(nlohmann::json::parse(read_file(a.manifest_path)));
    // explicit flags override the manifest for replay comparisons
    if (a.token_given) m.check = a.token;
    if (a.jobs >= 0) m.jobs = a.jobs;
    if (!a.out.empty()) m.out = a.out;
    if (a.k) m.k = a.k;
  } else {
    m.check = a.token;
    apply_source(a.source, m);
    m.k = a.k;
    m.cap = a.cap;
    m.heuristic = a.heuristic;
    if (a.jobs >= 0) m.jobs = a.jobs;
    m.out = a.out;
  }

  if (!a.manifest_out.empty()) {
    std::ofstream mo(a.manifest_out, std::ios::binary);
    if (!mo)
      throw std::runtime_error("cannot write to '" + a.manifest_out + "'");
    mo << manifest_to_json(m).dump(2) << "\n";
  }

  std::ofstream out_file;
  if (!m.out.empty()) {
    out_file.open(m.out, std::ios::binary);
    if (!out_file) throw std::runtime_error("cannot write to '" + m.out + "'");
  }
  auto sink = [&](size_t, const Report& r) {
    if (out_file.is_open()) out_file << report_to_jsonl(r) << "\n";
  };
  SweepSummary summary = run_sweep(m, out_file.is_open()
                                          ? std::function<void(size_t, const Report&)>(sink)
                                          : nullptr);
  if (a.format == "json") {
    std::cout << summary.to_json().dump() << "\n";
  } else {
    std::cout << "check: " << summary.check << "\n"
              << "total: " << summary.total << "  pass: " << summary.pass
              << "  fail: " << summary.fail
              << "  inapplicable: " << summary.inapplicable
              << "  inconclusive: " << summary.inconclusive << "\n";
    if (summary.min_slack)
      std::cout << "min slack: " << *summary.min_slack << " at input "
                << summary.min_slack_index << " (" << summary.min_slack_graph6
                << ")\n";
    std::cout << "distribution of " << summary.quantity << ":";
    for (auto [value, count] : summary.distribution)
      std::cout << " " << value << ":" << count;
    std::cout << "\n";
  }
  return exit_code_for(summary, a.strict);
}

void add_source_flags(CLI::App* cmd, SourceFlags& f) {
  cmd->add_option("--graph6", f.graph6, "graph6 string (repeatable)");
  cmd->add_option("--edges", f.edges_path, "edge list file ('n m' header)");
  cmd->add_option("--graph6-file", f.graph6_file, "file with one graph6 per line");
  cmd->add_option("--enumerate", f.enumerate_n,
                  "all labeled graphs on N vertices (N <= 7)");
  cmd->add_option("--random-ktrees", f.random_ktrees,
                  "seeded k-trees: k=K,n=N,count=C,seed=S");
  cmd->add_option("--gnp", f.gnp, "seeded G(n,p): n=N,p=P,trials=T,seed=S");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact treewidth with certificates, and checkers for complement "
      "treewidth bounds"};
  app.require_subcommand(1);

  TwArgs tw;
  auto* tw_cmd = app.add_subcommand("tw", "compute treewidth of one graph");
  tw_cmd->add_option("--graph6", tw.graph6, "graph6 string");
  tw_cmd->add_option("--edges", tw.edges_path, "edge list file");
  tw_cmd->add_flag("--heuristic", tw.heuristic,
                   "greedy upper bound instead of the exact solver");
  tw_cmd->add_option("--strategy", tw.strategy, "min-degree or min-fill")
      ->check(CLI::IsMember({"min-degree", "min-fill"}));
  tw_cmd->add_option("--cap", tw.cap, "exact solver vertex cap");
  tw_cmd->add_option("--format", tw.format, "json or human")
      ->check(CLI::IsMember({"json", "human"}));

  CheckArgs chk;
  auto* chk_cmd = app.add_subcommand("check", "run a named check over inputs");
  chk_cmd->add_option("token", chk.token,
                      "main | lemma2 | girth | ktree | prop-clique | coloring")
      ->required();
  add_source_flags(chk_cmd, chk.source);
  int chk_k = -1;
  chk_cmd->add_option("--k", chk_k, "clique bound parameter for lemma2");
  chk_cmd->add_flag("--strict", chk.strict, "inapplicable inputs fail the run");
  chk_cmd->add_flag("--heuristic", chk.heuristic,
                    "bound-only checking above the cap (main)");
  chk_cmd->add_option("--cap", chk.cap, "exact solver vertex cap");
  chk_cmd->add_option("--jobs", chk.jobs, "worker threads (0 = hardware)");
  chk_cmd->add_option("--out", chk.out, "also write JSON-lines reports here");
  chk_cmd->add_option("--format", chk.format, "json or human")
      ->check(CLI::IsMember({"json", "human"}));

  SweepArgs sw;
  auto* sw_cmd =
      app.add_subcommand("sweep", "run a check over a corpus and summarize");
  auto* sw_token = sw_cmd->add_option(
      "token", sw.token, "main | lemma2 | girth | ktree | prop-clique | coloring");
  add_source_flags(sw_cmd, sw.source);
  sw_cmd->add_option("--manifest", sw.manifest_path, "replay a sweep manifest");
  sw_cmd->add_option("--manifest-out", sw.manifest_out,
                     "write the effective manifest here");
  int sw_k = -1;
  sw_cmd->add_option("--k", sw_k, "clique bound parameter for lemma2");
  sw_cmd->add_flag("--strict", sw.strict, "inapplicable inputs fail the run");
  sw_cmd->add_flag("--heuristic", sw.heuristic,
                   "bound-only checking above the cap (main)");
  sw_cmd->add_option("--cap", sw.cap, "exact solver vertex cap");
  sw_cmd->add_option("--jobs", sw.jobs, "worker threads (0 = hardware)");
  sw_cmd->add_option("--out", sw.out, "write JSON-lines reports here");
  sw_cmd->add_option("--format", sw.format, "json or human")
      ->check(CLI::IsMember({"json", "human"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*tw_cmd) return run_tw(tw);
    if (*chk_cmd) {
      if (chk_k >= 0) chk.k = chk_k;
      return run_check_cmd(chk);
    }
    if (sw_k >= 0) sw.k = sw_k;
    sw.token_given = sw_token->count() > 0;
    return run_sweep_cmd(sw);
  } catch (const capability_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapability;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitPass;
}

#include "ngtw/sweep.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ngtw/generators.hpp"
#include "ngtw/graph6.hpp"
#include "ngtw/rng.hpp"

namespace ngtw {

std::string source_kind_name(SourceSpec::Kind kind) {
  switch (kind) {
    case SourceSpec::Kind::kEnumerate: return "enumerate";
    case SourceSpec::Kind::kGraph6File: return "graph6-file";
    case SourceSpec::Kind::kGraph6List: return "graph6-list";
    case SourceSpec::Kind::kRandomKtrees: return "random-ktrees";
    case SourceSpec::Kind::kGnp: return "gnp";
  }
  throw std::logic_error("unreachable source kind");
}

SourceSpec::Kind source_kind_from_name(const std::string& name) {
  if (name == "enumerate") return SourceSpec::Kind::kEnumerate;
  if (name == "graph6-file") return SourceSpec::Kind::kGraph6File;
  if (name == "graph6-list") return SourceSpec::Kind::kGraph6List;
  if (name == "random-ktrees") return SourceSpec::Kind::kRandomKtrees;
  if (name == "gnp") return SourceSpec::Kind::kGnp;
  throw std::invalid_argument("unknown source kind '" + name + "'");
}

nlohmann::json manifest_to_json(const SweepManifest& m) {
  nlohmann::json src;
  src["kind"] = source_kind_name(m.source.kind);
  switch (m.source.kind) {
    case SourceSpec::Kind::kEnumerate:
      src["n"] = m.source.n;
      break;
    case SourceSpec::Kind::kGraph6File:
      src["path"] = m.source.path;
      break;
    case SourceSpec::Kind::kGraph6List:
      src["graph6"] = m.source.graph6;
      break;
    case SourceSpec::Kind::kRandomKtrees:
      src["k"] = m.source.k;
      src["n"] = m.source.n;
      src["count"] = m.source.count;
      break;
    case SourceSpec::Kind::kGnp:
      src["n"] = m.source.n;
      src["p"] = m.source.p;
      src["count"] = m.source.count;
      break;
  }
  nlohmann::json j;
  j["check"] = m.check;
  j["source"] = std::move(src);
  j["seed"] = m.seed;
  j["jobs"] = m.jobs;
  j["out"] = m.out;
  j["k"] = m.k ? nlohmann::json(*m.k) : nlohmann::json(nullptr);
  j["cap"] = m.cap;
  j["heuristic"] = m.heuristic;
  j["schema_version"] = kSchemaVersion;
  return j;
}

SweepManifest manifest_from_json(const nlohmann::json& j) {
  SweepManifest m;
  m.check = j.at("check").get<std::string>();
  const auto& src = j.at("source");
  m.source.kind = source_kind_from_name(src.at("kind").get<std::string>());
  if (src.contains("n")) m.source.n = src.at("n").get<int>();
  if (src.contains("k")) m.source.k = src.at("k").get<int>();
  if (src.contains("count")) m.source.count = src.at("count").get<int>();
  if (src.contains("p")) m.source.p = src.at("p").get<double>();
  if (src.contains("path")) m.source.path = src.at("path").get<std::string>();
  if (src.contains("graph6"))
    m.source.graph6 = src.at("graph6").get<std::vector<std::string>>();
  if (j.contains("seed")) m.seed = j.at("seed").get<uint64_t>();
  if (j.contains("jobs")) m.jobs = j.at("jobs").get<int>();
  if (j.contains("out") && !j.at("out").is_null())
    m.out = j.at("out").get<std::string>();
  if (j.contains("k") && !j.at("k").is_null()) m.k = j.at("k").get<int>();
  if (j.contains("cap")) m.cap = j.at("cap").get<int>();
  if (j.contains("heuristic")) m.heuristic = j.at("heuristic").get<bool>();
  return m;
}

GraphSource::GraphSource(const SourceSpec& spec, int arity, uint64_t seed)
    : spec_(spec), arity_(arity), seed_(seed) {
  switch (spec_.kind) {
    case SourceSpec::Kind::kEnumerate: {
      if (arity_ != 1)
        throw std::invalid_argument(
            "enumerate source only feeds single-graph checks");
      count_ = labeled_graph_count(spec_.n);
      break;
    }
    case SourceSpec::Kind::kGraph6File: {
      std::ifstream in(spec_.path, std::ios::binary);
      if (!in)
        throw std::runtime_error("cannot read corpus file '" + spec_.path + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      for (const auto& line : split_graph6_lines(buf.str()))
        loaded_.push_back(parse_graph6(line));
      if (loaded_.size() % arity_ != 0)
        throw std::invalid_argument("corpus size " +
                                    std::to_string(loaded_.size()) +
                                    " is not a multiple of the check arity");
      count_ = loaded_.size() / arity_;
      break;
    }
    case SourceSpec::Kind::kGraph6List: {
      for (const auto& s : spec_.graph6) loaded_.push_back(parse_graph6(s));
      if (loaded_.size() % arity_ != 0)
        throw std::invalid_argument("input count " +
                                    std::to_string(loaded_.size()) +
                                    " is not a multiple of the check arity");
      count_ = loaded_.size() / arity_;
      break;
    }
    case SourceSpec::Kind::kRandomKtrees:
    case SourceSpec::Kind::kGnp:
      count_ = spec_.count;
      break;
  }
}

SweepItem GraphSource::item(size_t i) const {
  SweepItem out;
  switch (spec_.kind) {
    case SourceSpec::Kind::kEnumerate:
      out.graphs.push_back(labeled_graph_by_index(spec_.n, i));
      break;
    case SourceSpec::Kind::kGraph6File:
    case SourceSpec::Kind::kGraph6List:
      for (int a = 0; a < arity_; ++a)
        out.graphs.push_back(loaded_[i * arity_ + a]);
      break;
    case SourceSpec::Kind::kRandomKtrees: {
      out.seed = derive_seed(seed_, i);
      for (int a = 0; a < arity_; ++a) {
        uint64_t s = arity_ == 1 ? *out.seed : derive_seed(seed_, i * arity_ + a);
        out.graphs.push_back(gen_random_ktree(spec_.n, spec_.k, s).graph);
      }
      break;
    }
    case SourceSpec::Kind::kGnp: {
      out.seed = derive_seed(seed_, i);
      for (int a = 0; a < arity_; ++a) {
        uint64_t s = arity_ == 1 ? *out.seed : derive_seed(seed_, i * arity_ + a);
        out.graphs.push_back(gen_gnp(spec_.n, spec_.p, s));
      }
      break;
    }
  }
  return out;
}

std::optional<long long> report_slack(const Report& r) {
  if (r.verdict == "inapplicable" || r.verdict == "inconclusive")
    return std::nullopt;
  const auto& q = r.quantities;
  auto get = [&](const char* key) -> std::optional<long long> {
    auto it = q.find(key);
    if (it == q.end() || it->is_null()) return std::nullopt;
    return it->get<long long>();
  };
  if (r.check == "main") return *get("sum") - *get("bound");
  if (r.check == "lemma2") {
    long long s = *get("treewidth_complement") - *get("tw_bound");
    if (auto o = get("bramble_order")) s = std::min(s, *o - *get("order_bound"));
    return s;
  }
  if (r.check == "girth") return *get("treewidth_complement") - *get("bound");
  if (r.check == "ktree") return *get("sum") - *get("expected_sum");
  if (r.check == "prop-clique")
    return *get("bound") - *get("clique_number_union");
  if (r.check == "coloring") return *get("bound") - *get("colors");
  return std::nullopt;
}

namespace {

const char* headline_quantity(const std::string& check) {
  if (check == "main" || check == "ktree") return "sum";
  if (check == "lemma2" || check == "girth") return "treewidth_complement";
  if (check == "prop-clique") return "clique_number_union";
  if (check == "coloring") return "colors";
  return "";
}

}  // namespace

nlohmann::json SweepSummary::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["total"] = total;
  j["pass"] = pass;
  j["fail"] = fail;
  j["inapplicable"] = inapplicable;
  j["inconclusive"] = inconclusive;
  j["min_slack"] = min_slack ? nlohmann::json(*min_slack) : nlohmann::json(nullptr);
  j["min_slack_graph6"] = min_slack_graph6;
  j["min_slack_index"] = min_slack_index;
  j["quantity"] = quantity;
  nlohmann::json dist = nlohmann::json::object();
  for (auto [value, count] : distribution) dist[std::to_string(value)] = count;
  j["distribution"] = std::move(dist);
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  return j;
}

SweepSummary run_sweep(const SweepManifest& m,
                       const std::function<void(size_t, const Report&)>& sink) {
  const int arity = check_arity(m.check);
  GraphSource source(m.source, arity, m.seed);

  CheckOptions opt;
  opt.cap = m.cap;
  opt.heuristic_fallback = m.heuristic;

  SweepSummary summary;
  summary.check = m.check;
  summary.quantity = headline_quantity(m.check);

  int jobs = m.jobs > 0 ? m.jobs
                        : std::max(1u, std::thread::hardware_concurrency());
  const size_t total = source.count();
  const size_t chunk = 1024;

  std::vector<Report> buffer;
  for (size_t begin = 0; begin < total; begin += chunk) {
    const size_t end = std::min(total, begin + chunk);
    buffer.assign(end - begin, Report{});

    auto work = [&](size_t index) {
      SweepItem item = source.item(index);
      CheckInput input;
      input.graphs = std::move(item.graphs);
      input.seed = item.seed;
      input.k = m.k;
      buffer[index - begin] = run_check(m.check, input, opt);
    };

    if (jobs == 1 || end - begin == 1) {
      for (size_t i = begin; i < end; ++i) work(i);
    } else {
      std::atomic<size_t> next{begin};
      std::exception_ptr failure;
      std::mutex failure_mutex;
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
          while (true) {
            size_t i = next.fetch_add(1);
            if (i >= end) return;
            try {
              work(i);
            } catch (...) {
              std::lock_guard<std::mutex> lock(failure_mutex);
              if (!failure) failure = std::current_exception();
              return;
            }
          }
        });
      }
      for (auto& th : pool) th.join();
      if (failure) std::rethrow_exception(failure);
    }

    for (size_t i = begin; i < end; ++i) {
      const Report& r = buffer[i - begin];
      ++summary.total;
      if (r.verdict == "pass") ++summary.pass;
      else if (r.verdict == "fail") ++summary.fail;
      else if (r.verdict == "inapplicable") ++summary.inapplicable;
      else ++summary.inconclusive;

      if (auto slack = report_slack(r)) {
        if (!summary.min_slack || *slack < *summary.min_slack) {
          summary.min_slack = *slack;
          summary.min_slack_graph6 =
              r.graph6_inputs.empty() ? "" : r.graph6_inputs[0];
          summary.min_slack_index = i;
        }
      }
      if (!summary.quantity.empty()) {
        auto it = r.quantities.find(summary.quantity);
        if (it != r.quantities.end() && !it->is_null())
          ++summary.distribution[it->get<long long>()];
      }
      if (sink) sink(i, r);
    }
  }
  return summary;
}

}  // namespace ngtw

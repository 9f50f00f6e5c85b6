#include "ngtw/report.hpp"

#include "ngtw/rng.hpp"

namespace ngtw {

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["graph6"] = r.graph6_inputs;
  j["n"] = r.n;
  j["quantities"] = r.quantities;
  j["certificates"] = r.certificates;
  j["verdict"] = r.verdict;
  if (r.seed)
    j["seed"] = {{"rng", Rng::kName}, {"value", *r.seed}};
  else
    j["seed"] = nullptr;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  return j;
}

std::string report_to_jsonl(const Report& r) { return report_to_json(r).dump(); }

std::string report_to_human(const Report& r) {
  std::string line = "[" + r.verdict + "] " + r.check;
  for (const auto& s : r.graph6_inputs) line += " " + s;
  line += "  n=" + std::to_string(r.n);
  for (const auto& [key, value] : r.quantities.items())
    line += " " + key + "=" + value.dump();
  if (r.seed) line += "  seed=" + std::to_string(*r.seed);
  if (!r.certificates.empty())
    line += "  certificates " + r.certificates.dump();
  return line;
}

}  // namespace ngtw

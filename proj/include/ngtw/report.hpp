#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace ngtw {

inline constexpr const char* kToolVersion = "ngtw 0.1.0";
inline constexpr const char* kSchemaVersion = "1";

// Structured outcome of one check: inputs, computed quantities, the
// certificates backing them, and a verdict. Every numeric claim carries its
// certificate whenever one exists. Reports hold no timing data, so replays
// are byte-identical.
struct Report {
  std::string check;
  std::vector<std::string> graph6_inputs;
  int n = 0;
  nlohmann::json quantities = nlohmann::json::object();
  nlohmann::json certificates = nlohmann::json::object();
  std::string verdict;  // pass | fail | inapplicable | inconclusive
  std::optional<uint64_t> seed;
};

nlohmann::json report_to_json(const Report& r);
// Single-line JSON, keys sorted; suitable for JSON-lines files.
std::string report_to_jsonl(const Report& r);
// One human-readable line carrying the same facts as the JSON form.
std::string report_to_human(const Report& r);

}  // namespace ngtw

#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "ngtw/graph6.hpp"
#include "testutil.hpp"

using namespace ngtw;
using namespace ngtw::test;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(NGTW_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

size_t line_count(const std::string& text) {
  size_t lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  return lines;
}

}  // namespace

TEST_CASE("cli tw") {
  auto star = run_cli("tw --graph6 \"D?{\"");
  CHECK(star.code == 0);
  CHECK(star.out.find("treewidth: 1") != std::string::npos);
  CHECK(star.out.find("elimination order:") != std::string::npos);

  {
    std::ofstream f("cli_k4.edges");
    f << "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
  }
  auto k4 = run_cli("tw --edges cli_k4.edges");
  CHECK(k4.code == 0);
  CHECK(k4.out.find("treewidth: 3") != std::string::npos);
  std::remove("cli_k4.edges");

  auto pet = run_cli("tw --graph6 \"" + emit_graph6(petersen()) + "\" --format json");
  CHECK(pet.code == 0);
  auto j = nlohmann::json::parse(pet.out);
  CHECK(j["quantities"]["treewidth"] == 4);

  CHECK(run_cli("tw --graph6 \"D?\"").code == 2);   // malformed graph6
  CHECK(run_cli("tw").code == 2);                   // no input
  CHECK(run_cli("tw --graph6 \"D?{\" --bogus").code == 2);

  std::string big = emit_graph6(gen_gnp(24, 0.2, 1));
  CHECK(run_cli("tw --graph6 \"" + big + "\"").code == 3);  // over cap
  auto heur = run_cli("tw --graph6 \"" + big + "\" --heuristic");
  CHECK(heur.code == 0);
  CHECK(heur.out.find("upper bound") != std::string::npos);
}

TEST_CASE("cli check") {
  auto e4 = run_cli("check main --enumerate 4 --format json");
  CHECK(e4.code == 0);
  CHECK(line_count(e4.out) == 64);
  std::istringstream lines(e4.out);
  std::string line;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["verdict"] == "pass");
    CHECK(j["check"] == "main");
  }

  auto human = run_cli("check main --graph6 \"" + emit_graph6(cycle_graph(5)) + "\"");
  CHECK(human.code == 0);
  CHECK(human.out.find("[pass] main") != std::string::npos);

  std::string c4 = emit_graph6(cycle_graph(4));
  CHECK(run_cli("check lemma2 --k 3 --graph6 \"" + c4 + "\"").code == 0);
  CHECK(run_cli("check lemma2 --k 3 --strict --graph6 \"" + c4 + "\"").code == 1);

  CHECK(run_cli("check bogus --enumerate 3").code == 2);
  CHECK(run_cli("check main --enumerate 9").code == 2);
  CHECK(run_cli("check main --graph6-file missing.g6").code == 2);

  auto kt = run_cli("check ktree --random-ktrees k=3,n=10,count=20,seed=5 --format json");
  CHECK(kt.code == 0);
  CHECK(line_count(kt.out) == 20);
}

TEST_CASE("cli sweep determinism and manifest replay") {
  auto s1 = run_cli(
      "sweep main --enumerate 4 --jobs 1 --out cli_a.jsonl --format json "
      "--manifest-out cli_m.json");
  CHECK(s1.code == 0);
  auto s2 = run_cli("sweep main --enumerate 4 --jobs 2 --out cli_b.jsonl --format json");
  CHECK(s2.code == 0);
  CHECK(slurp("cli_a.jsonl") == slurp("cli_b.jsonl"));
  CHECK(s1.out == s2.out);  // summaries match too

  auto js = nlohmann::json::parse(s1.out);
  CHECK(js["total"] == 64);
  CHECK(js["fail"] == 0);

  auto replay = run_cli("sweep --manifest cli_m.json --out cli_c.jsonl --jobs 2 --format json");
  CHECK(replay.code == 0);
  CHECK(slurp("cli_c.jsonl") == slurp("cli_a.jsonl"));

  std::remove("cli_a.jsonl");
  std::remove("cli_b.jsonl");
  std::remove("cli_c.jsonl");
  std::remove("cli_m.json");
}

TEST_CASE("cli sweep human summary") {
  auto s = run_cli("sweep girth --graph6 \"" + emit_graph6(cycle_graph(5)) + "\"");
  CHECK(s.code == 0);
  CHECK(s.out.find("total: 1") != std::string::npos);
  CHECK(s.out.find("pass: 1") != std::string::npos);
}

#include "doctest.h"

#include "ngtw/checks.hpp"
#include "ngtw/generators.hpp"
#include "ngtw/graph6.hpp"
#include "testutil.hpp"

using namespace ngtw;
using namespace ngtw::test;

TEST_CASE("check main on named graphs") {
  for (int n = 1; n <= 6; ++n) {
    Report r = check_complement_sum(complete_graph(n));
    CHECK(r.verdict == "pass");
    CHECK(r.quantities["sum"] == n - 1);
  }

  Report c5 = check_complement_sum(cycle_graph(5));
  CHECK(c5.verdict == "pass");
  CHECK(c5.quantities["treewidth"] == 2);
  CHECK(c5.quantities["treewidth_complement"] == 2);
  CHECK(c5.quantities["sum"] == 4);
  CHECK(c5.quantities["slack"] == 1);

  Report q = check_complement_sum(gen_qnk(5, 2));
  CHECK(q.verdict == "pass");
  CHECK(q.quantities["sum"] == 4);  // n-1, the equality family

  // pipeline certificates travel with the claim
  CHECK(c5.certificates.contains("elimination_order"));
  CHECK(c5.certificates.contains("pipeline"));
  const auto& pipe = c5.certificates["pipeline"];
  Graph h = parse_graph6(pipe["ktree_graph6"].get<std::string>());
  CHECK(is_ktree(h, pipe["ktree_width"].get<int>()));
  CHECK(pipe["clique_number"] == 3);
  CHECK(pipe["bramble_order"] == 2);  // n - k - 1 with k = 2
}

TEST_CASE("check main above the cap") {
  Graph big = path_graph(23);
  CHECK_THROWS_AS(check_complement_sum(big), capability_error);

  CheckOptions opt;
  opt.heuristic_fallback = true;
  Report r = check_complement_sum(big, opt);
  CHECK(r.verdict == "inconclusive");
  CHECK(r.certificates["bound_only"] == true);
  CHECK(r.quantities["sum_upper"].get<int>() >= 21);
}

TEST_CASE("check lemma2 on named graphs") {
  Report c5 = check_cliquefree_bound(cycle_graph(5), 3);
  CHECK(c5.verdict == "pass");
  CHECK(c5.quantities["treewidth_complement"] == 2);
  CHECK(c5.quantities["tw_bound"] == 2);
  CHECK(c5.quantities["bramble_order"] == 3);
  CHECK(c5.quantities["order_bound"] == 3);
  CHECK(c5.certificates.contains("bramble"));
  CHECK(c5.certificates.contains("hitting_set"));

  Report pet = check_cliquefree_bound(petersen(), 3);
  CHECK(pet.verdict == "pass");
  CHECK(pet.quantities["treewidth_complement"].get<int>() >= 7);

  Report c4 = check_cliquefree_bound(cycle_graph(4), 3);
  CHECK(c4.verdict == "inapplicable");
  CHECK(c4.certificates["induced_c4"] == std::vector<int>{0, 1, 2, 3});

  Report k4 = check_cliquefree_bound(complete_graph(4), 3);
  CHECK(k4.verdict == "inapplicable");
  CHECK(k4.quantities["inapplicable_reason"] == "clique of size k");
  CHECK(k4.certificates["clique"].size() == 4);

  // complete graph with a large parameter: bound holds trivially
  Report k3 = check_cliquefree_bound(complete_graph(3), 5);
  CHECK(k3.verdict == "pass");
  CHECK(k3.quantities["bramble_order"].is_null());

  // default parameter is clique number + 1
  Report def = check_cliquefree_bound(cycle_graph(5), std::nullopt);
  CHECK(def.quantities["k"] == 3);
}

TEST_CASE("check girth on named graphs") {
  Report c5 = check_girth_bound(cycle_graph(5));
  CHECK(c5.verdict == "pass");
  CHECK(c5.quantities["girth"] == 5);
  CHECK(c5.quantities["treewidth_complement"] == 2);  // equality case n-3

  Report c6 = check_girth_bound(cycle_graph(6));
  CHECK(c6.verdict == "pass");
  CHECK(c6.quantities["treewidth_complement"].get<int>() >= 3);
  CHECK(c6.quantities["treewidth_complement"].get<int>() ==
        treewidth_oracle_bruteforce(complement(cycle_graph(6))));

  Report tri = check_girth_bound(complete_graph(3));
  CHECK(tri.verdict == "inapplicable");
  CHECK(tri.certificates["short_cycle"].size() == 3);

  Report c4 = check_girth_bound(cycle_graph(4));
  CHECK(c4.verdict == "inapplicable");

  Report tree = check_girth_bound(path_graph(6));
  CHECK(tree.verdict == "pass");
  CHECK(tree.quantities["girth"].is_null());

  Report pet = check_girth_bound(petersen());
  CHECK(pet.verdict == "pass");
  CHECK(pet.quantities["treewidth_complement"].get<int>() >= 7);
}

TEST_CASE("qnk_parameter recognition") {
  CHECK(qnk_parameter(gen_qnk(5, 1)) == 1);  // star
  CHECK(qnk_parameter(gen_qnk(7, 3)) == 3);
  CHECK(qnk_parameter(complete_graph(6)) == 5);
  CHECK(qnk_parameter(complete_graph(1)) == 0);
  CHECK_FALSE(qnk_parameter(path_graph(4)).has_value());
  CHECK_FALSE(qnk_parameter(cycle_graph(4)).has_value());
  CHECK_FALSE(qnk_parameter(Graph(3)).has_value());

  for (int k = 1; k <= 4; ++k)
    for (int n = k + 2; n <= k + 6; ++n)
      CHECK(qnk_parameter(gen_qnk(n, k)) == k);
}

TEST_CASE("complement_cover on a path") {
  auto cover = complement_cover(path_graph(4));
  CHECK(is_ktree(cover.host, 1));  // a tree
  Graph co = complement(path_graph(4));
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v)
      if (co.has_edge(u, v)) CHECK(cover.host.has_edge(u, v));
  CHECK(cover.clique.size() == 2);
  CHECK(cover.skipped.size() == 2);
}

TEST_CASE("complement_cover on seeded 2-trees") {
  for (uint64_t seed = 0; seed < 15; ++seed) {
    Graph g = gen_random_ktree(8, 2, seed).graph;
    if (qnk_parameter(g)) continue;
    auto cover = complement_cover(g);
    CHECK(is_ktree(cover.host, 4));  // n-k-2 = 4
    Graph co = complement(g);
    for (int u = 0; u < 8; ++u)
      for (int v = u + 1; v < 8; ++v)
        if (co.has_edge(u, v)) CHECK(cover.host.has_edge(u, v));
  }
}

TEST_CASE("complement_cover rejections") {
  CHECK_THROWS_AS(complement_cover(gen_qnk(6, 2)), std::invalid_argument);
  CHECK_THROWS_AS(complement_cover(complete_graph(5)), std::invalid_argument);
  CHECK_THROWS_AS(complement_cover(cycle_graph(4)), std::invalid_argument);
}

TEST_CASE("check ktree dichotomy") {
  Report q93 = check_ktree_sum(gen_qnk(9, 3));
  CHECK(q93.verdict == "pass");
  CHECK(q93.quantities["treewidth"] == 3);
  CHECK(q93.quantities["treewidth_complement"] == 5);
  CHECK(q93.quantities["sum"] == 8);  // n-1
  CHECK(q93.quantities["qnk"] == 3);

  Report p4 = check_ktree_sum(path_graph(4));
  CHECK(p4.verdict == "pass");
  CHECK(p4.quantities["sum"] == 2);  // n-2
  CHECK(p4.quantities["qnk"].is_null());
  CHECK(p4.certificates.contains("complement_cover"));

  Report r3 = check_ktree_sum(gen_random_ktree(10, 3, 1).graph);
  CHECK(r3.verdict == "pass");

  Report c4 = check_ktree_sum(cycle_graph(4));
  CHECK(c4.verdict == "inapplicable");

  Report k1 = check_ktree_sum(complete_graph(1));
  CHECK(k1.verdict == "pass");  // K_1 sits on the equality side: 0 = n-1
}

TEST_CASE("check prop-clique") {
  Report kk = check_union_clique(complete_graph(4), complete_graph(4));
  CHECK(kk.verdict == "pass");
  CHECK(kk.quantities["clique_number_union"] == 4);
  CHECK(kk.quantities["bound"] == 8);

  Graph c5 = cycle_graph(5);
  Report r = check_union_clique(c5, complement(c5));
  CHECK(r.verdict == "pass");
  CHECK(r.quantities["clique_number_union"] == 5);
  CHECK(r.quantities["bound"] == 6);

  CHECK_THROWS_AS(check_union_clique(Graph(3), Graph(4)),
                  std::invalid_argument);

  for (uint64_t seed = 0; seed < 25; ++seed) {
    Graph g1 = random_partial_ktree(8, 2, 0.7, derive_seed(20, seed));
    Graph g2 = random_partial_ktree(8, 2, 0.7, derive_seed(21, seed));
    CHECK(check_union_clique(g1, g2).verdict == "pass");
  }
}

TEST_CASE("union_clique_witness") {
  auto w14 = union_clique_witness(1, 4);
  CHECK(w14.g1 == path_graph(4));
  CHECK(treewidth_exact(w14.g2).width == 1);
  CHECK(w14.clique.size() == 4);  // tw1 + tw2 + 2

  for (int k = 1; k <= 3; ++k)
    for (int n = k + 3; n <= 9; ++n) {
      auto w = union_clique_witness(k, n);
      int tw1 = treewidth_exact(w.g1).width;
      int tw2 = treewidth_exact(w.g2).width;
      CHECK(tw1 == k);
      CHECK(tw2 == n - k - 2);
      CHECK(static_cast<int>(w.clique.size()) == tw1 + tw2 + 2);
      Graph u = graph_union(w.g1, w.g2);
      for (size_t i = 0; i < w.clique.size(); ++i)
        for (size_t j = i + 1; j < w.clique.size(); ++j)
          CHECK(u.has_edge(w.clique[i], w.clique[j]));
    }

  CHECK_THROWS_AS(union_clique_witness(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(union_clique_witness(0, 5), std::invalid_argument);
}

TEST_CASE("greedy union coloring") {
  for (int k = 1; k <= 5; ++k) {
    Graph kk = complete_graph(k + 1);
    Coloring c = greedy_union_coloring(kk, kk);
    CHECK(c.count == k + 1);
    CHECK(coloring_is_proper(kk, c));
  }

  Graph c5 = cycle_graph(5);
  Coloring c = greedy_union_coloring(c5, complement(c5));
  CHECK(c.count == 5);  // the union is K_5

  Report r = check_union_coloring(c5, complement(c5));
  CHECK(r.verdict == "pass");
  CHECK(r.quantities["colors"] == 5);
  CHECK(r.quantities["bound"] == 8);

  for (uint64_t seed = 0; seed < 25; ++seed) {
    Graph g1 = random_partial_ktree(9, 3, 0.6, derive_seed(22, seed));
    Graph g2 = random_partial_ktree(9, 3, 0.6, derive_seed(23, seed));
    Coloring col = greedy_union_coloring(g1, g2);
    CHECK(coloring_is_proper(graph_union(g1, g2), col));
    CHECK(col.count <= 12);  // 4k with the generation parameter k = 3
  }

  // two edgeless graphs need one colour; the bound degrades gracefully
  Report e = check_union_coloring(Graph(4), Graph(4));
  CHECK(e.verdict == "pass");
  CHECK(e.quantities["colors"] == 1);
}

TEST_CASE("random graph smoke report") {
  Report r = random_graph_smoke(8, 5, 123);
  CHECK(r.verdict == "pass");
  CHECK(r.quantities["trials"] == 5);
  CHECK(r.graph6_inputs.size() == 5);
  int total = 0;
  for (const auto& [sum, count] : r.quantities["distribution"].items()) {
    int s = std::stoi(sum);
    CHECK(s >= 6);
    CHECK(s <= 14);
    total += count.get<int>();
  }
  CHECK(total == 5);

  Report tiny = random_graph_smoke(1, 3, 9);
  CHECK(tiny.verdict == "pass");
  CHECK(tiny.quantities["min_sum"] == 0);

  CHECK_THROWS_AS(random_graph_smoke(25, 2, 0), capability_error);
}

TEST_CASE("check registry") {
  CHECK(check_arity("main") == 1);
  CHECK(check_arity("prop-clique") == 2);
  CHECK_THROWS_AS(check_arity("bogus"), std::invalid_argument);

  CheckInput in;
  in.graphs = {cycle_graph(5)};
  in.seed = 77;
  Report r = run_check("main", in);
  CHECK(r.verdict == "pass");
  REQUIRE(r.seed.has_value());
  CHECK(*r.seed == 77);

  CHECK_THROWS_AS(run_check("coloring", in), std::invalid_argument);  // arity
}

TEST_CASE("reports serialize with the full schema") {
  Report r = check_complement_sum(cycle_graph(5));
  auto j = report_to_json(r);
  for (const char* key : {"check", "graph6", "n", "quantities", "certificates",
                          "verdict", "seed", "schema_version", "tool_version"})
    CHECK(j.contains(key));
  CHECK(j["check"] == "main");
  CHECK(j["n"] == 5);
  CHECK(j["seed"].is_null());

  CheckInput in;
  in.graphs = {cycle_graph(5)};
  in.seed = 5;
  auto j2 = report_to_json(run_check("main", in));
  CHECK(j2["seed"]["rng"] == "mt19937_64");
  CHECK(j2["seed"]["value"] == 5);

  std::string human = report_to_human(r);
  CHECK(human.find("[pass] main") == 0);
  CHECK(human.find("sum=4") != std::string::npos);
}

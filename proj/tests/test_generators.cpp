#include "doctest.h"

#include <set>

#include "ngtw/elimination.hpp"
#include "ngtw/generators.hpp"
#include "ngtw/graph6.hpp"
#include "testutil.hpp"

using namespace ngtw;
using namespace ngtw::test;

TEST_CASE("gen_qnk shapes") {
  Graph q52 = gen_qnk(5, 2);
  CHECK(q52.m() == 7);
  std::multiset<int> degs;
  for (int v = 0; v < 5; ++v) degs.insert(q52.degree(v));
  CHECK(degs == std::multiset<int>{4, 4, 2, 2, 2});

  for (int k = 1; k <= 5; ++k) CHECK(gen_qnk(k + 1, k) == complete_graph(k + 1));

  Graph star = gen_qnk(6, 1);
  CHECK(star.degree(0) == 5);
  for (int v = 1; v < 6; ++v) CHECK(star.degree(v) == 1);

  CHECK_THROWS_AS(gen_qnk(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_qnk(5, 5), std::invalid_argument);
}

TEST_CASE("gen_qnk degree profile: k hubs, n-k leaves") {
  for (int n = 4; n <= 10; n += 3)
    for (int k = 1; k < n; ++k) {
      Graph q = gen_qnk(n, k);
      int hubs = 0, leaves = 0;
      for (int v = 0; v < n; ++v) {
        if (q.degree(v) == n - 1) ++hubs;
        if (q.degree(v) == k) ++leaves;
      }
      if (k == n - 1) {
        CHECK(hubs == n);  // complete
      } else {
        CHECK(hubs == k);
        CHECK(leaves == n - k);
      }
    }
}

TEST_CASE("gen_random_ktree") {
  for (uint64_t s = 0; s < 5; ++s)
    CHECK(gen_random_ktree(4, 3, s).graph == complete_graph(4));

  for (uint64_t s = 0; s < 20; ++s) {
    auto [g, ord] = gen_random_ktree(10, 3, s);
    CHECK(is_ktree(g, 3));
    CHECK(g.m() == 24);  // 3*10 - 3*4/2
    CHECK(ord.width == 3);
    CHECK(fill_width(g, ord.order) == 3);
  }

  CHECK(gen_random_ktree(10, 3, 42).graph == gen_random_ktree(10, 3, 42).graph);
  CHECK_THROWS_AS(gen_random_ktree(3, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_ktree(5, 0, 0), std::invalid_argument);
}

TEST_CASE("gen_gnp") {
  CHECK(gen_gnp(7, 0.0, 1) == Graph(7));
  CHECK(gen_gnp(7, 1.0, 1) == complete_graph(7));
  CHECK(gen_gnp(16, 0.5, 7) == gen_gnp(16, 0.5, 7));
  CHECK_FALSE(gen_gnp(16, 0.5, 7) == gen_gnp(16, 0.5, 8));
  CHECK_THROWS_AS(gen_gnp(5, -0.1, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_gnp(5, 1.1, 0), std::invalid_argument);
}

TEST_CASE("labeled enumeration") {
  CHECK(labeled_graph_count(2) == 2);
  CHECK(labeled_graph_count(3) == 8);
  CHECK(labeled_graph_count(5) == 1024);
  CHECK_THROWS_WITH_AS(labeled_graph_count(8),
                       doctest::Contains("graph6 corpus"),
                       std::invalid_argument);

  int count = 0;
  std::set<std::string> seen;
  enumerate_labeled_graphs(4, [&](const Graph& g) {
    ++count;
    seen.insert(emit_graph6(g));
  });
  CHECK(count == 64);
  CHECK(seen.size() == 64);  // pairwise distinct

  // index encoding is invertible, so all graphs are distinct at any n
  for (uint64_t i : {0ull, 1ull, 77ull, 1023ull}) {
    Graph g = labeled_graph_by_index(5, i);
    uint64_t back = 0;
    int t = 0;
    for (int v = 1; v < 5; ++v)
      for (int u = 0; u < v; ++u, ++t)
        if (g.has_edge(u, v)) back |= uint64_t{1} << t;
    CHECK(back == i);
  }
  CHECK_THROWS_AS(labeled_graph_by_index(3, 8), std::invalid_argument);
}

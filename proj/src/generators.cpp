#include "ngtw/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ngtw/rng.hpp"

namespace ngtw {

Graph gen_qnk(int n, int k) {
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("gen_qnk: need 1 <= k <= n-1, got k=" +
                                std::to_string(k) + ", n=" + std::to_string(n));
  Graph g(n);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  for (int v = k; v < n; ++v)
    for (int u = 0; u < k; ++u) g.add_edge(u, v);
  return g;
}

KtreeSample gen_random_ktree(int n, int k, uint64_t seed) {
  if (k < 1) throw std::invalid_argument("gen_random_ktree: k must be >= 1");
  if (n < k + 1)
    throw std::invalid_argument("gen_random_ktree: need n >= k+1, got n=" +
                                std::to_string(n) + ", k=" + std::to_string(k));
  Rng rng(seed);
  Graph g(n);
  for (int u = 0; u <= k; ++u)
    for (int v = u + 1; v <= k; ++v) g.add_edge(u, v);

  // all k-cliques present so far; the base K_{k+1} contributes its k+1
  // k-subsets, each insertion contributes k more
  std::vector<VertexSet> cliques;
  for (int skip = 0; skip <= k; ++skip) {
    VertexSet c;
    for (int u = 0; u <= k; ++u)
      if (u != skip) c.push_back(u);
    cliques.push_back(std::move(c));
  }

  for (int v = k + 1; v < n; ++v) {
    const VertexSet attach = cliques[rng.below(cliques.size())];
    for (int u : attach) g.add_edge(u, v);
    for (int skip : attach) {
      VertexSet c;
      for (int u : attach)
        if (u != skip) c.push_back(u);
      c.push_back(v);
      cliques.push_back(std::move(c));
    }
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = n - 1 - i;  // peel newest first
  EliminationOrder ord = make_elimination_order(g, std::move(order));
  return {std::move(g), std::move(ord)};
}

Graph gen_gnp(int n, double p, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gen_gnp: negative vertex count");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("gen_gnp: p must lie in [0,1]");
  Rng rng(seed);
  Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

uint64_t labeled_graph_count(int n) {
  if (n < 0) throw std::invalid_argument("enumerate: negative vertex count");
  if (n > 7)
    throw std::invalid_argument(
        "enumerate: built-in enumeration is capped at n = 7; supply a graph6 "
        "corpus file for larger n");
  return uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph_by_index(int n, uint64_t index) {
  const uint64_t count = labeled_graph_count(n);
  if (index >= count)
    throw std::invalid_argument("enumerate: index out of range");
  Graph g(n);
  int t = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++t)
      if ((index >> t) & 1) g.add_edge(u, v);
  return g;
}

}  // namespace ngtw

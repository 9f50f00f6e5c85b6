#pragma once

#include <cstdint>

#include "ngtw/elimination.hpp"
#include "ngtw/graph.hpp"

namespace ngtw {

// The k-clique C on vertices 0..k-1 plus n-k vertices adjacent exactly to C.
// Requires 1 <= k <= n-1.
Graph gen_qnk(int n, int k);

struct KtreeSample {
  Graph graph;
  EliminationOrder order;  // reverse construction order, width k
};

// Random k-tree: start from K_{k+1}, attach each new vertex to a uniformly
// chosen existing k-clique (the clique list grows by k per insertion).
// Deterministic for a fixed seed. Requires n >= k+1, k >= 1.
KtreeSample gen_random_ktree(int n, int k, uint64_t seed);

// Erdos-Renyi G(n, p): every pair present independently with probability p,
// pairs drawn in graph6 column order. Deterministic for a fixed seed.
Graph gen_gnp(int n, double p, uint64_t seed);

// Built-in labeled enumeration, capped at n <= 7 (2^21 graphs); beyond that
// supply a graph6 corpus file instead. Index bit t = pair t in graph6
// column order, so ascending index is lexicographic in the adjacency bits.
uint64_t labeled_graph_count(int n);
Graph labeled_graph_by_index(int n, uint64_t index);

template <class F>
void enumerate_labeled_graphs(int n, F f) {
  const uint64_t count = labeled_graph_count(n);
  for (uint64_t i = 0; i < count; ++i) f(labeled_graph_by_index(n, i));
}

}  // namespace ngtw

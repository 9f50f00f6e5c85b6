#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ngtw/bramble.hpp"
#include "ngtw/elimination.hpp"
#include "ngtw/graph.hpp"
#include "ngtw/report.hpp"
#include "ngtw/treewidth.hpp"

namespace ngtw {

struct CheckOptions {
  int cap = kDefaultExactCap;
  // When set, over-cap inputs to the sum check degrade to heuristic upper
  // bounds (verdict "inconclusive", or "fail" if even the upper bounds
  // violate the inequality) instead of being rejected.
  bool heuristic_fallback = false;
  std::optional<uint64_t> seed;  // provenance only, recorded in the report
};

struct Coloring {
  std::vector<int> color;  // vertex -> colour
  int count = 0;           // number of distinct colours
};

// Colours g1 ∪ g2 greedily along a minimum-degree (degeneracy) removal
// order, lowest id first on ties. Always proper.
Coloring greedy_union_coloring(const Graph& g1, const Graph& g2);
bool coloring_is_proper(const Graph& g, const Coloring& c);

// k such that g is a k-clique plus n-k vertices adjacent exactly to it
// (complete graphs count with k = n-1); nullopt otherwise.
std::optional<int> qnk_parameter(const Graph& g);

// An (n-k-2)-tree on g's vertices containing complement(g) as a spanning
// subgraph, built for a k-tree g that is not of the Q_n^k form: take the
// lexicographically least (k+1)-clique whose members all have outside
// neighbours, make the remaining vertices a clique, and reattach each clique
// vertex to everything except one of its own neighbours. Postconditions are
// re-verified before returning.
struct ComplementCover {
  Graph host;
  VertexSet clique;                            // the removed (k+1)-clique
  std::vector<std::pair<int, int>> skipped;    // (clique vertex, skipped neighbour)
};
ComplementCover complement_cover(const Graph& g);

// A pair (g1, g2) with treewidths k and n-k-2 whose union contains a clique
// on tw(g1)+tw(g2)+2 = n vertices: g1 is the path-power k-tree, g2 its
// complement cover. Requires n >= k+3.
struct UnionCliqueWitness {
  Graph g1;
  Graph g2;
  VertexSet clique;
};
UnionCliqueWitness union_clique_witness(int k, int n);

// Per-check report builders. Tokens in parentheses are the CLI names.
Report check_complement_sum(const Graph& g, const CheckOptions& opt = {});   // (main)
Report check_cliquefree_bound(const Graph& g, std::optional<int> k,
                              const CheckOptions& opt = {});                 // (lemma2)
Report check_girth_bound(const Graph& g, const CheckOptions& opt = {});      // (girth)
Report check_ktree_sum(const Graph& g, const CheckOptions& opt = {});        // (ktree)
Report check_union_clique(const Graph& g1, const Graph& g2,
                          const CheckOptions& opt = {});                     // (prop-clique)
Report check_union_coloring(const Graph& g1, const Graph& g2,
                            const CheckOptions& opt = {});                   // (coloring)

// Samples G(n, 1/2) `trials` times and reports the distribution of
// tw(G) + tw(complement); asserts only the provable n-2 and 2n-2 envelopes.
Report random_graph_smoke(int n, int trials, uint64_t seed,
                          const CheckOptions& opt = {});

// Check registry keyed by CLI token.
int check_arity(const std::string& token);  // 1 or 2; throws on unknown token
struct CheckInput {
  std::vector<Graph> graphs;
  std::optional<uint64_t> seed;
  std::optional<int> k;  // lemma2 parameter; defaults to clique number + 1
};
Report run_check(const std::string& token, const CheckInput& input,
                 const CheckOptions& opt = {});

}  // namespace ngtw

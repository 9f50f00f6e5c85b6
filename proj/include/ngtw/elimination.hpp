#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ngtw/graph.hpp"

namespace ngtw {

// A vertex elimination sequence (first eliminated first) together with its
// width: the maximum number of later neighbours any vertex has in the
// progressively filled graph. Certifies a treewidth upper bound.
struct EliminationOrder {
  std::vector<int> order;
  int width = 0;
};

// Validates that `order` is a permutation of g's vertices and computes the
// fill-process width.
EliminationOrder make_elimination_order(const Graph& g, std::vector<int> order);

int fill_width(const Graph& g, std::span<const int> order);

// g plus all fill edges produced by eliminating along `order` (a chordal
// supergraph of g).
Graph fill_in(const Graph& g, std::span<const int> order);

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree;  // edges between bag indices
  int width() const;                      // max bag size - 1
};

// Bags are the eliminated vertex plus its filled later neighbourhood; bags
// contained in an adjacent bag are merged away.
TreeDecomposition decomposition_from_order(const Graph& g,
                                           const EliminationOrder& ord);

struct DecompositionCheck {
  bool ok = false;
  std::string violation;  // first violated invariant, empty when ok
};
DecompositionCheck verify_decomposition(const Graph& g,
                                        const TreeDecomposition& td);

// Recognition by greedy simplicial removal (lowest id first): true iff g is
// K_{k+1} or peeling degree-k vertices with clique neighbourhoods reaches
// K_{k+1}. Simplicial removals commute, so greedy order is safe.
bool is_ktree(const Graph& g, int k);

// The unique k for which g is a k-tree, if any (complete graphs are
// (n-1)-trees; otherwise candidate k = minimum degree).
std::optional<int> detect_ktree_k(const Graph& g);

// Embeds g into a w-tree H (w = ord.width) on the same vertices: fills each
// eliminated vertex's later neighbourhood into a clique, then pads back
// degrees to exactly w by attaching to already-built cliques (the final
// clique first, lowest ids first).
Graph ktree_completion(const Graph& g, const EliminationOrder& ord);

enum class EliminationStrategy { kMinDegree, kMinFill };

// Greedy elimination; the returned width is an upper bound on tw(g).
EliminationOrder width_upper_heuristic(const Graph& g, EliminationStrategy s);

}  // namespace ngtw

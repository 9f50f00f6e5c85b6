#pragma once

#include "ngtw/elimination.hpp"
#include "ngtw/errors.hpp"
#include "ngtw/graph.hpp"

namespace ngtw {

inline constexpr int kDefaultExactCap = 20;
// Hard ceiling for the subset table (2^26 bytes) and the 32-bit masks.
inline constexpr int kMaxExactCap = 26;

struct TreewidthResult {
  int width = 0;
  EliminationOrder order;  // achieves `width`
};

// Exact treewidth by dynamic programming over vertex subsets: f(S) is the
// best width of an elimination prefix covering exactly S, where a vertex's
// cost is the number of outside vertices reachable through the eliminated
// set. Deterministic (lowest-id tie-break) order reconstruction.
// Throws capability_error when g.n() > cap and invalid_argument for n = 0.
TreewidthResult treewidth_exact(const Graph& g, int cap = kDefaultExactCap);

// Test oracle: the literal minimum over all n! elimination orders of the
// fill-process width. Requires n <= 8.
int treewidth_oracle_bruteforce(const Graph& g);

}  // namespace ngtw

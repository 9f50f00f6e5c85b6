#pragma once

#include <string>
#include <vector>

#include "ngtw/graph.hpp"

namespace ngtw {

// A family of vertex subsets of a host graph. Valid when every element
// induces a connected subgraph and every two elements touch (intersect or
// are joined by a host edge); validity is checked, never assumed.
struct Bramble {
  std::vector<VertexSet> elements;
};

struct HittingSet {
  VertexSet members;
  int size() const { return static_cast<int>(members.size()); }
};

// One {u,v} element per edge of h. Throws for edgeless hosts (an empty
// bramble would certify nothing).
Bramble edge_bramble(const Graph& h);

struct BrambleCheck {
  bool ok = false;
  std::string violation;  // names the offending element or pair
};
BrambleCheck verify_bramble(const Graph& h, const Bramble& b);

struct BrambleOrder {
  int order = 0;
  HittingSet hitting_set;
};
// Exact minimum hitting set by branch and bound: pick the first unhit
// element, branch on its vertices. Throws for empty brambles.
BrambleOrder bramble_order(const Graph& h, const Bramble& b);

// Duality soundness: given a valid bramble of order >= ord, checks that
// treewidth_exact(g) >= ord - 1. Throws invalid_argument when the bramble
// is invalid or its order is below ord.
bool lower_bound_check(const Graph& g, const Bramble& b, int ord);

}  // namespace ngtw

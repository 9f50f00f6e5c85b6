#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ngtw/bits.hpp"

namespace ngtw {

// A subset of the vertices of some graph; kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

// Undirected simple graph on vertices 0..n-1, stored as a packed adjacency
// bit matrix (one run of 64-bit words per vertex). Graphs are treated as
// immutable values once built; all operations below are pure.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int n() const { return n_; }
  int m() const;

  bool has_edge(int u, int v) const {
    assert(valid_vertex(u) && valid_vertex(v));
    return (adj_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  Bitset neighbor_set(int v) const;

  int words_per_row() const { return words_; }
  std::span<const uint64_t> row(int v) const {
    assert(valid_vertex(v));
    return {adj_.data() + static_cast<size_t>(v) * words_,
            static_cast<size_t>(words_)};
  }

  bool valid_vertex(int v) const { return v >= 0 && v < n_; }

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> adj_;
};

Graph complement(const Graph& g);
// Pointwise OR of two graphs on the same (identified) vertex set.
Graph graph_union(const Graph& g1, const Graph& g2);
// Subgraph induced by s, relabeled densely by ascending original id.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Validates 0 <= v < n for every member, then sorts and dedupes.
VertexSet normalize_vertex_set(int n, VertexSet s);

struct CliqueResult {
  int size = 0;
  VertexSet witness;
};
// Exact maximum clique (Bron-Kerbosch with pivoting). Requires n >= 1.
CliqueResult clique_number(const Graph& g);

// Shortest cycle as a vertex sequence in cycle order; nullopt for forests.
std::optional<std::vector<int>> shortest_cycle(const Graph& g);
std::optional<int> girth(const Graph& g);

// First induced 4-cycle, returned in cycle order (consecutive vertices
// adjacent, the two diagonals absent); nullopt if none exists.
std::optional<std::array<int, 4>> find_induced_c4(const Graph& g);
bool has_induced_c4(const Graph& g);

// True iff the members of `s` induce a connected, non-empty subgraph.
bool induces_connected(const Graph& g, const Bitset& s);

}  // namespace ngtw

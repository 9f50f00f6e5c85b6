#include "ngtw/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ngtw {

namespace {

// Number of vertices outside inside|{v} adjacent to the component of v in
// the graph induced by inside|{v}; equals v's later-neighbour count when the
// vertices of `inside` are eliminated before v.
int boundary_size(const std::vector<uint32_t>& adj, int v, uint32_t inside) {
  uint32_t comp = uint32_t{1} << v;
  uint32_t nb = adj[v];
  uint32_t grow = nb & inside & ~comp;
  while (grow) {
    comp |= grow;
    uint32_t add = 0;
    uint32_t t = grow;
    while (t) {
      add |= adj[std::countr_zero(t)];
      t &= t - 1;
    }
    nb |= add;
    grow = add & inside & ~comp;
  }
  return std::popcount(nb & ~inside & ~(uint32_t{1} << v));
}

}  // namespace

TreewidthResult treewidth_exact(const Graph& g, int cap) {
  const int n = g.n();
  if (n < 1) throw std::invalid_argument("treewidth_exact: empty graph");
  cap = std::min(cap, kMaxExactCap);
  if (n > cap)
    throw capability_error("treewidth_exact: n = " + std::to_string(n) +
                           " exceeds cap " + std::to_string(cap) +
                           "; use the width heuristic for larger graphs");

  std::vector<uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) adj[v] |= uint32_t{1} << u;

  const uint32_t full = (uint32_t{1} << n) - 1;
  std::vector<uint8_t> f(static_cast<size_t>(full) + 1, 0);
  for (uint32_t s = 1; s <= full; ++s) {
    uint8_t best = 255;
    uint32_t t = s;
    while (t) {
      int v = std::countr_zero(t);
      t &= t - 1;
      uint32_t rest = s & ~(uint32_t{1} << v);
      uint8_t cost = static_cast<uint8_t>(boundary_size(adj, v, rest));
      uint8_t val = std::max(f[rest], cost);
      best = std::min(best, val);
    }
    f[s] = best;
  }

  // reconstruct an order achieving f(full), back to front, lowest id first
  std::vector<int> order(n);
  uint32_t s = full;
  for (int pos = n - 1; pos >= 0; --pos) {
    uint32_t t = s;
    while (t) {
      int v = std::countr_zero(t);
      t &= t - 1;
      uint32_t rest = s & ~(uint32_t{1} << v);
      uint8_t cost = static_cast<uint8_t>(boundary_size(adj, v, rest));
      if (std::max(f[rest], cost) == f[s]) {
        order[pos] = v;
        s = rest;
        break;
      }
    }
  }

  int width = f[full];
  return {width, EliminationOrder{std::move(order), width}};
}

int treewidth_oracle_bruteforce(const Graph& g) {
  const int n = g.n();
  if (n < 1) throw std::invalid_argument("treewidth oracle: empty graph");
  if (n > 8)
    throw std::invalid_argument("treewidth oracle: n = " + std::to_string(n) +
                                " exceeds the n <= 8 oracle limit");

  std::vector<uint32_t> base(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) base[v] |= uint32_t{1} << u;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = n;  // width never exceeds n-1
  std::vector<uint32_t> rows(n);
  do {
    rows = base;
    uint32_t remaining = (uint32_t{1} << n) - 1;
    int width = 0;
    for (int v : perm) {
      remaining &= ~(uint32_t{1} << v);
      uint32_t later = rows[v] & remaining;
      width = std::max(width, std::popcount(later));
      uint32_t t = later;
      while (t) {
        int u = std::countr_zero(t);
        t &= t - 1;
        rows[u] |= later & ~(uint32_t{1} << u);
      }
    }
    best = std::min(best, width);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace ngtw

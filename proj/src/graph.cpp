#include "ngtw/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

namespace ngtw {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph: vertex count must be non-negative");
  n_ = n;
  words_ = (n + 63) / 64;
  adj_.assign(static_cast<size_t>(n) * words_, 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Graph::m() const {
  int twice = 0;
  for (uint64_t w : adj_) twice += std::popcount(w);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (!valid_vertex(u) || !valid_vertex(v))
    throw std::invalid_argument("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: loops are not allowed");
  adj_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
  adj_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  if (!valid_vertex(u) || !valid_vertex(v))
    throw std::invalid_argument("remove_edge: vertex out of range");
  if (u == v) return;
  adj_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(uint64_t{1} << (v & 63));
  adj_[static_cast<size_t>(v) * words_ + (u >> 6)] &= ~(uint64_t{1} << (u & 63));
}

int Graph::degree(int v) const {
  int d = 0;
  for (uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  auto r = row(v);
  for (int wi = 0; wi < words_; ++wi) {
    uint64_t x = r[wi];
    while (x) {
      out.push_back(wi * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return out;
}

Bitset Graph::neighbor_set(int v) const {
  Bitset b(n_);
  for (int u : neighbors(v)) b.set(u);
  return b;
}

Graph complement(const Graph& g) {
  Graph out(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph graph_union(const Graph& g1, const Graph& g2) {
  if (g1.n() != g2.n())
    throw std::invalid_argument("graph_union: vertex counts differ (" +
                                std::to_string(g1.n()) + " vs " +
                                std::to_string(g2.n()) + ")");
  Graph out(g1.n());
  for (int u = 0; u < g1.n(); ++u)
    for (int v = u + 1; v < g1.n(); ++v)
      if (g1.has_edge(u, v) || g2.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

VertexSet normalize_vertex_set(int n, VertexSet s) {
  for (int v : s)
    if (v < 0 || v >= n)
      throw std::invalid_argument("vertex set: vertex " + std::to_string(v) +
                                  " out of range [0," + std::to_string(n) + ")");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  VertexSet keep = normalize_vertex_set(g.n(), s);
  Graph out(static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j]))
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

namespace {

struct MaxCliqueSearch {
  const std::vector<Bitset>& nbr;
  int best = 0;
  std::vector<int> best_clique;
  std::vector<int> current;

  void expand(Bitset p, Bitset x) {
    if (p.none() && x.none()) {
      if (static_cast<int>(current.size()) > best) {
        best = static_cast<int>(current.size());
        best_clique = current;
      }
      return;
    }
    if (static_cast<int>(current.size()) + p.count() <= best) return;

    // pivot with the most neighbours in p
    int pivot = -1, pivot_deg = -1;
    Bitset px = p;
    px |= x;
    px.for_each([&](int u) {
      int d = p.count_and(nbr[u]);
      if (d > pivot_deg) {
        pivot_deg = d;
        pivot = u;
      }
    });

    Bitset cand = p;
    cand.and_not(nbr[pivot]);
    std::vector<int> vs;
    cand.for_each([&](int v) { vs.push_back(v); });
    for (int v : vs) {
      Bitset p2 = p, x2 = x;
      p2 &= nbr[v];
      x2 &= nbr[v];
      current.push_back(v);
      expand(std::move(p2), std::move(x2));
      current.pop_back();
      p.reset(v);
      x.set(v);
    }
  }
};

}  // namespace

CliqueResult clique_number(const Graph& g) {
  if (g.n() < 1) throw std::invalid_argument("clique_number: empty graph");
  std::vector<Bitset> nbr;
  nbr.reserve(g.n());
  for (int v = 0; v < g.n(); ++v) nbr.push_back(g.neighbor_set(v));
  MaxCliqueSearch search{nbr, 0, {}, {}};
  Bitset p(g.n()), x(g.n());
  for (int v = 0; v < g.n(); ++v) p.set(v);
  search.expand(p, x);
  std::sort(search.best_clique.begin(), search.best_clique.end());
  return {search.best, std::move(search.best_clique)};
}

std::optional<std::vector<int>> shortest_cycle(const Graph& g) {
  const int n = g.n();
  int best = -1;
  int best_root = -1, best_u = -1, best_v = -1;
  std::vector<int> dist(n), parent(n);

  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (best != -1 && 2 * dist[u] >= best) break;
      for (int v : g.neighbors(u)) {
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (v != parent[u] && u != parent[v]) {
          int len = dist[u] + dist[v] + 1;
          if (best == -1 || len < best) {
            best = len;
            best_root = root;
            best_u = u;
            best_v = v;
          }
        }
      }
    }
  }
  if (best == -1) return std::nullopt;

  // Rebuild the winning BFS and trim the u/v root paths at their last common
  // vertex; below that point tree paths are disjoint, giving a simple cycle.
  std::fill(dist.begin(), dist.end(), -1);
  std::fill(parent.begin(), parent.end(), -1);
  std::queue<int> q;
  dist[best_root] = 0;
  q.push(best_root);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u)) {
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        parent[v] = u;
        q.push(v);
      }
    }
  }
  auto path_to_root = [&](int v) {
    std::vector<int> p;
    for (int x = v; x != -1; x = parent[x]) p.push_back(x);
    return p;  // v .. root
  };
  std::vector<int> pu = path_to_root(best_u);
  std::vector<int> pv = path_to_root(best_v);
  // strip the common suffix down to the lowest common ancestor
  while (pu.size() >= 2 && pv.size() >= 2 &&
         pu[pu.size() - 2] == pv[pv.size() - 2]) {
    pu.pop_back();
    pv.pop_back();
  }
  std::vector<int> cycle(pu.begin(), pu.end());          // u .. lca
  for (size_t i = pv.size() - 1; i-- > 0;) cycle.push_back(pv[i]);  // .. v
  return cycle;
}

std::optional<int> girth(const Graph& g) {
  auto c = shortest_cycle(g);
  if (!c) return std::nullopt;
  return static_cast<int>(c->size());
}

std::optional<std::array<int, 4>> find_induced_c4(const Graph& g) {
  const int n = g.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          bool ab = g.has_edge(a, b), ac = g.has_edge(a, c), ad = g.has_edge(a, d);
          bool bc = g.has_edge(b, c), bd = g.has_edge(b, d), cd = g.has_edge(c, d);
          if (ab && bc && cd && ad && !ac && !bd) return {{a, b, c, d}};
          if (ab && bd && cd && ac && !ad && !bc) return {{a, b, d, c}};
          if (ac && bc && bd && ad && !ab && !cd) return {{a, c, b, d}};
        }
  return std::nullopt;
}

bool has_induced_c4(const Graph& g) { return find_induced_c4(g).has_value(); }

bool induces_connected(const Graph& g, const Bitset& s) {
  int start = s.first();
  if (start == -1) return false;
  Bitset seen(g.n());
  seen.set(start);
  std::vector<int> stack{start};
  int visited = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u)) {
      if (s.test(v) && !seen.test(v)) {
        seen.set(v);
        ++visited;
        stack.push_back(v);
      }
    }
  }
  return visited == s.count();
}

}  // namespace ngtw

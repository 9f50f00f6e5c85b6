#include "corpus.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace ngtw::test {

namespace {

constexpr int kMaxCanonVertices = 11;  // C(11,2) = 55 bits fits a uint64

struct CanonSearch {
  int n = 0;
  std::array<uint32_t, kMaxCanonVertices> adj{};  // bitmask rows
  std::array<int, kMaxCanonVertices> class_at_pos{};
  std::array<int, kMaxCanonVertices> class_of{};
  std::array<int, kMaxCanonVertices> perm{};  // position -> original vertex
  std::array<uint32_t, kMaxCanonVertices> best{};
  std::array<uint32_t, kMaxCanonVertices> cur{};
  uint32_t used = 0;
  bool have_best = false;

  // lexicographic relation of cur[0..len) to best[0..len); best may have
  // moved since an ancestor was entered, so this is recomputed per node
  int prefix_cmp(int len) const {
    for (int q = 0; q < len; ++q)
      if (cur[q] != best[q]) return cur[q] > best[q] ? 1 : -1;
    return 0;
  }

  void dfs(int pos) {
    if (pos == n) {
      if (!have_best || prefix_cmp(n) > 0) {
        best = cur;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1) continue;
      if (class_of[v] != class_at_pos[pos]) continue;
      uint32_t block = 0;
      for (int q = 0; q < pos; ++q)
        if ((adj[v] >> perm[q]) & 1) block |= uint32_t{1} << q;
      cur[pos] = block;
      if (have_best && prefix_cmp(pos + 1) < 0) continue;
      perm[pos] = v;
      used |= uint32_t{1} << v;
      dfs(pos + 1);
      used &= ~(uint32_t{1} << v);
    }
  }
};

}  // namespace

uint64_t canonical_code(const Graph& g) {
  const int n = g.n();
  if (n > kMaxCanonVertices)
    throw std::invalid_argument("canonical_code: graph too large");

  CanonSearch s;
  s.n = n;
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) s.adj[v] |= uint32_t{1} << u;

  // vertex invariant: (degree, sorted neighbour degrees), ranked descending
  std::vector<std::vector<int>> inv(n);
  for (int v = 0; v < n; ++v) {
    inv[v].push_back(g.degree(v));
    std::vector<int> nd;
    for (int u : g.neighbors(v)) nd.push_back(g.degree(u));
    std::sort(nd.rbegin(), nd.rend());
    inv[v].insert(inv[v].end(), nd.begin(), nd.end());
  }
  std::vector<std::vector<int>> classes = inv;
  std::sort(classes.rbegin(), classes.rend());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  for (int v = 0; v < n; ++v)
    s.class_of[v] = static_cast<int>(
        std::find(classes.begin(), classes.end(), inv[v]) - classes.begin());
  int pos = 0;
  for (size_t c = 0; c < classes.size(); ++c)
    for (int v = 0; v < n; ++v)
      if (s.class_of[v] == static_cast<int>(c)) s.class_at_pos[pos++] = static_cast<int>(c);

  s.dfs(0);

  uint64_t code = 0;
  int offset = 0;
  for (int p = 0; p < n; ++p) {
    code |= static_cast<uint64_t>(s.best[p]) << offset;
    offset += p;
  }
  return code;
}

Graph graph_from_code(int n, uint64_t code) {
  Graph g(n);
  int t = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++t)
      if ((code >> t) & 1) g.add_edge(u, v);
  return g;
}

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("nonisomorphic_graphs: need 1 <= n <= 8");
  std::vector<uint64_t> codes{0};  // K_1
  for (int m = 2; m <= n; ++m) {
    std::unordered_set<uint64_t> next;
    for (uint64_t parent : codes) {
      Graph base = graph_from_code(m - 1, parent);
      for (uint32_t mask = 0; mask < (uint32_t{1} << (m - 1)); ++mask) {
        Graph g(m);
        for (int u = 0; u < m - 1; ++u)
          for (int v = u + 1; v < m - 1; ++v)
            if (base.has_edge(u, v)) g.add_edge(u, v);
        for (int u = 0; u < m - 1; ++u)
          if ((mask >> u) & 1) g.add_edge(u, m - 1);
        next.insert(canonical_code(g));
      }
    }
    codes.assign(next.begin(), next.end());
    std::sort(codes.begin(), codes.end());
  }
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (uint64_t code : codes) out.push_back(graph_from_code(n, code));
  return out;
}

}  // namespace ngtw::test

#include "ngtw/elimination.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ngtw {

namespace {

void require_permutation(const Graph& g, std::span<const int> order) {
  if (static_cast<int>(order.size()) != g.n())
    throw std::invalid_argument("elimination order: length " +
                                std::to_string(order.size()) +
                                " does not match vertex count " +
                                std::to_string(g.n()));
  std::vector<bool> seen(g.n(), false);
  for (int v : order) {
    if (v < 0 || v >= g.n() || seen[v])
      throw std::invalid_argument(
          "elimination order: not a permutation of the vertices");
    seen[v] = true;
  }
}

struct FillProcess {
  int width = 0;
  std::vector<Bitset> later;  // per position: filled later neighbourhood
  std::vector<Bitset> rows;   // final filled adjacency
};

FillProcess run_fill(const Graph& g, std::span<const int> order) {
  const int n = g.n();
  FillProcess fp;
  fp.rows.reserve(n);
  for (int v = 0; v < n; ++v) fp.rows.push_back(g.neighbor_set(v));
  Bitset remaining(n);
  for (int v = 0; v < n; ++v) remaining.set(v);

  fp.later.reserve(n);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    remaining.reset(v);
    Bitset nb = fp.rows[v];
    nb &= remaining;
    fp.width = std::max(fp.width, nb.count());
    // fill: the later neighbourhood becomes a clique
    nb.for_each([&](int u) {
      fp.rows[u] |= nb;
      fp.rows[u].reset(u);
    });
    fp.later.push_back(std::move(nb));
  }
  return fp;
}

}  // namespace

int fill_width(const Graph& g, std::span<const int> order) {
  require_permutation(g, order);
  return run_fill(g, order).width;
}

EliminationOrder make_elimination_order(const Graph& g, std::vector<int> order) {
  int w = fill_width(g, order);
  return {std::move(order), w};
}

Graph fill_in(const Graph& g, std::span<const int> order) {
  require_permutation(g, order);
  auto fp = run_fill(g, order);
  Graph out(g.n());
  for (int i = 0; i < g.n(); ++i) {
    int v = order[i];
    fp.later[i].for_each([&](int u) { out.add_edge(v, u); });
  }
  return out;
}

int TreeDecomposition::width() const {
  size_t mx = 0;
  for (const auto& b : bags) mx = std::max(mx, b.size());
  return static_cast<int>(mx) - 1;
}

TreeDecomposition decomposition_from_order(const Graph& g,
                                           const EliminationOrder& ord) {
  require_permutation(g, ord.order);
  const int n = g.n();
  auto fp = run_fill(g, ord.order);

  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[ord.order[i]] = i;

  // bag i = eliminated vertex + filled later neighbourhood; parent link goes
  // to the earliest-eliminated bag member, or to the next bag when empty.
  std::vector<VertexSet> bags(n);
  std::vector<int> parent(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = ord.order[i];
    bags[i].push_back(v);
    int first_pos = n;
    fp.later[i].for_each([&](int u) {
      bags[i].push_back(u);
      first_pos = std::min(first_pos, position[u]);
    });
    std::sort(bags[i].begin(), bags[i].end());
    if (first_pos < n)
      parent[i] = first_pos;
    else if (i + 1 < n)
      parent[i] = i + 1;
  }

  // merge bags that are subsets of their parent (or vice versa)
  std::vector<int> target(n);
  std::iota(target.begin(), target.end(), 0);
  auto find = [&](int x) {
    while (target[x] != x) x = target[x] = target[target[x]];
    return x;
  };
  bool merged = true;
  while (merged) {
    merged = false;
    for (int i = 0; i < n; ++i) {
      if (parent[i] < 0) continue;
      int a = find(i), b = find(parent[i]);
      if (a == b) continue;
      if (std::includes(bags[b].begin(), bags[b].end(), bags[a].begin(),
                        bags[a].end())) {
        target[a] = b;
        merged = true;
      } else if (std::includes(bags[a].begin(), bags[a].end(), bags[b].begin(),
                               bags[b].end())) {
        target[b] = a;
        merged = true;
      }
    }
  }

  TreeDecomposition td;
  std::vector<int> new_index(n, -1);
  for (int i = 0; i < n; ++i) {
    if (find(i) == i) {
      new_index[i] = static_cast<int>(td.bags.size());
      td.bags.push_back(bags[i]);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (parent[i] < 0) continue;
    int a = new_index[find(i)], b = new_index[find(parent[i])];
    if (a == b) continue;
    auto e = std::minmax(a, b);
    td.tree.emplace_back(e.first, e.second);
  }
  std::sort(td.tree.begin(), td.tree.end());
  td.tree.erase(std::unique(td.tree.begin(), td.tree.end()), td.tree.end());
  return td;
}

DecompositionCheck verify_decomposition(const Graph& g,
                                        const TreeDecomposition& td) {
  const int nb = static_cast<int>(td.bags.size());
  if (nb == 0) {
    if (g.n() == 0) return {true, ""};
    return {false, "vertex 0 in no bag"};
  }
  for (int i = 0; i < nb; ++i)
    for (int v : td.bags[i])
      if (!g.valid_vertex(v))
        return {false, "bag " + std::to_string(i) + " contains invalid vertex " +
                           std::to_string(v)};
  for (auto [a, b] : td.tree)
    if (a < 0 || a >= nb || b < 0 || b >= nb)
      return {false, "tree edge references missing bag"};

  // tree shape: |E| = |bags| - 1 and connected
  if (static_cast<int>(td.tree.size()) != nb - 1)
    return {false, "bag tree has " + std::to_string(td.tree.size()) +
                       " edges, expected " + std::to_string(nb - 1)};
  std::vector<std::vector<int>> adj(nb);
  for (auto [a, b] : td.tree) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  {
    std::vector<bool> seen(nb, false);
    std::vector<int> stack;
    if (nb > 0) {
      stack.push_back(0);
      seen[0] = true;
    }
    int count = nb > 0 ? 1 : 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
    }
    if (count != nb) return {false, "bag tree is disconnected"};
  }

  // vertex and edge coverage
  std::vector<std::vector<int>> bags_of(g.n());
  for (int i = 0; i < nb; ++i)
    for (int v : td.bags[i]) bags_of[v].push_back(i);
  for (int v = 0; v < g.n(); ++v)
    if (bags_of[v].empty())
      return {false, "vertex " + std::to_string(v) + " in no bag"};
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.has_edge(u, v)) continue;
      bool covered = false;
      for (int i : bags_of[u]) {
        if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) {
          covered = true;
          break;
        }
      }
      if (!covered)
        return {false, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                           " uncovered"};
    }

  // each vertex's bags induce a connected subtree
  for (int v = 0; v < g.n(); ++v) {
    const auto& mine = bags_of[v];
    std::vector<bool> in_set(nb, false);
    for (int i : mine) in_set[i] = true;
    std::vector<bool> seen(nb, false);
    std::vector<int> stack{mine[0]};
    seen[mine[0]] = true;
    size_t count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (in_set[y] && !seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
    }
    if (count != mine.size())
      return {false, "vertex " + std::to_string(v) + " bags not connected"};
  }
  return {true, ""};
}

bool is_ktree(const Graph& g, int k) {
  const int n = g.n();
  if (k < 0 || n < k + 1) return false;

  std::vector<Bitset> rows;
  rows.reserve(n);
  for (int v = 0; v < n; ++v) rows.push_back(g.neighbor_set(v));
  Bitset alive(n);
  for (int v = 0; v < n; ++v) alive.set(v);

  auto is_clique = [&](const Bitset& s) {
    bool ok = true;
    s.for_each([&](int u) {
      if (!ok) return;
      Bitset need = s;
      need.reset(u);
      if (!need.is_subset_of(rows[u])) ok = false;
    });
    return ok;
  };

  int remaining = n;
  while (remaining > k + 1) {
    int pick = -1;
    for (int v = alive.first(); v != -1; v = alive.next(v)) {
      Bitset nb = rows[v];
      nb &= alive;
      if (nb.count() == k && is_clique(nb)) {
        pick = v;
        break;
      }
    }
    if (pick == -1) return false;
    alive.reset(pick);
    --remaining;
  }
  // the k+1 survivors must form a clique
  Bitset everyone = alive;
  bool ok = true;
  everyone.for_each([&](int u) {
    if (!ok) return;
    Bitset nb = rows[u];
    nb &= alive;
    if (nb.count() != k) ok = false;
  });
  return ok;
}

std::optional<int> detect_ktree_k(const Graph& g) {
  const int n = g.n();
  if (n == 0) return std::nullopt;
  if (g.m() == n * (n - 1) / 2) return n - 1;  // complete, includes K_1
  int mindeg = n;
  for (int v = 0; v < n; ++v) mindeg = std::min(mindeg, g.degree(v));
  if (is_ktree(g, mindeg)) return mindeg;
  return std::nullopt;
}

Graph ktree_completion(const Graph& g, const EliminationOrder& ord) {
  require_permutation(g, ord.order);
  const int n = g.n();
  const int w = ord.width;
  if (n < w + 1)
    throw std::invalid_argument("ktree_completion: cannot pad, n < width + 1");

  auto fp = run_fill(g, ord.order);
  if (fp.width != w)
    throw std::invalid_argument(
        "ktree_completion: order width is inconsistent with its fill process");

  Graph h(n);
  // the last w+1 eliminated vertices form the base clique
  VertexSet base(ord.order.end() - (w + 1), ord.order.end());
  std::sort(base.begin(), base.end());
  for (size_t i = 0; i < base.size(); ++i)
    for (size_t j = i + 1; j < base.size(); ++j) h.add_edge(base[i], base[j]);

  std::vector<VertexSet> cliques{base};  // all (w+1)-cliques built so far
  for (int i = n - w - 2; i >= 0; --i) {
    int v = ord.order[i];
    VertexSet attach;
    fp.later[i].for_each([&](int u) { attach.push_back(u); });
    std::sort(attach.begin(), attach.end());
    if (static_cast<int>(attach.size()) < w) {
      // pad from the first built clique containing the current neighbourhood
      const VertexSet* host = nullptr;
      for (const auto& c : cliques) {
        if (std::includes(c.begin(), c.end(), attach.begin(), attach.end())) {
          host = &c;
          break;
        }
      }
      if (host == nullptr)
        throw std::logic_error("ktree_completion: no clique contains a fill set");
      for (int u : *host) {
        if (static_cast<int>(attach.size()) == w) break;
        if (!std::binary_search(attach.begin(), attach.end(), u)) {
          attach.insert(std::lower_bound(attach.begin(), attach.end(), u), u);
        }
      }
    }
    for (int u : attach) h.add_edge(v, u);
    VertexSet created = attach;
    created.insert(std::lower_bound(created.begin(), created.end(), v), v);
    cliques.push_back(std::move(created));
  }
  return h;
}

EliminationOrder width_upper_heuristic(const Graph& g, EliminationStrategy s) {
  const int n = g.n();
  if (n < 1) throw std::invalid_argument("width_upper_heuristic: empty graph");

  std::vector<Bitset> rows;
  rows.reserve(n);
  for (int v = 0; v < n; ++v) rows.push_back(g.neighbor_set(v));
  Bitset alive(n);
  for (int v = 0; v < n; ++v) alive.set(v);

  auto fill_cost = [&](int v) {
    std::vector<int> nb;
    Bitset b = rows[v];
    b &= alive;
    b.for_each([&](int u) { nb.push_back(u); });
    int missing = 0;
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        if (!rows[nb[i]].test(nb[j])) ++missing;
    return missing;
  };

  std::vector<int> order;
  order.reserve(n);
  int width = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    long long pick_score = -1;
    for (int v = alive.first(); v != -1; v = alive.next(v)) {
      Bitset b = rows[v];
      b &= alive;
      long long score = s == EliminationStrategy::kMinDegree
                            ? b.count()
                            : fill_cost(v);
      if (pick == -1 || score < pick_score) {
        pick = v;
        pick_score = score;
      }
    }
    alive.reset(pick);
    Bitset nb = rows[pick];
    nb &= alive;
    width = std::max(width, nb.count());
    nb.for_each([&](int u) {
      rows[u] |= nb;
      rows[u].reset(u);
    });
    order.push_back(pick);
  }
  return {std::move(order), width};
}

}  // namespace ngtw

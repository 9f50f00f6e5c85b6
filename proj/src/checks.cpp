#include "ngtw/checks.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ngtw/generators.hpp"
#include "ngtw/graph6.hpp"
#include "ngtw/rng.hpp"

namespace ngtw {

namespace {

nlohmann::json to_json_array(const std::vector<int>& v) {
  return nlohmann::json(v);
}

nlohmann::json bramble_json(const Bramble& b) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : b.elements) arr.push_back(e);
  return arr;
}

void require(bool condition, const std::string& what) {
  if (!condition) throw std::logic_error("certificate verification failed: " + what);
}

bool is_spanning_subgraph(const Graph& sub, const Graph& super) {
  if (sub.n() != super.n()) return false;
  for (int u = 0; u < sub.n(); ++u)
    for (int v = u + 1; v < sub.n(); ++v)
      if (sub.has_edge(u, v) && !super.has_edge(u, v)) return false;
  return true;
}

Report base_report(const std::string& check, const Graph& g,
                   const CheckOptions& opt) {
  Report r;
  r.check = check;
  r.graph6_inputs = {emit_graph6(g)};
  r.n = g.n();
  r.seed = opt.seed;
  return r;
}

}  // namespace

Coloring greedy_union_coloring(const Graph& g1, const Graph& g2) {
  Graph u = graph_union(g1, g2);
  const int n = u.n();

  std::vector<Bitset> rows;
  rows.reserve(n);
  for (int v = 0; v < n; ++v) rows.push_back(u.neighbor_set(v));
  Bitset alive(n);
  for (int v = 0; v < n; ++v) alive.set(v);

  std::vector<int> removal;
  removal.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1, pick_deg = n + 1;
    for (int v = alive.first(); v != -1; v = alive.next(v)) {
      int d = rows[v].count_and(alive);
      if (d < pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    alive.reset(pick);
    removal.push_back(pick);
  }

  Coloring c;
  c.color.assign(n, -1);
  for (int i = n - 1; i >= 0; --i) {
    int v = removal[i];
    std::vector<bool> used(n + 1, false);
    for (int w : u.neighbors(v))
      if (c.color[w] >= 0) used[c.color[w]] = true;
    int col = 0;
    while (used[col]) ++col;
    c.color[v] = col;
    c.count = std::max(c.count, col + 1);
  }
  return c;
}

bool coloring_is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != g.n()) return false;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.has_edge(u, v) && c.color[u] == c.color[v]) return false;
  return true;
}

std::optional<int> qnk_parameter(const Graph& g) {
  const int n = g.n();
  if (n < 1) return std::nullopt;
  if (g.m() == n * (n - 1) / 2) return n - 1;  // complete graphs, incl. K_1

  Bitset universal(n);
  int k = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) {
      universal.set(v);
      ++k;
    }
  if (k == 0) return std::nullopt;
  for (int v = 0; v < n; ++v) {
    if (universal.test(v)) continue;
    if (!(g.neighbor_set(v) == universal)) return std::nullopt;
  }
  return k;
}

ComplementCover complement_cover(const Graph& g) {
  const int n = g.n();
  auto kopt = detect_ktree_k(g);
  if (!kopt)
    throw std::invalid_argument("complement_cover: input is not a k-tree");
  const int k = *kopt;
  if (qnk_parameter(g))
    throw std::invalid_argument(
        "complement_cover: no qualifying clique exists for the clique-plus-"
        "pendants family");

  // lexicographically least (k+1)-clique whose members all have a neighbour
  // outside the clique
  VertexSet clique;
  VertexSet chosen;
  auto qualifies = [&](const VertexSet& c) {
    for (int x : c) {
      bool outside = false;
      for (int w : g.neighbors(x))
        if (!std::binary_search(c.begin(), c.end(), w)) {
          outside = true;
          break;
        }
      if (!outside) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(chosen.size()) == k + 1) {
      if (qualifies(chosen)) {
        clique = chosen;
        return true;
      }
      return false;
    }
    for (int v = start; v < n; ++v) {
      bool adj_to_all = true;
      for (int u : chosen)
        if (!g.has_edge(u, v)) {
          adj_to_all = false;
          break;
        }
      if (!adj_to_all) continue;
      chosen.push_back(v);
      if (self(self, v + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs(dfs, 0))
    throw std::logic_error(
        "complement_cover: no qualifying clique in a non-degenerate k-tree");

  std::vector<std::pair<int, int>> skipped;
  for (int x : clique) {
    int y = -1;
    for (int w : g.neighbors(x))
      if (!std::binary_search(clique.begin(), clique.end(), w)) {
        y = w;
        break;
      }
    skipped.emplace_back(x, y);
  }

  VertexSet rest;
  for (int v = 0; v < n; ++v)
    if (!std::binary_search(clique.begin(), clique.end(), v))
      rest.push_back(v);

  Graph host(n);
  for (size_t i = 0; i < rest.size(); ++i)
    for (size_t j = i + 1; j < rest.size(); ++j)
      host.add_edge(rest[i], rest[j]);
  for (auto [x, y] : skipped)
    for (int a : rest)
      if (a != y) host.add_edge(x, a);

  require(is_ktree(host, n - k - 2), "complement cover is not an (n-k-2)-tree");
  require(is_spanning_subgraph(complement(g), host),
          "complement cover does not contain the complement");
  return {std::move(host), std::move(clique), std::move(skipped)};
}

UnionCliqueWitness union_clique_witness(int k, int n) {
  if (k < 1) throw std::invalid_argument("union_clique_witness: k must be >= 1");
  if (n < k + 3)
    throw std::invalid_argument(
        "union_clique_witness: need n >= k+3 so the k-tree avoids the "
        "clique-plus-pendants family");
  Graph g1(n);  // path power: i ~ j iff |i-j| <= k
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= std::min(n - 1, i + k); ++j) g1.add_edge(i, j);
  ComplementCover cover = complement_cover(g1);

  Graph u = graph_union(g1, cover.host);
  require(u.m() == n * (n - 1) / 2, "witness union is not complete");
  VertexSet all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  return {std::move(g1), std::move(cover.host), std::move(all)};
}

namespace {

// The certified chain shared by the sum and clique-free checks: the edge
// bramble of the complement of a C4-free graph h with clique number < k has
// order n - omega(h) >= n-k+1. Returns the pipeline fragment as JSON.
// `h_complement` must be complement(h).
nlohmann::json cliquefree_bramble_json(const Graph& h_complement, int omega,
                                       int order_bound, int* order_out) {
  nlohmann::json j;
  if (h_complement.m() == 0) {
    j["bramble"] = nullptr;
    j["bramble_order"] = nullptr;
    j["hitting_set"] = nullptr;
    if (order_out) *order_out = -1;
    return j;
  }
  Bramble b = edge_bramble(h_complement);
  auto check = verify_bramble(h_complement, b);
  require(check.ok, "edge bramble of a C4-free graph's complement invalid: " +
                        check.violation);
  BrambleOrder bo = bramble_order(h_complement, b);
  require(bo.order == h_complement.n() - omega,
          "edge bramble order disagrees with the clique number");
  require(bo.order >= order_bound, "edge bramble order below its bound");
  j["bramble"] = bramble_json(b);
  j["bramble_order"] = bo.order;
  j["hitting_set"] = bo.hitting_set.members;
  if (order_out) *order_out = bo.order;
  return j;
}

}  // namespace

Report check_complement_sum(const Graph& g, const CheckOptions& opt) {
  if (g.n() < 1)
    throw std::invalid_argument("check main: graphs must have n >= 1");
  Report r = base_report("main", g, opt);
  const int n = g.n();
  const Graph co = complement(g);
  r.quantities["bound"] = n - 2;

  if (n > opt.cap && !opt.heuristic_fallback)
    throw capability_error("check main: n = " + std::to_string(n) +
                           " exceeds cap " + std::to_string(opt.cap) +
                           "; pass --heuristic for bound-only checking");

  if (n > opt.cap) {
    // bound-only: heuristic widths are upper bounds, so a violated
    // inequality is still a genuine violation, but success proves nothing
    EliminationOrder o1 = width_upper_heuristic(g, EliminationStrategy::kMinFill);
    EliminationOrder o2 = width_upper_heuristic(co, EliminationStrategy::kMinFill);
    int sum = o1.width + o2.width;
    r.quantities["treewidth_upper"] = o1.width;
    r.quantities["treewidth_complement_upper"] = o2.width;
    r.quantities["sum_upper"] = sum;
    r.certificates["elimination_order"] = to_json_array(o1.order);
    r.certificates["elimination_order_complement"] = to_json_array(o2.order);
    r.certificates["bound_only"] = true;
    r.verdict = sum < n - 2 ? "fail" : "inconclusive";
    return r;
  }

  TreewidthResult t1 = treewidth_exact(g, opt.cap);
  TreewidthResult t2 = treewidth_exact(co, opt.cap);
  const int sum = t1.width + t2.width;
  r.quantities["treewidth"] = t1.width;
  r.quantities["treewidth_complement"] = t2.width;
  r.quantities["sum"] = sum;
  r.quantities["slack"] = sum - (n - 2);
  r.certificates["elimination_order"] = to_json_array(t1.order.order);
  r.certificates["elimination_order_complement"] = to_json_array(t2.order.order);

  // the proof pipeline: embed g in a k-tree H (k = tw(g)), which is chordal
  // with clique number k+1, and apply the clique-free bound to H
  const int k = t1.width;
  Graph h = ktree_completion(g, t1.order);
  require(is_ktree(h, k), "completion is not a k-tree of the order's width");
  require(is_spanning_subgraph(g, h), "completion does not contain its graph");
  require(!has_induced_c4(h), "completion has an induced 4-cycle");
  CliqueResult h_clique = clique_number(h);
  require(h_clique.size == k + 1, "completion clique number is not width+1");

  nlohmann::json pipeline;
  pipeline["ktree_graph6"] = emit_graph6(h);
  pipeline["ktree_width"] = k;
  pipeline["clique_number"] = h_clique.size;
  pipeline["tw_complement_bound"] = n - k - 2;
  int order = -1;
  pipeline.update(
      cliquefree_bramble_json(complement(h), h_clique.size, n - k - 1, &order));
  if (order >= 0)
    require(t2.width >= order - 1,
            "complement treewidth below the bramble certificate");
  r.certificates["pipeline"] = std::move(pipeline);

  r.verdict = sum >= n - 2 ? "pass" : "fail";
  return r;
}

Report check_cliquefree_bound(const Graph& g, std::optional<int> k_opt,
                              const CheckOptions& opt) {
  if (g.n() < 1)
    throw std::invalid_argument("check lemma2: graphs must have n >= 1");
  Report r = base_report("lemma2", g, opt);
  const int n = g.n();

  CliqueResult cq = clique_number(g);
  const int k = k_opt.value_or(cq.size + 1);
  r.quantities["k"] = k;
  r.quantities["clique_number"] = cq.size;
  r.quantities["tw_bound"] = n - k;
  r.quantities["order_bound"] = n - k + 1;
  r.certificates["clique"] = cq.witness;

  if (auto c4 = find_induced_c4(g)) {
    r.verdict = "inapplicable";
    r.quantities["inapplicable_reason"] = "induced 4-cycle";
    r.certificates["induced_c4"] = std::vector<int>(c4->begin(), c4->end());
    return r;
  }
  if (cq.size >= k) {
    r.verdict = "inapplicable";
    r.quantities["inapplicable_reason"] = "clique of size k";
    return r;
  }

  const Graph co = complement(g);
  TreewidthResult t2 = treewidth_exact(co, opt.cap);
  r.quantities["treewidth_complement"] = t2.width;
  r.certificates["elimination_order_complement"] = to_json_array(t2.order.order);

  int order = -1;
  r.certificates.update(
      cliquefree_bramble_json(co, cq.size, n - k + 1, &order));
  r.quantities["bramble_order"] =
      order >= 0 ? nlohmann::json(order) : nlohmann::json(nullptr);

  bool ok = t2.width >= n - k && (order < 0 || order >= n - k + 1);
  r.verdict = ok ? "pass" : "fail";
  return r;
}

Report check_girth_bound(const Graph& g, const CheckOptions& opt) {
  if (g.n() < 1)
    throw std::invalid_argument("check girth: graphs must have n >= 1");
  Report r = base_report("girth", g, opt);
  const int n = g.n();
  r.quantities["bound"] = n - 3;

  auto cycle = shortest_cycle(g);
  r.quantities["girth"] =
      cycle ? nlohmann::json(static_cast<int>(cycle->size())) : nlohmann::json(nullptr);
  if (cycle && static_cast<int>(cycle->size()) < 5) {
    r.verdict = "inapplicable";
    r.quantities["inapplicable_reason"] = "girth below 5";
    r.certificates["short_cycle"] = *cycle;
    return r;
  }

  const Graph co = complement(g);
  TreewidthResult t2 = treewidth_exact(co, opt.cap);
  r.quantities["treewidth_complement"] = t2.width;
  r.certificates["elimination_order_complement"] = to_json_array(t2.order.order);

  // girth >= 5 means triangle- and C4-free, so the k=3 clique-free chain applies
  CliqueResult cq = clique_number(g);
  require(cq.size <= 2, "girth >= 5 graph has a triangle");
  int order = -1;
  r.certificates.update(cliquefree_bramble_json(co, cq.size, n - 2, &order));
  r.quantities["bramble_order"] =
      order >= 0 ? nlohmann::json(order) : nlohmann::json(nullptr);

  bool ok = t2.width >= n - 3 && (order < 0 || order >= n - 2);
  r.verdict = ok ? "pass" : "fail";
  return r;
}

Report check_ktree_sum(const Graph& g, const CheckOptions& opt) {
  if (g.n() < 1)
    throw std::invalid_argument("check ktree: graphs must have n >= 1");
  Report r = base_report("ktree", g, opt);
  const int n = g.n();

  auto kopt = detect_ktree_k(g);
  if (!kopt) {
    r.verdict = "inapplicable";
    r.quantities["inapplicable_reason"] = "not a k-tree for any k";
    return r;
  }
  const int k = *kopt;
  r.quantities["k"] = k;

  TreewidthResult t1 = treewidth_exact(g, opt.cap);
  TreewidthResult t2 = treewidth_exact(complement(g), opt.cap);
  require(t1.width == k, "treewidth of a k-tree is not k");
  const int sum = t1.width + t2.width;
  auto q = qnk_parameter(g);
  const int expected = q ? n - 1 : n - 2;

  r.quantities["treewidth"] = t1.width;
  r.quantities["treewidth_complement"] = t2.width;
  r.quantities["sum"] = sum;
  r.quantities["expected_sum"] = expected;
  r.quantities["qnk"] = q ? nlohmann::json(*q) : nlohmann::json(nullptr);
  r.certificates["elimination_order"] = to_json_array(t1.order.order);
  r.certificates["elimination_order_complement"] = to_json_array(t2.order.order);

  if (!q) {
    ComplementCover cover = complement_cover(g);
    require(t2.width == n - k - 2,
            "complement treewidth of a non-Q k-tree is not n-k-2");
    nlohmann::json cj;
    cj["host_graph6"] = emit_graph6(cover.host);
    cj["host_width"] = n - k - 2;
    cj["clique"] = cover.clique;
    nlohmann::json pairs = nlohmann::json::array();
    for (auto [x, y] : cover.skipped) pairs.push_back({x, y});
    cj["skipped"] = std::move(pairs);
    r.certificates["complement_cover"] = std::move(cj);
  }

  r.verdict = sum == expected ? "pass" : "fail";
  return r;
}

Report check_union_clique(const Graph& g1, const Graph& g2,
                          const CheckOptions& opt) {
  if (g1.n() != g2.n())
    throw std::invalid_argument("check prop-clique: vertex counts differ");
  if (g1.n() < 1)
    throw std::invalid_argument("check prop-clique: graphs must have n >= 1");
  Report r;
  r.check = "prop-clique";
  r.graph6_inputs = {emit_graph6(g1), emit_graph6(g2)};
  r.n = g1.n();
  r.seed = opt.seed;

  TreewidthResult t1 = treewidth_exact(g1, opt.cap);
  TreewidthResult t2 = treewidth_exact(g2, opt.cap);
  CliqueResult cq = clique_number(graph_union(g1, g2));
  const int bound = t1.width + t2.width + 2;

  r.quantities["treewidth_1"] = t1.width;
  r.quantities["treewidth_2"] = t2.width;
  r.quantities["clique_number_union"] = cq.size;
  r.quantities["bound"] = bound;
  r.certificates["elimination_order_1"] = to_json_array(t1.order.order);
  r.certificates["elimination_order_2"] = to_json_array(t2.order.order);
  r.certificates["union_clique"] = cq.witness;

  r.verdict = cq.size <= bound ? "pass" : "fail";
  return r;
}

Report check_union_coloring(const Graph& g1, const Graph& g2,
                            const CheckOptions& opt) {
  if (g1.n() != g2.n())
    throw std::invalid_argument("check coloring: vertex counts differ");
  if (g1.n() < 1)
    throw std::invalid_argument("check coloring: graphs must have n >= 1");
  Report r;
  r.check = "coloring";
  r.graph6_inputs = {emit_graph6(g1), emit_graph6(g2)};
  r.n = g1.n();
  r.seed = opt.seed;

  TreewidthResult t1 = treewidth_exact(g1, opt.cap);
  TreewidthResult t2 = treewidth_exact(g2, opt.cap);
  Coloring col = greedy_union_coloring(g1, g2);
  require(coloring_is_proper(graph_union(g1, g2), col),
          "greedy union coloring is improper");
  const int k = std::max(t1.width, t2.width);
  const int bound = k >= 1 ? 4 * k : 1;

  r.quantities["treewidth_1"] = t1.width;
  r.quantities["treewidth_2"] = t2.width;
  r.quantities["colors"] = col.count;
  r.quantities["bound"] = bound;
  r.certificates["coloring"] = col.color;
  r.certificates["elimination_order_1"] = to_json_array(t1.order.order);
  r.certificates["elimination_order_2"] = to_json_array(t2.order.order);

  r.verdict = col.count <= bound ? "pass" : "fail";
  return r;
}

Report random_graph_smoke(int n, int trials, uint64_t seed,
                          const CheckOptions& opt) {
  if (n < 1 || n > opt.cap)
    throw capability_error("smoke: need 1 <= n <= cap for exact treewidth");
  if (trials < 1) throw std::invalid_argument("smoke: trials must be >= 1");

  Report r;
  r.check = "gnp-smoke";
  r.n = n;
  r.seed = seed;
  r.quantities["trials"] = trials;
  r.quantities["p"] = 0.5;
  r.quantities["lower_bound"] = n - 2;
  r.quantities["upper_bound"] = 2 * n - 2;

  std::map<int, int> hist;
  int min_sum = 2 * n, max_sum = -1;
  bool ok = true;
  for (int t = 0; t < trials; ++t) {
    Graph g = gen_gnp(n, 0.5, derive_seed(seed, t));
    r.graph6_inputs.push_back(emit_graph6(g));
    int sum = treewidth_exact(g, opt.cap).width +
              treewidth_exact(complement(g), opt.cap).width;
    ++hist[sum];
    min_sum = std::min(min_sum, sum);
    max_sum = std::max(max_sum, sum);
    if (sum < n - 2 || sum > 2 * n - 2) ok = false;
  }
  nlohmann::json dist;
  for (auto [sum, count] : hist) dist[std::to_string(sum)] = count;
  r.quantities["distribution"] = std::move(dist);
  r.quantities["min_sum"] = min_sum;
  r.quantities["max_sum"] = max_sum;
  r.verdict = ok ? "pass" : "fail";
  return r;
}

int check_arity(const std::string& token) {
  if (token == "main" || token == "lemma2" || token == "girth" ||
      token == "ktree")
    return 1;
  if (token == "prop-clique" || token == "coloring") return 2;
  throw std::invalid_argument("unknown check '" + token + "'");
}

Report run_check(const std::string& token, const CheckInput& input,
                 const CheckOptions& opt) {
  CheckOptions o = opt;
  o.seed = input.seed ? input.seed : opt.seed;
  if (static_cast<int>(input.graphs.size()) != check_arity(token))
    throw std::invalid_argument("check '" + token + "' expects " +
                                std::to_string(check_arity(token)) +
                                " graph(s)");
  if (token == "main") return check_complement_sum(input.graphs[0], o);
  if (token == "lemma2") return check_cliquefree_bound(input.graphs[0], input.k, o);
  if (token == "girth") return check_girth_bound(input.graphs[0], o);
  if (token == "ktree") return check_ktree_sum(input.graphs[0], o);
  if (token == "prop-clique")
    return check_union_clique(input.graphs[0], input.graphs[1], o);
  return check_union_coloring(input.graphs[0], input.graphs[1], o);
}

}  // namespace ngtw

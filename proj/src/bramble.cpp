#include "ngtw/bramble.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ngtw/treewidth.hpp"

namespace ngtw {

Bramble edge_bramble(const Graph& h) {
  Bramble b;
  for (int u = 0; u < h.n(); ++u)
    for (int v = u + 1; v < h.n(); ++v)
      if (h.has_edge(u, v)) b.elements.push_back({u, v});
  if (b.elements.empty())
    throw std::invalid_argument("edge_bramble: host graph has no edges");
  return b;
}

namespace {

bool sets_touch(const Graph& h, const Bitset& a, const Bitset& b) {
  if (a.intersects(b)) return true;
  bool touched = false;
  a.for_each([&](int u) {
    if (touched) return;
    if (h.neighbor_set(u).intersects(b)) touched = true;
  });
  return touched;
}

std::vector<Bitset> element_bitsets(const Graph& h, const Bramble& b) {
  std::vector<Bitset> out;
  out.reserve(b.elements.size());
  for (const auto& e : b.elements) {
    Bitset s(h.n());
    for (int v : e) {
      if (!h.valid_vertex(v))
        throw std::invalid_argument("bramble: vertex " + std::to_string(v) +
                                    " out of range");
      s.set(v);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

BrambleCheck verify_bramble(const Graph& h, const Bramble& b) {
  auto sets = element_bitsets(h, b);
  for (size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].none())
      return {false, "element " + std::to_string(i) + " is empty"};
    if (!induces_connected(h, sets[i]))
      return {false, "element " + std::to_string(i) + " is disconnected"};
  }
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = i + 1; j < sets.size(); ++j)
      if (!sets_touch(h, sets[i], sets[j]))
        return {false, "elements " + std::to_string(i) + " and " +
                           std::to_string(j) + " do not touch"};
  return {true, ""};
}

namespace {

struct HittingSetSearch {
  const std::vector<Bitset>& elements;   // over vertices
  std::vector<Bitset> covers;            // vertex -> elements it hits
  int n_elements;
  int best_size;
  Bitset best_set;
  Bitset chosen;

  HittingSetSearch(const Graph& h, const std::vector<Bitset>& elems)
      : elements(elems),
        n_elements(static_cast<int>(elems.size())),
        best_size(h.n() + 1),
        best_set(h.n()),
        chosen(h.n()) {
    covers.assign(h.n(), Bitset(n_elements));
    for (int e = 0; e < n_elements; ++e)
      elements[e].for_each([&](int v) { covers[v].set(e); });
  }

  // greedy count of pairwise-disjoint unhit elements; each needs its own
  // new vertex, so it lower-bounds the remaining cost
  int disjoint_bound(const Bitset& hit) {
    Bitset used(elements.empty() ? 0 : elements[0].size());
    int count = 0;
    for (int e = 0; e < n_elements; ++e) {
      if (hit.test(e)) continue;
      if (!elements[e].intersects(used)) {
        ++count;
        used |= elements[e];
      }
    }
    return count;
  }

  void dfs(int chosen_count, const Bitset& hit) {
    if (chosen_count + disjoint_bound(hit) >= best_size) return;
    int first_unhit = -1;
    for (int e = 0; e < n_elements; ++e)
      if (!hit.test(e)) {
        first_unhit = e;
        break;
      }
    if (first_unhit == -1) {
      best_size = chosen_count;
      best_set = chosen;
      return;
    }
    std::vector<int> vs;
    elements[first_unhit].for_each([&](int v) { vs.push_back(v); });
    for (int v : vs) {
      Bitset hit2 = hit;
      hit2 |= covers[v];
      chosen.set(v);
      dfs(chosen_count + 1, hit2);
      chosen.reset(v);
    }
  }
};

}  // namespace

BrambleOrder bramble_order(const Graph& h, const Bramble& b) {
  if (b.elements.empty())
    throw std::invalid_argument("bramble_order: empty bramble");
  auto sets = element_bitsets(h, b);
  for (size_t i = 0; i < sets.size(); ++i)
    if (sets[i].none())
      throw std::invalid_argument("bramble_order: element " +
                                  std::to_string(i) + " is empty");

  HittingSetSearch search(h, sets);
  // greedy warm start: repeatedly take the vertex hitting the most
  Bitset hit(search.n_elements);
  Bitset greedy(h.n());
  int greedy_size = 0;
  while (hit.count() < search.n_elements) {
    int pick = -1, pick_gain = -1;
    for (int v = 0; v < h.n(); ++v) {
      Bitset gain = search.covers[v];
      gain.and_not(hit);
      int c = gain.count();
      if (c > pick_gain) {
        pick_gain = c;
        pick = v;
      }
    }
    greedy.set(pick);
    ++greedy_size;
    hit |= search.covers[pick];
  }
  search.best_size = greedy_size;
  search.best_set = greedy;

  search.dfs(0, Bitset(search.n_elements));

  HittingSet hs;
  search.best_set.for_each([&](int v) { hs.members.push_back(v); });
  return {search.best_size, std::move(hs)};
}

bool lower_bound_check(const Graph& g, const Bramble& b, int ord) {
  auto check = verify_bramble(g, b);
  if (!check.ok)
    throw std::invalid_argument("lower_bound_check: invalid bramble (" +
                                check.violation + ")");
  auto bo = bramble_order(g, b);
  if (bo.order < ord)
    throw std::invalid_argument("lower_bound_check: bramble order " +
                                std::to_string(bo.order) +
                                " is below the claimed " + std::to_string(ord));
  return treewidth_exact(g).width >= ord - 1;
}

}  // namespace ngtw

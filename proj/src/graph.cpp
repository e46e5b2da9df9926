#include "estar/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace estar {

namespace {

std::pair<int, int> norm(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

}  // namespace

int Graph::min_degree() const {
  int d = n == 0 ? 0 : degree(0);
  for (int v = 1; v < n; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::edge_id(int u, int v) const {
  auto key = norm(u, v);
  for (int e = 0; e < m(); ++e)
    if (edges[e] == key) return e;
  return -1;
}

Bitset Graph::incident_edges(int v) const {
  Bitset b(m());
  for (int e = 0; e < m(); ++e)
    if (edges[e].first == v || edges[e].second == v) b.set(e);
  return b;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) throw InputError("negative vertex count");
  Graph g;
  g.n = n;
  g.adj.assign(n, Bitset(n));
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : pairs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," +
                       std::to_string(v) + ")");
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    auto key = norm(u, v);
    if (!seen.insert(key).second)
      throw InputError("duplicate edge (" + std::to_string(key.first) + "," +
                       std::to_string(key.second) + ")");
    g.edges.push_back(key);
    g.adj[u].set(v);
    g.adj[v].set(u);
  }
  return g;
}

Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (!g.has_edge(u, v)) pairs.emplace_back(u, v);
  Graph out = build_graph(g.n, pairs);
  out.label_offset = g.label_offset;
  return out;
}

std::pair<Graph, std::vector<int>> line_graph(const Graph& g) {
  if (g.m() == 0) throw DomainError("line graph of an edgeless graph");
  std::vector<std::pair<int, int>> pairs;
  for (int e = 0; e < g.m(); ++e)
    for (int f = e + 1; f < g.m(); ++f) {
      auto [a, b] = g.edges[e];
      auto [c, d] = g.edges[f];
      if (a == c || a == d || b == c || b == d) pairs.emplace_back(e, f);
    }
  Graph lg = build_graph(g.m(), pairs);
  std::vector<int> id_map(g.m());
  std::iota(id_map.begin(), id_map.end(), 0);
  return {lg, id_map};
}

Graph circulant(int n, const std::vector<int>& distances) {
  if (n < 3) throw InputError("circulant needs n >= 3");
  std::set<int> ds;
  for (int d : distances) {
    if (d < 1 || d > n / 2) throw InputError("circulant distance out of range: " + std::to_string(d));
    ds.insert(d);
  }
  std::vector<std::pair<int, int>> pairs;
  std::set<std::pair<int, int>> seen;
  for (int d : ds)
    for (int i = 0; i < n; ++i) {
      auto key = norm(i, (i + d) % n);
      if (seen.insert(key).second) pairs.push_back(key);
    }
  return build_graph(n, pairs);
}

std::pair<Graph, HamiltonianLabeling> gstar() {
  // 1-based construction, stored 0-based.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= 9; ++i) pairs.emplace_back(i - 1, i % 9);  // cycle 1..9,1
  const std::pair<int, int> chords[] = {{1, 6}, {2, 5}, {3, 7}, {4, 9}, {5, 8}};
  for (auto [u, v] : chords) pairs.emplace_back(u - 1, v - 1);
  Graph g = build_graph(9, pairs);
  g.label_offset = 1;
  std::vector<int> order(9);
  std::iota(order.begin(), order.end(), 0);
  return {g, labeling_from_order(g, order)};
}

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges)
    if ((g.adj[u] & g.adj[v]).any()) return false;
  return true;
}

bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  Bitset seen(g.n);
  std::vector<int> stack = {0};
  seen.set(0);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = g.adj[v].find_first(); u >= 0; u = g.adj[v].find_next(u))
      if (!seen.test(u)) {
        seen.set(u);
        stack.push_back(u);
      }
  }
  return seen.count() == g.n;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n, -1);
  for (int s = 0; s < g.n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = g.adj[v].find_first(); u >= 0; u = g.adj[v].find_next(u)) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Bitset star(const Graph& g, int v) {
  if (v < 0 || v >= g.n) throw InputError("vertex out of range");
  return g.incident_edges(v);
}

bool is_maximal_star(const Graph& g, int v) {
  int d = g.degree(v);
  if (d >= 2) return true;
  if (d == 1) {
    int w = g.adj[v].find_first();
    return g.degree(w) == 1;
  }
  return g.m() == 0;
}

std::vector<Bitset> maximal_star_sets(const Graph& g) {
  std::vector<Bitset> out;
  for (int v = 0; v < g.n; ++v)
    if (is_maximal_star(g, v)) out.push_back(star(g, v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HamiltonianLabeling labeling_from_order(const Graph& g, const std::vector<int>& order) {
  HamiltonianLabeling lab;
  lab.order = order;
  const int n = g.n;
  if (static_cast<int>(order.size()) != n) throw DomainError("labeling order has wrong length");
  Bitset seen(n);
  for (int v : order) {
    if (v < 0 || v >= n || seen.test(v)) throw DomainError("labeling order is not a permutation");
    seen.set(v);
  }
  Bitset cyc(g.m());
  for (int t = 0; t < n; ++t) {
    int e = g.edge_id(order[t], order[(t + 1) % n]);
    if (e < 0) throw DomainError("labeling order is not a cycle in the graph");
    lab.cycle_edges.push_back(e);
    cyc.set(e);
  }
  for (int e = 0; e < g.m(); ++e)
    if (!cyc.test(e)) lab.chords.push_back(e);
  return lab;
}

std::optional<HamiltonianLabeling> natural_labeling(const Graph& g) {
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  try {
    return labeling_from_order(g, order);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

void validate_labeling(const Graph& g, const HamiltonianLabeling& lab) {
  HamiltonianLabeling rebuilt = labeling_from_order(g, lab.order);
  if (rebuilt.cycle_edges != lab.cycle_edges || rebuilt.chords != lab.chords)
    throw DomainError("labeling edge partition inconsistent with its order");
}

}  // namespace estar

#include "estar/matching.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace estar {

namespace {

// Classic O(V^3) blossom implementation over adjacency lists. `skip` removes
// vertices from consideration, so the same machinery answers the
// "perfect matching avoiding a vertex set" queries used by extendability.
struct Blossom {
  int n;
  std::vector<std::vector<int>> g;
  std::vector<int> mate, p, base;
  std::vector<bool> used, blossom, skip;

  explicit Blossom(const Graph& gr, const Bitset* removed = nullptr)
      : n(gr.n), g(gr.n), mate(gr.n, -1), p(gr.n), base(gr.n), used(gr.n), blossom(gr.n),
        skip(gr.n, false) {
    if (removed)
      for (int v = removed->find_first(); v >= 0; v = removed->find_next(v)) skip[v] = true;
    for (auto [u, v] : gr.edges)
      if (!skip[u] && !skip[v]) {
        g[u].push_back(v);
        g[v].push_back(u);
      }
  }

  int lca(int a, int b) {
    std::vector<bool> mark(n, false);
    for (int v = a;;) {
      v = base[v];
      mark[v] = true;
      if (mate[v] == -1) break;
      v = p[mate[v]];
    }
    for (int v = b;;) {
      v = base[v];
      if (mark[v]) return v;
      v = p[mate[v]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = true;
      blossom[base[mate[v]]] = true;
      p[v] = child;
      child = mate[v];
      v = p[mate[v]];
    }
  }

  int find_path(int root) {
    std::fill(used.begin(), used.end(), false);
    std::fill(p.begin(), p.end(), -1);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g[v]) {
        if (base[v] == base[to] || mate[v] == to) continue;
        if (to == root || (mate[to] != -1 && p[mate[to]] != -1)) {
          int curbase = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), false);
          mark_path(v, curbase, to);
          mark_path(to, curbase, v);
          for (int i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = curbase;
              if (!used[i]) {
                used[i] = true;
                q.push(i);
              }
            }
        } else if (p[to] == -1) {
          p[to] = v;
          if (mate[to] == -1) {
            // Augment along the alternating path that ends here.
            for (int u = to; u != -1;) {
              int pv = p[u], ppv = mate[pv];
              mate[u] = pv;
              mate[pv] = u;
              u = ppv;
            }
            return to;
          }
          used[mate[to]] = true;
          q.push(mate[to]);
        }
      }
    }
    return -1;
  }

  void solve() {
    // Greedy seed matching, then one augmenting search per exposed vertex.
    for (int v = 0; v < n; ++v)
      if (!skip[v] && mate[v] == -1)
        for (int to : g[v])
          if (mate[to] == -1) {
            mate[v] = to;
            mate[to] = v;
            break;
          }
    for (int v = 0; v < n; ++v)
      if (!skip[v] && mate[v] == -1) find_path(v);
  }
};

int matching_size(const std::vector<int>& mate) {
  int c = 0;
  for (size_t v = 0; v < mate.size(); ++v)
    if (mate[v] != -1 && mate[v] > static_cast<int>(v)) ++c;
  return c;
}

void k_matchings_rec(const Graph& g, int k, int first, Bitset& cur, Bitset& used_v,
                     std::vector<Bitset>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int e = first; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    if (used_v.test(u) || used_v.test(v)) continue;
    cur.set(e);
    used_v.set(u);
    used_v.set(v);
    k_matchings_rec(g, k - 1, e + 1, cur, used_v, out);
    cur.reset(e);
    used_v.reset(u);
    used_v.reset(v);
  }
}

}  // namespace

std::vector<int> maximum_matching(const Graph& g) {
  Blossom b(g);
  b.solve();
  return b.mate;
}

std::optional<Bitset> has_perfect_matching(const Graph& g) {
  if (g.n % 2 != 0) return std::nullopt;
  auto mate = maximum_matching(g);
  if (2 * matching_size(mate) != g.n) return std::nullopt;
  Bitset out(g.m());
  for (int v = 0; v < g.n; ++v)
    if (mate[v] > v) out.set(g.edge_id(v, mate[v]));
  return out;
}

bool matchable_after_removing(const Graph& g, const Bitset& removed) {
  int rest = g.n - removed.count();
  if (rest % 2 != 0) return false;
  Blossom b(g, &removed);
  b.solve();
  return 2 * matching_size(b.mate) == rest;
}

std::vector<Bitset> k_matchings(const Graph& g, int k, const Caps& caps) {
  if (k < 0) throw InputError("negative matching size");
  if (g.m() > caps.max_edges)
    throw ResourceError("edge count exceeds cap " + std::to_string(caps.max_edges));
  std::vector<Bitset> out;
  Bitset cur(g.m()), used_v(g.n);
  k_matchings_rec(g, k, 0, cur, used_v, out);
  return out;
}

bool is_k_extendable(const Graph& g, int k, const Caps& caps) {
  if (k < 1) throw InputError("k-extendability needs k >= 1");
  auto kms = k_matchings(g, k, caps);
  if (kms.empty()) return false;
  for (const Bitset& km : kms) {
    Bitset covered(g.n);
    for (int e = km.find_first(); e >= 0; e = km.find_next(e)) {
      covered.set(g.edges[e].first);
      covered.set(g.edges[e].second);
    }
    if (!matchable_after_removing(g, covered)) return false;
  }
  return true;
}

}  // namespace estar

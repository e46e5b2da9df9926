#include "estar/stable.hpp"

#include <algorithm>
#include <string>

namespace estar {

namespace {

// Bron-Kerbosch with pivoting on the given adjacency (cliques of `adj`).
// The pivot is the lowest-id vertex of P|X with the most candidates in P;
// expansion iterates ascending ids, so output order is reproducible.
struct CliqueEnum {
  const std::vector<Bitset>& adj;
  std::vector<Bitset> out;

  void run(Bitset r, Bitset p, Bitset x) {
    if (p.none() && x.none()) {
      out.push_back(r);
      return;
    }
    int pivot = -1, best = -1;
    Bitset px = p | x;
    for (int u = px.find_first(); u >= 0; u = px.find_next(u)) {
      int c = (p & adj[u]).count();
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    Bitset cand = p & adj[pivot].complement();
    for (int v = cand.find_first(); v >= 0; v = cand.find_next(v)) {
      Bitset rv = r;
      rv.set(v);
      run(rv, p & adj[v], x & adj[v]);
      p.reset(v);
      x.set(v);
    }
  }
};

std::vector<Bitset> enumerate_cliques_of(const std::vector<Bitset>& adj, int n, const Caps& caps) {
  if (n > caps.max_vertices)
    throw ResourceError("vertex count " + std::to_string(n) + " exceeds enumeration cap " +
                        std::to_string(caps.max_vertices));
  CliqueEnum ce{adj, {}};
  Bitset p(n);
  for (int v = 0; v < n; ++v) p.set(v);
  ce.run(Bitset(n), p, Bitset(n));
  std::sort(ce.out.begin(), ce.out.end());
  return ce.out;
}

}  // namespace

bool is_stable_set(const Graph& g, const Bitset& s) {
  for (int v = s.find_first(); v >= 0; v = s.find_next(v))
    if ((g.adj[v] & s).any()) return false;
  return true;
}

bool is_clique(const Graph& g, const Bitset& s) {
  for (int v = s.find_first(); v >= 0; v = s.find_next(v)) {
    Bitset rest = s;
    rest.reset(v);
    if (!rest.is_subset_of(g.adj[v])) return false;
  }
  return true;
}

std::vector<Bitset> maximal_stable_sets(const Graph& g, const Caps& caps) {
  // Maximal stable sets of g are maximal cliques of its complement.
  std::vector<Bitset> coadj(g.n, Bitset(g.n));
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (u != v && !g.adj[u].test(v)) coadj[u].set(v);
  return enumerate_cliques_of(coadj, g.n, caps);
}

std::vector<Bitset> maximal_cliques(const Graph& g, const Caps& caps) {
  return enumerate_cliques_of(g.adj, g.n, caps);
}

bool is_strong_clique(const Graph& g, const Bitset& q, const Caps& caps) {
  if (!is_clique(g, q)) return false;
  for (const Bitset& s : maximal_stable_sets(g, caps))
    if (!q.intersects(s)) return false;
  return true;
}

std::vector<Bitset> strong_cliques(const Graph& g, const Caps& caps) {
  auto mss = maximal_stable_sets(g, caps);
  std::vector<Bitset> out;
  for (const Bitset& q : maximal_cliques(g, caps)) {
    bool strong = true;
    for (const Bitset& s : mss)
      if (!q.intersects(s)) {
        strong = false;
        break;
      }
    if (strong) out.push_back(q);
  }
  return out;
}

bool is_general_partition_via_strong_cliques(const Graph& g, const Caps& caps) {
  auto strong = strong_cliques(g, caps);
  for (auto [u, v] : g.edges) {
    bool covered = false;
    for (const Bitset& q : strong)
      if (q.test(u) && q.test(v)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

}  // namespace estar

#ifndef ESTAR_GRAPH_HPP
#define ESTAR_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "estar/bitset.hpp"
#include "estar/errors.hpp"

namespace estar {

/// Simple undirected graph. Vertices are dense ids 0..n-1; edges are stored
/// as (min,max) pairs and the edge id is the position in `edges`, stable
/// across every derived computation. `label_offset` only affects printing
/// (the 9-vertex gallery graph uses 1-based labels like its source).
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<Bitset> adj;
  int label_offset = 0;

  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return adj[v].count(); }
  int min_degree() const;
  bool has_edge(int u, int v) const { return u != v && adj[u].test(v); }
  /// Edge id of {u,v}, or -1.
  int edge_id(int u, int v) const;
  /// E(v): ids of all edges incident with v, as an edge subset.
  Bitset incident_edges(int v) const;
  int label(int v) const { return v + label_offset; }
};

/// Hamiltonian cycle description: `order` is the cyclic vertex sequence,
/// cycle_edges[t] is the edge id of {order[t], order[(t+1)%n]}, and `chords`
/// are the remaining edge ids in ascending order.
struct HamiltonianLabeling {
  std::vector<int> order;
  std::vector<int> cycle_edges;
  std::vector<int> chords;

  int n() const { return static_cast<int>(order.size()); }
  Bitset cycle_edge_set(int m) const {
    Bitset b(m);
    for (int e : cycle_edges) b.set(e);
    return b;
  }
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& pairs);
Graph complement(const Graph& g);
/// Line graph; the returned map sends edge id of g to the vertex id of the
/// result (it is the identity by construction, returned for clarity).
std::pair<Graph, std::vector<int>> line_graph(const Graph& g);
Graph circulant(int n, const std::vector<int>& distances);

/// The 9-vertex, 14-edge triangle-free bad graph: cycle (1,...,9,1) plus
/// chords {1,6},{2,5},{3,7},{4,9},{5,8}. Vertices are stored 0-based and
/// printed 1-based.
std::pair<Graph, HamiltonianLabeling> gstar();

bool is_triangle_free(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// E(v) as an edge subset.
Bitset star(const Graph& g, int v);
/// Maximal-star trichotomy: deg >= 2, or a pendant edge whose other end is
/// also pendant, or an isolated vertex in an edgeless graph.
bool is_maximal_star(const Graph& g, int v);
/// Deduplicated edge subsets of all maximal stars, ascending by mask.
std::vector<Bitset> maximal_star_sets(const Graph& g);

/// Builds the labeling from a cyclic vertex order, validating adjacency and
/// that the order is a permutation.
HamiltonianLabeling labeling_from_order(const Graph& g, const std::vector<int>& order);
/// The labeling with order (0,1,...,n-1) when that is a Hamiltonian cycle.
std::optional<HamiltonianLabeling> natural_labeling(const Graph& g);
void validate_labeling(const Graph& g, const HamiltonianLabeling& lab);

}  // namespace estar

#endif

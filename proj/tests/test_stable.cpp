#include <doctest.h>

#include <random>

#include "estar/bridge.hpp"
#include "estar/stable.hpp"
#include "oracles.hpp"

using namespace estar;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return build_graph(n, pairs);
}

std::vector<std::uint32_t> as_masks(const std::vector<Bitset>& sets) {
  std::vector<std::uint32_t> out;
  for (const auto& s : sets) out.push_back(static_cast<std::uint32_t>(s.low_mask()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("maximal stable sets, small cases") {
  Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(as_masks(maximal_stable_sets(k3)) == std::vector<std::uint32_t>({1, 2, 4}));
  Graph e3 = build_graph(3, {});
  CHECK(as_masks(maximal_stable_sets(e3)) == std::vector<std::uint32_t>({7}));
}

TEST_CASE("maximal stable sets of the line complement of C6 are its six stars") {
  Graph c6 = cycle(6);
  Graph h = line_complement(c6);
  auto mss = maximal_stable_sets(h);
  CHECK(mss.size() == 6);
  for (const auto& s : mss) CHECK(s.count() == 2);
  CHECK(as_masks(mss) == as_masks(maximal_star_sets(c6)));
}

TEST_CASE("maximal stable sets agree with the 2^n oracle") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    std::uniform_int_distribution<int> nd(1, 12);
    int n = nd(rng);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) pairs.emplace_back(u, v);
    Graph g = build_graph(n, pairs);
    auto got = as_masks(maximal_stable_sets(g));
    auto want = oracle::maximal_stable_sets(g);
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    for (const auto& s : maximal_stable_sets(g)) CHECK(is_stable_set(g, s));
  }
}

TEST_CASE("enumeration honors the vertex cap") {
  Caps caps;
  caps.max_vertices = 4;
  Graph c5 = cycle(5);
  CHECK_THROWS_AS(maximal_stable_sets(c5, caps), ResourceError);
}

TEST_CASE("strong cliques") {
  Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(is_strong_clique(k3, Bitset::from_mask(3, 0b111)));

  Graph c5 = cycle(5);
  for (int v = 0; v < 5; ++v) CHECK_FALSE(is_strong_clique(c5, Bitset::from_mask(5, 1u << v)));

  // No strong clique in the line complement of C9: a strong clique there
  // would be a perfect matching of a 9-cycle.
  Graph h = line_complement(cycle(9));
  CHECK(strong_cliques(h).empty());
}

TEST_CASE("general partition via strong cliques") {
  Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(is_general_partition_via_strong_cliques(k3));

  // C6 has the 2-matching {01,34} whose remaining vertices 2,5 are not
  // adjacent, so it is not 2-extendable and the line complement is not a
  // general partition graph.
  Graph h6 = line_complement(cycle(6));
  CHECK_FALSE(is_general_partition_via_strong_cliques(h6));

  auto [g, lab] = gstar();
  CHECK_FALSE(is_general_partition_via_strong_cliques(line_complement(g)));

  // C4 is 2-extendable; its line complement is 2K2, a general partition graph.
  Graph h4 = line_complement(cycle(4));
  CHECK(is_general_partition_via_strong_cliques(h4));
}

TEST_CASE("strong cliques found by maximal-clique filtering match the subset oracle") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> nd(2, 10);
    int n = nd(rng);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) pairs.emplace_back(u, v);
    Graph g = build_graph(n, pairs);
    auto adj = oracle::adjacency_masks(g);
    auto mss = oracle::maximal_stable_sets(g);
    // Oracle: all nonempty strong cliques by scanning subsets.
    std::vector<std::uint32_t> strong_all;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
      bool clique = true;
      for (int v = 0; v < n && clique; ++v)
        if ((s >> v) & 1)
          if ((s & ~(adj[v] | (1u << v))) != 0) clique = false;
      if (!clique) continue;
      bool meets_all = true;
      for (auto m : mss)
        if (!(m & s)) {
          meets_all = false;
          break;
        }
      if (meets_all) strong_all.push_back(s);
    }
    // Library existence agrees with the oracle.
    CHECK(strong_cliques(g).empty() == strong_all.empty());
    // Library membership test agrees on every subset.
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
      bool lib = is_strong_clique(g, Bitset::from_mask(n, s));
      bool orc = std::find(strong_all.begin(), strong_all.end(), s) != strong_all.end();
      CHECK(lib == orc);
    }
  }
}

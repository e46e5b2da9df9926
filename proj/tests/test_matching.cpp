#include <doctest.h>

#include <random>

#include "estar/matching.hpp"
#include "oracles.hpp"

using namespace estar;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return build_graph(n, pairs);
}

int matching_size(const std::vector<int>& mate) {
  int c = 0;
  for (size_t v = 0; v < mate.size(); ++v)
    if (mate[v] != -1 && mate[v] > static_cast<int>(v)) ++c;
  return c;
}

}  // namespace

TEST_CASE("perfect matchings on cycles") {
  CHECK_FALSE(has_perfect_matching(cycle(9)));
  auto pm = has_perfect_matching(cycle(6));
  REQUIRE(pm.has_value());
  CHECK(pm->count() == 3);
  // {01,23,45} is one of the two; the search is deterministic, so pin it.
  Graph c6 = cycle(6);
  Bitset expected(c6.m());
  expected.set(c6.edge_id(0, 1));
  expected.set(c6.edge_id(2, 3));
  expected.set(c6.edge_id(4, 5));
  CHECK(*pm == expected);
}

TEST_CASE("blossom handles odd components") {
  // Two triangles joined by an edge: perfect matching exists (n=6).
  Graph g = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  CHECK(has_perfect_matching(g).has_value());
  // Petersen-like blossoms: C5 plus center joined to all (wheel, n=6).
  Graph w = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
  CHECK(has_perfect_matching(w).has_value());
}

TEST_CASE("maximum matching agrees with the exhaustive oracle") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 250; ++trial) {
    std::uniform_int_distribution<int> nd(1, 12);
    int n = nd(rng);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) pairs.emplace_back(u, v);
    Graph g = build_graph(n, pairs);
    auto mate = maximum_matching(g);
    // mate[] must describe a matching
    for (int v = 0; v < n; ++v)
      if (mate[v] != -1) {
        CHECK(mate[mate[v]] == v);
        CHECK(g.has_edge(v, mate[v]));
      }
    CHECK(matching_size(mate) == oracle::max_matching_size(g));
  }
}

TEST_CASE("k-matchings enumeration") {
  Graph c6 = cycle(6);
  auto two = k_matchings(c6, 2);
  // oracle count
  int count = 0;
  for (auto m : oracle::matchings(c6))
    if (std::popcount(m) == 2) ++count;
  CHECK(static_cast<int>(two.size()) == count);
  for (const auto& m : two) CHECK(m.count() == 2);
}

TEST_CASE("2-extendability") {
  CHECK(is_k_extendable(cycle(4), 2));
  CHECK_FALSE(is_k_extendable(cycle(6), 2));  // {01,34} does not extend
  CHECK_FALSE(is_k_extendable(circulant(11, {1, 3}), 2));  // odd order, no PM
  CHECK_FALSE(is_k_extendable(cycle(9), 2));
  CHECK_THROWS_AS(is_k_extendable(cycle(4), 0), InputError);
}

TEST_CASE("k-extendability agrees with the exhaustive oracle") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 120; ++trial) {
    std::uniform_int_distribution<int> nd(2, 10);
    int n = nd(rng);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) pairs.emplace_back(u, v);
    Graph g = build_graph(n, pairs);
    for (int k = 1; k <= 3; ++k) {
      auto all = oracle::matchings(g);
      auto pms = oracle::perfect_matchings(g);
      bool expected = false;
      bool has_k = false;
      for (auto m : all)
        if (std::popcount(m) == k) {
          has_k = true;
          break;
        }
      if (has_k) {
        expected = true;
        for (auto m : all) {
          if (std::popcount(m) != k) continue;
          bool extends = false;
          for (auto pm : pms)
            if ((m & pm) == m) {
              extends = true;
              break;
            }
          if (!extends) {
            expected = false;
            break;
          }
        }
      }
      CHECK(is_k_extendable(g, k) == expected);
    }
  }
}

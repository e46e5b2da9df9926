#ifndef ESTAR_MATCHING_HPP
#define ESTAR_MATCHING_HPP

#include <optional>
#include <vector>

#include "estar/graph.hpp"

namespace estar {

/// Maximum matching via augmenting paths with blossom contraction (valid on
/// non-bipartite graphs). Returns the mate array (-1 for exposed vertices).
std::vector<int> maximum_matching(const Graph& g);

/// A perfect matching as an edge subset, if one exists.
std::optional<Bitset> has_perfect_matching(const Graph& g);

/// Perfect matching of g minus the vertices in `removed`.
bool matchable_after_removing(const Graph& g, const Bitset& removed);

/// All matchings of exactly k edges, ascending by edge mask.
std::vector<Bitset> k_matchings(const Graph& g, int k, const Caps& caps = {});

/// Has a k-matching and every k-matching extends to a perfect matching.
bool is_k_extendable(const Graph& g, int k, const Caps& caps = {});

}  // namespace estar

#endif

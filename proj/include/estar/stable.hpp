#ifndef ESTAR_STABLE_HPP
#define ESTAR_STABLE_HPP

#include <vector>

#include "estar/graph.hpp"

namespace estar {

bool is_stable_set(const Graph& g, const Bitset& s);
bool is_clique(const Graph& g, const Bitset& s);

/// All inclusion-maximal stable sets, each once, ascending by mask.
/// Pivoted recursive expansion over bitsets; ties break on ascending id.
std::vector<Bitset> maximal_stable_sets(const Graph& g, const Caps& caps = {});
std::vector<Bitset> maximal_cliques(const Graph& g, const Caps& caps = {});

/// Clique meeting every maximal stable set.
bool is_strong_clique(const Graph& g, const Bitset& q, const Caps& caps = {});
/// Maximal cliques that are strong (a clique is strong iff some maximal
/// clique containing it is, so this decides existence questions).
std::vector<Bitset> strong_cliques(const Graph& g, const Caps& caps = {});
/// Every edge lies in a strong clique (general partition characterization).
bool is_general_partition_via_strong_cliques(const Graph& g, const Caps& caps = {});

}  // namespace estar

#endif

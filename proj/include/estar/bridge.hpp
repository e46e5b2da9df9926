#ifndef ESTAR_BRIDGE_HPP
#define ESTAR_BRIDGE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "estar/engine.hpp"
#include "estar/graph.hpp"
#include "estar/matching.hpp"
#include "estar/stable.hpp"

namespace estar {

/// complement(line_graph(g)); vertex i of the result is edge i of g.
Graph line_complement(const Graph& g);

/// Positive vertex weights; `symbolic` mirrors the edge weighting the values
/// came from when there is one (same index space, same symbol arity).
struct VertexWeighting {
  std::vector<Rational> values;
  std::vector<SymbolicValue> symbolic;
};

struct Transport {
  Graph derived;
  std::vector<int> edge_to_vertex;  // identity by construction
  VertexWeighting weighting;
};

/// Moves an equistarable weighting of a triangle-free graph to an equistable
/// weighting of the complement of its line graph; maximal stable sets over
/// there are exactly the maximal stars here, and that correspondence is
/// checked, not assumed.
Transport equistarable_to_equistable(const Graph& g, const SymbolicEdgeWeighting& w,
                                     const Caps& caps = {});

/// Exhaustive 2^n check of "S sums to 1 iff S is a maximal stable set".
VerifyOutcome verify_equistable(const Graph& h, const std::vector<Rational>& w,
                                const Caps& caps = {});
VerifyOutcome verify_equistable_symbolic(const Graph& h, const std::vector<SymbolicValue>& w,
                                         const Caps& caps = {});

enum class VertexVerdict { kHolds, kFails, kUndecided };

struct StrongVertexDecision {
  VertexVerdict verdict = VertexVerdict::kUndecided;
  std::optional<Bitset> refuting_subset;
  Rational refuting_value;
  std::vector<Rational> positive_solution;
  int kernel_dimension = 0;
  long forced_count = 0;
  std::string diagnosis;
};

/// Vertex-side mirror of the star-side decision: build the maximal-stable-set
/// incidence system, take its kernel by elimination, and look for non-stable
/// subsets forced to a value <= 1. Needs a strictly positive solution
/// (supplied, or found from the particular solution when it happens to be
/// positive); reports kUndecided with a diagnosis otherwise.
StrongVertexDecision decide_strongly_equistable_small(
    const Graph& h, const std::optional<std::vector<Rational>>& supplied, const Caps& caps = {});

struct EquistableDecision {
  VertexVerdict verdict = VertexVerdict::kUndecided;
  std::vector<Rational> weighting;      // witness when kHolds
  std::optional<Bitset> forced_to_one;  // evidence when kFails
  std::string diagnosis;
};

/// Equistable iff a positive solution exists and no non-stable subset is
/// forced to exactly 1; a witness weighting is then built by a generic
/// kernel perturbation and re-verified exhaustively before being returned.
EquistableDecision decide_equistable_small(const Graph& h,
                                           const std::optional<std::vector<Rational>>& supplied,
                                           const Caps& caps = {});

struct CombinerStep {
  Bitset tstar;
  Rational epsilon;
  long value_one_before = 0;
  long value_one_after = 0;
};

struct CombinerResult {
  std::vector<Rational> weighting;
  std::vector<CombinerStep> steps;
};

/// The constructive strongly-equistable => equistable argument: repeatedly
/// mix the current weighting with the family member for the lowest offending
/// subset T* using phi' = (1 - eps/n) phi + (eps/n) phi_T*, with eps chosen
/// exactly from the finite gap set (halved, clamped to 1/2 when >= 1). The
/// count of value-1 non-stable subsets strictly decreases each step; the
/// result passes verify_equistable before being returned.
CombinerResult strongly_equistable_to_equistable(
    const Graph& h, const std::function<std::vector<Rational>(const Bitset&)>& family,
    const std::vector<Rational>& start, const Caps& caps = {});

struct MatchingFacts {
  bool perfect_matching = false;
  bool two_matching = false;
  bool two_extendable = false;
};

MatchingFacts matching_facts(const Graph& g, const Caps& caps = {});

/// Everything the counterexample argument needs, bundled: badness and the
/// constructed weighting on the root, the transported equistable weighting
/// on the derived graph, matching facts, and (when the tag calls for it) the
/// forced-subset refutation. Every claim is re-verified during assembly.
struct ConjectureCertificate {
  std::string conjecture;
  Graph root;
  BadnessCertificate badness;
  SymbolicEdgeWeighting weights;
  Graph derived;
  VertexWeighting transported;
  std::optional<ForcedSubsetReport> forced;
  MatchingFacts facts;
};

/// Tags: "no-strong-clique", "general-partition-ne-equistable",
/// "strongly-equistable-ne-equistable", "general-partition-ne-strongly-equistable".
ConjectureCertificate make_conjecture_certificate(const Graph& g, const HamiltonianLabeling& lab,
                                                  const std::string& tag, const Caps& caps = {});

/// The no-strong-clique conclusion for a triangle-free bad graph of odd
/// order (equistable derived graph, no perfect matching in the root, hence
/// no strong clique and not general partition).
ConjectureCertificate check_no_strong_clique_conclusion(const Graph& g, const Caps& caps = {});

}  // namespace estar

#endif

#ifndef ESTAR_ENGINE_HPP
#define ESTAR_ENGINE_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "estar/graph.hpp"
#include "estar/linalg.hpp"
#include "estar/symbolic.hpp"

namespace estar {

enum class ChordClass { kNonCrossingEven, kCrossingOdd, kNeither };

const char* chord_class_name(ChordClass c);

/// Classification evidence: the even path P0 of C - {e,e'} and the relevant
/// P0-distances (between the two endpoints for the non-crossing case; from
/// the on-path endpoint to each removed edge for the crossing case).
struct ChordClassification {
  ChordClass cls = ChordClass::kNeither;
  std::vector<int> p0;
  int dist_e = -1;
  int dist_e2 = -1;
};

/// e and e2 are disjoint cycle edges of the labeling, chord is a non-cycle
/// edge; all are edge ids.
ChordClassification classify_chord(const Graph& g, const HamiltonianLabeling& lab, int e,
                                   int e2, int chord);

struct BadnessWitness {
  int chord;
  ChordClass cls;
};

/// One witnessing chord per unordered pair of disjoint cycle edges
/// (lowest chord edge id), keyed by the pair's edge ids (min first).
struct BadnessCertificate {
  HamiltonianLabeling labeling;
  std::vector<std::tuple<int, int, BadnessWitness>> witnesses;
};

struct BadnessOutcome {
  std::optional<BadnessCertificate> certificate;
  std::optional<std::pair<int, int>> first_uncovered;  // edge ids
};

/// Definition of bad graphs: every disjoint pair of cycle edges has a
/// non-crossing even or crossing odd chord. Odd order required.
BadnessOutcome is_bad(const Graph& g, const HamiltonianLabeling& lab);

/// Tries Hamiltonian cycles in deterministic DFS order (ascending neighbor
/// ids from vertex 0, reversal-pruned) and returns the first badness
/// certificate. n must be odd and at most 15.
std::optional<BadnessCertificate> find_bad_labeling(const Graph& g, const Caps& caps = {});

/// Concrete symbol values alpha_i = epsilon * base^-(i+1); the power-of-base
/// scheme makes any integer relation with coefficients bounded by 4m
/// impossible, which is the independence the verification scans consume.
struct Instantiation {
  Rational epsilon;
  long base = 0;
  std::vector<Rational> alphas;
};

/// Edge weighting with chord i carrying the formal symbol alpha_i and cycle
/// edges carrying the cyclic-system solution; every star sums to exactly 1.
struct SymbolicEdgeWeighting {
  HamiltonianLabeling labeling;
  std::vector<int> symbol_edges;  // chord edge id per symbol index
  std::vector<SymbolicValue> values;
  Instantiation inst;

  int arity() const { return static_cast<int>(symbol_edges.size()); }
  std::vector<Rational> instantiated() const;
};

SymbolicEdgeWeighting construct_equistarable_weights(const Graph& g,
                                                     const BadnessCertificate& cert);

struct VerifyOutcome {
  bool ok = false;
  std::optional<Bitset> counterexample;
  std::string detail;
};

/// Exhaustive check of "F sums to 1 iff F is a maximal star" over all
/// nonempty edge subsets, with exact symbolic equality. Also checks the
/// attached instantiation (positivity, cycle values in (1/3,2/3), and the
/// 4m coefficient bound that ties instantiated equalities to symbolic ones).
VerifyOutcome verify_equistarable(const Graph& g, const SymbolicEdgeWeighting& w,
                                  const Caps& caps = {});
/// Same scan for a plain positive rational weighting.
VerifyOutcome verify_equistarable_values(const Graph& g, const std::vector<Rational>& w,
                                         const Caps& caps = {});

enum class ForcedVerdict { kHarmless, kRefutesStrongEquistarability, kRefutesEquistarability };

const char* forced_verdict_name(ForcedVerdict v);

/// A subset whose total is the same in every solution of the star-sum
/// system. A non-star subset forced to a value <= 1 kills strong
/// equistarability; forced to exactly 1 it kills equistarability itself.
struct ForcedSubsetReport {
  Bitset edges;
  Rational value;
  bool is_star = false;
  ForcedVerdict verdict = ForcedVerdict::kHarmless;
};

/// All forced subsets, ascending by edge mask.
std::vector<ForcedSubsetReport> forced_subsets(const Graph& g, const HamiltonianLabeling& lab,
                                               const Caps& caps = {});

enum class StrongStarVerdict { kStronglyEquistarable, kNotStronglyEquistarable };

struct StrongStarDecision {
  StrongStarVerdict verdict;
  std::optional<ForcedSubsetReport> refutation;  // lowest-mask refuting subset
  SymbolicEdgeWeighting weights;                 // the positive solution used
  int kernel_dimension = 0;
  long forced_count = 0;
};

/// The affine criterion: totals of a subset range over either a point or a
/// nondegenerate interval on the (open, convex, nonempty) positive solution
/// set, so the graph fails strong equistarability iff some non-star subset
/// is forced to a value <= 1. Preconditions: triangle-free, min degree >= 2,
/// bad with respect to lab, m within the subset cap.
StrongStarDecision decide_strong_equistarability(const Graph& g, const HamiltonianLabeling& lab,
                                                 const Caps& caps = {});

}  // namespace estar

#endif

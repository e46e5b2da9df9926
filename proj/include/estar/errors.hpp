#ifndef ESTAR_ERRORS_HPP
#define ESTAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace estar {

/// Malformed input data (bad edge list, loops, duplicate edges, parse errors).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Operation applied outside its mathematical domain (even cycle order,
/// bipartite graph where non-bipartite is required, triangle where
/// triangle-freeness is required, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured enumeration cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration guards. All exhaustive operations take a Caps and fail with
/// ResourceError instead of silently blowing up.
struct Caps {
  int max_vertices = 32;     // vertex-set enumerations (stable sets, cliques)
  int max_edges = 64;        // largest edge list accepted by subset machinery
  int max_subset_bits = 24;  // 2^bits subset scans
  long hamiltonian_budget = 5'000'000;  // DFS nodes in Hamiltonian-cycle search
  long max_reports = 1'000'000;         // forced-subset report list bound
};

}  // namespace estar

#endif

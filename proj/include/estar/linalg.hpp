#ifndef ESTAR_LINALG_HPP
#define ESTAR_LINALG_HPP

#include <optional>
#include <vector>

#include "estar/graph.hpp"
#include "estar/rational.hpp"
#include "estar/symbolic.hpp"

namespace estar {

/// Dense rational matrix; sizes stay desk-scale.
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rational(0)) {}
  Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

int rank(Matrix m);

struct LinearSolution {
  bool consistent = false;
  std::vector<Rational> particular;            // one solution of Ax = b (free vars 0)
  std::vector<std::vector<Rational>> nullspace;  // basis of ker A
};
/// Exact Gaussian elimination on [A|b].
LinearSolution solve_system(const Matrix& a, const std::vector<Rational>& b);

/// 0/1 vertex-edge incidence matrix (n rows, m columns).
Matrix incidence_matrix(const Graph& g);

/// Solves x_j + x_{j+1} = b_j (indices mod n, n odd) by the alternating-sum
/// formula x_j = (1/2) * sum_k (-1)^k b_{j+k}. Even n is rejected (singular).
std::vector<SymbolicValue> solve_cycle_system(const std::vector<SymbolicValue>& b);
std::vector<Rational> solve_cycle_system(const std::vector<Rational>& b);

/// The even cycle a chord closes with the odd-length arc of the Hamiltonian
/// cycle between its endpoints. `edge_cycle` lists edge ids in cyclic order,
/// chord first.
struct EvenChordCycle {
  int chord;
  std::vector<int> edge_cycle;
};

/// Particular solution of Ax = 1 (1/2 on cycle edges, 0 on chords) together
/// with one alternating +-1 kernel vector per chord. Verified on
/// construction: A x0 = 1, A xi = 0, dimension m - n.
struct KernelBasis {
  int n = 0, m = 0;
  std::vector<Rational> x0;
  std::vector<std::vector<Rational>> basis;  // entries in {-1,0,1}
  std::vector<EvenChordCycle> cycles;
  Bitset cycle_edges;  // edge ids of the Hamiltonian cycle

  int dimension() const { return static_cast<int>(basis.size()); }
};

KernelBasis kernel_basis_from_chords(const Graph& g, const HamiltonianLabeling& lab);

/// Some(c) when the indicator of T is orthogonal to every kernel vector, in
/// which case every solution of Ax = 1 gives T the same total c; None when
/// the total varies over the solution set.
std::optional<Rational> forced_value(const KernelBasis& k, const Bitset& t);

}  // namespace estar

#endif

#include "estar/linalg.hpp"

#include <algorithm>
#include <string>

namespace estar {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c).sign() != 0) {
        p = i;
        break;
      }
    if (p == -1) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = Rational(1) / m.at(r, c);
    for (int j = 0; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).sign() == 0) continue;
      Rational f = m.at(i, c);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

LinearSolution solve_system(const Matrix& a, const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows) throw DomainError("rhs length mismatch");
  Matrix aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  std::vector<int> pivots = rref(aug);
  LinearSolution out;
  // Inconsistent iff some pivot landed in the b column.
  for (int c : pivots)
    if (c == a.cols) return out;
  out.consistent = true;
  std::vector<int> pivot_of_col(a.cols, -1);
  for (size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = static_cast<int>(r);
  out.particular.assign(a.cols, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) out.particular[pivots[r]] = aug.at(static_cast<int>(r), a.cols);
  for (int c = 0; c < a.cols; ++c) {
    if (pivot_of_col[c] != -1) continue;
    std::vector<Rational> v(a.cols, Rational(0));
    v[c] = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug.at(static_cast<int>(r), c);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

Matrix incidence_matrix(const Graph& g) {
  Matrix a(g.n, g.m());
  for (int e = 0; e < g.m(); ++e) {
    a.at(g.edges[e].first, e) = Rational(1);
    a.at(g.edges[e].second, e) = Rational(1);
  }
  return a;
}

namespace {

template <class V>
std::vector<V> cycle_solve(const std::vector<V>& b) {
  const int n = static_cast<int>(b.size());
  if (n < 3 || n % 2 == 0)
    throw DomainError("cyclic system x_j + x_{j+1} = b_j needs odd n >= 3");
  std::vector<V> x;
  x.reserve(n);
  Rational half(1, 2);
  for (int j = 0; j < n; ++j) {
    V acc = b[j];
    for (int k = 1; k < n; ++k) {
      if (k % 2 == 1)
        acc -= b[(j + k) % n];
      else
        acc += b[(j + k) % n];
    }
    x.push_back(acc * half);
  }
  return x;
}

}  // namespace

std::vector<SymbolicValue> solve_cycle_system(const std::vector<SymbolicValue>& b) {
  return cycle_solve(b);
}
std::vector<Rational> solve_cycle_system(const std::vector<Rational>& b) {
  return cycle_solve(b);
}

KernelBasis kernel_basis_from_chords(const Graph& g, const HamiltonianLabeling& lab) {
  const int n = g.n, m = g.m();
  if (n % 2 == 0) throw DomainError("kernel-from-chords needs an odd Hamiltonian cycle");
  validate_labeling(g, lab);

  KernelBasis k;
  k.n = n;
  k.m = m;
  k.cycle_edges = lab.cycle_edge_set(m);
  k.x0.assign(m, Rational(0));
  for (int e : lab.cycle_edges) k.x0[e] = Rational(1, 2);

  std::vector<int> pos(n);  // vertex -> position on the cycle
  for (int t = 0; t < n; ++t) pos[lab.order[t]] = t;

  for (int chord : lab.chords) {
    auto [u, v] = g.edges[chord];
    int pu = pos[u], pv = pos[v];
    // Arc from pu forward to pv has (pv - pu) mod n edges; exactly one of the
    // two arcs has odd length since n is odd. The chord plus the odd arc is
    // the even cycle.
    int fwd = ((pv - pu) % n + n) % n;
    int start = pu, len = fwd;
    if (fwd % 2 == 0) {
      start = pv;
      len = n - fwd;
    }
    EvenChordCycle cyc;
    cyc.chord = chord;
    cyc.edge_cycle.push_back(chord);
    for (int t = 0; t < len; ++t) cyc.edge_cycle.push_back(lab.cycle_edges[(start + t) % n]);

    std::vector<Rational> x(m, Rational(0));
    int sign = -1;  // (-1)^j with the chord at position j = 1
    for (int e : cyc.edge_cycle) {
      x[e] = Rational(sign);
      sign = -sign;
    }
    k.basis.push_back(std::move(x));
    k.cycles.push_back(std::move(cyc));
  }

  // Invariants before return: A x0 = 1 and A xi = 0.
  Matrix a = incidence_matrix(g);
  for (int vtx = 0; vtx < n; ++vtx) {
    Rational s0(0);
    for (int e = 0; e < m; ++e)
      if (a.at(vtx, e).sign() != 0) s0 += k.x0[e];
    if (!(s0 == Rational(1))) throw DomainError("kernel basis construction: A x0 != 1");
    for (const auto& x : k.basis) {
      Rational s(0);
      for (int e = 0; e < m; ++e)
        if (a.at(vtx, e).sign() != 0) s += x[e];
      if (s.sign() != 0) throw DomainError("kernel basis construction: A xi != 0");
    }
  }
  return k;
}

std::optional<Rational> forced_value(const KernelBasis& k, const Bitset& t) {
  if (t.none()) throw DomainError("forced value of the empty subset");
  for (const auto& x : k.basis) {
    Rational dot(0);
    for (int e = t.find_first(); e >= 0; e = t.find_next(e)) dot += x[e];
    if (dot.sign() != 0) return std::nullopt;
  }
  Rational val(0);
  for (int e = t.find_first(); e >= 0; e = t.find_next(e)) val += k.x0[e];
  return val;
}

}  // namespace estar

#include "estar/engine.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "estar/scan.hpp"

namespace estar {

const char* chord_class_name(ChordClass c) {
  switch (c) {
    case ChordClass::kNonCrossingEven: return "non-crossing-even";
    case ChordClass::kCrossingOdd: return "crossing-odd";
    case ChordClass::kNeither: return "neither";
  }
  return "?";
}

const char* forced_verdict_name(ForcedVerdict v) {
  switch (v) {
    case ForcedVerdict::kHarmless: return "harmless";
    case ForcedVerdict::kRefutesStrongEquistarability: return "refutes-strong-equistarability";
    case ForcedVerdict::kRefutesEquistarability: return "refutes-equistarability";
  }
  return "?";
}

ChordClassification classify_chord(const Graph& g, const HamiltonianLabeling& lab, int e,
                                   int e2, int chord) {
  const int n = g.n;
  std::vector<int> cycle_index(g.m(), -1);
  for (int t = 0; t < n; ++t) cycle_index[lab.cycle_edges[t]] = t;
  if (e < 0 || e >= g.m() || e2 < 0 || e2 >= g.m() || cycle_index[e] < 0 || cycle_index[e2] < 0)
    throw DomainError("classify_chord: e and e' must be cycle edges");
  if (chord < 0 || chord >= g.m() || cycle_index[chord] >= 0)
    throw DomainError("classify_chord: witness must be a chord");
  int a = cycle_index[e], b = cycle_index[e2];
  if (a == b) throw DomainError("classify_chord: e and e' must differ");
  // c_a spans positions (a, a+1); disjointness means the spans do not touch.
  int d1 = ((b - a) % n + n) % n;
  if (d1 == 1 || d1 == n - 1) throw DomainError("classify_chord: e and e' share an endpoint");

  // Path between the removed edges, forward from a: positions a+1 .. b,
  // with d1 vertices and d1 - 1 edges. Its e-end sits at a+1, e'-end at b.
  auto path_vertices = [&](int from, int count) {
    std::vector<int> vs;
    vs.reserve(count);
    for (int t = 0; t < count; ++t) vs.push_back(lab.order[(from + t) % n]);
    return vs;
  };
  std::vector<int> p0;
  bool forward_is_even = (d1 - 1) % 2 == 0;
  // p0 is listed from its e-end to its e'-end.
  if (forward_is_even) {
    p0 = path_vertices((a + 1) % n, d1);
  } else {
    // Backward path: positions b+1 .. a, e'-end at b+1, e-end at a.
    std::vector<int> rev = path_vertices((b + 1) % n, n - d1);
    p0.assign(rev.rbegin(), rev.rend());
  }

  std::vector<int> pos_in_p0(n, -1);
  for (size_t i = 0; i < p0.size(); ++i) pos_in_p0[p0[i]] = static_cast<int>(i);

  auto [cu, cv] = g.edges[chord];
  int iu = pos_in_p0[cu], iv = pos_in_p0[cv];

  ChordClassification out;
  out.p0 = p0;
  if (iu >= 0 && iv >= 0) {
    out.dist_e = std::abs(iu - iv);
    if (out.dist_e % 2 == 0) out.cls = ChordClass::kNonCrossingEven;
    return out;
  }
  if (iu >= 0 || iv >= 0) {
    int i = iu >= 0 ? iu : iv;
    out.dist_e = i;                                       // to the endpoint of e on P0
    out.dist_e2 = static_cast<int>(p0.size()) - 1 - i;    // to the endpoint of e' on P0
    if (out.dist_e % 2 == 1 && out.dist_e2 % 2 == 1) out.cls = ChordClass::kCrossingOdd;
    return out;
  }
  return out;
}

BadnessOutcome is_bad(const Graph& g, const HamiltonianLabeling& lab) {
  if (g.n % 2 == 0) throw DomainError("badness is defined for odd order only");
  validate_labeling(g, lab);
  const int n = g.n;
  BadnessCertificate cert;
  cert.labeling = lab;
  for (int a = 0; a < n; ++a)
    for (int b = a + 2; b < n; ++b) {
      if (a == 0 && b == n - 1) continue;  // wrap-adjacent pair
      int e = lab.cycle_edges[a], e2 = lab.cycle_edges[b];
      std::optional<BadnessWitness> w;
      for (int chord : lab.chords) {
        ChordClassification c = classify_chord(g, lab, e, e2, chord);
        if (c.cls != ChordClass::kNeither) {
          w = BadnessWitness{chord, c.cls};
          break;
        }
      }
      if (!w) return {std::nullopt, std::make_pair(std::min(e, e2), std::max(e, e2))};
      cert.witnesses.emplace_back(std::min(e, e2), std::max(e, e2), *w);
    }
  return {std::move(cert), std::nullopt};
}

namespace {

struct HamiltonianSearch {
  const Graph& g;
  const Caps& caps;
  long budget;
  std::vector<int> order;
  Bitset used;
  std::optional<BadnessCertificate> found;

  HamiltonianSearch(const Graph& gr, const Caps& c)
      : g(gr), caps(c), budget(c.hamiltonian_budget), used(gr.n) {}

  bool dfs() {
    if (--budget < 0) throw ResourceError("Hamiltonian cycle search budget exhausted");
    if (static_cast<int>(order.size()) == g.n) {
      if (!g.has_edge(order.back(), 0)) return false;
      if (g.n > 2 && order[1] > order[g.n - 1]) return false;  // skip reversals
      BadnessOutcome o = is_bad(g, labeling_from_order(g, order));
      if (o.certificate) {
        found = std::move(o.certificate);
        return true;
      }
      return false;
    }
    int v = order.back();
    for (int u = g.adj[v].find_first(); u >= 0; u = g.adj[v].find_next(u)) {
      if (used.test(u)) continue;
      used.set(u);
      order.push_back(u);
      if (dfs()) return true;
      order.pop_back();
      used.reset(u);
    }
    return false;
  }
};

}  // namespace

std::optional<BadnessCertificate> find_bad_labeling(const Graph& g, const Caps& caps) {
  if (g.n % 2 == 0) throw DomainError("badness is defined for odd order only");
  if (g.n > 15) throw ResourceError("Hamiltonian cycle search capped at 15 vertices");
  if (g.n < 3 || !is_connected(g)) return std::nullopt;
  HamiltonianSearch s(g, caps);
  s.order.push_back(0);
  s.used.set(0);
  s.dfs();
  return s.found;
}

std::vector<Rational> SymbolicEdgeWeighting::instantiated() const {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.instantiate(inst.alphas));
  return out;
}

SymbolicEdgeWeighting construct_equistarable_weights(const Graph& g,
                                                     const BadnessCertificate& cert) {
  const HamiltonianLabeling& lab = cert.labeling;
  validate_labeling(g, lab);
  const int n = g.n, m = g.m();
  const int r = static_cast<int>(lab.chords.size());

  SymbolicEdgeWeighting w;
  w.labeling = lab;
  w.symbol_edges = lab.chords;

  // Star-sum system restricted to the cycle edges: the star at order[s] is
  // {c_{s-1}, c_s} plus incident chords, so with z_t the weight of c_t the
  // constraints read z_{s-1} + z_s = 1 - (incident chord symbols).
  std::vector<SymbolicValue> b;
  b.reserve(n);
  for (int s = 0; s < n; ++s) {
    SymbolicValue v = SymbolicValue::constant(Rational(1), r);
    int vert = lab.order[s];
    for (int i = 0; i < r; ++i) {
      auto [cu, cv] = g.edges[lab.chords[i]];
      if (cu == vert || cv == vert) v -= SymbolicValue::symbol(i, r);
    }
    b.push_back(std::move(v));
  }
  std::vector<SymbolicValue> shifted(n, SymbolicValue(Rational(0), r));
  for (int j = 0; j < n; ++j) shifted[j] = b[(j + 1) % n];
  std::vector<SymbolicValue> z = solve_cycle_system(shifted);

  w.values.assign(m, SymbolicValue(Rational(0), r));
  for (int t = 0; t < n; ++t) w.values[lab.cycle_edges[t]] = z[t];
  for (int i = 0; i < r; ++i) w.values[lab.chords[i]] = SymbolicValue::symbol(i, r);

  // Every star must sum to exactly 1 symbolically.
  const SymbolicValue one = SymbolicValue::constant(Rational(1), r);
  for (int v = 0; v < n; ++v) {
    SymbolicValue s(Rational(0), r);
    Bitset st = g.incident_edges(v);
    for (int e = st.find_first(); e >= 0; e = st.find_next(e)) s += w.values[e];
    if (!(s == one)) throw DomainError("star sum is not 1 after cyclic solve");
  }

  // Exact epsilon search: alphas = eps * B^-(i+1) with B = 8m+1; every cycle
  // edge must land strictly inside (1/3, 2/3).
  w.inst.base = 8L * m + 1;
  Rational eps(1, 3 * r + 3);
  const Rational third(1, 3), two_thirds(2, 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Rational> alphas;
    alphas.reserve(r);
    for (int i = 0; i < r; ++i)
      alphas.push_back(eps * Rational::pow(Rational(w.inst.base), -(i + 1)));
    bool ok = true;
    for (int t = 0; t < n && ok; ++t) {
      Rational val = z[t].instantiate(alphas);
      if (!(third < val && val < two_thirds)) ok = false;
    }
    if (ok) {
      w.inst.epsilon = eps;
      w.inst.alphas = std::move(alphas);
      return w;
    }
    eps *= Rational(1, 2);
  }
  throw DomainError("epsilon search exhausted; weighting not realizable");
}

namespace {

std::vector<std::uint32_t> star_masks_32(const Graph& g) {
  std::vector<std::uint32_t> masks;
  for (const Bitset& s : maximal_star_sets(g))
    masks.push_back(static_cast<std::uint32_t>(s.low_mask()));
  std::sort(masks.begin(), masks.end());
  return masks;
}

bool mask_in(const std::vector<std::uint32_t>& sorted, std::uint32_t m) {
  return std::binary_search(sorted.begin(), sorted.end(), m);
}

}  // namespace

VerifyOutcome verify_equistarable(const Graph& g, const SymbolicEdgeWeighting& w,
                                  const Caps& caps) {
  const int m = g.m();
  if (m > caps.max_subset_bits)
    throw ResourceError("2^m subset scan needs m <= " + std::to_string(caps.max_subset_bits));
  if (static_cast<int>(w.values.size()) != m) throw DomainError("weighting size mismatch");
  const int r = w.arity();

  // Instantiation sanity: strictly positive everywhere, cycle edges inside
  // (1/3, 2/3). These are what make the symbolic scan meaningful.
  std::vector<Rational> inst = w.instantiated();
  for (int e = 0; e < m; ++e)
    if (inst[e].sign() <= 0)
      return {false, Bitset::from_mask(m, std::uint32_t(1) << e),
              "instantiated weight of edge " + std::to_string(e) + " is not positive"};
  Bitset cyc = w.labeling.cycle_edge_set(m);
  for (int e = cyc.find_first(); e >= 0; e = cyc.find_next(e))
    if (!(Rational(1, 3) < inst[e] && inst[e] < Rational(2, 3)))
      return {false, Bitset::from_mask(m, std::uint32_t(1) << e),
              "cycle edge " + std::to_string(e) + " outside (1/3, 2/3)"};

  const SymbolicValue one = SymbolicValue::constant(Rational(1), r);
  for (const Bitset& st : maximal_star_sets(g)) {
    SymbolicValue s(Rational(0), r);
    for (int e = st.find_first(); e >= 0; e = st.find_next(e)) s += w.values[e];
    if (!(s == one)) return {false, st, "maximal star " + st.str() + " does not sum to 1"};
  }

  std::vector<std::vector<Rational>> rows(m);
  for (int e = 0; e < m; ++e) {
    rows[e].push_back(w.values[e].c0());
    for (int i = 0; i < r; ++i) rows[e].push_back(w.values[e].coeff(i));
  }
  std::vector<Rational> target(r + 1, Rational(0));
  target[0] = Rational(1);
  auto bad = scan_lowest_hit(rows, target, star_masks_32(g), 4L * m);
  if (bad)
    return {false, Bitset::from_mask(m, *bad),
            "subset " + Bitset::from_mask(m, *bad).str() + " sums to 1 but is not a maximal star"};
  return {true, std::nullopt, ""};
}

VerifyOutcome verify_equistarable_values(const Graph& g, const std::vector<Rational>& w,
                                         const Caps& caps) {
  const int m = g.m();
  if (m > caps.max_subset_bits)
    throw ResourceError("2^m subset scan needs m <= " + std::to_string(caps.max_subset_bits));
  if (static_cast<int>(w.size()) != m) throw DomainError("weighting size mismatch");
  for (int e = 0; e < m; ++e)
    if (w[e].sign() <= 0)
      return {false, Bitset::from_mask(m, std::uint32_t(1) << e),
              "weight of edge " + std::to_string(e) + " is not positive"};
  for (const Bitset& st : maximal_star_sets(g)) {
    Rational s(0);
    for (int e = st.find_first(); e >= 0; e = st.find_next(e)) s += w[e];
    if (!(s == Rational(1)))
      return {false, st, "maximal star " + st.str() + " sums to " + s.str() + ", not 1"};
  }
  std::vector<std::vector<Rational>> rows(m);
  for (int e = 0; e < m; ++e) rows[e].push_back(w[e]);
  auto bad = scan_lowest_hit(rows, {Rational(1)}, star_masks_32(g), 0);
  if (bad)
    return {false, Bitset::from_mask(m, *bad),
            "subset " + Bitset::from_mask(m, *bad).str() + " sums to 1 but is not a maximal star"};
  return {true, std::nullopt, ""};
}

std::vector<ForcedSubsetReport> forced_subsets(const Graph& g, const HamiltonianLabeling& lab,
                                               const Caps& caps) {
  const int m = g.m();
  if (m > caps.max_subset_bits)
    throw ResourceError("2^m subset scan needs m <= " + std::to_string(caps.max_subset_bits));
  KernelBasis k = kernel_basis_from_chords(g, lab);
  const int dim = k.dimension();

  std::vector<std::vector<std::int64_t>> rows(m, std::vector<std::int64_t>(dim));
  for (int e = 0; e < m; ++e)
    for (int i = 0; i < dim; ++i) rows[e][i] = *k.basis[i][e].num_i64();

  const std::uint32_t cycle_mask = static_cast<std::uint32_t>(k.cycle_edges.low_mask());
  auto stars = star_masks_32(g);

  std::vector<std::pair<std::uint32_t, ForcedSubsetReport>> found;
  auto record = [&](std::uint32_t mask) {
    ForcedSubsetReport rep;
    rep.edges = Bitset::from_mask(m, mask);
    rep.value = Rational(std::popcount(mask & cycle_mask), 2);
    rep.is_star = mask_in(stars, mask);
    if (rep.is_star || rep.value > Rational(1))
      rep.verdict = ForcedVerdict::kHarmless;
    else if (rep.value == Rational(1))
      rep.verdict = ForcedVerdict::kRefutesEquistarability;
    else
      rep.verdict = ForcedVerdict::kRefutesStrongEquistarability;
    found.emplace_back(mask, std::move(rep));
    if (static_cast<long>(found.size()) > caps.max_reports)
      throw ResourceError("forced-subset report list exceeds cap");
  };

  if (dim == 0) {
    // Trivial kernel: every nonempty subset is forced.
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << m); ++mask) record(mask);
  } else {
    gray_subset_scan(rows, [&](std::uint32_t mask, const std::vector<std::int64_t>& sum) {
      for (int d = 0; d < dim; ++d)
        if (sum[d] != 0) return;
      record(mask);
    });
  }

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ForcedSubsetReport> out;
  out.reserve(found.size());
  for (auto& [mask, rep] : found) out.push_back(std::move(rep));
  return out;
}

StrongStarDecision decide_strong_equistarability(const Graph& g, const HamiltonianLabeling& lab,
                                                 const Caps& caps) {
  if (!is_triangle_free(g)) throw DomainError("strong equistarability decision needs a triangle-free graph");
  if (g.min_degree() < 2) throw DomainError("strong equistarability decision needs min degree >= 2");
  BadnessOutcome bad = is_bad(g, lab);
  if (!bad.certificate)
    throw DomainError("graph is not bad with this labeling; no constructible positive solution");

  StrongStarDecision d{StrongStarVerdict::kStronglyEquistarable, std::nullopt,
                       construct_equistarable_weights(g, *bad.certificate), g.m() - g.n, 0};
  auto reports = forced_subsets(g, lab, caps);
  d.forced_count = static_cast<long>(reports.size());
  for (const auto& rep : reports)
    if (rep.verdict != ForcedVerdict::kHarmless) {
      d.verdict = StrongStarVerdict::kNotStronglyEquistarable;
      d.refutation = rep;
      break;
    }
  return d;
}

}  // namespace estar

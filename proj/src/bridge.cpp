#include "estar/bridge.hpp"

#include <algorithm>
#include <map>

#include "estar/scan.hpp"

namespace estar {

Graph line_complement(const Graph& g) {
  auto [lg, map] = line_graph(g);
  (void)map;
  return complement(lg);
}

Transport equistarable_to_equistable(const Graph& g, const SymbolicEdgeWeighting& w,
                                     const Caps& caps) {
  if (!is_triangle_free(g))
    throw DomainError("the line-graph transfer needs a triangle-free root graph");
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) == 0) throw DomainError("isolated vertex in root graph");
  if (static_cast<int>(w.values.size()) != g.m()) throw DomainError("weighting size mismatch");

  Transport t;
  auto [lg, id_map] = line_graph(g);
  t.derived = complement(lg);
  t.edge_to_vertex = id_map;
  t.weighting.symbolic = w.values;
  t.weighting.values = w.instantiated();

  // Maximal stable sets of the derived graph must be exactly the maximal
  // stars of the root; this is the combinatorial content of the transfer.
  auto mss = maximal_stable_sets(t.derived, caps);
  auto stars = maximal_star_sets(g);
  if (mss != stars)
    throw DomainError("maximal stable sets of the line complement do not match maximal stars");
  return t;
}

namespace {

std::vector<std::uint32_t> sorted_masks(const std::vector<Bitset>& sets) {
  std::vector<std::uint32_t> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(static_cast<std::uint32_t>(s.low_mask()));
  std::sort(out.begin(), out.end());
  return out;
}

bool mask_in(const std::vector<std::uint32_t>& sorted, std::uint32_t m) {
  return std::binary_search(sorted.begin(), sorted.end(), m);
}

VerifyOutcome verify_vertex_system(const Graph& h, const std::vector<std::vector<Rational>>& rows,
                                   const std::vector<Rational>& target,
                                   const std::vector<Bitset>& mss) {
  auto worst = scan_lowest_hit(rows, target, sorted_masks(mss), 0);
  if (worst)
    return {false, Bitset::from_mask(h.n, *worst),
            "subset " + Bitset::from_mask(h.n, *worst).str() +
                " sums to 1 but is not a maximal stable set"};
  return {true, std::nullopt, ""};
}

}  // namespace

VerifyOutcome verify_equistable(const Graph& h, const std::vector<Rational>& w, const Caps& caps) {
  if (h.n > caps.max_subset_bits)
    throw ResourceError("2^n subset scan needs n <= " + std::to_string(caps.max_subset_bits));
  if (static_cast<int>(w.size()) != h.n) throw DomainError("weighting size mismatch");
  for (int v = 0; v < h.n; ++v)
    if (w[v].sign() <= 0)
      return {false, Bitset::from_mask(h.n, std::uint32_t(1) << v),
              "weight of vertex " + std::to_string(v) + " is not positive"};
  auto mss = maximal_stable_sets(h, caps);
  for (const Bitset& s : mss) {
    Rational total(0);
    for (int v = s.find_first(); v >= 0; v = s.find_next(v)) total += w[v];
    if (!(total == Rational(1)))
      return {false, s, "maximal stable set " + s.str() + " sums to " + total.str() + ", not 1"};
  }
  std::vector<std::vector<Rational>> rows(h.n);
  for (int v = 0; v < h.n; ++v) rows[v].push_back(w[v]);
  return verify_vertex_system(h, rows, {Rational(1)}, mss);
}

VerifyOutcome verify_equistable_symbolic(const Graph& h, const std::vector<SymbolicValue>& w,
                                         const Caps& caps) {
  if (h.n > caps.max_subset_bits)
    throw ResourceError("2^n subset scan needs n <= " + std::to_string(caps.max_subset_bits));
  if (static_cast<int>(w.size()) != h.n) throw DomainError("weighting size mismatch");
  const int r = w.empty() ? 0 : w[0].arity();
  auto mss = maximal_stable_sets(h, caps);
  const SymbolicValue one = SymbolicValue::constant(Rational(1), r);
  for (const Bitset& s : mss) {
    SymbolicValue total(Rational(0), r);
    for (int v = s.find_first(); v >= 0; v = s.find_next(v)) total += w[v];
    if (!(total == one))
      return {false, s, "maximal stable set " + s.str() + " does not sum to 1 symbolically"};
  }
  std::vector<std::vector<Rational>> rows(h.n);
  for (int v = 0; v < h.n; ++v) {
    rows[v].push_back(w[v].c0());
    for (int i = 0; i < r; ++i) rows[v].push_back(w[v].coeff(i));
  }
  std::vector<Rational> target(r + 1, Rational(0));
  target[0] = Rational(1);
  return verify_vertex_system(h, rows, target, mss);
}

namespace {

struct VertexSystem {
  std::vector<Bitset> mss;
  Matrix incidence;          // rows = maximal stable sets, cols = vertices
  LinearSolution solution;   // of M x = 1
};

VertexSystem build_vertex_system(const Graph& h, const Caps& caps) {
  VertexSystem s;
  s.mss = maximal_stable_sets(h, caps);
  if (static_cast<long>(s.mss.size()) > (1L << 14))
    throw ResourceError("maximal stable set row count exceeds 2^14");
  s.incidence = Matrix(static_cast<int>(s.mss.size()), h.n);
  for (size_t i = 0; i < s.mss.size(); ++i)
    for (int v = s.mss[i].find_first(); v >= 0; v = s.mss[i].find_next(v))
      s.incidence.at(static_cast<int>(i), v) = Rational(1);
  s.solution = solve_system(s.incidence, std::vector<Rational>(s.mss.size(), Rational(1)));
  return s;
}

bool strictly_positive(const std::vector<Rational>& x) {
  for (const auto& v : x)
    if (v.sign() <= 0) return false;
  return true;
}

bool satisfies_system(const VertexSystem& s, const std::vector<Rational>& x) {
  for (size_t i = 0; i < s.mss.size(); ++i) {
    Rational total(0);
    for (int v = s.mss[i].find_first(); v >= 0; v = s.mss[i].find_next(v)) total += x[v];
    if (!(total == Rational(1))) return false;
  }
  return true;
}

}  // namespace

StrongVertexDecision decide_strongly_equistable_small(
    const Graph& h, const std::optional<std::vector<Rational>>& supplied, const Caps& caps) {
  StrongVertexDecision d;
  if (h.n > caps.max_subset_bits)
    throw ResourceError("2^n subset scan needs n <= " + std::to_string(caps.max_subset_bits));
  VertexSystem sys = build_vertex_system(h, caps);
  if (!sys.solution.consistent) {
    d.diagnosis = "stable-set system M x = 1 is inconsistent";
    return d;
  }
  d.kernel_dimension = static_cast<int>(sys.solution.nullspace.size());

  std::vector<Rational> x;
  if (supplied) {
    if (static_cast<int>(supplied->size()) != h.n) throw DomainError("weighting size mismatch");
    if (!satisfies_system(sys, *supplied))
      throw DomainError("supplied weighting does not give every maximal stable set total 1");
    if (!strictly_positive(*supplied)) throw DomainError("supplied weighting is not positive");
    x = *supplied;
  } else if (strictly_positive(sys.solution.particular)) {
    x = sys.solution.particular;
  } else {
    d.diagnosis = "no strictly positive solution available; supply a weighting";
    return d;
  }
  d.positive_solution = x;

  // Forced subsets: indicator orthogonal to the kernel of M. Each kernel
  // vector is scaled to integers separately; orthogonality is unaffected.
  const int dim = d.kernel_dimension;
  std::vector<std::vector<Rational>> rows(h.n, std::vector<Rational>(dim));
  for (int v = 0; v < h.n; ++v)
    for (int i = 0; i < dim; ++i) rows[v][i] = sys.solution.nullspace[i][v];
  auto scaled = scale_rows(rows);

  auto mss_masks = sorted_masks(sys.mss);
  std::optional<std::uint32_t> refuted;
  long forced = 0;
  auto consider = [&](std::uint32_t mask) {
    ++forced;
    if (mask_in(mss_masks, mask)) return;
    Rational val(0);
    for (int v = 0; v < h.n; ++v)
      if (mask & (std::uint32_t(1) << v)) val += x[v];
    if (val <= Rational(1) && (!refuted || mask < *refuted)) refuted = mask;
  };

  if (dim == 0) {
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << h.n); ++mask) consider(mask);
  } else if (scaled) {
    gray_subset_scan(scaled->rows, [&](std::uint32_t mask, const std::vector<std::int64_t>& sum) {
      for (int i = 0; i < dim; ++i)
        if (sum[i] != 0) return;
      consider(mask);
    });
  } else {
    gray_subset_scan(rows, [&](std::uint32_t mask, const std::vector<Rational>& sum) {
      for (int i = 0; i < dim; ++i)
        if (sum[i].sign() != 0) return;
      consider(mask);
    });
  }

  d.forced_count = forced;
  if (refuted) {
    d.verdict = VertexVerdict::kFails;
    d.refuting_subset = Bitset::from_mask(h.n, *refuted);
    Rational val(0);
    for (int v = 0; v < h.n; ++v)
      if (*refuted & (std::uint32_t(1) << v)) val += x[v];
    d.refuting_value = val;
  } else {
    d.verdict = VertexVerdict::kHolds;
  }
  return d;
}

EquistableDecision decide_equistable_small(const Graph& h,
                                           const std::optional<std::vector<Rational>>& supplied,
                                           const Caps& caps) {
  EquistableDecision d;
  StrongVertexDecision strong = decide_strongly_equistable_small(h, supplied, caps);
  if (strong.verdict == VertexVerdict::kUndecided) {
    d.diagnosis = strong.diagnosis;
    return d;
  }
  if (strong.verdict == VertexVerdict::kFails && strong.refuting_value == Rational(1)) {
    d.verdict = VertexVerdict::kFails;
    d.forced_to_one = strong.refuting_subset;
    d.diagnosis = "non-stable subset forced to total exactly 1";
    return d;
  }

  // A positive solution exists and no non-stable subset is forced to 1, so
  // almost every point of the positive solution set works. Perturb the known
  // positive solution along the kernel with a power-of-base scheme and let
  // the exhaustive verifier have the final word.
  VertexSystem sys = build_vertex_system(h, caps);
  const auto& x0 = strong.positive_solution;
  const auto& null_basis = sys.solution.nullspace;
  Rational step(1, 4L * h.n + 2);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Rational> x = x0;
    Rational delta = step;
    for (const auto& nv : null_basis) {
      delta *= Rational(1, 4L * h.n + 3);
      for (int v = 0; v < h.n; ++v) x[v] += delta * nv[v];
    }
    if (strictly_positive(x)) {
      VerifyOutcome vo = verify_equistable(h, x, caps);
      if (vo.ok) {
        d.verdict = VertexVerdict::kHolds;
        d.weighting = std::move(x);
        return d;
      }
    }
    step *= Rational(1, 2);
  }
  d.diagnosis = "generic perturbation search exhausted";
  return d;
}

CombinerResult strongly_equistable_to_equistable(
    const Graph& h, const std::function<std::vector<Rational>(const Bitset&)>& family,
    const std::vector<Rational>& start, const Caps& caps) {
  if (h.n > caps.max_subset_bits)
    throw ResourceError("2^n subset scan needs n <= " + std::to_string(caps.max_subset_bits));
  VertexSystem sys = build_vertex_system(h, caps);
  auto mss_masks = sorted_masks(sys.mss);
  if (!satisfies_system(sys, start) || !strictly_positive(start))
    throw DomainError("start weighting must be positive with all maximal stable sets at 1");

  const int n = h.n;
  auto subset_total = [&](const std::vector<Rational>& w, std::uint32_t mask) {
    Rational t(0);
    for (int v = 0; v < n; ++v)
      if (mask & (std::uint32_t(1) << v)) t += w[v];
    return t;
  };

  // One pass over all nonempty subsets: the count of offending value-1
  // subsets, the lowest offender, and the smallest gap |total - 1| over
  // subsets with total != 1.
  struct ScanStats {
    long t_count = 0;
    std::optional<std::uint32_t> tstar;
    std::optional<Rational> min_gap;
  };
  auto scan_stats = [&](const std::vector<Rational>& w) {
    ScanStats st;
    std::vector<std::vector<Rational>> rows(n);
    for (int v = 0; v < n; ++v) rows[v].push_back(w[v]);
    auto handle = [&](std::uint32_t mask, const Rational& total) {
      if (total == Rational(1)) {
        if (!mask_in(mss_masks, mask)) {
          ++st.t_count;
          if (!st.tstar || mask < *st.tstar) st.tstar = mask;
        }
      } else {
        Rational gap = (total - Rational(1)).abs();
        if (!st.min_gap || gap < *st.min_gap) st.min_gap = gap;
      }
    };
    if (auto scaled = scale_rows(rows)) {
      const mpz_class& scale = scaled->scale;
      gray_subset_scan(scaled->rows, [&](std::uint32_t mask, const std::vector<std::int64_t>& sum) {
        // Work in scaled units; convert only on the rare interesting cases.
        mpz_class s(static_cast<long>(sum[0]));
        if (s == scale) {
          if (!mask_in(mss_masks, mask)) {
            ++st.t_count;
            if (!st.tstar || mask < *st.tstar) st.tstar = mask;
          }
        } else {
          Rational gap = Rational(mpq_class(mpz_class(::abs(s - scale)), scale));
          if (!st.min_gap || gap < *st.min_gap) st.min_gap = gap;
        }
      });
    } else {
      gray_subset_scan(rows, [&](std::uint32_t mask, const std::vector<Rational>& sum) {
        handle(mask, sum[0]);
      });
    }
    return st;
  };

  CombinerResult out;
  std::vector<Rational> phi = start;
  ScanStats st = scan_stats(phi);
  long guard = 0;
  while (st.tstar) {
    if (++guard > 1 << 16) throw ResourceError("combiner did not terminate");
    Bitset tstar = Bitset::from_mask(n, *st.tstar);
    std::vector<Rational> phi_t = family(tstar);
    if (static_cast<int>(phi_t.size()) != n) throw DomainError("family weighting size mismatch");
    if (!satisfies_system(sys, phi_t) || !strictly_positive(phi_t))
      throw DomainError("family weighting violates the stable-set constraints");
    if (subset_total(phi_t, *st.tstar) == Rational(1))
      throw DomainError("family weighting does not separate its own subset");

    // eps below every gap |phi(T)-1| (over T with total != 1) and below every
    // vertex weight of phi_T* (a lower bound for phi_T*(T) over nonempty T).
    Rational eps = st.min_gap ? *st.min_gap : Rational(1);
    for (const auto& v : phi_t) eps = std::min(eps, v);
    eps *= Rational(1, 2);
    if (eps >= Rational(1)) eps = Rational(1, 2);

    CombinerStep step;
    step.tstar = tstar;
    step.epsilon = eps;
    step.value_one_before = st.t_count;

    Rational lam = eps / Rational(n);
    for (int v = 0; v < n; ++v) phi[v] = (Rational(1) - lam) * phi[v] + lam * phi_t[v];

    ScanStats next = scan_stats(phi);
    step.value_one_after = next.t_count;
    if (next.t_count >= st.t_count)
      throw DomainError("combiner step failed to decrease the offending count");
    out.steps.push_back(std::move(step));
    st = next;
  }

  VerifyOutcome vo = verify_equistable(h, phi, caps);
  if (!vo.ok) throw DomainError("combiner result failed verification: " + vo.detail);
  out.weighting = std::move(phi);
  return out;
}

MatchingFacts matching_facts(const Graph& g, const Caps& caps) {
  MatchingFacts f;
  f.perfect_matching = has_perfect_matching(g).has_value();
  f.two_matching = !k_matchings(g, 2, caps).empty();
  f.two_extendable = f.two_matching && is_k_extendable(g, 2, caps);
  return f;
}

ConjectureCertificate make_conjecture_certificate(const Graph& g, const HamiltonianLabeling& lab,
                                                  const std::string& tag, const Caps& caps) {
  if (g.n % 2 == 0) throw DomainError("counterexample roots have odd order");
  if (!is_triangle_free(g)) throw DomainError("counterexample roots are triangle-free");
  BadnessOutcome bad = is_bad(g, lab);
  if (!bad.certificate) throw DomainError("root graph is not bad with this labeling");

  ConjectureCertificate c;
  c.conjecture = tag;
  c.root = g;
  c.badness = *bad.certificate;
  c.weights = construct_equistarable_weights(g, c.badness);

  Transport t = equistarable_to_equistable(g, c.weights, caps);
  c.derived = t.derived;
  c.transported = t.weighting;
  c.facts = matching_facts(g, caps);

  if (c.facts.perfect_matching)
    throw DomainError("odd-order root unexpectedly has a perfect matching");

  if (g.m() <= caps.max_subset_bits) {
    VerifyOutcome star_ok = verify_equistarable(g, c.weights, caps);
    if (!star_ok.ok) throw DomainError("constructed weighting failed verification: " + star_ok.detail);
    VerifyOutcome vert_ok = verify_equistable(c.derived, c.transported.values, caps);
    if (!vert_ok.ok) throw DomainError("transported weighting failed verification: " + vert_ok.detail);
  }

  if (tag == "no-strong-clique" || tag == "general-partition-ne-equistable") {
    if (!strong_cliques(c.derived, caps).empty())
      throw DomainError("derived graph unexpectedly has a strong clique");
  } else if (tag == "strongly-equistable-ne-equistable") {
    StrongStarDecision d = decide_strong_equistarability(g, lab, caps);
    if (d.verdict != StrongStarVerdict::kNotStronglyEquistarable)
      throw DomainError("root is strongly equistarable; tag does not apply");
    c.forced = d.refutation;
  } else if (tag == "general-partition-ne-strongly-equistable") {
    StrongStarDecision d = decide_strong_equistarability(g, lab, caps);
    if (d.verdict != StrongStarVerdict::kStronglyEquistarable)
      throw DomainError("root is not strongly equistarable; tag does not apply");
    if (!strong_cliques(c.derived, caps).empty())
      throw DomainError("derived graph unexpectedly has a strong clique");
  } else {
    throw InputError("unknown conjecture tag: " + tag);
  }
  return c;
}

ConjectureCertificate check_no_strong_clique_conclusion(const Graph& g, const Caps& caps) {
  std::optional<HamiltonianLabeling> lab = natural_labeling(g);
  std::optional<BadnessCertificate> cert;
  if (lab) {
    BadnessOutcome o = is_bad(g, *lab);
    if (o.certificate) cert = std::move(o.certificate);
  }
  if (!cert) cert = find_bad_labeling(g, caps);
  if (!cert) throw DomainError("graph is not bad; the conclusion does not apply");
  return make_conjecture_certificate(g, cert->labeling, "no-strong-clique", caps);
}

}  // namespace estar

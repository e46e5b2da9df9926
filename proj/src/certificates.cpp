#include "estar/certificates.hpp"

#include <algorithm>

namespace estar {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("schema: missing field '") + key + "'");
  return j.at(key);
}

std::string need_string(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_string()) throw InputError(std::string("schema: field '") + key + "' must be a string");
  return v.get<std::string>();
}

long need_int(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("schema: field '") + key + "' must be an integer");
  return v.get<long>();
}

bool need_bool(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_boolean()) throw InputError(std::string("schema: field '") + key + "' must be a boolean");
  return v.get<bool>();
}

Rational need_rational(const Json& j, const char* key) {
  return Rational::from_string(need_string(j, key));
}

Json label_pair(const Graph& g, int edge) {
  return Json::array({g.label(g.edges[edge].first), g.label(g.edges[edge].second)});
}

int edge_from_label_pair(const Graph& g, const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("schema: edge must be a label pair");
  int u = j.at(0).get<int>() - g.label_offset;
  int v = j.at(1).get<int>() - g.label_offset;
  int e = (u >= 0 && u < g.n && v >= 0 && v < g.n) ? g.edge_id(u, v) : -1;
  if (e < 0) throw InputError("schema: unknown edge " + j.dump());
  return e;
}

Json order_to_json(const Graph& g, const std::vector<int>& order) {
  Json a = Json::array();
  for (int v : order) a.push_back(g.label(v));
  return a;
}

HamiltonianLabeling labeling_from_json(const Graph& g, const Json& order_json) {
  if (!order_json.is_array()) throw InputError("schema: 'order' must be an array");
  std::vector<int> order;
  for (const auto& v : order_json) order.push_back(v.get<int>() - g.label_offset);
  return labeling_from_order(g, order);
}

std::vector<Rational> rational_list_from_json(const Json& a, const char* what) {
  if (!a.is_array()) throw InputError(std::string("schema: '") + what + "' must be an array");
  std::vector<Rational> out;
  for (const auto& v : a) out.push_back(Rational::from_string(v.get<std::string>()));
  return out;
}

Json rational_list_to_json(const std::vector<Rational>& vals) {
  Json a = Json::array();
  for (const auto& v : vals) a.push_back(v.str());
  return a;
}

bool same_graph(const Graph& a, const Graph& b) {
  return a.n == b.n && a.label_offset == b.label_offset && a.edges == b.edges;
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.n;
  j["m"] = g.m();
  j["label_offset"] = g.label_offset;
  Json edges = Json::array();
  for (int e = 0; e < g.m(); ++e) edges.push_back(label_pair(g, e));
  j["edges"] = edges;
  return j;
}

Graph graph_from_json(const Json& j) {
  int n = static_cast<int>(need_int(j, "n"));
  int m = static_cast<int>(need_int(j, "m"));
  int offset = static_cast<int>(need_int(j, "label_offset"));
  const Json& edges = need(j, "edges");
  if (!edges.is_array() || static_cast<int>(edges.size()) != m)
    throw InputError("schema: edge list length disagrees with m");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw InputError("schema: edge must be a label pair");
    pairs.emplace_back(e.at(0).get<int>() - offset, e.at(1).get<int>() - offset);
  }
  Graph g = build_graph(n, pairs);
  g.label_offset = offset;
  return g;
}

Json edge_set_to_json(const Graph& g, const Bitset& edges) {
  Json a = Json::array();
  for (int e = edges.find_first(); e >= 0; e = edges.find_next(e)) a.push_back(label_pair(g, e));
  return a;
}

Bitset edge_set_from_json(const Graph& g, const Json& j) {
  if (!j.is_array()) throw InputError("schema: edge set must be an array");
  Bitset b(g.m());
  for (const auto& e : j) b.set(edge_from_label_pair(g, e));
  return b;
}

Json vertex_set_to_json(const Graph& g, const Bitset& vertices) {
  Json a = Json::array();
  for (int v = vertices.find_first(); v >= 0; v = vertices.find_next(v)) a.push_back(g.label(v));
  return a;
}

Bitset vertex_set_from_json(const Graph& g, const Json& j) {
  if (!j.is_array()) throw InputError("schema: vertex set must be an array");
  Bitset b(g.n);
  for (const auto& v : j) {
    int raw = v.get<int>() - g.label_offset;
    if (raw < 0 || raw >= g.n) throw InputError("schema: vertex label out of range");
    b.set(raw);
  }
  return b;
}

namespace {

Json witnesses_to_json(const Graph& g, const BadnessCertificate& cert) {
  Json a = Json::array();
  for (const auto& [e, e2, w] : cert.witnesses) {
    Json row;
    row["pair"] = Json::array({label_pair(g, e), label_pair(g, e2)});
    row["chord"] = label_pair(g, w.chord);
    row["class"] = chord_class_name(w.cls);
    a.push_back(row);
  }
  return a;
}

Json weighting_block(const Graph& g, const SymbolicEdgeWeighting& w) {
  Json j;
  j["order"] = order_to_json(g, w.labeling.order);
  Json symbols = Json::array();
  for (int e : w.symbol_edges) symbols.push_back(label_pair(g, e));
  j["symbols"] = symbols;
  Json weights = Json::array();
  for (int e = 0; e < g.m(); ++e) {
    Json row;
    row["edge"] = label_pair(g, e);
    row["c0"] = w.values[e].c0().str();
    Json alpha = Json::array();
    for (int i = 0; i < w.arity(); ++i) alpha.push_back(w.values[e].coeff(i).str());
    row["alpha"] = alpha;
    weights.push_back(row);
  }
  j["weights"] = weights;
  Json inst;
  inst["epsilon"] = w.inst.epsilon.str();
  inst["base"] = w.inst.base;
  inst["alphas"] = rational_list_to_json(w.inst.alphas);
  j["instantiation"] = inst;
  return j;
}

SymbolicEdgeWeighting weighting_from_block(const Graph& g, const Json& j) {
  SymbolicEdgeWeighting w;
  w.labeling = labeling_from_json(g, need(j, "order"));
  const Json& symbols = need(j, "symbols");
  for (const auto& s : symbols) w.symbol_edges.push_back(edge_from_label_pair(g, s));
  if (w.symbol_edges != w.labeling.chords)
    throw InputError("schema: symbols must list the labeling's chords in order");
  const int r = w.arity();
  const Json& weights = need(j, "weights");
  if (!weights.is_array() || static_cast<int>(weights.size()) != g.m())
    throw InputError("schema: weights must cover every edge");
  for (int e = 0; e < g.m(); ++e) {
    const Json& row = weights.at(e);
    if (edge_from_label_pair(g, need(row, "edge")) != e)
      throw InputError("schema: weights must be listed in edge-id order");
    Rational c0 = need_rational(row, "c0");
    std::vector<Rational> coeffs = rational_list_from_json(need(row, "alpha"), "alpha");
    if (static_cast<int>(coeffs.size()) != r) throw InputError("schema: alpha arity mismatch");
    w.values.emplace_back(c0, std::move(coeffs));
  }
  const Json& inst = need(j, "instantiation");
  w.inst.epsilon = need_rational(inst, "epsilon");
  w.inst.base = need_int(inst, "base");
  w.inst.alphas = rational_list_from_json(need(inst, "alphas"), "alphas");
  if (static_cast<int>(w.inst.alphas.size()) != r)
    throw InputError("schema: instantiation arity mismatch");
  return w;
}

Json forced_report_to_json(const Graph& g, const ForcedSubsetReport& rep) {
  Json j;
  j["edges"] = edge_set_to_json(g, rep.edges);
  j["value"] = rep.value.str();
  j["is_star"] = rep.is_star;
  j["verdict"] = forced_verdict_name(rep.verdict);
  return j;
}

Json matching_facts_to_json(const MatchingFacts& f) {
  Json j;
  j["perfect_matching"] = f.perfect_matching;
  j["two_matching"] = f.two_matching;
  j["two_extendable"] = f.two_extendable;
  return j;
}

}  // namespace

Json badness_certificate_json(const Graph& g, const BadnessCertificate& cert) {
  Json j;
  j["kind"] = "badness";
  j["verifier_version"] = kVerifierVersion;
  j["graph"] = graph_to_json(g);
  j["order"] = order_to_json(g, cert.labeling.order);
  j["witnesses"] = witnesses_to_json(g, cert);
  return j;
}

Json equistarable_certificate_json(const Graph& g, const SymbolicEdgeWeighting& w) {
  Json j;
  j["kind"] = "equistarable";
  j["verifier_version"] = kVerifierVersion;
  j["graph"] = graph_to_json(g);
  j["edge_weights"] = rational_list_to_json(w.instantiated());
  j["weighting"] = weighting_block(g, w);
  return j;
}

Json strong_equistarability_certificate_json(const Graph& g, const HamiltonianLabeling& lab,
                                             const StrongStarDecision& d) {
  Json j;
  j["kind"] = "strong-equistarability";
  j["verifier_version"] = kVerifierVersion;
  j["graph"] = graph_to_json(g);
  j["order"] = order_to_json(g, lab.order);
  j["kernel_dimension"] = d.kernel_dimension;
  j["forced_count"] = d.forced_count;
  j["verdict"] = d.verdict == StrongStarVerdict::kStronglyEquistarable
                     ? "strongly-equistarable"
                     : "not-strongly-equistarable";
  if (d.refutation) j["forced_subset"] = forced_report_to_json(g, *d.refutation);
  j["weighting"] = weighting_block(g, d.weights);
  return j;
}

Json equistable_certificate_json(const Graph& h, const std::vector<Rational>& w) {
  Json j;
  j["kind"] = "equistable";
  j["verifier_version"] = kVerifierVersion;
  j["graph"] = graph_to_json(h);
  j["vertex_weights"] = rational_list_to_json(w);
  return j;
}

Json strongly_equistable_certificate_json(const Graph& h, const StrongVertexDecision& d) {
  Json j;
  j["kind"] = "strongly-equistable";
  j["verifier_version"] = kVerifierVersion;
  j["graph"] = graph_to_json(h);
  j["kernel_dimension"] = d.kernel_dimension;
  j["forced_count"] = d.forced_count;
  j["verdict"] = d.verdict == VertexVerdict::kHolds ? "strongly-equistable"
                                                    : "not-strongly-equistable";
  if (d.refuting_subset) {
    Json f;
    f["vertices"] = vertex_set_to_json(h, *d.refuting_subset);
    f["value"] = d.refuting_value.str();
    j["forced_subset"] = f;
  }
  j["positive_weights"] = rational_list_to_json(d.positive_solution);
  return j;
}

Json conjecture_certificate_json(const ConjectureCertificate& c) {
  Json j;
  j["kind"] = "conjecture";
  j["conjecture"] = c.conjecture;
  j["verifier_version"] = kVerifierVersion;
  j["root_graph"] = graph_to_json(c.root);
  j["derived_graph"] = graph_to_json(c.derived);
  j["weighting"] = weighting_block(c.root, c.weights);
  if (c.forced) j["forced_subset"] = forced_report_to_json(c.root, *c.forced);
  Json badness;
  badness["order"] = order_to_json(c.root, c.badness.labeling.order);
  badness["witnesses"] = witnesses_to_json(c.root, c.badness);
  j["badness"] = badness;
  j["matching_facts"] = matching_facts_to_json(c.facts);
  return j;
}

std::string dump_certificate(const Json& j) { return j.dump(2) + "\n"; }

namespace {

// ---- verification helpers -------------------------------------------------

VerifyReport fail(const std::string& why) { return {false, why}; }
VerifyReport pass() { return {true, "all claims re-verified"}; }

VerifyReport verify_badness_block(const Graph& g, const Json& order_json, const Json& witnesses,
                                  HamiltonianLabeling* lab_out) {
  HamiltonianLabeling lab = labeling_from_json(g, order_json);
  BadnessOutcome out = is_bad(g, lab);
  if (!out.certificate)
    return fail("graph is not bad with the recorded labeling; uncovered pair found");
  if (lab_out) *lab_out = lab;

  if (!witnesses.is_array()) return fail("schema: witnesses must be an array");
  // Coverage: the recorded pairs must be exactly the disjoint cycle-edge
  // pairs, and each recorded chord must itself classify as a witness.
  std::vector<std::pair<int, int>> expected;
  for (const auto& [e, e2, w] : out.certificate->witnesses) expected.emplace_back(e, e2);
  std::vector<std::pair<int, int>> got;
  for (const auto& row : witnesses) {
    const Json& pr = need(row, "pair");
    if (!pr.is_array() || pr.size() != 2) return fail("schema: witness pair must list two edges");
    int e = edge_from_label_pair(g, pr.at(0));
    int e2 = edge_from_label_pair(g, pr.at(1));
    if (e > e2) std::swap(e, e2);
    got.emplace_back(e, e2);
    int chord = edge_from_label_pair(g, need(row, "chord"));
    ChordClassification c = classify_chord(g, lab, e, e2, chord);
    if (c.cls == ChordClass::kNeither)
      return fail("recorded chord is not a witness for pair " + pr.dump());
    if (chord_class_name(c.cls) != need_string(row, "class"))
      return fail("recorded class mismatch for pair " + pr.dump() + ": recomputed " +
                  chord_class_name(c.cls));
  }
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  if (expected != got) return fail("witness list does not cover exactly the disjoint pairs");
  return pass();
}

// Full re-check of a symbolic weighting: star sums, both exhaustive scans,
// and the instantiation recipe (base 8m+1, alphas eps*B^-(i+1)).
VerifyReport verify_weighting_block(const Graph& g, const SymbolicEdgeWeighting& w,
                                    const Caps& caps) {
  if (w.inst.base != 8L * g.m() + 1)
    return fail("instantiation base is not 8m+1");
  if (!(w.inst.epsilon > Rational(0)) || !(w.inst.epsilon < Rational(1)))
    return fail("instantiation epsilon outside (0,1)");
  for (int i = 0; i < w.arity(); ++i) {
    Rational expect = w.inst.epsilon * Rational::pow(Rational(w.inst.base), -(i + 1));
    if (!(w.inst.alphas[i] == expect))
      return fail("alpha_" + std::to_string(i + 1) + " does not follow the power-of-base scheme");
  }
  VerifyOutcome sym = verify_equistarable(g, w, caps);
  if (!sym.ok) return fail("symbolic scan: " + sym.detail);
  VerifyOutcome val = verify_equistarable_values(g, w.instantiated(), caps);
  if (!val.ok) return fail("instantiated scan: " + val.detail);
  return pass();
}

VerifyReport verify_badness_cert(const Json& j, const Caps&) {
  Graph g = graph_from_json(need(j, "graph"));
  return verify_badness_block(g, need(j, "order"), need(j, "witnesses"), nullptr);
}

VerifyReport verify_equistarable_cert(const Json& j, const Caps& caps) {
  Graph g = graph_from_json(need(j, "graph"));
  std::vector<Rational> values = rational_list_from_json(need(j, "edge_weights"), "edge_weights");
  if (static_cast<int>(values.size()) != g.m()) return fail("schema: edge_weights length mismatch");
  if (j.contains("weighting")) {
    SymbolicEdgeWeighting w = weighting_from_block(g, j.at("weighting"));
    VerifyReport r = verify_weighting_block(g, w, caps);
    if (!r.ok) return r;
    std::vector<Rational> inst = w.instantiated();
    for (int e = 0; e < g.m(); ++e)
      if (!(inst[e] == values[e]))
        return fail("edge_weights[" + std::to_string(e) + "] = " + values[e].str() +
                    " differs from the instantiated weighting value " + inst[e].str());
    return pass();
  }
  VerifyOutcome val = verify_equistarable_values(g, values, caps);
  if (!val.ok) return fail(val.detail);
  return pass();
}

VerifyReport verify_strong_equistarability_cert(const Json& j, const Caps& caps) {
  Graph g = graph_from_json(need(j, "graph"));
  HamiltonianLabeling lab = labeling_from_json(g, need(j, "order"));
  SymbolicEdgeWeighting w = weighting_from_block(g, need(j, "weighting"));
  VerifyReport wr = verify_weighting_block(g, w, caps);
  if (!wr.ok) return wr;

  StrongStarDecision d = decide_strong_equistarability(g, lab, caps);
  std::string verdict = need_string(j, "verdict");
  std::string computed = d.verdict == StrongStarVerdict::kStronglyEquistarable
                             ? "strongly-equistarable"
                             : "not-strongly-equistarable";
  if (verdict != computed) return fail("verdict mismatch: recomputed " + computed);
  if (need_int(j, "kernel_dimension") != d.kernel_dimension)
    return fail("kernel dimension mismatch: recomputed " + std::to_string(d.kernel_dimension));

  if (verdict == "not-strongly-equistarable") {
    if (!j.contains("forced_subset")) return fail("schema: refuting verdict needs forced_subset");
    const Json& f = j.at("forced_subset");
    Bitset t = edge_set_from_json(g, need(f, "edges"));
    Rational recorded = need_rational(f, "value");
    KernelBasis k = kernel_basis_from_chords(g, lab);
    auto fv = forced_value(k, t);
    if (!fv) return fail("recorded subset is not forced at all");
    if (!(*fv == recorded))
      return fail("forced value mismatch: recorded " + recorded.str() + ", recomputed " +
                  fv->str());
    if (*fv > Rational(1)) return fail("recorded forced value does not refute anything");
    auto stars = maximal_star_sets(g);
    if (std::find(stars.begin(), stars.end(), t) != stars.end())
      return fail("recorded subset is a maximal star");
  }
  return pass();
}

VerifyReport verify_equistable_cert(const Json& j, const Caps& caps) {
  Graph h = graph_from_json(need(j, "graph"));
  std::vector<Rational> w = rational_list_from_json(need(j, "vertex_weights"), "vertex_weights");
  if (static_cast<int>(w.size()) != h.n) return fail("schema: vertex_weights length mismatch");
  VerifyOutcome v = verify_equistable(h, w, caps);
  if (!v.ok) return fail(v.detail);
  return pass();
}

VerifyReport verify_strongly_equistable_cert(const Json& j, const Caps& caps) {
  Graph h = graph_from_json(need(j, "graph"));
  std::vector<Rational> w =
      rational_list_from_json(need(j, "positive_weights"), "positive_weights");
  if (static_cast<int>(w.size()) != h.n) return fail("schema: positive_weights length mismatch");
  StrongVertexDecision d = decide_strongly_equistable_small(h, w, caps);
  if (d.verdict == VertexVerdict::kUndecided) return fail("undecided: " + d.diagnosis);
  std::string verdict = need_string(j, "verdict");
  std::string computed =
      d.verdict == VertexVerdict::kHolds ? "strongly-equistable" : "not-strongly-equistable";
  if (verdict != computed) return fail("verdict mismatch: recomputed " + computed);
  if (need_int(j, "kernel_dimension") != d.kernel_dimension)
    return fail("kernel dimension mismatch: recomputed " + std::to_string(d.kernel_dimension));
  if (verdict == "not-strongly-equistable") {
    if (!j.contains("forced_subset")) return fail("schema: refuting verdict needs forced_subset");
    const Json& f = j.at("forced_subset");
    Bitset t = vertex_set_from_json(h, need(f, "vertices"));
    Rational recorded = need_rational(f, "value");
    Rational total(0);
    for (int v = t.find_first(); v >= 0; v = t.find_next(v)) total += w[v];
    if (!(total == recorded))
      return fail("recorded value mismatch: weights give " + total.str());
    if (!d.refuting_subset || !(t == *d.refuting_subset) || !(recorded == d.refuting_value))
      return fail("refutation differs from the recomputed one");
  }
  return pass();
}

VerifyReport verify_conjecture_cert(const Json& j, const Caps& caps) {
  std::string tag = need_string(j, "conjecture");
  Graph root = graph_from_json(need(j, "root_graph"));
  Graph derived = graph_from_json(need(j, "derived_graph"));

  if (root.n % 2 == 0) return fail("root graph has even order");
  if (!is_triangle_free(root)) return fail("root graph is not triangle-free");

  const Json& badness = need(j, "badness");
  HamiltonianLabeling lab;
  VerifyReport br = verify_badness_block(root, need(badness, "order"), need(badness, "witnesses"), &lab);
  if (!br.ok) return br;

  SymbolicEdgeWeighting w = weighting_from_block(root, need(j, "weighting"));
  VerifyReport wr = verify_weighting_block(root, w, caps);
  if (!wr.ok) return wr;

  Transport t = equistarable_to_equistable(root, w, caps);
  if (!same_graph(t.derived, derived))
    return fail("derived graph is not the complement of the root's line graph");
  VerifyOutcome ve = verify_equistable(derived, t.weighting.values, caps);
  if (!ve.ok) return fail("transported weighting: " + ve.detail);

  MatchingFacts f = matching_facts(root, caps);
  const Json& facts = need(j, "matching_facts");
  if (f.perfect_matching != need_bool(facts, "perfect_matching") ||
      f.two_matching != need_bool(facts, "two_matching") ||
      f.two_extendable != need_bool(facts, "two_extendable"))
    return fail("matching facts do not recompute");
  if (f.perfect_matching) return fail("root graph has a perfect matching");

  if (tag == "no-strong-clique" || tag == "general-partition-ne-equistable" ||
      tag == "general-partition-ne-strongly-equistable") {
    if (!strong_cliques(derived, caps).empty())
      return fail("derived graph has a strong clique after all");
    if (is_general_partition_via_strong_cliques(derived, caps))
      return fail("derived graph is general partition after all");
  }
  if (tag == "strongly-equistable-ne-equistable") {
    if (!j.contains("forced_subset")) return fail("schema: tag needs forced_subset evidence");
    const Json& fs = j.at("forced_subset");
    Bitset tset = edge_set_from_json(root, need(fs, "edges"));
    Rational recorded = need_rational(fs, "value");
    KernelBasis k = kernel_basis_from_chords(root, lab);
    auto fv = forced_value(k, tset);
    if (!fv) return fail("recorded subset is not forced");
    if (!(*fv == recorded))
      return fail("forced value mismatch: recomputed " + fv->str());
    if (*fv > Rational(1)) return fail("recorded forced value does not refute anything");
    auto stars = maximal_star_sets(root);
    if (std::find(stars.begin(), stars.end(), tset) != stars.end())
      return fail("recorded subset is a maximal star");
  }
  if (tag == "general-partition-ne-strongly-equistable") {
    StrongStarDecision d = decide_strong_equistarability(root, lab, caps);
    if (d.verdict != StrongStarVerdict::kStronglyEquistarable)
      return fail("root is not strongly equistarable");
  }
  return pass();
}

VerifyReport verify_property_check_cert(const Json& j, const Caps& caps);

}  // namespace

VerifyReport verify_certificate(const Json& j, const Caps& caps) {
  std::string kind;
  try {
    kind = need_string(j, "kind");
    if (kind == "badness") return verify_badness_cert(j, caps);
    if (kind == "equistarable") return verify_equistarable_cert(j, caps);
    if (kind == "strong-equistarability") return verify_strong_equistarability_cert(j, caps);
    if (kind == "equistable") return verify_equistable_cert(j, caps);
    if (kind == "strongly-equistable") return verify_strongly_equistable_cert(j, caps);
    if (kind == "conjecture") return verify_conjecture_cert(j, caps);
    if (kind == "property-check") return verify_property_check_cert(j, caps);
  } catch (const Json::exception& e) {
    throw InputError(std::string("schema: ") + e.what());
  }
  throw InputError("schema: unknown certificate kind '" + kind + "'");
}

// ---- property checks -------------------------------------------------------

const std::vector<std::string>& known_properties() {
  static const std::vector<std::string> props = {
      "bad",        "equistarable",      "strongly-equistarable", "equistable",
      "strongly-equistable", "general-partition", "strong-clique",         "2-extendable"};
  return props;
}

namespace {

Json property_check_json(const Graph& g, const std::string& property, bool holds, Json evidence) {
  Json j;
  j["kind"] = "property-check";
  j["verifier_version"] = kVerifierVersion;
  j["property"] = property;
  j["graph"] = graph_to_json(g);
  j["verdict"] = holds ? "holds" : "fails";
  j["evidence"] = std::move(evidence);
  return j;
}

std::optional<BadnessCertificate> search_badness(const Graph& g, const Caps& caps) {
  if (auto lab = natural_labeling(g)) {
    BadnessOutcome o = is_bad(g, *lab);
    if (o.certificate) return o.certificate;
  }
  return find_bad_labeling(g, caps);
}

PropertyOutcome check_bad(const Graph& g, const Caps& caps) {
  if (g.n % 2 == 0) {
    Json ev;
    ev["reason"] = "even order";
    return {1, "not bad: even order", property_check_json(g, "bad", false, ev)};
  }
  if (auto cert = search_badness(g, caps))
    return {0, "bad", badness_certificate_json(g, *cert)};
  Json ev;
  if (auto lab = natural_labeling(g)) {
    BadnessOutcome o = is_bad(g, *lab);
    if (o.first_uncovered) {
      ev["labeling"] = order_to_json(g, lab->order);
      ev["first_uncovered_pair"] = Json::array(
          {label_pair(g, o.first_uncovered->first), label_pair(g, o.first_uncovered->second)});
    }
  }
  if (ev.is_null()) ev = Json::object({{"reason", "no Hamiltonian labeling satisfies the condition"}});
  return {1, "not bad", property_check_json(g, "bad", false, ev)};
}

PropertyOutcome check_equistarable(const Graph& g, const Caps& caps) {
  if (auto cert = search_badness(g, caps)) {
    SymbolicEdgeWeighting w = construct_equistarable_weights(g, *cert);
    VerifyOutcome v = verify_equistarable(g, w, caps);
    if (!v.ok) return {1, "constructed weighting failed: " + v.detail, Json()};
    return {0, "equistarable", equistarable_certificate_json(g, w)};
  }
  // Not provably bad; fall back to the forced-value criterion on the
  // maximal-star system when a positive solution presents itself.
  auto stars = maximal_star_sets(g);
  if (stars.empty()) return {2, "no maximal stars; not in scope", Json()};
  if (g.m() > caps.max_subset_bits) return {2, "edge count beyond subset cap", Json()};
  Matrix sys(static_cast<int>(stars.size()), g.m());
  for (size_t i = 0; i < stars.size(); ++i)
    for (int e = stars[i].find_first(); e >= 0; e = stars[i].find_next(e))
      sys.at(static_cast<int>(i), e) = Rational(1);
  LinearSolution sol = solve_system(sys, std::vector<Rational>(stars.size(), Rational(1)));
  if (!sol.consistent) {
    Json ev;
    ev["reason"] = "star system is inconsistent";
    return {1, "not equistarable: star system inconsistent",
            property_check_json(g, "equistarable", false, ev)};
  }
  bool positive = true;
  for (const auto& x : sol.particular)
    if (x.sign() <= 0) positive = false;
  if (!positive) return {2, "no strictly positive star solution found at caps", Json()};
  VerifyOutcome v = verify_equistarable_values(g, sol.particular, caps);
  if (v.ok) {
    Json j;
    j["kind"] = "equistarable";
    j["verifier_version"] = kVerifierVersion;
    j["graph"] = graph_to_json(g);
    j["edge_weights"] = rational_list_to_json(sol.particular);
    return {0, "equistarable", j};
  }
  return {2, "not decided: particular solution failed the scan (" + v.detail + ")", Json()};
}

PropertyOutcome check_strongly_equistarable(const Graph& g, const Caps& caps) {
  if (!is_triangle_free(g) || g.min_degree() < 2)
    return {2, "decision needs a triangle-free graph with min degree >= 2", Json()};
  auto cert = search_badness(g, caps);
  if (!cert) return {2, "no bad labeling found; no constructible positive solution", Json()};
  StrongStarDecision d = decide_strong_equistarability(g, cert->labeling, caps);
  Json j = strong_equistarability_certificate_json(g, cert->labeling, d);
  bool holds = d.verdict == StrongStarVerdict::kStronglyEquistarable;
  return {holds ? 0 : 1, holds ? "strongly equistarable" : "not strongly equistarable", j};
}

PropertyOutcome check_equistable(const Graph& g, const Caps& caps) {
  EquistableDecision d = decide_equistable_small(g, std::nullopt, caps);
  if (d.verdict == VertexVerdict::kUndecided) return {2, d.diagnosis, Json()};
  if (d.verdict == VertexVerdict::kHolds)
    return {0, "equistable", equistable_certificate_json(g, d.weighting)};
  Json ev;
  ev["forced_to_one"] = vertex_set_to_json(g, *d.forced_to_one);
  return {1, "not equistable: " + d.diagnosis, property_check_json(g, "equistable", false, ev)};
}

PropertyOutcome check_strongly_equistable(const Graph& g, const Caps& caps) {
  StrongVertexDecision d = decide_strongly_equistable_small(g, std::nullopt, caps);
  if (d.verdict == VertexVerdict::kUndecided) return {2, d.diagnosis, Json()};
  Json j = strongly_equistable_certificate_json(g, d);
  bool holds = d.verdict == VertexVerdict::kHolds;
  return {holds ? 0 : 1, holds ? "strongly equistable" : "not strongly equistable", j};
}

PropertyOutcome check_general_partition(const Graph& g, const Caps& caps) {
  auto strong = strong_cliques(g, caps);
  for (auto [u, v] : g.edges) {
    bool covered = false;
    for (const Bitset& q : strong)
      if (q.test(u) && q.test(v)) {
        covered = true;
        break;
      }
    if (!covered) {
      Json ev;
      ev["edge_not_in_strong_clique"] = Json::array({g.label(u), g.label(v)});
      return {1, "not general partition",
              property_check_json(g, "general-partition", false, ev)};
    }
  }
  Json ev;
  ev["strong_clique_count"] = strong.size();
  return {0, "general partition", property_check_json(g, "general-partition", true, ev)};
}

PropertyOutcome check_strong_clique(const Graph& g, const Caps& caps) {
  auto strong = strong_cliques(g, caps);
  if (strong.empty())
    return {1, "no strong clique", property_check_json(g, "strong-clique", false, Json::object())};
  Json ev;
  ev["strong_clique"] = vertex_set_to_json(g, strong.front());
  return {0, "has a strong clique", property_check_json(g, "strong-clique", true, ev)};
}

PropertyOutcome check_two_extendable(const Graph& g, const Caps& caps) {
  auto kms = k_matchings(g, 2, caps);
  if (kms.empty()) {
    Json ev;
    ev["reason"] = "no 2-matching";
    return {1, "not 2-extendable: no 2-matching",
            property_check_json(g, "2-extendable", false, ev)};
  }
  for (const Bitset& km : kms) {
    Bitset covered(g.n);
    for (int e = km.find_first(); e >= 0; e = km.find_next(e)) {
      covered.set(g.edges[e].first);
      covered.set(g.edges[e].second);
    }
    if (!matchable_after_removing(g, covered)) {
      Json ev;
      ev["two_matching"] = edge_set_to_json(g, km);
      return {1, "not 2-extendable", property_check_json(g, "2-extendable", false, ev)};
    }
  }
  return {0, "2-extendable", property_check_json(g, "2-extendable", true, Json::object())};
}

VerifyReport verify_property_check_cert(const Json& j, const Caps& caps) {
  Graph g = graph_from_json(need(j, "graph"));
  std::string property = need_string(j, "property");
  std::string verdict = need_string(j, "verdict");
  PropertyOutcome out = run_property_check(g, property, caps);
  if (out.exit_code == 2) return fail("cannot re-verify at current caps: " + out.message);
  std::string computed = out.exit_code == 0 ? "holds" : "fails";
  if (verdict != computed) return fail("verdict mismatch: recomputed " + computed);

  // Spot-check recorded evidence where it makes a standalone claim.
  const Json& ev = need(j, "evidence");
  if (property == "2-extendable" && verdict == "fails" && ev.contains("two_matching")) {
    Bitset km = edge_set_from_json(g, ev.at("two_matching"));
    if (km.count() != 2) return fail("recorded 2-matching does not have two edges");
    Bitset covered(g.n);
    for (int e = km.find_first(); e >= 0; e = km.find_next(e)) {
      covered.set(g.edges[e].first);
      covered.set(g.edges[e].second);
    }
    if (matchable_after_removing(g, covered))
      return fail("recorded 2-matching extends to a perfect matching after all");
  }
  if (property == "strong-clique" && verdict == "holds") {
    Bitset q = vertex_set_from_json(g, need(ev, "strong_clique"));
    if (!is_strong_clique(g, q, caps)) return fail("recorded clique is not strong");
  }
  if (property == "bad" && verdict == "fails" && ev.contains("first_uncovered_pair")) {
    HamiltonianLabeling lab = labeling_from_json(g, need(ev, "labeling"));
    int e = edge_from_label_pair(g, ev.at("first_uncovered_pair").at(0));
    int e2 = edge_from_label_pair(g, ev.at("first_uncovered_pair").at(1));
    for (int chord : lab.chords)
      if (classify_chord(g, lab, e, e2, chord).cls != ChordClass::kNeither)
        return fail("recorded uncovered pair has a witness after all");
  }
  return pass();
}

}  // namespace

PropertyOutcome run_property_check(const Graph& g, const std::string& property, const Caps& caps) {
  try {
    if (property == "bad") return check_bad(g, caps);
    if (property == "equistarable") return check_equistarable(g, caps);
    if (property == "strongly-equistarable") return check_strongly_equistarable(g, caps);
    if (property == "equistable") return check_equistable(g, caps);
    if (property == "strongly-equistable") return check_strongly_equistable(g, caps);
    if (property == "general-partition") return check_general_partition(g, caps);
    if (property == "strong-clique") return check_strong_clique(g, caps);
    if (property == "2-extendable") return check_two_extendable(g, caps);
  } catch (const ResourceError& e) {
    return {2, std::string("cap exhausted: ") + e.what(), Json()};
  } catch (const DomainError& e) {
    return {2, std::string("outside the decision's domain: ") + e.what(), Json()};
  }
  throw InputError("unknown property: " + property);
}

}  // namespace estar

#include "estar/gallery.hpp"

#include <algorithm>

#include "estar/io.hpp"

namespace estar {

namespace {

std::string sanitize(const std::string& name) {
  std::string out = name;
  std::replace(out.begin(), out.end(), ':', '-');
  return out;
}

void add_graph_files(GalleryEntry& e) {
  std::string base = sanitize(e.name);
  e.files.push_back({base + ".edges", write_edge_list(e.graph)});
  e.files.push_back({base + ".dot", to_dot(e.graph, "g")});
}

void add_cert(GalleryEntry& e, const std::string& what, const Json& j, const Caps& caps) {
  VerifyReport r = verify_certificate(j, caps);
  if (!r.ok)
    throw DomainError("gallery entry " + e.name + " failed self-verification (" + what +
                      "): " + r.detail);
  e.files.push_back({sanitize(e.name) + "." + what + ".json", dump_certificate(j)});
}

struct RootParts {
  Graph graph;
  HamiltonianLabeling labeling;
};

RootParts root_graph(const std::string& name) {
  if (name == "gstar") {
    auto [g, lab] = gstar();
    return {g, lab};
  }
  // circulant-<n>-1-3
  const std::string prefix = "circulant-";
  if (name.rfind(prefix, 0) == 0) {
    std::string rest = name.substr(prefix.size());
    auto dash = rest.find('-');
    if (dash != std::string::npos && rest.substr(dash) == "-1-3") {
      int n = std::stoi(rest.substr(0, dash));
      Graph g = circulant(n, {1, 3});
      auto lab = natural_labeling(g);
      if (!lab) throw DomainError("circulant lost its natural labeling?");
      return {g, *lab};
    }
  }
  throw InputError("unknown gallery name: " + name);
}

GalleryEntry make_root_entry(const std::string& name, const Caps& caps) {
  auto [g, lab] = root_graph(name);
  GalleryEntry e;
  e.name = name;
  e.graph = g;
  add_graph_files(e);

  BadnessOutcome bad = is_bad(g, lab);
  if (!bad.certificate) throw DomainError("gallery root " + name + " is not bad");
  add_cert(e, "badness", badness_certificate_json(g, *bad.certificate), caps);

  SymbolicEdgeWeighting w = construct_equistarable_weights(g, *bad.certificate);
  if (g.m() <= caps.max_subset_bits) {
    add_cert(e, "equistarable", equistarable_certificate_json(g, w), caps);
    StrongStarDecision d = decide_strong_equistarability(g, lab, caps);
    add_cert(e, "strong-equistarability",
             strong_equistarability_certificate_json(g, lab, d), caps);
    e.summary = d.verdict == StrongStarVerdict::kStronglyEquistarable
                    ? "bad, equistarable, strongly equistarable"
                    : "bad, equistarable, not strongly equistarable";
  } else {
    e.summary = "bad; equistarable by construction (subset scans above default caps)";
  }
  return e;
}

GalleryEntry make_line_complement_entry(const std::string& root_name, const Caps& caps) {
  auto [g, lab] = root_graph(root_name);
  GalleryEntry e;
  e.name = "line-complement:" + root_name;

  BadnessOutcome bad = is_bad(g, lab);
  if (!bad.certificate) throw DomainError("gallery root " + root_name + " is not bad");
  SymbolicEdgeWeighting w = construct_equistarable_weights(g, *bad.certificate);
  Transport t = equistarable_to_equistable(g, w, caps);
  e.graph = t.derived;
  add_graph_files(e);

  add_cert(e, "equistable", equistable_certificate_json(t.derived, t.weighting.values), caps);

  StrongVertexDecision vd = decide_strongly_equistable_small(t.derived, t.weighting.values, caps);
  add_cert(e, "strongly-equistable", strongly_equistable_certificate_json(t.derived, vd), caps);

  add_cert(e, "conjecture.no-strong-clique",
           conjecture_certificate_json(make_conjecture_certificate(g, lab, "no-strong-clique", caps)),
           caps);
  add_cert(e, "conjecture.general-partition-ne-equistable",
           conjecture_certificate_json(
               make_conjecture_certificate(g, lab, "general-partition-ne-equistable", caps)),
           caps);

  StrongStarDecision sd = decide_strong_equistarability(g, lab, caps);
  if (sd.verdict == StrongStarVerdict::kNotStronglyEquistarable) {
    add_cert(e, "conjecture.strongly-equistable-ne-equistable",
             conjecture_certificate_json(
                 make_conjecture_certificate(g, lab, "strongly-equistable-ne-equistable", caps)),
             caps);
    e.summary = "equistable, not strongly equistable, no strong clique, not general partition";
  } else {
    add_cert(e, "conjecture.general-partition-ne-strongly-equistable",
             conjecture_certificate_json(make_conjecture_certificate(
                 g, lab, "general-partition-ne-strongly-equistable", caps)),
             caps);
    e.summary = "equistable, strongly equistable, no strong clique, not general partition";
  }
  return e;
}

}  // namespace

std::vector<std::string> gallery_names() {
  return {"gstar",
          "circulant-11-1-3",
          "circulant-13-1-3",
          "circulant-15-1-3",
          "line-complement:gstar",
          "line-complement:circulant-11-1-3"};
}

GalleryEntry make_gallery_entry(const std::string& name, const Caps& caps) {
  const std::string lc = "line-complement:";
  if (name.rfind(lc, 0) == 0) return make_line_complement_entry(name.substr(lc.size()), caps);
  return make_root_entry(name, caps);
}

}  // namespace estar

#ifndef ESTAR_CERTIFICATES_HPP
#define ESTAR_CERTIFICATES_HPP

#include <json.hpp>

#include <string>

#include "estar/bridge.hpp"
#include "estar/engine.hpp"

namespace estar {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVerifierVersion = "estar/1.0.0";

/// All vertex references in certificates use printed labels
/// (id + label_offset); edges are label pairs. Field order is fixed and the
/// dump format is stable, so serialize-parse-serialize is byte-identical.

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json edge_set_to_json(const Graph& g, const Bitset& edges);
Bitset edge_set_from_json(const Graph& g, const Json& j);
Json vertex_set_to_json(const Graph& g, const Bitset& vertices);
Bitset vertex_set_from_json(const Graph& g, const Json& j);

Json badness_certificate_json(const Graph& g, const BadnessCertificate& cert);
Json equistarable_certificate_json(const Graph& g, const SymbolicEdgeWeighting& w);
Json strong_equistarability_certificate_json(const Graph& g, const HamiltonianLabeling& lab,
                                             const StrongStarDecision& d);
Json equistable_certificate_json(const Graph& h, const std::vector<Rational>& w);
Json strongly_equistable_certificate_json(const Graph& h, const StrongVertexDecision& d);
Json conjecture_certificate_json(const ConjectureCertificate& c);

/// Stable dump: two-space indent plus trailing newline.
std::string dump_certificate(const Json& j);

struct VerifyReport {
  bool ok = false;
  std::string detail;
};

/// Re-checks every claim a certificate makes from scratch, trusting only the
/// graph and the weighting it records.
VerifyReport verify_certificate(const Json& j, const Caps& caps = {});

/// Decision entry point shared by the CLI `check` subcommand and the
/// property-check certificates it emits. exit_code: 0 holds, 1 fails,
/// 2 undecidable at the configured caps.
struct PropertyOutcome {
  int exit_code = 2;
  std::string message;
  Json certificate;  // empty when undecidable
};

PropertyOutcome run_property_check(const Graph& g, const std::string& property,
                                   const Caps& caps = {});

const std::vector<std::string>& known_properties();

}  // namespace estar

#endif

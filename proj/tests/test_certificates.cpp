#include <doctest.h>

#include "estar/certificates.hpp"
#include "estar/gallery.hpp"

using namespace estar;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return build_graph(n, pairs);
}

Json gstar_equistarable_cert() {
  auto [g, lab] = gstar();
  auto cert = is_bad(g, lab).certificate;
  SymbolicEdgeWeighting w = construct_equistarable_weights(g, *cert);
  return equistarable_certificate_json(g, w);
}

}  // namespace

TEST_CASE("graph json round trip keeps ids and labels") {
  auto [g, lab] = gstar();
  Json j = graph_to_json(g);
  CHECK(j["label_offset"] == 1);
  CHECK(j["edges"][0] == Json::array({1, 2}));  // printed 1-based
  Graph back = graph_from_json(j);
  CHECK(back.n == g.n);
  CHECK(back.edges == g.edges);
  CHECK(back.label_offset == 1);

  Json broken = j;
  broken["m"] = 99;
  CHECK_THROWS_AS(graph_from_json(broken), InputError);
}

TEST_CASE("serialize-parse-serialize is byte identical") {
  for (const auto& name : {"gstar", "line-complement:gstar"}) {
    GalleryEntry e = make_gallery_entry(name);
    for (const auto& f : e.files) {
      if (f.filename.find(".json") == std::string::npos) continue;
      Json parsed = Json::parse(f.contents);
      CHECK(dump_certificate(parsed) == f.contents);
    }
  }
}

TEST_CASE("gallery certificates verify from serialized form") {
  GalleryEntry e = make_gallery_entry("gstar");
  int checked = 0;
  for (const auto& f : e.files) {
    if (f.filename.find(".json") == std::string::npos) continue;
    VerifyReport r = verify_certificate(Json::parse(f.contents));
    CHECK(r.ok);
    ++checked;
  }
  CHECK(checked == 3);  // badness, equistarable, strong-equistarability
}

TEST_CASE("weight mutation is rejected and the report names the star sum") {
  Json cert = gstar_equistarable_cert();
  // increment one weight numerator: 1/2 -> 3/2 on the first cycle edge
  std::string c0 = cert["weighting"]["weights"][0]["c0"];
  CHECK(c0 == "1/2");
  cert["weighting"]["weights"][0]["c0"] = "3/2";
  VerifyReport r = verify_certificate(cert);
  CHECK_FALSE(r.ok);
  CHECK(r.detail.find("star") != std::string::npos);
}

TEST_CASE("forged forced value is rejected with the recomputed 1/2") {
  auto [g, lab] = gstar();
  StrongStarDecision d = decide_strong_equistarability(g, lab);
  Json cert = strong_equistarability_certificate_json(g, lab, d);
  CHECK(verify_certificate(cert).ok);
  cert["forced_subset"]["value"] = "1/3";
  VerifyReport r = verify_certificate(cert);
  CHECK_FALSE(r.ok);
  CHECK(r.detail.find("1/2") != std::string::npos);
}

TEST_CASE("instantiated edge weight mutation is rejected") {
  Json cert = gstar_equistarable_cert();
  std::string v = cert["edge_weights"][2];
  Rational bumped = Rational::from_string(v) + Rational(1, 1000000);
  cert["edge_weights"][2] = bumped.str();
  VerifyReport r = verify_certificate(cert);
  CHECK_FALSE(r.ok);
}

TEST_CASE("verdict mutation is rejected") {
  auto [g, lab] = gstar();
  StrongStarDecision d = decide_strong_equistarability(g, lab);
  Json cert = strong_equistarability_certificate_json(g, lab, d);
  cert["verdict"] = "strongly-equistarable";
  CHECK_FALSE(verify_certificate(cert).ok);
}

TEST_CASE("schema violations throw InputError") {
  CHECK_THROWS_AS(verify_certificate(Json::object()), InputError);
  Json j;
  j["kind"] = "no-such-kind";
  CHECK_THROWS_AS(verify_certificate(j), InputError);
  Json cert = gstar_equistarable_cert();
  cert.erase("graph");
  CHECK_THROWS_AS(verify_certificate(cert), InputError);
}

TEST_CASE("property checks") {
  auto [g, lab] = gstar();
  auto bad = run_property_check(g, "bad");
  CHECK(bad.exit_code == 0);
  CHECK(bad.certificate["kind"] == "badness");
  CHECK(verify_certificate(bad.certificate).ok);

  Graph c9 = cycle(9);
  auto notbad = run_property_check(c9, "bad");
  CHECK(notbad.exit_code == 1);
  CHECK(notbad.certificate["verdict"] == "fails");
  CHECK(verify_certificate(notbad.certificate).ok);

  auto even = run_property_check(cycle(4), "bad");
  CHECK(even.exit_code == 1);

  auto est = run_property_check(g, "equistarable");
  CHECK(est.exit_code == 0);
  CHECK(verify_certificate(est.certificate).ok);

  auto sst = run_property_check(g, "strongly-equistarable");
  CHECK(sst.exit_code == 1);  // gstar is not
  CHECK(verify_certificate(sst.certificate).ok);

  auto ext = run_property_check(cycle(6), "2-extendable");
  CHECK(ext.exit_code == 1);
  CHECK(verify_certificate(ext.certificate).ok);
  CHECK(run_property_check(cycle(4), "2-extendable").exit_code == 0);

  auto gp = run_property_check(line_complement(cycle(4)), "general-partition");
  CHECK(gp.exit_code == 0);
  auto sc = run_property_check(line_complement(cycle(9)), "strong-clique");
  CHECK(sc.exit_code == 1);

  auto eq = run_property_check(build_graph(2, {{0, 1}}), "equistable");
  CHECK(eq.exit_code == 0);
  CHECK(verify_certificate(eq.certificate).ok);

  // caps produce exit 2
  Caps tiny;
  tiny.max_subset_bits = 4;
  auto capped = run_property_check(g, "strongly-equistarable", tiny);
  CHECK(capped.exit_code == 2);

  CHECK_THROWS_AS(run_property_check(g, "no-such-property"), InputError);
}

TEST_CASE("property-check evidence mutations are rejected") {
  auto notext = run_property_check(cycle(6), "2-extendable");
  REQUIRE(notext.exit_code == 1);
  Json cert = notext.certificate;
  // swap the recorded non-extendable 2-matching for one that extends
  Graph c6 = cycle(6);
  cert["evidence"]["two_matching"] = Json::array({Json::array({0, 1}), Json::array({2, 3})});
  VerifyReport r = verify_certificate(cert);
  CHECK_FALSE(r.ok);
}

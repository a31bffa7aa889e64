#include <set>

#include "defv/scenario.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace defv;

namespace {

std::set<std::string> anchors_of(const Report& rep) {
  std::set<std::string> out;
  for (const auto& c : rep.checks) out.insert(c.anchor);
  return out;
}

}  // namespace

TEST_CASE("curve runs carry the full anchor set") {
  std::set<std::string> expected{
      "coeff.small-extension", "coeff.fiber-product", "coeff.twisted-pair",
      "curve.separated",       "curve.gluing.unit",   "curve.gluing",
      "iso.nilpotent-reduction", "curve.restriction", "curve.beta.stabilizes-chart",
      "curve.alpha",           "curve.diagram",       "curve.identification",
      "curve.automorphism-support", "curve.obstruction"};
  for (int64_t p : {2, 3}) {
    Report rep = run_curve_scenario(ScenarioParams{p});
    CHECK(rep.all_pass());
    CHECK(anchors_of(rep) == expected);
  }
}

TEST_CASE("surface runs carry the full anchor set") {
  std::set<std::string> expected{
      "coeff.small-extension", "coeff.fiber-product",  "coeff.twisted-pair",
      "surface.chart-table",   "surface.localizations", "surface.smooth-charts",
      "surface.overlaps",      "surface.phi",           "surface.transitions",
      "iso.nilpotent-reduction", "surface.cocycle",     "surface.restriction",
      "surface.automorphism-containment", "surface.obstruction"};
  Report rep = run_surface_scenario(ScenarioParams{2});
  CHECK(rep.all_pass());
  CHECK(anchors_of(rep) == expected);
}

TEST_CASE("the sign-flip control is marked skipped in characteristic 2") {
  ScenarioParams sp{2};
  sp.mutation = "flip-psi43-sign";
  Report rep = run_surface_scenario(sp);
  bool has_skip = false;
  for (const auto& c : rep.checks)
    if (c.name == "mutation.applied" && c.status == "skipped") has_skip = true;
  CHECK(has_skip);
  CHECK(rep.all_pass());  // skipped does not fail the run
}

TEST_CASE("reports record their parameters and render deterministically") {
  ScenarioParams sp{3};
  sp.window = 30;
  Report a = run_curve_scenario(sp);
  Report b = run_curve_scenario(sp);
  CHECK(a.params == std::vector<std::string>{"window=30", "bound=20", "mutation=none"});
  CHECK(emit_json({a}, false) == emit_json({b}, false));
  CHECK(emit_text({a}, false) == emit_text({b}, false));
  // timing fields are the only non-deterministic content and are opt-in
  CHECK(emit_json({a}, false).find("elapsed") == std::string::npos);
}

TEST_CASE("the worker pool preserves input order") {
  std::vector<int64_t> primes{5, 2, 3};
  auto seq = run_scenarios("curve", primes, ScenarioParams{}, 1);
  auto par = run_scenarios("curve", primes, ScenarioParams{}, 8);
  REQUIRE(seq.size() == 3);
  REQUIRE(par.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(seq[i].p == primes[i]);
    CHECK(par[i].p == primes[i]);
    CHECK(emit_json({seq[i]}, false) == emit_json({par[i]}, false));
  }
}

TEST_CASE("json reports carry the schema fields in a stable order") {
  Report rep = run_curve_scenario(ScenarioParams{2});
  std::string js = emit_json({rep}, false);
  auto parsed = nlohmann::json::parse(js);
  REQUIRE(parsed.is_array());
  const auto& r = parsed[0];
  CHECK(r.contains("scenario"));
  CHECK(r.contains("p"));
  CHECK(r.contains("checks"));
  CHECK(r.contains("status"));
  REQUIRE(!r["checks"].empty());
  for (const char* field : {"name", "status", "detail", "anchor"})
    CHECK(r["checks"][0].contains(field));
  // serialized key order is fixed
  CHECK(js.find("\"scenario\"") < js.find("\"p\""));
  CHECK(js.find("\"p\"") < js.find("\"checks\""));
  CHECK(js.find("\"checks\"") < js.find("\"status\": \"pass\""));
  // timing appears only on request
  CHECK(js.find("elapsed_ms") == std::string::npos);
  CHECK(emit_json({rep}, true).find("elapsed_ms") != std::string::npos);
}

TEST_CASE("a failing run names its first failure") {
  ScenarioParams sp{2};
  sp.mutation = "drop-unit-factor";
  Report rep = run_curve_scenario(sp);
  CHECK_FALSE(rep.all_pass());
  REQUIRE(rep.first_failure() != nullptr);
  CHECK(rep.first_failure()->name == "restrict.beta.well-defined");
  CHECK(emit_text({rep}, false).find("first failure: restrict.beta.well-defined") !=
        std::string::npos);
}

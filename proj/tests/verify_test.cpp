#include <set>

#include <doctest.h>

#include "baba/report.hpp"
#include "helpers.hpp"

using namespace baba;

TEST_SUITE("verify") {

TEST_CASE("builtin scenarios pass") {
  const auto scenarios = builtin_scenarios();
  CHECK(scenarios.size() >= 20);
  std::set<std::string> ids;
  for (const auto& s : scenarios) {
    CHECK(ids.insert(s.id).second);
    const auto r = run_scenario(s);
    for (const auto& c : r.checks) {
      INFO(s.id << ": " << c.description << " expected " << c.expected << ", got " << c.actual);
      CHECK(c.passed);
    }
  }
  for (const char* id : {"S1", "S2", "S3", "S4", "S11", "S16-deductive"}) CHECK(ids.count(id) == 1);
}

TEST_CASE("failing expectations are reported, not thrown") {
  Scenario s{"X", "deliberately wrong", testing::framework(2, {"~B <- A"}), {}};
  s.expectations.push_back({ExpectExtensions{OnFramework{}, Semantics::preferred, {AssumptionSet(0b10)}}, ""});
  s.expectations.push_back({ExpectHolds{OnFramework{}, Acyclic{}, true}, "note"});
  const auto r = run_scenario(s);
  REQUIRE(r.checks.size() == 2);
  CHECK_FALSE(r.checks[0].passed);
  CHECK(r.checks[0].expected == "[{B}]");
  CHECK(r.checks[0].actual == "[{A}]");
  CHECK(r.checks[1].passed);
  CHECK(r.checks[1].note == "note");
  CHECK_FALSE(r.passed());
  CHECK_FALSE(describe(s, s.expectations[0].check).empty());
}

TEST_CASE("theorem registry") {
  const auto infos = registered_theorems();
  REQUIRE(infos.size() == 10);
  CHECK(infos.front().id == "T-CF");
  CHECK(infos.back().id == "T-COHERENCE-UNANIMITY-SMALL");
  CHECK_THROWS_AS(check_theorem("T-NOPE", 10), InvalidArgument);
}

TEST_CASE("theorem checks are deterministic") {
  const auto a = check_theorem("T-ADM-SMALL", 300, 5);
  const auto b = check_theorem("T-ADM-SMALL", 300, 5);
  CHECK(a.violations == b.violations);
  CHECK(a.cases_checked == b.cases_checked);
  CHECK(a.applicable <= a.cases_checked);
  const auto closed = check_theorem("T-CLOSED", 300, 5);
  CHECK(closed.violations.empty());
  CHECK(closed.profiles_checked == 300 + 256);
  CHECK(check_theorem("T-ADM-NOM", 300, 5).violations.empty());
}

TEST_CASE("renderings") {
  const auto f = testing::framework(2, {"~B <- A", "~A <- B"});
  const auto report = enumerate(f, Semantics::preferred, {});
  CHECK(render_extensions(f.signature(), report, OutputFormat::human) == "{A}\n{B}\n");
  CHECK(render_extensions(f.signature(), report, OutputFormat::json) ==
        "{\n  \"semantics\": \"preferred\",\n  \"exists\": true,\n  \"extensions\": [\n    [\n      \"A\"\n    ],\n"
        "    [\n      \"B\"\n    ]\n  ]\n}\n");
  const auto odd = testing::framework(3, {"~B <- A", "~C <- B", "~A <- C"});
  CHECK(render_extensions(odd.signature(), enumerate(odd, Semantics::set_stable, {}), OutputFormat::human) ==
        "no set-stable extension\n");

  const auto p = testing::profile(2, {{"~A <- B"}, {"~A <- B", "B <- A"}});
  const AggregationSpec u = NamedQuota{QuotaKind::unanimity};
  CHECK(render_rules(p.signature(), u, aggregate_rules(p, u), OutputFormat::human) == "~A <- B\n");
  CHECK(render_rules(p.signature(), u, {}, OutputFormat::human) == "{}\n");
  const auto v = check_preservation(p, u, Closed{AssumptionSet(0b10)});
  CHECK(render_verdict(p.signature(), u, Closed{AssumptionSet(0b10)}, v, OutputFormat::human).rfind("Preserved", 0) ==
        0);

  VerifyRun run;
  run.theorem_infos.push_back(registered_theorems()[1]);
  run.theorems.push_back(check_theorem("T-CLOSED", 20, 1));
  const auto text = render_verify(run, OutputFormat::human);
  CHECK(text.find("T-CLOSED") != std::string::npos);
  CHECK(text.find("all checks passed") != std::string::npos);
  CHECK(render_verify(run, OutputFormat::json).find("\"violation_count\": 0") != std::string::npos);
}

}  // TEST_SUITE

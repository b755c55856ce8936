#include <set>

#include <doctest.h>

#include "baba/document.hpp"
#include "baba/generate.hpp"
#include "baba/preservation.hpp"

using namespace baba;

TEST_SUITE("generate") {

TEST_CASE("rule universe") {
  auto sig = generated_signature(3);
  CHECK(sig->names(sig->all_assumptions()) == std::vector<std::string>{"A", "B", "C"});
  CHECK(sig->name(sig->contrary(2)) == "~C");
  CHECK(rule_universe(*sig).size() == 12);
  CHECK(rule_universe(*sig, false, true).size() == 15);
  CHECK(rule_universe(*sig, false, false).size() == 18);
  CHECK_THROWS_AS(generated_signature(0), InvalidArgument);
}

TEST_CASE("parameters are checked") {
  GenParams p;
  p.agent_count = 1;
  CHECK_THROWS_AS(random_profile(p), InvalidArgument);
  p = {};
  p.rule_density = 1.5;
  CHECK_THROWS_AS(random_profile(p), InvalidArgument);
  p = {};
  p.support_fraction = -0.1;
  CHECK_THROWS_AS(random_profile(p), InvalidArgument);
}

TEST_CASE("same seed, same profile") {
  GenParams p;
  p.assumption_count = 4;
  p.agent_count = 3;
  p.seed = 99;
  CHECK(serialize_document(random_profile(p)) == serialize_document(random_profile(p)));
  auto q = p;
  q.seed = 100;
  CHECK(serialize_document(random_profile(p)) != serialize_document(random_profile(q)));
}

TEST_CASE("flags and density extremes") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    GenParams p;
    p.assumption_count = 1 + seed % 5;
    p.agent_count = 2 + seed % 3;
    p.rule_density = 0.6;
    p.seed = seed;
    const auto profile = random_profile(p);
    for (std::size_t i = 0; i < profile.agent_count(); ++i) {
      CHECK(validate(profile.agent_framework(i), Strictness::strict).empty());
    }
  }

  GenParams full;
  full.assumption_count = 3;
  full.rule_density = 1.0;
  const auto every = random_profile(full);
  CHECK(every.agent_rules(0).size() == 12);

  full.support_fraction = 0.0;
  const auto attacks_only = random_profile(full);
  for (const auto& r : attacks_only.agent_rules(1)) CHECK_FALSE(attacks_only.signature().as_assumption(r.head));
  CHECK(attacks_only.agent_rules(1).size() == 6);

  full.rule_density = 0.0;
  CHECK(random_profile(full).universe().empty());
}

TEST_CASE("small profiles") {
  std::set<std::string> seen;
  for_each_small_profile([&](const Profile& p) {
    CHECK(p.agent_count() == 2);
    CHECK(p.signature().assumption_count() == 2);
    seen.insert(serialize_document(p));
  });
  CHECK(seen.size() == 256);
}

}  // TEST_SUITE

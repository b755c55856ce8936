// The oracle itself, checked on cases small enough to work out by hand.

#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace baba;

TEST_SUITE("oracle") {

TEST_CASE("deductions are chains") {
  const auto f = testing::framework(3, {"B <- A", "C <- B", "A <- C", "~A <- C"});
  const oracle::Naive n(f.signature(), {f.rules().begin(), f.rules().end()});
  const auto& sig = f.signature();
  // ~A <- C <- B <- A, stopping at every assumption on the way
  const auto chains = n.deductions(sig.contrary(0));
  REQUIRE(chains.size() == 3);
  CHECK(chains[0].leaf == 2);
  CHECK(chains[0].rules.size() == 1);
  CHECK(chains[2].leaf == 0);
  CHECK(chains[2].rules.size() == 3);
  CHECK(n.closure(0b001) == 0b111);
  CHECK(n.closure(0b000) == 0);
  CHECK_FALSE(n.conflict_free(0b001));
}

TEST_CASE("hand-checked semantics") {
  // A attacks B, B attacks C
  const auto f = testing::framework(3, {"~B <- A", "~C <- B"});
  const oracle::Naive n(f.signature(), {f.rules().begin(), f.rules().end()});
  CHECK(n.admissible(0b101));
  CHECK_FALSE(n.admissible(0b100));
  CHECK(n.defends(0b001, 2));
  CHECK(n.preferred() == std::vector<oracle::Mask>{0b101});
  CHECK(n.complete_sets() == std::vector<oracle::Mask>{0b101});
  CHECK(n.well_founded() == 0b101u);
  CHECK(n.ideal() == std::vector<oracle::Mask>{0b101});
  CHECK(n.coherent());
  CHECK(n.acyclic());
}

TEST_CASE("self-attacker") {
  const auto f = testing::framework(1, {"~A <- A"});
  const oracle::Naive n(f.signature(), {f.rules().begin(), f.rules().end()});
  CHECK(n.complete_sets() == std::vector<oracle::Mask>{0});
  CHECK(n.set_stable_sets().empty());
  CHECK_FALSE(n.coherent());
  CHECK(n.acyclic());
}

TEST_CASE("aggregation oracle") {
  const auto p = testing::profile(4, {{"~A <- B"}, {"A <- C"}, {"~A <- B", "A <- D"}});
  CHECK(oracle::aggregate(p, NamedQuota{QuotaKind::strict_majority}).size() == 1);
  CHECK(oracle::aggregate(p, Quota{1}).size() == 3);
  CHECK(oracle::aggregate(p, Oligarchy{{0, 1, 2}}).empty());
}

}  // TEST_SUITE

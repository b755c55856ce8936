// Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion with its
// wall time, followed by the mismatches of failing ones.
//
//   baba_acceptance [criterion ...]    (default: all)
//
// Exit status is 0 iff every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "baba/document.hpp"
#include "baba/generate.hpp"
#include "baba/verify.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace baba;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> info;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void equal(const std::string& what, const std::string& expected, const std::string& actual) {
    if (expected != actual) failures.push_back(what + ": expected " + expected + ", got " + actual);
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_ms;
  std::function<void(Outcome&)> run;
};

const AggregationSpec kNomination = NamedQuota{QuotaKind::nomination};
const AggregationSpec kWeak = NamedQuota{QuotaKind::weak_majority};
const AggregationSpec kStrict = NamedQuota{QuotaKind::strict_majority};
const AggregationSpec kUnanimity = NamedQuota{QuotaKind::unanimity};

constexpr Semantics kAcceptability[] = {Semantics::preferred, Semantics::complete, Semantics::set_stable,
                                        Semantics::well_founded, Semantics::ideal};
constexpr Semantics kExtensionSemantics[] = {Semantics::preferred, Semantics::complete, Semantics::well_founded,
                                             Semantics::ideal};

std::string rules_text(const Signature& sig, const std::vector<Rule>& rules) {
  std::string out = "{";
  for (std::size_t i = 0; i < rules.size(); ++i) out += (i ? ", " : "") + format_rule(sig, rules[i]);
  return out + "}";
}

Rule rule(const Signature& sig, const char* text) { return parse_rule(sig, text); }

void quota_example(Outcome& o) {
  const auto p = testing::profile(4, {{"~A <- B"}, {"A <- C"}, {"~A <- B", "A <- D"}});
  const auto& sig = p.signature();
  const std::string all = "{A <- C, A <- D, ~A <- B}";
  o.equal("weak majority", all, rules_text(sig, aggregate_rules(p, kWeak)));
  o.equal("nomination", all, rules_text(sig, aggregate_rules(p, kNomination)));
  o.equal("strict majority", "{~A <- B}", rules_text(sig, aggregate_rules(p, kStrict)));
  o.equal("unanimity", "{}", rules_text(sig, aggregate_rules(p, kUnanimity)));
  o.equal("oligarchy {1,3}", "{~A <- B}", rules_text(sig, aggregate_rules(p, Oligarchy{{0, 2}})));
  o.equal("oligarchy {1,2,3}", "{}", rules_text(sig, aggregate_rules(p, Oligarchy{{0, 1, 2}})));
}

void admissibility_counterexample(Outcome& o) {
  const auto p = testing::profile(4, {{}, {"~D <- B", "~C <- D"}, {"~D <- A", "~C <- D", "A <- B"}});
  const auto delta = p.signature().parse_set("A,B,C");
  for (std::size_t i = 0; i < 3; ++i) {
    o.expect(is_admissible(p.agent_framework(i), delta), "{A, B, C} admissible for agent " + std::to_string(i + 1));
  }
  const Property prop = Extension{Semantics::admissible, delta};
  o.equal("quota 2 verdict", "Violated", std::string(to_string(check_preservation(p, Quota{2}, prop).kind)));
  o.equal("nomination verdict", "Preserved", std::string(to_string(check_preservation(p, kNomination, prop).kind)));
}

void set_stable_counterexample(Outcome& o) {
  const auto p = testing::profile(4, {{"~D <- B", "B <- A"}, {"~D <- C"}, {"~D <- A", "~C <- D", "A <- B"}});
  const auto& sig = p.signature();
  const auto delta = sig.parse_set("A,B,C");
  for (std::size_t i = 0; i < 3; ++i) {
    o.expect(is_set_stable(p.agent_framework(i), delta), "{A, B, C} set-stable for agent " + std::to_string(i + 1));
  }
  const auto agg = aggregate(p, Quota{2});
  o.equal("quota 2 aggregate", "{}", rules_text(sig, {agg.rules().begin(), agg.rules().end()}));
  o.expect(!is_set_stable(agg, delta), "{A, B, C} not set-stable in the aggregate");
  o.expect(!agg.attacks(delta, *sig.find_assumption("D")), "D unattacked in the aggregate");
}

void acceptability(Outcome& o) {
  const auto sig = testing::letters(4);
  const auto ibase = testing::rules(*sig, {"~C <- A", "D <- A"});
  const auto dbase = testing::rules(*sig, {"~B <- A", "D <- C"});
  for (auto sem : kAcceptability) {
    const Property p = Acceptable{1, sem};
    const std::string name(to_string(sem));
    o.expect(check_implicative(sig, ibase, rule(*sig, "~B <- C"), rule(*sig, "~A <- B"), rule(*sig, "~C <- D"), p),
             "implicative for B under " + name);
    o.expect(check_disjunctive(sig, dbase, rule(*sig, "~A <- C"), rule(*sig, "~A <- D"), p),
             "disjunctive for B under " + name);
  }
}

void extension_constructions(Outcome& o) {
  const auto sig = testing::letters(5);
  const auto delta = sig->parse_set("B,D,E");
  const auto ibase = testing::rules(*sig, {"~C <- D", "~A <- B", "E <- D"});
  const auto dbase = testing::rules(*sig, {"~C <- D", "~B <- C", "~A <- B", "~D <- A", "D <- E"});
  for (auto sem : kExtensionSemantics) {
    const Property p = Extension{sem, delta};
    const std::string name(to_string(sem));
    o.expect(check_implicative(sig, ibase, rule(*sig, "~B <- C"), rule(*sig, "~D <- A"), rule(*sig, "~A <- E"), p),
             "implicative for {B, D, E} under " + name);
    o.expect(check_disjunctive(sig, dbase, rule(*sig, "~C <- E"), rule(*sig, "~A <- E"), p),
             "disjunctive for {B, D, E} under " + name);
  }
}

void larger_counterexamples(Outcome& o) {
  using testing::extensions;
  const auto four = testing::profile(3, {{"~B <- A", "~C <- B"}, {"~B <- A", "~C <- B"}, {"~A <- B", "~B <- C"},
                                         {"~A <- B", "~B <- C"}});
  o.equal("|A|=3 unanimity preferred", "[{A, B, C}]", extensions(aggregate(four, kUnanimity), Semantics::preferred));
  for (const auto& [name, spec] : {std::pair{"nomination", kNomination}, std::pair{"weak majority", kWeak},
                                   std::pair{"strict majority", kStrict}}) {
    const auto f = aggregate(four, spec);
    o.equal(std::string("|A|=3 ") + name + " preferred", "[{A, C}, {B}]", extensions(f, Semantics::preferred));
    o.equal(std::string("|A|=3 ") + name + " complete", "[{}, {A, C}, {B}]", extensions(f, Semantics::complete));
    o.equal(std::string("|A|=3 ") + name + " well-founded", "[{}]", extensions(f, Semantics::well_founded));
  }

  const auto three =
      testing::profile(4, {{"~A <- D", "~D <- B", "~C <- D"}, {"~A <- D", "~B <- D", "~D <- C"}, {"D <- A"}});
  const auto& sig = three.signature();
  const auto majority = aggregate(three, Quota{2});
  o.equal("|A|=4 quota 2 aggregate", "{~D <- A}",
          rules_text(sig, {majority.rules().begin(), majority.rules().end()}));
  o.equal("|A|=4 quota 2 preferred", "[{B, C, D}]", extensions(majority, Semantics::preferred));
  const auto nomination = aggregate(three, kNomination);
  o.equal("|A|=4 nomination preferred", "[{A, B, C}, {D}]", extensions(nomination, Semantics::preferred));
  o.equal("|A|=4 nomination well-founded", "[{}]", extensions(nomination, Semantics::well_founded));
}

constexpr std::size_t kCoherenceSamples = 1000;

void coherence(Outcome& o) {
  const auto sig = testing::letters(4);
  const auto ibase = testing::rules(*sig, {"~C <- A", "D <- A"});
  o.expect(check_implicative(sig, ibase, rule(*sig, "~B <- C"), rule(*sig, "~A <- B"), rule(*sig, "~C <- D"),
                             Coherent{}),
           "coherence implicative");
  const auto dbase = testing::rules(*sig, {"~A <- D", "~B <- A", "~D <- B", "C <- A"});
  o.expect(check_disjunctive(sig, dbase, rule(*sig, "~D <- C"), rule(*sig, "~B <- C"), Coherent{}),
           "coherence disjunctive");

  // Sample profiles until enough of them have only coherent agents.
  std::mt19937_64 rng(2024);
  std::size_t applicable = 0, sampled = 0, violated = 0, confirmed = 0;
  std::string first;
  while (applicable < kCoherenceSamples) {
    GenParams g;
    g.assumption_count = 2 + rng() % 2;
    g.agent_count = 2 + rng() % 3;
    g.rule_density = 0.05 + 0.45 * std::uniform_real_distribution<double>(0, 1)(rng);
    g.seed = rng();
    const auto p = random_profile(g);
    ++sampled;
    const auto v = check_preservation(p, kUnanimity, Coherent{});
    if (v.kind == VerdictKind::not_applicable) continue;
    ++applicable;
    if (v.kind == VerdictKind::violated) {
      ++violated;
      if (oracle::verdict(p, kUnanimity, Coherent{}) == VerdictKind::violated) ++confirmed;
      if (first.empty()) first = serialize_document(p);
    }
  }
  o.info.push_back(std::to_string(applicable) + " coherent profiles out of " + std::to_string(sampled) +
                   " sampled, " + std::to_string(violated) + " violated under unanimity (" +
                   std::to_string(confirmed) + " confirmed by the definitional oracle)");
  o.expect(violated == 0, std::to_string(violated) + " unanimity coherence violations; first:\n" + first);
}

void k_exclusive(Outcome& o) {
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto sig = testing::letters(k);
    std::vector<Rule> ring;
    for (std::size_t i = 0; i < k; ++i) ring.push_back(Rule{sig->contrary((i + 1) % k), i});
    const KExclusiveOptions opts{64, 0x5eed};
    o.expect(check_k_exclusive(sig, ring, WellFoundedNonempty{}, opts), "k=" + std::to_string(k) + " wf-nonempty");
    o.expect(check_k_exclusive(sig, ring, Acyclic{}, opts), "k=" + std::to_string(k) + " acyclic");
  }
}

void theorem_fuzz(Outcome& o) {
  const std::vector<std::string> required = {"T-CF",           "T-CLOSED",    "T-ADM-NOM",
                                             "T-SETSTABLE-NOM", "T-ADM-SMALL", "T-ACC-SMALL"};
  for (const auto& info : registered_theorems()) {
    const auto r = check_theorem(info.id);
    const bool counted = std::find(required.begin(), required.end(), info.id) != required.end();
    o.info.push_back(info.id + ": " + std::to_string(r.profiles_checked) + " profiles, " +
                     std::to_string(r.applicable) + " applicable, " + std::to_string(r.violations.size()) +
                     " violations" + (counted ? "" : " (not part of this criterion)"));
    if (counted && !r.violations.empty()) {
      o.failures.push_back(info.id + ": " + std::to_string(r.violations.size()) + " violations, e.g. " +
                           r.violations.front());
    }
  }
}

// All rule sets of at most kMaxRules rules over the full universe (self
// attacks and self supports included), for 1..4 assumptions.
constexpr std::size_t kMaxRules = 6;

void oracle_equivalence(Outcome& o) {
  std::size_t frameworks = 0, mismatches = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto sig = testing::letters(n);
    const auto universe = rule_universe(*sig, false, false);
    std::vector<Rule> current;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
      ++frameworks;
      const Framework f(sig, current);
      const oracle::Naive naive(*sig, current);
      bool ok = true;
      for (oracle::Mask a = 0; a <= naive.all() && ok; ++a) {
        const AssumptionSet set(a);
        ok = ok && f.closure(set).mask() == naive.closure(a);
        ok = ok && is_admissible(f, set) == naive.admissible(a);
        for (std::size_t beta = 0; beta < n && ok; ++beta) {
          ok = ok && f.attacks(set, beta) == naive.attacks(a, beta);
          ok = ok && f.defends(set, beta) == naive.defends(a, beta);
        }
      }
      if (!ok && mismatches++ == 0) o.failures.push_back("first mismatch on " + rules_text(*sig, current));
      if (current.size() == kMaxRules) return;
      for (std::size_t i = from; i < universe.size(); ++i) {
        current.push_back(universe[i]);
        grow(i + 1);
        current.pop_back();
      }
    };
    grow(0);
  }
  o.info.push_back(std::to_string(frameworks) + " frameworks, " + std::to_string(mismatches) + " mismatches");
  o.expect(mismatches == 0, std::to_string(mismatches) + " frameworks disagree with the oracle");
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "quota example aggregates", 1, quota_example},
      {2, "quota 2 breaks admissibility", 10, admissibility_counterexample},
      {3, "quota 2 breaks set-stability", 10, set_stable_counterexample},
      {4, "acceptability is implicative and disjunctive", 50, acceptability},
      {5, "extension membership constructions over five assumptions", 200, extension_constructions},
      {6, "counterexamples over three and four assumptions", 50, larger_counterexamples},
      {7, "coherence constructions and unanimity sampling", 5000, coherence},
      {8, "attack rings are k-exclusive", 2000, k_exclusive},
      {9, "theorem fuzz suite at default budget", 120000, theorem_fuzz},
      {10, "optimized checks equal definitional evaluation", 60000, oracle_equivalence},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  bool all_passed = true;
  for (const auto& c : criteria()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    Outcome o;
    const auto start = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (ms >= c.limit_ms) o.failures.push_back("took " + std::to_string(ms) + " ms");
    const bool passed = o.failures.empty();
    all_passed = all_passed && passed;
    std::printf("criterion %-2d %s  %10.3f ms  (limit %g ms)  %s\n", c.id, passed ? "PASS" : "FAIL", ms, c.limit_ms,
                c.title);
    for (const auto& line : o.info) std::printf("    %s\n", line.c_str());
    for (const auto& line : o.failures) std::printf("    mismatch: %s\n", line.c_str());
  }
  return all_passed ? 0 : 1;
}

#pragma once

// Built-in worked examples with their expected outputs, and randomized /
// exhaustive falsification runs for the preservation theorems.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "baba/generate.hpp"
#include "baba/preservation.hpp"

namespace baba {

// Which framework an expectation is evaluated on.
struct OnFramework {};  // the scenario's framework
struct OnAgent {
  std::size_t agent = 0;
};
struct OnAggregate {
  AggregationSpec spec;
};
struct OnRules {  // the scenario signature with an explicit rule set
  std::vector<Rule> rules;
};
using Target = std::variant<OnFramework, OnAgent, OnAggregate, OnRules>;

struct ExpectRules {
  AggregationSpec spec;
  std::vector<Rule> rules;
};
struct ExpectExtensions {
  Target target;
  Semantics semantics = Semantics::preferred;
  std::vector<AssumptionSet> extensions;
  bool exists = true;
};
struct ExpectHolds {
  Target target;
  Property property;
  bool value = true;
};
struct ExpectVerdict {
  AggregationSpec spec;
  Property property;
  VerdictKind verdict = VerdictKind::preserved;
};
struct ExpectClosure {
  Target target;
  AssumptionSet set;
  AssumptionSet closure;
};
struct ExpectDerives {
  Target target;
  AssumptionSet set;
  SentenceId sentence;
  bool value = true;
};
struct ExpectAttacks {
  Target target;
  AssumptionSet attacker;
  AssumptionSet targets;
  bool value = true;
};
struct ExpectDefends {
  Target target;
  AssumptionSet defender;
  AssumptionIndex assumption = 0;
  bool value = true;
};
struct ExpectValid {
  Target target;
  Strictness strictness = Strictness::strict;
  std::vector<Violation::Kind> violations;
};
struct ExpectImplicative {
  std::vector<Rule> base;
  std::array<Rule, 3> extra;
  Property property;
  bool value = true;
};
struct ExpectDisjunctive {
  std::vector<Rule> base;
  std::array<Rule, 2> extra;
  Property property;
  bool value = true;
};
struct ExpectKExclusive {
  std::vector<Rule> rules;
  Property property;
  bool value = true;
  KExclusiveOptions options;
};

using Check = std::variant<ExpectRules, ExpectExtensions, ExpectHolds, ExpectVerdict, ExpectClosure,
                           ExpectDerives, ExpectAttacks, ExpectDefends, ExpectValid,
                           ExpectImplicative, ExpectDisjunctive, ExpectKExclusive>;

struct Expectation {
  Check check;
  /// Set when the original worked example states something else; the
  /// expected value above is what the definitions actually give.
  std::string note;
};

struct Scenario {
  std::string id;
  std::string title;
  std::variant<Framework, Profile> subject;
  std::vector<Expectation> expectations;

  const SignaturePtr& signature() const;
};

struct CheckResult {
  std::string description;
  bool passed = false;
  std::string expected;
  std::string actual;
  std::string note;
};

struct ScenarioResult {
  std::string id;
  std::string title;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// S1..S16; the attack ring appears once per ring size 2..6.
std::vector<Scenario> builtin_scenarios();

ScenarioResult run_scenario(const Scenario& scenario, const EnumerationOptions& options = {});

/// Renders a check's subject for reports, e.g. "preferred on nomination aggregate".
std::string describe(const Scenario& scenario, const Check& check);

// ---------------------------------------------------------------------------
// Theorem falsification

inline constexpr std::size_t kDefaultTheoremBudget = 10000;
inline constexpr std::size_t kRandomVetoSets = 20;

struct TheoremInfo {
  std::string id;
  std::string statement;
};

/// T-CF, T-CLOSED, T-ADM-NOM, T-ADM-SMALL, T-SETSTABLE-NOM, T-ACC-SMALL,
/// T-EXT-SMALL, T-WF-VETO, T-ACYCLIC-VETO, T-COHERENCE-UNANIMITY-SMALL.
const std::vector<TheoremInfo>& registered_theorems();

struct TheoremReport {
  std::string id;
  std::size_t profiles_checked = 0;
  /// (profile, spec, property) triples evaluated.
  std::size_t cases_checked = 0;
  /// Triples where every agent satisfied the property.
  std::size_t applicable = 0;
  std::vector<std::string> violations;
};

/// Samples `budget` random profiles (plus, for theorems restricted to two
/// assumptions, the exhaustive two-agent family) and records every Violated
/// verdict. Unknown ids throw InvalidArgument.
TheoremReport check_theorem(std::string_view id, std::size_t budget = kDefaultTheoremBudget,
                            std::uint64_t seed = 1);

}  // namespace baba

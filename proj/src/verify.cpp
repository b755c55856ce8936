#include "baba/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace baba {
namespace {

std::string yes_no(bool value) { return value ? "true" : "false"; }

std::string rules_text(const Signature& sig, std::vector<Rule> rules) {
  canonicalize(rules);
  std::string out = "{";
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (i) out += ", ";
    out += format_rule(sig, rules[i]);
  }
  return out + "}";
}

std::string family_text(const Signature& sig, std::vector<AssumptionSet> sets, bool exists) {
  if (!exists) return "none";
  canonicalize(sets);
  std::string out = "[";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ", ";
    out += sig.format(sets[i]);
  }
  return out + "]";
}

std::string violations_text(std::vector<Violation::Kind> kinds) {
  std::sort(kinds.begin(), kinds.end());
  std::string out = "[";
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (i) out += ", ";
    out += to_string(kinds[i]);
  }
  return out + "]";
}

const Profile& require_profile(const Scenario& scenario) {
  const auto* profile = std::get_if<Profile>(&scenario.subject);
  if (!profile) throw InvalidArgument(scenario.id + ": expectation needs a profile");
  return *profile;
}

Framework resolve(const Scenario& scenario, const Target& target) {
  struct Resolver {
    const Scenario& scenario;
    Framework operator()(const OnFramework&) const {
      if (const auto* fw = std::get_if<Framework>(&scenario.subject)) return *fw;
      throw InvalidArgument(scenario.id + ": scenario has no single framework");
    }
    Framework operator()(const OnAgent& t) const {
      return require_profile(scenario).agent_framework(t.agent);
    }
    Framework operator()(const OnAggregate& t) const {
      return aggregate(require_profile(scenario), t.spec);
    }
    Framework operator()(const OnRules& t) const { return Framework(scenario.signature(), t.rules); }
  };
  return std::visit(Resolver{scenario}, target);
}

std::string target_text(const Scenario& scenario, const Target& target) {
  struct Printer {
    const Signature& sig;
    std::string operator()(const OnFramework&) const { return "framework"; }
    std::string operator()(const OnAgent& t) const { return "agent " + std::to_string(t.agent + 1); }
    std::string operator()(const OnAggregate& t) const { return to_string(t.spec) + " aggregate"; }
    std::string operator()(const OnRules& t) const { return rules_text(sig, t.rules); }
  };
  return std::visit(Printer{*scenario.signature()}, target);
}

std::string property_name(const Property& property) {
  struct Printer {
    std::string operator()(const ConflictFree&) const { return "conflict-free"; }
    std::string operator()(const Closed&) const { return "closed"; }
    std::string operator()(const Extension& p) const {
      return std::string(to_string(p.semantics)) + " extension";
    }
    std::string operator()(const Acceptable& p) const {
      return std::string(to_string(p.semantics)) + " acceptability";
    }
    std::string operator()(const Acyclic&) const { return "acyclic"; }
    std::string operator()(const WellFoundedNonempty&) const { return "wf-nonempty"; }
    std::string operator()(const Coherent&) const { return "coherent"; }
  };
  return std::visit(Printer{}, property);
}

struct Outcome {
  std::string expected;
  std::string actual;
};

Outcome evaluate(const Scenario& scenario, const Check& check, const EnumerationOptions& options) {
  const SignaturePtr& sig = scenario.signature();
  struct Evaluator {
    const Scenario& scenario;
    const SignaturePtr& sig;
    const EnumerationOptions& options;

    Outcome operator()(const ExpectRules& c) const {
      return {rules_text(*sig, c.rules), rules_text(*sig, aggregate_rules(require_profile(scenario), c.spec))};
    }
    Outcome operator()(const ExpectExtensions& c) const {
      const auto report = enumerate(resolve(scenario, c.target), c.semantics, options);
      return {family_text(*sig, c.extensions, c.exists),
              family_text(*sig, report.extensions, report.exists)};
    }
    Outcome operator()(const ExpectHolds& c) const {
      return {yes_no(c.value), yes_no(holds(resolve(scenario, c.target), c.property, options))};
    }
    Outcome operator()(const ExpectVerdict& c) const {
      const auto verdict = check_preservation(require_profile(scenario), c.spec, c.property, options);
      return {std::string(to_string(c.verdict)), std::string(to_string(verdict.kind))};
    }
    Outcome operator()(const ExpectClosure& c) const {
      return {sig->format(c.closure), sig->format(resolve(scenario, c.target).closure(c.set))};
    }
    Outcome operator()(const ExpectDerives& c) const {
      return {yes_no(c.value), yes_no(resolve(scenario, c.target).derives(c.set, c.sentence))};
    }
    Outcome operator()(const ExpectAttacks& c) const {
      return {yes_no(c.value), yes_no(resolve(scenario, c.target).attacks(c.attacker, c.targets))};
    }
    Outcome operator()(const ExpectDefends& c) const {
      return {yes_no(c.value), yes_no(resolve(scenario, c.target).defends(c.defender, c.assumption))};
    }
    Outcome operator()(const ExpectValid& c) const {
      std::vector<Violation::Kind> found;
      for (const auto& v : validate(resolve(scenario, c.target), c.strictness)) found.push_back(v.kind);
      return {violations_text(c.violations), violations_text(found)};
    }
    Outcome operator()(const ExpectImplicative& c) const {
      const bool value = check_implicative(sig, c.base, c.extra[0], c.extra[1], c.extra[2], c.property, options);
      return {yes_no(c.value), yes_no(value)};
    }
    Outcome operator()(const ExpectDisjunctive& c) const {
      const bool value = check_disjunctive(sig, c.base, c.extra[0], c.extra[1], c.property, options);
      return {yes_no(c.value), yes_no(value)};
    }
    Outcome operator()(const ExpectKExclusive& c) const {
      return {yes_no(c.value), yes_no(check_k_exclusive(sig, c.rules, c.property, c.options, options))};
    }
  };
  return std::visit(Evaluator{scenario, sig, options}, check);
}

}  // namespace

const SignaturePtr& Scenario::signature() const {
  return std::visit([](const auto& s) -> const SignaturePtr& { return s.signature_ptr(); }, subject);
}

bool ScenarioResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string describe(const Scenario& scenario, const Check& check) {
  const Signature& sig = *scenario.signature();
  struct Describer {
    const Scenario& scenario;
    const Signature& sig;
    std::string operator()(const ExpectRules& c) const { return "rules of " + to_string(c.spec) + " aggregate"; }
    std::string operator()(const ExpectExtensions& c) const {
      return std::string(to_string(c.semantics)) + " extensions of " + target_text(scenario, c.target);
    }
    std::string operator()(const ExpectHolds& c) const {
      return to_string(sig, c.property) + " on " + target_text(scenario, c.target);
    }
    std::string operator()(const ExpectVerdict& c) const {
      return to_string(sig, c.property) + " under " + to_string(c.spec);
    }
    std::string operator()(const ExpectClosure& c) const {
      return "closure of " + sig.format(c.set) + " in " + target_text(scenario, c.target);
    }
    std::string operator()(const ExpectDerives& c) const {
      return sig.format(c.set) + " derives " + sig.name(c.sentence) + " in " + target_text(scenario, c.target);
    }
    std::string operator()(const ExpectAttacks& c) const {
      return sig.format(c.attacker) + " attacks " + sig.format(c.targets) + " in " +
             target_text(scenario, c.target);
    }
    std::string operator()(const ExpectDefends& c) const {
      return sig.format(c.defender) + " defends " + sig.assumption_name(c.assumption) + " in " +
             target_text(scenario, c.target);
    }
    std::string operator()(const ExpectValid& c) const {
      return std::string(c.strictness == Strictness::strict ? "strict" : "lenient") +
             " validation of " + target_text(scenario, c.target);
    }
    std::string operator()(const ExpectImplicative& c) const {
      return property_name(c.property) + " implicative";
    }
    std::string operator()(const ExpectDisjunctive& c) const {
      return property_name(c.property) + " disjunctive";
    }
    std::string operator()(const ExpectKExclusive& c) const {
      return property_name(c.property) + " " + std::to_string(c.rules.size()) + "-exclusive";
    }
  };
  return std::visit(Describer{scenario, sig}, check);
}

ScenarioResult run_scenario(const Scenario& scenario, const EnumerationOptions& options) {
  ScenarioResult result{scenario.id, scenario.title, {}};
  for (const auto& expectation : scenario.expectations) {
    CheckResult check;
    check.description = describe(scenario, expectation.check);
    check.note = expectation.note;
    try {
      auto outcome = evaluate(scenario, expectation.check, options);
      check.expected = std::move(outcome.expected);
      check.actual = std::move(outcome.actual);
      check.passed = check.expected == check.actual;
    } catch (const Error& e) {
      check.actual = std::string("error: ") + e.what();
    }
    result.checks.push_back(std::move(check));
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

enum class SpecFamily { all, nomination, unanimity, vetoes };

enum class PropertyFamily {
  conflict_free,
  closed,
  admissible,
  set_stable,
  acceptable,
  extension,
  wf_nonempty,
  acyclic,
  coherent
};

struct TheoremConfig {
  TheoremInfo info;
  SpecFamily specs;
  PropertyFamily properties;
  std::size_t min_assumptions;
  std::size_t max_assumptions;
  bool at_least_agents;  // |A| >= n
  bool exhaustive_pairs;
};

const std::vector<TheoremConfig>& theorem_configs() {
  static const std::vector<TheoremConfig> configs = {
      {{"T-CF", "every quota rule and every oligarchy preserves conflict-freeness"},
       SpecFamily::all, PropertyFamily::conflict_free, 1, 5, false, true},
      {{"T-CLOSED", "every quota rule and every oligarchy preserves closedness"},
       SpecFamily::all, PropertyFamily::closed, 1, 5, false, true},
      {{"T-ADM-NOM", "the nomination rule preserves admissibility"},
       SpecFamily::nomination, PropertyFamily::admissible, 1, 5, false, true},
      {{"T-ADM-SMALL", "with at most three assumptions every quota rule and oligarchy preserves admissibility"},
       SpecFamily::all, PropertyFamily::admissible, 1, 3, false, true},
      {{"T-SETSTABLE-NOM", "the nomination rule preserves set-stable extensions"},
       SpecFamily::nomination, PropertyFamily::set_stable, 1, 5, false, true},
      {{"T-ACC-SMALL",
        "with at most two assumptions every quota rule and oligarchy preserves acceptability"},
       SpecFamily::all, PropertyFamily::acceptable, 1, 2, false, true},
      {{"T-EXT-SMALL",
        "with at most two assumptions every quota rule and oligarchy preserves preferred, complete, "
        "well-founded and ideal extensions"},
       SpecFamily::all, PropertyFamily::extension, 1, 2, false, true},
      {{"T-WF-VETO", "with at least as many assumptions as agents, oligarchies preserve a "
                     "nonempty well-founded extension"},
       SpecFamily::vetoes, PropertyFamily::wf_nonempty, 2, 5, true, true},
      {{"T-ACYCLIC-VETO", "with at least as many assumptions as agents, oligarchies preserve acyclicity"},
       SpecFamily::vetoes, PropertyFamily::acyclic, 2, 5, true, true},
      {{"T-COHERENCE-UNANIMITY-SMALL",
        "with at most three assumptions the unanimity rule preserves coherence"},
       SpecFamily::unanimity, PropertyFamily::coherent, 2, 3, false, true},
  };
  return configs;
}

const TheoremConfig& find_config(std::string_view id) {
  for (const auto& config : theorem_configs()) {
    if (config.info.id == id) return config;
  }
  throw InvalidArgument("unknown theorem id: " + std::string(id));
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

std::vector<AggregationSpec> specs_for(SpecFamily family, std::size_t agents, std::mt19937_64& rng) {
  std::vector<AggregationSpec> out;
  auto add_vetoes = [&] {
    for (std::size_t i = 0; i < kRandomVetoSets; ++i) {
      const std::uint64_t mask = 1 + rng() % ((std::uint64_t{1} << agents) - 1);
      Oligarchy o;
      for (std::size_t a = 0; a < agents; ++a) {
        if ((mask >> a) & 1U) o.veto.push_back(a);
      }
      out.emplace_back(std::move(o));
    }
  };
  switch (family) {
    case SpecFamily::nomination: out.emplace_back(NamedQuota{QuotaKind::nomination}); break;
    case SpecFamily::unanimity: out.emplace_back(NamedQuota{QuotaKind::unanimity}); break;
    case SpecFamily::vetoes: add_vetoes(); break;
    case SpecFamily::all:
      for (auto kind : {QuotaKind::nomination, QuotaKind::weak_majority, QuotaKind::strict_majority,
                        QuotaKind::unanimity}) {
        out.emplace_back(NamedQuota{kind});
      }
      for (std::size_t q = 1; q <= agents; ++q) out.emplace_back(Quota{q});
      add_vetoes();
      break;
  }
  return out;
}

// Candidate properties for a profile: only those every agent satisfies can
// be violated, so sets are drawn from the agents' own extensions.
std::vector<Property> properties_for(PropertyFamily family, const std::vector<Framework>& agents,
                                     const EnumerationOptions& options) {
  const std::size_t n = agents.front().assumption_count();
  const AssumptionSet all = AssumptionSet::full(n);
  std::vector<Property> out;
  auto every_set = [&](auto make) {
    for (std::uint32_t mask = 0; mask <= all.mask(); ++mask) out.push_back(make(AssumptionSet(mask)));
  };
  auto extensions_of_first = [&](Semantics semantics) {
    auto report = enumerate(agents.front(), semantics, options);
    for (auto set : report.extensions) out.push_back(Extension{semantics, set});
  };
  switch (family) {
    case PropertyFamily::conflict_free:
      every_set([](AssumptionSet s) { return Property{ConflictFree{s}}; });
      break;
    case PropertyFamily::closed: every_set([](AssumptionSet s) { return Property{Closed{s}}; }); break;
    case PropertyFamily::admissible: extensions_of_first(Semantics::admissible); break;
    case PropertyFamily::set_stable: extensions_of_first(Semantics::set_stable); break;
    case PropertyFamily::extension:
      for (auto s : {Semantics::preferred, Semantics::complete, Semantics::well_founded, Semantics::ideal}) {
        extensions_of_first(s);
      }
      break;
    case PropertyFamily::acceptable:
      for (auto s : kAcceptabilitySemantics) {
        for (AssumptionIndex a = 0; a < n; ++a) out.push_back(Acceptable{a, s});
      }
      break;
    case PropertyFamily::wf_nonempty: out.push_back(WellFoundedNonempty{}); break;
    case PropertyFamily::acyclic: out.push_back(Acyclic{}); break;
    case PropertyFamily::coherent: out.push_back(Coherent{}); break;
  }
  return out;
}

std::string profile_text(const Profile& profile) {
  std::string out = "[";
  for (std::size_t i = 0; i < profile.agent_count(); ++i) {
    if (i) out += ", ";
    out += rules_text(profile.signature(), profile.agent_rules(i));
  }
  return out + "]";
}

void check_profile(const TheoremConfig& config, const Profile& profile, std::mt19937_64& rng,
                   const EnumerationOptions& options, TheoremReport& report) {
  ++report.profiles_checked;
  std::vector<Framework> agents;
  for (std::size_t i = 0; i < profile.agent_count(); ++i) agents.push_back(profile.agent_framework(i));
  const auto properties = properties_for(config.properties, agents, options);
  const auto specs = specs_for(config.specs, profile.agent_count(), rng);

  // Applicability does not depend on the rule, so evaluate it once per property.
  std::vector<Property> applicable;
  for (const auto& property : properties) {
    if (std::all_of(agents.begin(), agents.end(),
                    [&](const Framework& fw) { return holds(fw, property, options); })) {
      applicable.push_back(property);
    }
  }
  report.cases_checked += properties.size() * specs.size();
  report.applicable += applicable.size() * specs.size();
  if (applicable.empty()) return;

  std::map<std::vector<Rule>, std::string> seen;  // aggregate rules -> first spec producing them
  for (const auto& spec : specs) {
    auto rules = aggregate_rules(profile, spec);
    if (seen.count(rules)) continue;
    seen.emplace(rules, to_string(spec));
    const Framework aggregated(profile.signature_ptr(), rules);
    for (const auto& property : applicable) {
      if (!holds(aggregated, property, options)) {
        report.violations.push_back(to_string(spec) + " violates " +
                                    to_string(profile.signature(), property) + " on " +
                                    profile_text(profile));
      }
    }
  }
}

}  // namespace

const std::vector<TheoremInfo>& registered_theorems() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const auto& c : theorem_configs()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

TheoremReport check_theorem(std::string_view id, std::size_t budget, std::uint64_t seed) {
  const TheoremConfig& config = find_config(id);
  const EnumerationOptions options{kMaxAssumptions};
  TheoremReport report;
  report.id = config.info.id;

  for (std::size_t i = 0; i < budget; ++i) {
    // Each profile has its own stream, so the report for a prefix of the
    // budget does not depend on the budget.
    std::mt19937_64 rng(splitmix(seed ^ splitmix(i)));
    GenParams params;
    params.agent_count = draw(rng, 2, 4);
    const std::size_t lo =
        config.at_least_agents ? std::max(config.min_assumptions, params.agent_count) : config.min_assumptions;
    if (lo > config.max_assumptions) continue;
    params.assumption_count = draw(rng, lo, config.max_assumptions);
    params.rule_density = 0.05 + 0.45 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    params.seed = rng();
    check_profile(config, random_profile(params), rng, options, report);
  }

  if (config.exhaustive_pairs && config.min_assumptions <= 2 && 2 <= config.max_assumptions) {
    std::mt19937_64 rng(splitmix(seed ^ 0xa11));
    for_each_small_profile([&](const Profile& p) { check_profile(config, p, rng, options, report); });
  }
  return report;
}

}  // namespace baba

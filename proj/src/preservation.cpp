#include "baba/preservation.hpp"

#include <algorithm>
#include <random>

namespace baba {
namespace {

std::string set_text(const Signature& sig, AssumptionSet set) {
  std::string out;
  bool first = true;
  set.for_each([&](AssumptionIndex i) {
    if (!first) out += ",";
    out += sig.assumption_name(i);
    first = false;
  });
  return out;
}

void require_attack(const Signature& sig, const Rule& rule) {
  if (sig.contrary_of(rule.head).empty()) {
    throw InvalidArgument("'" + format_rule(sig, rule) + "' is not an attack rule");
  }
}

bool contains_rule(std::span<const Rule> rules, const Rule& rule) {
  return std::find(rules.begin(), rules.end(), rule) != rules.end();
}

Framework with_rules(const SignaturePtr& signature, std::span<const Rule> base,
                     std::initializer_list<const Rule*> extra) {
  std::vector<Rule> rules(base.begin(), base.end());
  for (const Rule* r : extra) rules.push_back(*r);
  return Framework(signature, std::move(rules));
}

}  // namespace

std::string to_string(const Signature& signature, const Property& property) {
  struct Printer {
    const Signature& sig;
    std::string operator()(const ConflictFree& p) const { return "conflict-free:" + set_text(sig, p.set); }
    std::string operator()(const Closed& p) const { return "closed:" + set_text(sig, p.set); }
    std::string operator()(const Extension& p) const {
      return "extension:" + std::string(to_string(p.semantics)) + ":" + set_text(sig, p.set);
    }
    std::string operator()(const Acceptable& p) const {
      return "acceptable:" + sig.assumption_name(p.assumption) + ":" + std::string(to_string(p.semantics));
    }
    std::string operator()(const Acyclic&) const { return "acyclic"; }
    std::string operator()(const WellFoundedNonempty&) const { return "wf-nonempty"; }
    std::string operator()(const Coherent&) const { return "coherent"; }
  };
  return std::visit(Printer{signature}, property);
}

void require_valid(const Signature& signature, const Property& property) {
  const AssumptionSet all = signature.all_assumptions();
  auto check_set = [&](AssumptionSet set) {
    if (!set.is_subset_of(all)) throw InvalidArgument("property references unknown assumptions");
  };
  if (const auto* p = std::get_if<ConflictFree>(&property)) check_set(p->set);
  if (const auto* p = std::get_if<Closed>(&property)) check_set(p->set);
  if (const auto* p = std::get_if<Extension>(&property)) check_set(p->set);
  if (const auto* p = std::get_if<Acceptable>(&property)) {
    if (p->assumption >= signature.assumption_count()) throw InvalidArgument("assumption out of range");
    if (p->semantics == Semantics::admissible) {
      throw InvalidArgument("acceptability is not defined for admissible semantics");
    }
  }
}

bool holds(const Framework& framework, const Property& property, const EnumerationOptions& options) {
  struct Evaluator {
    const Framework& fw;
    const EnumerationOptions& options;
    bool operator()(const ConflictFree& p) const { return fw.is_conflict_free(p.set); }
    bool operator()(const Closed& p) const { return fw.is_closed(p.set); }
    bool operator()(const Extension& p) const { return is_extension(fw, p.set, p.semantics, options); }
    bool operator()(const Acceptable& p) const {
      return is_acceptable(fw, p.assumption, p.semantics, options);
    }
    bool operator()(const Acyclic&) const { return is_acyclic(fw); }
    bool operator()(const WellFoundedNonempty&) const { return well_founded_nonempty(fw, options); }
    bool operator()(const Coherent&) const { return is_coherent(fw, options); }
  };
  require_valid(framework.signature(), property);
  return std::visit(Evaluator{framework, options}, property);
}

std::string_view to_string(VerdictKind kind) noexcept {
  switch (kind) {
    case VerdictKind::not_applicable: return "NotApplicable";
    case VerdictKind::preserved: return "Preserved";
    case VerdictKind::violated: return "Violated";
  }
  return "unknown";
}

PreservationVerdict evaluate_preservation(std::span<const Framework> agents,
                                          const Framework& aggregated, const Property& property,
                                          const EnumerationOptions& options) {
  const std::string text = to_string(aggregated.signature(), property);
  PreservationVerdict verdict;
  for (std::size_t agent = 0; agent < agents.size(); ++agent) {
    if (!holds(agents[agent], property, options)) {
      verdict.kind = VerdictKind::not_applicable;
      verdict.agent = agent;
      verdict.witness = "agent " + std::to_string(agent + 1) + " does not satisfy " + text;
      return verdict;
    }
  }
  if (holds(aggregated, property, options)) {
    verdict.kind = VerdictKind::preserved;
    verdict.witness = "every agent and the aggregate satisfy " + text;
  } else {
    verdict.kind = VerdictKind::violated;
    verdict.witness = "every agent satisfies " + text + " but the aggregate does not";
  }
  return verdict;
}

PreservationVerdict check_preservation(const Profile& profile, const AggregationSpec& spec,
                                       const Property& property, const EnumerationOptions& options) {
  require_applicable(spec, profile.agent_count());
  std::vector<Framework> agents;
  agents.reserve(profile.agent_count());
  for (std::size_t i = 0; i < profile.agent_count(); ++i) agents.push_back(profile.agent_framework(i));
  auto verdict = evaluate_preservation(agents, aggregate(profile, spec), property, options);
  if (verdict.kind != VerdictKind::not_applicable) {
    const std::string text = to_string(profile.signature(), property);
    verdict.witness = verdict.kind == VerdictKind::preserved
                          ? "every agent and the " + to_string(spec) + " aggregate satisfy " + text
                          : "every agent satisfies " + text + " but the " + to_string(spec) +
                                " aggregate does not";
  }
  return verdict;
}

bool check_implicative(const SignaturePtr& signature, std::span<const Rule> base, const Rule& r1,
                       const Rule& r2, const Rule& r3, const Property& property,
                       const EnumerationOptions& options) {
  if (r1 == r2 || r1 == r3 || r2 == r3) throw InvalidArgument("implicative rules must be distinct");
  if (contains_rule(base, r1) || contains_rule(base, r2) || contains_rule(base, r3)) {
    throw InvalidArgument("implicative rules must not belong to the base rule set");
  }
  for (const Rule* r : {&r1, &r2, &r3}) require_attack(*signature, *r);
  const Rule* extra[3] = {&r1, &r2, &r3};
  for (unsigned subset = 0; subset < 8; ++subset) {
    std::vector<Rule> rules(base.begin(), base.end());
    for (unsigned i = 0; i < 3; ++i) {
      if ((subset >> i) & 1U) rules.push_back(*extra[i]);
    }
    const bool expected = subset != 0b011;  // everything but {r1, r2}
    if (holds(Framework(signature, std::move(rules)), property, options) != expected) return false;
  }
  return true;
}

bool check_disjunctive(const SignaturePtr& signature, std::span<const Rule> base, const Rule& r1,
                       const Rule& r2, const Property& property, const EnumerationOptions& options) {
  if (r1 == r2) throw InvalidArgument("disjunctive rules must be distinct");
  if (contains_rule(base, r1) || contains_rule(base, r2)) {
    throw InvalidArgument("disjunctive rules must not belong to the base rule set");
  }
  require_attack(*signature, r1);
  require_attack(*signature, r2);
  if (holds(with_rules(signature, base, {}), property, options)) return false;
  return holds(with_rules(signature, base, {&r1}), property, options) &&
         holds(with_rules(signature, base, {&r2}), property, options) &&
         holds(with_rules(signature, base, {&r1, &r2}), property, options);
}

std::vector<Rule> rule_universe(const Signature& signature, bool exclude_self_attack,
                                bool exclude_self_support) {
  std::vector<Rule> out;
  const std::size_t n = signature.assumption_count();
  for (AssumptionIndex target = 0; target < n; ++target) {
    for (AssumptionIndex body = 0; body < n; ++body) {
      const Rule attack{signature.contrary(target), body};
      if (!(exclude_self_attack && signature.contrary_of(attack.head).contains(body))) out.push_back(attack);
      if (!(exclude_self_support && target == body)) {
        out.push_back(Rule{signature.assumption_sentence(target), body});
      }
    }
  }
  canonicalize(out);
  return out;
}

bool check_k_exclusive(const SignaturePtr& signature, std::span<const Rule> rules,
                       const Property& property, const KExclusiveOptions& k_options,
                       const EnumerationOptions& options) {
  std::vector<Rule> s(rules.begin(), rules.end());
  canonicalize(s);
  if (s.empty()) throw InvalidArgument("k-exclusivity needs at least one rule");
  if (s.size() > kMaxExclusiveRules) {
    throw InvalidArgument("k-exclusivity checks at most " + std::to_string(kMaxExclusiveRules) + " rules");
  }

  if (holds(Framework(signature, s), property, options)) return false;

  std::vector<Rule> extra;
  for (const auto& r : rule_universe(*signature)) {
    if (!std::binary_search(s.begin(), s.end(), r)) extra.push_back(r);
  }
  std::mt19937_64 rng(k_options.seed);
  for (std::size_t sample = 0; sample < k_options.superset_samples; ++sample) {
    std::vector<Rule> superset = s;
    for (const auto& r : extra) {
      if ((rng() >> 63) != 0) superset.push_back(r);
    }
    if (holds(Framework(signature, std::move(superset)), property, options)) return false;
  }

  const std::size_t full = (std::size_t{1} << s.size()) - 1;
  for (std::size_t subset = 0; subset < full; ++subset) {
    std::vector<Rule> part;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if ((subset >> i) & 1U) part.push_back(s[i]);
    }
    if (!holds(Framework(signature, std::move(part)), property, options)) return false;
  }
  return true;
}

}  // namespace baba

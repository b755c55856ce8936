#include <initializer_list>
#include <string_view>

#include "baba/verify.hpp"

namespace baba {
namespace {

using Names = std::initializer_list<std::string_view>;

class Builder {
 public:
  explicit Builder(SignaturePtr signature) : sig_(std::move(signature)) {}

  const SignaturePtr& sig() const { return sig_; }

  Rule rule(std::string_view text) const { return parse_rule(*sig_, text); }

  std::vector<Rule> rules(Names texts) const {
    std::vector<Rule> out;
    for (auto t : texts) out.push_back(rule(t));
    return out;
  }

  std::vector<Rule> with(std::vector<Rule> base, Names texts) const {
    for (auto t : texts) base.push_back(rule(t));
    return base;
  }

  AssumptionSet set(std::string_view text) const { return sig_->parse_set(text); }

  std::vector<AssumptionSet> sets(Names texts) const {
    std::vector<AssumptionSet> out;
    for (auto t : texts) out.push_back(set(t));
    return out;
  }

  AssumptionIndex index(std::string_view name) const { return *sig_->find_assumption(name); }
  SentenceId sentence(std::string_view name) const { return *sig_->find_sentence(name); }

  Profile profile(std::initializer_list<Names> agents) const {
    std::vector<std::vector<Rule>> out;
    for (auto a : agents) out.push_back(rules(a));
    return Profile(sig_, std::move(out));
  }

 private:
  SignaturePtr sig_;
};

SignaturePtr letters(std::size_t n) { return generated_signature(n); }

const AggregationSpec kNomination = NamedQuota{QuotaKind::nomination};
const AggregationSpec kWeakMajority = NamedQuota{QuotaKind::weak_majority};
const AggregationSpec kStrictMajority = NamedQuota{QuotaKind::strict_majority};
const AggregationSpec kUnanimity = NamedQuota{QuotaKind::unanimity};

constexpr Semantics kExtensionSemantics[] = {Semantics::preferred, Semantics::complete,
                                             Semantics::well_founded, Semantics::ideal};

Expectation expect(Check check, std::string note = {}) { return {std::move(check), std::move(note)}; }

Scenario quota_example() {
  Builder b(letters(4));
  Scenario s{"S1", "quota rules on a three-agent profile",
             b.profile({{"~A <- B"}, {"A <- C"}, {"~A <- B", "A <- D"}}), {}};
  auto& e = s.expectations;
  e.push_back(expect(ExpectRules{kNomination, b.rules({"~A <- B", "A <- C", "A <- D"})}));
  e.push_back(expect(ExpectRules{kWeakMajority, b.rules({"~A <- B", "A <- C", "A <- D"})}));
  e.push_back(expect(ExpectRules{Quota{2}, b.rules({"~A <- B"})}));
  e.push_back(expect(ExpectRules{kStrictMajority, b.rules({"~A <- B"})}));
  e.push_back(expect(ExpectRules{kUnanimity, {}}));
  return s;
}

Scenario oligarchy_example() {
  Builder b(letters(4));
  Scenario s{"S2", "oligarchic rules on a three-agent profile",
             b.profile({{"~A <- B"}, {"A <- C"}, {"~A <- B", "A <- D"}}), {}};
  auto& e = s.expectations;
  e.push_back(expect(ExpectRules{Oligarchy{{0, 2}}, b.rules({"~A <- B"})}));
  e.push_back(expect(ExpectRules{Oligarchy{{0, 1, 2}}, {}}));
  e.push_back(expect(ExpectRules{Oligarchy{{2}}, b.rules({"~A <- B", "A <- D"})}));
  return s;
}

Scenario admissibility_counterexample() {
  Builder b(letters(4));
  Scenario s{"S3", "a majority rule loses an admissible set",
             b.profile({{}, {"~D <- B", "~C <- D"}, {"~D <- A", "~C <- D", "A <- B"}}), {}};
  auto& e = s.expectations;
  const Property adm = Extension{Semantics::admissible, b.set("A,B,C")};
  for (std::size_t agent = 0; agent < 3; ++agent) e.push_back(expect(ExpectHolds{OnAgent{agent}, adm, true}));
  e.push_back(expect(ExpectAttacks{OnAgent{2}, b.set("B"), b.set("D"), true}));
  e.push_back(expect(ExpectDefends{OnAgent{1}, b.set("A,B,C"), b.index("C"), true}));
  e.push_back(expect(ExpectRules{Quota{2}, b.rules({"~C <- D"})}));
  e.push_back(expect(ExpectDefends{OnAggregate{Quota{2}}, b.set("A,B,C"), b.index("C"), false}));
  e.push_back(expect(ExpectHolds{OnAggregate{Quota{2}}, adm, false}));
  e.push_back(expect(ExpectVerdict{Quota{2}, adm, VerdictKind::violated}));
  e.push_back(expect(ExpectVerdict{kNomination, adm, VerdictKind::preserved}));
  return s;
}

Scenario set_stable_counterexample() {
  Builder b(letters(4));
  Scenario s{"S4", "a majority rule loses a set-stable extension",
             b.profile({{"~D <- B", "B <- A"}, {"~D <- C"}, {"~D <- A", "~C <- D", "A <- B"}}), {}};
  auto& e = s.expectations;
  const Property stable = Extension{Semantics::set_stable, b.set("A,B,C")};
  for (std::size_t agent = 0; agent < 3; ++agent) {
    e.push_back(expect(ExpectHolds{OnAgent{agent}, stable, true}));
  }
  e.push_back(expect(ExpectAttacks{OnAgent{0}, b.set("A,B,C"), b.set("D"), true}));
  e.push_back(expect(ExpectRules{Quota{2}, {}}));
  e.push_back(expect(ExpectExtensions{OnAggregate{Quota{2}}, Semantics::set_stable, b.sets({"A,B,C,D"})}));
  e.push_back(expect(ExpectVerdict{Quota{2}, stable, VerdictKind::violated}));
  e.push_back(expect(ExpectVerdict{kNomination, stable, VerdictKind::preserved}));
  return s;
}

Scenario acceptability_implicative() {
  Builder b(letters(4));
  const auto base = b.rules({"~C <- A", "D <- A"});
  Scenario s{"S5", "acceptability is implicative", Framework(b.sig(), base), {}};
  const std::array<Rule, 3> extra = {b.rule("~B <- C"), b.rule("~A <- B"), b.rule("~C <- D")};
  for (auto sem : kAcceptabilitySemantics) {
    s.expectations.push_back(expect(ExpectImplicative{base, extra, Acceptable{b.index("B"), sem}, true}));
  }
  s.expectations.push_back(expect(ExpectExtensions{OnRules{b.with(base, {"~B <- C", "~A <- B"})},
                                                   Semantics::preferred, b.sets({"D"})}));
  return s;
}

Scenario acceptability_disjunctive() {
  Builder b(letters(4));
  const auto base = b.rules({"~B <- A", "D <- C"});
  Scenario s{"S6", "acceptability is disjunctive", Framework(b.sig(), base), {}};
  const std::array<Rule, 2> extra = {b.rule("~A <- C"), b.rule("~A <- D")};
  for (auto sem : kAcceptabilitySemantics) {
    s.expectations.push_back(expect(ExpectDisjunctive{base, extra, Acceptable{b.index("B"), sem}, true}));
  }
  s.expectations.push_back(expect(ExpectHolds{OnFramework{}, Acceptable{b.index("B"), Semantics::preferred}, false}));
  return s;
}

Scenario acceptability_three_assumptions() {
  Builder b(letters(3));
  Scenario s{"S7", "acceptability under nomination with three assumptions",
             b.profile({{"~A <- C", "~B <- C"}, {"~B <- A", "~C <- B"}, {"~C <- A", "~A <- B"}}), {}};
  auto& e = s.expectations;
  const char* own[] = {"C", "A,C", "B,C"};
  for (std::size_t agent = 0; agent < 3; ++agent) {
    for (auto sem : kAcceptabilitySemantics) {
      e.push_back(expect(ExpectExtensions{OnAgent{agent}, sem, b.sets({own[agent]})}));
    }
  }
  e.push_back(expect(ExpectRules{
      kNomination, b.rules({"~A <- B", "~A <- C", "~B <- A", "~B <- C", "~C <- A", "~C <- B"})}));
  e.push_back(expect(ExpectExtensions{OnAggregate{kNomination}, Semantics::preferred, b.sets({"A", "B", "C"})}));
  e.push_back(expect(ExpectExtensions{OnAggregate{kNomination}, Semantics::complete,
                                      b.sets({"", "A", "B", "C"})},
                     "worked example omits the empty complete extension"));
  e.push_back(expect(ExpectExtensions{OnAggregate{kNomination}, Semantics::set_stable, b.sets({"A", "B", "C"})}));
  e.push_back(expect(ExpectExtensions{OnAggregate{kNomination}, Semantics::well_founded, b.sets({""})}));
  e.push_back(expect(ExpectExtensions{OnAggregate{kNomination}, Semantics::ideal, b.sets({""})}));
  const AssumptionIndex c = b.index("C");
  const char* kept = "worked example states: C is unacceptable under every semantics; {C} stays an extension";
  e.push_back(expect(ExpectVerdict{kNomination, Acceptable{c, Semantics::preferred}, VerdictKind::preserved}, kept));
  e.push_back(expect(ExpectVerdict{kNomination, Acceptable{c, Semantics::complete}, VerdictKind::preserved}, kept));
  e.push_back(expect(ExpectVerdict{kNomination, Acceptable{c, Semantics::set_stable}, VerdictKind::preserved}, kept));
  e.push_back(expect(ExpectVerdict{kNomination, Acceptable{c, Semantics::well_founded}, VerdictKind::violated}));
  e.push_back(expect(ExpectVerdict{kNomination, Acceptable{c, Semantics::ideal}, VerdictKind::violated}));
  for (auto sem : kAcceptabilitySemantics) {
    e.push_back(expect(ExpectVerdict{kUnanimity, Acceptable{c, sem}, VerdictKind::preserved}));
  }
  return s;
}

Scenario extension_implicative() {
  Builder b(letters(5));
  const auto base = b.rules({"~C <- D", "~A <- B", "E <- D"});
  Scenario s{"S8", "extension membership as an implicative property", Framework(b.sig(), base), {}};
  auto& e = s.expectations;
  const std::array<Rule, 3> extra = {b.rule("~B <- C"), b.rule("~D <- A"), b.rule("~A <- E")};
  const AssumptionSet delta = b.set("B,D,E");
  const char* even_cycle =
      "worked example states: implicative; with the first two rules added, the even attack cycle "
      "keeps {B, D, E} an extension";
  e.push_back(expect(ExpectImplicative{base, extra, Extension{Semantics::preferred, delta}, false}, even_cycle));
  e.push_back(expect(ExpectImplicative{base, extra, Extension{Semantics::complete, delta}, false}, even_cycle));
  e.push_back(expect(ExpectImplicative{base, extra, Extension{Semantics::well_founded, delta}, true}));
  e.push_back(expect(ExpectImplicative{base, extra, Extension{Semantics::ideal, delta}, true}));
  const auto both = b.with(base, {"~B <- C", "~D <- A"});
  e.push_back(expect(ExpectExtensions{OnRules{both}, Semantics::preferred, b.sets({"A,C,E", "B,D,E"})}));
  e.push_back(expect(ExpectExtensions{OnRules{both}, Semantics::complete, b.sets({"E", "A,C,E", "B,D,E"})}));
  e.push_back(expect(ExpectExtensions{OnRules{both}, Semantics::well_founded, b.sets({"E"})}));
  e.push_back(expect(ExpectExtensions{OnFramework{}, Semantics::preferred, b.sets({"B,D,E"})}));
  return s;
}

Scenario extension_disjunctive() {
  Builder b(letters(5));
  const auto base = b.rules({"~C <- D", "~B <- C", "~A <- B", "~D <- A", "D <- E"});
  Scenario s{"S9", "extension membership as a disjunctive property", Framework(b.sig(), base), {}};
  auto& e = s.expectations;
  const std::array<Rule, 2> extra = {b.rule("~C <- E"), b.rule("~A <- E")};
  const AssumptionSet delta = b.set("B,D,E");
  const char* base_ok =
      "worked example states: disjunctive; the base already has {B, D, E} as an extension";
  for (auto sem : {Semantics::preferred, Semantics::complete, Semantics::well_founded}) {
    e.push_back(expect(ExpectDisjunctive{base, extra, Extension{sem, delta}, false}, base_ok));
  }
  e.push_back(expect(ExpectDisjunctive{base, extra, Extension{Semantics::ideal, delta}, false},
                     "worked example states: disjunctive; the ideal extension is empty with and without the extra rules"));
  e.push_back(expect(ExpectExtensions{OnFramework{}, Semantics::preferred, b.sets({"A,C", "B,D,E"})}));
  e.push_back(expect(ExpectExtensions{OnFramework{}, Semantics::well_founded, b.sets({"B,D,E"})}));
  e.push_back(expect(ExpectExtensions{OnFramework{}, Semantics::ideal, b.sets({""})}));
  e.push_back(expect(ExpectExtensions{OnRules{b.with(base, {"~C <- E", "~A <- E"})}, Semantics::ideal,
                                      b.sets({""})}));
  return s;
}

Scenario four_agents_three_assumptions() {
  Builder b(letters(3));
  Scenario s{"S10", "four agents over three assumptions",
             b.profile({{"~B <- A", "~C <- B"}, {"~B <- A", "~C <- B"}, {"~A <- B", "~B <- C"},
                        {"~A <- B", "~B <- C"}}),
             {}};
  auto& e = s.expectations;
  for (std::size_t agent = 0; agent < 4; ++agent) {
    for (auto sem : kExtensionSemantics) e.push_back(expect(ExpectExtensions{OnAgent{agent}, sem, b.sets({"A,C"})}));
  }
  const auto all_rules = b.rules({"~A <- B", "~B <- A", "~B <- C", "~C <- B"});
  for (const AggregationSpec& spec : {kNomination, kWeakMajority, kStrictMajority}) {
    e.push_back(expect(ExpectRules{spec, all_rules}));
    e.push_back(expect(ExpectExtensions{OnAggregate{spec}, Semantics::preferred, b.sets({"A,C", "B"})}));
    e.push_back(expect(ExpectExtensions{OnAggregate{spec}, Semantics::complete, b.sets({"", "A,C", "B"})}));
    e.push_back(expect(ExpectExtensions{OnAggregate{spec}, Semantics::well_founded, b.sets({""})}));
    e.push_back(expect(ExpectExtensions{OnAggregate{spec}, Semantics::ideal, b.sets({""})}));
  }
  e.push_back(expect(ExpectRules{Quota{3}, {}}));
  e.push_back(expect(ExpectRules{kUnanimity, {}}));
  for (auto sem : kExtensionSemantics) {
    e.push_back(expect(ExpectExtensions{OnAggregate{kUnanimity}, sem, b.sets({"A,B,C"})}));
  }
  const char* kept = "worked example states: {A, C} is not preserved by nomination; it stays preferred and complete";
  for (auto sem : kExtensionSemantics) {
    const Property delta = Extension{sem, b.set("A,C")};
    const bool lost = sem == Semantics::well_founded || sem == Semantics::ideal;
    e.push_back(expect(ExpectVerdict{kNomination, delta, lost ? VerdictKind::violated : VerdictKind::preserved},
                       lost ? "" : kept));
    e.push_back(expect(ExpectVerdict{kUnanimity, delta, VerdictKind::violated}));
  }
  return s;
}

Scenario three_agents_four_assumptions() {
  Builder b(letters(4));
  Scenario s{"S11", "three agents over four assumptions",
             b.profile({{"~A <- D", "~D <- B", "~C <- D"}, {"~A <- D", "~B <- D", "~D <- C"}, {"D <- A"}}),
             {}};
  auto& e = s.expectations;
  for (std::size_t agent = 0; agent < 2; ++agent) {
    for (auto sem : kExtensionSemantics) {
      e.push_back(expect(ExpectExtensions{OnAgent{agent}, sem, b.sets({"A,B,C"})}));
    }
  }
  const char* third = "worked example states: {A, B, C} is preferred for every agent; D <- A closes it to {A, B, C, D}";
  e.push_back(expect(ExpectExtensions{OnAgent{2}, Semantics::preferred, b.sets({"A,B,C,D"})}, third));
  e.push_back(expect(ExpectClosure{OnAgent{2}, b.set("A"), b.set("A,D")}));
  e.push_back(expect(ExpectRules{Quota{2}, b.rules({"~A <- D"})}, "worked example prints the rule as ~D <- A"));
  for (auto sem : kExtensionSemantics) {
    e.push_back(expect(ExpectExtensions{OnAggregate{Quota{2}}, sem, b.sets({"B,C,D"})}));
  }
  e.push_back(expect(ExpectExtensions{OnAggregate{kNomination}, Semantics::preferred, b.sets({"B,C", "D"})},
                     "worked example states: {A, B, C} and {D}"));
  e.push_back(expect(ExpectExtensions{OnAggregate{kNomination}, Semantics::complete, b.sets({"", "D"})},
                     "worked example states: {}, {A, B, C} and {D}"));
  e.push_back(expect(ExpectExtensions{OnAggregate{kNomination}, Semantics::well_founded, b.sets({""})}));
  e.push_back(expect(ExpectExtensions{OnAggregate{kNomination}, Semantics::ideal, b.sets({""})}));
  e.push_back(expect(ExpectRules{kUnanimity, {}}));
  for (auto sem : kExtensionSemantics) {
    e.push_back(expect(ExpectExtensions{OnAggregate{kUnanimity}, sem, b.sets({"A,B,C,D"})}));
  }
  e.push_back(expect(ExpectVerdict{kNomination, Extension{Semantics::preferred, b.set("A,B,C")},
                                   VerdictKind::not_applicable},
                     third));
  return s;
}

Scenario coherence_implicative() {
  Builder b(letters(4));
  const auto base = b.rules({"~C <- A", "D <- A"});
  Scenario s{"S12", "coherence is implicative", Framework(b.sig(), base), {}};
  auto& e = s.expectations;
  const std::array<Rule, 3> extra = {b.rule("~B <- C"), b.rule("~A <- B"), b.rule("~C <- D")};
  e.push_back(expect(ExpectImplicative{base, extra, Coherent{}, true}));
  e.push_back(expect(ExpectHolds{OnFramework{}, Coherent{}, true}));
  const auto both = b.with(base, {"~B <- C", "~A <- B"});
  e.push_back(expect(ExpectHolds{OnRules{both}, Coherent{}, false}));
  e.push_back(expect(ExpectExtensions{OnRules{both}, Semantics::preferred, b.sets({"D"})}));
  e.push_back(expect(ExpectExtensions{OnRules{both}, Semantics::set_stable, {}, false}));
  return s;
}

Scenario coherence_disjunctive() {
  Builder b(letters(4));
  const auto base = b.rules({"~A <- D", "~B <- A", "~D <- B", "C <- A"});
  Scenario s{"S13", "coherence is disjunctive", Framework(b.sig(), base), {}};
  auto& e = s.expectations;
  const std::array<Rule, 2> extra = {b.rule("~D <- C"), b.rule("~B <- C")};
  e.push_back(expect(ExpectDisjunctive{base, extra, Coherent{}, true}));
  e.push_back(expect(ExpectExtensions{OnFramework{}, Semantics::preferred, b.sets({"C"})}));
  e.push_back(expect(ExpectExtensions{OnFramework{}, Semantics::set_stable, {}, false}));
  return s;
}

Scenario attack_ring(std::size_t k) {
  Builder b(letters(k));
  std::vector<Rule> ring;
  for (std::size_t i = 0; i < k; ++i) {
    const auto target = static_cast<AssumptionIndex>((i + 1) % k);
    ring.push_back(Rule{b.sig()->contrary(target), static_cast<AssumptionIndex>(i)});
  }
  Scenario s{"S14-k" + std::to_string(k), "attack ring of length " + std::to_string(k),
             Framework(b.sig(), ring), {}};
  auto& e = s.expectations;
  e.push_back(expect(ExpectHolds{OnFramework{}, Acyclic{}, false}));
  e.push_back(expect(ExpectHolds{OnFramework{}, WellFoundedNonempty{}, false}));
  e.push_back(expect(ExpectExtensions{OnFramework{}, Semantics::well_founded, b.sets({""})}));
  std::vector<Rule> open(ring.begin() + 1, ring.end());
  e.push_back(expect(ExpectHolds{OnRules{open}, Acyclic{}, true}));
  e.push_back(expect(ExpectHolds{OnRules{open}, WellFoundedNonempty{}, true}));
  e.push_back(expect(ExpectKExclusive{ring, WellFoundedNonempty{}, true, {}}));
  e.push_back(expect(ExpectKExclusive{ring, Acyclic{}, true, {}}));
  return s;
}

Scenario illustration() {
  Builder b(Signature::create({"alpha", "beta", "gamma"}));
  Scenario s{"S15", "deduction, closure and attacks on three assumptions",
             Framework(b.sig(), b.rules({"~beta <- gamma", "gamma <- alpha"})), {}};
  auto& e = s.expectations;
  const OnFramework fw;
  e.push_back(expect(ExpectClosure{fw, b.set("alpha"), b.set("alpha,gamma")}));
  e.push_back(expect(ExpectClosure{fw, b.set(""), b.set("")}));
  e.push_back(expect(ExpectDerives{fw, b.set("alpha"), b.sentence("~beta"), true}));
  e.push_back(expect(ExpectDerives{fw, b.set("beta"), b.sentence("~beta"), false}));
  e.push_back(expect(ExpectAttacks{fw, b.set("alpha"), b.set("beta"), true}));
  e.push_back(expect(ExpectAttacks{fw, b.set("beta"), b.set("alpha,gamma"), false}));
  e.push_back(expect(ExpectHolds{fw, Closed{b.set("alpha")}, false}));
  e.push_back(expect(ExpectHolds{fw, Closed{b.set("beta")}, true}));
  e.push_back(expect(ExpectHolds{fw, ConflictFree{b.set("beta,gamma")}, false}));
  e.push_back(expect(ExpectHolds{fw, ConflictFree{b.set("alpha,gamma")}, true}));
  e.push_back(expect(ExpectHolds{fw, Extension{Semantics::admissible, b.set("alpha,gamma")}, true}));
  e.push_back(expect(ExpectHolds{fw, Extension{Semantics::admissible, b.set("beta")}, false}));
  e.push_back(expect(ExpectExtensions{fw, Semantics::preferred, b.sets({"alpha,gamma"})}));
  e.push_back(expect(ExpectExtensions{fw, Semantics::set_stable, b.sets({"alpha,gamma"})}));
  return s;
}

Scenario voting_deductive() {
  Builder b(Signature::create({"A", "B", "C", "D", "E"}));
  Scenario s{"S16-deductive", "deductive support between five arguments",
             Framework(b.sig(), b.rules({"~A <- B", "~A <- E", "A <- C", "A <- D"})), {}};
  auto& e = s.expectations;
  const OnFramework fw;
  e.push_back(expect(ExpectValid{fw, Strictness::strict, {}}));
  e.push_back(expect(ExpectClosure{fw, b.set("C"), b.set("A,C")}));
  e.push_back(expect(ExpectAttacks{fw, b.set("B"), b.set("A"), true}));
  e.push_back(expect(ExpectAttacks{fw, b.set("B"), b.set("C"), false}));
  e.push_back(expect(ExpectAttacks{fw, b.set("B"), b.set("A,C"), true}));
  e.push_back(expect(ExpectHolds{fw, Extension{Semantics::admissible, b.set("C")}, false}));
  e.push_back(expect(ExpectExtensions{fw, Semantics::preferred, b.sets({"B,E"})}));
  return s;
}

Scenario voting_necessary() {
  Builder b(Signature::create({"A", "B", "C", "D", "E"}));
  Scenario s{"S16-necessary", "necessary support between five arguments",
             Framework(b.sig(), b.rules({"~A <- B", "~A <- E", "C <- A", "D <- A"})), {}};
  auto& e = s.expectations;
  const OnFramework fw;
  e.push_back(expect(ExpectValid{fw, Strictness::strict, {}}));
  e.push_back(expect(ExpectClosure{fw, b.set("A"), b.set("A,C,D")}));
  e.push_back(expect(ExpectAttacks{fw, b.set("B"), b.set("A"), true}));
  e.push_back(expect(ExpectAttacks{fw, b.set("B"), b.set("C"), false}));
  e.push_back(expect(ExpectExtensions{fw, Semantics::preferred, b.sets({"B,C,D,E"})}));
  return s;
}

}  // namespace

std::vector<Scenario> builtin_scenarios() {
  std::vector<Scenario> out;
  out.push_back(quota_example());
  out.push_back(oligarchy_example());
  out.push_back(admissibility_counterexample());
  out.push_back(set_stable_counterexample());
  out.push_back(acceptability_implicative());
  out.push_back(acceptability_disjunctive());
  out.push_back(acceptability_three_assumptions());
  out.push_back(extension_implicative());
  out.push_back(extension_disjunctive());
  out.push_back(four_agents_three_assumptions());
  out.push_back(three_agents_four_assumptions());
  out.push_back(coherence_implicative());
  out.push_back(coherence_disjunctive());
  for (std::size_t k = 2; k <= 6; ++k) out.push_back(attack_ring(k));
  out.push_back(illustration());
  out.push_back(voting_deductive());
  out.push_back(voting_necessary());
  return out;
}

}  // namespace baba

#include "baba/core.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace baba {
namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(),
                      [](unsigned char c) { return std::isspace(c) != 0 || std::iscntrl(c) != 0; });
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

}  // namespace

AssumptionSet AssumptionSet::single(AssumptionIndex index) {
  AssumptionSet set;
  set.insert(index);
  return set;
}

AssumptionSet AssumptionSet::full(std::size_t count) {
  if (count > kMaxAssumptions) throw InvalidArgument("assumption count exceeds capacity");
  return AssumptionSet((Mask{1} << count) - 1);
}

void AssumptionSet::insert(AssumptionIndex index) {
  if (index >= kMaxAssumptions) throw InvalidArgument("assumption index out of range");
  mask_ |= Mask{1} << index;
}

void AssumptionSet::erase(AssumptionIndex index) noexcept {
  if (index < kMaxAssumptions) mask_ &= ~(Mask{1} << index);
}

std::vector<AssumptionIndex> AssumptionSet::members() const {
  std::vector<AssumptionIndex> out;
  out.reserve(size());
  for_each([&](AssumptionIndex i) { out.push_back(i); });
  return out;
}

bool canonical_less(AssumptionSet a, AssumptionSet b) noexcept {
  auto x = a.mask();
  auto y = b.mask();
  while (x != 0 && y != 0) {
    const int lx = std::countr_zero(x);
    const int ly = std::countr_zero(y);
    if (lx != ly) return lx < ly;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

void canonicalize(std::vector<AssumptionSet>& sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::shared_ptr<const Signature> Signature::create(
    std::vector<std::string> assumptions, const std::map<std::string, std::string>& contraries,
    const std::vector<std::string>& extra_sentences) {
  std::vector<std::string> problems;

  std::sort(assumptions.begin(), assumptions.end());
  if (assumptions.empty()) problems.push_back("assumption set is empty");
  if (assumptions.size() > kMaxAssumptions) {
    problems.push_back("too many assumptions: " + std::to_string(assumptions.size()) +
                       " (at most " + std::to_string(kMaxAssumptions) + ")");
  }
  for (std::size_t i = 0; i < assumptions.size(); ++i) {
    if (!valid_name(assumptions[i])) problems.push_back("invalid sentence name '" + assumptions[i] + "'");
    if (i > 0 && assumptions[i] == assumptions[i - 1]) {
      problems.push_back("duplicate assumption '" + assumptions[i] + "'");
    }
  }
  for (const auto& [key, value] : contraries) {
    if (!std::binary_search(assumptions.begin(), assumptions.end(), key)) {
      problems.push_back("contrary given for non-assumption '" + key + "'");
    }
    if (!valid_name(value)) problems.push_back("invalid contrary name '" + value + "' for '" + key + "'");
  }
  for (const auto& sentence : extra_sentences) {
    if (!valid_name(sentence)) problems.push_back("invalid sentence name '" + sentence + "'");
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));

  assumptions.erase(std::unique(assumptions.begin(), assumptions.end()), assumptions.end());
  std::vector<std::string> contrary_names;
  contrary_names.reserve(assumptions.size());
  for (const auto& a : assumptions) {
    auto it = contraries.find(a);
    contrary_names.push_back(it != contraries.end() ? it->second : "~" + a);
  }

  std::set<std::string> language(assumptions.begin(), assumptions.end());
  language.insert(contrary_names.begin(), contrary_names.end());
  language.insert(extra_sentences.begin(), extra_sentences.end());

  std::shared_ptr<Signature> sig(new Signature());
  sig->language_.assign(language.begin(), language.end());
  sig->assumption_of_sentence_.assign(sig->language_.size(), std::nullopt);
  sig->contrary_of_.assign(sig->language_.size(), AssumptionSet{});
  for (std::size_t i = 0; i < assumptions.size(); ++i) {
    const SentenceId a = *sig->find_sentence(assumptions[i]);
    const SentenceId c = *sig->find_sentence(contrary_names[i]);
    sig->assumption_sentence_.push_back(a);
    sig->contrary_.push_back(c);
    sig->assumption_of_sentence_[a.value] = i;
    sig->contrary_of_[c.value].insert(i);
  }
  return sig;
}

std::optional<SentenceId> Signature::find_sentence(std::string_view name) const {
  auto it = std::lower_bound(language_.begin(), language_.end(), name);
  if (it == language_.end() || *it != name) return std::nullopt;
  return SentenceId{static_cast<std::uint32_t>(it - language_.begin())};
}

std::optional<AssumptionIndex> Signature::find_assumption(std::string_view name) const {
  auto sentence = find_sentence(name);
  if (!sentence) return std::nullopt;
  return as_assumption(*sentence);
}

std::optional<AssumptionIndex> Signature::as_assumption(SentenceId sentence) const {
  if (sentence.value >= assumption_of_sentence_.size()) return std::nullopt;
  return assumption_of_sentence_[sentence.value];
}

std::vector<std::string> Signature::names(AssumptionSet set) const {
  std::vector<std::string> out;
  set.for_each([&](AssumptionIndex i) { out.push_back(assumption_name(i)); });
  return out;
}

std::string Signature::format(AssumptionSet set) const {
  std::string out = "{";
  bool first = true;
  set.for_each([&](AssumptionIndex i) {
    if (!first) out += ", ";
    out += assumption_name(i);
    first = false;
  });
  out += "}";
  return out;
}

AssumptionSet Signature::parse_set(std::string_view text) const {
  AssumptionSet set;
  text = trim(text);
  if (text.empty()) return set;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto name = trim(text.substr(start, end - start));
    auto index = find_assumption(name);
    if (!index) throw InvalidArgument("unknown assumption '" + std::string(name) + "'");
    set.insert(*index);
    start = end + 1;
  }
  return set;
}

Rule make_rule(const Signature& signature, std::string_view head, std::string_view body) {
  auto head_id = signature.find_sentence(head);
  if (!head_id) throw InvalidArgument("unknown sentence '" + std::string(head) + "'");
  auto body_index = signature.find_assumption(body);
  if (!body_index) throw InvalidArgument("rule body '" + std::string(body) + "' is not an assumption");
  return Rule{*head_id, *body_index};
}

Rule parse_rule(const Signature& signature, std::string_view text) {
  const auto arrow = text.find("<-");
  if (arrow == std::string_view::npos) throw InvalidArgument("rule '" + std::string(text) + "' lacks '<-'");
  return make_rule(signature, trim(text.substr(0, arrow)), trim(text.substr(arrow + 2)));
}

std::string format_rule(const Signature& signature, const Rule& rule) {
  return signature.name(rule.head) + " <- " + signature.assumption_name(rule.body);
}

void canonicalize(std::vector<Rule>& rules) {
  std::sort(rules.begin(), rules.end());
  rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
}

std::string_view to_string(Violation::Kind kind) noexcept {
  switch (kind) {
    case Violation::Kind::bad_head: return "bad head";
    case Violation::Kind::self_attack: return "self-attack";
    case Violation::Kind::self_support: return "self-support";
  }
  return "unknown";
}

Framework::Framework(SignaturePtr signature, std::vector<Rule> rules)
    : signature_(std::move(signature)), rules_(std::move(rules)) {
  if (!signature_) throw InvalidArgument("framework needs a signature");
  const auto& sig = *signature_;
  const std::size_t n = sig.assumption_count();
  for (const auto& rule : rules_) {
    if (rule.head.value >= sig.sentence_count()) throw InvalidArgument("rule head outside the language");
    if (rule.body >= n) throw InvalidArgument("rule body is not a valid assumption index");
  }
  canonicalize(rules_);

  // Singleton closures: reachability along support rules (head is an assumption).
  std::vector<AssumptionSet> supports(n);
  for (const auto& rule : rules_) {
    if (auto head = sig.as_assumption(rule.head)) supports[rule.body].insert(*head);
  }
  closure_.resize(n);
  for (AssumptionIndex a = 0; a < n; ++a) {
    AssumptionSet reached = AssumptionSet::single(a);
    AssumptionSet frontier = reached;
    while (!frontier.empty()) {
      AssumptionSet next;
      frontier.for_each([&](AssumptionIndex b) { next |= supports[b]; });
      frontier = next - reached;
      reached |= next;
    }
    closure_[a] = reached;
  }

  // Whatever is derivable from {a} is a sentence of Cl({a}) or the head of a
  // rule whose body lies in Cl({a}).
  std::vector<AssumptionSet> direct_targets(n);
  for (const auto& rule : rules_) direct_targets[rule.body] |= sig.contrary_of(rule.head);
  attacks_from_.resize(n);
  attackers_.assign(n, AssumptionSet{});
  for (AssumptionIndex a = 0; a < n; ++a) {
    AssumptionSet targets;
    closure_[a].for_each([&](AssumptionIndex g) {
      targets |= direct_targets[g];
      targets |= sig.contrary_of(sig.assumption_sentence(g));
    });
    attacks_from_[a] = targets;
    targets.for_each([&](AssumptionIndex t) { attackers_[t].insert(a); });
  }
}

AssumptionSet Framework::closure(AssumptionSet set) const {
  AssumptionSet out;
  set.for_each([&](AssumptionIndex a) { out |= closure_.at(a); });
  return out;
}

bool Framework::derives(AssumptionSet set, SentenceId sentence) const {
  const auto& sig = *signature_;
  if (sentence.value >= sig.sentence_count()) throw InvalidArgument("sentence outside the language");
  const AssumptionSet reach = closure(set);
  if (auto a = sig.as_assumption(sentence); a && reach.contains(*a)) return true;
  return std::any_of(rules_.begin(), rules_.end(), [&](const Rule& rule) {
    return rule.head == sentence && reach.contains(rule.body);
  });
}

bool Framework::attacks(AssumptionSet attacker, AssumptionIndex target) const {
  if (target >= assumption_count()) throw InvalidArgument("target assumption out of range");
  return attackers_[target].intersects(attacker);
}

AssumptionSet Framework::attacked_by(AssumptionSet attacker) const {
  AssumptionSet out;
  attacker.for_each([&](AssumptionIndex a) { out |= attacks_from_.at(a); });
  return out;
}

bool Framework::defends(AssumptionSet defender, AssumptionIndex target) const {
  if (target >= assumption_count()) throw InvalidArgument("target assumption out of range");
  const AssumptionSet countered = attacked_by(defender);
  bool ok = true;
  attackers_[target].for_each([&](AssumptionIndex b) {
    if (!closure_[b].intersects(countered)) ok = false;
  });
  return ok;
}

AssumptionSet Framework::defended_by(AssumptionSet defender) const {
  const AssumptionSet countered = attacked_by(defender);
  AssumptionSet out;
  for (AssumptionIndex t = 0; t < assumption_count(); ++t) {
    bool ok = true;
    attackers_[t].for_each([&](AssumptionIndex b) {
      if (!closure_[b].intersects(countered)) ok = false;
    });
    if (ok) out.insert(t);
  }
  return out;
}

std::vector<Violation> validate(const Framework& framework, Strictness strictness) {
  const auto& sig = framework.signature();
  std::vector<Violation> out;
  for (const auto& rule : framework.rules()) {
    const auto head_assumption = sig.as_assumption(rule.head);
    const auto attacked = sig.contrary_of(rule.head);
    if (!head_assumption && attacked.empty()) {
      out.push_back({Violation::Kind::bad_head,
                     "bad head: '" + format_rule(sig, rule) + "' has a head that is neither an assumption nor a contrary"});
      continue;
    }
    if (strictness != Strictness::strict) continue;
    if (attacked.contains(rule.body)) {
      out.push_back({Violation::Kind::self_attack, "self-attack: '" + format_rule(sig, rule) + "'"});
    }
    if (head_assumption && *head_assumption == rule.body) {
      out.push_back({Violation::Kind::self_support, "self-support: '" + format_rule(sig, rule) + "'"});
    }
  }
  return out;
}

void require_valid(const Framework& framework, Strictness strictness) {
  std::vector<std::string> problems;
  for (const auto& v : validate(framework, strictness)) {
    // Self-support is a closure no-op and only warned about.
    if (v.kind != Violation::Kind::self_support) problems.push_back(v.message);
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

}  // namespace baba

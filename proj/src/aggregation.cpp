#include "baba/aggregation.hpp"

#include <algorithm>
#include <map>

namespace baba {

Profile::Profile(SignaturePtr signature, std::vector<std::vector<Rule>> agent_rules)
    : signature_(std::move(signature)), agents_(std::move(agent_rules)) {
  if (!signature_) throw InvalidArgument("profile needs a signature");
  if (agents_.size() < 2) {
    throw InvalidArgument("a profile needs at least two agents, got " + std::to_string(agents_.size()));
  }
  for (auto& rules : agents_) {
    for (const auto& rule : rules) {
      if (rule.head.value >= signature_->sentence_count() || rule.body >= signature_->assumption_count()) {
        throw InvalidArgument("agent rule does not reference the shared signature");
      }
    }
    canonicalize(rules);
  }
}

std::vector<Rule> Profile::universe() const {
  std::vector<Rule> out;
  for (const auto& rules : agents_) out.insert(out.end(), rules.begin(), rules.end());
  canonicalize(out);
  return out;
}

std::string_view to_string(QuotaKind kind) noexcept {
  switch (kind) {
    case QuotaKind::nomination: return "nomination";
    case QuotaKind::weak_majority: return "weak-majority";
    case QuotaKind::strict_majority: return "strict-majority";
    case QuotaKind::unanimity: return "unanimity";
  }
  return "unknown";
}

std::size_t resolve_quota(QuotaKind kind, std::size_t agents) {
  if (agents <= 1) throw InvalidArgument("quota rules need more than one agent");
  switch (kind) {
    case QuotaKind::nomination: return 1;
    case QuotaKind::weak_majority: return agents / 2;
    case QuotaKind::strict_majority: return (agents + 1) / 2;
    case QuotaKind::unanimity: return agents;
  }
  return agents;
}

std::string to_string(const AggregationSpec& spec) {
  struct Printer {
    std::string operator()(const Quota& s) const { return "quota:" + std::to_string(s.q); }
    std::string operator()(const NamedQuota& s) const { return std::string(to_string(s.kind)); }
    std::string operator()(const Oligarchy& s) const {
      std::string out = s.veto.size() == 1 ? "dictator:" : "oligarchy:";
      for (std::size_t i = 0; i < s.veto.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(s.veto[i] + 1);
      }
      return out;
    }
  };
  return std::visit(Printer{}, spec);
}

void require_applicable(const AggregationSpec& spec, std::size_t agents) {
  if (agents <= 1) throw InvalidArgument("aggregation needs more than one agent");
  if (const auto* quota = std::get_if<Quota>(&spec)) {
    if (quota->q < 1 || quota->q > agents) {
      throw InvalidArgument("quota " + std::to_string(quota->q) + " outside 1.." + std::to_string(agents));
    }
  } else if (const auto* oligarchy = std::get_if<Oligarchy>(&spec)) {
    if (oligarchy->veto.empty()) throw InvalidArgument("oligarchy needs at least one veto agent");
    for (std::size_t agent : oligarchy->veto) {
      if (agent >= agents) {
        throw InvalidArgument("veto agent " + std::to_string(agent + 1) + " outside 1.." +
                              std::to_string(agents));
      }
    }
  }
}

std::vector<Rule> aggregate_rules(const Profile& profile, const AggregationSpec& spec) {
  const std::size_t n = profile.agent_count();
  require_applicable(spec, n);

  std::map<Rule, std::size_t> support;
  std::size_t threshold = 0;
  if (const auto* oligarchy = std::get_if<Oligarchy>(&spec)) {
    std::vector<std::size_t> veto = oligarchy->veto;
    std::sort(veto.begin(), veto.end());
    veto.erase(std::unique(veto.begin(), veto.end()), veto.end());
    for (std::size_t agent : veto) {
      for (const auto& rule : profile.agent_rules(agent)) ++support[rule];
    }
    threshold = veto.size();
  } else {
    threshold = std::holds_alternative<Quota>(spec) ? std::get<Quota>(spec).q
                                                    : resolve_quota(std::get<NamedQuota>(spec).kind, n);
    for (std::size_t agent = 0; agent < n; ++agent) {
      for (const auto& rule : profile.agent_rules(agent)) ++support[rule];
    }
  }

  std::vector<Rule> out;
  for (const auto& [rule, count] : support) {
    if (count >= threshold) out.push_back(rule);
  }
  return out;  // std::map iteration is already canonical
}

Framework aggregate(const Profile& profile, const AggregationSpec& spec) {
  return Framework(profile.signature_ptr(), aggregate_rules(profile, spec));
}

}  // namespace baba

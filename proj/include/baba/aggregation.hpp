#pragma once

// Multi-agent profiles and the quota / oligarchic aggregation rules. All
// agents share one signature; aggregation only combines rule sets.

#include <string>
#include <variant>
#include <vector>

#include "baba/core.hpp"

namespace baba {

/// n >= 2 agents' rule sets over one signature. Agent indices are 0-based.
class Profile {
 public:
  /// Throws InvalidArgument for fewer than two agents or rules that do not
  /// reference the signature. Agent rule sets may be empty.
  Profile(SignaturePtr signature, std::vector<std::vector<Rule>> agent_rules);

  const Signature& signature() const noexcept { return *signature_; }
  const SignaturePtr& signature_ptr() const noexcept { return signature_; }
  std::size_t agent_count() const noexcept { return agents_.size(); }
  const std::vector<Rule>& agent_rules(std::size_t agent) const { return agents_.at(agent); }
  Framework agent_framework(std::size_t agent) const { return {signature_, agents_.at(agent)}; }
  /// Union of all agents' rules, canonically sorted.
  std::vector<Rule> universe() const;

 private:
  SignaturePtr signature_;
  std::vector<std::vector<Rule>> agents_;
};

enum class QuotaKind { nomination, weak_majority, strict_majority, unanimity };

struct Quota {
  std::size_t q = 1;
};

struct NamedQuota {
  QuotaKind kind = QuotaKind::nomination;
};

/// Intersection over the veto agents; a single veto agent is a dictatorship.
struct Oligarchy {
  std::vector<std::size_t> veto;
};

using AggregationSpec = std::variant<Quota, NamedQuota, Oligarchy>;

std::string_view to_string(QuotaKind kind) noexcept;

/// nomination -> 1, weak majority -> floor(n/2), strict majority -> ceil(n/2),
/// unanimity -> n. Requires n > 1.
std::size_t resolve_quota(QuotaKind kind, std::size_t agents);

/// Spec in the command-line grammar: "quota:2", "unanimity", "oligarchy:1,3",
/// "dictator:2". Agents are printed 1-based.
std::string to_string(const AggregationSpec& spec);

/// Throws InvalidArgument if the spec cannot be applied to `agents` agents.
void require_applicable(const AggregationSpec& spec, std::size_t agents);

/// Rules accepted by the spec, canonically sorted.
std::vector<Rule> aggregate_rules(const Profile& profile, const AggregationSpec& spec);

/// The aggregated framework; shares the profile's signature.
Framework aggregate(const Profile& profile, const AggregationSpec& spec);

}  // namespace baba

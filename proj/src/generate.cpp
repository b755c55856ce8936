#include "baba/generate.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "baba/preservation.hpp"

namespace baba {
namespace {

// Uniform double in [0, 1) from the top 53 bits; portable across standard
// libraries, unlike std::uniform_real_distribution.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

void require_valid(const GenParams& params) {
  if (params.assumption_count == 0 || params.assumption_count > kMaxAssumptions) {
    throw InvalidArgument("assumption_count must be in 1.." + std::to_string(kMaxAssumptions));
  }
  if (params.agent_count < 2) throw InvalidArgument("agent_count must be at least 2");
  if (!is_probability(params.rule_density)) throw InvalidArgument("rule_density must lie in [0, 1]");
  if (!is_probability(params.support_fraction)) {
    throw InvalidArgument("support_fraction must lie in [0, 1]");
  }
}

SignaturePtr generated_signature(std::size_t assumption_count) {
  if (assumption_count == 0 || assumption_count > kMaxAssumptions) {
    throw InvalidArgument("assumption count out of range");
  }
  static std::mutex mutex;
  static std::map<std::size_t, SignaturePtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[assumption_count];
  if (!slot) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < assumption_count; ++i) names.emplace_back(1, static_cast<char>('A' + i));
    slot = Signature::create(std::move(names));
  }
  return slot;
}

std::vector<Rule> generated_universe(const Signature& signature, const GenParams& params) {
  return rule_universe(signature, params.exclude_self_attack, params.exclude_self_support);
}

std::vector<Rule> random_rules(const Signature& signature, const GenParams& params,
                               std::mt19937_64& rng) {
  const double attack_p = std::min(1.0, 2.0 * params.rule_density * (1.0 - params.support_fraction));
  const double support_p = std::min(1.0, 2.0 * params.rule_density * params.support_fraction);
  std::vector<Rule> rules;
  for (const auto& rule : generated_universe(signature, params)) {
    const bool is_support = signature.as_assumption(rule.head).has_value();
    // Always draw, so the stream position does not depend on the outcome.
    const double u = unit(rng);
    if (u < (is_support ? support_p : attack_p)) rules.push_back(rule);
  }
  return rules;
}

Profile random_profile(const GenParams& params) {
  require_valid(params);
  auto signature = generated_signature(params.assumption_count);
  std::mt19937_64 rng(params.seed);
  std::vector<std::vector<Rule>> agents;
  agents.reserve(params.agent_count);
  for (std::size_t i = 0; i < params.agent_count; ++i) agents.push_back(random_rules(*signature, params, rng));
  return Profile(signature, std::move(agents));
}

void for_each_small_profile(const std::function<void(const Profile&)>& visit) {
  auto signature = generated_signature(2);
  const auto universe = rule_universe(*signature);
  const std::size_t subsets = std::size_t{1} << universe.size();
  auto pick = [&](std::size_t mask) {
    std::vector<Rule> out;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if ((mask >> i) & 1U) out.push_back(universe[i]);
    }
    return out;
  };
  for (std::size_t first = 0; first < subsets; ++first) {
    for (std::size_t second = 0; second < subsets; ++second) {
      visit(Profile(signature, {pick(first), pick(second)}));
    }
  }
}

}  // namespace baba

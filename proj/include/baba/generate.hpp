#pragma once

// Seeded random profiles and the exhaustive two-agent, two-assumption family.

#include <cstdint>
#include <functional>
#include <random>

#include "baba/aggregation.hpp"

namespace baba {

struct GenParams {
  std::size_t assumption_count = 3;
  std::size_t agent_count = 2;
  /// Base per-agent inclusion probability of each candidate rule.
  double rule_density = 0.3;
  /// Share of the density given to support rules. Attack rules are included
  /// with probability min(1, 2 * density * (1 - f)), supports with
  /// min(1, 2 * density * f); at f = 0.5 both use `rule_density`.
  double support_fraction = 0.5;
  bool exclude_self_attack = true;
  bool exclude_self_support = true;
  std::uint64_t seed = 1;
};

/// Throws InvalidArgument for counts or probabilities out of range.
void require_valid(const GenParams& params);

/// Assumptions "A", "B", ... with contraries "~A", "~B", ...
SignaturePtr generated_signature(std::size_t assumption_count);

/// Candidate rules for `params`: every attack ~b <- a and support b <- a
/// over the generated signature, minus the excluded self rules.
std::vector<Rule> generated_universe(const Signature& signature, const GenParams& params);

/// Deterministic under params.seed.
Profile random_profile(const GenParams& params);

/// One agent's rules drawn with `rng`, as random_profile draws them.
std::vector<Rule> random_rules(const Signature& signature, const GenParams& params,
                               std::mt19937_64& rng);

/// Calls visit for each of the 256 ordered pairs of rule sets over the
/// four-rule universe {~A <- B, ~B <- A, A <- B, B <- A}.
void for_each_small_profile(const std::function<void(const Profile&)>& visit);

}  // namespace baba

#pragma once

// Framework properties, the preservation check for aggregation rules, and the
// implicative / disjunctive / k-exclusive meta-properties.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "baba/aggregation.hpp"
#include "baba/semantics.hpp"

namespace baba {

struct ConflictFree {
  AssumptionSet set;
};
struct Closed {
  AssumptionSet set;
};
struct Extension {
  Semantics semantics = Semantics::admissible;
  AssumptionSet set;
};
struct Acceptable {
  AssumptionIndex assumption = 0;
  Semantics semantics = Semantics::preferred;
};
struct Acyclic {};
struct WellFoundedNonempty {};
struct Coherent {};

using Property =
    std::variant<ConflictFree, Closed, Extension, Acceptable, Acyclic, WellFoundedNonempty, Coherent>;

/// Renders in the command-line grammar, e.g. "extension:admissible:A,B,C".
std::string to_string(const Signature& signature, const Property& property);

/// Throws InvalidArgument when the property references assumptions outside
/// the signature or uses admissible acceptability.
void require_valid(const Signature& signature, const Property& property);

bool holds(const Framework& framework, const Property& property,
           const EnumerationOptions& options = {});

enum class VerdictKind { not_applicable, preserved, violated };

std::string_view to_string(VerdictKind kind) noexcept;

struct PreservationVerdict {
  VerdictKind kind = VerdictKind::not_applicable;
  /// For not_applicable: the first agent whose framework fails the property.
  std::optional<std::size_t> agent;
  std::string witness;
};

/// NotApplicable when some agent fails the property; otherwise Preserved iff
/// the aggregate satisfies it.
PreservationVerdict check_preservation(const Profile& profile, const AggregationSpec& spec,
                                       const Property& property,
                                       const EnumerationOptions& options = {});

/// Same verdict from already-built agent frameworks and aggregate, so callers
/// checking many properties on one profile build each framework once.
PreservationVerdict evaluate_preservation(std::span<const Framework> agents,
                                          const Framework& aggregated, const Property& property,
                                          const EnumerationOptions& options = {});

/// The property holds on base + S for every S within {r1, r2, r3} except
/// exactly S = {r1, r2}. Requires the three rules to be distinct attack
/// rules outside the base.
bool check_implicative(const SignaturePtr& signature, std::span<const Rule> base, const Rule& r1,
                       const Rule& r2, const Rule& r3, const Property& property,
                       const EnumerationOptions& options = {});

/// The property fails on the base alone and holds whenever r1 or r2 is added.
/// Requires two distinct attack rules outside the base.
bool check_disjunctive(const SignaturePtr& signature, std::span<const Rule> base, const Rule& r1,
                       const Rule& r2, const Property& property,
                       const EnumerationOptions& options = {});

inline constexpr std::size_t kMaxExclusiveRules = 16;

struct KExclusiveOptions {
  std::size_t superset_samples = 64;
  std::uint64_t seed = 0x5eed;
};

/// The property fails on <S> and on sampled strict supersets of S, and holds
/// on every proper subset of S. Supersets add rules drawn uniformly from the
/// signature's attack/support rule universe (self-attacks and self-supports
/// excluded).
bool check_k_exclusive(const SignaturePtr& signature, std::span<const Rule> rules,
                       const Property& property, const KExclusiveOptions& k_options = {},
                       const EnumerationOptions& options = {});

/// Every attack rule ~b <- a and support rule b <- a over the signature,
/// optionally without ~a <- a and a <- a. Canonically sorted.
std::vector<Rule> rule_universe(const Signature& signature, bool exclude_self_attack = true,
                                bool exclude_self_support = true);

}  // namespace baba

#pragma once

// Extension semantics over a Bipolar ABA framework: admissible, preferred,
// complete, set-stable, well-founded and ideal. All of them are computed by
// scanning the 2^|A| subsets of the assumption set, so enumeration is capped.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "baba/core.hpp"

namespace baba {

enum class Semantics { admissible, preferred, complete, set_stable, well_founded, ideal };

inline constexpr std::array<Semantics, 6> kAllSemantics = {
    Semantics::admissible, Semantics::preferred,    Semantics::complete,
    Semantics::set_stable, Semantics::well_founded, Semantics::ideal};

/// Semantics under which assumption acceptability is defined.
inline constexpr std::array<Semantics, 5> kAcceptabilitySemantics = {
    Semantics::preferred, Semantics::complete, Semantics::set_stable, Semantics::well_founded,
    Semantics::ideal};

/// "set-stable", "well-founded", ...
std::string_view to_string(Semantics semantics) noexcept;
std::optional<Semantics> parse_semantics(std::string_view text) noexcept;

inline constexpr std::size_t kDefaultEnumerationCap = 16;

struct EnumerationOptions {
  /// Largest assumption count for which subset enumeration is attempted.
  /// Values above kMaxAssumptions are clamped.
  std::size_t cap = kDefaultEnumerationCap;
};

/// Default options, honouring the BABA_ENUMERATION_CAP environment variable.
EnumerationOptions default_enumeration_options();

struct ExtensionReport {
  Semantics semantics = Semantics::admissible;
  /// Canonically sorted, duplicate free.
  std::vector<AssumptionSet> extensions;
  /// False only for complete, set-stable and well-founded when none exists.
  bool exists = true;
};

/// Closed, conflict-free and counter-attacks the closure of every assumption
/// attacking one of its members.
bool is_admissible(const Framework& framework, AssumptionSet set);

/// Complete: admissible and equal to the set of assumptions it defends.
bool is_complete(const Framework& framework, AssumptionSet set);

/// Set-stable: closed, conflict-free and attacks Cl({b}) for every b outside.
bool is_set_stable(const Framework& framework, AssumptionSet set);

ExtensionReport enumerate(const Framework& framework, Semantics semantics,
                          const EnumerationOptions& options = {});

bool is_extension(const Framework& framework, AssumptionSet set, Semantics semantics,
                  const EnumerationOptions& options = {});

/// Some extension under `semantics` contains `assumption`. Admissible is
/// rejected with InvalidArgument.
bool is_acceptable(const Framework& framework, AssumptionIndex assumption, Semantics semantics,
                   const EnumerationOptions& options = {});

/// Preferred and set-stable families coincide.
bool is_coherent(const Framework& framework, const EnumerationOptions& options = {});

/// No directed cycle of length >= 2 among direct attack rules ~a <- b.
bool is_acyclic(const Framework& framework);

/// The well-founded extension exists and is nonempty.
bool well_founded_nonempty(const Framework& framework, const EnumerationOptions& options = {});

}  // namespace baba

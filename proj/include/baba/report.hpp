#pragma once

// Deterministic human-readable and JSON renderings of command results.

#include <cstdint>
#include <string>
#include <vector>

#include "baba/verify.hpp"

namespace baba {

enum class OutputFormat { human, json };

std::string render_extensions(const Signature& signature, const ExtensionReport& report, OutputFormat format);

std::string render_rules(const Signature& signature, const AggregationSpec& spec,
                         const std::vector<Rule>& rules, OutputFormat format);

std::string render_verdict(const Signature& signature, const AggregationSpec& spec, const Property& property,
                           const PreservationVerdict& verdict, OutputFormat format);

enum class VerifySuite { paper, theorems, all };

struct VerifyRun {
  std::vector<ScenarioResult> scenarios;
  std::vector<TheoremInfo> theorem_infos;
  std::vector<TheoremReport> theorems;

  bool passed() const;
};

VerifyRun run_verify(VerifySuite suite, std::uint64_t seed, std::size_t budget);

/// JSON output lists at most this many violations per theorem, plus the total.
inline constexpr std::size_t kReportedViolations = 20;

std::string render_verify(const VerifyRun& run, OutputFormat format);

}  // namespace baba

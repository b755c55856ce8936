#include "baba/semantics.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace baba {
namespace {

using Mask = AssumptionSet::Mask;

void require_enumerable(const Framework& framework, const EnumerationOptions& options) {
  const std::size_t cap = std::min(options.cap, kMaxAssumptions);
  if (framework.assumption_count() > cap) {
    throw EnumerationLimitError(framework.assumption_count(), cap);
  }
}

// Subset-indexed membership table for a family of assumption sets.
class Family {
 public:
  explicit Family(std::size_t assumptions)
      : assumptions_(assumptions), bits_(std::size_t{1} << assumptions, 0) {}

  void add(Mask mask) { bits_[mask] = 1; }
  bool contains(Mask mask) const { return bits_[mask] != 0; }
  std::size_t universe() const { return bits_.size(); }

  std::vector<AssumptionSet> members() const {
    std::vector<AssumptionSet> out;
    for (std::size_t m = 0; m < bits_.size(); ++m) {
      if (bits_[m] != 0) out.emplace_back(static_cast<Mask>(m));
    }
    canonicalize(out);
    return out;
  }

  // Subset-maximal members. up[m] records whether m has a superset in the
  // family; m is maximal iff no one-element extension has one.
  std::vector<AssumptionSet> maximal() const {
    std::vector<std::uint8_t> up = bits_;
    for (std::size_t bit = 0; bit < assumptions_; ++bit) {
      const std::size_t b = std::size_t{1} << bit;
      for (std::size_t m = 0; m < up.size(); ++m) {
        if ((m & b) == 0 && up[m | b] != 0) up[m] = 1;
      }
    }
    std::vector<AssumptionSet> out;
    for (std::size_t m = 0; m < bits_.size(); ++m) {
      if (bits_[m] == 0) continue;
      bool dominated = false;
      for (std::size_t bit = 0; bit < assumptions_ && !dominated; ++bit) {
        const std::size_t b = std::size_t{1} << bit;
        dominated = (m & b) == 0 && up[m | b] != 0;
      }
      if (!dominated) out.emplace_back(static_cast<Mask>(m));
    }
    canonicalize(out);
    return out;
  }

 private:
  std::size_t assumptions_;
  std::vector<std::uint8_t> bits_;
};

Family admissible_family(const Framework& framework) {
  Family family(framework.assumption_count());
  for (std::size_t m = 0; m < family.universe(); ++m) {
    if (is_admissible(framework, AssumptionSet(static_cast<Mask>(m)))) family.add(static_cast<Mask>(m));
  }
  return family;
}

std::vector<AssumptionSet> preferred_of(const Family& admissible) { return admissible.maximal(); }

std::vector<AssumptionSet> complete_of(const Framework& framework, const Family& admissible) {
  std::vector<AssumptionSet> out;
  for (std::size_t m = 0; m < admissible.universe(); ++m) {
    const AssumptionSet set(static_cast<Mask>(m));
    if (admissible.contains(set.mask()) && framework.defended_by(set) == set) out.push_back(set);
  }
  canonicalize(out);
  return out;
}

std::vector<AssumptionSet> ideal_of(const Framework& framework, const Family& admissible) {
  AssumptionSet common = framework.signature().all_assumptions();
  for (const auto& p : preferred_of(admissible)) common &= p;
  Family candidates(framework.assumption_count());
  // Submasks of `common`, including the empty set.
  const Mask c = common.mask();
  for (Mask sub = c;; sub = (sub - 1) & c) {
    if (admissible.contains(sub)) candidates.add(sub);
    if (sub == 0) break;
  }
  return candidates.maximal();
}

AssumptionSet intersect_all(const Framework& framework, const std::vector<AssumptionSet>& sets) {
  AssumptionSet out = framework.signature().all_assumptions();
  for (const auto& s : sets) out &= s;
  return out;
}

}  // namespace

std::string_view to_string(Semantics semantics) noexcept {
  switch (semantics) {
    case Semantics::admissible: return "admissible";
    case Semantics::preferred: return "preferred";
    case Semantics::complete: return "complete";
    case Semantics::set_stable: return "set-stable";
    case Semantics::well_founded: return "well-founded";
    case Semantics::ideal: return "ideal";
  }
  return "unknown";
}

std::optional<Semantics> parse_semantics(std::string_view text) noexcept {
  for (Semantics s : kAllSemantics) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

EnumerationOptions default_enumeration_options() {
  EnumerationOptions options;
  if (const char* env = std::getenv("BABA_ENUMERATION_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != nullptr && *end == '\0' && value > 0) {
      options.cap = std::min<std::size_t>(value, kMaxAssumptions);
    }
  }
  return options;
}

bool is_admissible(const Framework& framework, AssumptionSet set) {
  return framework.is_closed(set) && framework.is_conflict_free(set) &&
         set.is_subset_of(framework.defended_by(set));
}

bool is_complete(const Framework& framework, AssumptionSet set) {
  return is_admissible(framework, set) && framework.defended_by(set) == set;
}

bool is_set_stable(const Framework& framework, AssumptionSet set) {
  if (!framework.is_closed(set) || !framework.is_conflict_free(set)) return false;
  const AssumptionSet countered = framework.attacked_by(set);
  const AssumptionSet outside = framework.signature().all_assumptions() - set;
  bool ok = true;
  outside.for_each([&](AssumptionIndex b) {
    if (!framework.closure(b).intersects(countered)) ok = false;
  });
  return ok;
}

ExtensionReport enumerate(const Framework& framework, Semantics semantics,
                          const EnumerationOptions& options) {
  require_enumerable(framework, options);
  ExtensionReport report;
  report.semantics = semantics;

  if (semantics == Semantics::set_stable) {
    const std::size_t total = std::size_t{1} << framework.assumption_count();
    for (std::size_t m = 0; m < total; ++m) {
      const AssumptionSet set(static_cast<Mask>(m));
      if (is_set_stable(framework, set)) report.extensions.push_back(set);
    }
    canonicalize(report.extensions);
    report.exists = !report.extensions.empty();
    return report;
  }

  const Family admissible = admissible_family(framework);
  switch (semantics) {
    case Semantics::admissible:
      report.extensions = admissible.members();
      break;
    case Semantics::preferred:
      report.extensions = preferred_of(admissible);
      break;
    case Semantics::complete:
      report.extensions = complete_of(framework, admissible);
      report.exists = !report.extensions.empty();
      break;
    case Semantics::well_founded: {
      const auto complete = complete_of(framework, admissible);
      report.exists = !complete.empty();
      if (report.exists) report.extensions.push_back(intersect_all(framework, complete));
      break;
    }
    case Semantics::ideal:
      report.extensions = ideal_of(framework, admissible);
      break;
    case Semantics::set_stable:
      break;
  }
  return report;
}

bool is_extension(const Framework& framework, AssumptionSet set, Semantics semantics,
                  const EnumerationOptions& options) {
  if (!set.is_subset_of(framework.signature().all_assumptions())) {
    throw InvalidArgument("set references assumptions outside the signature");
  }
  switch (semantics) {
    case Semantics::admissible: return is_admissible(framework, set);
    case Semantics::complete: return is_complete(framework, set);
    case Semantics::set_stable: return is_set_stable(framework, set);
    case Semantics::preferred: {
      require_enumerable(framework, options);
      if (!is_admissible(framework, set)) return false;
      const Mask rest = framework.signature().all_assumptions().mask() & ~set.mask();
      for (Mask extra = rest; extra != 0; extra = (extra - 1) & rest) {
        if (is_admissible(framework, AssumptionSet(set.mask() | extra))) return false;
      }
      return true;
    }
    case Semantics::well_founded:
    case Semantics::ideal: {
      const auto report = enumerate(framework, semantics, options);
      return std::find(report.extensions.begin(), report.extensions.end(), set) !=
             report.extensions.end();
    }
  }
  return false;
}

bool is_acceptable(const Framework& framework, AssumptionIndex assumption, Semantics semantics,
                   const EnumerationOptions& options) {
  if (semantics == Semantics::admissible) {
    throw InvalidArgument("acceptability is not defined for admissible semantics");
  }
  if (assumption >= framework.assumption_count()) throw InvalidArgument("assumption out of range");
  const auto report = enumerate(framework, semantics, options);
  return std::any_of(report.extensions.begin(), report.extensions.end(),
                     [&](AssumptionSet e) { return e.contains(assumption); });
}

bool is_coherent(const Framework& framework, const EnumerationOptions& options) {
  return enumerate(framework, Semantics::preferred, options).extensions ==
         enumerate(framework, Semantics::set_stable, options).extensions;
}

bool is_acyclic(const Framework& framework) {
  const auto& sig = framework.signature();
  const std::size_t n = sig.assumption_count();
  std::vector<AssumptionSet> edges(n);
  for (const auto& rule : framework.rules()) {
    AssumptionSet targets = sig.contrary_of(rule.head);
    targets.erase(rule.body);  // self-attacks are not cycles here
    edges[rule.body] |= targets;
  }
  // Kahn's algorithm: acyclic iff every node can be peeled off.
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t a = 0; a < n; ++a) edges[a].for_each([&](AssumptionIndex b) { ++indegree[b]; });
  std::vector<AssumptionIndex> ready;
  for (std::size_t a = 0; a < n; ++a) {
    if (indegree[a] == 0) ready.push_back(a);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const AssumptionIndex a = ready.back();
    ready.pop_back();
    ++removed;
    edges[a].for_each([&](AssumptionIndex b) {
      if (--indegree[b] == 0) ready.push_back(b);
    });
  }
  return removed == n;
}

bool well_founded_nonempty(const Framework& framework, const EnumerationOptions& options) {
  const auto report = enumerate(framework, Semantics::well_founded, options);
  return report.exists && !report.extensions.front().empty();
}

}  // namespace baba

#pragma once

// Definitional evaluation straight from the textbook definitions: deductions
// are enumerated as chains, and every quantifier over sets of assumptions
// runs over all subsets. Slow on purpose; used to cross-check the engine.

#include <cstdint>
#include <optional>
#include <vector>

#include "baba/aggregation.hpp"
#include "baba/preservation.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct Deduction {
  std::size_t leaf;
  std::vector<std::size_t> rules;  // indices into the rule list, root first
};

class Naive {
 public:
  Naive(const baba::Signature& signature, std::vector<baba::Rule> rules);

  std::size_t size() const { return n_; }
  Mask all() const { return n_ == 0 ? 0 : (Mask{1} << n_) - 1; }

  // Chains root -> leaf without repeated sentences. Longer chains only
  // repeat a leaf already found through a shorter one.
  std::vector<Deduction> deductions(baba::SentenceId root) const;

  bool derives(Mask a, baba::SentenceId phi) const;
  Mask closure(Mask a) const;
  bool closed(Mask a) const { return closure(a) == a; }
  bool attacks(Mask a, std::size_t beta) const;
  bool attacks_set(Mask a, Mask b) const;
  bool conflict_free(Mask a) const { return !attacks_set(a, a); }
  bool defends(Mask a, std::size_t alpha) const;
  bool admissible(Mask a) const;
  bool complete(Mask a) const;
  bool set_stable(Mask a) const;

  std::vector<Mask> admissible_sets() const;
  std::vector<Mask> preferred() const;
  std::vector<Mask> complete_sets() const;
  std::vector<Mask> set_stable_sets() const;
  std::optional<Mask> well_founded() const;
  std::vector<Mask> ideal() const;

  // nullopt when no extension of that kind exists.
  std::optional<std::vector<Mask>> extensions(baba::Semantics s) const;
  bool acceptable(std::size_t alpha, baba::Semantics s) const;
  bool coherent() const;
  bool acyclic() const;
  bool holds(const baba::Property& p) const;

 private:
  const baba::Signature& sig_;
  std::vector<baba::Rule> rules_;
  std::size_t n_;
  std::vector<std::vector<bool>> derivable_;  // [leaf][sentence]
  // Memo tables over every subset, filled from derivable_.
  std::vector<Mask> closure_;
  std::vector<Mask> attacked_;
};

std::vector<baba::AssumptionSet> to_sets(const std::vector<Mask>& masks);

// Rule kept iff the number of agents holding it reaches the threshold, or
// iff every veto agent holds it.
std::vector<baba::Rule> aggregate(const baba::Profile& profile, const baba::AggregationSpec& spec);

baba::VerdictKind verdict(const baba::Profile& profile, const baba::AggregationSpec& spec,
                          const baba::Property& property);

}  // namespace oracle

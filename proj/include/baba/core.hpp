#pragma once

// Bipolar ABA frameworks: signatures, rules, deductions, closure and attacks.
//
// Every rule has exactly one assumption in its body, so a deduction is a
// chain of rules ending in a single leaf assumption. The framework exploits
// this: it precomputes the closure of every singleton and the set of
// assumptions each singleton attacks, and answers set-level queries by
// taking unions over members.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "baba/error.hpp"

namespace baba {

inline constexpr std::size_t kMaxAssumptions = 20;

using AssumptionIndex = std::size_t;

/// Index of a sentence in the signature's language. Sentence ids follow the
/// lexicographic order of sentence names, so comparing ids compares names.
struct SentenceId {
  std::uint32_t value = 0;

  friend auto operator<=>(const SentenceId&, const SentenceId&) = default;
};

/// A set of assumptions stored as a bitmask over assumption indices.
class AssumptionSet {
 public:
  using Mask = std::uint32_t;

  constexpr AssumptionSet() = default;
  constexpr explicit AssumptionSet(Mask mask) : mask_(mask) {}

  static AssumptionSet single(AssumptionIndex index);
  /// All of 0..count-1.
  static AssumptionSet full(std::size_t count);

  constexpr Mask mask() const noexcept { return mask_; }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

  bool contains(AssumptionIndex index) const noexcept {
    return index < kMaxAssumptions && ((mask_ >> index) & 1U) != 0;
  }
  void insert(AssumptionIndex index);
  void erase(AssumptionIndex index) noexcept;

  constexpr bool is_subset_of(AssumptionSet other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool intersects(AssumptionSet other) const noexcept {
    return (mask_ & other.mask_) != 0;
  }

  std::vector<AssumptionIndex> members() const;

  /// Calls fn(index) for each member in increasing index order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (Mask rest = mask_; rest != 0; rest &= rest - 1) {
      fn(static_cast<AssumptionIndex>(std::countr_zero(rest)));
    }
  }

  friend constexpr AssumptionSet operator|(AssumptionSet a, AssumptionSet b) noexcept {
    return AssumptionSet(a.mask_ | b.mask_);
  }
  friend constexpr AssumptionSet operator&(AssumptionSet a, AssumptionSet b) noexcept {
    return AssumptionSet(a.mask_ & b.mask_);
  }
  /// Set difference.
  friend constexpr AssumptionSet operator-(AssumptionSet a, AssumptionSet b) noexcept {
    return AssumptionSet(a.mask_ & ~b.mask_);
  }
  AssumptionSet& operator|=(AssumptionSet other) noexcept {
    mask_ |= other.mask_;
    return *this;
  }
  AssumptionSet& operator&=(AssumptionSet other) noexcept {
    mask_ &= other.mask_;
    return *this;
  }
  friend constexpr bool operator==(AssumptionSet, AssumptionSet) = default;

 private:
  Mask mask_ = 0;
};

/// Canonical order on assumption sets: lexicographic on the sorted member
/// index sequences, so {} < {A} < {A,C} < {B}.
bool canonical_less(AssumptionSet a, AssumptionSet b) noexcept;

/// Sorts and deduplicates a list of sets into canonical order.
void canonicalize(std::vector<AssumptionSet>& sets);

/// Language, assumptions and contrary map shared by every framework of a
/// profile. Immutable once built; pass around as shared_ptr<const Signature>.
class Signature {
 public:
  /// Builds a signature. Assumption names are sorted lexicographically; a
  /// missing contrary defaults to "~" + name. The language is the union of
  /// assumptions, contraries and `extra_sentences`.
  /// Throws ValidationError listing every problem found.
  static std::shared_ptr<const Signature> create(
      std::vector<std::string> assumptions,
      const std::map<std::string, std::string>& contraries = {},
      const std::vector<std::string>& extra_sentences = {});

  std::size_t assumption_count() const noexcept { return assumption_sentence_.size(); }
  std::size_t sentence_count() const noexcept { return language_.size(); }

  const std::string& name(SentenceId sentence) const { return language_.at(sentence.value); }
  const std::string& assumption_name(AssumptionIndex index) const {
    return name(assumption_sentence_.at(index));
  }
  SentenceId assumption_sentence(AssumptionIndex index) const {
    return assumption_sentence_.at(index);
  }
  SentenceId contrary(AssumptionIndex index) const { return contrary_.at(index); }

  std::optional<SentenceId> find_sentence(std::string_view name) const;
  std::optional<AssumptionIndex> find_assumption(std::string_view name) const;
  /// If `sentence` is an assumption, its index.
  std::optional<AssumptionIndex> as_assumption(SentenceId sentence) const;
  /// Assumptions whose contrary is `sentence` (several may share one).
  AssumptionSet contrary_of(SentenceId sentence) const { return contrary_of_.at(sentence.value); }

  const std::vector<std::string>& language() const noexcept { return language_; }
  AssumptionSet all_assumptions() const { return AssumptionSet::full(assumption_count()); }

  /// Assumption names of a set, in canonical order.
  std::vector<std::string> names(AssumptionSet set) const;
  /// "{A, C}" style rendering.
  std::string format(AssumptionSet set) const;
  /// Parses a comma-separated list of assumption names ("" is the empty set).
  AssumptionSet parse_set(std::string_view text) const;

 private:
  Signature() = default;

  std::vector<std::string> language_;
  std::vector<SentenceId> assumption_sentence_;
  std::vector<SentenceId> contrary_;
  std::vector<std::optional<AssumptionIndex>> assumption_of_sentence_;
  std::vector<AssumptionSet> contrary_of_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

/// Inference rule head <- body with a single assumption as body.
struct Rule {
  SentenceId head;
  AssumptionIndex body = 0;

  friend auto operator<=>(const Rule&, const Rule&) = default;
};

/// Looks up both sentence names; throws InvalidArgument when either is
/// unknown or the body is not an assumption.
Rule make_rule(const Signature& signature, std::string_view head, std::string_view body);
/// Parses "head <- body".
Rule parse_rule(const Signature& signature, std::string_view text);
/// "~A <- B".
std::string format_rule(const Signature& signature, const Rule& rule);

/// Sorts and deduplicates in place (rule sets are mathematical sets).
void canonicalize(std::vector<Rule>& rules);

enum class Strictness { lenient, strict };

struct Violation {
  enum class Kind { bad_head, self_attack, self_support };

  Kind kind;
  std::string message;
};

std::string_view to_string(Violation::Kind kind) noexcept;

/// A signature plus a rule set, with precomputed singleton closures and
/// singleton attacks. Immutable; copies share the signature.
class Framework {
 public:
  /// Rules must reference sentences and assumptions of `signature`
  /// (InvalidArgument otherwise). Heads are not checked here; see validate().
  Framework(SignaturePtr signature, std::vector<Rule> rules);

  const Signature& signature() const noexcept { return *signature_; }
  const SignaturePtr& signature_ptr() const noexcept { return signature_; }
  std::span<const Rule> rules() const noexcept { return rules_; }
  std::size_t assumption_count() const noexcept { return signature_->assumption_count(); }

  /// Cl(A): every assumption derivable from a subset of A.
  AssumptionSet closure(AssumptionSet set) const;
  /// Cl({index}).
  AssumptionSet closure(AssumptionIndex index) const { return closure_.at(index); }

  /// Whether some deduction of `sentence` has all its leaves in `set`.
  bool derives(AssumptionSet set, SentenceId sentence) const;

  bool attacks(AssumptionSet attacker, AssumptionIndex target) const;
  bool attacks(AssumptionSet attacker, AssumptionSet targets) const {
    return attacked_by(attacker).intersects(targets);
  }
  /// Every assumption attacked by `attacker`.
  AssumptionSet attacked_by(AssumptionSet attacker) const;
  /// Assumptions that on their own attack `target`.
  AssumptionSet attackers_of(AssumptionIndex target) const { return attackers_.at(target); }

  bool is_conflict_free(AssumptionSet set) const { return !attacked_by(set).intersects(set); }
  bool is_closed(AssumptionSet set) const { return closure(set) == set; }

  /// Every closed set attacking `target` is attacked by `defender`. A closed
  /// attacker contains a single attacking assumption b and hence Cl({b}), so
  /// it suffices to check those closures.
  bool defends(AssumptionSet defender, AssumptionIndex target) const;
  /// {a : defender defends a}.
  AssumptionSet defended_by(AssumptionSet defender) const;

 private:
  SignaturePtr signature_;
  std::vector<Rule> rules_;
  std::vector<AssumptionSet> closure_;      // per assumption
  std::vector<AssumptionSet> attacks_from_;  // per assumption: targets
  std::vector<AssumptionSet> attackers_;     // per assumption: single attackers
};

/// Well-formedness report. Empty iff every rule head is an assumption or a
/// contrary; strict mode also reports rules ~a <- a and a <- a.
std::vector<Violation> validate(const Framework& framework, Strictness strictness);

/// Throws ValidationError when validate() reports anything.
void require_valid(const Framework& framework, Strictness strictness);

}  // namespace baba

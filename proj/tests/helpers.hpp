#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "baba/aggregation.hpp"
#include "baba/semantics.hpp"

namespace testing {

inline std::vector<baba::Rule> rules(const baba::Signature& sig, std::initializer_list<const char*> texts) {
  std::vector<baba::Rule> out;
  for (const char* t : texts) out.push_back(baba::parse_rule(sig, t));
  return out;
}

inline baba::SignaturePtr letters(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('A' + i)));
  return baba::Signature::create(names);
}

inline baba::Framework framework(std::size_t n, std::initializer_list<const char*> texts) {
  auto sig = letters(n);
  return {sig, rules(*sig, texts)};
}

inline baba::Profile profile(std::size_t n, std::initializer_list<std::initializer_list<const char*>> agents) {
  auto sig = letters(n);
  std::vector<std::vector<baba::Rule>> all;
  for (auto a : agents) all.push_back(rules(*sig, a));
  return {sig, std::move(all)};
}

inline std::string family(const baba::Signature& sig, const std::vector<baba::AssumptionSet>& sets) {
  std::string out = "[";
  for (std::size_t i = 0; i < sets.size(); ++i) out += (i ? ", " : "") + sig.format(sets[i]);
  return out + "]";
}

inline std::string extensions(const baba::Framework& f, baba::Semantics s) {
  const auto r = baba::enumerate(f, s, baba::default_enumeration_options());
  return r.exists ? family(f.signature(), r.extensions) : "none";
}

}  // namespace testing

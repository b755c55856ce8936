// baba: extensions, aggregation, preservation and the verification suites
// from the command line.
//
// Exit codes: 0 success (Preserved for `preserve`), 1 `verify` found
// failures or an internal limit was hit, 2 Violated, 3 NotApplicable,
// 64 usage error, 65 malformed or invalid document, 66 unreadable file.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "baba/document.hpp"
#include "baba/report.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitViolated = 2;
constexpr int kExitNotApplicable = 3;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;

struct UsageError : baba::Error {
  using Error::Error;
};

struct NoInput : baba::Error {
  using Error::Error;
};

struct Options {
  std::string format = "human";
  bool strict = false;

  std::string file;
  std::string semantics;
  std::string rule;
  std::string property;

  std::string suite = "all";
  std::uint64_t seed = 1;
  std::size_t budget = baba::kDefaultTheoremBudget;
};

baba::OutputFormat output_format(const Options& o) {
  return o.format == "json" ? baba::OutputFormat::json : baba::OutputFormat::human;
}

baba::Document load(const Options& o) {
  if (!std::filesystem::is_regular_file(o.file)) throw NoInput("cannot read '" + o.file + "'");
  return baba::load_document(o.file, o.strict ? baba::Strictness::strict : baba::Strictness::lenient);
}

const baba::Profile& need_profile(const baba::Document& doc, const std::string& command) {
  const auto* profile = std::get_if<baba::Profile>(&doc);
  if (!profile) throw UsageError(command + " needs a document with at least two agents");
  return *profile;
}

// Usage problems in arguments (rule or property text, quota out of range)
// surface as InvalidArgument from the library.
template <typename F>
auto as_usage(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const baba::InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

int run_semantics(const Options& o) {
  const auto doc = load(o);
  const auto semantics = baba::parse_semantics(o.semantics);
  if (!semantics) throw UsageError("unknown semantics '" + o.semantics + "'");
  std::optional<baba::Framework> framework;
  if (const auto* fw = std::get_if<baba::Framework>(&doc)) {
    if (!o.rule.empty()) throw UsageError("--rule applies to profiles only");
    framework = *fw;
  } else {
    if (o.rule.empty()) throw UsageError("the document is a profile; pass --rule to aggregate it first");
    const auto& profile = std::get<baba::Profile>(doc);
    framework = as_usage([&] { return baba::aggregate(profile, baba::parse_aggregation_spec(o.rule)); });
  }
  const auto report = baba::enumerate(*framework, *semantics, baba::default_enumeration_options());
  std::cout << baba::render_extensions(framework->signature(), report, output_format(o));
  return 0;
}

int run_aggregate(const Options& o) {
  const auto doc = load(o);
  const auto& profile = need_profile(doc, "aggregate");
  const auto spec = as_usage([&] { return baba::parse_aggregation_spec(o.rule); });
  const auto rules = as_usage([&] { return baba::aggregate_rules(profile, spec); });
  std::cout << baba::render_rules(profile.signature(), spec, rules, output_format(o));
  return 0;
}

int run_preserve(const Options& o) {
  const auto doc = load(o);
  const auto& profile = need_profile(doc, "preserve");
  const auto spec = as_usage([&] { return baba::parse_aggregation_spec(o.rule); });
  const auto property = as_usage([&] { return baba::parse_property(profile.signature(), o.property); });
  as_usage([&] { baba::require_applicable(spec, profile.agent_count()); });
  const auto verdict = baba::check_preservation(profile, spec, property, baba::default_enumeration_options());
  std::cout << baba::render_verdict(profile.signature(), spec, property, verdict, output_format(o));
  switch (verdict.kind) {
    case baba::VerdictKind::preserved: return 0;
    case baba::VerdictKind::violated: return kExitViolated;
    case baba::VerdictKind::not_applicable: return kExitNotApplicable;
  }
  return kExitFailure;
}

int run_verify(const Options& o) {
  const auto suite = o.suite == "paper"      ? baba::VerifySuite::paper
                     : o.suite == "theorems" ? baba::VerifySuite::theorems
                                             : baba::VerifySuite::all;
  const auto run = baba::run_verify(suite, o.seed, o.budget);
  std::cout << baba::render_verify(run, output_format(o));
  return run.passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipolar ABA extensions, aggregation and preservation checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "json"}));
  app.add_flag("--strict", o.strict, "Reject self-attacking rules in documents");

  auto* semantics = app.add_subcommand("semantics", "Enumerate the extensions of a framework");
  semantics->add_option("file", o.file, "Framework or profile document")->required();
  semantics->add_option("--semantics", o.semantics, "admissible, preferred, complete, set-stable, well-founded or ideal")
      ->required();
  semantics->add_option("--rule", o.rule, "Aggregation rule applied first when the document is a profile");

  auto* aggregate = app.add_subcommand("aggregate", "Print the aggregated rule set of a profile");
  aggregate->add_option("profile", o.file, "Profile document")->required();
  aggregate->add_option("--rule", o.rule, "quota:<q>, nomination, weak-majority, strict-majority, unanimity, "
                                          "oligarchy:<i,j,...> or dictator:<i>")
      ->required();

  auto* preserve = app.add_subcommand("preserve", "Check whether a rule preserves a property");
  preserve->add_option("profile", o.file, "Profile document")->required();
  preserve->add_option("--rule", o.rule, "Aggregation rule")->required();
  preserve->add_option("--property", o.property,
                       "conflict-free:<set>, closed:<set>, extension:<semantics>:<set>, "
                       "acceptable:<assumption>:<semantics>, acyclic, wf-nonempty or coherent")
      ->required();

  auto* verify = app.add_subcommand("verify", "Run the built-in scenarios and theorem checks");
  verify->add_option("--suite", o.suite, "paper, theorems or all")->check(CLI::IsMember({"paper", "theorems", "all"}));
  verify->add_option("--seed", o.seed, "Seed for the theorem checks");
  verify->add_option("--budget", o.budget, "Random profiles per theorem")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*semantics) return run_semantics(o);
    if (*aggregate) return run_aggregate(o);
    if (*preserve) return run_preserve(o);
    return run_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NoInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoInput;
  } catch (const baba::ParseError& e) {
    std::cerr << o.file << ":" << e.what() << "\n";
    return kExitData;
  } catch (const baba::ValidationError& e) {
    std::cerr << o.file << ": " << e.what() << "\n";
    return kExitData;
  } catch (const baba::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

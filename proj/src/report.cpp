#include "baba/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace baba {
namespace {

using ojson = nlohmann::ordered_json;

std::string dump(const ojson& value) { return value.dump(2) + "\n"; }

ojson set_json(const Signature& sig, AssumptionSet set) { return sig.names(set); }

ojson rule_json(const Signature& sig, const Rule& rule) {
  return ojson::array({sig.name(rule.head), sig.assumption_name(rule.body)});
}

// Left-aligned columns separated by two spaces; the last column is not padded.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace

std::string render_extensions(const Signature& signature, const ExtensionReport& report, OutputFormat format) {
  if (format == OutputFormat::json) {
    ojson out;
    out["semantics"] = std::string(to_string(report.semantics));
    out["exists"] = report.exists;
    out["extensions"] = ojson::array();
    for (auto set : report.extensions) out["extensions"].push_back(set_json(signature, set));
    return dump(out);
  }
  if (!report.exists) return "no " + std::string(to_string(report.semantics)) + " extension\n";
  std::string out;
  for (auto set : report.extensions) out += signature.format(set) + "\n";
  return out;
}

std::string render_rules(const Signature& signature, const AggregationSpec& spec, const std::vector<Rule>& rules,
                         OutputFormat format) {
  if (format == OutputFormat::json) {
    ojson out;
    out["rule"] = to_string(spec);
    out["rules"] = ojson::array();
    for (const auto& r : rules) out["rules"].push_back(rule_json(signature, r));
    return dump(out);
  }
  if (rules.empty()) return "{}\n";
  std::string out;
  for (const auto& r : rules) out += format_rule(signature, r) + "\n";
  return out;
}

std::string render_verdict(const Signature& signature, const AggregationSpec& spec, const Property& property,
                           const PreservationVerdict& verdict, OutputFormat format) {
  if (format == OutputFormat::json) {
    ojson out;
    out["rule"] = to_string(spec);
    out["property"] = to_string(signature, property);
    out["verdict"] = std::string(to_string(verdict.kind));
    out["agent"] = verdict.agent ? ojson(*verdict.agent + 1) : ojson(nullptr);
    out["witness"] = verdict.witness;
    return dump(out);
  }
  return std::string(to_string(verdict.kind)) + ": " + verdict.witness + "\n";
}

bool VerifyRun::passed() const {
  return std::all_of(scenarios.begin(), scenarios.end(), [](const auto& s) { return s.passed(); }) &&
         std::all_of(theorems.begin(), theorems.end(), [](const auto& t) { return t.violations.empty(); });
}

VerifyRun run_verify(VerifySuite suite, std::uint64_t seed, std::size_t budget) {
  VerifyRun run;
  if (suite != VerifySuite::theorems) {
    for (const auto& scenario : builtin_scenarios()) run.scenarios.push_back(run_scenario(scenario));
  }
  if (suite != VerifySuite::paper) {
    for (const auto& info : registered_theorems()) {
      run.theorem_infos.push_back(info);
      run.theorems.push_back(check_theorem(info.id, budget, seed));
    }
  }
  return run;
}

std::string render_verify(const VerifyRun& run, OutputFormat format) {
  if (format == OutputFormat::json) {
    ojson out;
    out["passed"] = run.passed();
    out["scenarios"] = ojson::array();
    for (const auto& s : run.scenarios) {
      ojson checks = ojson::array();
      for (const auto& c : s.checks) {
        ojson check;
        check["description"] = c.description;
        check["passed"] = c.passed;
        check["expected"] = c.expected;
        check["actual"] = c.actual;
        if (!c.note.empty()) check["note"] = c.note;
        checks.push_back(std::move(check));
      }
      out["scenarios"].push_back({{"id", s.id}, {"title", s.title}, {"passed", s.passed()}, {"checks", checks}});
    }
    out["theorems"] = ojson::array();
    for (std::size_t i = 0; i < run.theorems.size(); ++i) {
      const auto& t = run.theorems[i];
      ojson violations = ojson::array();
      for (std::size_t v = 0; v < std::min(t.violations.size(), kReportedViolations); ++v) {
        violations.push_back(t.violations[v]);
      }
      out["theorems"].push_back({{"id", t.id},
                                 {"statement", run.theorem_infos[i].statement},
                                 {"profiles_checked", t.profiles_checked},
                                 {"cases_checked", t.cases_checked},
                                 {"applicable", t.applicable},
                                 {"violation_count", t.violations.size()},
                                 {"violations", violations}});
    }
    return dump(out);
  }

  std::string out;
  if (!run.scenarios.empty()) {
    std::vector<std::vector<std::string>> rows = {{"SCENARIO", "RESULT", "CHECKS", "TITLE"}};
    for (const auto& s : run.scenarios) {
      const auto ok = std::count_if(s.checks.begin(), s.checks.end(), [](const auto& c) { return c.passed; });
      rows.push_back({s.id, s.passed() ? "pass" : "FAIL",
                      std::to_string(ok) + "/" + std::to_string(s.checks.size()), s.title});
    }
    out += table(rows);
    for (const auto& s : run.scenarios) {
      for (const auto& c : s.checks) {
        if (!c.passed) {
          out += s.id + ": " + c.description + ": expected " + c.expected + ", got " + c.actual + "\n";
        }
      }
    }
    std::string notes;
    for (const auto& s : run.scenarios) {
      for (const auto& c : s.checks) {
        if (!c.note.empty()) notes += "  " + s.id + " " + c.description + ": " + c.note + "\n";
      }
    }
    if (!notes.empty()) out += "\nnotes:\n" + notes;
  }
  if (!run.theorems.empty()) {
    if (!out.empty()) out += "\n";
    std::vector<std::vector<std::string>> rows = {
        {"THEOREM", "PROFILES", "CASES", "APPLICABLE", "VIOLATIONS"}};
    for (const auto& t : run.theorems) {
      rows.push_back({t.id, std::to_string(t.profiles_checked), std::to_string(t.cases_checked),
                      std::to_string(t.applicable), std::to_string(t.violations.size())});
    }
    out += table(rows);
    for (const auto& t : run.theorems) {
      for (std::size_t v = 0; v < std::min<std::size_t>(t.violations.size(), 3); ++v) {
        out += t.id + ": " + t.violations[v] + "\n";
      }
    }
  }
  out += run.passed() ? "\nall checks passed\n" : "\nsome checks failed\n";
  return out;
}

}  // namespace baba

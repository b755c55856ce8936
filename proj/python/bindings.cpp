// Python module bipolar_aba: frameworks, profiles, aggregation and
// preservation checks over assumption names given as strings.

#include <map>
#include <set>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "baba/document.hpp"
#include "baba/generate.hpp"
#include "baba/report.hpp"

namespace py = pybind11;
using namespace baba;

namespace {

using Names = std::vector<std::string>;
using Contraries = std::map<std::string, std::string>;

AssumptionSet to_set(const Signature& sig, const Names& names) {
  AssumptionSet out;
  for (const auto& n : names) {
    auto index = sig.find_assumption(n);
    if (!index) throw InvalidArgument("unknown assumption '" + n + "'");
    out.insert(*index);
  }
  return out;
}

AssumptionIndex to_index(const Signature& sig, const std::string& name) {
  auto index = sig.find_assumption(name);
  if (!index) throw InvalidArgument("unknown assumption '" + name + "'");
  return *index;
}

Semantics to_semantics(const std::string& text) {
  auto s = parse_semantics(text);
  if (!s) throw InvalidArgument("unknown semantics '" + text + "'");
  return *s;
}

// Rule heads that are neither assumptions nor contraries are added to the
// language so that validation can report them.
SignaturePtr make_signature(const Names& assumptions, const Contraries& contraries,
                            const std::vector<Names>& rule_lists) {
  std::set<std::string> known(assumptions.begin(), assumptions.end());
  for (const auto& a : assumptions) {
    auto it = contraries.find(a);
    known.insert(it == contraries.end() ? "~" + a : it->second);
  }
  Names extra;
  for (const auto& rules : rule_lists) {
    for (const auto& text : rules) {
      const auto arrow = text.find("<-");
      if (arrow == std::string::npos) throw InvalidArgument("rule '" + text + "' lacks '<-'");
      auto head = text.substr(0, arrow);
      head.erase(head.find_last_not_of(" \t") + 1);
      head.erase(0, head.find_first_not_of(" \t"));
      if (known.insert(head).second) extra.push_back(head);
    }
  }
  return Signature::create(assumptions, contraries, extra);
}

std::vector<Rule> to_rules(const Signature& sig, const Names& texts) {
  std::vector<Rule> out;
  for (const auto& t : texts) out.push_back(parse_rule(sig, t));
  return out;
}

Names rule_texts(const Signature& sig, const std::vector<Rule>& rules) {
  Names out;
  for (const auto& r : rules) out.push_back(format_rule(sig, r));
  return out;
}

py::object families(const Signature& sig, const ExtensionReport& report) {
  if (!report.exists) return py::none();
  py::list out;
  for (auto set : report.extensions) out.append(sig.names(set));
  return out;
}

Framework make_framework(const Names& assumptions, const Names& rules, const Contraries& contraries) {
  auto sig = make_signature(assumptions, contraries, {rules});
  Framework framework(sig, to_rules(*sig, rules));
  require_valid(framework, Strictness::lenient);
  return framework;
}

Profile make_profile(const Names& assumptions, const std::vector<Names>& agents, const Contraries& contraries) {
  auto sig = make_signature(assumptions, contraries, agents);
  std::vector<std::vector<Rule>> rules;
  for (const auto& a : agents) rules.push_back(to_rules(*sig, a));
  Profile profile(sig, std::move(rules));
  for (std::size_t i = 0; i < profile.agent_count(); ++i) require_valid(profile.agent_framework(i), Strictness::lenient);
  return profile;
}

py::dict verdict_dict(const PreservationVerdict& v) {
  py::dict out;
  out["verdict"] = std::string(to_string(v.kind));
  out["agent"] = v.agent ? py::object(py::int_(*v.agent)) : py::object(py::none());
  out["witness"] = v.witness;
  return out;
}

py::object document_object(Document doc) {
  if (auto* fw = std::get_if<Framework>(&doc)) return py::cast(std::move(*fw));
  return py::cast(std::get<Profile>(std::move(doc)));
}

}  // namespace

PYBIND11_MODULE(bipolar_aba, m) {
  m.doc() = "Bipolar assumption-based argumentation: semantics, aggregation and preservation";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<EnumerationLimitError>(m, "EnumerationLimitError", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

  py::class_<Framework>(m, "Framework")
      .def(py::init(&make_framework), py::arg("assumptions"), py::arg("rules") = Names{},
           py::arg("contraries") = Contraries{})
      .def_property_readonly("assumptions",
                             [](const Framework& f) { return f.signature().names(f.signature().all_assumptions()); })
      .def_property_readonly("rules", [](const Framework& f) {
        return rule_texts(f.signature(), {f.rules().begin(), f.rules().end()});
      })
      .def("contrary", [](const Framework& f, const std::string& a) {
        return f.signature().name(f.signature().contrary(to_index(f.signature(), a)));
      })
      .def("closure", [](const Framework& f, const Names& s) {
        return f.signature().names(f.closure(to_set(f.signature(), s)));
      })
      .def("derives", [](const Framework& f, const Names& s, const std::string& sentence) {
        auto id = f.signature().find_sentence(sentence);
        if (!id) throw InvalidArgument("unknown sentence '" + sentence + "'");
        return f.derives(to_set(f.signature(), s), *id);
      })
      .def("attacks", [](const Framework& f, const Names& a, const Names& b) {
        return f.attacks(to_set(f.signature(), a), to_set(f.signature(), b));
      })
      .def("defends", [](const Framework& f, const Names& s, const std::string& a) {
        return f.defends(to_set(f.signature(), s), to_index(f.signature(), a));
      })
      .def("is_conflict_free", [](const Framework& f, const Names& s) {
        return f.is_conflict_free(to_set(f.signature(), s));
      })
      .def("is_closed", [](const Framework& f, const Names& s) { return f.is_closed(to_set(f.signature(), s)); })
      .def(
          "extensions",
          [](const Framework& f, const std::string& sem) {
            return families(f.signature(), enumerate(f, to_semantics(sem), default_enumeration_options()));
          },
          "List of extensions (sorted name lists), or None when none exists.")
      .def("is_extension", [](const Framework& f, const Names& s, const std::string& sem) {
        return is_extension(f, to_set(f.signature(), s), to_semantics(sem), default_enumeration_options());
      })
      .def("is_acceptable", [](const Framework& f, const std::string& a, const std::string& sem) {
        return is_acceptable(f, to_index(f.signature(), a), to_semantics(sem), default_enumeration_options());
      })
      .def("is_coherent", [](const Framework& f) { return is_coherent(f, default_enumeration_options()); })
      .def("is_acyclic", [](const Framework& f) { return is_acyclic(f); })
      .def("well_founded_nonempty",
           [](const Framework& f) { return well_founded_nonempty(f, default_enumeration_options()); })
      .def("holds", [](const Framework& f, const std::string& prop) {
        return holds(f, parse_property(f.signature(), prop), default_enumeration_options());
      })
      .def(
          "validate",
          [](const Framework& f, bool strict) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& v : validate(f, strict ? Strictness::strict : Strictness::lenient)) {
              out.emplace_back(std::string(to_string(v.kind)), v.message);
            }
            return out;
          },
          py::arg("strict") = false)
      .def("__repr__", [](const Framework& f) {
        return "Framework(" + f.signature().format(f.signature().all_assumptions()) + ", " +
               std::to_string(f.rules().size()) + " rules)";
      });

  py::class_<Profile>(m, "Profile")
      .def(py::init(&make_profile), py::arg("assumptions"), py::arg("agents"), py::arg("contraries") = Contraries{})
      .def_property_readonly("agent_count", &Profile::agent_count)
      .def("agent", &Profile::agent_framework, py::arg("index"))
      .def("agent_rules", [](const Profile& p, std::size_t i) { return rule_texts(p.signature(), p.agent_rules(i)); })
      .def("aggregate", [](const Profile& p, const std::string& spec) {
        return aggregate(p, parse_aggregation_spec(spec));
      })
      .def("aggregate_rules", [](const Profile& p, const std::string& spec) {
        return rule_texts(p.signature(), aggregate_rules(p, parse_aggregation_spec(spec)));
      })
      .def("check_preservation", [](const Profile& p, const std::string& spec, const std::string& prop) {
        return verdict_dict(check_preservation(p, parse_aggregation_spec(spec), parse_property(p.signature(), prop),
                                               default_enumeration_options()));
      })
      .def("__repr__", [](const Profile& p) {
        return "Profile(" + p.signature().format(p.signature().all_assumptions()) + ", " +
               std::to_string(p.agent_count()) + " agents)";
      });

  m.def(
      "parse_document",
      [](const std::string& text, bool strict) {
        return document_object(parse_document(text, strict ? Strictness::strict : Strictness::lenient));
      },
      py::arg("text"), py::arg("strict") = false, "Framework for one agent, Profile for several.");
  m.def("serialize_document", [](const Framework& f) { return serialize_document(f); });
  m.def("serialize_document", [](const Profile& p) { return serialize_document(p); });

  m.def(
      "check_implicative",
      [](const Framework& base, const std::string& r1, const std::string& r2, const std::string& r3,
         const std::string& prop) {
        const auto& sig = base.signature();
        return check_implicative(base.signature_ptr(), base.rules(), parse_rule(sig, r1), parse_rule(sig, r2),
                                 parse_rule(sig, r3), parse_property(sig, prop), default_enumeration_options());
      },
      py::arg("base"), py::arg("r1"), py::arg("r2"), py::arg("r3"), py::arg("property"));
  m.def(
      "check_disjunctive",
      [](const Framework& base, const std::string& r1, const std::string& r2, const std::string& prop) {
        const auto& sig = base.signature();
        return check_disjunctive(base.signature_ptr(), base.rules(), parse_rule(sig, r1), parse_rule(sig, r2),
                                 parse_property(sig, prop), default_enumeration_options());
      },
      py::arg("base"), py::arg("r1"), py::arg("r2"), py::arg("property"));
  m.def(
      "check_k_exclusive",
      [](const Framework& s, const std::string& prop, std::size_t samples, std::uint64_t seed) {
        return check_k_exclusive(s.signature_ptr(), s.rules(), parse_property(s.signature(), prop),
                                 KExclusiveOptions{samples, seed}, default_enumeration_options());
      },
      py::arg("rules"), py::arg("property"), py::arg("superset_samples") = 64, py::arg("seed") = 0x5eed);

  m.def(
      "random_profile",
      [](std::size_t assumptions, std::size_t agents, double density, double support_fraction, std::uint64_t seed) {
        GenParams p;
        p.assumption_count = assumptions;
        p.agent_count = agents;
        p.rule_density = density;
        p.support_fraction = support_fraction;
        p.seed = seed;
        return random_profile(p);
      },
      py::arg("assumptions") = 3, py::arg("agents") = 2, py::arg("density") = 0.3, py::arg("support_fraction") = 0.5,
      py::arg("seed") = 1);

  m.def("registered_theorems", [] {
    Names out;
    for (const auto& t : registered_theorems()) out.push_back(t.id);
    return out;
  });
  m.def(
      "check_theorem",
      [](const std::string& id, std::size_t budget, std::uint64_t seed) {
        TheoremReport r;
        {
          py::gil_scoped_release release;
          r = check_theorem(id, budget, seed);
        }
        py::dict out;
        out["id"] = r.id;
        out["profiles_checked"] = r.profiles_checked;
        out["cases_checked"] = r.cases_checked;
        out["applicable"] = r.applicable;
        out["violations"] = r.violations;
        return out;
      },
      py::arg("id"), py::arg("budget") = kDefaultTheoremBudget, py::arg("seed") = 1);
  m.def("run_scenarios", [] {
    py::list out;
    for (const auto& s : builtin_scenarios()) {
      const auto r = run_scenario(s);
      py::list checks;
      for (const auto& c : r.checks) {
        py::dict d;
        d["description"] = c.description;
        d["passed"] = c.passed;
        d["expected"] = c.expected;
        d["actual"] = c.actual;
        d["note"] = c.note;
        checks.append(d);
      }
      py::dict d;
      d["id"] = r.id;
      d["title"] = r.title;
      d["passed"] = r.passed();
      d["checks"] = checks;
      out.append(d);
    }
    return out;
  });
}

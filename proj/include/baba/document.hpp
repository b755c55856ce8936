#pragma once

// JSON documents for frameworks and profiles, and the command-line grammars
// for aggregation rules and properties.
//
//   {"assumptions": ["A", "B"],
//    "contraries": {"A": "~A"},              optional, default "~X"
//    "agents": [{"rules": [["~A", "B"]]}]}   one agent: a framework

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "baba/preservation.hpp"

namespace baba {

using Document = std::variant<Framework, Profile>;

/// Throws ParseError (with 1-based line and column) for malformed JSON or
/// a document of the wrong shape, ValidationError for signature problems
/// and rules rejected under `strictness`.
Document parse_document(std::string_view text, Strictness strictness = Strictness::lenient);

/// Reads and parses a file; an unreadable file throws InvalidArgument.
Document load_document(const std::filesystem::path& path, Strictness strictness = Strictness::lenient);

/// Canonical form: sorted assumptions, contraries only where they differ
/// from the default, sorted duplicate-free rules, two-space indentation.
std::string serialize_document(const Document& document);

/// quota:<q> | nomination | weak-majority | strict-majority | unanimity |
/// oligarchy:<i,j,...> | dictator:<i>, agents numbered from 1. Throws
/// InvalidArgument.
AggregationSpec parse_aggregation_spec(std::string_view text);

/// conflict-free:<set> | closed:<set> | extension:<semantics>:<set> |
/// acceptable:<assumption>:<semantics> | acyclic | wf-nonempty | coherent,
/// sets as comma-joined names (possibly empty). Throws InvalidArgument.
Property parse_property(const Signature& signature, std::string_view text);

}  // namespace baba

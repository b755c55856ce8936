#include "baba/document.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace baba {
namespace {

using json = nlohmann::json;

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

std::string escape_token(const std::string& token) {
  std::string out;
  for (char c : token) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

Position position_at(std::string_view text, std::size_t offset) {
  Position pos;
  offset = std::min(offset, text.size());
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

// Forward iterator over the text that counts how far the parser has read.
class CountingIterator {
 public:
  using iterator_category = std::forward_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator() = default;
  CountingIterator(const char* p, std::size_t* consumed) : p_(p), consumed_(consumed) {}

  reference operator*() const { return *p_; }
  CountingIterator& operator++() {
    ++p_;
    if (consumed_) ++*consumed_;
    return *this;
  }
  CountingIterator operator++(int) {
    auto copy = *this;
    ++*this;
    return copy;
  }
  bool operator==(const CountingIterator& other) const { return p_ == other.p_; }

 private:
  const char* p_ = nullptr;
  std::size_t* consumed_ = nullptr;
};

// Records, for each JSON pointer, the offset of the last character of the
// token that started the value (and, separately, of each object key).
class PositionRecorder : public nlohmann::json_sax<json> {
 public:
  explicit PositionRecorder(const std::size_t* consumed) : consumed_(consumed) {}

  std::map<std::string, std::size_t> values;
  std::map<std::string, std::size_t> keys;

  bool null() override { return scalar(); }
  bool boolean(bool) override { return scalar(); }
  bool number_integer(number_integer_t) override { return scalar(); }
  bool number_unsigned(number_unsigned_t) override { return scalar(); }
  bool number_float(number_float_t, const string_t&) override { return scalar(); }
  bool string(string_t&) override { return scalar(); }
  bool binary(binary_t&) override { return scalar(); }
  bool start_object(std::size_t) override { return open(true); }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return open(false); }
  bool end_array() override { return close(); }
  bool key(string_t& name) override {
    stack_.back().key = name;
    keys[path()] = here();
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override {
    return false;
  }

 private:
  struct Frame {
    bool object;
    std::string key;
    std::size_t index = 0;
  };

  std::size_t here() const { return *consumed_ == 0 ? 0 : *consumed_ - 1; }

  std::string path() const {
    std::string out;
    for (const auto& f : stack_) {
      out += '/';
      out += f.object ? escape_token(f.key) : std::to_string(f.index);
    }
    return out;
  }

  void advance() {
    if (!stack_.empty() && !stack_.back().object) ++stack_.back().index;
  }

  bool scalar() {
    values[path()] = here();
    advance();
    return true;
  }
  bool open(bool object) {
    values[path()] = here();
    stack_.push_back({object, {}, 0});
    return true;
  }
  bool close() {
    stack_.pop_back();
    advance();
    return true;
  }

  const std::size_t* consumed_;
  std::vector<Frame> stack_;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {
    try {
      root_ = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
      const auto pos = position_at(text, e.byte == 0 ? 0 : e.byte - 1);
      std::string message = e.what();
      // Drop the library's "[json.exception.parse_error.101] parse error at line 1, column 2: " prefix.
      if (auto colon = message.find(": "); colon != std::string::npos) message = message.substr(colon + 2);
      throw ParseError(message, pos.line, pos.column);
    }
    std::size_t consumed = 0;
    CountingIterator first(text.data(), &consumed);
    CountingIterator last(text.data() + text.size(), nullptr);
    PositionRecorder recorder(&consumed);
    json::sax_parse(first, last, &recorder);
    values_ = std::move(recorder.values);
    keys_ = std::move(recorder.keys);
  }

  const json& root() const { return root_; }

  Position where(const std::string& pointer) const {
    auto it = values_.find(pointer);
    return position_at(text_, it == values_.end() ? 0 : it->second);
  }

  Position where_key(const std::string& pointer) const {
    auto it = keys_.find(pointer);
    return it == keys_.end() ? where(pointer) : position_at(text_, it->second);
  }

  [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
    const auto pos = where(pointer);
    throw ParseError(message, pos.line, pos.column);
  }

  [[noreturn]] void fail_key(const std::string& pointer, const std::string& message) const {
    const auto pos = where_key(pointer);
    throw ParseError(message, pos.line, pos.column);
  }

  void only_keys(const std::string& pointer, const json& object, std::initializer_list<std::string_view> allowed) const {
    for (const auto& [key, value] : object.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        fail_key(pointer + "/" + escape_token(key), "unknown key '" + key + "'");
      }
    }
  }

  const std::string& string_at(const std::string& pointer, const json& value, std::string_view what) const {
    if (!value.is_string()) fail(pointer, std::string(what) + " must be a string");
    return value.get_ref<const std::string&>();
  }

  std::string located(const std::string& pointer, const std::string& message) const {
    const auto pos = where(pointer);
    return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message;
  }

 private:
  std::string_view text_;
  json root_;
  std::map<std::string, std::size_t> values_;
  std::map<std::string, std::size_t> keys_;
};

struct RawRule {
  std::string head;
  std::string body;
  std::string pointer;
};

void require_all_valid(const std::vector<Framework>& frameworks, Strictness strictness, bool prefix) {
  std::vector<std::string> problems;
  for (std::size_t i = 0; i < frameworks.size(); ++i) {
    try {
      require_valid(frameworks[i], strictness);
    } catch (const ValidationError& e) {
      for (const auto& p : e.problems()) {
        problems.push_back(prefix ? "agent " + std::to_string(i + 1) + ": " + p : p);
      }
    }
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

std::string json_string(const std::string& s) { return json(s).dump(); }

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(sep, start);
    out.emplace_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw InvalidArgument(std::string(what) + " must be a positive integer, got '" + std::string(text) + "'");
  }
  if (value == 0) throw InvalidArgument(std::string(what) + " must be at least 1");
  return value;
}

Semantics semantics_from(std::string_view text) {
  auto s = parse_semantics(text);
  if (!s) throw InvalidArgument("unknown semantics '" + std::string(text) + "'");
  return *s;
}

}  // namespace

Document parse_document(std::string_view text, Strictness strictness) {
  const Reader reader(text);
  const json& root = reader.root();
  if (!root.is_object()) reader.fail("", "document must be an object");
  reader.only_keys("", root, {"assumptions", "contraries", "agents"});

  if (!root.contains("assumptions")) reader.fail("", "missing key 'assumptions'");
  const json& assumptions_json = root.at("assumptions");
  if (!assumptions_json.is_array()) reader.fail("/assumptions", "'assumptions' must be an array");
  std::vector<std::string> assumptions;
  for (std::size_t i = 0; i < assumptions_json.size(); ++i) {
    assumptions.push_back(reader.string_at("/assumptions/" + std::to_string(i), assumptions_json[i], "assumption"));
  }

  std::map<std::string, std::string> contraries;
  if (root.contains("contraries")) {
    const json& c = root.at("contraries");
    if (!c.is_object()) reader.fail("/contraries", "'contraries' must be an object");
    for (const auto& [key, value] : c.items()) {
      contraries[key] = reader.string_at("/contraries/" + escape_token(key), value, "contrary");
    }
  }

  if (!root.contains("agents")) reader.fail("", "missing key 'agents'");
  const json& agents_json = root.at("agents");
  if (!agents_json.is_array()) reader.fail("/agents", "'agents' must be an array");
  if (agents_json.empty()) throw ValidationError({"document has no agents (at least one is required)"});

  std::vector<std::vector<RawRule>> raw(agents_json.size());
  for (std::size_t a = 0; a < agents_json.size(); ++a) {
    const std::string agent_ptr = "/agents/" + std::to_string(a);
    const json& agent = agents_json[a];
    if (!agent.is_object()) reader.fail(agent_ptr, "agent must be an object");
    reader.only_keys(agent_ptr, agent, {"rules"});
    if (!agent.contains("rules")) reader.fail(agent_ptr, "missing key 'rules'");
    const json& rules = agent.at("rules");
    if (!rules.is_array()) reader.fail(agent_ptr + "/rules", "'rules' must be an array");
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const std::string rule_ptr = agent_ptr + "/rules/" + std::to_string(r);
      const json& rule = rules[r];
      if (!rule.is_array() || rule.size() != 2) reader.fail(rule_ptr, "rule must be a [head, body] pair");
      raw[a].push_back({reader.string_at(rule_ptr + "/0", rule[0], "rule head"),
                        reader.string_at(rule_ptr + "/1", rule[1], "rule body"), rule_ptr});
    }
  }

  // Heads outside the assumptions and contraries become extra sentences so
  // that validation reports them as bad heads.
  std::set<std::string> known(assumptions.begin(), assumptions.end());
  for (const auto& name : assumptions) {
    auto it = contraries.find(name);
    known.insert(it == contraries.end() ? "~" + name : it->second);
  }
  std::vector<std::string> extra;
  for (const auto& rules : raw) {
    for (const auto& r : rules) {
      if (!known.count(r.head)) {
        known.insert(r.head);
        extra.push_back(r.head);
      }
    }
  }
  auto signature = Signature::create(assumptions, contraries, extra);

  std::vector<std::string> problems;
  std::vector<std::vector<Rule>> agent_rules(raw.size());
  for (std::size_t a = 0; a < raw.size(); ++a) {
    for (const auto& r : raw[a]) {
      if (!signature->find_assumption(r.body)) {
        problems.push_back(reader.located(r.pointer + "/1", "rule body '" + r.body + "' is not an assumption"));
        continue;
      }
      agent_rules[a].push_back(make_rule(*signature, r.head, r.body));
    }
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));

  std::vector<Framework> frameworks;
  for (const auto& rules : agent_rules) frameworks.emplace_back(signature, rules);
  require_all_valid(frameworks, strictness, frameworks.size() > 1);
  if (frameworks.size() == 1) return frameworks.front();
  return Profile(signature, std::move(agent_rules));
}

Document load_document(const std::filesystem::path& path, Strictness strictness) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str(), strictness);
}

std::string serialize_document(const Document& document) {
  const Signature& sig = std::visit([](const auto& d) -> const Signature& { return d.signature(); }, document);
  std::vector<std::vector<Rule>> agents;
  if (const auto* fw = std::get_if<Framework>(&document)) {
    agents.emplace_back(fw->rules().begin(), fw->rules().end());
  } else {
    const auto& profile = std::get<Profile>(document);
    for (std::size_t i = 0; i < profile.agent_count(); ++i) agents.push_back(profile.agent_rules(i));
  }

  std::string out = "{\n  \"assumptions\": [";
  for (AssumptionIndex i = 0; i < sig.assumption_count(); ++i) {
    if (i) out += ", ";
    out += json_string(sig.assumption_name(i));
  }
  out += "],\n";

  std::vector<std::pair<std::string, std::string>> custom;
  for (AssumptionIndex i = 0; i < sig.assumption_count(); ++i) {
    const auto& name = sig.assumption_name(i);
    const auto& contrary = sig.name(sig.contrary(i));
    if (contrary != "~" + name) custom.emplace_back(name, contrary);
  }
  if (!custom.empty()) {
    out += "  \"contraries\": {";
    for (std::size_t i = 0; i < custom.size(); ++i) {
      if (i) out += ", ";
      out += json_string(custom[i].first) + ": " + json_string(custom[i].second);
    }
    out += "},\n";
  }

  out += "  \"agents\": [\n";
  for (std::size_t a = 0; a < agents.size(); ++a) {
    auto rules = agents[a];
    canonicalize(rules);
    out += "    {\"rules\": [";
    for (std::size_t r = 0; r < rules.size(); ++r) {
      if (r) out += ", ";
      out += "[" + json_string(sig.name(rules[r].head)) + ", " + json_string(sig.assumption_name(rules[r].body)) + "]";
    }
    out += a + 1 < agents.size() ? "]},\n" : "]}\n";
  }
  out += "  ]\n}\n";
  return out;
}

AggregationSpec parse_aggregation_spec(std::string_view text) {
  if (text == "nomination") return NamedQuota{QuotaKind::nomination};
  if (text == "weak-majority") return NamedQuota{QuotaKind::weak_majority};
  if (text == "strict-majority") return NamedQuota{QuotaKind::strict_majority};
  if (text == "unanimity") return NamedQuota{QuotaKind::unanimity};
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InvalidArgument("unknown aggregation rule '" + std::string(text) + "'");
  const auto kind = text.substr(0, colon);
  const auto arg = text.substr(colon + 1);
  if (kind == "quota") return Quota{parse_count(arg, "quota")};
  if (kind == "dictator") return Oligarchy{{parse_count(arg, "agent") - 1}};
  if (kind == "oligarchy") {
    Oligarchy o;
    for (const auto& part : split(arg, ',')) o.veto.push_back(parse_count(part, "agent") - 1);
    std::sort(o.veto.begin(), o.veto.end());
    if (std::adjacent_find(o.veto.begin(), o.veto.end()) != o.veto.end()) {
      throw InvalidArgument("duplicate veto agent in '" + std::string(text) + "'");
    }
    return o;
  }
  throw InvalidArgument("unknown aggregation rule '" + std::string(text) + "'");
}

Property parse_property(const Signature& signature, std::string_view text) {
  if (text == "acyclic") return Acyclic{};
  if (text == "wf-nonempty") return WellFoundedNonempty{};
  if (text == "coherent") return Coherent{};
  const auto parts = split(text, ':');
  const auto& kind = parts.front();
  Property property;
  if (kind == "conflict-free" && parts.size() == 2) {
    property = ConflictFree{signature.parse_set(parts[1])};
  } else if (kind == "closed" && parts.size() == 2) {
    property = Closed{signature.parse_set(parts[1])};
  } else if (kind == "extension" && parts.size() == 3) {
    property = Extension{semantics_from(parts[1]), signature.parse_set(parts[2])};
  } else if (kind == "acceptable" && parts.size() == 3) {
    auto index = signature.find_assumption(parts[1]);
    if (!index) throw InvalidArgument("unknown assumption '" + parts[1] + "'");
    property = Acceptable{*index, semantics_from(parts[2])};
  } else {
    throw InvalidArgument("cannot parse property '" + std::string(text) + "'");
  }
  require_valid(signature, property);
  return property;
}

}  // namespace baba

#include "ginv/corpus.hpp"

#include "ginv/corpus_data.hpp"
#include "ginv/inverse.hpp"
#include "ginv/oracle.hpp"

#include <fstream>
#include <sstream>

namespace ginv::corpus {

namespace {

bool reserved_name(std::string_view name) { return name == "zero" || name == "one"; }

Result<Element> eval_expr(const Scenario& s, const Json& node) {
  if (node.is_string()) {
    const std::string name = node.get<std::string>();
    if (name == "zero") return s.ring->zero();
    if (name == "one") return s.ring->one();
    for (const auto& [key, value] : s.elements)
      if (key == name) return value;
    return fail(Err::malformed_spec, "unknown element name '" + name + "'");
  }
  if (node.is_object() && node.size() == 1) {
    const auto& [op, arg] = *node.items().begin();
    if (op == "add" || op == "mul") {
      if (!arg.is_array() || arg.size() < 2)
        return fail(Err::malformed_spec, "'" + op + "' takes an array of at least two operands");
      auto acc = eval_expr(s, arg[0]);
      if (!acc.ok()) return acc.failure();
      Element out = acc.value();
      for (std::size_t i = 1; i < arg.size(); ++i) {
        auto next = eval_expr(s, arg[i]);
        if (!next.ok()) return next.failure();
        out = op == "add" ? out + next.value() : out * next.value();
      }
      return out;
    }
    if (op == "neg" || op == "star" || op == "sq") {
      auto inner = eval_expr(s, arg);
      if (!inner.ok()) return inner.failure();
      if (op == "neg") return -inner.value();
      if (op == "star") return star(inner.value());
      return sq(inner.value());
    }
    return fail(Err::malformed_spec, "unknown expression operator '" + op + "'");
  }
  return fail(Err::malformed_spec, "an expression is a name or a one-operator object");
}

// Membership via the oracle on finite rings; via the engine on infinite ones
// (field matrices), where a domain negative means "not a member".
Result<bool> member_of(InverseKind kind, const Element& e) {
  if (e.ring()->is_finite()) {
    auto all = oracle::find_all(kind, e);
    if (!all.ok()) return all.failure();
    return !all.value().empty();
  }
  Result<Element> computed = [&] {
    switch (kind) {
      case InverseKind::inner: return inner_inverse(e);
      case InverseKind::group: return group_inverse(e);
      case InverseKind::one_three: return one_three_inverse(e);
      case InverseKind::one_four: return one_four_inverse(e);
      case InverseKind::core: return core_inverse(e);
      case InverseKind::dual_core: return dual_core_inverse(e);
    }
    return Result<Element>(fail(Err::internal_error, "unhandled inverse kind"));
  }();
  if (computed.ok()) return true;
  switch (computed.failure().code) {
    case Err::not_regular:
    case Err::not_group_invertible:
    case Err::not_one_three_invertible:
    case Err::not_one_four_invertible:
    case Err::not_core_invertible:
    case Err::not_dual_core_invertible:
      return false;
    default:
      return computed.failure();
  }
}

Result<bool> evaluate(const Scenario& s, const Json& payload) {
  if (!payload.is_object() || !payload.contains("check") || !payload["check"].is_string())
    return fail(Err::malformed_spec, "an assertion needs a string 'check' field");
  const std::string check = payload["check"].get<std::string>();
  if (check == "member") {
    if (!payload.contains("kind") || !payload["kind"].is_string() || !payload.contains("of"))
      return fail(Err::malformed_spec, "'member' needs 'kind' and 'of'");
    auto kind = inverse_kind_from(payload["kind"].get<std::string>());
    if (!kind)
      return fail(Err::malformed_spec,
                  "unknown inverse kind '" + payload["kind"].get<std::string>() + "'");
    auto subject = eval_expr(s, payload["of"]);
    if (!subject.ok()) return subject.failure();
    return member_of(*kind, subject.value());
  }
  if (check == "eq") {
    if (!payload.contains("lhs") || !payload.contains("rhs"))
      return fail(Err::malformed_spec, "'eq' needs 'lhs' and 'rhs'");
    auto lhs = eval_expr(s, payload["lhs"]);
    if (!lhs.ok()) return lhs.failure();
    auto rhs = eval_expr(s, payload["rhs"]);
    if (!rhs.ok()) return rhs.failure();
    return lhs.value() == rhs.value();
  }
  if (check == "in_ideal") {
    if (!payload.contains("elem") || !payload.contains("gen") || !payload.contains("side") ||
        !payload["side"].is_string())
      return fail(Err::malformed_spec, "'in_ideal' needs 'elem', 'gen' and 'side'");
    const std::string side = payload["side"].get<std::string>();
    if (side != "left" && side != "right")
      return fail(Err::malformed_spec, "'side' must be \"left\" or \"right\"");
    auto elem = eval_expr(s, payload["elem"]);
    if (!elem.ok()) return elem.failure();
    auto gen = eval_expr(s, payload["gen"]);
    if (!gen.ok()) return gen.failure();
    return s.ring
        ->in_principal_ideal(elem.value(), gen.value(),
                             side == "left" ? IdealSide::left : IdealSide::right)
        .member;
  }
  return fail(Err::malformed_spec, "unknown check '" + check + "'");
}

}  // namespace

Result<Scenario> scenario_from_json(const Json& j) {
  if (!j.is_object()) return fail(Err::malformed_spec, "a scenario is a JSON object");
  for (const char* field : {"id", "title", "ring"})
    if (!j.contains(field) || !j[field].is_string())
      return fail(Err::malformed_spec, std::string("scenario needs a string '") + field + "'");
  if (!j.contains("elements") || !j["elements"].is_object())
    return fail(Err::malformed_spec, "scenario needs an 'elements' object");
  if (!j.contains("assertions") || !j["assertions"].is_array())
    return fail(Err::malformed_spec, "scenario needs an 'assertions' array");

  auto ring = Ring::make(j["ring"].get<std::string>());
  if (!ring.ok()) return ring.failure();

  Scenario s{j["id"].get<std::string>(), j["title"].get<std::string>(), ring.value(), {}, {}};
  for (const auto& [name, body] : j["elements"].items()) {
    if (reserved_name(name))
      return fail(Err::malformed_spec, "element name '" + name + "' is reserved");
    auto e = element_from_json(s.ring, body);
    if (!e.ok()) return e.failure();
    s.elements.emplace_back(name, e.value());
  }
  for (const Json& item : j["assertions"]) {
    if (!item.is_object() || !item.contains("description") ||
        !item["description"].is_string() || !item.contains("expect") ||
        !item["expect"].is_boolean())
      return fail(Err::malformed_spec,
                  "each assertion needs a string 'description' and boolean 'expect'");
    s.assertions.push_back(
        Assertion{item["description"].get<std::string>(), item["expect"].get<bool>(), item});
  }
  return s;
}

Json scenario_to_json(const Scenario& s) {
  Json elements;
  for (const auto& [name, value] : s.elements) elements[name] = element_to_json(value);
  Json assertions = Json::array();
  for (const Assertion& a : s.assertions) assertions.push_back(a.payload);
  Json out;
  out["id"] = s.id;
  out["title"] = s.title;
  out["ring"] = s.ring->descriptor_string();
  out["elements"] = std::move(elements);
  out["assertions"] = std::move(assertions);
  return out;
}

std::vector<std::string> builtin_scenario_ids() {
  std::size_t count = 0;
  const detail::RawScenario* raw = detail::raw_scenarios(count);
  std::vector<std::string> ids;
  ids.reserve(count);
  for (std::size_t i = 0; i < count; ++i) ids.emplace_back(raw[i].id);
  return ids;
}

Result<Scenario> load_builtin(std::string_view id) {
  std::size_t count = 0;
  const detail::RawScenario* raw = detail::raw_scenarios(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (id != raw[i].id) continue;
    Json j = Json::parse(raw[i].body, nullptr, false);
    if (j.is_discarded())
      throw GinvError(Err::internal_error, "embedded scenario is not valid JSON");
    return scenario_from_json(j);
  }
  std::string known;
  for (std::size_t i = 0; i < count; ++i) {
    if (i) known += ", ";
    known += raw[i].id;
  }
  return fail(Err::unknown_scenario, "no scenario named '" + std::string(id) +
                                         "' (known: " + known + ")");
}

Result<Scenario> load_from_dir(const std::string& dir, std::string_view id) {
  const std::string path = dir + "/" + std::string(id) + ".json";
  std::ifstream in(path);
  if (!in) return fail(Err::unknown_scenario, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Json j = Json::parse(buffer.str(), nullptr, false);
  if (j.is_discarded()) return fail(Err::malformed_spec, path + " is not valid JSON");
  return scenario_from_json(j);
}

Result<ScenarioReport> run_scenario(const Scenario& s) {
  ScenarioReport report{s.id, s.ring->descriptor_string(), {}, true};
  for (const Assertion& a : s.assertions) {
    auto actual = evaluate(s, a.payload);
    if (!actual.ok()) return actual.failure();
    const bool pass = actual.value() == a.expected;
    report.outcomes.push_back(AssertionOutcome{a.description, a.expected, actual.value(), pass});
    report.pass = report.pass && pass;
  }
  return report;
}

Json report_to_json(const ScenarioReport& r) {
  Json outcomes = Json::array();
  for (const AssertionOutcome& o : r.outcomes) {
    Json item;
    item["description"] = o.description;
    item["expected"] = o.expected;
    item["actual"] = o.actual;
    item["pass"] = o.pass;
    outcomes.push_back(std::move(item));
  }
  Json out;
  out["id"] = r.id;
  out["ring"] = r.ring;
  out["assertions"] = std::move(outcomes);
  out["pass"] = r.pass;
  return out;
}

}  // namespace ginv::corpus

#pragma once

#include "ginv/json_io.hpp"
#include "ginv/ring.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Named, machine-checked scenarios: a ring, named elements, and assertions
// evaluated against the oracle (finite rings) or the engine (infinite rings).
namespace ginv::corpus {

struct Assertion {
  std::string description;
  bool expected = false;
  Json payload;  // the complete original assertion object, kept for round-trips
};

struct Scenario {
  std::string id;
  std::string title;
  RingPtr ring;
  std::vector<std::pair<std::string, Element>> elements;  // file order
  std::vector<Assertion> assertions;
};

Result<Scenario> scenario_from_json(const Json& j);
Json scenario_to_json(const Scenario& s);

std::vector<std::string> builtin_scenario_ids();
Result<Scenario> load_builtin(std::string_view id);
// Reads <dir>/<id>.json.
Result<Scenario> load_from_dir(const std::string& dir, std::string_view id);

struct AssertionOutcome {
  std::string description;
  bool expected = false;
  bool actual = false;
  bool pass = false;
};

struct ScenarioReport {
  std::string id;
  std::string ring;
  std::vector<AssertionOutcome> outcomes;
  bool pass = false;
};

Result<ScenarioReport> run_scenario(const Scenario& s);
Json report_to_json(const ScenarioReport& r);

}  // namespace ginv::corpus

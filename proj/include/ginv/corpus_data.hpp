#pragma once

#include <cstddef>

// Scenario JSON embedded at build time from the corpus directory.
namespace ginv::corpus::detail {

struct RawScenario {
  const char* id;
  const char* body;
};

const RawScenario* raw_scenarios(std::size_t& count);

}  // namespace ginv::corpus::detail

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rforest/generators.hpp"

namespace rforest {

struct SuiteConfig {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 1000;
  GenBounds bounds;
};

struct Violation {
  std::uint64_t case_index;
  std::string counterexample;  // serialized fixture, ready to replay
};

struct RunReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<Violation> violations;
  double wall_ms = 0;
};

// The eleven property suites, in the canonical order.
const std::vector<std::string>& suite_names();

// Runs the named suite against one space instance. Case i draws from an
// independent sub-seeded stream, so a report is reproducible byte for byte
// (apart from wall_ms) and mergeable across shards.
RunReport run_suite(const SuiteConfig& cfg, const BaseSpace& space);

std::string format_report(const RunReport& r);

}  // namespace rforest

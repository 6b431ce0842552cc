#pragma once

// Property suites: each draws seeded random instances, checks one stated
// property on each, and records failing instances in the JSON forms of io.hpp
// so they can be replayed on their own.

#include "abext/io.hpp"
#include "abext/sampling.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace abext {

struct SuiteConfig {
  std::uint64_t seed = 42;
  int trials = 100;
  SampleBounds bounds;
  // Inverts each suite's predicate; every suite should then report failures.
  bool mutate = false;
};

struct SuiteFailure {
  Json input;
  std::string reason;
};

struct SuiteReport {
  std::string name;
  std::string label;
  std::uint64_t seed = 0;
  int trials = 0;
  bool mutated = false;
  std::vector<SuiteFailure> failures;
  double elapsed_seconds = 0;

  bool passed() const { return failures.empty(); }
  Json to_json() const;
};

const std::vector<std::string> &suite_names();
std::string suite_label(const std::string &name);

// Throws InvalidInput for an unknown suite.
SuiteReport run_suite(const std::string &name, const SuiteConfig &config = {});

// Checks one serialized instance. Returns the failure reason, or nullopt when
// the property holds (or, with mutate, when it fails).
std::optional<std::string> replay_case(const std::string &name, const Json &input,
                                       bool mutate = false);

// Finite groups with orders in {2, 3, 4, 6, 8}, one per isomorphism type.
std::vector<FgGroup> small_finite_corpus();

} // namespace abext

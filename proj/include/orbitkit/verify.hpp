#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbitkit/fourier_harness.hpp"
#include "orbitkit/json_io.hpp"

namespace orbitkit {

struct VerifyConfig {
  std::vector<std::string> suites;  // "all" expands to every suite
  std::string algebra = "all";      // prop31 / lhat: "affR", "affC" or "all"
  std::string mutation = "none";    // "none", "flip-lambda", "drop-half"
  std::uint64_t seed = 42;
  int trials = 100;
  GridSpec grid;
  int series_order = 96;
  std::vector<int> fourier_ids;               // subset of {1, 2, 3}; empty runs all
  std::vector<std::string> conjugation_gens;  // subset of {"X", "Y"}; empty runs both
};

/// Suite names in run order.
const std::vector<std::string>& known_suites();

struct VerifyReport {
  Json json;
  bool pass = false;
};

/// Runs the selected suites in a fixed order. Each failing check adds an entry
/// naming the module, the identity being checked and its residual.
/// Throws InvalidInput for an empty selection or an unknown suite/mutation.
VerifyReport run_verify(const VerifyConfig& config);

}  // namespace orbitkit

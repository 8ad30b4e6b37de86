#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lensfill::cli {

struct SuiteResult {
  std::string name;
  long checks = 0;
  std::string scope;
  std::optional<std::string> counterexample;  ///< first failure, if any
};

/// catalan, duality, gamma, rotation, lattice, mcduff, corollary-a,
/// corollary-c, uniqueness.
const std::vector<std::string>& suite_names();

/// Runs one suite. `pmax` overrides the default range of suites that sweep
/// over p. Throws InputError(InvalidInput) for an unknown name.
SuiteResult run_suite(const std::string& name, std::optional<long> pmax = std::nullopt);

}  // namespace lensfill::cli

#ifndef CHARTWO_SUITES_HPP
#define CHARTWO_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chartwo/report.hpp"

namespace chartwo {

struct SuiteOptions {
  std::optional<int> n;  // restrict the dimension sweep of polar/sym2
  std::optional<int> k;  // restrict the field degree sweep
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Suites runnable from the driver: polar, sym2, lie, parabolic, quotient,
/// dickson, fiber, descent, all. Throws std::invalid_argument on an unknown
/// name. Output is deterministic for fixed options, independent of threads.
void run_suite(const std::string& name, const SuiteOptions& options, Reporter& reporter);

const std::vector<std::string>& suite_names();

}  // namespace chartwo

#endif  // CHARTWO_SUITES_HPP

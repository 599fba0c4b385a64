#pragma once

// End-to-end verification battery: each item runs one property at a fixed
// desk scale and reports pass/fail with a short deterministic detail line.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hindlab/report.hpp"

namespace hindlab {

struct SuiteConfig {
  std::uint64_t seed = 0x5eed'2024;
  std::int64_t random_p = 46;          ///< random P+ besides the four fixed ones
  std::int64_t p_window = 2000;        ///< P+ lives on [1, p_window]
  std::int64_t nuv_max_len = 5;
  std::int64_t mixing_max_len = 4;
  std::int64_t squares_bound = 100'000;
  std::int64_t family_trials = 200;
  std::int64_t duality_trials = 500;
  std::int64_t block_trials = 100;
  std::int64_t block_cross_checks = 50;
};

struct SuiteItem {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;  ///< wall time; never part of structured output
};

struct SuiteResult {
  std::vector<SuiteItem> items;
  [[nodiscard]] bool all_pass() const noexcept;
};

/// The spacing sets used by the return-set items: random densities 0.1..0.9,
/// then squares complement, evens, alternating blocks and the full set.
[[nodiscard]] std::vector<WindowedSet> suite_spacing_sets(const SuiteConfig& config);

/// Runs items 1..9; `on_item` sees each item as soon as it finishes.
[[nodiscard]] SuiteResult run_paper_suite(const SuiteConfig& config,
                                          const std::function<void(const SuiteItem&)>& on_item = {});

[[nodiscard]] std::string render(const SuiteResult& r, Format f);

}  // namespace hindlab

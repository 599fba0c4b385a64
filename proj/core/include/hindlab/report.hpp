#pragma once

// Classification of a single set and the text/structured renderings shared by
// the command-line front end. Structured output is JSON with sorted keys and
// no timing data, so equal inputs give byte-identical output.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hindlab/constructions.hpp"
#include "hindlab/covers.hpp"
#include "hindlab/families.hpp"
#include "hindlab/intset.hpp"
#include "hindlab/spacing.hpp"

namespace hindlab {

enum class Format { text, structured };

struct ClassificationReport {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t count = 0;
  ScaleParams scales;
  bool thick = false;
  bool syndetic = false;
  bool piecewise_syndetic = false;
  bool thickly_syndetic = false;
  DensityProfile density;
  GapStatistics gaps;
  std::int64_t effective_bound = 0;  ///< search bound after clipping to the window; 0 when skipped
  std::optional<std::vector<std::int64_t>> delta_witness;
  std::optional<std::vector<std::int64_t>> ip_witness;
  /// Unset when the set has fewer than two members.
  std::optional<bool> progressive_gaps;
  std::optional<ChunkDecomposition> chunks;
};

/// Throws window_too_small when the window is shorter than ps_L or the
/// search bound.
[[nodiscard]] ClassificationReport classify(const WindowedSet& s, const ScaleParams& scales);

[[nodiscard]] std::string render(const ClassificationReport& r, Format f);
[[nodiscard]] std::string render(const EvidenceReport& r, Format f);
[[nodiscard]] std::string render(const ComplexityProfile& p, Format f);
[[nodiscard]] std::string render_return_set(const WindowedSet& s, const Word& u, const Word& v, Format f);

struct NuvSummary {
  std::int64_t pairs = 0;
  std::int64_t outside_mismatches = 0;
  std::int64_t containment_violations = 0;
  std::int64_t max_c_size = 0;
  std::vector<std::string> failures;  ///< "U V n" for each failing pair
  [[nodiscard]] bool ok() const noexcept { return outside_mismatches == 0 && containment_violations == 0; }
};

/// nuv_check over every pair of language words up to max_word_len.
[[nodiscard]] NuvSummary nuv_check_all(const SpacingShift& p, std::int64_t max_word_len);
[[nodiscard]] std::string render(const NuvSummary& s, Format f);

[[nodiscard]] std::string render(const ConstructionResult& r, Format f);

[[nodiscard]] std::string ratio_string(const Ratio& r);

}  // namespace hindlab

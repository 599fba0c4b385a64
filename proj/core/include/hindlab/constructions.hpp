#pragma once

// Generators for the witness sets: squares and their complement, rapidly
// growing sequences, unions of shifted difference sets with progressive gaps,
// and alternating block sets that are thick on both sides. Every generator
// can be driven by a ConstructionSpec, which also records the checks the
// output is expected to pass.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hindlab/intset.hpp"

namespace hindlab {

/// {n^2 : n >= 1} on [lo, hi], or its complement in the positive integers.
[[nodiscard]] WindowedSet squares_family(std::int64_t lo, std::int64_t hi, bool complement);

enum class GrowthRule {
  minimal,     ///< b_n = 4 * sum(b_i) + 1
  index_sum,   ///< b_n = 4 * sum(b_i + i) + 1
};

/// b_1 = b1 and b_n from the rule. Throws overflow past 64 bits.
[[nodiscard]] std::vector<std::int64_t> rapid_growth_B(std::int64_t n_terms, std::int64_t b1,
                                                       GrowthRule rule = GrowthRule::minimal);

/// {s_j - s_i : i < j} for a strictly increasing sequence.
[[nodiscard]] WindowedSet delta_of(std::span<const std::int64_t> seq);
/// Delta(seq) - Delta(seq), zero and negatives included.
[[nodiscard]] WindowedSet delta_minus_delta_of(std::span<const std::int64_t> seq);

enum class IndexOrder {
  weak,    ///< r1 > r2 >= r3 > r4 >= r5 > r6 >= r7 > r8
  strict,  ///< r1 > r2 > ... > r8
};

struct PdelReport {
  std::int64_t pairs_checked = 0;
  std::int64_t counterexamples = 0;
  bool exhaustive = true;
  /// (f1, f2) of the first pair whose sum lands in Delta - Delta.
  std::optional<std::pair<std::int64_t, std::int64_t>> first_counterexample;
};

/// Enumerates f1 = (b_r1 - b_r2) - (b_r3 - b_r4) and f2 = (b_r5 - b_r6) - (b_r7 - b_r8),
/// both positive and in (Delta - Delta) minus Delta, with indices in the given
/// order, and checks that f1 + f2 is not in Delta - Delta. Stops after sample_cap pairs.
[[nodiscard]] PdelReport pdel_obstruction_check(std::span<const std::int64_t> b, std::int64_t sample_cap,
                                                IndexOrder order = IndexOrder::weak);

struct ProgressiveSchedule {
  std::vector<std::vector<std::int64_t>> seeds;  ///< S_k
  std::vector<std::int64_t> offsets;             ///< r_k, strictly increasing
};

/// S_k = (1, 5 * 10^k), r_k = 10^(2k + 2), k = 0..chunk_count-1 (chunk_count <= 4).
[[nodiscard]] ProgressiveSchedule default_progressive_schedule(std::int64_t chunk_count);

/// Union of Delta(S_k) + r_k. Throws schedule_too_tight when consecutive
/// pieces overlap or the union fails has_progressive_gaps.
[[nodiscard]] WindowedSet progressive_gap_union(const ProgressiveSchedule& schedule);

/// Block length as a function of k = 1, 2, ...
struct BlockSchedule {
  enum class Kind { linear, constant, square } kind = Kind::linear;
  std::int64_t c = 1;

  [[nodiscard]] std::int64_t operator()(std::int64_t k) const;
  /// "linear", "square" or "const:c".
  static BlockSchedule parse(std::string_view text);
  [[nodiscard]] std::string to_string() const;
};

/// 1^s(1) 0^s(1) 1^s(2) 0^s(2) ... from lo, cut at hi.
[[nodiscard]] WindowedSet alternating_thick(std::int64_t lo, std::int64_t hi, const BlockSchedule& schedule);

// -- specs -----------------------------------------------------------------

enum class ConstructionKind { squares, rapid_growth, progressive_union, alternating_thick };

[[nodiscard]] std::string_view to_string(ConstructionKind k) noexcept;
[[nodiscard]] ConstructionKind parse_construction_kind(std::string_view text);

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::squares;
  std::map<std::string, std::string> params;
  std::optional<std::pair<std::int64_t, std::int64_t>> window;

  /// "kind key=value ... [window=lo:hi]" on one line; parse(serialize()) == *this.
  [[nodiscard]] std::string serialize() const;
  static ConstructionSpec parse(std::string_view text);
  /// Throws invalid_argument on unknown or malformed parameters.
  void validate() const;

  friend bool operator==(const ConstructionSpec&, const ConstructionSpec&) = default;
};

struct ConstructionResult {
  WindowedSet set;
  std::vector<std::string> header;                    ///< metadata lines
  std::vector<std::pair<std::string, bool>> checks;   ///< post-condition verdicts
  [[nodiscard]] bool all_pass() const noexcept;
};

[[nodiscard]] ConstructionResult build(const ConstructionSpec& spec);

}  // namespace hindlab

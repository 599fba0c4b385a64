#pragma once

// Clopen covers of a spacing shift by unions of cylinders of one depth, their
// joins along a sequence of times, and the exact minimal subcover size.
//
// A word of depth d is stored as a code: bit i holds the symbol at position i.
// An element is the union of the cylinders [w] (based at 0) for its words.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hindlab/spacing.hpp"

namespace hindlab {

using WordCode = std::uint64_t;

/// Deepest cover the code representation supports.
inline constexpr int kMaxCoverDepth = 62;
inline constexpr std::size_t kDefaultSolverCap = 24;
inline constexpr std::size_t kDefaultRefineBudget = 20'000'000;

struct ClopenCover {
  int depth = 1;
  /// Each element is a sorted, duplicate-free list of word codes.
  std::vector<std::vector<WordCode>> elements;

  /// {X minus [1], X minus [0]} at depth 1.
  static ClopenCover canonical_two_cover();
  /// One element per language word of the given depth.
  static ClopenCover partition(const SpacingShift& p, int depth);

  /// One element per line, words joined by '+'; '#' starts a comment.
  static ClopenCover parse(std::string_view text);
  [[nodiscard]] std::string serialize() const;

  /// Throws not_a_cover when some depth-d language word is in no element.
  void validate(const SpacingShift& p) const;
  /// No element contains every language word of its depth (none is dense).
  [[nodiscard]] bool nontrivial(const SpacingShift& p) const;
};

[[nodiscard]] std::string word_string(WordCode code, int depth);
[[nodiscard]] WordCode word_code(std::string_view bits);

/// All language words of exactly this length, ascending by code.
[[nodiscard]] std::vector<WordCode> language_codes(const SpacingShift& p, int length,
                                                   std::size_t budget = kDefaultRefineBudget);

/// Join of T^{-a_i} cover over the times a (all >= 0), as a cover of depth
/// depth + max(a). Empty intersections are dropped; equal ones kept once.
[[nodiscard]] ClopenCover refine_along(const SpacingShift& p, const ClopenCover& cover,
                                       std::span<const std::int64_t> times,
                                       std::size_t budget = kDefaultRefineBudget);

/// Exact least number of elements covering every language word of the cover
/// depth. Dominated and forced elements are removed first; the remaining
/// kernel goes to branch and bound and must have at most `cap` elements.
[[nodiscard]] std::int64_t min_subcover(const SpacingShift& p, const ClopenCover& cover,
                                        std::size_t cap = kDefaultSolverCap);

enum class Growth { undecided, bounded, growing };
[[nodiscard]] std::string_view to_string(Growth g) noexcept;

struct ComplexityProfile {
  std::vector<std::int64_t> values;  ///< values[n-1] = N(join over the first n times)
  bool strictly_increasing = false;
  /// bounded when the last two values agree, growing when the last step grew.
  Growth verdict = Growth::undecided;
};

/// Profile for n = 1..n_max. Times are shifted so the first is 0, which does
/// not change the counts on the invertible shift.
[[nodiscard]] ComplexityProfile complexity_profile(const SpacingShift& p, const ClopenCover& cover,
                                                   std::span<const std::int64_t> times, std::int64_t n_max,
                                                   std::size_t cap = kDefaultSolverCap,
                                                   std::size_t budget = kDefaultRefineBudget);

/// Sorted nonnegative members of s.
[[nodiscard]] std::vector<std::int64_t> times_from_set(const WindowedSet& s);

}  // namespace hindlab

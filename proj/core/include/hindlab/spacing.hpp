#pragma once

// Spacing shifts Sigma_P: bi-infinite 0/1 sequences whose 1s sit at pairwise
// distances in P = P+ u -P+. The shift is stored through P+ on [1, N]; every
// query that would need a distance beyond N throws Errc::window_exceeded.
//
// Cylinders are based words. For return-time sets the pair (U, V) is placed
// with V starting at V.base and U starting at U.base + n; n belongs to
// N(U, V) when the two placements agree symbol by symbol on their overlap
// and the merged pattern is a legal word. A legal finite pattern extends to
// a point of Sigma_P by filling with zeros, so this is exact.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hindlab/intset.hpp"

namespace hindlab {

class Word {
 public:
  /// Symbols must be 0 or 1 and the word nonempty.
  explicit Word(std::vector<std::uint8_t> symbols, std::int64_t base = 0);
  /// Parses a binary string such as "1001".
  static Word parse(std::string_view bits, std::int64_t base = 0);

  [[nodiscard]] std::int64_t size() const noexcept { return static_cast<std::int64_t>(symbols_.size()); }
  [[nodiscard]] std::int64_t base() const noexcept { return base_; }
  [[nodiscard]] std::uint8_t at(std::int64_t i) const { return symbols_.at(static_cast<std::size_t>(i)); }
  [[nodiscard]] const std::vector<std::uint8_t>& symbols() const noexcept { return symbols_; }
  /// Offsets (from the word start) of the 1 symbols.
  [[nodiscard]] std::vector<std::int64_t> ones() const;
  [[nodiscard]] bool has_one() const noexcept;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<std::uint8_t> symbols_;
  std::int64_t base_;
};

class SpacingShift {
 public:
  /// Members of `p_plus` below 1 are dropped; the stored window is [1, hi].
  explicit SpacingShift(const WindowedSet& p_plus);
  /// Full shift on distances up to n (P+ = [1, n]).
  static SpacingShift full(std::int64_t n);

  [[nodiscard]] const WindowedSet& p_plus() const noexcept { return p_plus_; }
  [[nodiscard]] std::int64_t max_distance() const noexcept { return p_plus_.hi(); }

  /// Distance d >= 0 between two 1s is allowed (d == 0 always is).
  [[nodiscard]] bool allows(std::int64_t d) const;
  /// The symmetric set P restricted to [lo, hi]; positions beyond +-N are absent.
  [[nodiscard]] WindowedSet p(std::int64_t lo, std::int64_t hi) const;

 private:
  WindowedSet p_plus_;
  WindowedSet p_full_;  // P on [-N, N]
};

[[nodiscard]] bool word_in_language(const SpacingShift& p, const Word& w);

/// Every language word of length 1..max_len (base 0), ordered by length and
/// then lexicographically. `ones_only` drops the all-zero words.
[[nodiscard]] std::vector<Word> language_words(const SpacingShift& p, std::int64_t max_len,
                                               bool ones_only = false);

struct Window {
  std::int64_t lo;
  std::int64_t hi;
};

/// Largest window of n on which N(U, V) is computable from P+.
[[nodiscard]] Window return_window(const SpacingShift& p, const Word& u, const Word& v);

/// N(U, V) on [lo, hi], one placement at a time: overlap symbols must agree
/// and every distance between a 1 of U and a 1 of V must lie in P or be 0.
/// U and V must be language words, so distances inside each are legal already.
[[nodiscard]] WindowedSet return_set(const SpacingShift& p, const Word& u, const Word& v,
                                     std::int64_t lo, std::int64_t hi);

/// {n in [lo, hi] : n + k in P for every k in shifts}, i.e. the intersection of P - k.
[[nodiscard]] WindowedSet shift_intersection(const SpacingShift& p, std::span<const std::int64_t> shifts,
                                             std::int64_t lo, std::int64_t hi);

struct NuvDecomposition {
  bool no_ones = false;  ///< U or V has no 1 (the formula part is then everything)
  WindowedSet a;         ///< placements with U entirely right of V
  WindowedSet b;         ///< placements with U entirely left of V
  std::int64_t c_bound;  ///< |U| + |V|; every other placement has |n| below it
  /// Differences u - v between 1-positions of U and V; on the A and B
  /// regions N(U, V) is exactly the intersection of P - k over these.
  std::vector<std::int64_t> cross_shifts;
  /// cross_shifts plus the differences between 1s of either word and every
  /// position of the other. The intersection of P - k over these lies in
  /// N(U, V) for every n, including overlapping placements.
  std::vector<std::int64_t> shifts;
};

[[nodiscard]] NuvDecomposition nuv_decomposition(const SpacingShift& p, const Word& u, const Word& v);

struct NuvCheck {
  std::int64_t outside_mismatches = 0;     ///< |n| > c_bound where A u B != N(U, V)
  std::int64_t containment_violations = 0; ///< n in the shift intersection but not in N(U, V)
  std::int64_t c_size = 0;                 ///< |N(U, V) minus (A u B)|
  std::optional<std::int64_t> first_bad;
  [[nodiscard]] bool ok() const noexcept { return outside_mismatches == 0 && containment_violations == 0; }
};

/// Compares the oracle against the decomposition on the full return window.
[[nodiscard]] NuvCheck nuv_check(const SpacingShift& p, const Word& u, const Word& v);

// -- transitivity / mixing evidence ----------------------------------------

enum class DetectorKind { nonempty, thick, syndetic, piecewise_syndetic, thickly_syndetic, cofinite };

struct Verdict {
  bool pass = false;
  std::optional<std::int64_t> witness;
};

/// Named family predicate with its scales, e.g. "thick:L=20", "cofinite:n0=30",
/// "ps:g=5,L=50", "nonempty".
struct Detector {
  DetectorKind kind = DetectorKind::nonempty;
  std::int64_t L = 0;
  std::int64_t g = 0;
  std::int64_t n0 = 0;

  static Detector parse(std::string_view spec);
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] Verdict evaluate(const WindowedSet& s) const;
};

struct PairEvidence {
  Word u;
  Word v;
  Verdict transitive;  ///< detector on N(U, V)
  Verdict mixing;      ///< detector on N(U, V) cap N(U, U)
};

struct EvidenceReport {
  Detector detector;
  std::int64_t max_word_len = 0;
  Window window{0, 0};
  std::vector<PairEvidence> pairs;

  [[nodiscard]] std::size_t transitive_failures() const noexcept;
  [[nodiscard]] std::size_t mixing_failures() const noexcept;
  [[nodiscard]] bool all_pass() const noexcept { return transitive_failures() == 0 && mixing_failures() == 0; }
  /// One line per (U, V) pair plus a summary; stable across runs.
  [[nodiscard]] std::string to_text() const;
};

inline constexpr std::int64_t kDefaultMaxWordLen = 12;

/// Evaluates the detector on N(U, V) and N(U, V) cap N(U, U) for every pair of
/// language words up to max_word_len. The default window is the largest one
/// computable for that word length.
[[nodiscard]] EvidenceReport mixing_evidence(const SpacingShift& p, const Detector& detector,
                                             std::int64_t max_word_len,
                                             std::optional<Window> window = std::nullopt,
                                             bool ones_only = false);

/// Same, for several detectors over one pass of return-set computations.
[[nodiscard]] std::vector<EvidenceReport> mixing_evidence(const SpacingShift& p,
                                                          std::span<const Detector> detectors,
                                                          std::int64_t max_word_len,
                                                          std::optional<Window> window = std::nullopt,
                                                          bool ones_only = false);

}  // namespace hindlab

#pragma once

// Finite-window integer sets.
//
// A WindowedSet is the truncation of a subset of Z to an inclusive window
// [lo, hi], stored as a dense bit array (bit i <-> integer lo + i). Every
// detector and construction in the library consumes and produces these.
// Values are immutable once built; all operations are pure.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

namespace hindlab {

using Ratio = boost::rational<std::int64_t>;

/// Largest window (in bits) the library will allocate.
inline constexpr std::int64_t kMaxWindowSize = std::int64_t{1} << 32;

/// Default cap on the number of generators accepted by finite_sums.
inline constexpr std::size_t kDefaultArityCap = 24;

class WindowedSet {
 public:
  using word_type = std::uint64_t;
  static constexpr int kWordBits = 64;

  /// Empty set on [lo, hi].
  WindowedSet(std::int64_t lo, std::int64_t hi);

  static WindowedSet full(std::int64_t lo, std::int64_t hi);
  static WindowedSet from_members(std::int64_t lo, std::int64_t hi,
                                  std::span<const std::int64_t> members);
  static WindowedSet from_members(std::int64_t lo, std::int64_t hi,
                                  std::initializer_list<std::int64_t> members);

  /// Builds {n in [lo, hi] : pred(n)}.
  template <class Pred>
  static WindowedSet from_predicate(std::int64_t lo, std::int64_t hi, Pred&& pred) {
    WindowedSet s(lo, hi);
    for (std::int64_t n = lo; n <= hi; ++n) {
      if (pred(n)) s.set_bit(static_cast<std::uint64_t>(n - lo));
    }
    return s;
  }

  /// Adopts a raw bit array (bit i <-> lo + i). Bits past the window are cleared.
  static WindowedSet from_words(std::int64_t lo, std::int64_t hi, std::vector<word_type> words);

  [[nodiscard]] std::int64_t lo() const noexcept { return lo_; }
  [[nodiscard]] std::int64_t hi() const noexcept { return hi_; }
  [[nodiscard]] std::int64_t size() const noexcept { return hi_ - lo_ + 1; }
  [[nodiscard]] bool symmetric() const noexcept { return symmetric_; }
  [[nodiscard]] std::span<const word_type> words() const noexcept { return words_; }

  /// Membership; false outside the window.
  [[nodiscard]] bool contains(std::int64_t n) const noexcept;
  [[nodiscard]] std::int64_t count() const noexcept;
  [[nodiscard]] bool empty() const noexcept;

  [[nodiscard]] std::vector<std::int64_t> members() const;
  [[nodiscard]] std::optional<std::int64_t> first() const noexcept;
  [[nodiscard]] std::optional<std::int64_t> last() const noexcept;
  /// Smallest member >= n, if any.
  [[nodiscard]] std::optional<std::int64_t> next_member(std::int64_t n) const noexcept;

  template <class F>
  void for_each_member(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word_type bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        f(lo_ + static_cast<std::int64_t>(w) * kWordBits + b);
        bits &= bits - 1;
      }
    }
  }

  /// n in out <=> n - k in *this; window [lo+k, hi+k].
  [[nodiscard]] WindowedSet shifted(std::int64_t k) const;
  /// Same members seen through a new window; positions outside the old one are absent.
  [[nodiscard]] WindowedSet restricted(std::int64_t lo, std::int64_t hi) const;
  [[nodiscard]] WindowedSet complement() const;
  /// n in out <=> -n in *this; window [-hi, -lo].
  [[nodiscard]] WindowedSet reflected() const;
  /// Returns a copy carrying the symmetric flag. Throws invalid_argument if the
  /// members are not symmetric on the largest [-m, m] inside the window.
  [[nodiscard]] WindowedSet marked_symmetric() const;
  [[nodiscard]] bool is_symmetric_on_window() const noexcept;

  /// 64 membership bits starting at integer n (bit j <-> n + j), zero outside the window.
  [[nodiscard]] word_type bits_at(std::int64_t n) const noexcept;
  /// Bit array for positions [lo, hi] of this set, zero outside its window.
  [[nodiscard]] std::vector<word_type> extract(std::int64_t lo, std::int64_t hi) const;

  /// Same window and same members (the symmetric flag is metadata).
  friend bool operator==(const WindowedSet& a, const WindowedSet& b) noexcept {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.words_ == b.words_;
  }

 private:
  void set_bit(std::uint64_t i) noexcept { words_[i / kWordBits] |= word_type{1} << (i % kWordBits); }
  void clear_tail() noexcept;

  std::int64_t lo_;
  std::int64_t hi_;
  std::vector<word_type> words_;
  bool symmetric_ = false;
};

// -- boolean algebra -------------------------------------------------------
// Binary operations work on the intersection of the two windows and throw
// Errc::disjoint_windows when it is empty.

[[nodiscard]] WindowedSet intersect(const WindowedSet& a, const WindowedSet& b);
[[nodiscard]] WindowedSet unite(const WindowedSet& a, const WindowedSet& b);
[[nodiscard]] bool is_subset(const WindowedSet& a, const WindowedSet& b);

enum class BoolOp { complement, intersect, unite, subset_of };
using BoolResult = std::variant<WindowedSet, bool>;
/// Single entry point over the four operations; `t` is required for binary ops.
[[nodiscard]] BoolResult boolean(BoolOp op, const WindowedSet& s, const WindowedSet* t = nullptr);

// -- arithmetic ------------------------------------------------------------

/// Positive differences {a - b : a, b in S, a > b} on window [1, max(1, hi - lo)].
[[nodiscard]] WindowedSet difference_set(const WindowedSet& s);

/// Full difference set A - B = {a - b} on window [A.lo - B.hi, A.hi - B.lo].
[[nodiscard]] WindowedSet minus_set(const WindowedSet& a, const WindowedSet& b);

/// S union -S on [-m, m], m = max(|lo|, |hi|), flagged symmetric.
[[nodiscard]] WindowedSet symmetric_closure(const WindowedSet& s);

/// FS(A): all sums over nonempty index subsets, on window [min A, sum A].
[[nodiscard]] WindowedSet finite_sums(std::span<const std::int64_t> generators,
                                      std::size_t arity_cap = kDefaultArityCap);

// -- statistics ------------------------------------------------------------

struct DensityProfile {
  std::vector<std::int64_t> window_lengths;
  std::vector<Ratio> max_density;
  std::vector<Ratio> min_density;
  Ratio upper_estimate;
  Ratio lower_estimate;
};

/// Exact max/min of |S cap I| / w over every length-w subinterval I of the window.
[[nodiscard]] DensityProfile density_profile(const WindowedSet& s,
                                             std::span<const std::int64_t> lengths);

struct GapStatistics {
  std::int64_t max_gap = 0;       ///< largest interior gap; window size when S is empty
  std::int64_t longest_run = 0;   ///< longest block of consecutive members
  std::vector<std::int64_t> gaps; ///< interior gaps, sorted ascending
  std::int64_t leading_gap = 0;   ///< first - (lo - 1); window size + 1 when empty
  std::int64_t trailing_gap = 0;  ///< (hi + 1) - last; window size + 1 when empty
};

/// Consecutive members have gap 1. Boundary gaps are reported separately.
[[nodiscard]] GapStatistics gap_statistics(const WindowedSet& s);

/// Length of the longest block of consecutive members.
[[nodiscard]] std::int64_t longest_run(const WindowedSet& s) noexcept;

}  // namespace hindlab

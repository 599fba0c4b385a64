#pragma once

// Scale-parameterised detectors for the large-set families (thick, syndetic,
// piecewise syndetic, thickly syndetic, Delta, IP, progressive gaps) and the
// family operators F_+, F_bullet, tau F and the block family on finitely
// generated families.
//
// Every infinite notion is truncated to the window of its argument and to
// explicit scales, so a verdict is always "at scale". Gap convention used by
// all run-based detectors: the integers lo-1 and hi+1 act as members, so a
// set is syndetic at g when no g consecutive window positions are all absent.
// This makes is_syndetic_at(S, g) == !is_thick_at(S.complement(), g) exact.

#include <cstdint>
#include <optional>
#include <vector>

#include "hindlab/intset.hpp"

namespace hindlab {

struct ScaleParams {
  std::int64_t thick_L = 10;
  std::int64_t syndetic_g = 10;
  std::int64_t ps_L = 200;
  std::int64_t delta_order = 3;
  std::int64_t ip_arity = 2;
  std::int64_t search_bound = 100;

  /// Throws invalid_argument unless all scales are positive and search_bound fits the window.
  void validate(std::int64_t window_size) const;
};

// -- run-based detectors ---------------------------------------------------

/// S contains L consecutive integers. False when L exceeds the window.
[[nodiscard]] bool is_thick_at(const WindowedSet& s, std::int64_t L);
/// No g consecutive window positions are all outside S.
[[nodiscard]] bool is_syndetic_at(const WindowedSet& s, std::int64_t g);
/// Some length-L subinterval of the window has S syndetic at g inside it.
[[nodiscard]] bool is_piecewise_syndetic_at(const WindowedSet& s, std::int64_t g, std::int64_t L);
/// Windowed dual: the complement is not piecewise syndetic at (g, L).
[[nodiscard]] bool is_thickly_syndetic_at(const WindowedSet& s, std::int64_t g, std::int64_t L);
/// S contains every window position outside [-n0, n0].
[[nodiscard]] bool is_cofinite_at(const WindowedSet& s, std::int64_t n0);

// -- structured subsets ----------------------------------------------------

/// Lexicographically least s_1 < ... < s_m <= bound (s_1 >= 1) whose pairwise
/// differences all lie in S, or nullopt when none exists up to bound.
[[nodiscard]] std::optional<std::vector<std::int64_t>> find_delta_subset(const WindowedSet& s,
                                                                         std::int64_t m,
                                                                         std::int64_t bound);

/// Lexicographically least nondecreasing positive a_1..a_k with FS(a) in S and
/// sum(a) <= bound.
[[nodiscard]] std::optional<std::vector<std::int64_t>> find_ip_subset(const WindowedSet& s,
                                                                      std::int64_t k,
                                                                      std::int64_t bound);

/// Like find_delta_subset, but every positive element of Delta(s) - Delta(s)
/// must lie in S (an order-m surrogate for a (Delta-Delta)-set).
[[nodiscard]] std::optional<std::vector<std::int64_t>> find_delta_delta_subset(
    const WindowedSet& s, std::int64_t m, std::int64_t bound);

// -- progressive gaps ------------------------------------------------------

struct ChunkDecomposition {
  std::vector<std::vector<std::int64_t>> chunks;
  /// separators[i] = first(chunks[i+1]) - last(chunks[i]); strictly increasing.
  std::vector<std::int64_t> separators;
};

/// True if each chunk has every gap larger than the distance to its right end
/// and the separators strictly increase.
[[nodiscard]] bool is_progressive_decomposition(const ChunkDecomposition& d);

/// Decomposes the members of S (|S| >= 2, else Errc::too_small) into chunks
/// with progressive gaps. Existence is decided exactly; among valid
/// decompositions the one returned is built right to left, each chunk chosen
/// to make its left separator as large as possible.
[[nodiscard]] std::optional<ChunkDecomposition> has_progressive_gaps(const WindowedSet& s);

// -- generated families ----------------------------------------------------

/// Hereditary-upward family presented by generators over one common window:
/// S is a member iff some generator is contained in S on that window.
class GeneratedFamily {
 public:
  GeneratedFamily(std::vector<WindowedSet> generators, std::int64_t shift_budget,
                  std::int64_t arity_cap);

  [[nodiscard]] const std::vector<WindowedSet>& generators() const noexcept { return generators_; }
  [[nodiscard]] std::int64_t lo() const noexcept { return generators_.front().lo(); }
  [[nodiscard]] std::int64_t hi() const noexcept { return generators_.front().hi(); }
  [[nodiscard]] std::int64_t shift_budget() const noexcept { return budget_; }
  [[nodiscard]] std::int64_t arity_cap() const noexcept { return arity_cap_; }

  /// Members of S outside its own window count as absent.
  [[nodiscard]] bool contains(const WindowedSet& s) const;

 private:
  std::vector<WindowedSet> generators_;
  std::int64_t budget_;
  std::int64_t arity_cap_;
};

/// Family generated by every shift g + k (|k| <= K), on [lo + K, hi - K].
[[nodiscard]] GeneratedFamily family_plus(const GeneratedFamily& f);

/// For every |k| <= K some generator g has m + k in S for all m in g on the
/// shrunken window [lo + K, hi - K].
[[nodiscard]] bool family_bullet_member(const GeneratedFamily& f, const WindowedSet& s);

/// For every nonempty {k_1..k_n} in [-K, K] with n <= arity cap, the set
/// (S - k_1) cap ... cap (S - k_n) contains a generator on the shrunken window.
[[nodiscard]] bool tau_member(const GeneratedFamily& f, const WindowedSet& s);

/// Every pairwise generator intersection contains a generator.
[[nodiscard]] bool is_filter(const GeneratedFamily& f);

/// Every W in F' with |W| <= count_cap and max W - min W <= span_cap has a
/// translate m + W inside F.
[[nodiscard]] bool block_embeds(const WindowedSet& f, const WindowedSet& f_prime,
                                std::int64_t span_cap, std::int64_t count_cap);

}  // namespace hindlab

#include "hindlab/families.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <set>

#include "hindlab/error.hpp"

namespace hindlab {

namespace {

using Bits = std::vector<std::uint64_t>;
constexpr int kBits = 64;

std::size_t words_for(std::int64_t n) { return static_cast<std::size_t>((n + kBits - 1) / kBits); }

std::int64_t popcount(const Bits& b) {
  std::int64_t c = 0;
  for (const auto w : b) c += std::popcount(w);
  return c;
}

bool is_zero(const Bits& b) {
  return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
}

bool contained(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

// Candidate masks over [1, bound]: bit i <-> integer i + 1.
class CandidateSpace {
 public:
  explicit CandidateSpace(std::int64_t bound) : bound_(bound), nwords_(words_for(bound)) {}

  [[nodiscard]] std::size_t words() const noexcept { return nwords_; }

  // x in [1, bound] with x - t in S.
  [[nodiscard]] Bits translate(const WindowedSet& s, std::int64_t t) const {
    Bits out(nwords_);
    for (std::size_t w = 0; w < nwords_; ++w) out[w] = s.bits_at(1 - t + static_cast<std::int64_t>(w) * kBits);
    trim(out);
    return out;
  }

  // Keeps only x in [from, to].
  void clamp(Bits& b, std::int64_t from, std::int64_t to) const {
    from = std::max<std::int64_t>(from, 1);
    to = std::min(to, bound_);
    for (std::size_t w = 0; w < nwords_; ++w) {
      const std::int64_t base = 1 + static_cast<std::int64_t>(w) * kBits;
      std::uint64_t keep = ~std::uint64_t{0};
      if (from > base) keep = from - base >= kBits ? 0 : keep & (~std::uint64_t{0} << (from - base));
      if (to < base + kBits - 1) keep = to < base ? 0 : keep & (~std::uint64_t{0} >> (kBits - 1 - (to - base)));
      b[w] &= keep;
    }
  }

  template <class F>
  static void for_each(const Bits& b, F&& f) {
    for (std::size_t w = 0; w < b.size(); ++w) {
      std::uint64_t bits = b[w];
      while (bits != 0) {
        const std::int64_t x = 1 + static_cast<std::int64_t>(w) * kBits + std::countr_zero(bits);
        if (!f(x)) return;
        bits &= bits - 1;
      }
    }
  }

 private:
  void trim(Bits& b) const {
    const auto rem = static_cast<int>(bound_ % kBits);
    if (rem != 0 && !b.empty()) b.back() &= (std::uint64_t{1} << rem) - 1;
  }

  std::int64_t bound_;
  std::size_t nwords_;
};

void check_positive(std::int64_t v, const char* what) {
  if (v <= 0) throw Error(Errc::invalid_argument, std::string(what) + " must be positive");
}

}  // namespace

void ScaleParams::validate(std::int64_t window_size) const {
  check_positive(thick_L, "thick_L");
  check_positive(syndetic_g, "syndetic_g");
  check_positive(ps_L, "ps_L");
  check_positive(delta_order, "delta_order");
  check_positive(ip_arity, "ip_arity");
  check_positive(search_bound, "search_bound");
  if (search_bound > window_size) {
    throw Error(Errc::invalid_argument, "search_bound exceeds the window size");
  }
}

// -- run-based detectors ---------------------------------------------------

bool is_thick_at(const WindowedSet& s, std::int64_t L) {
  check_positive(L, "L");
  return longest_run(s) >= L;
}

bool is_syndetic_at(const WindowedSet& s, std::int64_t g) {
  check_positive(g, "g");
  return longest_run(s.complement()) < g;
}

bool is_piecewise_syndetic_at(const WindowedSet& s, std::int64_t g, std::int64_t L) {
  check_positive(g, "g");
  check_positive(L, "L");
  const std::int64_t n = s.size();
  if (L > n) return false;
  if (L < g) return true;
  // bad[j] = 1 when positions j..j+g-1 (window offsets) are all absent.
  std::vector<std::int64_t> prefix(static_cast<std::size_t>(n) + 1, 0);
  std::int64_t absent_run = 0;
  std::vector<char> bad(static_cast<std::size_t>(n), 0);
  for (std::int64_t i = 0; i < n; ++i) {
    absent_run = s.contains(s.lo() + i) ? 0 : absent_run + 1;
    if (absent_run >= g) bad[static_cast<std::size_t>(i - g + 1)] = 1;
  }
  for (std::int64_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + bad[static_cast<std::size_t>(i)];
  // Interval [t, t+L-1] is fine when no bad block starts in [t, t+L-g].
  for (std::int64_t t = 0; t + L <= n; ++t) {
    if (prefix[t + L - g + 1] - prefix[t] == 0) return true;
  }
  return false;
}

bool is_thickly_syndetic_at(const WindowedSet& s, std::int64_t g, std::int64_t L) {
  return !is_piecewise_syndetic_at(s.complement(), g, L);
}

bool is_cofinite_at(const WindowedSet& s, std::int64_t n0) {
  if (n0 < 0) throw Error(Errc::invalid_argument, "n0 must be nonnegative");
  for (std::int64_t n = s.lo(); n <= s.hi(); ++n) {
    if ((n < -n0 || n > n0) && !s.contains(n)) return false;
  }
  return true;
}

// -- structured subsets ----------------------------------------------------

namespace {

void check_bound(const WindowedSet& s, std::int64_t bound) {
  check_positive(bound, "bound");
  if (bound > s.hi()) throw Error(Errc::invalid_argument, "search bound exceeds the window");
}

// Depth-first search for s_1 = 1 < s_2 < ... < s_m <= bound with pairwise
// differences in S. Delta-type conditions are translation invariant, so any
// witness translates to one starting at 1 and the lexicographically least
// witness starts there. `accept` can veto a partial sequence.
std::optional<std::vector<std::int64_t>> delta_search(
    const WindowedSet& s, std::int64_t m, std::int64_t bound,
    const std::function<bool(const std::vector<std::int64_t>&)>& accept) {
  if (m < 2) throw Error(Errc::invalid_argument, "order m must be at least 2");
  check_bound(s, bound);
  const CandidateSpace space(bound);
  std::vector<std::int64_t> chosen{1};
  Bits start = space.translate(s, 1);
  space.clamp(start, 2, bound);

  std::function<bool(const Bits&)> dfs = [&](const Bits& cand) -> bool {
    if (static_cast<std::int64_t>(chosen.size()) == m) return true;
    const std::int64_t need = m - static_cast<std::int64_t>(chosen.size());
    if (popcount(cand) < need) return false;
    bool found = false;
    CandidateSpace::for_each(cand, [&](std::int64_t x) {
      chosen.push_back(x);
      if (accept(chosen)) {
        Bits next = space.translate(s, x);
        for (std::size_t w = 0; w < next.size(); ++w) next[w] &= cand[w];
        space.clamp(next, x + 1, bound);
        if (dfs(next)) {
          found = true;
          return false;
        }
      }
      chosen.pop_back();
      return true;
    });
    return found;
  };
  if (dfs(start)) return chosen;
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::int64_t>> find_delta_subset(const WindowedSet& s, std::int64_t m,
                                                           std::int64_t bound) {
  return delta_search(s, m, bound, [](const std::vector<std::int64_t>&) { return true; });
}

std::optional<std::vector<std::int64_t>> find_delta_delta_subset(const WindowedSet& s,
                                                                 std::int64_t m,
                                                                 std::int64_t bound) {
  // Candidates already have Delta in S; check the new positive elements of
  // Delta - Delta created by the last point.
  return delta_search(s, m, bound, [&](const std::vector<std::int64_t>& seq) {
    std::vector<std::int64_t> diffs;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      for (std::size_t j = i + 1; j < seq.size(); ++j) diffs.push_back(seq[j] - seq[i]);
    }
    const std::int64_t top = seq.back();
    for (const std::int64_t d : diffs) {
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const std::int64_t fresh = top - seq[i];
        const std::int64_t x = fresh > d ? fresh - d : d - fresh;
        if (x > 0 && !s.contains(x)) return false;
      }
    }
    return true;
  });
}

std::optional<std::vector<std::int64_t>> find_ip_subset(const WindowedSet& s, std::int64_t k,
                                                        std::int64_t bound) {
  check_positive(k, "arity k");
  check_bound(s, bound);
  const CandidateSpace space(bound);
  const Bits base = space.translate(s, 0);
  std::vector<std::int64_t> chosen;
  std::vector<std::int64_t> sums;

  std::function<bool(std::int64_t, std::int64_t)> dfs = [&](std::int64_t prev, std::int64_t total) -> bool {
    const std::int64_t remaining = k - static_cast<std::int64_t>(chosen.size());
    if (remaining == 0) return true;
    const std::int64_t cap = (bound - total) / remaining;
    if (cap < prev) return false;
    Bits cand = base;
    for (const std::int64_t f : sums) {
      const Bits shifted = space.translate(s, -f);
      for (std::size_t w = 0; w < cand.size(); ++w) cand[w] &= shifted[w];
    }
    space.clamp(cand, prev, cap);
    bool found = false;
    CandidateSpace::for_each(cand, [&](std::int64_t x) {
      const std::size_t old = sums.size();
      sums.push_back(x);
      for (std::size_t i = 0; i < old; ++i) sums.push_back(sums[i] + x);
      chosen.push_back(x);
      if (dfs(x, total + x)) {
        found = true;
        return false;
      }
      chosen.pop_back();
      sums.resize(old);
      return true;
    });
    return found;
  };
  if (dfs(1, 0)) return chosen;
  return std::nullopt;
}

// -- progressive gaps ------------------------------------------------------

bool is_progressive_decomposition(const ChunkDecomposition& d) {
  if (d.chunks.empty() || d.separators.size() + 1 != d.chunks.size()) return false;
  for (const auto& chunk : d.chunks) {
    if (chunk.empty()) return false;
    const std::int64_t end = chunk.back();
    for (std::size_t i = 1; i < chunk.size(); ++i) {
      if (chunk[i] <= chunk[i - 1]) return false;
      if (!(chunk[i] - chunk[i - 1] > end - chunk[i])) return false;
    }
  }
  for (std::size_t i = 0; i < d.separators.size(); ++i) {
    if (d.separators[i] != d.chunks[i + 1].front() - d.chunks[i].back()) return false;
    if (d.separators[i] <= 0) return false;
    if (i > 0 && d.separators[i] <= d.separators[i - 1]) return false;
  }
  return true;
}

std::optional<ChunkDecomposition> has_progressive_gaps(const WindowedSet& s) {
  const std::vector<std::int64_t> a = s.members();
  if (a.size() < 2) throw Error(Errc::too_small, "progressive gaps need at least two members");
  const std::size_t n = a.size();
  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min();

  // best[j]: smallest achievable last separator over decompositions of
  // a[0..j] whose final chunk ends at j (kNone: a single chunk, nothing
  // feasible is marked by `feasible`). Smaller is always better for
  // extending to the right.
  std::vector<std::int64_t> best(n, kNone);
  std::vector<char> feasible(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<std::int64_t> value;
    for (std::size_t i = j + 1; i-- > 0;) {
      if (i < j && !(a[i + 1] - a[i] > a[j] - a[i + 1])) break;
      if (i == 0) {
        value = kNone;
      } else {
        const std::int64_t sep = a[i] - a[i - 1];
        if (feasible[i - 1] && best[i - 1] < sep && (!value || sep < *value)) value = sep;
      }
    }
    if (value) {
      feasible[j] = 1;
      best[j] = *value;
    }
  }
  if (!feasible[n - 1]) return std::nullopt;

  ChunkDecomposition out;
  std::size_t j = n - 1;
  std::int64_t upper = std::numeric_limits<std::int64_t>::max();
  while (true) {
    std::optional<std::size_t> pick;
    std::int64_t pick_sep = kNone;
    for (std::size_t i = j + 1; i-- > 0;) {
      if (i < j && !(a[i + 1] - a[i] > a[j] - a[i + 1])) break;
      if (i == 0) {
        if (!pick) pick = 0;
        continue;
      }
      const std::int64_t sep = a[i] - a[i - 1];
      if (sep < upper && feasible[i - 1] && best[i - 1] < sep && (!pick || sep > pick_sep)) {
        pick = i;
        pick_sep = sep;
      }
    }
    // The DP guarantees an option exists.
    const std::size_t i = *pick;
    out.chunks.emplace_back(a.begin() + static_cast<std::ptrdiff_t>(i),
                            a.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    if (i == 0) break;
    out.separators.push_back(pick_sep);
    upper = pick_sep;
    j = i - 1;
  }
  std::reverse(out.chunks.begin(), out.chunks.end());
  std::reverse(out.separators.begin(), out.separators.end());
  return out;
}

// -- generated families ----------------------------------------------------

GeneratedFamily::GeneratedFamily(std::vector<WindowedSet> generators, std::int64_t shift_budget,
                                 std::int64_t arity_cap)
    : generators_(std::move(generators)), budget_(shift_budget), arity_cap_(arity_cap) {
  if (generators_.empty()) throw Error(Errc::invalid_argument, "a family needs at least one generator");
  for (const auto& g : generators_) {
    if (g.lo() != lo() || g.hi() != hi()) {
      throw Error(Errc::invalid_argument, "generators must share one window");
    }
  }
  if (budget_ < 0) throw Error(Errc::invalid_argument, "shift budget must be nonnegative");
  check_positive(arity_cap_, "arity cap");
}

bool GeneratedFamily::contains(const WindowedSet& s) const {
  const Bits t = s.extract(lo(), hi());
  return std::any_of(generators_.begin(), generators_.end(), [&](const WindowedSet& g) {
    return contained(Bits(g.words().begin(), g.words().end()), t);
  });
}

namespace {

struct Shrunk {
  std::int64_t lo;
  std::int64_t hi;
};

Shrunk shrunken_window(const GeneratedFamily& f) {
  const std::int64_t k = f.shift_budget();
  if (f.hi() - f.lo() < 2 * k) {
    throw Error(Errc::window_too_small, "window narrower than twice the shift budget");
  }
  return {f.lo() + k, f.hi() - k};
}

std::vector<Bits> generators_on(const GeneratedFamily& f, Shrunk w) {
  std::vector<Bits> out;
  for (const auto& g : f.generators()) out.push_back(g.extract(w.lo, w.hi));
  return out;
}

bool some_generator_inside(const std::vector<Bits>& gens, const Bits& t) {
  return std::any_of(gens.begin(), gens.end(), [&](const Bits& g) { return contained(g, t); });
}

}  // namespace

GeneratedFamily family_plus(const GeneratedFamily& f) {
  const Shrunk w = shrunken_window(f);
  const std::int64_t k = f.shift_budget();
  std::vector<WindowedSet> gens;
  for (const auto& g : f.generators()) {
    for (std::int64_t shift = -k; shift <= k; ++shift) {
      WindowedSet h = g.shifted(shift).restricted(w.lo, w.hi);
      if (std::find(gens.begin(), gens.end(), h) == gens.end()) gens.push_back(std::move(h));
    }
  }
  return GeneratedFamily(std::move(gens), k, f.arity_cap());
}

bool family_bullet_member(const GeneratedFamily& f, const WindowedSet& s) {
  const Shrunk w = shrunken_window(f);
  const auto gens = generators_on(f, w);
  const std::int64_t k = f.shift_budget();
  for (std::int64_t shift = -k; shift <= k; ++shift) {
    if (!some_generator_inside(gens, s.extract(w.lo + shift, w.hi + shift))) return false;
  }
  return true;
}

bool tau_member(const GeneratedFamily& f, const WindowedSet& s) {
  const Shrunk w = shrunken_window(f);
  const auto gens = generators_on(f, w);
  const std::int64_t k = f.shift_budget();
  std::vector<Bits> translates;
  for (std::int64_t shift = -k; shift <= k; ++shift) translates.push_back(s.extract(w.lo + shift, w.hi + shift));

  // Walk every nonempty shift tuple of size <= arity cap, sharing prefixes.
  const auto count = static_cast<std::int64_t>(translates.size());
  std::function<bool(std::int64_t, std::int64_t, const Bits&)> walk =
      [&](std::int64_t next, std::int64_t depth, const Bits& acc) -> bool {
    for (std::int64_t i = next; i < count; ++i) {
      Bits cur = translates[static_cast<std::size_t>(i)];
      if (depth > 0) {
        for (std::size_t x = 0; x < cur.size(); ++x) cur[x] &= acc[x];
      }
      if (!some_generator_inside(gens, cur)) return false;
      if (depth + 1 < f.arity_cap() && !walk(i + 1, depth + 1, cur)) return false;
    }
    return true;
  };
  return walk(0, 0, Bits{});
}

bool is_filter(const GeneratedFamily& f) {
  const auto& g = f.generators();
  std::vector<Bits> gens;
  for (const auto& x : g) gens.emplace_back(x.words().begin(), x.words().end());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Bits meet = gens[i];
      for (std::size_t w = 0; w < meet.size(); ++w) meet[w] &= gens[j][w];
      if (!some_generator_inside(gens, meet)) return false;
    }
  }
  return true;
}

// -- block family ----------------------------------------------------------

namespace {

constexpr std::size_t kMaxBlockPatterns = 1'000'000;

bool embeds(const WindowedSet& f, const std::vector<std::int64_t>& pattern) {
  Bits cand(f.words().begin(), f.words().end());
  for (const std::int64_t w : pattern) {
    if (w == 0) continue;
    const Bits t = f.extract(f.lo() + w, f.hi() + w);
    for (std::size_t i = 0; i < cand.size(); ++i) cand[i] &= t[i];
    if (is_zero(cand)) return false;
  }
  return !is_zero(cand);
}

}  // namespace

bool block_embeds(const WindowedSet& f, const WindowedSet& f_prime, std::int64_t span_cap,
                  std::int64_t count_cap) {
  check_positive(span_cap, "span_cap");
  check_positive(count_cap, "count_cap");
  const auto pts = f_prime.members();
  // Embedding is monotone under subsets, so it suffices to test, for every
  // left anchor x, the largest admissible patterns starting at x.
  std::set<std::vector<std::int64_t>> seen;
  std::size_t patterns = 0;
  for (std::size_t x = 0; x < pts.size(); ++x) {
    std::vector<std::int64_t> tail;
    for (std::size_t y = x + 1; y < pts.size() && pts[y] - pts[x] <= span_cap; ++y) {
      tail.push_back(pts[y] - pts[x]);
    }
    const auto pick = static_cast<std::size_t>(std::min<std::int64_t>(count_cap - 1, static_cast<std::int64_t>(tail.size())));
    // Enumerate all `pick`-subsets of tail in lexicographic order.
    std::vector<std::size_t> idx(pick);
    for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
    while (true) {
      std::vector<std::int64_t> pattern{0};
      for (const std::size_t i : idx) pattern.push_back(tail[i]);
      if (seen.insert(pattern).second) {
        if (++patterns > kMaxBlockPatterns) {
          throw Error(Errc::budget_exceeded, "too many block patterns; lower count_cap or span_cap");
        }
        if (!embeds(f, pattern)) return false;
      }
      // Advance the combination.
      std::size_t i = pick;
      while (i > 0 && idx[i - 1] == tail.size() - pick + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t t = i; t < pick; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  return true;
}

}  // namespace hindlab

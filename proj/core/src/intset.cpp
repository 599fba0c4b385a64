#include "hindlab/intset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "hindlab/error.hpp"

namespace hindlab {

namespace {

using word_type = WindowedSet::word_type;
constexpr int kBits = WindowedSet::kWordBits;

std::size_t words_for(std::int64_t nbits) {
  return static_cast<std::size_t>((nbits + kBits - 1) / kBits);
}

void check_window(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw Error(Errc::invalid_argument,
                "window [" + std::to_string(lo) + ", " + std::to_string(hi) + "] has lo > hi");
  }
  // hi - lo + 1 must not overflow and must stay allocatable.
  if (hi - lo >= kMaxWindowSize || hi - lo < 0) {
    throw Error(Errc::window_too_large, "window of " + std::to_string(hi - lo) + " positions");
  }
}

// 64 bits of `words` starting at bit offset `off` (may be negative); zeros
// outside the stored range.
word_type read64(std::span<const word_type> words, std::int64_t off) noexcept {
  if (off <= -kBits) return 0;
  if (off < 0) return read64(words, 0) << (-off);
  const auto wi = static_cast<std::size_t>(off / kBits);
  const int sh = static_cast<int>(off % kBits);
  if (wi >= words.size()) return 0;
  word_type out = words[wi] >> sh;
  if (sh != 0 && wi + 1 < words.size()) out |= words[wi + 1] << (kBits - sh);
  return out;
}

// Shifts a bit vector of `nbits` bits left by `k` (towards higher indices) and
// ORs it into `dst`, dropping overflow past nbits.
void or_shifted_left(std::vector<word_type>& dst, std::span<const word_type> src, std::int64_t k) {
  for (std::size_t w = 0; w < dst.size(); ++w) {
    dst[w] |= read64(src, static_cast<std::int64_t>(w) * kBits - k);
  }
}

}  // namespace

WindowedSet::WindowedSet(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi) {
  check_window(lo, hi);
  words_.assign(words_for(size()), 0);
}

WindowedSet WindowedSet::full(std::int64_t lo, std::int64_t hi) {
  WindowedSet s(lo, hi);
  std::fill(s.words_.begin(), s.words_.end(), ~word_type{0});
  s.clear_tail();
  return s;
}

WindowedSet WindowedSet::from_members(std::int64_t lo, std::int64_t hi,
                                      std::span<const std::int64_t> members) {
  WindowedSet s(lo, hi);
  for (const std::int64_t n : members) {
    if (n < lo || n > hi) {
      throw Error(Errc::invalid_argument, "member " + std::to_string(n) + " outside window [" +
                                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    s.set_bit(static_cast<std::uint64_t>(n - lo));
  }
  return s;
}

WindowedSet WindowedSet::from_members(std::int64_t lo, std::int64_t hi,
                                      std::initializer_list<std::int64_t> members) {
  return from_members(lo, hi, std::span<const std::int64_t>(members.begin(), members.size()));
}

WindowedSet WindowedSet::from_words(std::int64_t lo, std::int64_t hi, std::vector<word_type> words) {
  WindowedSet s(lo, hi);
  words.resize(s.words_.size(), 0);
  s.words_ = std::move(words);
  s.clear_tail();
  return s;
}

void WindowedSet::clear_tail() noexcept {
  const auto rem = static_cast<int>(size() % kBits);
  if (rem != 0 && !words_.empty()) words_.back() &= (word_type{1} << rem) - 1;
}

bool WindowedSet::contains(std::int64_t n) const noexcept {
  if (n < lo_ || n > hi_) return false;
  const auto i = static_cast<std::uint64_t>(n - lo_);
  return (words_[i / kBits] >> (i % kBits)) & 1U;
}

std::int64_t WindowedSet::count() const noexcept {
  std::int64_t c = 0;
  for (const word_type w : words_) c += std::popcount(w);
  return c;
}

bool WindowedSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
}

std::vector<std::int64_t> WindowedSet::members() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count()));
  for_each_member([&](std::int64_t n) { out.push_back(n); });
  return out;
}

std::optional<std::int64_t> WindowedSet::first() const noexcept { return next_member(lo_); }

std::optional<std::int64_t> WindowedSet::last() const noexcept {
  for (std::size_t w = words_.size(); w-- > 0;) {
    if (words_[w] != 0) {
      return lo_ + static_cast<std::int64_t>(w) * kBits + (kBits - 1 - std::countl_zero(words_[w]));
    }
  }
  return std::nullopt;
}

std::optional<std::int64_t> WindowedSet::next_member(std::int64_t n) const noexcept {
  if (n > hi_) return std::nullopt;
  if (n < lo_) n = lo_;
  auto i = static_cast<std::uint64_t>(n - lo_);
  std::size_t w = i / kBits;
  word_type bits = words_[w] & (~word_type{0} << (i % kBits));
  while (true) {
    if (bits != 0) return lo_ + static_cast<std::int64_t>(w) * kBits + std::countr_zero(bits);
    if (++w >= words_.size()) return std::nullopt;
    bits = words_[w];
  }
}

WindowedSet WindowedSet::shifted(std::int64_t k) const {
  WindowedSet out = from_words(lo_ + k, hi_ + k, words_);
  return out;
}

WindowedSet WindowedSet::restricted(std::int64_t lo, std::int64_t hi) const {
  return from_words(lo, hi, extract(lo, hi));
}

WindowedSet WindowedSet::complement() const {
  std::vector<word_type> w(words_.size());
  std::transform(words_.begin(), words_.end(), w.begin(), [](word_type x) { return ~x; });
  return from_words(lo_, hi_, std::move(w));
}

WindowedSet WindowedSet::reflected() const {
  WindowedSet out(-hi_, -lo_);
  for_each_member([&](std::int64_t n) { out.set_bit(static_cast<std::uint64_t>(-n - out.lo_)); });
  out.symmetric_ = symmetric_;
  return out;
}

bool WindowedSet::is_symmetric_on_window() const noexcept {
  const std::int64_t m = std::min(-lo_, hi_);
  for (std::int64_t n = 1; n <= m; ++n) {
    if (contains(n) != contains(-n)) return false;
  }
  return true;
}

WindowedSet WindowedSet::marked_symmetric() const {
  if (!is_symmetric_on_window()) throw Error(Errc::invalid_argument, "set is not symmetric on its window");
  WindowedSet out = *this;
  out.symmetric_ = true;
  return out;
}

WindowedSet::word_type WindowedSet::bits_at(std::int64_t n) const noexcept {
  return read64(words_, n - lo_);
}

std::vector<WindowedSet::word_type> WindowedSet::extract(std::int64_t lo, std::int64_t hi) const {
  check_window(lo, hi);
  std::vector<word_type> out(words_for(hi - lo + 1));
  for (std::size_t w = 0; w < out.size(); ++w) {
    out[w] = read64(words_, lo - lo_ + static_cast<std::int64_t>(w) * kBits);
  }
  const auto rem = static_cast<int>((hi - lo + 1) % kBits);
  if (rem != 0) out.back() &= (word_type{1} << rem) - 1;
  return out;
}

// -- boolean algebra -------------------------------------------------------

namespace {

struct Common {
  std::int64_t lo;
  std::int64_t hi;
};

Common common_window(const WindowedSet& a, const WindowedSet& b) {
  const std::int64_t lo = std::max(a.lo(), b.lo());
  const std::int64_t hi = std::min(a.hi(), b.hi());
  if (lo > hi) throw Error(Errc::disjoint_windows, "operand windows do not overlap");
  return {lo, hi};
}

template <class Op>
WindowedSet combine(const WindowedSet& a, const WindowedSet& b, Op op) {
  const auto [lo, hi] = common_window(a, b);
  auto x = a.extract(lo, hi);
  const auto y = b.extract(lo, hi);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = op(x[i], y[i]);
  return WindowedSet::from_words(lo, hi, std::move(x));
}

}  // namespace

WindowedSet intersect(const WindowedSet& a, const WindowedSet& b) {
  return combine(a, b, [](word_type x, word_type y) { return x & y; });
}

WindowedSet unite(const WindowedSet& a, const WindowedSet& b) {
  return combine(a, b, [](word_type x, word_type y) { return x | y; });
}

bool is_subset(const WindowedSet& a, const WindowedSet& b) {
  const auto [lo, hi] = common_window(a, b);
  const auto x = a.extract(lo, hi);
  const auto y = b.extract(lo, hi);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((x[i] & ~y[i]) != 0) return false;
  }
  return true;
}

BoolResult boolean(BoolOp op, const WindowedSet& s, const WindowedSet* t) {
  if (op == BoolOp::complement) return s.complement();
  if (t == nullptr) throw Error(Errc::invalid_argument, "binary boolean operation needs two operands");
  switch (op) {
    case BoolOp::intersect: return intersect(s, *t);
    case BoolOp::unite: return unite(s, *t);
    case BoolOp::subset_of: return is_subset(s, *t);
    case BoolOp::complement: break;
  }
  return s.complement();
}

// -- arithmetic ------------------------------------------------------------

WindowedSet difference_set(const WindowedSet& s) {
  if (s.empty()) throw Error(Errc::empty_set, "difference set of the empty set");
  const std::int64_t hi = std::max<std::int64_t>(1, s.hi() - s.lo());
  std::vector<word_type> out(words_for(hi));
  // Position n (bit n-1) is set when b + n is a member for some member b.
  s.for_each_member([&](std::int64_t b) {
    for (std::size_t w = 0; w < out.size(); ++w) {
      out[w] |= s.bits_at(b + 1 + static_cast<std::int64_t>(w) * kBits);
    }
  });
  return WindowedSet::from_words(1, hi, std::move(out));
}

WindowedSet minus_set(const WindowedSet& a, const WindowedSet& b) {
  const std::int64_t lo = a.lo() - b.hi();
  const std::int64_t hi = a.hi() - b.lo();
  check_window(lo, hi);
  std::vector<word_type> out(words_for(hi - lo + 1));
  b.for_each_member([&](std::int64_t y) {
    for (std::size_t w = 0; w < out.size(); ++w) {
      out[w] |= a.bits_at(lo + y + static_cast<std::int64_t>(w) * kBits);
    }
  });
  return WindowedSet::from_words(lo, hi, std::move(out));
}

WindowedSet symmetric_closure(const WindowedSet& s) {
  const std::int64_t m = std::max(std::abs(s.lo()), std::abs(s.hi()));
  WindowedSet out = unite(s.restricted(-m, m), s.reflected().restricted(-m, m));
  return out.marked_symmetric();
}

WindowedSet finite_sums(std::span<const std::int64_t> generators, std::size_t arity_cap) {
  if (generators.empty()) throw Error(Errc::invalid_argument, "finite sums of an empty list");
  if (generators.size() > arity_cap) {
    throw Error(Errc::arity_cap_exceeded, std::to_string(generators.size()) + " generators, cap " +
                                              std::to_string(arity_cap));
  }
  std::int64_t total = 0;
  for (const std::int64_t a : generators) {
    if (a <= 0) throw Error(Errc::invalid_argument, "finite-sum generators must be positive");
    if (__builtin_add_overflow(total, a, &total)) throw Error(Errc::overflow, "sum of generators");
  }
  check_window(0, total);
  // Subset-sum reachability on [0, total]; bit 0 is the empty sum.
  std::vector<word_type> reach(words_for(total + 1));
  reach[0] = 1;
  for (const std::int64_t a : generators) {
    const std::vector<word_type> prev = reach;
    or_shifted_left(reach, prev, a);
  }
  reach[0] &= ~word_type{1};
  const std::int64_t lo = *std::min_element(generators.begin(), generators.end());
  return WindowedSet::from_words(0, total, std::move(reach)).restricted(lo, total);
}

// -- statistics ------------------------------------------------------------

DensityProfile density_profile(const WindowedSet& s, std::span<const std::int64_t> lengths) {
  if (lengths.empty()) throw Error(Errc::invalid_argument, "no window lengths given");
  for (const std::int64_t w : lengths) {
    if (w <= 0) throw Error(Errc::invalid_argument, "window lengths must be positive");
    if (w > s.size()) {
      throw Error(Errc::length_exceeds_window,
                  "length " + std::to_string(w) + " > window size " + std::to_string(s.size()));
    }
  }
  std::vector<std::int64_t> prefix(static_cast<std::size_t>(s.size()) + 1, 0);
  for (std::int64_t i = 0; i < s.size(); ++i) {
    prefix[i + 1] = prefix[i] + (s.contains(s.lo() + i) ? 1 : 0);
  }
  DensityProfile p;
  for (const std::int64_t w : lengths) {
    std::int64_t best = 0;
    std::int64_t worst = w;
    for (std::int64_t i = 0; i + w <= s.size(); ++i) {
      const std::int64_t c = prefix[i + w] - prefix[i];
      best = std::max(best, c);
      worst = std::min(worst, c);
    }
    p.window_lengths.push_back(w);
    p.max_density.emplace_back(best, w);
    p.min_density.emplace_back(worst, w);
  }
  const auto largest = static_cast<std::size_t>(
      std::max_element(lengths.begin(), lengths.end()) - lengths.begin());
  p.upper_estimate = p.max_density[largest];
  p.lower_estimate = p.min_density[largest];
  return p;
}

std::int64_t longest_run(const WindowedSet& s) noexcept {
  std::int64_t best = 0;
  std::int64_t cur = 0;
  const auto words = s.words();
  const std::int64_t n = s.size();
  for (std::size_t w = 0; w < words.size(); ++w) {
    const std::int64_t valid = std::min<std::int64_t>(kBits, n - static_cast<std::int64_t>(w) * kBits);
    word_type bits = words[w];
    if (valid == kBits && bits == ~word_type{0}) {
      cur += kBits;
      continue;
    }
    std::int64_t pos = 0;
    while (pos < valid) {
      const int ones = std::countr_one(bits);
      const std::int64_t take = std::min<std::int64_t>(ones, valid - pos);
      cur += take;
      pos += take;
      if (pos >= valid) break;
      best = std::max(best, cur);
      cur = 0;
      bits >>= take;
      const int zeros = bits == 0 ? kBits : std::countr_zero(bits);
      const std::int64_t skip = std::min<std::int64_t>(zeros, valid - pos);
      pos += skip;
      bits = skip >= kBits ? 0 : bits >> skip;
    }
  }
  return std::max(best, cur);
}

GapStatistics gap_statistics(const WindowedSet& s) {
  GapStatistics g;
  const auto members = s.members();
  if (members.empty()) {
    g.max_gap = s.size();
    g.leading_gap = g.trailing_gap = s.size() + 1;
    return g;
  }
  for (std::size_t i = 1; i < members.size(); ++i) g.gaps.push_back(members[i] - members[i - 1]);
  std::sort(g.gaps.begin(), g.gaps.end());
  g.max_gap = g.gaps.empty() ? 0 : g.gaps.back();
  g.longest_run = longest_run(s);
  g.leading_gap = members.front() - (s.lo() - 1);
  g.trailing_gap = (s.hi() + 1) - members.back();
  return g;
}

}  // namespace hindlab

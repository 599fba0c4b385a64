#include "hindlab/covers.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "hindlab/error.hpp"

namespace hindlab {

namespace {

using Bits = std::vector<std::uint64_t>;

WordCode mask(int depth) { return depth >= 64 ? ~WordCode{0} : (WordCode{1} << depth) - 1; }

void check_depth(int depth) {
  if (depth < 1 || depth > kMaxCoverDepth) {
    throw Error(Errc::invalid_argument, "cover depth must lie in [1, " + std::to_string(kMaxCoverDepth) + "]");
  }
}

bool has(const std::vector<WordCode>& sorted, WordCode w) { return std::binary_search(sorted.begin(), sorted.end(), w); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string word_string(WordCode code, int depth) {
  std::string out(static_cast<std::size_t>(depth), '0');
  for (int i = 0; i < depth; ++i) {
    if ((code >> i) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

WordCode word_code(std::string_view bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxCoverDepth)) {
    throw Error(Errc::invalid_argument, "word length must lie in [1, " + std::to_string(kMaxCoverDepth) + "]");
  }
  WordCode code = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      code |= WordCode{1} << i;
    } else if (bits[i] != '0') {
      throw Error(Errc::invalid_argument, "not a binary word: '" + std::string(bits) + "'");
    }
  }
  return code;
}

std::vector<WordCode> language_codes(const SpacingShift& p, int length, std::size_t budget) {
  check_depth(length);
  if (length - 1 > p.max_distance()) {
    throw Error(Errc::window_exceeded, "words of length " + std::to_string(length) + " need distances beyond N");
  }
  std::vector<WordCode> out;
  std::vector<int> ones;
  auto dfs = [&](auto&& self, int pos, WordCode code) -> void {
    if (pos == length) {
      if (out.size() >= budget) throw Error(Errc::budget_exceeded, "more than " + std::to_string(budget) + " language words");
      out.push_back(code);
      return;
    }
    self(self, pos + 1, code);
    if (std::all_of(ones.begin(), ones.end(), [&](int o) { return p.allows(pos - o); })) {
      ones.push_back(pos);
      self(self, pos + 1, code | (WordCode{1} << pos));
      ones.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// -- covers ----------------------------------------------------------------

ClopenCover ClopenCover::canonical_two_cover() { return ClopenCover{1, {{0}, {1}}}; }

ClopenCover ClopenCover::partition(const SpacingShift& p, int depth) {
  ClopenCover c{depth, {}};
  for (const auto w : language_codes(p, depth)) c.elements.push_back({w});
  return c;
}

ClopenCover ClopenCover::parse(std::string_view text) {
  ClopenCover c{0, {}};
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::vector<WordCode> element;
    while (true) {
      const auto plus = line.find('+');
      const std::string_view item = trim(line.substr(0, plus));
      if (item.empty() || item.size() > static_cast<std::size_t>(kMaxCoverDepth) ||
          item.find_first_not_of("01") != std::string_view::npos) {
        throw ParseError(line_no, "bad cover word '" + std::string(item) + "'");
      }
      if (c.depth == 0) c.depth = static_cast<int>(item.size());
      if (static_cast<int>(item.size()) != c.depth) {
        throw ParseError(line_no, "all cover words must have length " + std::to_string(c.depth));
      }
      element.push_back(word_code(item));
      if (plus == std::string_view::npos) break;
      line.remove_prefix(plus + 1);
    }
    std::sort(element.begin(), element.end());
    element.erase(std::unique(element.begin(), element.end()), element.end());
    c.elements.push_back(std::move(element));
  }
  if (c.elements.empty()) throw ParseError(line_no, "cover has no elements");
  return c;
}

std::string ClopenCover::serialize() const {
  std::ostringstream os;
  for (const auto& e : elements) {
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "+" : "") << word_string(e[i], depth);
    os << '\n';
  }
  return os.str();
}

void ClopenCover::validate(const SpacingShift& p) const {
  check_depth(depth);
  for (const auto w : language_codes(p, depth)) {
    if (std::none_of(elements.begin(), elements.end(), [&](const auto& e) { return has(e, w); })) {
      throw Error(Errc::not_a_cover, "language word " + word_string(w, depth) + " lies in no element");
    }
  }
}

bool ClopenCover::nontrivial(const SpacingShift& p) const {
  const auto words = language_codes(p, depth);
  return std::none_of(elements.begin(), elements.end(), [&](const auto& e) {
    return std::all_of(words.begin(), words.end(), [&](WordCode w) { return has(e, w); });
  });
}

// -- refinement ------------------------------------------------------------

ClopenCover refine_along(const SpacingShift& p, const ClopenCover& cover, std::span<const std::int64_t> times,
                         std::size_t budget) {
  if (times.empty()) throw Error(Errc::invalid_argument, "empty time sequence");
  if (*std::min_element(times.begin(), times.end()) < 0) throw Error(Errc::invalid_argument, "times must be >= 0");
  cover.validate(p);
  const std::int64_t reach = *std::max_element(times.begin(), times.end());
  if (cover.depth + reach > kMaxCoverDepth) {
    throw Error(Errc::budget_exceeded, "refined depth " + std::to_string(cover.depth + reach) + " exceeds " +
                                           std::to_string(kMaxCoverDepth));
  }
  const int depth = cover.depth + static_cast<int>(reach);
  const auto words = language_codes(p, depth, budget);
  const WordCode m = mask(cover.depth);

  std::map<std::vector<std::uint32_t>, std::vector<WordCode>> joined;
  std::vector<std::vector<std::uint32_t>> options(times.size());
  std::vector<std::uint32_t> tuple(times.size());
  std::size_t work = 0;
  for (const auto w : words) {
    for (std::size_t i = 0; i < times.size(); ++i) {
      const WordCode sub = (w >> times[i]) & m;
      options[i].clear();
      for (std::uint32_t j = 0; j < cover.elements.size(); ++j) {
        if (has(cover.elements[j], sub)) options[i].push_back(j);
      }
    }
    // Odometer over the product of compatible element indices.
    std::vector<std::size_t> idx(times.size(), 0);
    while (true) {
      if (++work > budget) throw Error(Errc::budget_exceeded, "refinement needs more than " + std::to_string(budget) + " steps");
      for (std::size_t i = 0; i < times.size(); ++i) tuple[i] = options[i][idx[i]];
      joined[tuple].push_back(w);
      std::size_t i = 0;
      while (i < times.size() && ++idx[i] == options[i].size()) idx[i++] = 0;
      if (i == times.size()) break;
    }
  }

  ClopenCover out{depth, {}};
  out.elements.reserve(joined.size());
  for (auto& [key, element] : joined) out.elements.push_back(std::move(element));
  std::vector<std::vector<WordCode>> unique;
  std::vector<std::size_t> order(out.elements.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return out.elements[a] < out.elements[b]; });
  std::vector<char> keep(order.size(), 1);
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (out.elements[order[i]] == out.elements[order[i - 1]]) keep[order[i]] = 0;
  }
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    if (keep[i]) unique.push_back(std::move(out.elements[i]));
  }
  out.elements = std::move(unique);
  return out;
}

// -- exact minimal subcover --------------------------------------------------

namespace {

class SubcoverSolver {
 public:
  SubcoverSolver(std::vector<Bits> sets, std::size_t rows) : sets_(std::move(sets)), rows_(rows) {}

  std::int64_t solve(std::size_t cap) {
    Bits uncovered((rows_ + 63) / 64, 0);
    for (std::size_t r = 0; r < rows_; ++r) uncovered[r / 64] |= std::uint64_t{1} << (r % 64);
    std::vector<char> alive(sets_.size(), 1);
    std::int64_t forced = 0;
    reduce(uncovered, alive, forced);
    std::vector<std::size_t> kernel;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (alive[i]) kernel.push_back(i);
    }
    if (kernel.size() > cap) {
      throw Error(Errc::solver_cap_exceeded, "reduced cover still has " + std::to_string(kernel.size()) +
                                                 " elements (cap " + std::to_string(cap) + ")");
    }
    kernel_ = std::move(kernel);
    best_ = static_cast<std::int64_t>(kernel_.size()) + 1;
    search(uncovered, 0);
    return forced + best_;
  }

 private:
  static std::int64_t popcount(const Bits& b) {
    std::int64_t c = 0;
    for (const auto w : b) c += std::popcount(w);
    return c;
  }
  static std::int64_t popcount_and(const Bits& a, const Bits& b) {
    std::int64_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
  }
  static bool subset_within(const Bits& a, const Bits& b, const Bits& live) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if ((a[i] & live[i] & ~b[i]) != 0) return false;
    }
    return true;
  }
  static bool any(const Bits& b) {
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
  }

  // Drops useless and dominated elements and takes forced ones until stable.
  void reduce(Bits& uncovered, std::vector<char>& alive, std::int64_t& forced) {
    bool changed = true;
    while (changed && any(uncovered)) {
      changed = false;
      for (std::size_t i = 0; i < sets_.size(); ++i) {
        if (alive[i] && popcount_and(sets_[i], uncovered) == 0) {
          alive[i] = 0;
          changed = true;
        }
      }
      for (std::size_t i = 0; i < sets_.size(); ++i) {
        if (!alive[i]) continue;
        for (std::size_t j = 0; j < sets_.size(); ++j) {
          if (i == j || !alive[j]) continue;
          if (subset_within(sets_[i], sets_[j], uncovered) &&
              (j < i || !subset_within(sets_[j], sets_[i], uncovered))) {
            alive[i] = 0;
            changed = true;
            break;
          }
        }
      }
      for (std::size_t r = 0; r < rows_; ++r) {
        if (!((uncovered[r / 64] >> (r % 64)) & 1U)) continue;
        std::size_t count = 0;
        std::size_t last = 0;
        for (std::size_t i = 0; i < sets_.size() && count < 2; ++i) {
          if (alive[i] && ((sets_[i][r / 64] >> (r % 64)) & 1U)) {
            ++count;
            last = i;
          }
        }
        if (count == 1) {
          ++forced;
          alive[last] = 0;
          for (std::size_t w = 0; w < uncovered.size(); ++w) uncovered[w] &= ~sets_[last][w];
          changed = true;
        }
      }
    }
    if (!any(uncovered)) std::fill(alive.begin(), alive.end(), 0);
  }

  void search(const Bits& uncovered, std::int64_t chosen) {
    const std::int64_t left = popcount(uncovered);
    if (left == 0) {
      best_ = std::min(best_, chosen);
      return;
    }
    std::int64_t widest = 0;
    for (const auto i : kernel_) widest = std::max(widest, popcount_and(sets_[i], uncovered));
    if (widest == 0) return;
    if (chosen + (left + widest - 1) / widest >= best_) return;
    // Branch on the uncovered row with the fewest candidates.
    std::size_t pick_row = 0;
    std::size_t pick_count = SIZE_MAX;
    for (std::size_t w = 0; w < uncovered.size(); ++w) {
      std::uint64_t bits = uncovered[w];
      while (bits != 0) {
        const std::size_t r = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        std::size_t count = 0;
        for (const auto i : kernel_) count += (sets_[i][r / 64] >> (r % 64)) & 1U;
        if (count < pick_count) {
          pick_count = count;
          pick_row = r;
        }
      }
    }
    std::vector<std::size_t> candidates;
    for (const auto i : kernel_) {
      if ((sets_[i][pick_row / 64] >> (pick_row % 64)) & 1U) candidates.push_back(i);
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
      return popcount_and(sets_[a], uncovered) > popcount_and(sets_[b], uncovered);
    });
    Bits next(uncovered.size());
    for (const auto i : candidates) {
      for (std::size_t w = 0; w < next.size(); ++w) next[w] = uncovered[w] & ~sets_[i][w];
      search(next, chosen + 1);
    }
  }

  std::vector<Bits> sets_;
  std::size_t rows_;
  std::vector<std::size_t> kernel_;
  std::int64_t best_ = 0;
};

}  // namespace

std::int64_t min_subcover(const SpacingShift& p, const ClopenCover& cover, std::size_t cap) {
  cover.validate(p);
  const auto words = language_codes(p, cover.depth);
  std::vector<Bits> sets;
  sets.reserve(cover.elements.size());
  for (const auto& e : cover.elements) {
    Bits b((words.size() + 63) / 64, 0);
    for (const auto w : e) {
      const auto it = std::lower_bound(words.begin(), words.end(), w);
      if (it != words.end() && *it == w) {
        const auto r = static_cast<std::size_t>(it - words.begin());
        b[r / 64] |= std::uint64_t{1} << (r % 64);
      }
    }
    sets.push_back(std::move(b));
  }
  return SubcoverSolver(std::move(sets), words.size()).solve(cap);
}

// -- profiles --------------------------------------------------------------

std::string_view to_string(Growth g) noexcept {
  switch (g) {
    case Growth::undecided: return "undecided";
    case Growth::bounded: return "bounded-at-budget";
    case Growth::growing: return "growing-at-budget";
  }
  return "undecided";
}

ComplexityProfile complexity_profile(const SpacingShift& p, const ClopenCover& cover,
                                     std::span<const std::int64_t> times, std::int64_t n_max, std::size_t cap,
                                     std::size_t budget) {
  if (n_max < 1) throw Error(Errc::invalid_argument, "n_max must be positive");
  if (static_cast<std::int64_t>(times.size()) < n_max) {
    throw Error(Errc::invalid_argument, "sequence has fewer than n_max terms");
  }
  for (std::size_t i = 1; i < static_cast<std::size_t>(n_max); ++i) {
    if (times[i] <= times[i - 1]) throw Error(Errc::invalid_argument, "sequence must be strictly increasing");
  }
  ComplexityProfile out;
  std::vector<std::int64_t> shifted;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    shifted.push_back(times[static_cast<std::size_t>(n - 1)] - times[0]);
    out.values.push_back(min_subcover(p, refine_along(p, cover, shifted, budget), cap));
  }
  out.strictly_increasing = std::adjacent_find(out.values.begin(), out.values.end(),
                                               [](std::int64_t a, std::int64_t b) { return b <= a; }) ==
                            out.values.end();
  if (n_max >= 2) {
    out.verdict = out.values[out.values.size() - 1] == out.values[out.values.size() - 2] ? Growth::bounded
                                                                                          : Growth::growing;
  }
  return out;
}

std::vector<std::int64_t> times_from_set(const WindowedSet& s) {
  std::vector<std::int64_t> out;
  s.for_each_member([&](std::int64_t n) {
    if (n >= 0) out.push_back(n);
  });
  return out;
}

}  // namespace hindlab

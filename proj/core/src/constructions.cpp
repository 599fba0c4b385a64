#include "hindlab/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_set>

#include "hindlab/error.hpp"
#include "hindlab/families.hpp"

namespace hindlab {

WindowedSet squares_family(std::int64_t lo, std::int64_t hi, bool complement) {
  if (lo < 0) throw Error(Errc::invalid_argument, "squares live on the nonnegative side");
  return WindowedSet::from_predicate(lo, hi, [&](std::int64_t n) {
    if (n < 1) return false;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return (r * r == n) != complement;
  });
}

std::vector<std::int64_t> rapid_growth_B(std::int64_t n_terms, std::int64_t b1, GrowthRule rule) {
  if (n_terms < 2) throw Error(Errc::invalid_argument, "need at least 2 terms");
  if (b1 < 1) throw Error(Errc::invalid_argument, "b1 must be positive");
  std::vector<std::int64_t> out{b1};
  __int128 sum = rule == GrowthRule::minimal ? b1 : b1 + 1;
  for (std::int64_t n = 2; n <= n_terms; ++n) {
    const __int128 next = 4 * sum + 1;
    if (next > std::numeric_limits<std::int64_t>::max()) {
      throw Error(Errc::overflow, "term " + std::to_string(n) + " does not fit in 64 bits");
    }
    out.push_back(static_cast<std::int64_t>(next));
    sum += rule == GrowthRule::minimal ? next : next + n;
  }
  return out;
}

namespace {

void check_increasing(std::span<const std::int64_t> seq) {
  if (seq.empty()) throw Error(Errc::empty_set, "empty sequence");
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] <= seq[i - 1]) throw Error(Errc::invalid_argument, "sequence must be strictly increasing");
  }
}

}  // namespace

WindowedSet delta_of(std::span<const std::int64_t> seq) {
  check_increasing(seq);
  return difference_set(WindowedSet::from_members(seq.front(), seq.back(), seq));
}

WindowedSet delta_minus_delta_of(std::span<const std::int64_t> seq) {
  const WindowedSet d = delta_of(seq);
  return minus_set(d, d);
}

PdelReport pdel_obstruction_check(std::span<const std::int64_t> b, std::int64_t sample_cap, IndexOrder order) {
  check_increasing(b);
  if (sample_cap < 1) throw Error(Errc::invalid_argument, "sample_cap must be positive");
  const auto n = static_cast<int>(b.size());
  std::unordered_set<std::int64_t> delta;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) delta.insert(b[j] - b[i]);
  }
  std::unordered_set<std::int64_t> dd;
  for (const auto x : delta) {
    for (const auto y : delta) dd.insert(x - y);
  }
  auto qualifies = [&](std::int64_t f) { return f > 0 && dd.count(f) != 0 && delta.count(f) == 0; };
  // r[0] > r[1] (>=|>) r[2] > r[3] (>=|>) r[4] > r[5] (>=|>) r[6] > r[7]
  const int weak_step = order == IndexOrder::weak ? 0 : 1;
  PdelReport report;
  int r[8];
  auto f_of = [&](int k) { return (b[r[k]] - b[r[k + 1]]) - (b[r[k + 2]] - b[r[k + 3]]); };
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == 8) {
      const std::int64_t f1 = f_of(0);
      const std::int64_t f2 = f_of(4);
      if (!qualifies(f1) || !qualifies(f2)) return true;
      if (report.pairs_checked == sample_cap) {
        report.exhaustive = false;
        return false;
      }
      ++report.pairs_checked;
      if (dd.count(f1 + f2) != 0) {
        ++report.counterexamples;
        if (!report.first_counterexample) report.first_counterexample = {f1, f2};
      }
      return true;
    }
    const int top = depth == 0 ? n - 1 : r[depth - 1] - (depth % 2 == 1 ? 1 : weak_step);
    for (int v = top; v >= 0; --v) {
      r[depth] = v;
      if (!self(self, depth + 1)) return false;
    }
    return true;
  };
  rec(rec, 0);
  return report;
}

// -- progressive-gap unions --------------------------------------------------

ProgressiveSchedule default_progressive_schedule(std::int64_t chunk_count) {
  if (chunk_count < 1 || chunk_count > 4) throw Error(Errc::invalid_argument, "chunk_count must lie in [1, 4]");
  ProgressiveSchedule s;
  std::int64_t ten_k = 1;
  for (std::int64_t k = 0; k < chunk_count; ++k) {
    s.seeds.push_back({1, 5 * ten_k});
    s.offsets.push_back(100 * ten_k * ten_k);
    ten_k *= 10;
  }
  return s;
}

WindowedSet progressive_gap_union(const ProgressiveSchedule& schedule) {
  if (schedule.seeds.empty() || schedule.seeds.size() != schedule.offsets.size()) {
    throw Error(Errc::invalid_argument, "need one offset per seed and at least one seed");
  }
  for (std::size_t k = 1; k < schedule.offsets.size(); ++k) {
    if (schedule.offsets[k] <= schedule.offsets[k - 1]) {
      throw Error(Errc::invalid_argument, "offsets must be strictly increasing");
    }
  }
  std::vector<std::int64_t> members;
  std::int64_t prev_max = std::numeric_limits<std::int64_t>::min();
  for (std::size_t k = 0; k < schedule.seeds.size(); ++k) {
    const WindowedSet piece = delta_of(schedule.seeds[k]);
    if (piece.empty()) throw Error(Errc::invalid_argument, "seed " + std::to_string(k) + " has fewer than 2 terms");
    const std::int64_t first = *piece.first() + schedule.offsets[k];
    if (first <= prev_max) {
      throw Error(Errc::schedule_too_tight, "piece " + std::to_string(k) + " overlaps the previous one");
    }
    piece.for_each_member([&](std::int64_t x) { members.push_back(x + schedule.offsets[k]); });
    prev_max = members.back();
  }
  WindowedSet out = WindowedSet::from_members(members.front(), members.back(), members);
  if (out.count() >= 2 && !has_progressive_gaps(out)) {
    throw Error(Errc::schedule_too_tight, "union does not have progressive gaps");
  }
  return out;
}

// -- alternating blocks ------------------------------------------------------

std::int64_t BlockSchedule::operator()(std::int64_t k) const {
  switch (kind) {
    case Kind::linear: return k;
    case Kind::constant: return c;
    case Kind::square: return k * k;
  }
  return k;
}

BlockSchedule BlockSchedule::parse(std::string_view text) {
  if (text == "linear") return {Kind::linear, 1};
  if (text == "square") return {Kind::square, 1};
  if (text.starts_with("const:")) {
    std::int64_t c = 0;
    const auto body = text.substr(6);
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), c);
    if (ec == std::errc() && ptr == body.data() + body.size() && c >= 1) return {Kind::constant, c};
  }
  throw Error(Errc::invalid_argument, "schedule must be linear, square or const:c (c >= 1)");
}

std::string BlockSchedule::to_string() const {
  switch (kind) {
    case Kind::linear: return "linear";
    case Kind::constant: return "const:" + std::to_string(c);
    case Kind::square: return "square";
  }
  return "linear";
}

WindowedSet alternating_thick(std::int64_t lo, std::int64_t hi, const BlockSchedule& schedule) {
  if (lo > hi) throw Error(Errc::invalid_argument, "empty window");
  std::vector<std::int64_t> members;
  std::int64_t pos = lo;
  for (std::int64_t k = 1; pos <= hi; ++k) {
    const std::int64_t len = schedule(k);
    for (std::int64_t i = 0; i < len && pos <= hi; ++i) members.push_back(pos++);
    pos += len;
  }
  return WindowedSet::from_members(lo, hi, members);
}

// -- specs -------------------------------------------------------------------

std::string_view to_string(ConstructionKind k) noexcept {
  switch (k) {
    case ConstructionKind::squares: return "squares";
    case ConstructionKind::rapid_growth: return "rapid_growth";
    case ConstructionKind::progressive_union: return "progressive_union";
    case ConstructionKind::alternating_thick: return "alternating_thick";
  }
  return "squares";
}

ConstructionKind parse_construction_kind(std::string_view text) {
  for (const auto k : {ConstructionKind::squares, ConstructionKind::rapid_growth, ConstructionKind::progressive_union,
                       ConstructionKind::alternating_thick}) {
    if (text == to_string(k)) return k;
  }
  throw Error(Errc::invalid_argument,
              "unknown construction '" + std::string(text) +
                  "' (squares, rapid_growth, progressive_union, alternating_thick)");
}

namespace {

std::int64_t to_int(const std::string& text, const std::string& key) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(Errc::invalid_argument, "parameter " + key + " must be an integer, got '" + text + "'");
  }
  return v;
}

std::string param(const ConstructionSpec& s, const std::string& key, const std::string& fallback) {
  const auto it = s.params.find(key);
  return it == s.params.end() ? fallback : it->second;
}

std::int64_t int_param(const ConstructionSpec& s, const std::string& key, std::int64_t fallback) {
  const auto it = s.params.find(key);
  return it == s.params.end() ? fallback : to_int(it->second, key);
}

bool bool_param(const ConstructionSpec& s, const std::string& key) {
  const std::string v = param(s, key, "0");
  if (v == "1" || v == "true") return true;
  if (v == "0" || v == "false") return false;
  throw Error(Errc::invalid_argument, "parameter " + key + " must be 0 or 1");
}

GrowthRule rule_param(const ConstructionSpec& s) {
  const std::string v = param(s, "rule", "minimal");
  if (v == "minimal") return GrowthRule::minimal;
  if (v == "index_sum") return GrowthRule::index_sum;
  throw Error(Errc::invalid_argument, "rule must be minimal or index_sum");
}

const std::set<std::string>& allowed_params(ConstructionKind k) {
  static const std::set<std::string> squares{"complement", "bound"};
  static const std::set<std::string> rapid{"n", "b1", "rule", "output"};
  static const std::set<std::string> progressive{"chunks", "complement"};
  static const std::set<std::string> alternating{"schedule"};
  switch (k) {
    case ConstructionKind::squares: return squares;
    case ConstructionKind::rapid_growth: return rapid;
    case ConstructionKind::progressive_union: return progressive;
    case ConstructionKind::alternating_thick: return alternating;
  }
  return squares;
}

std::pair<std::int64_t, std::int64_t> parse_window(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(Errc::invalid_argument, "window must be lo:hi");
  const std::int64_t lo = to_int(std::string(text.substr(0, colon)), "window");
  const std::int64_t hi = to_int(std::string(text.substr(colon + 1)), "window");
  if (lo > hi) throw Error(Errc::invalid_argument, "window must have lo <= hi");
  return {lo, hi};
}

}  // namespace

std::string ConstructionSpec::serialize() const {
  std::ostringstream os;
  os << to_string(kind);
  for (const auto& [k, v] : params) os << ' ' << k << '=' << v;
  if (window) os << " window=" << window->first << ':' << window->second;
  return os.str();
}

ConstructionSpec ConstructionSpec::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string token;
  if (!(is >> token)) throw Error(Errc::invalid_argument, "empty construction spec");
  ConstructionSpec spec;
  spec.kind = parse_construction_kind(token);
  while (is >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(Errc::invalid_argument, "expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "window") {
      spec.window = parse_window(value);
    } else {
      spec.params[key] = value;
    }
  }
  spec.validate();
  return spec;
}

void ConstructionSpec::validate() const {
  const auto& allowed = allowed_params(kind);
  for (const auto& [k, v] : params) {
    if (allowed.count(k) == 0) {
      throw Error(Errc::invalid_argument, "unknown parameter '" + k + "' for " + std::string(to_string(kind)));
    }
    if (v.empty()) throw Error(Errc::invalid_argument, "empty value for " + k);
  }
  if (window && window->first > window->second) throw Error(Errc::invalid_argument, "window must have lo <= hi");
  const bool needs_window = kind == ConstructionKind::squares || kind == ConstructionKind::alternating_thick;
  if (needs_window && !window) {
    throw Error(Errc::invalid_argument, std::string(to_string(kind)) + " needs window=lo:hi");
  }
  switch (kind) {
    case ConstructionKind::squares:
      (void)bool_param(*this, "complement");
      if (int_param(*this, "bound", 1) < 1) throw Error(Errc::invalid_argument, "bound must be positive");
      break;
    case ConstructionKind::rapid_growth: {
      (void)rule_param(*this);
      const std::string out = param(*this, "output", "b");
      if (out != "b" && out != "delta" && out != "delta_delta") {
        throw Error(Errc::invalid_argument, "output must be b, delta or delta_delta");
      }
      (void)int_param(*this, "n", 6);
      (void)int_param(*this, "b1", 1);
      break;
    }
    case ConstructionKind::progressive_union:
      (void)bool_param(*this, "complement");
      (void)int_param(*this, "chunks", 3);
      break;
    case ConstructionKind::alternating_thick: (void)BlockSchedule::parse(param(*this, "schedule", "linear")); break;
  }
}

bool ConstructionResult::all_pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

namespace {

std::string join(std::span<const std::int64_t> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// Longest completed block of each symbol (a block cut by hi does not count).
std::pair<std::int64_t, std::int64_t> completed_blocks(std::int64_t lo, std::int64_t hi, const BlockSchedule& s) {
  std::int64_t ones = 0;
  std::int64_t zeros = 0;
  std::int64_t pos = lo;
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t len = s(k);
    if (pos + len - 1 > hi) break;
    ones = std::max(ones, len);
    pos += len;
    if (pos + len - 1 > hi) break;
    zeros = std::max(zeros, len);
    pos += len;
  }
  return {ones, zeros};
}

}  // namespace

ConstructionResult build(const ConstructionSpec& spec) {
  spec.validate();
  ConstructionResult r{WindowedSet(0, 0), {}, {}};
  r.header.push_back("construction " + spec.serialize());
  switch (spec.kind) {
    case ConstructionKind::squares: {
      const auto [lo, hi] = *spec.window;
      const bool complement = bool_param(spec, "complement");
      r.set = squares_family(lo, hi, complement);
      const WindowedSet e = squares_family(std::max<std::int64_t>(lo, 0), hi, false);
      if (hi >= 26) {
        const auto w3 = find_delta_subset(e.restricted(1, hi), 3, std::min<std::int64_t>(hi, 100));
        const bool ok = w3 && *w3 == std::vector<std::int64_t>{1, 10, 26};
        r.checks.emplace_back("delta_order3_witness_1_10_26", ok);
      }
      const std::int64_t bound = std::min(hi, int_param(spec, "bound", std::min<std::int64_t>(hi, 10'000)));
      if (bound >= 1) {
        r.checks.emplace_back("no_delta_order4_up_to_" + std::to_string(bound),
                              !find_delta_subset(e.restricted(1, std::max<std::int64_t>(hi, 1)), 4, bound));
      }
      break;
    }
    case ConstructionKind::rapid_growth: {
      const auto rule = rule_param(spec);
      const auto b = rapid_growth_B(int_param(spec, "n", 6), int_param(spec, "b1", 1), rule);
      r.header.push_back("terms " + join(b));
      const std::string out = param(spec, "output", "b");
      const WindowedSet delta = delta_of(b);
      if (out == "b") {
        r.set = WindowedSet::from_members(b.front(), b.back(), b);
      } else if (out == "delta") {
        r.set = delta;
      } else {
        r.set = minus_set(delta, delta);
      }
      bool strict = true;
      bool minimal = true;
      __int128 sum = 0;
      for (std::size_t n = 0; n < b.size(); ++n) {
        if (n > 0) {
          strict = strict && b[n] > 4 * sum;
          minimal = minimal && !(b[n] - 1 > 4 * sum);
        }
        sum += rule == GrowthRule::minimal ? b[n] : b[n] + static_cast<std::int64_t>(n) + 1;
      }
      r.checks.emplace_back("growth_inequality", strict);
      r.checks.emplace_back("minimal_terms", minimal);
      r.checks.emplace_back("delta_has_progressive_gaps", has_progressive_gaps(delta).has_value());
      break;
    }
    case ConstructionKind::progressive_union: {
      const WindowedSet e = progressive_gap_union(default_progressive_schedule(int_param(spec, "chunks", 3)));
      r.set = bool_param(spec, "complement") ? e.restricted(1, e.hi()).complement() : e;
      r.checks.emplace_back("union_has_progressive_gaps", e.count() < 2 || has_progressive_gaps(e).has_value());
      break;
    }
    case ConstructionKind::alternating_thick: {
      const auto [lo, hi] = *spec.window;
      const auto schedule = BlockSchedule::parse(param(spec, "schedule", "linear"));
      r.set = alternating_thick(lo, hi, schedule);
      const auto [ones, zeros] = completed_blocks(lo, hi, schedule);
      r.header.push_back("largest_blocks ones=" + std::to_string(ones) + " zeros=" + std::to_string(zeros));
      if (ones > 0) r.checks.emplace_back("set_thick_at_" + std::to_string(ones), is_thick_at(r.set, ones));
      if (zeros > 0) {
        r.checks.emplace_back("complement_thick_at_" + std::to_string(zeros), is_thick_at(r.set.complement(), zeros));
      }
      break;
    }
  }
  return r;
}

}  // namespace hindlab

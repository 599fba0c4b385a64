#include "hindlab/spacing.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>

#include "hindlab/error.hpp"
#include "hindlab/families.hpp"
#include "parallel.hpp"

namespace hindlab {

namespace {

constexpr std::int64_t kMaxWordLen = 30;

std::int64_t iabs(std::int64_t x) { return x < 0 ? -x : x; }

WindowedSet positive_part(const WindowedSet& p_plus) {
  if (p_plus.hi() < 1) throw Error(Errc::invalid_argument, "P+ needs a window reaching 1");
  return p_plus.restricted(1, p_plus.hi());
}

}  // namespace

// -- words -----------------------------------------------------------------

Word::Word(std::vector<std::uint8_t> symbols, std::int64_t base) : symbols_(std::move(symbols)), base_(base) {
  if (symbols_.empty()) throw Error(Errc::invalid_argument, "empty word");
  for (const auto c : symbols_) {
    if (c > 1) throw Error(Errc::invalid_argument, "word symbols must be 0 or 1");
  }
}

Word Word::parse(std::string_view bits, std::int64_t base) {
  std::vector<std::uint8_t> symbols;
  symbols.reserve(bits.size());
  for (const char c : bits) {
    if (c != '0' && c != '1') throw Error(Errc::invalid_argument, "not a binary word: '" + std::string(bits) + "'");
    symbols.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Word(std::move(symbols), base);
}

std::vector<std::int64_t> Word::ones() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] != 0) out.push_back(static_cast<std::int64_t>(i));
  }
  return out;
}

bool Word::has_one() const noexcept {
  return std::any_of(symbols_.begin(), symbols_.end(), [](std::uint8_t c) { return c != 0; });
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(symbols_.size());
  for (const auto c : symbols_) out.push_back(static_cast<char>('0' + c));
  return out;
}

// -- the shift -------------------------------------------------------------

SpacingShift::SpacingShift(const WindowedSet& p_plus)
    : p_plus_(positive_part(p_plus)),
      p_full_(unite(p_plus_.restricted(-p_plus_.hi(), p_plus_.hi()),
                    p_plus_.reflected().restricted(-p_plus_.hi(), p_plus_.hi()))) {}

SpacingShift SpacingShift::full(std::int64_t n) {
  if (n < 1) throw Error(Errc::invalid_argument, "N must be positive");
  return SpacingShift(WindowedSet::full(1, n));
}

bool SpacingShift::allows(std::int64_t d) const {
  d = iabs(d);
  if (d == 0) return true;
  if (d > max_distance()) {
    throw Error(Errc::window_exceeded, "distance " + std::to_string(d) + " beyond N = " +
                                           std::to_string(max_distance()));
  }
  return p_plus_.contains(d);
}

WindowedSet SpacingShift::p(std::int64_t lo, std::int64_t hi) const { return p_full_.restricted(lo, hi); }

bool word_in_language(const SpacingShift& p, const Word& w) {
  const auto ones = w.ones();
  for (std::size_t i = 0; i < ones.size(); ++i) {
    for (std::size_t j = i + 1; j < ones.size(); ++j) {
      if (!p.allows(ones[j] - ones[i])) return false;
    }
  }
  return true;
}

std::vector<Word> language_words(const SpacingShift& p, std::int64_t max_len, bool ones_only) {
  if (max_len < 1 || max_len > kMaxWordLen) {
    throw Error(Errc::invalid_argument, "max_word_len must lie in [1, " + std::to_string(kMaxWordLen) + "]");
  }
  if (max_len - 1 > p.max_distance()) {
    throw Error(Errc::window_exceeded, "words of length " + std::to_string(max_len) + " need distances beyond N");
  }
  std::vector<Word> out;
  std::vector<std::uint8_t> buf;
  std::vector<std::int64_t> ones;
  for (std::int64_t len = 1; len <= max_len; ++len) {
    buf.assign(static_cast<std::size_t>(len), 0);
    // Lexicographic DFS: 0 before 1 at every position.
    auto dfs = [&](auto&& self, std::int64_t pos) -> void {
      if (pos == len) {
        if (!ones_only || !ones.empty()) out.emplace_back(buf);
        return;
      }
      buf[static_cast<std::size_t>(pos)] = 0;
      self(self, pos + 1);
      const bool legal = std::all_of(ones.begin(), ones.end(), [&](std::int64_t o) { return p.allows(pos - o); });
      if (legal) {
        buf[static_cast<std::size_t>(pos)] = 1;
        ones.push_back(pos);
        self(self, pos + 1);
        ones.pop_back();
        buf[static_cast<std::size_t>(pos)] = 0;
      }
    };
    dfs(dfs, 0);
  }
  return out;
}

// -- return-time sets ------------------------------------------------------

Window return_window(const SpacingShift& p, const Word& u, const Word& v) {
  // r = n + (U.base - V.base) is the offset of U's start from V's start. The
  // merged pattern spans at most N + 1 positions iff r lies in this range.
  const std::int64_t n = p.max_distance();
  const std::int64_t d = u.base() - v.base();
  const std::int64_t rlo = -(n - v.size() + 1);
  const std::int64_t rhi = n - u.size() + 1;
  if (rlo > rhi) throw Error(Errc::window_exceeded, "words longer than the P+ window");
  return {rlo - d, rhi - d};
}

namespace {

void require_language(const SpacingShift& p, const Word& w, const char* name) {
  if (!word_in_language(p, w)) {
    throw Error(Errc::not_in_language, std::string(name) + " = " + w.to_string() + " is not a language word");
  }
}

void require_inside(const Window& full, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error(Errc::invalid_argument, "empty window");
  if (lo < full.lo || hi > full.hi) {
    throw Error(Errc::window_exceeded, "window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                           "] needs distances beyond N; largest is [" +
                                           std::to_string(full.lo) + ", " + std::to_string(full.hi) + "]");
  }
}

// Literal test for one placement offset r (U starts r after V starts).
bool placement_ok(const SpacingShift& p, const Word& u, const Word& v, const std::vector<std::int64_t>& u1,
                  const std::vector<std::int64_t>& v1, std::int64_t r) {
  const std::int64_t from = std::max<std::int64_t>(0, r);
  const std::int64_t to = std::min(v.size(), r + u.size());
  for (std::int64_t x = from; x < to; ++x) {
    if (v.at(x) != u.at(x - r)) return false;
  }
  for (const auto a : v1) {
    for (const auto b : u1) {
      if (!p.allows(r + b - a)) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> sorted_unique(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

WindowedSet shift_intersection(const SpacingShift& p, std::span<const std::int64_t> shifts, std::int64_t lo,
                               std::int64_t hi) {
  if (lo > hi) throw Error(Errc::invalid_argument, "empty window");
  WindowedSet out = WindowedSet::full(lo, hi);
  if (shifts.empty()) return out;
  const auto [kmin, kmax] = std::minmax_element(shifts.begin(), shifts.end());
  const std::int64_t n = p.max_distance();
  if (lo + *kmin < -n || hi + *kmax > n) {
    throw Error(Errc::window_exceeded, "shift intersection reaches beyond [-N, N]");
  }
  const WindowedSet full_p = p.p(-n, n);
  std::vector<WindowedSet::word_type> acc(out.words().begin(), out.words().end());
  for (const auto k : shifts) {
    const auto part = full_p.extract(lo + k, hi + k);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] &= part[i];
  }
  return WindowedSet::from_words(lo, hi, std::move(acc));
}

WindowedSet return_set(const SpacingShift& p, const Word& u, const Word& v, std::int64_t lo, std::int64_t hi) {
  require_language(p, u, "U");
  require_language(p, v, "V");
  require_inside(return_window(p, u, v), lo, hi);
  const std::int64_t d = u.base() - v.base();
  const auto u1 = u.ones();
  const auto v1 = v.ones();
  return WindowedSet::from_predicate(lo, hi, [&](std::int64_t n) { return placement_ok(p, u, v, u1, v1, n + d); });
}

NuvDecomposition nuv_decomposition(const SpacingShift& p, const Word& u, const Word& v) {
  require_language(p, u, "U");
  require_language(p, v, "V");
  const std::int64_t d = u.base() - v.base();
  const std::int64_t n = p.max_distance();
  const auto u1 = u.ones();
  const auto v1 = v.ones();

  std::vector<std::int64_t> cross;
  std::vector<std::int64_t> all;
  for (const auto a : v1) {
    for (const auto b : u1) cross.push_back(b - a);
  }
  // A 1 of U may not land on a 0 of V and vice versa.
  for (const auto b : u1) {
    for (std::int64_t q = 0; q < v.size(); ++q) all.push_back(b - q);
  }
  for (const auto a : v1) {
    for (std::int64_t x = 0; x < u.size(); ++x) all.push_back(x - a);
  }
  cross = sorted_unique(std::move(cross));
  all.insert(all.end(), cross.begin(), cross.end());
  all = sorted_unique(std::move(all));

  // A: U entirely right of V (r >= |V|), every cross distance r + k in P+.
  // B: U entirely left (r <= -|U|), every r + k in -P+.
  const std::int64_t a_lo = v.size();
  const std::int64_t a_hi = n - u.size() + 1;
  const std::int64_t b_lo = -(n - v.size() + 1);
  const std::int64_t b_hi = -u.size();
  if (a_lo > a_hi) throw Error(Errc::window_exceeded, "P+ window too short for these words");
  auto side = [&](std::int64_t lo, std::int64_t hi) { return shift_intersection(p, cross, lo, hi).shifted(-d); };

  NuvDecomposition out{
      .no_ones = !u.has_one() || !v.has_one(),
      .a = side(a_lo, a_hi),
      .b = side(b_lo, b_hi),
      .c_bound = u.size() + v.size(),
      .cross_shifts = {},
      .shifts = {},
  };
  for (const auto k : cross) out.cross_shifts.push_back(k + d);
  for (const auto k : all) out.shifts.push_back(k + d);
  return out;
}

NuvCheck nuv_check(const SpacingShift& p, const Word& u, const Word& v) {
  const Window w = return_window(p, u, v);
  const NuvDecomposition dec = nuv_decomposition(p, u, v);
  const WindowedSet oracle = return_set(p, u, v, w.lo, w.hi);
  const WindowedSet inner = shift_intersection(p, dec.shifts, w.lo, w.hi);
  NuvCheck out;
  auto note = [&](std::int64_t n) {
    if (!out.first_bad) out.first_bad = n;
  };
  for (std::int64_t n = w.lo; n <= w.hi; ++n) {
    const bool in_ab = dec.a.contains(n) || dec.b.contains(n);
    const bool in_n = oracle.contains(n);
    if (iabs(n) > dec.c_bound && in_ab != in_n) {
      ++out.outside_mismatches;
      note(n);
    }
    if (in_n && !in_ab) ++out.c_size;
    if (inner.contains(n) && !in_n) {
      ++out.containment_violations;
      note(n);
    }
  }
  return out;
}

// -- detectors -------------------------------------------------------------

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw Error(Errc::invalid_argument, "bad value for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return v;
}

std::map<std::string, std::int64_t, std::less<>> parse_params(std::string_view text) {
  std::map<std::string, std::int64_t, std::less<>> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(Errc::invalid_argument, "expected key=value, got '" + std::string(item) + "'");
    const std::string key(item.substr(0, eq));
    out[key] = parse_int(item.substr(eq + 1), key);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::int64_t take(const std::map<std::string, std::int64_t, std::less<>>& params, std::string_view key,
                  std::string_view detector, std::int64_t min) {
  const auto it = params.find(key);
  if (it == params.end()) {
    throw Error(Errc::invalid_argument, std::string(detector) + " needs " + std::string(key) + "=");
  }
  if (it->second < min) {
    throw Error(Errc::invalid_argument, std::string(key) + " must be >= " + std::to_string(min));
  }
  return it->second;
}

// Smallest |n| (positive first on ties) satisfying pred.
template <class Pred>
std::optional<std::int64_t> nearest(const WindowedSet& s, Pred&& pred) {
  const std::int64_t reach = std::max(iabs(s.lo()), iabs(s.hi()));
  for (std::int64_t m = 0; m <= reach; ++m) {
    for (const std::int64_t n : {m, -m}) {
      if (n >= s.lo() && n <= s.hi() && pred(n)) return n;
      if (m == 0) break;
    }
  }
  return std::nullopt;
}

// Start of the first run of at least len positions with membership == want.
std::optional<std::int64_t> first_run(const WindowedSet& s, std::int64_t len, bool want) {
  std::int64_t run = 0;
  for (std::int64_t n = s.lo(); n <= s.hi(); ++n) {
    run = s.contains(n) == want ? run + 1 : 0;
    if (run >= len) return n - len + 1;
  }
  return std::nullopt;
}

}  // namespace

Detector Detector::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const auto params = parse_params(colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1));
  Detector d;
  std::size_t expected = 0;
  if (name == "nonempty") {
    d.kind = DetectorKind::nonempty;
  } else if (name == "thick") {
    d.kind = DetectorKind::thick;
    d.L = take(params, "L", name, 1);
    expected = 1;
  } else if (name == "syndetic") {
    d.kind = DetectorKind::syndetic;
    d.g = take(params, "g", name, 1);
    expected = 1;
  } else if (name == "ps" || name == "ts") {
    d.kind = name == "ps" ? DetectorKind::piecewise_syndetic : DetectorKind::thickly_syndetic;
    d.g = take(params, "g", name, 1);
    d.L = take(params, "L", name, 1);
    expected = 2;
  } else if (name == "cofinite") {
    d.kind = DetectorKind::cofinite;
    d.n0 = take(params, "n0", name, 0);
    expected = 1;
  } else {
    throw Error(Errc::invalid_argument, "unknown detector '" + std::string(name) +
                                            "' (nonempty, thick, syndetic, ps, ts, cofinite)");
  }
  if (params.size() != expected) throw Error(Errc::invalid_argument, "unexpected parameters in '" + std::string(spec) + "'");
  return d;
}

std::string Detector::to_string() const {
  switch (kind) {
    case DetectorKind::nonempty: return "nonempty";
    case DetectorKind::thick: return "thick:L=" + std::to_string(L);
    case DetectorKind::syndetic: return "syndetic:g=" + std::to_string(g);
    case DetectorKind::piecewise_syndetic: return "ps:g=" + std::to_string(g) + ",L=" + std::to_string(L);
    case DetectorKind::thickly_syndetic: return "ts:g=" + std::to_string(g) + ",L=" + std::to_string(L);
    case DetectorKind::cofinite: return "cofinite:n0=" + std::to_string(n0);
  }
  return {};
}

Verdict Detector::evaluate(const WindowedSet& s) const {
  switch (kind) {
    case DetectorKind::nonempty: {
      const auto w = nearest(s, [&](std::int64_t n) { return s.contains(n); });
      return {w.has_value(), w};
    }
    case DetectorKind::thick: {
      const bool pass = is_thick_at(s, L);
      return {pass, pass ? first_run(s, L, true) : std::nullopt};
    }
    case DetectorKind::syndetic: {
      const bool pass = is_syndetic_at(s, g);
      return {pass, pass ? std::nullopt : first_run(s, g, false)};
    }
    case DetectorKind::piecewise_syndetic: return {is_piecewise_syndetic_at(s, g, L), std::nullopt};
    case DetectorKind::thickly_syndetic: return {is_thickly_syndetic_at(s, g, L), std::nullopt};
    case DetectorKind::cofinite: {
      const auto w = nearest(s, [&](std::int64_t n) { return iabs(n) > n0 && !s.contains(n); });
      return {!w.has_value(), w};
    }
  }
  return {};
}

// -- evidence --------------------------------------------------------------

std::size_t EvidenceReport::transitive_failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(), [](const PairEvidence& e) { return !e.transitive.pass; }));
}

std::size_t EvidenceReport::mixing_failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(), [](const PairEvidence& e) { return !e.mixing.pass; }));
}

namespace {

std::string verdict_text(const Verdict& v) {
  std::string out = v.pass ? "pass" : "FAIL";
  if (v.witness) out += "@" + std::to_string(*v.witness);
  return out;
}

}  // namespace

std::string EvidenceReport::to_text() const {
  std::ostringstream os;
  os << "detector " << detector.to_string() << " max_word_len " << max_word_len << " window [" << window.lo
     << ", " << window.hi << "]\n";
  for (const auto& e : pairs) {
    os << "U=" << e.u.to_string() << " V=" << e.v.to_string() << " transitive=" << verdict_text(e.transitive)
       << " mixing=" << verdict_text(e.mixing) << '\n';
  }
  os << "pairs " << pairs.size() << " transitive_failures " << transitive_failures() << " mixing_failures "
     << mixing_failures() << " verdict " << (all_pass() ? "pass" : "fail") << '\n';
  return os.str();
}

std::vector<EvidenceReport> mixing_evidence(const SpacingShift& p, std::span<const Detector> detectors,
                                            std::int64_t max_word_len, std::optional<Window> window,
                                            bool ones_only) {
  const std::vector<Word> words = language_words(p, max_word_len, ones_only);
  const std::int64_t reach = p.max_distance() - max_word_len + 1;
  const Window w = window.value_or(Window{-reach, reach});
  if (w.lo > w.hi) throw Error(Errc::invalid_argument, "empty window");
  if (w.lo < -reach || w.hi > reach) {
    throw Error(Errc::window_exceeded, "evidence window must lie in [" + std::to_string(-reach) + ", " +
                                           std::to_string(reach) + "]");
  }

  const std::size_t m = words.size();
  const std::size_t nd = detectors.size();
  // rows[i][j * nd + t]: pair (words[i], words[j]) under detector t.
  std::vector<std::vector<std::pair<Verdict, Verdict>>> rows(m);
  detail::parallel_for(m, [&](std::size_t i) {
    const Word& u = words[i];
    const WindowedSet self = return_set(p, u, u, w.lo, w.hi);
    auto& row = rows[i];
    row.reserve(m * nd);
    for (const Word& v : words) {
      const WindowedSet ret = return_set(p, u, v, w.lo, w.hi);
      const WindowedSet both = intersect(ret, self);
      for (const auto& d : detectors) row.emplace_back(d.evaluate(ret), d.evaluate(both));
    }
  });

  std::vector<EvidenceReport> out;
  out.reserve(nd);
  for (std::size_t t = 0; t < nd; ++t) {
    EvidenceReport report{.detector = detectors[t], .max_word_len = max_word_len, .window = w, .pairs = {}};
    report.pairs.reserve(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const auto& [tr, mx] = rows[i][j * nd + t];
        report.pairs.push_back({words[i], words[j], tr, mx});
      }
    }
    out.push_back(std::move(report));
  }
  return out;
}

EvidenceReport mixing_evidence(const SpacingShift& p, const Detector& detector, std::int64_t max_word_len,
                               std::optional<Window> window, bool ones_only) {
  return std::move(mixing_evidence(p, std::span<const Detector>(&detector, 1), max_word_len, window, ones_only).front());
}

}  // namespace hindlab

#include "hindlab/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hindlab/constructions.hpp"
#include "hindlab/covers.hpp"
#include "hindlab/error.hpp"
#include "hindlab/families.hpp"
#include "hindlab/spacing.hpp"

namespace hindlab {

bool SuiteResult::all_pass() const noexcept {
  return std::all_of(items.begin(), items.end(), [](const SuiteItem& i) { return i.pass; });
}

namespace {

using Rng = std::mt19937_64;

// Engine output only, so the streams do not depend on the standard library.
std::int64_t below(Rng& rng, std::int64_t n) { return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n)); }
std::int64_t between(Rng& rng, std::int64_t lo, std::int64_t hi) { return lo + below(rng, hi - lo + 1); }
bool chance(Rng& rng, std::int64_t num, std::int64_t den) { return below(rng, den) < num; }

WindowedSet random_set(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t permille) {
  return WindowedSet::from_predicate(lo, hi, [&](std::int64_t) { return chance(rng, permille, 1000); });
}

// Alternating runs with random lengths, so long runs of both kinds occur.
WindowedSet random_runs(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_run) {
  std::vector<std::int64_t> members;
  bool on = chance(rng, 1, 2);
  for (std::int64_t n = lo; n <= hi;) {
    const std::int64_t len = between(rng, 1, max_run);
    for (std::int64_t i = 0; i < len && n <= hi; ++i, ++n) {
      if (on) members.push_back(n);
    }
    on = !on;
  }
  return WindowedSet::from_members(lo, hi, members);
}

std::string count_detail(std::initializer_list<std::pair<const char*, std::int64_t>> fields) {
  std::string out;
  for (const auto& [k, v] : fields) out += (out.empty() ? "" : " ") + std::string(k) + "=" + std::to_string(v);
  return out;
}

// -- items -------------------------------------------------------------------

SuiteItem nuv_item(const SuiteConfig& c, const std::vector<WindowedSet>& sets) {
  std::int64_t pairs = 0;
  std::int64_t mismatches = 0;
  std::int64_t violations = 0;
  std::int64_t max_c = 0;
  for (const auto& s : sets) {
    const NuvSummary r = nuv_check_all(SpacingShift(s), c.nuv_max_len);
    pairs += r.pairs;
    mismatches += r.outside_mismatches;
    violations += r.containment_violations;
    max_c = std::max(max_c, r.max_c_size);
  }
  return {1, "nuv_decomposition_matches_return_sets", mismatches == 0 && violations == 0,
          count_detail({{"sets", static_cast<std::int64_t>(sets.size())},
                        {"pairs", pairs},
                        {"outside_mismatches", mismatches},
                        {"containment_violations", violations},
                        {"max_c_size", max_c}})};
}

SuiteItem identity_item(const std::vector<WindowedSet>& sets) {
  std::int64_t bad = 0;
  const Word one = Word::parse("1");
  for (const auto& s : sets) {
    const SpacingShift p(s);
    const std::int64_t n = p.max_distance();
    WindowedSet expected = p.p(-n, n);
    expected = unite(expected, WindowedSet::from_members(-n, n, {0}));
    if (!(return_set(p, one, one, -n, n) == expected)) ++bad;
  }
  return {2, "return_set_of_single_ones_is_P_with_zero", bad == 0,
          count_detail({{"sets", static_cast<std::int64_t>(sets.size())}, {"mismatches", bad}})};
}

SuiteItem mixing_item(const SuiteConfig& c) {
  const std::int64_t n = c.p_window;
  // Cofinite side: [11, N] and two variants with random bits below 11.
  Rng rng(c.seed ^ 0x3);
  std::int64_t cofinite_fail_pairs = 0;
  std::int64_t cofinite_sets = 0;
  for (int variant = 0; variant < 3; ++variant) {
    WindowedSet p_plus = WindowedSet::from_predicate(1, n, [&](std::int64_t x) {
      return x >= 11 || (variant > 0 && chance(rng, 1, 2));
    });
    const auto r = mixing_evidence(SpacingShift(p_plus), Detector::parse("cofinite:n0=30"), c.mixing_max_len);
    cofinite_fail_pairs += static_cast<std::int64_t>(r.mixing_failures());
    ++cofinite_sets;
  }
  // Alternating blocks: thick, not cofinite.
  const BlockSchedule linear{};
  const WindowedSet alt = alternating_thick(1, n, linear);
  std::int64_t largest_zero_block = 0;
  {
    std::int64_t run = 0;
    for (std::int64_t x = 1; x <= n; ++x) {
      run = alt.contains(x) ? 0 : run + 1;
      if (x < n && run > largest_zero_block && alt.contains(x + 1)) largest_zero_block = run;
    }
  }
  std::vector<Detector> detectors{Detector::parse("nonempty")};
  for (std::int64_t n0 = 0; n0 <= largest_zero_block; ++n0) {
    detectors.push_back(Detector{.kind = DetectorKind::cofinite, .n0 = n0});
  }
  const auto reports = mixing_evidence(SpacingShift(alt), detectors, c.mixing_max_len);
  const bool nonempty_ok = reports.front().all_pass();
  std::int64_t cofinite_passes = 0;
  for (std::size_t i = 1; i < reports.size(); ++i) {
    if (reports[i].mixing_failures() == 0) ++cofinite_passes;
  }
  const bool pass = cofinite_fail_pairs == 0 && nonempty_ok && cofinite_passes == 0;
  return {3, "mixing_iff_cofinite_at_scale", pass,
          count_detail({{"cofinite_sets", cofinite_sets},
                        {"cofinite_failing_pairs", cofinite_fail_pairs},
                        {"thick_nonempty_pass", nonempty_ok ? 1 : 0},
                        {"largest_zero_block", largest_zero_block},
                        {"cofinite_thresholds_passing", cofinite_passes}})};
}

SuiteItem squares_item(const SuiteConfig& c) {
  const WindowedSet e = squares_family(1, c.squares_bound, false);
  const auto three = find_delta_subset(e, 3, 100);
  const auto four = find_delta_subset(e, 4, c.squares_bound);
  const bool ok3 = three && *three == std::vector<std::int64_t>{1, 10, 26};
  std::string detail = "order3=";
  if (three) {
    for (std::size_t i = 0; i < three->size(); ++i) detail += (i ? "," : "") + std::to_string((*three)[i]);
  } else {
    detail += "none";
  }
  detail += " order4_up_to_" + std::to_string(c.squares_bound) + "=" + (four ? "found" : "none");
  return {4, "squares_delta_structure", ok3 && !four, detail};
}

SuiteItem progressive_item() {
  const auto b = rapid_growth_B(6, 1);
  const bool rapid = has_progressive_gaps(delta_of(b)).has_value();
  const std::vector<std::int64_t> arithmetic{1, 2, 3, 4, 5, 6};
  const bool arith = has_progressive_gaps(delta_minus_delta_of(arithmetic)).has_value();
  const PdelReport pdel = pdel_obstruction_check(rapid_growth_B(5, 1), 1'000'000);
  const bool pass = rapid && !arith && pdel.counterexamples == 0 && pdel.exhaustive;
  return {5, "progressive_gaps_and_obstruction", pass,
          count_detail({{"rapid_delta_progressive", rapid ? 1 : 0},
                        {"arithmetic_dd_progressive", arith ? 1 : 0},
                        {"pdel_pairs", pdel.pairs_checked},
                        {"pdel_counterexamples", pdel.counterexamples},
                        {"pdel_exhaustive", pdel.exhaustive ? 1 : 0}})};
}

// Sparse generators on [0, 2000]; S is dense noise plus, half the time, every
// shift of one generator, so both verdicts occur.
SuiteItem family_item(const SuiteConfig& c) {
  Rng rng(c.seed ^ 0x6);
  constexpr std::int64_t lo = 0;
  constexpr std::int64_t hi = 2000;
  constexpr std::int64_t k = 3;
  std::int64_t implication_violations = 0;
  std::int64_t filter_violations = 0;
  std::int64_t filters = 0;
  std::int64_t tau_true = 0;
  std::int64_t bullet_true = 0;
  for (std::int64_t t = 0; t < c.family_trials; ++t) {
    const bool make_filter = t % 2 == 0;
    auto sparse = [&](std::int64_t size) {
      std::vector<std::int64_t> m;
      for (std::int64_t j = 0; j < size; ++j) m.push_back(between(rng, lo + 10, hi - 10));
      return WindowedSet::from_members(lo, hi, m);
    };
    std::vector<WindowedSet> gens;
    if (make_filter) {
      // Two generators over a shared core plus their meet: closed under meets.
      const WindowedSet core = sparse(between(rng, 2, 6));
      gens.push_back(unite(core, sparse(between(rng, 1, 6))));
      gens.push_back(unite(core, sparse(between(rng, 1, 6))));
      gens.push_back(intersect(gens[0], gens[1]));
    } else {
      const std::int64_t count = between(rng, 1, 4);
      for (std::int64_t i = 0; i < count; ++i) gens.push_back(sparse(between(rng, 3, 12)));
    }
    const GeneratedFamily f(gens, k, 3);
    WindowedSet s = random_set(rng, lo, hi, between(rng, 900, 995));
    const std::int64_t mode = below(rng, 3);
    const auto pick = [&] { return gens[static_cast<std::size_t>(below(rng, static_cast<std::int64_t>(gens.size())))]; };
    const WindowedSet fixed = pick();
    for (std::int64_t shift = -k; shift <= k && mode > 0; ++shift) {
      const WindowedSet g = mode == 1 ? fixed : pick();
      s = unite(s, g.shifted(shift).restricted(lo, hi));
    }
    const bool tau = tau_member(f, s);
    const bool bullet = family_bullet_member(f, s);
    tau_true += tau;
    bullet_true += bullet;
    if (tau && !bullet) ++implication_violations;
    if (is_filter(f)) {
      ++filters;
      if (tau != bullet) ++filter_violations;
    }
  }
  return {6, "tau_implies_bullet_with_equality_on_filters", implication_violations == 0 && filter_violations == 0,
          count_detail({{"families", c.family_trials},
                        {"filters", filters},
                        {"tau_true", tau_true},
                        {"bullet_true", bullet_true},
                        {"implication_violations", implication_violations},
                        {"filter_violations", filter_violations}})};
}

SuiteItem duality_item(const SuiteConfig& c) {
  Rng rng(c.seed ^ 0x7);
  std::int64_t bad = 0;
  for (std::int64_t t = 0; t < c.duality_trials; ++t) {
    const std::int64_t lo = between(rng, -500, 500);
    const std::int64_t hi = lo + between(rng, 0, 600);
    const WindowedSet s = t % 2 == 0 ? random_set(rng, lo, hi, between(rng, 20, 980))
                                     : random_runs(rng, lo, hi, between(rng, 1, 40));
    const std::int64_t g = between(rng, 1, 30);
    const std::int64_t L = between(rng, 1, 120);
    const WindowedSet sc = s.complement();
    if (is_syndetic_at(s, g) != !is_thick_at(sc, g)) ++bad;
    if (is_thickly_syndetic_at(s, g, L) != !is_piecewise_syndetic_at(sc, g, L)) ++bad;
  }
  return {7, "windowed_dualities", bad == 0, count_detail({{"sets", c.duality_trials}, {"violations", bad}})};
}

SuiteItem cover_item() {
  const SpacingShift full = SpacingShift::full(64);
  const std::vector<std::int64_t> times{0, 1, 2, 3, 4, 5, 6, 7};
  const auto partition = complexity_profile(full, ClopenCover::partition(full, 1), times, 5);
  const ClopenCover two = ClopenCover::canonical_two_cover();
  const auto growth = complexity_profile(full, two, times, 8);
  const bool p_ok = partition.values == std::vector<std::int64_t>{2, 4, 8, 16, 32};
  const bool pass = p_ok && two.nontrivial(full) && growth.strictly_increasing;
  std::string detail = "partition=";
  for (std::size_t i = 0; i < partition.values.size(); ++i) detail += (i ? "," : "") + std::to_string(partition.values[i]);
  detail += " two_cover=";
  for (std::size_t i = 0; i < growth.values.size(); ++i) detail += (i ? "," : "") + std::to_string(growth.values[i]);
  return {8, "cover_complexity_profiles", pass, detail};
}

SuiteItem block_item(const SuiteConfig& c) {
  Rng rng(c.seed ^ 0x9);
  std::int64_t self_failures = 0;
  for (std::int64_t t = 0; t < c.block_trials; ++t) {
    const WindowedSet f = random_set(rng, 0, between(rng, 20, 300), between(rng, 100, 900));
    if (!block_embeds(f, f, 12, 4)) ++self_failures;
  }
  const WindowedSet evens = WindowedSet::from_predicate(0, 200, [](std::int64_t x) { return x % 2 == 0; });
  const WindowedSet pair = WindowedSet::from_members(0, 1, {0, 1});
  const bool evens_rejects = !block_embeds(evens, pair, 1, 2);
  std::int64_t cross_mismatches = 0;
  for (std::int64_t t = 0; t < c.block_cross_checks; ++t) {
    const WindowedSet f = random_runs(rng, 0, between(rng, 30, 400), between(rng, 2, 14));
    const std::int64_t L = between(rng, 1, 10);
    const WindowedSet interval = WindowedSet::full(0, L - 1);
    if (block_embeds(f, interval, std::max<std::int64_t>(L - 1, 1), L) != is_thick_at(f, L)) ++cross_mismatches;
  }
  return {9, "block_embedding", self_failures == 0 && evens_rejects && cross_mismatches == 0,
          count_detail({{"self_trials", c.block_trials},
                        {"self_failures", self_failures},
                        {"evens_rejects_pair", evens_rejects ? 1 : 0},
                        {"interval_cross_checks", c.block_cross_checks},
                        {"interval_mismatches", cross_mismatches}})};
}

}  // namespace

std::vector<WindowedSet> suite_spacing_sets(const SuiteConfig& config) {
  Rng rng(config.seed ^ 0x1);
  const std::int64_t n = config.p_window;
  std::vector<WindowedSet> out;
  for (std::int64_t i = 0; i < config.random_p; ++i) {
    const std::int64_t permille = config.random_p == 1 ? 500 : 100 + 800 * i / (config.random_p - 1);
    out.push_back(random_set(rng, 1, n, permille));
  }
  out.push_back(squares_family(1, n, true));
  out.push_back(WindowedSet::from_predicate(1, n, [](std::int64_t x) { return x % 2 == 0; }));
  out.push_back(alternating_thick(1, n, BlockSchedule{}));
  out.push_back(WindowedSet::full(1, n));
  return out;
}

SuiteResult run_paper_suite(const SuiteConfig& config, const std::function<void(const SuiteItem&)>& on_item) {
  SuiteResult result;
  const auto sets = suite_spacing_sets(config);
  auto timed = [&](auto&& run) {
    const auto start = std::chrono::steady_clock::now();
    SuiteItem item;
    try {
      item = run();
    } catch (const Error& e) {
      item.pass = false;
      item.detail = std::string("error ") + e.what();
    }
    item.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.items.push_back(item);
    if (on_item) on_item(result.items.back());
  };
  timed([&] { return nuv_item(config, sets); });
  timed([&] { return identity_item(sets); });
  timed([&] { return mixing_item(config); });
  timed([&] { return squares_item(config); });
  timed([] { return progressive_item(); });
  timed([&] { return family_item(config); });
  timed([&] { return duality_item(config); });
  timed([] { return cover_item(); });
  timed([&] { return block_item(config); });
  return result;
}

std::string render(const SuiteResult& r, Format f) {
  if (f == Format::structured) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& i : r.items) {
      items.push_back({{"id", i.id}, {"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
    }
    return nlohmann::json{{"items", items}, {"verdict", r.all_pass() ? "pass" : "fail"}}.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& i : r.items) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", i.seconds);
    os << (i.pass ? "PASS " : "FAIL ") << i.id << ' ' << i.name << " (" << secs << ") " << i.detail << '\n';
  }
  os << (r.all_pass() ? "all items pass" : "some items FAIL") << '\n';
  return os.str();
}

}  // namespace hindlab

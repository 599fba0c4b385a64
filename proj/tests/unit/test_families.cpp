#include "hindlab/constructions.hpp"
#include "hindlab/error.hpp"
#include "hindlab/families.hpp"

#include <doctest.h>

#include <functional>
#include <random>

#include "oracles.hpp"

using hindlab::WindowedSet;
using Seq = std::vector<std::int64_t>;

namespace {

// Lexicographically least increasing m-tuple in [1, bound] satisfying `ok`,
// by plain enumeration.
std::optional<Seq> least_tuple(std::int64_t m, std::int64_t bound, const std::function<bool(const Seq&)>& ok) {
  Seq cur;
  std::function<bool(std::int64_t)> go = [&](std::int64_t from) -> bool {
    if (static_cast<std::int64_t>(cur.size()) == m) return ok(cur);
    for (std::int64_t x = from; x <= bound; ++x) {
      cur.push_back(x);
      if (go(x + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  if (go(1)) return cur;
  return std::nullopt;
}

bool diffs_in(const oracle::Set& s, const Seq& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (!s.count(seq[j] - seq[i])) return false;
    }
  }
  return true;
}

bool delta_delta_in(const oracle::Set& s, const Seq& seq) {
  if (!diffs_in(s, seq)) return false;
  const auto d = oracle::differences(oracle::Set(seq.begin(), seq.end()));
  for (const auto a : d) {
    for (const auto b : d) {
      if (a > b && !s.count(a - b)) return false;
    }
  }
  return true;
}

// All chunkings of a sorted list, checked literally.
bool progressive_exists(const Seq& a) {
  const std::size_t n = a.size();
  for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
    hindlab::ChunkDecomposition d;
    d.chunks.push_back({a[0]});
    for (std::size_t i = 1; i < n; ++i) {
      if (cuts >> (i - 1) & 1) {
        d.separators.push_back(a[i] - a[i - 1]);
        d.chunks.push_back({});
      }
      d.chunks.back().push_back(a[i]);
    }
    bool good = true;
    for (const auto& c : d.chunks) {
      for (std::size_t i = 1; i < c.size(); ++i) {
        if (!(c[i] - c[i - 1] > c.back() - c[i])) good = false;
      }
    }
    for (std::size_t i = 1; i < d.separators.size(); ++i) {
      if (d.separators[i] <= d.separators[i - 1]) good = false;
    }
    if (good) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("run detectors agree with the literal definitions") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t lo = static_cast<std::int64_t>(rng() % 40) - 20;
    const auto s = oracle::random_set(rng, lo, lo + static_cast<std::int64_t>(rng() % 120), 0.1 + 0.8 * (trial % 9) / 8.0);
    const std::int64_t g = 1 + static_cast<std::int64_t>(rng() % 8);
    const std::int64_t L = 1 + static_cast<std::int64_t>(rng() % 60);
    CHECK(hindlab::is_thick_at(s, g) == oracle::thick(s, g));
    CHECK(hindlab::is_syndetic_at(s, g) == oracle::syndetic(s, g));
    CHECK(hindlab::is_piecewise_syndetic_at(s, g, L) == oracle::piecewise_syndetic(s, g, L));
    CHECK(hindlab::is_thickly_syndetic_at(s, g, L) == !oracle::piecewise_syndetic(s.complement(), g, L));
  }
}

TEST_CASE("detector edge cases") {
  const auto s = WindowedSet::from_members(0, 9, {3, 4, 5});
  CHECK(hindlab::is_thick_at(s, 3));
  CHECK_FALSE(hindlab::is_thick_at(s, 4));
  CHECK_FALSE(hindlab::is_thick_at(WindowedSet::full(0, 9), 11));
  // Absent runs at both window ends count.
  CHECK(hindlab::is_syndetic_at(s, 5));
  CHECK_FALSE(hindlab::is_syndetic_at(s, 4));
  CHECK_FALSE(hindlab::is_piecewise_syndetic_at(s, 1, 11));
  CHECK_THROWS_AS((void)hindlab::is_thick_at(s, 0), hindlab::Error);

  const auto c = WindowedSet::from_predicate(-20, 20, [](std::int64_t n) { return n < -3 || n > 5; });
  CHECK(hindlab::is_cofinite_at(c, 5));
  CHECK_FALSE(hindlab::is_cofinite_at(c, 4));
  CHECK(hindlab::is_cofinite_at(WindowedSet(-3, 3), 3));
}

TEST_CASE("Delta subsets: least witness by enumeration") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = oracle::random_set(rng, 0, 60, 0.35);
    const auto m = oracle::members(s);
    const std::int64_t order = 2 + trial % 3;
    const std::int64_t bound = 25 + trial % 20;
    const auto got = hindlab::find_delta_subset(s, order, bound);
    const auto want = least_tuple(order, bound, [&](const Seq& q) { return diffs_in(m, q); });
    CHECK(got == want);

    const auto got2 = hindlab::find_delta_delta_subset(s, order, bound);
    const auto want2 = least_tuple(order, bound, [&](const Seq& q) { return delta_delta_in(m, q); });
    CHECK(got2 == want2);
  }
}

TEST_CASE("Delta subsets of the squares") {
  const auto sq = hindlab::squares_family(1, 2000, false);
  CHECK(hindlab::find_delta_subset(sq, 3, 100) == Seq{1, 10, 26});
  const auto want = least_tuple(3, 100, [&](const Seq& q) { return diffs_in(oracle::members(sq), q); });
  CHECK(want == Seq{1, 10, 26});
  CHECK_FALSE(hindlab::find_delta_subset(sq, 4, 1000).has_value());
  CHECK_THROWS_AS((void)hindlab::find_delta_subset(sq, 3, 2001), hindlab::Error);
  CHECK_THROWS_AS((void)hindlab::find_delta_subset(sq, 1, 10), hindlab::Error);
}

TEST_CASE("IP subsets: least witness by enumeration") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = oracle::random_set(rng, 0, 80, 0.45);
    const auto m = oracle::members(s);
    const std::int64_t k = 1 + trial % 3;
    const std::int64_t bound = 30 + trial % 25;
    // Nondecreasing tuples with sum <= bound, lexicographic.
    std::optional<Seq> want;
    Seq cur;
    std::function<bool(std::int64_t, std::int64_t)> go = [&](std::int64_t from, std::int64_t total) -> bool {
      if (static_cast<std::int64_t>(cur.size()) == k) {
        const auto fs = oracle::finite_sums(cur);
        return std::all_of(fs.begin(), fs.end(), [&](std::int64_t x) { return m.count(x) > 0; });
      }
      for (std::int64_t x = from; total + x <= bound; ++x) {
        cur.push_back(x);
        if (go(x, total + x)) return true;
        cur.pop_back();
      }
      return false;
    };
    if (go(1, 0)) want = cur;
    CHECK(hindlab::find_ip_subset(s, k, bound) == want);
  }
  const auto evens = WindowedSet::from_predicate(0, 100, [](std::int64_t n) { return n % 2 == 0; });
  CHECK(hindlab::find_ip_subset(evens, 3, 100) == Seq{2, 2, 2});
}

TEST_CASE("progressive gaps: existence matches exhaustive chunking") {
  std::mt19937_64 rng(34);
  int found = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    Seq a;
    std::int64_t x = 0;
    for (std::size_t i = 0; i < n; ++i) {
      x += 1 + static_cast<std::int64_t>(rng() % (trial % 2 ? 40 : 8));
      a.push_back(x);
    }
    const auto s = WindowedSet::from_members(0, x, a);
    const auto d = hindlab::has_progressive_gaps(s);
    CHECK(d.has_value() == progressive_exists(a));
    if (d) {
      ++found;
      CHECK(hindlab::is_progressive_decomposition(*d));
      Seq flat;
      for (const auto& c : d->chunks) flat.insert(flat.end(), c.begin(), c.end());
      CHECK(flat == a);
    }
  }
  CHECK(found > 20);
  CHECK_THROWS_AS((void)hindlab::has_progressive_gaps(WindowedSet::from_members(0, 5, {3})), hindlab::Error);
}

TEST_CASE("progressive gaps of a rapidly growing Delta set") {
  const Seq b{1, 5, 25, 125};
  const auto d = hindlab::has_progressive_gaps(hindlab::delta_of(b));
  REQUIRE(d.has_value());
  CHECK(d->chunks == std::vector<Seq>{{4}, {20, 24}, {100, 120, 124}});
  CHECK(d->separators == Seq{16, 76});

  hindlab::ChunkDecomposition bad{{{1, 2, 10}}, {}};
  CHECK_FALSE(hindlab::is_progressive_decomposition(bad));
  hindlab::ChunkDecomposition bad_sep{{{1}, {5}, {8}}, {4, 3}};
  CHECK_FALSE(hindlab::is_progressive_decomposition(bad_sep));
}

namespace {

bool gen_inside_shifted(const WindowedSet& g, const WindowedSet& s, std::int64_t lo, std::int64_t hi, std::int64_t k) {
  for (std::int64_t m = lo; m <= hi; ++m) {
    if (g.contains(m) && !s.contains(m + k)) return false;
  }
  return true;
}

bool naive_contains(const std::vector<WindowedSet>& gens, const WindowedSet& s, std::int64_t lo, std::int64_t hi) {
  return std::any_of(gens.begin(), gens.end(), [&](const WindowedSet& g) { return gen_inside_shifted(g, s, lo, hi, 0); });
}

bool naive_bullet(const std::vector<WindowedSet>& gens, std::int64_t K, const WindowedSet& s) {
  const std::int64_t lo = gens[0].lo() + K;
  const std::int64_t hi = gens[0].hi() - K;
  for (std::int64_t k = -K; k <= K; ++k) {
    if (!std::any_of(gens.begin(), gens.end(),
                     [&](const WindowedSet& g) { return gen_inside_shifted(g, s, lo, hi, k); })) {
      return false;
    }
  }
  return true;
}

bool naive_tau(const std::vector<WindowedSet>& gens, std::int64_t K, std::int64_t cap, const WindowedSet& s) {
  const std::int64_t lo = gens[0].lo() + K;
  const std::int64_t hi = gens[0].hi() - K;
  const std::int64_t width = 2 * K + 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << width); ++mask) {
    if (std::popcount(mask) > cap) continue;
    const auto meet = WindowedSet::from_predicate(lo, hi, [&](std::int64_t m) {
      for (std::int64_t i = 0; i < width; ++i) {
        if ((mask >> i & 1) && !s.contains(m + i - K)) return false;
      }
      return true;
    });
    if (!naive_contains(gens, meet, lo, hi)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("family operators agree with the literal definitions") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 80; ++trial) {
    const std::int64_t K = 1 + trial % 3;
    const std::int64_t cap = 1 + trial % 4;
    std::vector<WindowedSet> gens;
    const auto core = oracle::random_set(rng, 0, 40, 0.15);
    for (std::size_t i = 0; i < 1 + rng() % 3; ++i) {
      gens.push_back(hindlab::unite(core, oracle::random_set(rng, 0, 40, 0.1)));
    }
    const hindlab::GeneratedFamily f(gens, K, cap);
    for (int probe = 0; probe < 6; ++probe) {
      auto s = oracle::random_set(rng, -5, 45, 0.85);
      if (probe % 2) {
        // Force some structure: a union of shifts of one generator.
        const auto& g = gens[rng() % gens.size()];
        for (std::int64_t k = -K; k <= K; ++k) s = hindlab::unite(s, g.shifted(-k).restricted(-5, 45));
      }
      CHECK(f.contains(s) == naive_contains(gens, s, 0, 40));
      CHECK(hindlab::family_bullet_member(f, s) == naive_bullet(gens, K, s));
      CHECK(hindlab::tau_member(f, s) == naive_tau(gens, K, cap, s));

      const auto plus = hindlab::family_plus(f);
      bool want_plus = false;
      for (const auto& g : gens) {
        for (std::int64_t k = -K; k <= K; ++k) {
          want_plus = want_plus || gen_inside_shifted(g.shifted(k).restricted(K, 40 - K), s, K, 40 - K, 0);
        }
      }
      CHECK(plus.contains(s) == want_plus);
    }
    bool filter = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        filter = filter && naive_contains(gens, hindlab::intersect(gens[i], gens[j]), 0, 40);
      }
    }
    CHECK(hindlab::is_filter(f) == filter);
  }
  const WindowedSet g(0, 5);
  CHECK_THROWS_AS(hindlab::GeneratedFamily({g, WindowedSet(0, 6)}, 1, 2), hindlab::Error);
  CHECK_THROWS_AS((void)hindlab::family_bullet_member(hindlab::GeneratedFamily({g}, 3, 2), g), hindlab::Error);
}

namespace {

bool naive_block(const WindowedSet& f, const WindowedSet& fp, std::int64_t span, std::int64_t count) {
  const auto pts = fp.members();
  const std::size_t n = pts.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) > count) continue;
    Seq w;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) w.push_back(pts[i]);
    }
    if (w.back() - w.front() > span) continue;
    bool hit = false;
    for (std::int64_t m = f.lo() - w.front(); m <= f.hi() - w.front() && !hit; ++m) {
      hit = std::all_of(w.begin(), w.end(), [&](std::int64_t x) { return f.contains(m + x); });
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("block embedding") {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = oracle::random_set(rng, 0, 60, 0.6);
    const auto fp = oracle::random_set(rng, 0, 14, 0.5);
    if (fp.empty()) continue;
    const std::int64_t span = 3 + trial % 10;
    const std::int64_t count = 1 + trial % 5;
    CHECK(hindlab::block_embeds(f, fp, span, count) == naive_block(f, fp, span, count));
    CHECK(hindlab::block_embeds(f, f, span, count));
  }
  const auto evens = WindowedSet::from_predicate(0, 200, [](std::int64_t n) { return n % 2 == 0; });
  CHECK_FALSE(hindlab::block_embeds(evens, WindowedSet::full(0, 1), 1, 2));
  for (std::int64_t L = 2; L <= 12; ++L) {
    const auto f = oracle::random_set(rng, 0, 150, 0.75);
    CHECK(hindlab::block_embeds(f, WindowedSet::full(0, L - 1), L - 1, L) == hindlab::is_thick_at(f, L));
  }
}

TEST_CASE("scale validation") {
  hindlab::ScaleParams p;
  CHECK_NOTHROW(p.validate(100));
  CHECK_THROWS_AS(p.validate(99), hindlab::Error);
  p.thick_L = 0;
  CHECK_THROWS_AS(p.validate(1000), hindlab::Error);
}

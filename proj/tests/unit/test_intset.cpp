#include "hindlab/error.hpp"
#include "hindlab/intset.hpp"

#include <doctest.h>

#include <random>

#include "oracles.hpp"

using hindlab::Errc;
using hindlab::Error;
using hindlab::Ratio;
using hindlab::WindowedSet;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected hindlab::Error");
  return Errc::invalid_argument;
}

}  // namespace

TEST_CASE("membership and window basics") {
  const auto s = WindowedSet::from_members(-3, 70, {-3, 0, 63, 64, 70});
  CHECK(s.size() == 74);
  CHECK(s.count() == 5);
  CHECK(s.contains(-3));
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(-4));
  CHECK_FALSE(s.contains(71));
  CHECK(s.first() == -3);
  CHECK(s.last() == 70);
  CHECK(s.next_member(1) == 63);
  CHECK_FALSE(s.next_member(71).has_value());
  CHECK(s.members() == std::vector<std::int64_t>{-3, 0, 63, 64, 70});

  CHECK(code_of([] { (void)WindowedSet(5, 4); }) == Errc::invalid_argument);
  CHECK(code_of([] { (void)WindowedSet::from_members(0, 3, {4}); }) == Errc::invalid_argument);

  const WindowedSet e(0, 9);
  CHECK(e.empty());
  CHECK_FALSE(e.first().has_value());
  CHECK(WindowedSet::full(0, 129).count() == 130);
}

TEST_CASE("unary operations match the oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::int64_t lo = static_cast<std::int64_t>(rng() % 200) - 100;
    const std::int64_t hi = lo + static_cast<std::int64_t>(rng() % 300);
    const auto s = oracle::random_set(rng, lo, hi, 0.3);
    const auto m = oracle::members(s);
    const std::int64_t k = static_cast<std::int64_t>(rng() % 150) - 75;

    oracle::Set shifted;
    for (const auto x : m) shifted.insert(x + k);
    const auto sh = s.shifted(k);
    CHECK(sh.lo() == lo + k);
    CHECK(oracle::members(sh) == shifted);

    oracle::Set refl;
    for (const auto x : m) refl.insert(-x);
    CHECK(oracle::members(s.reflected()) == refl);
    CHECK(s.reflected().lo() == -hi);

    oracle::Set comp;
    for (std::int64_t n = lo; n <= hi; ++n) {
      if (!m.count(n)) comp.insert(n);
    }
    CHECK(oracle::members(s.complement()) == comp);

    const std::int64_t rlo = lo - 7 + static_cast<std::int64_t>(rng() % 20);
    const std::int64_t rhi = rlo + static_cast<std::int64_t>(rng() % 200);
    oracle::Set restricted;
    for (const auto x : m) {
      if (x >= rlo && x <= rhi) restricted.insert(x);
    }
    CHECK(oracle::members(s.restricted(rlo, rhi)) == restricted);

    for (int probe = 0; probe < 5; ++probe) {
      const std::int64_t n = lo - 70 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 140));
      const auto bits = s.bits_at(n);
      for (int j = 0; j < 64; ++j) CHECK(((bits >> j) & 1) == (m.count(n + j) ? 1u : 0u));
    }
  }
}

TEST_CASE("boolean algebra on overlapping windows") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = oracle::random_set(rng, 0, 150, 0.5);
    const std::int64_t off = static_cast<std::int64_t>(rng() % 120);
    const auto b = oracle::random_set(rng, off, off + 100, 0.5);
    const auto ma = oracle::members(a);
    const auto mb = oracle::members(b);
    oracle::Set both;
    oracle::Set either;
    bool subset = true;
    for (std::int64_t n = off; n <= std::min<std::int64_t>(150, off + 100); ++n) {
      if (ma.count(n) && mb.count(n)) both.insert(n);
      if (ma.count(n) || mb.count(n)) either.insert(n);
      if (ma.count(n) && !mb.count(n)) subset = false;
    }
    const auto i = hindlab::intersect(a, b);
    CHECK(i.lo() == off);
    CHECK(oracle::members(i) == both);
    CHECK(oracle::members(hindlab::unite(a, b)) == either);
    CHECK(hindlab::is_subset(a, b) == subset);
    CHECK(std::get<bool>(hindlab::boolean(hindlab::BoolOp::subset_of, a, &b)) == subset);
    CHECK(std::get<WindowedSet>(hindlab::boolean(hindlab::BoolOp::intersect, a, &b)) == i);
  }
  const WindowedSet x(0, 5);
  const WindowedSet y(6, 9);
  CHECK(code_of([&] { (void)hindlab::intersect(x, y); }) == Errc::disjoint_windows);
  CHECK(code_of([&] { (void)hindlab::boolean(hindlab::BoolOp::unite, x); }) == Errc::invalid_argument);
  CHECK(std::get<WindowedSet>(hindlab::boolean(hindlab::BoolOp::complement, x)) == WindowedSet::full(0, 5));
}

TEST_CASE("difference and minus sets") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t lo = static_cast<std::int64_t>(rng() % 50) - 25;
    const auto s = oracle::random_set(rng, lo, lo + 20 + static_cast<std::int64_t>(rng() % 250), 0.15);
    if (s.empty()) continue;
    const auto d = hindlab::difference_set(s);
    CHECK(d.lo() == 1);
    CHECK(oracle::members(d) == oracle::differences(oracle::members(s)));

    const auto t = oracle::random_set(rng, -30, 40, 0.2);
    oracle::Set diff;
    for (const auto a : oracle::members(s)) {
      for (const auto b : oracle::members(t)) diff.insert(a - b);
    }
    const auto ms = hindlab::minus_set(s, t);
    CHECK(ms.lo() == s.lo() - 40);
    CHECK(ms.hi() == s.hi() + 30);
    CHECK(oracle::members(ms) == diff);
  }
  const auto sq = WindowedSet::from_members(1, 30, {1, 4, 9, 16, 25});
  CHECK(hindlab::difference_set(sq).members() ==
        std::vector<std::int64_t>{3, 5, 7, 8, 9, 12, 15, 16, 21, 24});
  CHECK(hindlab::difference_set(WindowedSet::from_members(0, 0, {0})).empty());
  CHECK(code_of([] { (void)hindlab::difference_set(WindowedSet(0, 10)); }) == Errc::empty_set);
}

TEST_CASE("symmetric closure") {
  const auto s = WindowedSet::from_members(-2, 9, {-2, 3, 9});
  const auto c = hindlab::symmetric_closure(s);
  CHECK(c.lo() == -9);
  CHECK(c.hi() == 9);
  CHECK(c.symmetric());
  CHECK(c.members() == std::vector<std::int64_t>{-9, -3, -2, 2, 3, 9});
  CHECK(c.is_symmetric_on_window());
  CHECK(code_of([&] { (void)s.marked_symmetric(); }) == Errc::invalid_argument);
  CHECK(c.marked_symmetric() == c);
}

TEST_CASE("finite sums") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::int64_t> gens(1 + rng() % 8);
    for (auto& g : gens) g = 1 + static_cast<std::int64_t>(rng() % 40);
    const auto fs = hindlab::finite_sums(gens);
    const auto expect = oracle::finite_sums(gens);
    CHECK(fs.lo() == *std::min_element(gens.begin(), gens.end()));
    CHECK(fs.hi() == *expect.rbegin());
    CHECK(oracle::members(fs) == expect);
  }
  const std::vector<std::int64_t> three{1, 2, 4};
  CHECK(hindlab::finite_sums(three) == WindowedSet::full(1, 7));
  CHECK(code_of([&] { (void)hindlab::finite_sums(three, 2); }) == Errc::arity_cap_exceeded);
  const std::vector<std::int64_t> bad{3, 0};
  CHECK(code_of([&] { (void)hindlab::finite_sums(bad); }) == Errc::invalid_argument);
}

TEST_CASE("density profile matches brute force") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = oracle::random_set(rng, -10, 10 + static_cast<std::int64_t>(rng() % 150), 0.4);
    const std::vector<std::int64_t> lengths{1, 3, 17, s.size()};
    const auto prof = hindlab::density_profile(s, lengths);
    REQUIRE(prof.window_lengths == lengths);
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      const std::int64_t w = lengths[i];
      std::int64_t best = -1;
      std::int64_t worst = w + 1;
      for (std::int64_t a = s.lo(); a + w - 1 <= s.hi(); ++a) {
        std::int64_t c = 0;
        for (std::int64_t n = a; n < a + w; ++n) c += s.contains(n);
        best = std::max(best, c);
        worst = std::min(worst, c);
      }
      CHECK(prof.max_density[i] == Ratio(best, w));
      CHECK(prof.min_density[i] == Ratio(worst, w));
    }
    CHECK(prof.upper_estimate == prof.max_density.back());
    CHECK(prof.lower_estimate == prof.min_density.back());
  }
}

TEST_CASE("density of alternating blocks 1^k 0^k") {
  // k = 1..13, concatenated on [0, 181].
  oracle::Set m;
  std::int64_t at = 0;
  for (std::int64_t k = 1; k <= 13; ++k) {
    for (std::int64_t i = 0; i < k; ++i) m.insert(at + i);
    at += 2 * k;
  }
  const auto s = oracle::make(0, at - 1, m);
  const std::vector<std::int64_t> w{26};
  const auto prof = hindlab::density_profile(s, w);
  CHECK(prof.max_density[0] == Ratio(17, 26));
  CHECK(prof.min_density[0] == Ratio(9, 26));

  const std::vector<std::int64_t> too_long{s.size() + 1};
  CHECK(code_of([&] { (void)hindlab::density_profile(s, too_long); }) == Errc::length_exceeds_window);
}

TEST_CASE("gap statistics") {
  const auto s = WindowedSet::from_members(0, 20, {3, 4, 5, 9, 10, 16});
  const auto g = hindlab::gap_statistics(s);
  CHECK(g.longest_run == 3);
  CHECK(g.gaps == std::vector<std::int64_t>{1, 1, 1, 4, 6});
  CHECK(g.max_gap == 6);
  CHECK(g.leading_gap == 4);
  CHECK(g.trailing_gap == 5);
  CHECK(hindlab::longest_run(s) == 3);

  const auto e = hindlab::gap_statistics(WindowedSet(1, 10));
  CHECK(e.max_gap == 10);
  CHECK(e.longest_run == 0);
  CHECK(e.leading_gap == 11);
  CHECK(e.trailing_gap == 11);
}

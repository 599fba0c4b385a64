#include "hindlab/constructions.hpp"
#include "hindlab/error.hpp"
#include "hindlab/spacing.hpp"

#include <doctest.h>

#include <random>

#include "oracles.hpp"

using hindlab::SpacingShift;
using hindlab::WindowedSet;
using hindlab::Word;

namespace {

std::vector<int> syms(const Word& w) { return {w.symbols().begin(), w.symbols().end()}; }

SpacingShift random_shift(std::mt19937_64& rng, std::int64_t n, double density) {
  return SpacingShift(oracle::random_set(rng, 1, n, density));
}

}  // namespace

TEST_CASE("words") {
  const auto w = Word::parse("10110", 3);
  CHECK(w.size() == 5);
  CHECK(w.base() == 3);
  CHECK(w.ones() == std::vector<std::int64_t>{0, 2, 3});
  CHECK(w.to_string() == "10110");
  CHECK(w.has_one());
  CHECK_FALSE(Word::parse("000").has_one());
  CHECK_THROWS_AS((void)Word::parse(""), hindlab::Error);
  CHECK_THROWS_AS((void)Word::parse("102"), hindlab::Error);
}

TEST_CASE("spacing shift stores P+ and its symmetric closure") {
  const auto p = SpacingShift(WindowedSet::from_members(-3, 10, {-2, 0, 3, 7}));
  CHECK(p.p_plus().lo() == 1);
  CHECK(p.p_plus().members() == std::vector<std::int64_t>{3, 7});
  CHECK(p.allows(0));
  CHECK(p.allows(3));
  CHECK(p.allows(-7));
  CHECK_FALSE(p.allows(4));
  CHECK_THROWS_AS((void)p.allows(11), hindlab::Error);
  CHECK(p.p(-10, 10).members() == std::vector<std::int64_t>{-7, -3, 3, 7});
  CHECK(SpacingShift::full(5).p_plus() == WindowedSet::full(1, 5));
}

TEST_CASE("language words match brute force") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_shift(rng, 12, 0.5);
    const auto pp = oracle::members(p.p_plus());
    const auto words = hindlab::language_words(p, 7);
    std::vector<std::string> got;
    for (const auto& w : words) {
      got.push_back(w.to_string());
      CHECK(hindlab::word_in_language(p, w));
    }
    std::vector<std::string> want;
    for (int len = 1; len <= 7; ++len) {
      std::vector<std::string> level;
      for (const auto c : oracle::legal_codes(pp, len)) {
        std::string s;
        for (const int b : oracle::bits_of(c, len)) s += static_cast<char>('0' + b);
        level.push_back(s);
      }
      std::sort(level.begin(), level.end());
      want.insert(want.end(), level.begin(), level.end());
    }
    CHECK(got == want);
    const auto ones = hindlab::language_words(p, 7, true);
    CHECK(ones.size() == want.size() - 7);
  }
}

TEST_CASE("return sets equal the merged-pattern oracle") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 12; ++trial) {
    const auto p = random_shift(rng, 60, 0.15 + 0.07 * trial);
    const auto pp = oracle::members(p.p_plus());
    const auto words = hindlab::language_words(p, 4);
    for (int pair = 0; pair < 40; ++pair) {
      const auto& a = words[rng() % words.size()];
      const auto& b = words[rng() % words.size()];
      const Word u(a.symbols(), static_cast<std::int64_t>(rng() % 7) - 3);
      const Word v(b.symbols(), static_cast<std::int64_t>(rng() % 7) - 3);
      const auto win = hindlab::return_window(p, u, v);
      const auto got = hindlab::return_set(p, u, v, win.lo, win.hi);
      for (std::int64_t n = win.lo; n <= win.hi; ++n) {
        CHECK_MESSAGE(got.contains(n) == oracle::placement_ok(pp, syms(u), u.base(), syms(v), v.base(), n),
                      "U=", u.to_string(), "@", u.base(), " V=", v.to_string(), "@", v.base(), " n=", n);
      }
      CHECK_THROWS_AS((void)hindlab::return_set(p, u, v, win.lo - 1, win.hi), hindlab::Error);
    }
  }
}

TEST_CASE("N([1],[1]) is P together with 0") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = random_shift(rng, 300, 0.1 + 0.8 * trial / 29.0);
    const auto one = Word::parse("1");
    const auto win = hindlab::return_window(p, one, one);
    CHECK(win.lo == -300);
    CHECK(win.hi == 300);
    const auto r = hindlab::return_set(p, one, one, win.lo, win.hi);
    for (std::int64_t n = -300; n <= 300; ++n) {
      CHECK(r.contains(n) == (n == 0 || p.p_plus().contains(n < 0 ? -n : n)));
    }
  }
}

TEST_CASE("return-set decomposition") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 8; ++trial) {
    const auto p = random_shift(rng, 80, 0.2 + 0.1 * trial);
    for (const auto& u : hindlab::language_words(p, 3)) {
      for (const auto& v : hindlab::language_words(p, 3)) {
        const auto c = hindlab::nuv_check(p, u, v);
        CHECK_MESSAGE(c.ok(), u.to_string(), " ", v.to_string());
        CHECK(c.c_size <= 2 * (u.size() + v.size()));

        // Independent check of the formula region: for |n| > |U| + |V|, n is a
        // return time iff every cross distance of 1s is in P.
        const auto d = hindlab::nuv_decomposition(p, u, v);
        CHECK(d.c_bound == u.size() + v.size());
        CHECK(d.no_ones == (!u.has_one() || !v.has_one()));
        const auto win = hindlab::return_window(p, u, v);
        for (std::int64_t n = win.lo; n <= win.hi; ++n) {
          if ((n < 0 ? -n : n) <= d.c_bound) continue;
          bool all = true;
          for (const auto i : u.ones()) {
            for (const auto j : v.ones()) all = all && p.allows(n + i - j);
          }
          CHECK((d.a.contains(n) || d.b.contains(n)) == all);
        }
      }
    }
  }
}

TEST_CASE("shift intersection") {
  const auto p = SpacingShift(WindowedSet::from_predicate(1, 50, [](std::int64_t n) { return n % 3 == 0; }));
  const std::vector<std::int64_t> shifts{0, 6};
  const auto s = hindlab::shift_intersection(p, shifts, -40, 40);
  for (std::int64_t n = -40; n <= 40; ++n) {
    CHECK(s.contains(n) == (n % 3 == 0 && n != 0 && n != -6));
  }
}

TEST_CASE("detectors parse, print and evaluate") {
  for (const char* spec : {"nonempty", "thick:L=20", "syndetic:g=4", "ps:g=5,L=50", "ts:g=5,L=50", "cofinite:n0=30"}) {
    CHECK(hindlab::Detector::parse(spec).to_string() == spec);
  }
  CHECK_THROWS_AS((void)hindlab::Detector::parse("thick"), hindlab::Error);
  CHECK_THROWS_AS((void)hindlab::Detector::parse("thick:L=0"), hindlab::Error);
  CHECK_THROWS_AS((void)hindlab::Detector::parse("thick:L=3,g=2"), hindlab::Error);
  CHECK_THROWS_AS((void)hindlab::Detector::parse("dense:d=1"), hindlab::Error);

  const auto s = WindowedSet::from_predicate(-20, 20, [](std::int64_t n) { return n != 7 && n != -9 && (n < -2 || n > 2); });
  auto v = hindlab::Detector::parse("cofinite:n0=5").evaluate(s);
  CHECK_FALSE(v.pass);
  CHECK(v.witness == 7);
  CHECK(hindlab::Detector::parse("cofinite:n0=9").evaluate(s).pass);
  v = hindlab::Detector::parse("nonempty").evaluate(s);
  CHECK(v.pass);
  CHECK(v.witness == 3);
  v = hindlab::Detector::parse("thick:L=8").evaluate(s);
  CHECK(v.pass);
  CHECK(v.witness == -20);
  v = hindlab::Detector::parse("syndetic:g=5").evaluate(s);
  CHECK_FALSE(v.pass);
  CHECK(v.witness == -2);
  CHECK_FALSE(hindlab::Detector::parse("nonempty").evaluate(WindowedSet(0, 4)).pass);
}

TEST_CASE("mixing evidence on the full shift and on alternating blocks") {
  const auto full = SpacingShift::full(200);
  const auto rep = hindlab::mixing_evidence(full, hindlab::Detector::parse("cofinite:n0=8"), 3);
  CHECK(rep.pairs.size() == 14 * 14);
  CHECK(rep.all_pass());
  CHECK(rep.window.lo == -198);
  CHECK(rep.window.hi == 198);
  const std::string text = rep.to_text();
  CHECK(text.starts_with("detector cofinite:n0=8 max_word_len 3 window [-198, 198]\n"));
  CHECK(text.find("pairs 196 transitive_failures 0 mixing_failures 0 verdict pass\n") != std::string::npos);

  // P+ made of growing blocks of ones and zeros: return sets are thick but
  // keep missing whole blocks.
  const auto alt = SpacingShift(hindlab::alternating_thick(1, 400, hindlab::BlockSchedule{}));
  const std::vector<hindlab::Detector> ds{hindlab::Detector::parse("nonempty"), hindlab::Detector::parse("cofinite:n0=10"),
                                          hindlab::Detector::parse("thick:L=5")};
  const auto reps = hindlab::mixing_evidence(alt, ds, 3);
  REQUIRE(reps.size() == 3);
  CHECK(reps[0].all_pass());
  CHECK_FALSE(reps[1].all_pass());
  CHECK(reps[2].all_pass());
  CHECK(reps[1].to_text().find("FAIL@") != std::string::npos);

  const auto single = hindlab::mixing_evidence(alt, ds[1], 3);
  CHECK(single.to_text() == reps[1].to_text());
}

#include "hindlab/covers.hpp"
#include "hindlab/error.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"

using hindlab::ClopenCover;
using hindlab::SpacingShift;
using hindlab::WindowedSet;
using hindlab::WordCode;

namespace {

using Element = std::set<WordCode>;

// Join of the shifted covers, straight from the definition: an element is the
// set of legal depth-D words whose windows at each time fall in the chosen
// original elements.
std::set<Element> naive_join(const oracle::Set& pp, const ClopenCover& c, const std::vector<std::int64_t>& times) {
  const std::int64_t top = *std::max_element(times.begin(), times.end());
  const int depth = c.depth + static_cast<int>(top);
  const auto words = oracle::legal_codes(pp, depth);
  std::map<std::vector<std::size_t>, Element> by_choice;
  const WordCode low = (WordCode{1} << c.depth) - 1;
  for (const auto w : words) {
    // Every combination of elements containing the sub-words.
    std::vector<std::vector<std::size_t>> options;
    for (const auto t : times) {
      const WordCode sub = (w >> t) & low;
      std::vector<std::size_t> opt;
      for (std::size_t e = 0; e < c.elements.size(); ++e) {
        if (std::find(c.elements[e].begin(), c.elements[e].end(), sub) != c.elements[e].end()) opt.push_back(e);
      }
      options.push_back(opt);
    }
    std::vector<std::size_t> pick(times.size(), 0);
    while (true) {
      std::vector<std::size_t> choice;
      for (std::size_t i = 0; i < times.size(); ++i) choice.push_back(options[i][pick[i]]);
      by_choice[choice].insert(w);
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  std::set<Element> out;
  for (const auto& [k, e] : by_choice) out.insert(e);
  return out;
}

std::int64_t naive_min_cover(const std::vector<Element>& elems, const std::vector<WordCode>& words) {
  const std::size_t n = elems.size();
  std::int64_t best = static_cast<std::int64_t>(n) + 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = std::popcount(mask);
    if (size >= best) continue;
    bool ok = true;
    for (const auto w : words) {
      bool hit = false;
      for (std::size_t i = 0; i < n && !hit; ++i) hit = (mask >> i & 1) && elems[i].count(w);
      if (!hit) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

ClopenCover random_cover(std::mt19937_64& rng, const SpacingShift& p, int depth) {
  const auto words = hindlab::language_codes(p, depth);
  ClopenCover c{depth, {}};
  const std::size_t n = 2 + rng() % 3;
  c.elements.resize(n);
  for (const auto w : words) {
    // Each word lands in one or two elements.
    c.elements[rng() % n].push_back(w);
    if (rng() % 3 == 0) c.elements[rng() % n].push_back(w);
  }
  for (auto& e : c.elements) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
  return c;
}

}  // namespace

TEST_CASE("word codes") {
  CHECK(hindlab::word_code("1011") == 0b1101);
  CHECK(hindlab::word_string(0b1101, 4) == "1011");
  CHECK(hindlab::word_string(0, 3) == "000");
  CHECK_THROWS_AS((void)hindlab::word_code("12"), hindlab::Error);
  CHECK_THROWS_AS((void)hindlab::word_code(""), hindlab::Error);
}

TEST_CASE("language codes match brute force") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = SpacingShift(oracle::random_set(rng, 1, 15, 0.5));
    for (int len = 1; len <= 10; ++len) {
      CHECK(hindlab::language_codes(p, len) == oracle::legal_codes(oracle::members(p.p_plus()), len));
    }
  }
  CHECK(hindlab::language_codes(SpacingShift::full(10), 8).size() == 256);
  CHECK_THROWS_AS((void)hindlab::language_codes(SpacingShift::full(3), 5), hindlab::Error);
  CHECK_THROWS_AS((void)hindlab::language_codes(SpacingShift::full(20), 10, 100), hindlab::Error);
}

TEST_CASE("cover text format") {
  const auto c = ClopenCover::parse("# two elements\n00+01\n\n10 + 00  # comment\n11\n");
  CHECK(c.depth == 2);
  REQUIRE(c.elements.size() == 3);
  CHECK(c.elements[0] == std::vector<WordCode>{0b00, 0b10});
  CHECK(c.elements[1] == std::vector<WordCode>{0b00, 0b01});
  CHECK(ClopenCover::parse(c.serialize()).elements == c.elements);
  CHECK(c.serialize() == "00+01\n00+10\n11\n");

  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      (void)ClopenCover::parse(text);
    } catch (const hindlab::ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("01\n011\n") == 2);
  CHECK(line_of("01\n0x\n") == 2);
  CHECK(line_of("01+\n") == 1);
  CHECK(line_of("# nothing\n") == 1);
}

TEST_CASE("cover validation and nontriviality") {
  const auto p = SpacingShift(WindowedSet::from_predicate(1, 30, [](std::int64_t n) { return n % 2 == 0; }));
  const auto c = ClopenCover::parse("00+01\n10\n");
  CHECK_NOTHROW(c.validate(p));  // 11 is not a language word
  CHECK(c.nontrivial(p));
  try {
    ClopenCover::parse("00\n10\n").validate(p);
    FAIL("expected not_a_cover");
  } catch (const hindlab::Error& e) {
    CHECK(e.code() == hindlab::Errc::not_a_cover);
  }
  CHECK_FALSE(ClopenCover::parse("00+01+10\n").nontrivial(p));
  CHECK(ClopenCover::canonical_two_cover().nontrivial(p));
  CHECK(ClopenCover::partition(p, 3).elements.size() == 5);  // 000 100 010 001 101
}

TEST_CASE("joins and minimal subcovers match brute force") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = SpacingShift(oracle::random_set(rng, 1, 20, 0.3 + 0.6 * (trial % 5) / 4.0));
    const auto pp = oracle::members(p.p_plus());
    const int depth = 1 + trial % 2;
    const auto cover = random_cover(rng, p, depth);
    std::vector<std::int64_t> times{0};
    for (std::size_t i = 0; i < 1 + rng() % 3; ++i) times.push_back(times.back() + 1 + static_cast<std::int64_t>(rng() % 3));

    const auto joined = hindlab::refine_along(p, cover, times);
    CHECK(joined.depth == depth + times.back());
    std::set<Element> got;
    for (const auto& e : joined.elements) got.insert(Element(e.begin(), e.end()));
    CHECK(got.size() == joined.elements.size());
    CHECK(got == naive_join(pp, cover, times));

    std::vector<Element> elems(got.begin(), got.end());
    if (elems.size() <= 20) {
      CHECK(hindlab::min_subcover(p, joined) ==
            naive_min_cover(elems, oracle::legal_codes(pp, joined.depth)));
    }
    std::vector<Element> base;
    for (const auto& e : cover.elements) base.emplace_back(e.begin(), e.end());
    CHECK(hindlab::min_subcover(p, cover) == naive_min_cover(base, oracle::legal_codes(pp, depth)));
  }
}

TEST_CASE("solver cap applies to the reduced kernel") {
  // Every depth-3 word of the full shift in exactly two of 8 overlapping
  // elements: no element is forced or dominated.
  ClopenCover c{3, {}};
  for (WordCode w = 0; w < 8; ++w) c.elements.push_back({w, (w + 1) % 8});
  for (auto& e : c.elements) std::sort(e.begin(), e.end());
  const auto p = SpacingShift::full(8);
  CHECK(hindlab::min_subcover(p, c) == 4);
  try {
    (void)hindlab::min_subcover(p, c, 4);
    FAIL("expected solver_cap_exceeded");
  } catch (const hindlab::Error& e) {
    CHECK(e.code() == hindlab::Errc::solver_cap_exceeded);
  }
  // A partition reduces to nothing, whatever its size.
  CHECK(hindlab::min_subcover(p, ClopenCover::partition(p, 8), 1) == 256);
}

TEST_CASE("complexity profiles") {
  const auto full = SpacingShift::full(64);
  const std::vector<std::int64_t> times{0, 1, 2, 3, 4, 5, 6, 7};
  const auto part = hindlab::complexity_profile(full, ClopenCover::partition(full, 1), times, 5);
  CHECK(part.values == std::vector<std::int64_t>{2, 4, 8, 16, 32});
  CHECK(part.strictly_increasing);
  CHECK(part.verdict == hindlab::Growth::growing);

  const auto two = hindlab::complexity_profile(full, ClopenCover::canonical_two_cover(), times, 8);
  CHECK(two.values == std::vector<std::int64_t>{2, 4, 8, 16, 32, 64, 128, 256});

  // Shifting all times leaves the counts alone.
  const std::vector<std::int64_t> later{5, 6, 7, 8, 9};
  CHECK(hindlab::complexity_profile(full, ClopenCover::partition(full, 1), later, 5).values == part.values);

  // Spacing set of multiples of 5: the cover {x0 = 0, x1 = 0} stays small.
  const auto five = SpacingShift(WindowedSet::from_predicate(1, 64, [](std::int64_t n) { return n % 5 == 0; }));
  const auto sat = ClopenCover::parse("00+01\n00+10\n");
  CHECK(sat.nontrivial(five));
  const auto prof = hindlab::complexity_profile(five, sat, times, 8);
  CHECK(prof.verdict == hindlab::Growth::bounded);
  CHECK(*std::max_element(prof.values.begin(), prof.values.end()) <= 5);
  const auto grow = hindlab::complexity_profile(five, ClopenCover::canonical_two_cover(), times, 8);
  CHECK(grow.verdict == hindlab::Growth::growing);

  CHECK(hindlab::complexity_profile(five, sat, times, 1).verdict == hindlab::Growth::undecided);
  CHECK(hindlab::to_string(hindlab::Growth::bounded) == "bounded-at-budget");
  CHECK(hindlab::times_from_set(WindowedSet::from_members(-3, 9, {-2, 0, 4, 9})) == std::vector<std::int64_t>{0, 4, 9});
}

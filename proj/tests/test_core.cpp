#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "rrfair/construct.hpp"
#include "rrfair/hapset.hpp"
#include "rrfair/ranked_venue_matrix.hpp"
#include "rrfair/schedule.hpp"
#include "rrfair/solver.hpp"

using namespace rrfair;
using rrfair::test::row;

namespace {

Schedule flip_match(const Schedule& s, int round, int a, int b) {
  std::vector<Match> ms(s.matches().begin(), s.matches().end());
  for (Match& m : ms)
    if (m.round == round && ((m.home == a && m.away == b) || (m.home == b && m.away == a))) std::swap(m.home, m.away);
  return Schedule(s.teams(), std::move(ms));
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("venue parsing and patterns") {
  CHECK(to_string(row("HAAH")) == "HAAH");
  CHECK_THROWS_AS(parse_venues("HXA"), std::invalid_argument);
  const auto p = HomeAwayPattern::from_string("HAHAH");
  CHECK(p.at(0) == p.at(5));
  CHECK(p.complement().str() == "AHAHA");
  CHECK_THROWS(p.at(6));
}

TEST_CASE("breaks are circular") {
  const auto b = breaks(HomeAwayPattern::from_string("HAHAH"));
  REQUIRE(b.size() == 1);
  CHECK(b[0] == Break{1, Venue::home});

  const auto c = breaks(HomeAwayPattern::from_string("HHAHA"));
  REQUIRE(c.size() == 1);
  CHECK(c[0] == Break{2, Venue::home});

  // Odd length cannot alternate all the way round.
  for (const auto& r : test::all_rows(7)) CHECK(!breaks(HomeAwayPattern(r)).empty());
}

TEST_CASE("verify_feasible") {
  CHECK(verify_feasible(cps_rankingfair_8()).empty());
  CHECK(verify_feasible(construct_4k(4)).empty());

  SUBCASE("duplicate team in a round") {
    Schedule s(4, {{1, 1, 2}, {1, 1, 3}, {2, 1, 4}, {2, 2, 3}, {3, 2, 4}, {3, 3, 4}});
    const auto v = verify_feasible(s);
    REQUIRE(!v.empty());
    CHECK(std::any_of(v.begin(), v.end(), [](const Violation& x) {
      return x.kind == Violation::Kind::duplicate_team_in_round && x.round == 1 && x.team == 1;
    }));
    CHECK(v.front().message().find("duplicate team in round") != std::string::npos);
  }
  SUBCASE("pair repeated and missing") {
    Schedule s(4, {{1, 1, 2}, {1, 3, 4}, {2, 2, 1}, {2, 4, 3}, {3, 1, 4}, {3, 2, 3}});
    std::set<std::string> msgs;
    for (const auto& x : verify_feasible(s)) msgs.insert(x.message());
    CHECK(msgs.count("pair {1,2} scheduled twice") == 1);
    CHECK(msgs.count("pair {1,3} never scheduled") == 1);
  }
  SUBCASE("constructor rejects malformed input") {
    CHECK_THROWS_AS(Schedule(5, {}), std::invalid_argument);
    CHECK_THROWS_AS(Schedule(4, {{4, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Schedule(4, {{1, 2, 2}}), std::invalid_argument);
  }
}

TEST_CASE("expected_venue follows parity") {
  CHECK(expected_venue(1, 2) == Venue::home);
  CHECK(expected_venue(3, 5) == Venue::away);
  CHECK(expected_venue(4, 3) == Venue::away);
  CHECK_THROWS_AS(expected_venue(2, 2), std::invalid_argument);
  for (int i = 1; i <= 10; ++i)
    for (int j = 1; j <= 10; ++j)
      if (i != j) CHECK(expected_venue(i, j) == flip(expected_venue(j, i)));
}

TEST_CASE("is_ranking_fair") {
  const Schedule t4 = cps_rankingfair_8();
  const auto v = is_ranking_fair(t4);
  CHECK(v.fair());
  CHECK(v.orientation == FairOrientation::table);

  const auto c = is_ranking_fair(t4.complement());
  CHECK(c.fair());
  CHECK(c.orientation == FairOrientation::complement);

  const auto broken = is_ranking_fair(flip_match(t4, 1, 5, 1));
  CHECK(!broken.fair());
  REQUIRE(broken.violations.size() == 1);
  CHECK(broken.violations[0] == Match{1, 1, 5});
}

TEST_CASE("ranking_hap") {
  // Team 3 hosts 1 and 2, visits 4, 5, 6.
  Schedule s(6, {{1, 3, 1}, {1, 2, 4}, {1, 5, 6}, {2, 3, 2}, {2, 1, 5}, {2, 4, 6}, {3, 4, 3}, {3, 1, 6}, {3, 2, 5},
                 {4, 5, 3}, {4, 1, 4}, {4, 6, 2}, {5, 6, 3}, {5, 1, 2}, {5, 4, 5}});
  REQUIRE(verify_feasible(s).empty());
  CHECK(to_string(ranking_hap(s, 3)) == "HHAAA");
  CHECK_THROWS(ranking_hap(s, 7));

  const Schedule fair = construct_4k(12);
  CHECK(to_string(ranking_hap(fair, 1)) == "HAHAHAHAHAH");
  CHECK(to_string(ranking_hap(fair, 2)) == "AHAHAHAHAHA");
}

TEST_CASE("ranked venue matrix consistency") {
  const Schedule s = cps_rankingfair_8();
  const auto m = ranked_venue_matrix(s);
  for (int t = 1; t <= 8; ++t)
    for (int u = 1; u <= 8; ++u)
      if (t != u) CHECK(m.venue(t, u) == flip(m.venue(u, t)));

  CHECK_NOTHROW(RankedVenueMatrix({row("HH"), row("AH"), row("AA")}));
  CHECK_THROWS_AS(RankedVenueMatrix({row("HH"), row("AA"), row("AA")}), InconsistentMatrix);
  try {
    RankedVenueMatrix({row("HH"), row("HH"), row("AA")});
    FAIL("expected InconsistentMatrix");
  } catch (const InconsistentMatrix& e) {
    CHECK(e.first() == 1);
    CHECK(e.second() == 2);
  }
  CHECK_THROWS_AS(RankedVenueMatrix({row("H"), row("AA")}), std::invalid_argument);
}

TEST_CASE("extract_haps on the 8-team canonical schedule") {
  const auto haps = extract_haps(cps_rankingfair_8());
  CHECK(haps[0].str() == "AHHAHAH");
  const auto b4 = breaks(haps[3]);
  const auto b5 = breaks(haps[4]);
  REQUIRE(b4.size() == 1);
  REQUIRE(b5.size() == 1);
  CHECK(b4[0].round == 1);
  CHECK(b5[0].round == 1);
  CHECK(b4[0].kind != b5[0].kind);
  CHECK(haps.is_single_break());
  CHECK(haps.is_complementary());
}

TEST_CASE("extract_haps is equivariant under round swaps") {
  const Schedule s = construct_4k(8);
  std::vector<Match> swapped(s.matches().begin(), s.matches().end());
  for (Match& m : swapped) {
    if (m.round == 2) m.round = 5;
    else if (m.round == 5) m.round = 2;
  }
  const auto a = extract_haps(s);
  const auto b = extract_haps(Schedule(8, swapped));
  for (int t = 0; t < 8; ++t) {
    auto e = std::vector<Venue>(a[t].entries().begin(), a[t].entries().end());
    std::swap(e[1], e[4]);
    CHECK(HomeAwayPattern(e) == b[t]);
  }
}

TEST_CASE("HapSet validation") {
  CHECK_THROWS_AS(HapSet({}), std::invalid_argument);
  CHECK_THROWS_AS(HapSet({HomeAwayPattern::from_string("HAH"), HomeAwayPattern::from_string("HAH")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(HapSet({HomeAwayPattern::from_string("HAH"), HomeAwayPattern::from_string("HA")}),
                  std::invalid_argument);
}

TEST_CASE("d_sequence") {
  CHECK(DSequence::from_break_rounds(std::vector{1, 3, 5, 7}, 8) == DSequence({2, 2, 2, 1}));
  CHECK(DSequence::from_break_rounds(std::vector{1, 3, 4, 7}, 8) == DSequence({2, 1, 3, 1}));
  CHECK(DSequence::from_break_rounds(std::vector{1, 2}, 4) == DSequence({1, 2}));
  CHECK(d_sequence(extract_haps(cps_rankingfair_8())) == DSequence({2, 2, 2, 1}));
  // HHHAA breaks three times.
  CHECK_THROWS_AS(d_sequence(HapSet({HomeAwayPattern::from_string("HHAHA"), HomeAwayPattern::from_string("HHHAA")})),
                  std::invalid_argument);
  // Two home breaks, neither paired with an away break.
  CHECK_THROWS_AS(d_sequence(HapSet({HomeAwayPattern::from_string("HAHAH"), HomeAwayPattern::from_string("HAHHA")})),
                  std::invalid_argument);
  CHECK_THROWS_AS(DSequence({2, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(DSequence::for_teams({2, 2, 2}, 8), std::invalid_argument);
  CHECK_THROWS_AS(DSequence::for_teams({2, 2, 2, 2}, 8), std::invalid_argument);
  CHECK(DSequence({2, 2, 2, 1}).str() == "2221");
  CHECK(DSequence({12, 1}).str() == "12,1");
}

TEST_CASE("canonical_dseq") {
  CHECK(canonical_dseq(DSequence({2, 1, 3, 1})) == DSequence({3, 1, 2, 1}));
  CHECK(canonical_dseq(DSequence({2, 2, 2, 1})) == DSequence({2, 2, 2, 1}));
  CHECK(canonical_dseq(DSequence({5})) == DSequence({5}));

  // Idempotent and invariant under rotation and reversal.
  for (const auto& gaps : compositions(9, 5)) {
    const DSequence c = canonical_dseq(DSequence(gaps));
    CHECK(canonical_dseq(c) == c);
    std::vector<int> rev(gaps.rbegin(), gaps.rend());
    CHECK(canonical_dseq(DSequence(rev)) == c);
    std::vector<int> rot(gaps.begin() + 1, gaps.end());
    rot.push_back(gaps.front());
    CHECK(canonical_dseq(DSequence(rot)) == c);
  }
}

}  // TEST_SUITE

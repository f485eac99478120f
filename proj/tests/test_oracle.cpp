#include <doctest.h>

#include <stdexcept>

#include <map>
#include <set>

#include "helpers.hpp"
#include "rrfair/construct.hpp"
#include "rrfair/fairness.hpp"
#include "rrfair/oracle.hpp"
#include "rrfair/solver.hpp"

using namespace rrfair;
namespace oracle = rrfair::oracle;

TEST_SUITE("oracle") {

TEST_CASE("naive_delta examples and agreement") {
  CHECK(oracle::naive_delta(test::row("HHHAA")) == Rational(7));
  CHECK(oracle::naive_delta(test::row("HAHAH")) == Rational(2));
  CHECK_THROWS_AS(oracle::naive_delta(test::row("H")), std::invalid_argument);
  for (int m = 3; m <= 10; ++m)
    for (const auto& r : test::all_rows(m - 1)) CHECK(oracle::naive_delta(r) == delta_t(r));
}

TEST_CASE("naive_canonical examples and agreement") {
  CHECK(oracle::naive_canonical(std::vector{2, 1, 3, 1}) == std::vector{3, 1, 2, 1});
  CHECK(oracle::naive_canonical(std::vector{1, 1, 1, 1, 1, 1, 1}) == std::vector{1, 1, 1, 1, 1, 1, 1});
  for (int n : {4, 6, 8, 10}) {
    for (const auto& gaps : compositions(n - 1, n / 2)) {
      const auto c = canonical_dseq(DSequence(gaps));
      CHECK(std::vector<int>(c.gaps().begin(), c.gaps().end()) == oracle::naive_canonical(gaps));
    }
  }
}

TEST_CASE("n = 4: every schedule, every orientation") {
  const auto stats = oracle::count_schedules({.teams = 4});
  CHECK(stats.factorizations == 6);
  CHECK(stats.schedules == 384);
}

TEST_CASE("n = 6 has 720 round-labelled 1-factorizations") {
  // K6 has 6 distinct 1-factorizations, each labelled in 5! ways.
  const auto stats = oracle::count_schedules({.teams = 6, .single_break = true, .ranking_fair = true});
  CHECK(stats.factorizations == 720);
  CHECK(stats.schedules == 0);
}

TEST_CASE("n = 4 ranking-fair schedules all score zero") {
  int count = 0;
  oracle::enumerate_schedules({.teams = 4, .ranking_fair = true}, [&](const Schedule& s) {
    ++count;
    CHECK(verify_feasible(s).empty());
    CHECK(is_ranking_fair(s).fair());
    CHECK(fairness_report(s).aggregate == Rational(0));
    return true;
  });
  CHECK(count > 0);
}

TEST_CASE("F = 0 iff ranking-fair, every n = 4 schedule") {
  oracle::enumerate_schedules({.teams = 4}, [](const Schedule& s) {
    const bool fair = is_ranking_fair(s).fair();
    CHECK(fair == oracle::naive_ranking_fair(s));
    CHECK((fairness_report(s).aggregate == Rational(0)) == fair);
    return true;
  });
}

TEST_CASE("F = 0 iff ranking-fair, n = 6 single-break schedules") {
  int count = 0;
  oracle::enumerate_schedules({.teams = 6, .single_break = true}, [&](const Schedule& s) {
    ++count;
    const bool fair = is_ranking_fair(s).fair();
    CHECK(!fair);
    CHECK((fairness_report(s).aggregate == Rational(0)) == fair);
    return true;
  });
  CHECK(count > 0);
}

TEST_CASE("single-break HAP sets are complementary with paired breaks") {
  for (int n : {4, 6}) {
    CAPTURE(n);
    std::set<std::vector<HomeAwayPattern>> sets;
    oracle::enumerate_schedules({.teams = n, .single_break = true}, [&](const Schedule& s) {
      const HapSet h = extract_haps(s);
      for (const auto& p : h.patterns()) CHECK(oracle::naive_break_count(p.entries()) == 1);
      sets.insert(h.sorted());
      return true;
    });
    CHECK(!sets.empty());
    for (const auto& patterns : sets) {
      const HapSet h(patterns);
      CHECK(h.is_complementary());
      std::map<int, std::pair<int, int>> per_round;  // round -> (home, away)
      for (const auto& p : patterns) {
        const Break b = breaks(p).at(0);
        (b.kind == Venue::home ? per_round[b.round].first : per_round[b.round].second)++;
      }
      CHECK(per_round.size() == static_cast<std::size_t>(n / 2));
      for (const auto& [round, counts] : per_round) CHECK(counts == std::pair{1, 1});
      CHECK(d_sequence(h).sum() == n - 1);
    }
  }
}

TEST_CASE("enumeration respects the HAP-set filter and early stop") {
  const HapSet target = cps_hapset(4);
  int seen = 0;
  oracle::enumerate_schedules({.teams = 4, .haps = std::vector(target.patterns().begin(), target.patterns().end())},
                              [&](const Schedule& s) {
                                CHECK(extract_haps(s).sorted() == target.sorted());
                                ++seen;
                                return seen < 2;
                              });
  CHECK(seen == 2);
  CHECK_THROWS_AS(oracle::count_schedules({.teams = 8}), std::invalid_argument);
}

TEST_CASE("naive_ranking_fair agrees on constructed schedules") {
  CHECK(oracle::naive_ranking_fair(cps_rankingfair_8()));
  CHECK(oracle::naive_ranking_fair(cps_rankingfair_8().complement()));
  CHECK(!oracle::naive_ranking_fair(circle_schedule(8)));
  for (int n = 4; n <= 24; n += 4) CHECK(oracle::naive_ranking_fair(construct_4k(n)));
}

}  // TEST_SUITE

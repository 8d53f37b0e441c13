#include <gtest/gtest.h>

#include "sumset/report_json.hpp"
#include "sumset/verifier.hpp"

namespace sumset {
namespace {

SearchSpace space(std::int64_t n, int k_min, int k_max, std::int64_t h_max, int r_min, int r_max,
                  std::vector<SumsetKind> kinds, ZeroMode zero = ZeroMode::without_zero) {
  SearchSpace s;
  s.universe_max = n;
  s.k_min = k_min;
  s.k_max = k_max;
  s.h_max = h_max;
  s.r_min = r_min;
  s.r_max = r_max;
  s.kinds = std::move(kinds);
  s.zero_mode = zero;
  return s;
}

TEST(Enumerate, SmallSpaceInLexicographicOrder) {
  std::vector<std::pair<IntSet, HSet>> seen;
  enumerate(space(3, 2, 2, 1, 1, 1, {SumsetKind::ordinary}),
            [&](const IntSet& a, const HSet& h, SumsetKind) { seen.emplace_back(a, h); });
  ASSERT_EQ(seen.size(), 3u);
  EXPECT_EQ(seen[0].first, (IntSet{1, 2}));
  EXPECT_EQ(seen[1].first, (IntSet{1, 3}));
  EXPECT_EQ(seen[2].first, (IntSet{2, 3}));
  for (const auto& p : seen) EXPECT_EQ(p.second, (HSet{1}));
}

TEST(Enumerate, CountMatchesBinomials) {
  const SearchSpace s = space(2, 1, 2, 2, 1, 2, {SumsetKind::ordinary});
  EXPECT_EQ(pair_count(s), 9u);
  std::uint64_t n = 0;
  enumerate(s, [&](const IntSet&, const HSet&, SumsetKind) { ++n; });
  EXPECT_EQ(n, 9u);

  const SearchSpace big = space(12, 2, 6, 6, 1, 6, {SumsetKind::ordinary});
  std::uint64_t sets = 0;
  for (std::uint64_t k = 2; k <= 6; ++k) sets += binomial(12, k);
  std::uint64_t hs = 0;
  for (std::uint64_t r = 1; r <= 6; ++r) hs += binomial(6, r);
  EXPECT_EQ(pair_count(big), sets * hs);
  EXPECT_EQ(pair_count(big), 157311u);
  std::uint64_t m = 0;
  enumerate(big, [&](const IntSet&, const HSet&, SumsetKind) { ++m; });
  EXPECT_EQ(m, pair_count(big));
}

TEST(Enumerate, ZeroModeForcesZero) {
  const SearchSpace s = space(4, 2, 3, 1, 1, 1, {SumsetKind::ordinary}, ZeroMode::with_zero);
  std::uint64_t n = 0;
  enumerate(s, [&](const IntSet& a, const HSet&, SumsetKind) {
    EXPECT_TRUE(a.contains(0));
    EXPECT_LE(a.max(), 3);
    ++n;
  });
  EXPECT_EQ(n, 3u + 3u);  // C(3,1) + C(3,2)
  EXPECT_EQ(pair_count(s), n);
}

TEST(Enumerate, CapRefusesLargeSpaces) {
  try {
    enumerate(space(30, 5, 10, 10, 1, 10, {SumsetKind::ordinary}), [](auto&&...) {}, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::space_too_large);
    EXPECT_NE(std::string(e.what()).find("pairs"), std::string::npos);
  }
}

TEST(Verify, SinglePairOrdinaryExtremal) {
  const VerificationReport r = verify(space(3, 3, 3, 2, 2, 2, {SumsetKind::ordinary}));
  EXPECT_EQ(r.pairs_checked, 1u);
  ASSERT_EQ(r.equality_cases.size(), 1u);
  EXPECT_EQ(r.equality_cases[0].a, make_interval(1, 3));
  EXPECT_TRUE(r.equality_cases[0].verdict.consistent);
  EXPECT_TRUE(r.equality_cases[0].verdict.hypotheses_hold);
  EXPECT_TRUE(r.clean());
}

TEST(Verify, RestrictedBoundaryCaseIsAllowed) {
  // The space {1,2,4} only: universe [1,4] with k=3 includes other sets, so
  // filter the report for the pair of interest.
  const VerificationReport r = verify(space(4, 3, 3, 2, 1, 1, {SumsetKind::restricted}));
  bool found = false;
  for (const EqualityCase& c : r.allowed_nonstructured_equalities)
    if (c.a == IntSet{1, 2, 4} && c.h == HSet{2}) found = true;
  EXPECT_TRUE(found);
  EXPECT_TRUE(r.clean());
}

TEST(Verify, EmptyKRangeChecksNothing) {
  const VerificationReport r = verify(space(6, 3, 2, 3, 1, 3, {SumsetKind::ordinary}));
  EXPECT_EQ(r.pairs_checked, 0u);
  EXPECT_EQ(r.predicted_pairs, 0u);
  EXPECT_TRUE(r.equality_cases.empty());
}

TEST(Verify, CorruptedBoundIsDetected) {
  VerifyOptions options;
  options.bound_transform = [](BoundFormula f, std::int64_t b) {
    return f == BoundFormula::union_positive ? b + 1 : b;
  };
  const VerificationReport r = verify(space(6, 2, 3, 3, 1, 2, {SumsetKind::ordinary}), options);
  EXPECT_FALSE(r.bound_violations.empty());
  EXPECT_FALSE(r.clean());
}

TEST(Verify, FindsCounterexampleOutsideAcceptanceUniverse) {
  // {1,2,3,4,5,15} with H = {1,5} lies in [1,15].
  SearchSpace s = space(15, 6, 6, 5, 2, 2, {SumsetKind::restricted});
  VerifyOptions options;
  options.check_witness = false;
  const VerificationReport r = verify(s, options);
  ASSERT_FALSE(r.inverse_inconsistencies.empty());
  EXPECT_EQ(r.inverse_inconsistencies[0].a, (IntSet{1, 2, 3, 4, 5, 15}));
  EXPECT_EQ(r.inverse_inconsistencies[0].h, (HSet{1, 5}));
}

TEST(Verify, EqualityStorageIsBounded) {
  VerifyOptions options;
  options.equality_cap = 5;
  const VerificationReport r = verify(space(8, 2, 4, 3, 1, 3, {SumsetKind::ordinary}), options);
  EXPECT_EQ(r.equality_cases.size(), 5u);
  EXPECT_TRUE(r.equality_cases_truncated);
  EXPECT_GT(r.equality_case_count, 5u);
}

TEST(Verify, ReportIndependentOfWorkerCount) {
  const SearchSpace s = space(9, 2, 5, 4, 1, 4, {SumsetKind::ordinary, SumsetKind::restricted}, ZeroMode::both);
  std::string reference;
  for (unsigned workers : {1u, 3u, 8u}) {
    VerifyOptions options;
    options.workers = workers;
    options.chunk_sets = 7;
    const std::string dump = report_to_json(verify(s, options)).dump();
    if (reference.empty()) reference = dump;
    EXPECT_EQ(dump, reference) << workers;
  }
}

TEST(Verify, JsonRoundTripsByteIdentically) {
  const VerificationReport r = verify(space(7, 2, 4, 3, 1, 3, {SumsetKind::ordinary, SumsetKind::restricted}));
  const std::string once = report_to_json(r, true).dump(2);
  EXPECT_EQ(Json::parse(once).dump(2), once);
  const Json j = Json::parse(once);
  EXPECT_EQ(j["version"], "sumset-lab-report/1");
  EXPECT_EQ(j.begin().key(), "version");
  EXPECT_TRUE(j.contains("wall_time_seconds"));
  EXPECT_FALSE(report_to_json(r).contains("wall_time_seconds"));
}

TEST(FindExtremal, OrdinarySmallSpaceIsAllProgressions) {
  const ExtremalReport e = find_extremal(space(8, 2, 4, 3, 1, 3, {SumsetKind::ordinary}));
  ASSERT_FALSE(e.groups.empty());
  for (const ExtremalGroup& g : e.groups)
    for (const EqualityCase& c : g.cases) {
      const bool only_one = c.h == HSet{1};  // HA = A: no structure implied
      if (!only_one) {
        EXPECT_TRUE(*c.verdict.observed.a_is_ap) << format_set(c.a);
      }
      if (g.r >= 2) {
        EXPECT_TRUE(*c.verdict.observed.h_is_ap) << format_set(c.h);
      }
    }
}

TEST(FindExtremal, RestrictedSixElementFamily) {
  const ExtremalReport e = find_extremal(space(12, 6, 6, 5, 2, 2, {SumsetKind::restricted}));
  // Direct filter: d*[1,6] inside [1,12] means d in {1,2}; H = {h, h+1} with h+1 <= 5.
  std::vector<std::pair<IntSet, HSet>> expected;
  for (std::int64_t d = 1; d <= 2; ++d)
    for (std::int64_t h = 1; h <= 4; ++h) expected.emplace_back(dilate(make_interval(1, 6), d), HSet{h, h + 1});
  std::sort(expected.begin(), expected.end());
  std::vector<std::pair<IntSet, HSet>> found;
  for (const ExtremalGroup& g : e.groups)
    for (const EqualityCase& c : g.cases) found.emplace_back(c.a, c.h);
  std::sort(found.begin(), found.end());
  EXPECT_EQ(found, expected);
}

TEST(FindExtremal, EmptySpace) {
  const ExtremalReport e = find_extremal(space(6, 3, 2, 3, 1, 3, {SumsetKind::ordinary}));
  EXPECT_TRUE(e.groups.empty());
  EXPECT_EQ(e.report.pairs_checked, 0u);
}

TEST(Verify, OverflowNamesThePair) {
  // Not reachable through SearchSpace limits; exercised on the engine instead.
  EXPECT_THROW(h_fold(IntSet{1, std::numeric_limits<std::int64_t>::max() / 3}, 4), Error);
}

}  // namespace
}  // namespace sumset

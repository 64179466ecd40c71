#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <json.hpp>
#include <sstream>

#include "golden.hpp"
#include "oracle.hpp"
#include "wldu/error.hpp"
#include "wldu/sweep.hpp"

using namespace wldu;

namespace {

void expect_code(ErrorCode code, const std::function<void()>& body) {
  try {
    body();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

golden::Table table(std::uint64_t s) {
  return golden::load(std::string(WLDU_TEST_DATA_DIR) + "/table_s" + std::to_string(s) + ".csv", s);
}

// One row from scratch with the plain-integer oracle.
std::map<std::uint64_t, std::uint64_t> oracle_row(std::uint64_t p, std::uint64_t s) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t b = 2; b <= (p - 1) / 2; ++b) {
    const std::vector<std::uint64_t> f = oracle::binomial_values(p, s, b);
    if (oracle::is_permutation(f)) ++counts[oracle::differential_uniformity(f, p).delta];
  }
  return counts;
}

}  // namespace

TEST(Sweep, EngineNames) {
  EXPECT_EQ(parse_engine("fast"), Engine::Fast);
  EXPECT_EQ(parse_engine("general"), Engine::General);
  EXPECT_EQ(parse_engine("both"), Engine::Both);
  EXPECT_EQ(to_string(Engine::Both), "both");
  expect_code(ErrorCode::InvalidArgument, [] { parse_engine("quick"); });
}

TEST(Sweep, AdmissiblePrimes) {
  EXPECT_EQ(admissible_primes(2, 7, 60), (std::vector<std::uint64_t>{7, 11, 19, 23, 31, 43, 47, 59}));
  EXPECT_EQ(admissible_primes(4, 7, 60), admissible_primes(2, 7, 60));
  EXPECT_EQ(admissible_primes(6, 7, 60), (std::vector<std::uint64_t>{11, 23, 47, 59}));
  EXPECT_TRUE(admissible_primes(2, 60, 7).empty());
  for (std::uint64_t p = 3; p < 2000; ++p) {
    const bool expected = oracle::is_prime(p) && std::gcd<std::uint64_t>(6, (p - 1) / 2) == 1;
    EXPECT_EQ(is_admissible(p, 6), expected) << p;
  }
}

TEST(Sweep, RowsMatchOracle) {
  for (std::uint64_t s : {2ULL, 4ULL, 6ULL, 8ULL}) {
    for (std::uint64_t p : admissible_primes(s, 7, 80)) {
      const TableRow row = sweep_row(p, s);
      EXPECT_EQ(row.counts, oracle_row(p, s)) << "s=" << s << " p=" << p;
      EXPECT_EQ(row.total() + row.rejected_wl2 + row.rejected_wl3, (p - 1) / 2 - 1) << p;
    }
  }
}

TEST(Sweep, RowsMatchReferenceTablesBelow200) {
  for (std::uint64_t s : {2ULL, 4ULL, 6ULL}) {
    const golden::Table expected = table(s);
    ASSERT_FALSE(expected.rows.empty());
    int compared = 0;
    for (const golden::Row& row : expected.rows) {
      if (row.p >= 200) continue;
      EXPECT_EQ(golden::fold(expected, sweep_row(row.p, s).counts), row.counts) << "s=" << s << " p=" << row.p;
      ++compared;
    }
    EXPECT_GT(compared, 5);
  }
}

TEST(Sweep, EnginesAgree) {
  SweepConfig config;
  config.s = 4;
  config.p_max = 400;
  config.engine = Engine::Both;
  const SweepResult both = run_sweep(config);
  config.engine = Engine::General;
  const SweepResult general = run_sweep(config);
  config.engine = Engine::Fast;
  const SweepResult fast = run_sweep(config);
  EXPECT_EQ(both.rows, fast.rows);
  EXPECT_EQ(general.rows, fast.rows);
  EXPECT_GT(both.summary.cross_checked, 0U);
  EXPECT_EQ(fast.summary.cross_checked, 0U);
}

TEST(Sweep, WorkerCountDoesNotChangeResults) {
  SweepConfig config;
  config.s = 2;
  config.p_max = 1500;
  config.jobs = 1;
  const SweepResult one = run_sweep(config);
  config.jobs = 4;
  const SweepResult four = run_sweep(config);
  EXPECT_EQ(one.rows, four.rows);
  EXPECT_EQ(one.summary.tight, four.summary.tight);
  EXPECT_EQ(one.summary.total_pps, four.summary.total_pps);
  for (std::size_t i = 1; i < one.rows.size(); ++i) EXPECT_LT(one.rows[i - 1].p, one.rows[i].p);
}

TEST(Sweep, SummaryFindsOutlier) {
  SweepConfig config;
  config.s = 4;
  config.p_min = 3671;
  config.p_max = 3671;
  const SweepResult result = run_sweep(config);
  ASSERT_EQ(result.rows.size(), 1U);
  EXPECT_EQ(result.summary.max_delta, 13U);
  EXPECT_TRUE(result.summary.violations.empty());
  ASSERT_FALSE(result.summary.tight.empty());
  EXPECT_NE(std::find(result.summary.tight.begin(), result.summary.tight.end(), Achiever{3671, 1734, 13, 13}),
            result.summary.tight.end());
}

TEST(Sweep, Writers) {
  SweepConfig config;
  config.s = 2;
  config.p_max = 23;
  const SweepResult result = run_sweep(config);
  ASSERT_EQ(result.rows.size(), 4U);

  std::ostringstream wide;
  write_wide_csv(wide, result);
  std::istringstream lines(wide.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "p,d2,d3,d4,d5");
  std::getline(lines, line);
  EXPECT_EQ(line, "7,0,1,0,0");

  std::ostringstream longform;
  write_long_csv(longform, result);
  EXPECT_EQ(longform.str().substr(0, 20), "p,delta,count\n7,3,1\n");

  std::ostringstream json;
  write_json(json, result);
  const nlohmann::json doc = nlohmann::json::parse(json.str());
  EXPECT_EQ(doc["s"], 2);
  ASSERT_EQ(doc["rows"].size(), 4U);
  EXPECT_EQ(doc["rows"][0]["p"], 7);
  EXPECT_EQ(doc["rows"][0]["counts"]["3"], 1);
  EXPECT_EQ(doc["summary"]["total_pps"], result.summary.total_pps);
  EXPECT_TRUE(doc["summary"]["violations"].empty());

  std::ostringstream pretty;
  write_pretty(pretty, result);
  EXPECT_NE(pretty.str().find("      7 |"), std::string::npos);
}

TEST(Sweep, Errors) {
  expect_code(ErrorCode::NotAdmissible, [] { sweep_row(13, 2); });
  expect_code(ErrorCode::NotAdmissible, [] { sweep_row(19, 6); });
  expect_code(ErrorCode::NotAdmissible, [] { sweep_row(21, 2); });
  SweepConfig odd;
  odd.s = 3;
  expect_code(ErrorCode::SNotEven, [&] { run_sweep(odd); });
  SweepConfig backwards;
  backwards.p_min = 100;
  backwards.p_max = 50;
  expect_code(ErrorCode::InvalidArgument, [&] { run_sweep(backwards); });
}

TEST(Sweep, ParallelForPropagatesExceptions) {
  std::vector<int> hits(100, 0);
  parallel_for(hits.size(), 3, [&](std::size_t unit, unsigned) { hits[unit] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, 2,
                            [](std::size_t unit, unsigned) {
                              if (unit == 7) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

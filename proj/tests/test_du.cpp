#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "oracle.hpp"
#include "wldu/du.hpp"
#include "wldu/numtheory.hpp"
#include "wldu/wanlidl.hpp"

using namespace wldu;

namespace {

FunctionTable table_from(const Field& f, const std::vector<std::uint64_t>& values) {
  std::vector<Elem> v;
  for (auto x : values) v.push_back(Elem{x});
  return FunctionTable(f, v);
}

std::vector<std::uint64_t> random_values(std::mt19937_64& rng, std::uint64_t q) {
  std::vector<std::uint64_t> v(q);
  for (auto& x : v) x = rng() % q;
  return v;
}

void expect_same(const DuResult& a, const DuResult& b) {
  EXPECT_EQ(a.delta, b.delta);
  EXPECT_EQ(a.witness_a, b.witness_a);
  EXPECT_EQ(a.witness_c, b.witness_c);
}

}  // namespace

TEST(Du, PlanarAndLinearExtremes) {
  const Field f = Field::make(7);
  const DuResult square = differential_uniformity(tabulate(Poly::parse(f, "0,0,1")));
  EXPECT_EQ(square.delta, 1U);
  EXPECT_EQ(square.witness_a.value, 1U);
  EXPECT_EQ(square.witness_c.value, 0U);
  const DuResult linear = differential_uniformity(tabulate(Poly::parse(f, "0,1")));
  EXPECT_EQ(linear.delta, 7U);
  EXPECT_EQ(linear.witness_c.value, 1U);
  // x^2 is planar over every odd-order field.
  for (const Field& g : {Field::make(3, 3), Field::make(5, 2), Field::make(101)}) {
    EXPECT_EQ(differential_uniformity(tabulate(g, [&](Elem x) { return g.mul(x, x); })).delta, 1U);
  }
}

TEST(Du, MatchesOracleOnRandomFunctions) {
  std::mt19937_64 rng(5);
  for (std::uint64_t p : {3U, 5U, 17U, 59U, 113U}) {
    const Field f = Field::make(p);
    for (int trial = 0; trial < 10; ++trial) {
      const auto values = random_values(rng, p);
      const DuResult du = differential_uniformity(table_from(f, values), true);
      const oracle::Du expected = oracle::differential_uniformity(values, p);
      EXPECT_EQ(du.delta, expected.delta);
      EXPECT_EQ(du.witness_a.value, expected.a);
      EXPECT_EQ(du.witness_c.value, expected.c);
      ASSERT_EQ(du.per_a_max.size(), p);
      EXPECT_EQ(*std::max_element(du.per_a_max.begin(), du.per_a_max.end()), du.delta);
    }
  }
}

TEST(Du, RowSumsToQ) {
  std::mt19937_64 rng(9);
  for (const Field& f : {Field::make(31), Field::make(3, 3)}) {
    const auto values = random_values(rng, f.order());
    const FunctionTable t = table_from(f, values);
    DeltaScratch scratch(f.order());
    for (std::uint64_t a = 1; a < f.order(); ++a) {
      const RowResult row = delta_row(t, Elem{a}, scratch, true);
      std::uint64_t total = 0;
      for (auto n : row.counts) total += n;
      EXPECT_EQ(total, f.order());
      EXPECT_EQ(row.counts[row.argmax_c.value], row.max_count);
      EXPECT_EQ(solution_count(t, Elem{a}, row.argmax_c), row.max_count);
    }
  }
}

TEST(Du, ScratchReuseAcrossFieldSizes) {
  std::mt19937_64 rng(1);
  DeltaScratch scratch(5);
  for (std::uint64_t p : {101U, 7U, 53U}) {
    const Field f = Field::make(p);
    const auto values = random_values(rng, p);
    const FunctionTable t = table_from(f, values);
    const RowResult row = delta_row(t, Elem{1}, scratch, true);
    EXPECT_EQ(row.counts.size(), p);
    EXPECT_EQ(row.max_count, delta_row(t, Elem{1}).max_count);
  }
}

TEST(Du, ZeroDirectionIsRejected) {
  const Field f = Field::make(7);
  const FunctionTable t = tabulate(Poly::parse(f, "0,0,1"));
  for (auto body : {std::function<void()>([&] { delta_row(t, Elem{0}); }),
                    std::function<void()>([&] { solution_count(t, Elem{0}, Elem{1}); })}) {
    try {
      body();
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ZeroDirection);
    }
  }
}

TEST(Du, OutlierSolutionCount) {
  const Field f = Field::make(3671);
  const BinomialParams bp = BinomialParams::create(f, 4, Elem{1734});
  const FunctionTable t = binomial_f(bp);
  EXPECT_EQ(solution_count(t, Elem{1}, Elem{2307}), 13U);
  const auto values = oracle::binomial_values(3671, 4, 1734);
  EXPECT_EQ(oracle::solution_count(values, 3671, 1, 2307), 13U);
  const DuResult fast = du_fast_binomial(bp);
  EXPECT_EQ(fast.delta, 13U);
  EXPECT_EQ(fast.witness_c.value, 2307U);
}

TEST(Du, FastBinomialMatchesExhaustiveEngine) {
  for (std::uint64_t p : {7U, 11U, 19U, 23U, 31U, 43U, 47U, 59U}) {
    const Field f = Field::make(p);
    for (std::uint64_t s : {2U, 4U, 6U, 8U}) {
      BinomialKernel kernel(f, s);
      DeltaScratch scratch(p);
      for (std::uint64_t b = 2; b + 1 < p; ++b) {
        const BinomialParams bp = BinomialParams::create(f, s, Elem{b});
        if (!wl_is_pp(bp.to_wanlidl())) {
          EXPECT_THROW(kernel.evaluate(bp, scratch), Error);
          continue;
        }
        expect_same(kernel.evaluate(bp, scratch), differential_uniformity(binomial_f(bp)));
      }
    }
  }
}

TEST(Du, FastBinomialRequiresPermutation) {
  const Field f = Field::make(7);
  // x^2(eta(x) + 3) over F_7 fails WL3: 4 and 2 are both squares.
  const BinomialParams bp = BinomialParams::create(f, 2, Elem{3});
  ASSERT_FALSE(wl_is_pp(bp.to_wanlidl()));
  try {
    du_fast_binomial(bp);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionNotPP);
  }
}

TEST(Du, ReducedWanLidlEngineMatchesExhaustiveEngine) {
  std::mt19937_64 rng(21);
  const std::vector<Field> fields = {Field::make(7),  Field::make(13),   Field::make(37),   Field::make(61),
                                     Field::make(97), Field::make(3, 4), Field::make(5, 2), Field::make(7, 2)};
  for (const Field& f : fields) {
    for (std::uint64_t d : nt::divisors(f.order() - 1)) {
      if (d > 12) continue;
      for (std::uint64_t s = 1; s <= 5; ++s) {
        const WanLidlKernel kernel(f, s, d);
        DeltaScratch scratch(f.order());
        for (int trial = 0; trial < 3; ++trial) {
          std::vector<Elem> coeffs(d);
          for (auto& c : coeffs) c = Elem{rng() % f.order()};
          const WanLidlParams w = WanLidlParams::create(Poly(f, coeffs), s, d);
          const DuResult full = differential_uniformity(w.tabulate(), true);
          const DuResult reduced = kernel.evaluate(w, scratch, true);
          expect_same(reduced, full);
          EXPECT_EQ(reduced.per_a_max, full.per_a_max);
        }
      }
    }
  }
}

TEST(Du, ReducedKernelRejectsForeignParams) {
  const Field f = Field::make(13);
  const WanLidlKernel kernel(f, 2, 4);
  DeltaScratch scratch(13);
  EXPECT_THROW(kernel.evaluate(WanLidlParams::create(Poly::parse(f, "1,1"), 2, 2), scratch), Error);
}

TEST(Du, NegationConjugateSharesDelta) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const std::vector<std::uint64_t> primes = {5, 29, 101, 163, 211, 293};
    const std::uint64_t p = primes[rng() % primes.size()];
    const Field f = Field::make(p);
    const auto values = random_values(rng, p);
    std::vector<std::uint64_t> conj(p);
    for (std::uint64_t x = 0; x < p; ++x) conj[x] = (p - values[(p - x) % p]) % p;
    EXPECT_EQ(differential_uniformity(table_from(f, values)).delta, differential_uniformity(table_from(f, conj)).delta);
  }
}

TEST(Spectrum, MatchesOracleAndSumsToQTimesQMinusOne) {
  std::mt19937_64 rng(8);
  for (std::uint64_t p : {7U, 23U, 67U}) {
    const Field f = Field::make(p);
    const auto values = random_values(rng, p);
    const DiffSpectrum spectrum = differential_spectrum(table_from(f, values));
    EXPECT_EQ(spectrum.weighted_sum(), p * (p - 1));
    std::map<std::uint64_t, std::uint64_t> expected = oracle::spectrum(values, p);
    EXPECT_EQ(spectrum.histogram, expected);
  }
  // A planar function has every DDT entry equal to 1.
  const Field f = Field::make(11);
  const DiffSpectrum planar = differential_spectrum(tabulate(Poly::parse(f, "0,0,1")));
  EXPECT_EQ(planar.histogram, (std::map<std::uint64_t, std::uint64_t>{{1, 110}}));
}

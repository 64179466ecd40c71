#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wldu/ff.hpp"

namespace wldu {

// Invariant suites behind `wldu verify-bounds` and `wldu lemma-check`. Each
// suite is deterministic for a fixed seed and collects one reproduction line
// per violation instead of stopping at the first.

struct SuiteReport {
  std::string theorem;
  /// Polynomials examined.
  std::uint64_t instances = 0;
  /// Of those, permutations (by the Wan-Lidl criterion).
  std::uint64_t permutations = 0;
  /// Instances whose theorem hypotheses hold, i.e. bound comparisons made.
  std::uint64_t bound_checks = 0;
  std::uint64_t tight = 0;
  std::uint64_t max_delta = 0;
  /// Results confirmed against the exhaustive O(q^2) engine.
  std::uint64_t cross_checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

struct GeneralSuiteConfig {
  std::uint64_t instances = 500;
  /// Random odd primes q < q_max.
  std::uint64_t q_max = 500;
  std::uint64_t s_min = 2;
  std::uint64_t s_max = 6;
  /// d ranges over divisors of q-1 with d <= d_max.
  std::uint64_t d_max = 6;
  std::uint64_t seed = 0x5eed;
};

/// d(sd-1)+2 on random (q, s, d, h), PP not required. delta is measured with
/// the exhaustive engine. Violations record whether h vanishes somewhere on H.
SuiteReport verify_general_suite(const GeneralSuiteConfig& config);

struct BinomialSuiteConfig {
  std::uint64_t p_max = 1000;
  std::vector<std::uint64_t> s_values = {2, 4, 6};
};

/// 4s-3 for every permutation x^s(eta(x)+b), b not in {0, 1, -1}, over every
/// prime p = 3 mod 4 with p <= p_max. Exhaustive in b.
SuiteReport verify_binomial_suite(const BinomialSuiteConfig& config);

struct CorollarySuiteConfig {
  std::uint64_t q_max = 2000;
};

/// x^2(eta(x) +- 3) is a permutation with delta <= 4 for each prime
/// q = 3 mod 8, 3 < q < q_max.
SuiteReport verify_corollary_suite(const CorollarySuiteConfig& config);

struct QuadraticSuiteConfig {
  std::uint64_t q_max = 500;
  std::vector<std::uint64_t> d_values = {2, 4, 6};
  /// Coefficient alphabet size for d > 2; d = 2 always uses all of F_q.
  std::uint64_t alphabet = 20;
  /// Enumerate alphabet^d completely when it has at most this many tuples...
  std::uint64_t exhaustive_limit = 64000000;
  /// ...otherwise draw this many tuples per (q, d).
  std::uint64_t samples = 100000;
  /// Permutations per (q, d) re-measured with the exhaustive engine.
  std::uint64_t cross_checks = 2;
  std::uint64_t seed = 0x5eed;
};

/// 2d^2 - 3d/2 for permutations x^2 h(T(x)) with d even and (q-1)/d odd,
/// over primes q < q_max.
SuiteReport verify_quadratic_suite(const QuadraticSuiteConfig& config);

struct LemmaSuiteConfig {
  /// Stop after this many applicable configurations.
  std::uint64_t applicable = 1000;
  std::uint64_t q_max = 100;
  std::uint64_t s_max = 5;
  std::uint64_t d_max = 4;
  std::uint64_t seed = 0x5eed;
  /// Give up after this many draws in total.
  std::uint64_t max_draws = 1000000;
};

struct LemmaSuiteReport {
  std::uint64_t draws = 0;
  std::uint64_t applicable = 0;
  std::uint64_t not_applicable = 0;
  std::uint64_t diagonal = 0;
  std::uint64_t off_diagonal = 0;
  /// Applicable draws whose roots all lie in the cell, so the T identities ran.
  std::uint64_t t_identities_checked = 0;
  std::uint64_t identity_passes = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Random product-of-roots configurations. Half the draws pick c so that a
/// random x0 is a root in its own cell, which exercises the T identities.
LemmaSuiteReport verify_lemma_suite(const LemmaSuiteConfig& config);

/// Odd primes in [lo, hi).
std::vector<std::uint64_t> odd_primes_below(std::uint64_t lo, std::uint64_t hi);

}  // namespace wldu

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string_view>
#include <vector>

namespace wldu {

enum class Engine { Fast, General, Both };

std::string_view to_string(Engine engine);
/// Parses "fast", "general" or "both"; throws InvalidArgument.
Engine parse_engine(std::string_view text);

struct SweepConfig {
  /// Even exponent; 2, 4 and 6 have published reference tables.
  std::uint64_t s = 2;
  /// Primes below 7 are skipped.
  std::uint64_t p_min = 7;
  std::uint64_t p_max = 7;
  Engine engine = Engine::Fast;
  /// Worker threads; 0 picks default_jobs().
  unsigned jobs = 0;
  /// With Engine::Both, every b is cross-checked below this prime...
  std::uint64_t full_cross_check_below = 200;
  /// ...and this many sampled permutation b values per row above it.
  std::size_t spot_checks = 10;
  std::uint64_t seed = 0x5eed;
};

/// Histogram of differential uniformity over the permutations
/// x^s(eta(x) + b), 2 <= b <= (p-1)/2, for one prime p.
struct TableRow {
  std::uint64_t p = 0;
  std::map<std::uint64_t, std::uint64_t> counts;
  /// b values rejected by the permutation test, for diagnostics only.
  std::uint64_t rejected_wl2 = 0;
  std::uint64_t rejected_wl3 = 0;

  std::uint64_t total() const;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct Achiever {
  std::uint64_t p = 0;
  std::uint64_t b = 0;
  std::uint64_t delta = 0;
  std::uint64_t bound = 0;
  friend bool operator==(const Achiever&, const Achiever&) = default;
};

struct SweepSummary {
  std::uint64_t total_pps = 0;
  std::uint64_t max_delta = 0;
  /// Instances with delta = 4s - 3, ascending (p, b).
  std::vector<Achiever> tight;
  /// Instances with delta > 4s - 3; any entry contradicts the bound.
  std::vector<Achiever> violations;
  std::uint64_t cross_checked = 0;
};

struct SweepResult {
  std::uint64_t s = 0;
  std::vector<TableRow> rows;
  SweepSummary summary;
};

/// Worker count from WLDU_JOBS if set, else the hardware concurrency.
unsigned default_jobs();

/// True iff p is an odd prime with gcd(s, (p-1)/2) = 1.
bool is_admissible(std::uint64_t p, std::uint64_t s);

/// Primes p in [p_min, p_max] with gcd(s, (p-1)/2) = 1. For s in {2, 4}
/// that is p = 3 mod 4; for s = 6 additionally p = 5 mod 6.
std::vector<std::uint64_t> admissible_primes(std::uint64_t s, std::uint64_t p_min, std::uint64_t p_max);

/// One table row, single threaded. Throws NotAdmissible.
TableRow sweep_row(std::uint64_t p, std::uint64_t s, Engine engine = Engine::Fast);

/// All rows of the configured range. Rows come back in ascending p whatever
/// the worker count. Throws EngineMismatch if the two engines disagree.
SweepResult run_sweep(const SweepConfig& config);

/// Instances meeting 4s - 3 exactly over the configured range.
std::vector<Achiever> find_bound_achievers(const SweepConfig& config);

/// p,delta,count per nonzero cell, ascending (p, delta).
void write_long_csv(std::ostream& out, const SweepResult& result);
/// p,d2,...,d{4s-3}.
void write_wide_csv(std::ostream& out, const SweepResult& result);
/// Rows plus the summary block.
void write_json(std::ostream& out, const SweepResult& result);
/// Aligned table in the layout of the published tables.
void write_pretty(std::ostream& out, const SweepResult& result);

/// Runs body(unit, worker) for unit in [0, units) over `jobs` threads.
/// Exceptions are rethrown on the calling thread after all workers stop.
void parallel_for(std::size_t units, unsigned jobs, const std::function<void(std::size_t, unsigned)>& body);

}  // namespace wldu

#include "wldu/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <thread>

#include <json.hpp>

#include "wldu/bounds.hpp"
#include "wldu/du.hpp"
#include "wldu/ff.hpp"
#include "wldu/numtheory.hpp"
#include "wldu/wanlidl.hpp"

namespace wldu {

std::string_view to_string(Engine engine) {
  switch (engine) {
    case Engine::Fast: return "fast";
    case Engine::General: return "general";
    case Engine::Both: return "both";
  }
  return "?";
}

Engine parse_engine(std::string_view text) {
  if (text == "fast") return Engine::Fast;
  if (text == "general") return Engine::General;
  if (text == "both") return Engine::Both;
  throw Error(ErrorCode::InvalidArgument, "unknown engine \"" + std::string(text) + "\"");
}

std::uint64_t TableRow::total() const {
  std::uint64_t n = 0;
  for (const auto& [delta, count] : counts) n += count;
  return n;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("WLDU_JOBS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t units, unsigned jobs, const std::function<void(std::size_t, unsigned)>& body) {
  if (units == 0) return;
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::size_t>(units, 1U << 16U))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < units; ++i) body(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      while (!stop.load(std::memory_order_relaxed)) {
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= units) break;
        try {
          body(i, w);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          stop = true;
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

bool is_admissible(std::uint64_t p, std::uint64_t s) {
  return p > 2 && nt::is_prime(p) && std::gcd(s, (p - 1) / 2) == 1;
}

std::vector<std::uint64_t> admissible_primes(std::uint64_t s, std::uint64_t p_min, std::uint64_t p_max) {
  std::vector<std::uint64_t> out;
  if (p_min > p_max) return out;
  for (std::uint64_t p : nt::primes_in_range(p_min, p_max)) {
    if (p == 2) continue;
    const bool by_gcd = std::gcd(s, (p - 1) / 2) == 1;
    if (s == 2 || s == 4 || s == 6) {
      const bool by_congruence = p % 4 == 3 && (s != 6 || p % 6 == 5);
      if (by_congruence != by_gcd) {
        throw Error(ErrorCode::InvalidArgument, "congruence and gcd tests disagree at p=" + std::to_string(p));
      }
    }
    if (by_gcd) out.push_back(p);
  }
  return out;
}

namespace {

struct PrimeSetup {
  std::uint64_t p = 0;
  std::optional<Field> field;
  std::optional<BinomialKernel> kernel;
  std::vector<std::uint64_t> pp_bs;
  std::vector<bool> cross_check;
  std::uint64_t rejected_wl2 = 0;
  std::uint64_t rejected_wl3 = 0;
};

void prepare(PrimeSetup& setup, const SweepConfig& config) {
  const std::uint64_t p = setup.p;
  setup.field = Field::make(p);
  setup.kernel.emplace(*setup.field, config.s);
  for (std::uint64_t b = 2; b <= (p - 1) / 2; ++b) {
    const BinomialParams params = BinomialParams::create(*setup.field, config.s, Elem{b});
    const PpVerdict verdict = wl_is_pp(params.to_wanlidl());
    if (verdict.is_pp) {
      setup.pp_bs.push_back(b);
    } else if (verdict.failed == WlCondition::WL2) {
      ++setup.rejected_wl2;
    } else {
      ++setup.rejected_wl3;
    }
  }

  const std::size_t n = setup.pp_bs.size();
  setup.cross_check.assign(n, false);
  if (config.engine != Engine::Both) return;
  if (p < config.full_cross_check_below || n <= config.spot_checks) {
    setup.cross_check.assign(n, true);
    return;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(config.seed ^ (p * 0x9E3779B97F4A7C15ULL));
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i < config.spot_checks; ++i) setup.cross_check[order[i]] = true;
}

struct Unit {
  std::size_t prime = 0;
  std::size_t index = 0;
};

void run_batch(std::vector<PrimeSetup>& batch, const SweepConfig& config, unsigned jobs, SweepResult& result) {
  parallel_for(batch.size(), jobs, [&](std::size_t i, unsigned) { prepare(batch[i], config); });

  std::vector<Unit> units;
  std::uint64_t max_p = 0;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    max_p = std::max(max_p, batch[i].p);
    for (std::size_t k = 0; k < batch[i].pp_bs.size(); ++k) units.push_back({i, k});
  }

  std::vector<DeltaScratch> scratch;
  scratch.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) scratch.emplace_back(max_p);
  std::vector<std::uint64_t> deltas(units.size(), 0);
  std::vector<std::uint8_t> checked(units.size(), 0);

  parallel_for(units.size(), jobs, [&](std::size_t u, unsigned worker) {
    const PrimeSetup& setup = batch[units[u].prime];
    const std::uint64_t b = setup.pp_bs[units[u].index];
    const BinomialParams params = BinomialParams::create(*setup.field, config.s, Elem{b});
    auto general = [&] {
      std::vector<Elem> values;
      setup.kernel->tabulate(params.b(), values);
      return differential_uniformity(FunctionTable(*setup.field, std::move(values))).delta;
    };
    if (config.engine == Engine::General) {
      deltas[u] = general();
      return;
    }
    deltas[u] = setup.kernel->evaluate(params, scratch[worker]).delta;
    if (setup.cross_check[units[u].index]) {
      const std::uint64_t other = general();
      if (other != deltas[u]) {
        throw Error(ErrorCode::EngineMismatch, "p=" + std::to_string(setup.p) + " b=" + std::to_string(b) +
                                                   ": fast=" + std::to_string(deltas[u]) +
                                                   " general=" + std::to_string(other));
      }
      checked[u] = 1;
    }
  });

  const std::uint64_t bound = bound_binomial_even_s(config.s);
  for (std::size_t i = 0; i < batch.size(); ++i) {
    TableRow row;
    row.p = batch[i].p;
    row.rejected_wl2 = batch[i].rejected_wl2;
    row.rejected_wl3 = batch[i].rejected_wl3;
    result.rows.push_back(std::move(row));
  }
  const std::size_t first_row = result.rows.size() - batch.size();
  for (std::size_t u = 0; u < units.size(); ++u) {
    const PrimeSetup& setup = batch[units[u].prime];
    const std::uint64_t b = setup.pp_bs[units[u].index];
    const std::uint64_t delta = deltas[u];
    ++result.rows[first_row + units[u].prime].counts[delta];
    auto& summary = result.summary;
    ++summary.total_pps;
    summary.max_delta = std::max(summary.max_delta, delta);
    summary.cross_checked += checked[u];
    if (delta == bound) summary.tight.push_back({setup.p, b, delta, bound});
    if (delta > bound) summary.violations.push_back({setup.p, b, delta, bound});
  }
}

constexpr std::uint64_t kBatchElements = 1U << 22U;

}  // namespace

SweepResult run_sweep(const SweepConfig& config) {
  if (config.s == 0 || config.s % 2 != 0) throw Error(ErrorCode::SNotEven, "sweep exponent must be even");
  if (config.p_min > config.p_max) throw Error(ErrorCode::InvalidArgument, "empty prime range");
  const unsigned jobs = config.jobs == 0 ? default_jobs() : config.jobs;

  SweepResult result;
  result.s = config.s;
  const std::vector<std::uint64_t> primes = admissible_primes(config.s, std::max<std::uint64_t>(config.p_min, 7), config.p_max);

  std::vector<PrimeSetup> batch;
  std::uint64_t batch_size = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    batch.emplace_back().p = primes[i];
    batch_size += primes[i];
    if (batch_size >= kBatchElements || i + 1 == primes.size()) {
      run_batch(batch, config, jobs, result);
      batch.clear();
      batch_size = 0;
    }
  }
  return result;
}

TableRow sweep_row(std::uint64_t p, std::uint64_t s, Engine engine) {
  if (!is_admissible(p, s)) {
    throw Error(ErrorCode::NotAdmissible, "p=" + std::to_string(p) + " is not admissible for s=" + std::to_string(s));
  }
  SweepConfig config;
  config.s = s;
  config.p_min = p;
  config.p_max = p;
  config.engine = engine;
  config.jobs = 1;
  const SweepResult result = run_sweep(config);
  if (result.rows.empty()) {
    TableRow row;
    row.p = p;
    return row;
  }
  return result.rows.front();
}

std::vector<Achiever> find_bound_achievers(const SweepConfig& config) { return run_sweep(config).summary.tight; }

void write_long_csv(std::ostream& out, const SweepResult& result) {
  out << "p,delta,count\n";
  for (const TableRow& row : result.rows) {
    for (const auto& [delta, count] : row.counts) out << row.p << ',' << delta << ',' << count << '\n';
  }
}

void write_wide_csv(std::ostream& out, const SweepResult& result) {
  const std::uint64_t top = 4 * result.s - 3;
  out << 'p';
  for (std::uint64_t k = 2; k <= top; ++k) out << ",d" << k;
  out << '\n';
  for (const TableRow& row : result.rows) {
    out << row.p;
    for (std::uint64_t k = 2; k <= top; ++k) {
      const auto it = row.counts.find(k);
      out << ',' << (it == row.counts.end() ? 0 : it->second);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const SweepResult& result) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["s"] = result.s;
  ordered_json rows = ordered_json::array();
  for (const TableRow& row : result.rows) {
    ordered_json counts = ordered_json::object();
    for (const auto& [delta, count] : row.counts) counts[std::to_string(delta)] = count;
    rows.push_back({{"p", row.p},
                    {"counts", counts},
                    {"rejected_wl2", row.rejected_wl2},
                    {"rejected_wl3", row.rejected_wl3}});
  }
  doc["rows"] = rows;
  auto achievers = [](const std::vector<Achiever>& list) {
    ordered_json arr = ordered_json::array();
    for (const Achiever& a : list) arr.push_back({{"p", a.p}, {"b", a.b}, {"delta", a.delta}, {"bound", a.bound}});
    return arr;
  };
  doc["summary"] = {{"total_pps", result.summary.total_pps},
                    {"max_delta", result.summary.max_delta},
                    {"cross_checked", result.summary.cross_checked},
                    {"bound_tight", achievers(result.summary.tight)},
                    {"violations", achievers(result.summary.violations)}};
  out << doc.dump(2) << '\n';
}

void write_pretty(std::ostream& out, const SweepResult& result) {
  const std::uint64_t top = 4 * result.s - 3;
  out << std::setw(7) << "p" << " |";
  for (std::uint64_t k = 2; k <= top; ++k) out << std::setw(6) << k;
  out << '\n' << std::string(9 + 6 * (top - 1), '-') << '\n';
  for (const TableRow& row : result.rows) {
    out << std::setw(7) << row.p << " |";
    for (std::uint64_t k = 2; k <= top; ++k) {
      const auto it = row.counts.find(k);
      out << std::setw(6) << (it == row.counts.end() ? 0 : it->second);
    }
    out << '\n';
  }
}

}  // namespace wldu

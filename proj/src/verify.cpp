#include "wldu/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "wldu/bounds.hpp"
#include "wldu/du.hpp"
#include "wldu/lemma.hpp"
#include "wldu/numtheory.hpp"
#include "wldu/wanlidl.hpp"

namespace wldu {

std::vector<std::uint64_t> odd_primes_below(std::uint64_t lo, std::uint64_t hi) {
  if (hi <= 3 || lo >= hi) return {};
  std::vector<std::uint64_t> out = nt::primes_in_range(std::max<std::uint64_t>(lo, 3), hi - 1);
  return out;
}

namespace {

using Rng = std::mt19937_64;

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[uniform(rng, 0, v.size() - 1)];
}

std::string describe(const WanLidlParams& params) {
  std::ostringstream out;
  out << "q=" << params.field().order() << " s=" << params.s() << " d=" << params.d() << " h=" << params.h().to_string();
  return out.str();
}

bool vanishes_on_group(const WanLidlParams& params) {
  for (Elem lambda : params.field().subgroup_H(params.d())) {
    if (params.h().eval(lambda).value == 0) return true;
  }
  return false;
}

void record(SuiteReport& report, std::uint64_t delta, std::uint64_t bound) {
  ++report.bound_checks;
  report.max_delta = std::max(report.max_delta, delta);
  if (delta == bound) ++report.tight;
}

std::vector<Elem> random_coeffs(Rng& rng, const Field& field, std::uint64_t n) {
  std::vector<Elem> out(n);
  for (auto& c : out) c = Elem{uniform(rng, 0, field.order() - 1)};
  return out;
}

// Permutation filter and differential uniformity for x^2 h(T(x)) over a prime
// field, working on the values v_j = h(lambda_j) of h on H = {lambda_j}, which
// determine f. Requires (q-1)/d odd, so T(-1) = -1 and the rows for a and -a
// have the same maximum; only d/2 rows are scanned.
class QuadraticScanner {
 public:
  static constexpr std::uint32_t kMaxOrder = 8192;

  QuadraticScanner(const Field& field, std::uint64_t d, std::vector<Elem> alphabet)
      : q_(static_cast<std::uint32_t>(field.order())),
        d_(static_cast<std::uint32_t>(d)),
        n_(static_cast<std::uint32_t>(alphabet.size())),
        alphabet_(std::move(alphabet)),
        reciprocal_(((std::uint64_t{1} << 40) + q_ - 1) / q_) {
    if (q_ >= kMaxOrder || d_ < 2 || d_ % 2 != 0 || d_ > 14 || ((q_ - 1) / d_) % 2 == 0) {
      throw Error(ErrorCode::InvalidArgument, "quadratic scanner needs q < 8192, even d <= 14 and (q-1)/d odd");
    }
    const std::vector<Elem> group = field.subgroup_H(d);
    std::vector<std::uint32_t> t_index(q_, 0);
    for (std::uint32_t x = 1; x < q_; ++x) {
      const Elem t = field.pow(Elem{x}, (q_ - 1) / d_);
      t_index[x] = static_cast<std::uint32_t>(std::find(group.begin(), group.end(), t) - group.begin());
    }

    weights_.resize(static_cast<std::size_t>(d_) * n_ * d_);
    for (std::uint32_t i = 0; i < d_; ++i) {
      for (std::uint32_t a = 0; a < n_; ++a) {
        for (std::uint32_t j = 0; j < d_; ++j) {
          weights_[(i * n_ + a) * d_ + j] =
              static_cast<std::uint32_t>(field.mul(alphabet_[a], field.pow(group[j], i)).value);
        }
      }
    }

    // bits_[j][s] for an unreduced sum s < 2q: the position of lambda_j^2 T(s),
    // or the zero flag if s = 0 mod q.
    bits_.assign(static_cast<std::size_t>(d_) * 2 * q_, 0);
    for (std::uint32_t j = 0; j < d_; ++j) {
      for (std::uint32_t s = 0; s < 2 * q_; ++s) {
        const std::uint32_t x = s % q_;
        bits_[j * 2 * q_ + s] = x == 0 ? kZeroFlag : static_cast<std::uint16_t>(1U << ((t_index[x] + 2 * j) % d_));
      }
    }

    // Direction-1 difference Y -> (Y+1)^2 v_I - Y^2 v_J, grouped by the cell
    // (I, J) = (index T(Y+1), index T(Y)). Zero arguments get any index since
    // their square factor vanishes.
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> cells(d_ * d_);
    for (std::uint32_t y = 0; y < q_; ++y) {
      const std::uint32_t up = (y + 1) % q_;
      const std::uint64_t sq = std::uint64_t{y} * y % q_;
      cells[t_index[up] * d_ + t_index[y]].emplace_back(static_cast<std::uint32_t>(std::uint64_t{up} * up % q_),
                                                        static_cast<std::uint32_t>((q_ - sq) % q_));
    }
    cell_start_.push_back(0);
    for (const auto& cell : cells) {
      for (const auto& [plus, minus] : cell) {
        plus_.push_back(plus);
        minus_.push_back(minus);
      }
      cell_start_.push_back(static_cast<std::uint32_t>(plus_.size()));
    }
    counts_.assign(q_, 0);
  }

  std::uint64_t tuples() const {
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < d_; ++i) n *= n_;
    return n;
  }

  /// Values of h on H for the coefficient digits.
  void values(const std::vector<std::uint32_t>& digits, std::vector<std::uint32_t>& v) const {
    v.assign(d_, 0);
    for (std::uint32_t i = 0; i < d_; ++i) {
      for (std::uint32_t j = 0; j < d_; ++j) v[j] = (v[j] + weights_[(i * n_ + digits[i]) * d_ + j]) % q_;
    }
  }

  bool is_pp(const std::uint32_t* v) const {
    std::uint32_t mask = 0;
    for (std::uint32_t j = 0; j < d_; ++j) mask |= bits_[j * 2 * q_ + v[j]];
    return mask == full_mask();
  }

  std::uint64_t delta(const std::uint32_t* v) {
    std::uint32_t best = 0;
    for (std::uint32_t k = 0; k < d_ / 2; ++k) best = std::max(best, row_max(v, k));
    return best;
  }

  /// Calls visit(digits, v) for every digit tuple whose polynomial is a PP.
  /// Returns the number of tuples examined.
  template <class Visit>
  std::uint64_t scan(Visit&& visit) {
    switch (d_) {
      case 2: return scan_impl<2>(visit);
      case 4: return scan_impl<4>(visit);
      case 6: return scan_impl<6>(visit);
      default: return scan_impl<0>(visit);
    }
  }

  /// h for a digit tuple, as a field polynomial.
  Poly poly(const Field& field, const std::vector<std::uint32_t>& digits) const {
    std::vector<Elem> coeffs(d_);
    for (std::uint32_t i = 0; i < d_; ++i) coeffs[i] = alphabet_[digits[i]];
    return Poly(field, coeffs);
  }

 private:
  static constexpr std::uint16_t kZeroFlag = 0x8000;

  std::uint32_t full_mask() const { return (1U << d_) - 1; }

  // D is d when known at compile time, 0 otherwise.
  template <std::uint32_t D, class Visit>
  std::uint64_t scan_impl(Visit& visit) {
    const std::uint32_t d = D != 0 ? D : d_;
    std::vector<std::uint32_t> digits(d, 0);
    std::vector<std::uint32_t> partial((d + 1) * d, 0);
    std::vector<std::uint32_t> v(d);
    const std::uint32_t last = d - 1;
    const std::uint32_t full = full_mask();
    const std::uint32_t stride = 2 * q_;
    std::uint64_t examined = 0;
    advance(digits, partial, 0);
    // Odometer over digits[0..last-1]; the last digit is the inner loop.
    for (;;) {
      const std::uint32_t* base = &partial[last * d];
      const std::uint32_t* w = &weights_[last * n_ * d];
      for (std::uint32_t a = 0; a < n_; ++a, w += d) {
        std::uint32_t mask = 0;
        for (std::uint32_t j = 0; j < d; ++j) mask |= bits_[j * stride + base[j] + w[j]];
        if (mask != full) continue;
        digits[last] = a;
        for (std::uint32_t j = 0; j < d; ++j) {
          const std::uint32_t s = base[j] + w[j];
          v[j] = s >= q_ ? s - q_ : s;
        }
        visit(digits, v.data());
      }
      examined += n_;
      std::int64_t i = static_cast<std::int64_t>(last) - 1;
      while (i >= 0 && ++digits[i] == n_) digits[i--] = 0;
      if (i < 0) break;
      advance(digits, partial, static_cast<std::uint32_t>(i));
    }
    return examined;
  }


  // Recomputes the partial sums of levels from..d-2 after digits changed.
  void advance(const std::vector<std::uint32_t>& digits, std::vector<std::uint32_t>& partial, std::uint32_t from) const {
    for (std::uint32_t lvl = from; lvl + 1 < d_; ++lvl) {
      const std::uint32_t* w = &weights_[(lvl * n_ + digits[lvl]) * d_];
      for (std::uint32_t j = 0; j < d_; ++j) {
        const std::uint32_t s = partial[lvl * d_ + j] + w[j];
        partial[(lvl + 1) * d_ + j] = s >= q_ ? s - q_ : s;
      }
    }
  }

  // Largest count in the row of directions a with T(a) = lambda_k.
  std::uint32_t row_max(const std::uint32_t* v, std::uint32_t k) {
    std::uint16_t* counts = counts_.data();
    for (std::uint32_t i = 0; i < d_; ++i) {
      const std::uint32_t a = v[(i + k) % d_];
      for (std::uint32_t j = 0; j < d_; ++j) {
        const std::uint32_t b = v[(j + k) % d_];
        const std::uint32_t cell = i * d_ + j;
        for (std::uint32_t t = cell_start_[cell]; t < cell_start_[cell + 1]; ++t) {
          // x < 2q^2 < 2^27 and 2q^3 < 2^40, so the reciprocal quotient is exact.
          const std::uint64_t x = a * plus_[t] + b * minus_[t];
          ++counts[x - ((x * reciprocal_) >> 40) * q_];
        }
      }
    }
    const std::uint32_t best = *std::max_element(counts_.begin(), counts_.end());
    std::fill(counts_.begin(), counts_.end(), 0);
    return best;
  }

  std::uint32_t q_, d_, n_;
  std::vector<Elem> alphabet_;
  std::uint64_t reciprocal_;
  std::vector<std::uint32_t> weights_;
  std::vector<std::uint16_t> bits_;
  std::vector<std::uint32_t> cell_start_, plus_, minus_;
  std::vector<std::uint16_t> counts_;
};

}  // namespace

SuiteReport verify_general_suite(const GeneralSuiteConfig& config) {
  SuiteReport report;
  report.theorem = std::string(theorem_id(Theorem::General));
  const std::vector<std::uint64_t> primes = odd_primes_below(3, config.q_max);
  if (primes.empty() || config.s_min < 2 || config.s_min > config.s_max || config.d_max == 0) {
    throw Error(ErrorCode::InvalidArgument, "empty parameter range for the general suite");
  }
  Rng rng(config.seed);
  std::map<std::uint64_t, Field> fields;
  for (std::uint64_t i = 0; i < config.instances; ++i) {
    const std::uint64_t q = pick(rng, primes);
    auto it = fields.find(q);
    if (it == fields.end()) it = fields.emplace(q, Field::make(q)).first;
    const Field& field = it->second;
    const std::uint64_t s = uniform(rng, config.s_min, config.s_max);
    std::vector<std::uint64_t> ds;
    for (std::uint64_t d : nt::divisors(q - 1)) {
      if (d <= config.d_max) ds.push_back(d);
    }
    const std::uint64_t d = pick(rng, ds);
    const WanLidlParams params = WanLidlParams::create(Poly(field, random_coeffs(rng, field, d)), s, d);

    const DuResult du = differential_uniformity(params.tabulate());
    ++report.instances;
    ++report.cross_checked;
    if (wl_is_pp(params)) ++report.permutations;
    const std::uint64_t bound = bound_general(s, d);
    record(report, du.delta, bound);
    if (du.delta > bound) {
      std::ostringstream line;
      line << describe(params) << " delta=" << du.delta << " bound=" << bound << " a=" << du.witness_a.value
           << " c=" << du.witness_c.value << " h_vanishes_on_H=" << (vanishes_on_group(params) ? "true" : "false");
      report.violations.push_back(line.str());
    }
  }
  return report;
}

SuiteReport verify_binomial_suite(const BinomialSuiteConfig& config) {
  SuiteReport report;
  report.theorem = std::string(theorem_id(Theorem::BinomialEvenS));
  for (std::uint64_t s : config.s_values) bound_binomial_even_s(s);
  for (std::uint64_t p : odd_primes_below(7, config.p_max + 1)) {
    if (p % 4 != 3) continue;
    const Field field = Field::make(p);
    for (std::uint64_t s : config.s_values) {
      const BinomialKernel kernel(field, s);
      DeltaScratch scratch(p);
      const std::uint64_t bound = bound_binomial_even_s(s);
      for (std::uint64_t b = 2; b + 1 < p; ++b) {
        const BinomialParams params = BinomialParams::create(field, s, Elem{b});
        ++report.instances;
        if (!wl_is_pp(params.to_wanlidl())) continue;
        ++report.permutations;
        const DuResult du = kernel.evaluate(params, scratch);
        record(report, du.delta, bound);
        if (du.delta > bound) {
          std::ostringstream line;
          line << "p=" << p << " s=" << s << " b=" << b << " delta=" << du.delta << " bound=" << bound
               << " c=" << du.witness_c.value;
          report.violations.push_back(line.str());
        }
      }
    }
  }
  return report;
}

SuiteReport verify_corollary_suite(const CorollarySuiteConfig& config) {
  SuiteReport report;
  report.theorem = std::string(theorem_id(Theorem::CorollaryB3));
  for (std::uint64_t q : odd_primes_below(5, config.q_max)) {
    if (q % 8 != 3) continue;
    const CorollaryCertificate cert = corollary_b3_certify(Field::make(q));
    report.instances += 2;
    report.permutations += static_cast<std::uint64_t>(cert.plus_is_pp) + static_cast<std::uint64_t>(cert.minus_is_pp);
    if (cert.plus_is_pp) record(report, cert.plus_delta, kCorollaryB3Bound);
    if (cert.minus_is_pp) record(report, cert.minus_delta, kCorollaryB3Bound);
    if (!cert.holds()) {
      std::ostringstream line;
      line << "q=" << q << " plus_pp=" << cert.plus_is_pp << " plus_delta=" << cert.plus_delta
           << " minus_pp=" << cert.minus_is_pp << " minus_delta=" << cert.minus_delta;
      report.violations.push_back(line.str());
    }
  }
  return report;
}

SuiteReport verify_quadratic_suite(const QuadraticSuiteConfig& config) {
  SuiteReport report;
  report.theorem = std::string(theorem_id(Theorem::QuadraticEvenD));
  for (std::uint64_t d : config.d_values) bound_s2_even_d(d);
  if (config.q_max > QuadraticScanner::kMaxOrder) {
    throw Error(ErrorCode::InvalidArgument, "quadratic suite supports q_max <= 8192");
  }
  Rng rng(config.seed);

  for (std::uint64_t q : odd_primes_below(3, config.q_max)) {
    const Field field = Field::make(q);
    for (std::uint64_t d : config.d_values) {
      if ((q - 1) % d != 0 || ((q - 1) / d) % 2 == 0) continue;
      const std::uint64_t bound = bound_s2_even_d(d);

      std::vector<Elem> alphabet;
      if (d == 2 || q <= config.alphabet) {
        for (std::uint64_t x = 0; x < q; ++x) alphabet.push_back(Elem{x});
      } else {
        std::vector<std::uint64_t> all(q);
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        for (std::uint64_t i = 0; i < config.alphabet; ++i) alphabet.push_back(Elem{all[i]});
        std::sort(alphabet.begin(), alphabet.end());
      }
      const std::uint64_t n = alphabet.size();
      QuadraticScanner scanner(field, d, alphabet);
      // d = 2 is always enumerated over all of F_q^2.
      const bool exhaustive = d == 2 || scanner.tuples() <= config.exhaustive_limit;

      const WanLidlKernel kernel(field, 2, d);
      DeltaScratch scratch(q);
      std::uint64_t cross_left = config.cross_checks;
      auto visit = [&](const std::vector<std::uint32_t>& digits, const std::uint32_t* v) {
        ++report.permutations;
        const std::uint64_t delta = scanner.delta(v);
        if (cross_left != 0) {
          --cross_left;
          ++report.cross_checked;
          const WanLidlParams params = WanLidlParams::create(scanner.poly(field, digits), 2, d);
          const std::uint64_t reduced = kernel.evaluate(params, scratch).delta;
          const std::uint64_t full = differential_uniformity(params.tabulate()).delta;
          if (!wl_is_pp(params) || reduced != delta || full != delta) {
            throw Error(ErrorCode::EngineMismatch, describe(params) + ": scanner and exhaustive engine disagree");
          }
        }
        record(report, delta, bound);
        if (delta > bound) {
          const WanLidlParams params = WanLidlParams::create(scanner.poly(field, digits), 2, d);
          report.violations.push_back(describe(params) + " delta=" + std::to_string(delta) +
                                      " bound=" + std::to_string(bound));
        }
      };

      if (exhaustive) {
        report.instances += scanner.scan(visit);
        continue;
      }
      std::vector<std::uint32_t> digits(d);
      std::vector<std::uint32_t> v;
      for (std::uint64_t k = 0; k < config.samples; ++k) {
        for (auto& digit : digits) digit = static_cast<std::uint32_t>(uniform(rng, 0, n - 1));
        scanner.values(digits, v);
        ++report.instances;
        if (scanner.is_pp(v.data())) visit(digits, v.data());
      }
    }
  }
  return report;
}

LemmaSuiteReport verify_lemma_suite(const LemmaSuiteConfig& config) {
  LemmaSuiteReport report;
  const std::vector<std::uint64_t> primes = odd_primes_below(3, config.q_max);
  if (primes.empty() || config.s_max < 2 || config.d_max == 0) {
    throw Error(ErrorCode::InvalidArgument, "empty parameter range for the lemma suite");
  }
  Rng rng(config.seed);
  std::map<std::uint64_t, Field> fields;
  while (report.applicable < config.applicable && report.draws < config.max_draws) {
    ++report.draws;
    const std::uint64_t q = pick(rng, primes);
    auto fit = fields.find(q);
    if (fit == fields.end()) fit = fields.emplace(q, Field::make(q)).first;
    const Field& field = fit->second;
    const std::uint64_t s = uniform(rng, 2, config.s_max);
    std::vector<std::uint64_t> ds;
    for (std::uint64_t d : nt::divisors(q - 1)) {
      if (d <= config.d_max) ds.push_back(d);
    }
    const std::uint64_t d = pick(rng, ds);
    const WanLidlParams params = WanLidlParams::create(Poly(field, random_coeffs(rng, field, d)), s, d);
    const std::vector<Elem> group = field.subgroup_H(d);
    const Elem a{uniform(rng, 1, q - 1)};

    Elem c, lambda, mu;
    const bool anchored = uniform(rng, 0, 1) == 1;
    const Elem x0{uniform(rng, 0, q - 1)};
    if (anchored && x0.value != 0 && field.add(x0, a).value != 0) {
      lambda = params.T(field.add(x0, a));
      mu = params.T(x0);
      c = field.sub(params.eval(field.add(x0, a)), params.eval(x0));
    } else {
      c = Elem{uniform(rng, 0, q - 1)};
      lambda = pick(rng, group);
      mu = uniform(rng, 0, 1) == 1 ? lambda : pick(rng, group);
    }

    const Lemma31Report r = verify_lemma31(params, a, c, lambda, mu);
    if (!r.applicable()) {
      ++report.not_applicable;
      if (r.any_failure()) {
        report.failures.push_back(describe(params) + " reported a failure while not applicable");
      }
      continue;
    }
    ++report.applicable;
    (r.which == LemmaCase::Diagonal ? report.diagonal : report.off_diagonal) += 1;
    if (r.in_cell) ++report.t_identities_checked;
    for (CheckStatus st : {r.product_of_roots, r.product_of_shifted_roots, r.t_of_roots, r.t_of_shifted_roots}) {
      if (st == CheckStatus::Pass) ++report.identity_passes;
    }
    if (r.any_failure()) {
      std::ostringstream line;
      line << describe(params) << " a=" << a.value << " c=" << c.value << " lambda=" << lambda.value
           << " mu=" << mu.value << " prod=" << to_string(r.product_of_roots)
           << " prod_shifted=" << to_string(r.product_of_shifted_roots) << " T=" << to_string(r.t_of_roots)
           << " T_shifted=" << to_string(r.t_of_shifted_roots);
      report.failures.push_back(line.str());
    }
  }
  return report;
}

}  // namespace wldu

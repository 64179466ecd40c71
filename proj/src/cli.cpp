#include "wldu/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "wldu/bounds.hpp"
#include "wldu/du.hpp"
#include "wldu/error.hpp"
#include "wldu/ff.hpp"
#include "wldu/lemma.hpp"
#include "wldu/poly.hpp"
#include "wldu/sweep.hpp"
#include "wldu/verify.hpp"
#include "wldu/wanlidl.hpp"

namespace wldu {

namespace {

const char* yes_no(bool v) { return v ? "true" : "false"; }

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldFlags {
  std::uint64_t p = 0;
  unsigned e = 1;
};

struct PolyFlags {
  std::string poly;
  std::optional<std::uint64_t> s;
  std::optional<std::uint64_t> d;
  std::string h;
  bool binomial = false;
  std::optional<std::int64_t> b;
};

void add_field_flags(CLI::App* cmd, FieldFlags& f, bool required = true) {
  auto* p = cmd->add_option("--p", f.p, "Characteristic (prime)");
  if (required) p->required();
  cmd->add_option("--e", f.e, "Extension degree")->capture_default_str();
}

void add_poly_flags(CLI::App* cmd, PolyFlags& f) {
  cmd->add_option("--poly", f.poly, "Dense coefficients c0,c1,... (constant term first)");
  cmd->add_option("--s", f.s, "Exponent s of x^s h(T(x))");
  cmd->add_option("--d", f.d, "Divisor d of q-1");
  cmd->add_option("--h", f.h, "Coefficients of h, constant term first");
  cmd->add_flag("--binomial", f.binomial, "Use x^s (eta(x) + b)");
  cmd->add_option("--b", f.b, "Constant b of the binomial form");
}

Field make_field_checked(const FieldFlags& f) { return Field::make(f.p, f.e); }

// Integers are reduced mod p in prime fields; extension fields need the
// canonical packed value.
Elem parse_elem(const Field& field, std::int64_t v, const char* name) {
  if (field.is_prime_field()) return field.from_int(v);
  if (v < 0 || static_cast<std::uint64_t>(v) >= field.order()) {
    throw UsageError(std::string("--") + name + " must be a canonical element in [0, q)");
  }
  return field.element(static_cast<std::uint64_t>(v));
}

enum class Form { Dense, WanLidl, Binomial };

std::string_view to_string(Form form) {
  switch (form) {
    case Form::Dense: return "dense";
    case Form::WanLidl: return "wanlidl";
    case Form::Binomial: return "binomial";
  }
  return "?";
}

struct PolySpec {
  Form form = Form::Dense;
  std::optional<Poly> dense;
  std::optional<WanLidlParams> wanlidl;
  std::optional<BinomialParams> binomial;

  FunctionTable tabulate() const {
    if (binomial) return binomial_f(*binomial);
    if (wanlidl) return wanlidl->tabulate();
    return wldu::tabulate(*dense);
  }

  std::optional<WanLidlParams> as_wanlidl() const {
    if (binomial) return binomial->to_wanlidl();
    return wanlidl;
  }
};

PolySpec build_poly(const Field& field, const PolyFlags& f) {
  const int forms = static_cast<int>(!f.poly.empty()) + static_cast<int>(f.binomial) + static_cast<int>(!f.h.empty());
  if (forms != 1) throw UsageError("give exactly one of --poly, --binomial or --h");
  PolySpec spec;
  if (!f.poly.empty()) {
    if (f.s || f.d || f.b) throw UsageError("--s, --d and --b do not combine with --poly");
    spec.form = Form::Dense;
    spec.dense = Poly::parse(field, f.poly);
  } else if (f.binomial) {
    if (!f.s || !f.b) throw UsageError("--binomial needs --s and --b");
    if (f.d && *f.d != 2) throw UsageError("the binomial form has d = 2");
    spec.form = Form::Binomial;
    spec.binomial = BinomialParams::create(field, *f.s, parse_elem(field, *f.b, "b"));
  } else {
    if (!f.s || !f.d) throw UsageError("--h needs --s and --d");
    if (f.b) throw UsageError("--b only applies to --binomial");
    spec.form = Form::WanLidl;
    spec.wanlidl = WanLidlParams::create(Poly::parse(field, f.h), *f.s, *f.d);
  }
  return spec;
}

void print_field(std::ostream& out, const Field& field) {
  out << "q=" << field.order() << '\n';
  if (!field.is_prime_field()) {
    out << "p=" << field.characteristic() << '\n' << "e=" << field.spec().e << '\n';
  }
}

void print_certificate(std::ostream& out, const BoundCertificate& cert) {
  for (const BoundCheck& check : cert.checks) {
    if (!check.hypotheses_hold) continue;
    out << "theorem=" << theorem_id(check.theorem) << " bound=" << check.bound << " holds=" << yes_no(check.holds)
        << " tight=" << yes_no(check.tight) << '\n';
  }
  out << "tightest_bound=" << cert.tightest_bound() << '\n';
  out << "tight=" << yes_no(cert.tight()) << '\n';
  out << "verdict=" << (cert.verdict == Verdict::Holds ? "holds" : "violated") << '\n';
}

// ---- du ------------------------------------------------------------------

struct DuFlags {
  FieldFlags field;
  PolyFlags poly;
  std::string engine = "auto";
};

int cmd_du(const DuFlags& flags, std::ostream& out) {
  const Field field = make_field_checked(flags.field);
  const PolySpec spec = build_poly(field, flags.poly);
  const std::optional<WanLidlParams> wl = spec.as_wanlidl();
  const bool pp = wl ? wl_is_pp(*wl).is_pp : is_permutation_bruteforce(spec.tabulate());

  std::string engine = flags.engine;
  if (engine == "auto") {
    if (spec.form == Form::Binomial && pp) {
      engine = "fast";
    } else {
      engine = wl ? "wanlidl" : "general";
    }
  }
  DuResult du;
  if (engine == "fast") {
    if (spec.form != Form::Binomial) throw UsageError("--engine fast needs --binomial");
    du = du_fast_binomial(*spec.binomial);
  } else if (engine == "wanlidl") {
    if (!wl) throw UsageError("--engine wanlidl needs --h or --binomial");
    du = du_wanlidl(*wl);
  } else {
    du = differential_uniformity(spec.tabulate());
  }

  print_field(out, field);
  out << "form=" << to_string(spec.form) << '\n';
  out << "engine=" << engine << '\n';
  out << "pp=" << yes_no(pp) << '\n';
  out << "delta=" << du.delta << '\n';
  out << "witness_a=" << du.witness_a.value << '\n';
  out << "witness_c=" << du.witness_c.value << '\n';
  if (!wl) return kExitOk;
  const BoundCertificate cert = certify(*wl, du);
  print_certificate(out, cert);
  return cert.verdict == Verdict::Holds ? kExitOk : kExitViolation;
}

// ---- is-pp ---------------------------------------------------------------

struct IsPpFlags {
  FieldFlags field;
  PolyFlags poly;
  bool skip_bruteforce = false;
};

int cmd_is_pp(const IsPpFlags& flags, std::ostream& out) {
  const Field field = make_field_checked(flags.field);
  const PolySpec spec = build_poly(field, flags.poly);
  const std::optional<WanLidlParams> wl = spec.as_wanlidl();
  print_field(out, field);
  out << "form=" << to_string(spec.form) << '\n';

  std::optional<bool> criterion;
  if (wl) {
    const PpVerdict verdict = wl_is_pp(*wl);
    criterion = verdict.is_pp;
    out << "pp=" << yes_no(verdict.is_pp) << '\n';
    out << "failed=" << (verdict.failed ? to_string(*verdict.failed) : std::string_view("none")) << '\n';
  }
  if (flags.skip_bruteforce && criterion) return kExitOk;
  const bool brute = is_permutation_bruteforce(spec.tabulate());
  if (!wl) out << "pp=" << yes_no(brute) << '\n';
  out << "bruteforce=" << yes_no(brute) << '\n';
  if (criterion && *criterion != brute) {
    out << "agreement=false\n";
    return kExitViolation;
  }
  return kExitOk;
}

// ---- spectrum ------------------------------------------------------------

struct SpectrumFlags {
  FieldFlags field;
  PolyFlags poly;
};

int cmd_spectrum(const SpectrumFlags& flags, std::ostream& out) {
  const Field field = make_field_checked(flags.field);
  const PolySpec spec = build_poly(field, flags.poly);
  const DiffSpectrum spectrum = differential_spectrum(spec.tabulate());
  print_field(out, field);
  out << "form=" << to_string(spec.form) << '\n';
  out << "delta=" << (spectrum.histogram.empty() ? 0 : spectrum.histogram.rbegin()->first) << '\n';
  for (const auto& [k, n] : spectrum.histogram) out << "solutions=" << k << " cells=" << n << '\n';
  out << "weighted_sum=" << spectrum.weighted_sum() << '\n';
  return kExitOk;
}

// ---- sweep ---------------------------------------------------------------

struct SweepFlags {
  std::uint64_t s = 2;
  std::uint64_t from = 7;
  std::optional<std::uint64_t> to;
  std::string format = "long";
  std::string engine = "fast";
  std::optional<unsigned> jobs;
  std::string output;
  bool pretty = false;
  std::uint64_t seed = 0x5eed;
};

void print_sweep_summary(std::ostream& out, const SweepResult& result) {
  out << "s=" << result.s << " primes=" << result.rows.size() << " permutations=" << result.summary.total_pps
      << " max_delta=" << result.summary.max_delta << " bound=" << (4 * result.s - 3)
      << " tight=" << result.summary.tight.size() << " violations=" << result.summary.violations.size()
      << " cross_checked=" << result.summary.cross_checked << '\n';
  for (const Achiever& v : result.summary.violations) {
    out << "violation p=" << v.p << " b=" << v.b << " delta=" << v.delta << " bound=" << v.bound << '\n';
  }
}

int cmd_sweep(const SweepFlags& flags, std::ostream& out, std::ostream& err) {
  if (!flags.to) throw UsageError("--to is required");
  if (flags.from > *flags.to) throw UsageError("--from must not exceed --to");
  if (flags.jobs && *flags.jobs == 0) throw UsageError("--jobs must be positive");
  SweepConfig config;
  config.s = flags.s;
  config.p_min = flags.from;
  config.p_max = *flags.to;
  config.engine = parse_engine(flags.engine);
  config.jobs = flags.jobs.value_or(0);
  config.seed = flags.seed;
  const SweepResult result = run_sweep(config);

  auto write_data = [&](std::ostream& os) {
    if (flags.format == "wide") {
      write_wide_csv(os, result);
    } else if (flags.format == "json") {
      write_json(os, result);
    } else {
      write_long_csv(os, result);
    }
  };
  if (!flags.output.empty()) {
    std::ofstream file(flags.output, std::ios::binary);
    if (!file) throw Error(ErrorCode::Io, "cannot open " + flags.output);
    if (!result.rows.empty() || flags.format == "json") write_data(file);
    if (!file) throw Error(ErrorCode::Io, "write to " + flags.output + " failed");
    if (flags.pretty) write_pretty(out, result);
    print_sweep_summary(out, result);
  } else {
    // No admissible primes: nothing on stdout.
    if (flags.pretty) {
      if (!result.rows.empty()) write_pretty(out, result);
    } else if (!result.rows.empty() || flags.format == "json") {
      write_data(out);
    }
    print_sweep_summary(err, result);
  }
  return result.summary.violations.empty() ? kExitOk : kExitViolation;
}

// ---- verify-bounds -------------------------------------------------------

struct VerifyFlags {
  std::string theorem;
  std::optional<std::uint64_t> random;
  std::optional<std::uint64_t> qmax;
  std::optional<std::uint64_t> to;
  std::optional<std::uint64_t> s;
  std::optional<std::uint64_t> d;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> alphabet;
  std::uint64_t seed = 0x5eed;
};

void print_suite(std::ostream& out, const SuiteReport& report) {
  out << "theorem=" << report.theorem << '\n';
  out << "instances=" << report.instances << '\n';
  out << "permutations=" << report.permutations << '\n';
  out << "bound_checks=" << report.bound_checks << '\n';
  out << "tight=" << report.tight << '\n';
  out << "max_delta=" << report.max_delta << '\n';
  out << "cross_checked=" << report.cross_checked << '\n';
  out << "violations=" << report.violations.size() << '\n';
  for (const std::string& v : report.violations) out << "violation " << v << '\n';
  out << "status=" << (report.ok() ? "pass" : "fail") << '\n';
}

int cmd_verify_bounds(const VerifyFlags& flags, std::ostream& out) {
  const std::string& t = flags.theorem;
  auto reject = [&](bool given, const char* name) {
    if (given) throw UsageError(std::string("--") + name + " does not apply to theorem " + t);
  };
  SuiteReport report;
  if (t == "1.1") {
    reject(flags.to.has_value(), "to");
    reject(flags.samples.has_value() || flags.alphabet.has_value(), "samples/--alphabet");
    GeneralSuiteConfig config;
    config.instances = flags.random.value_or(config.instances);
    config.q_max = flags.qmax.value_or(config.q_max);
    if (flags.s) config.s_min = config.s_max = *flags.s;
    if (flags.s && *flags.s < 2) throw UsageError("--s must exceed 1");
    config.d_max = flags.d.value_or(config.d_max);
    config.seed = flags.seed;
    report = verify_general_suite(config);
  } else if (t == "1.2") {
    reject(flags.random.has_value() || flags.qmax.has_value() || flags.d.has_value(), "random/--qmax/--d");
    BinomialSuiteConfig config;
    config.p_max = flags.to.value_or(config.p_max);
    if (flags.s) config.s_values = {*flags.s};
    report = verify_binomial_suite(config);
  } else if (t == "1.3") {
    reject(flags.random.has_value() || flags.s.has_value() || flags.d.has_value(), "random/--s/--d");
    CorollarySuiteConfig config;
    config.q_max = flags.to.value_or(flags.qmax.value_or(config.q_max));
    report = verify_corollary_suite(config);
  } else if (t == "1.4") {
    reject(flags.random.has_value() || flags.to.has_value(), "random/--to");
    if (flags.s && *flags.s != 2) throw UsageError("theorem 1.4 fixes s = 2");
    QuadraticSuiteConfig config;
    config.q_max = flags.qmax.value_or(config.q_max);
    if (flags.d) config.d_values = {*flags.d};
    config.samples = flags.samples.value_or(config.samples);
    config.alphabet = flags.alphabet.value_or(config.alphabet);
    if (config.alphabet == 0) throw UsageError("--alphabet must be positive");
    config.seed = flags.seed;
    report = verify_quadratic_suite(config);
  } else {
    throw UsageError("unknown theorem selector \"" + t + "\" (expected 1.1, 1.2, 1.3 or 1.4)");
  }
  print_suite(out, report);
  return report.ok() ? kExitOk : kExitViolation;
}

// ---- lemma-check ---------------------------------------------------------

struct LemmaFlags {
  FieldFlags field;
  std::optional<std::uint64_t> s;
  std::optional<std::uint64_t> d;
  std::string h;
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> c;
  std::optional<std::int64_t> lambda;
  std::optional<std::int64_t> mu;
  std::optional<std::uint64_t> random;
  std::uint64_t qmax = 100;
  std::uint64_t seed = 0x5eed;
};

template <class Range>
std::string join(const Range& values) {
  std::ostringstream os;
  bool first = true;
  for (const Elem& v : values) {
    if (!first) os << ',';
    os << v.value;
    first = false;
  }
  return os.str();
}

int cmd_lemma_check(const LemmaFlags& flags, std::ostream& out) {
  if (flags.random) {
    if (flags.field.p != 0 || !flags.h.empty() || flags.a || flags.c || flags.lambda || flags.mu) {
      throw UsageError("--random does not combine with explicit parameters");
    }
    LemmaSuiteConfig config;
    config.applicable = *flags.random;
    config.q_max = flags.qmax;
    config.seed = flags.seed;
    const LemmaSuiteReport report = verify_lemma_suite(config);
    out << "draws=" << report.draws << '\n';
    out << "applicable=" << report.applicable << '\n';
    out << "not_applicable=" << report.not_applicable << '\n';
    out << "diagonal=" << report.diagonal << '\n';
    out << "off_diagonal=" << report.off_diagonal << '\n';
    out << "t_identities_checked=" << report.t_identities_checked << '\n';
    out << "identity_passes=" << report.identity_passes << '\n';
    out << "failures=" << report.failures.size() << '\n';
    for (const std::string& f : report.failures) out << "failure " << f << '\n';
    const bool complete = report.applicable >= config.applicable;
    out << "status=" << (report.ok() && complete ? "pass" : "fail") << '\n';
    return report.ok() && complete ? kExitOk : kExitViolation;
  }
  if (flags.field.p == 0) throw UsageError("give --p or --random");
  if (!flags.s || !flags.d || flags.h.empty() || !flags.a || !flags.c || !flags.lambda) {
    throw UsageError("explicit mode needs --s, --d, --h, --a, --c and --lambda");
  }
  const Field field = make_field_checked(flags.field);
  const WanLidlParams params = WanLidlParams::create(Poly::parse(field, flags.h), *flags.s, *flags.d);
  const Elem lambda = parse_elem(field, *flags.lambda, "lambda");
  const Elem mu = flags.mu ? parse_elem(field, *flags.mu, "mu") : lambda;
  const Lemma31Report r =
      verify_lemma31(params, parse_elem(field, *flags.a, "a"), parse_elem(field, *flags.c, "c"), lambda, mu);
  print_field(out, field);
  out << "case=" << to_string(r.which) << '\n';
  out << "g=" << join(r.g) << '\n';
  out << "expected_degree=" << r.expected_degree << '\n';
  out << "full_degree=" << yes_no(r.full_degree) << '\n';
  out << "splits=" << yes_no(r.splits) << '\n';
  out << "roots=" << join(r.roots) << '\n';
  out << "in_cell=" << yes_no(r.in_cell) << '\n';
  out << "product_of_roots=" << to_string(r.product_of_roots) << '\n';
  out << "product_of_shifted_roots=" << to_string(r.product_of_shifted_roots) << '\n';
  out << "t_of_roots=" << to_string(r.t_of_roots) << '\n';
  out << "t_of_shifted_roots=" << to_string(r.t_of_shifted_roots) << '\n';
  out << "status=" << (r.any_failure() ? "fail" : (r.applicable() ? "pass" : "not-applicable")) << '\n';
  return r.any_failure() ? kExitViolation : kExitOk;
}

// ---- corollary-check -----------------------------------------------------

struct CorollaryFlags {
  FieldFlags field;
  std::optional<std::uint64_t> to;
};

int cmd_corollary_check(const CorollaryFlags& flags, std::ostream& out) {
  std::vector<Field> fields;
  if (flags.field.p != 0) {
    if (flags.to) throw UsageError("give either --p or --to");
    fields.push_back(make_field_checked(flags.field));
  } else if (flags.to) {
    for (std::uint64_t q : odd_primes_below(5, *flags.to)) {
      if (q % 8 == 3) fields.push_back(Field::make(q));
    }
  } else {
    throw UsageError("give --p or --to");
  }
  bool all = true;
  for (const Field& field : fields) {
    const CorollaryCertificate cert = corollary_b3_certify(field);
    all = all && cert.holds();
    out << "q=" << cert.q << " plus_pp=" << yes_no(cert.plus_is_pp) << " plus_delta=" << cert.plus_delta
        << " minus_pp=" << yes_no(cert.minus_is_pp) << " minus_delta=" << cert.minus_delta
        << " holds=" << yes_no(cert.holds()) << '\n';
  }
  out << "status=" << (all ? "pass" : "fail") << '\n';
  return all ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differential uniformity of Wan-Lidl polynomials over finite fields", "wldu"};
  // --h is taken by the polynomial flags, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1, 1);
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Suppress the elapsed-time line on stderr");

  DuFlags du_flags;
  auto* du = app.add_subcommand("du", "Differential uniformity, witness and bound certificate");
  add_field_flags(du, du_flags.field);
  add_poly_flags(du, du_flags.poly);
  du->add_option("--engine", du_flags.engine, "auto, general, fast or wanlidl")
      ->check(CLI::IsMember({"auto", "general", "fast", "wanlidl"}))
      ->capture_default_str();

  IsPpFlags pp_flags;
  auto* is_pp = app.add_subcommand("is-pp", "Permutation test by the Wan-Lidl criterion and by brute force");
  add_field_flags(is_pp, pp_flags.field);
  add_poly_flags(is_pp, pp_flags.poly);
  is_pp->add_flag("--no-bruteforce", pp_flags.skip_bruteforce, "Skip the value-table check");

  SpectrumFlags spectrum_flags;
  auto* spectrum = app.add_subcommand("spectrum", "Differential spectrum");
  add_field_flags(spectrum, spectrum_flags.field);
  add_poly_flags(spectrum, spectrum_flags.poly);

  SweepFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "Histogram of delta over x^s(eta(x)+b) for a prime range");
  sweep->add_option("--s", sweep_flags.s, "Even exponent")->capture_default_str();
  sweep->add_option("--from", sweep_flags.from, "Smallest prime")->capture_default_str();
  sweep->add_option("--to", sweep_flags.to, "Largest prime")->required();
  sweep->add_option("--format", sweep_flags.format, "long, wide or json")
      ->check(CLI::IsMember({"long", "wide", "json"}))
      ->capture_default_str();
  sweep->add_option("--engine", sweep_flags.engine, "fast, general or both")
      ->check(CLI::IsMember({"fast", "general", "both"}))
      ->capture_default_str();
  sweep->add_option("--jobs", sweep_flags.jobs, "Worker threads (default WLDU_JOBS or all cores)");
  sweep->add_option("--output", sweep_flags.output, "Write the table to this file");
  sweep->add_option("--seed", sweep_flags.seed, "Seed for cross-check sampling")->capture_default_str();
  sweep->add_flag("--pretty", sweep_flags.pretty, "Aligned table on stdout");

  VerifyFlags verify_flags;
  auto* verify = app.add_subcommand("verify-bounds", "Run a bound-checking suite");
  verify->add_option("--theorem", verify_flags.theorem, "1.1, 1.2, 1.3 or 1.4")->required();
  verify->add_option("--random", verify_flags.random, "Random instances (1.1)");
  verify->add_option("--qmax", verify_flags.qmax, "Field order limit (1.1, 1.4)");
  verify->add_option("--to", verify_flags.to, "Prime limit (1.2, 1.3)");
  verify->add_option("--s", verify_flags.s, "Restrict to one s");
  verify->add_option("--d", verify_flags.d, "Restrict to one d (1.1: largest d)");
  verify->add_option("--samples", verify_flags.samples, "Draws per (q, d) when not exhaustive (1.4)");
  verify->add_option("--alphabet", verify_flags.alphabet, "Coefficient alphabet size (1.4)");
  verify->add_option("--seed", verify_flags.seed, "Random seed")->capture_default_str();

  LemmaFlags lemma_flags;
  auto* lemma = app.add_subcommand("lemma-check", "Product-of-roots identities for one configuration or at random");
  add_field_flags(lemma, lemma_flags.field, false);
  lemma->add_option("--s", lemma_flags.s, "Exponent s");
  lemma->add_option("--d", lemma_flags.d, "Divisor d of q-1");
  lemma->add_option("--h", lemma_flags.h, "Coefficients of h");
  lemma->add_option("--a", lemma_flags.a, "Direction a");
  lemma->add_option("--c", lemma_flags.c, "Target c");
  lemma->add_option("--lambda", lemma_flags.lambda, "lambda in H");
  lemma->add_option("--mu", lemma_flags.mu, "mu in H (default lambda)");
  lemma->add_option("--random", lemma_flags.random, "Number of applicable random configurations");
  lemma->add_option("--qmax", lemma_flags.qmax, "Field order limit for --random")->capture_default_str();
  lemma->add_option("--seed", lemma_flags.seed, "Random seed")->capture_default_str();

  CorollaryFlags cor_flags;
  auto* corollary = app.add_subcommand("corollary-check", "x^2(eta(x) +- 3) over q = 3 mod 8");
  add_field_flags(corollary, cor_flags.field, false);
  corollary->add_option("--to", cor_flags.to, "Check every prime q = 3 mod 8 below this");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (du->parsed()) {
      code = cmd_du(du_flags, out);
    } else if (is_pp->parsed()) {
      code = cmd_is_pp(pp_flags, out);
    } else if (spectrum->parsed()) {
      code = cmd_spectrum(spectrum_flags, out);
    } else if (sweep->parsed()) {
      code = cmd_sweep(sweep_flags, out, err);
    } else if (verify->parsed()) {
      code = cmd_verify_bounds(verify_flags, out);
    } else if (lemma->parsed()) {
      code = cmd_lemma_check(lemma_flags, out);
    } else if (corollary->parsed()) {
      code = cmd_corollary_check(cor_flags, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::EngineMismatch ? kExitViolation : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  out.flush();
  if (!no_timing) {
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    err << "elapsed_ms=" << ms << '\n';
  }
  return code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("wldu");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace wldu

#include "wldu/bounds.hpp"

#include <algorithm>
#include <string>

namespace wldu {

std::uint64_t bound_general(std::uint64_t s, std::uint64_t d) {
  if (s <= 1) throw Error(ErrorCode::SNotGreaterThanOne, "s must exceed 1");
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "d must be positive");
  return d * (s * d - 1) + 2;
}

std::uint64_t bound_binomial_even_s(std::uint64_t s) {
  if (s < 2 || s % 2 != 0) throw Error(ErrorCode::SNotEven, "s must be even and at least 2");
  return 4 * s - 3;
}

std::uint64_t bound_s2_even_d(std::uint64_t d) {
  if (d < 2 || d % 2 != 0) throw Error(ErrorCode::DNotEven, "d must be even and at least 2");
  return 2 * d * d - 3 * d / 2;
}

std::string_view theorem_id(Theorem theorem) {
  switch (theorem) {
    case Theorem::General: return "1.1";
    case Theorem::BinomialEvenS: return "1.2";
    case Theorem::CorollaryB3: return "1.3";
    case Theorem::QuadraticEvenD: return "1.4";
  }
  return "?";
}

std::vector<BoundCheck> BoundCertificate::applicable() const {
  std::vector<BoundCheck> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const BoundCheck& c) { return c.hypotheses_hold; });
  return out;
}

std::uint64_t BoundCertificate::tightest_bound() const {
  std::uint64_t best = 0;
  for (const BoundCheck& c : checks) {
    if (c.hypotheses_hold && (best == 0 || c.bound < best)) best = c.bound;
  }
  return best;
}

bool BoundCertificate::tight() const {
  const std::uint64_t best = tightest_bound();
  return best != 0 && delta == best;
}

namespace {

bool is_x_plus_b(const Poly& h) { return h.degree() == 1 && h.coeff(1) == h.field().one() && h.coeff(0) != h.field().zero(); }

BoundCheck make_check(Theorem theorem, bool hypotheses, std::uint64_t bound, std::uint64_t delta, bool extra_ok = true) {
  BoundCheck check;
  check.theorem = theorem;
  check.hypotheses_hold = hypotheses;
  if (hypotheses) {
    check.bound = bound;
    check.holds = delta <= bound && extra_ok;
    check.tight = delta == bound;
  }
  return check;
}

}  // namespace

BoundCertificate certify(const WanLidlParams& params, const DuResult& du) {
  const Field& field = params.field();
  const std::uint64_t q = field.order();
  const std::uint64_t s = params.s();
  const std::uint64_t d = params.d();
  const Poly& h = params.h();

  BoundCertificate cert;
  cert.delta = du.delta;
  cert.is_pp = wl_is_pp(params).is_pp;

  const bool general = s > 1;
  cert.checks.push_back(make_check(Theorem::General, general, general ? bound_general(s, d) : 0, du.delta));

  const bool binomial = q % 4 == 3 && s % 2 == 0 && d == 2 && is_x_plus_b(h) && cert.is_pp;
  cert.checks.push_back(
      make_check(Theorem::BinomialEvenS, binomial, binomial ? bound_binomial_even_s(s) : 0, du.delta));

  const bool b_is_pm3 = is_x_plus_b(h) && (h.coeff(0) == field.from_int(3) || h.coeff(0) == field.from_int(-3));
  const bool corollary = q % 8 == 3 && field.characteristic() != 3 && s == 2 && d == 2 && b_is_pm3;
  // The corollary also asserts the permutation property itself.
  cert.checks.push_back(make_check(Theorem::CorollaryB3, corollary, kCorollaryB3Bound, du.delta, cert.is_pp));

  const bool quadratic = s == 2 && d % 2 == 0 && ((q - 1) / d) % 2 == 1 && cert.is_pp;
  cert.checks.push_back(make_check(Theorem::QuadraticEvenD, quadratic, quadratic ? bound_s2_even_d(d) : 0, du.delta));

  const bool violated = std::any_of(cert.checks.begin(), cert.checks.end(),
                                    [](const BoundCheck& c) { return c.hypotheses_hold && !c.holds; });
  cert.verdict = violated ? Verdict::Violated : Verdict::Holds;
  return cert;
}

BoundCertificate certify(const BinomialParams& params, const DuResult& du) { return certify(params.to_wanlidl(), du); }

CorollaryCertificate corollary_b3_certify(const Field& field) {
  const std::uint64_t q = field.order();
  if (q % 8 != 3 || field.characteristic() == 3) {
    throw Error(ErrorCode::WrongCongruenceClass,
                "need q = 3 mod 8 with characteristic other than 3, got q=" + std::to_string(q));
  }
  CorollaryCertificate cert;
  cert.q = q;
  const BinomialKernel kernel(field, 2);
  DeltaScratch scratch(q);
  auto measure = [&](std::int64_t b, bool& is_pp, std::uint64_t& delta) {
    const BinomialParams params = BinomialParams::create(field, 2, field.from_int(b));
    is_pp = wl_is_pp(params.to_wanlidl()).is_pp;
    if (is_pp) delta = kernel.evaluate(params, scratch).delta;
  };
  measure(3, cert.plus_is_pp, cert.plus_delta);
  measure(-3, cert.minus_is_pp, cert.minus_delta);
  return cert;
}

}  // namespace wldu

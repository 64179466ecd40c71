#include "wldu/lemma.hpp"

#include <algorithm>

namespace wldu {

namespace {

using Dense = std::vector<Elem>;

// (x + a)^s, constant term first.
Dense shifted_power(const Field& field, Elem a, std::uint64_t s) {
  Dense out{field.one()};
  for (std::uint64_t k = 0; k < s; ++k) {
    Dense next(out.size() + 1, Elem{0});
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i + 1] = field.add(next[i + 1], out[i]);
      next[i] = field.add(next[i], field.mul(a, out[i]));
    }
    out = std::move(next);
  }
  return out;
}

Elem eval_dense(const Field& field, const Dense& g, Elem x) {
  Elem acc{0};
  for (auto it = g.rbegin(); it != g.rend(); ++it) acc = field.add(field.mul(acc, x), *it);
  return acc;
}

// Divides g by (x - r) in place; returns the remainder g(r).
Elem deflate(const Field& field, Dense& g, Elem r) {
  if (g.empty()) return Elem{0};
  Dense quotient(g.size() - 1, Elem{0});
  Elem carry = g.back();
  for (std::size_t i = g.size() - 1; i-- > 0;) {
    quotient[i] = carry;
    carry = field.add(g[i], field.mul(carry, r));
  }
  g = std::move(quotient);
  return carry;
}

// Roots in F_q repeated by multiplicity, found by evaluation then repeated
// synthetic division.
std::vector<Elem> roots_with_multiplicity(const Field& field, const Dense& g) {
  std::vector<Elem> roots;
  for (std::uint64_t x = 0; x < field.order(); ++x) {
    if (eval_dense(field, g, Elem{x}) != field.zero()) continue;
    Dense work = g;
    while (work.size() > 1) {
      Dense attempt = work;
      if (deflate(field, attempt, Elem{x}) != field.zero()) break;
      roots.push_back(Elem{x});
      work = std::move(attempt);
    }
  }
  return roots;
}

Elem sign_power(const Field& field, std::uint64_t k) { return k % 2 == 0 ? field.one() : field.neg(field.one()); }

CheckStatus check(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

void require_in_group(const WanLidlParams& params, Elem x, const char* name) {
  const Field& field = params.field();
  if (x.value >= field.order() || x == field.zero() || field.pow(x, params.d()) != field.one()) {
    throw Error(ErrorCode::LambdaNotInH, std::string(name) + "=" + std::to_string(x.value) + " is not in H");
  }
}

void require_direction(const Field& field, Elem a, Elem c) {
  if (a.value == 0) throw Error(ErrorCode::ZeroDirection, "direction a must be nonzero");
  field.element(a.value);
  field.element(c.value);
}

// Shared tail: roots, splitting, cell membership.
void analyse_roots(const WanLidlParams& params, Elem a, Elem lambda, Elem mu, Lemma31Report& report) {
  const Field& field = params.field();
  report.roots = roots_with_multiplicity(field, report.g);
  report.splits = report.roots.size() == report.expected_degree;
  report.in_cell = report.splits && std::all_of(report.roots.begin(), report.roots.end(), [&](Elem x) {
                     return params.T(field.add(x, a)) == lambda && params.T(x) == mu;
                   });
}

Elem product(const Field& field, const std::vector<Elem>& xs, Elem shift) {
  Elem acc = field.one();
  for (Elem x : xs) acc = field.mul(acc, field.add(x, shift));
  return acc;
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

std::string_view to_string(LemmaCase which) { return which == LemmaCase::Diagonal ? "diagonal" : "off-diagonal"; }

bool Lemma31Report::any_failure() const {
  return product_of_roots == CheckStatus::Fail || product_of_shifted_roots == CheckStatus::Fail ||
         t_of_roots == CheckStatus::Fail || t_of_shifted_roots == CheckStatus::Fail;
}

Lemma31Report verify_lemma31_diagonal(const WanLidlParams& params, Elem a, Elem c, Elem lambda) {
  const Field& field = params.field();
  require_direction(field, a, c);
  require_in_group(params, lambda, "lambda");

  Lemma31Report report;
  report.which = LemmaCase::Diagonal;
  const std::uint64_t s = params.s();
  if (s < 2) return report;
  report.expected_degree = s - 1;

  const Elem h_lambda = params.h().eval(lambda);
  Dense g = shifted_power(field, a, s);
  g[s] = field.sub(g[s], field.one());
  for (Elem& coeff : g) coeff = field.mul(coeff, h_lambda);
  g[0] = field.sub(g[0], c);
  g.pop_back();  // the x^s terms cancel
  report.g = g;

  const Elem s_elem = field.from_int(static_cast<std::int64_t>(s % field.characteristic()));
  const Elem lead = field.mul(field.mul(s_elem, a), h_lambda);
  report.full_degree = lead != field.zero();
  if (!report.full_degree) return report;

  analyse_roots(params, a, lambda, lambda, report);
  if (!report.splits) return report;

  const Elem a_s_h = field.mul(field.pow(a, s), h_lambda);
  const Elem at_zero = field.sub(a_s_h, c);
  const Elem at_minus_a = field.add(a_s_h, field.mul(sign_power(field, s), c));
  report.product_of_roots =
      check(product(field, report.roots, field.zero()) == field.div(field.mul(sign_power(field, s - 1), at_zero), lead));
  report.product_of_shifted_roots = check(product(field, report.roots, a) == field.div(at_minus_a, lead));

  if (report.in_cell) {
    const Elem lhs = field.pow(lambda, s - 1);
    const Elem denom = field.mul(params.T(field.mul(s_elem, a)), params.T(h_lambda));
    const Elem t_minus_one = params.T(field.neg(field.one()));
    report.t_of_roots =
        check(lhs == field.div(field.mul(field.pow(t_minus_one, s - 1), params.T(at_zero)), denom));
    report.t_of_shifted_roots = check(lhs == field.div(params.T(at_minus_a), denom));
  }
  return report;
}

Lemma31Report verify_lemma31_offdiagonal(const WanLidlParams& params, Elem a, Elem c, Elem lambda, Elem mu) {
  const Field& field = params.field();
  require_direction(field, a, c);
  require_in_group(params, lambda, "lambda");
  require_in_group(params, mu, "mu");
  if (lambda == mu) throw Error(ErrorCode::MuEqualsLambdaForCase2, "off-diagonal case needs mu != lambda");

  Lemma31Report report;
  report.which = LemmaCase::OffDiagonal;
  const std::uint64_t s = params.s();
  report.expected_degree = s;

  const Elem h_lambda = params.h().eval(lambda);
  const Elem h_mu = params.h().eval(mu);
  Dense g = shifted_power(field, a, s);
  for (Elem& coeff : g) coeff = field.mul(coeff, h_lambda);
  g[s] = field.sub(g[s], h_mu);
  g[0] = field.sub(g[0], c);
  report.g = g;

  const Elem lead = field.sub(h_lambda, h_mu);
  report.full_degree = lead != field.zero();
  if (!report.full_degree) return report;

  analyse_roots(params, a, lambda, mu, report);
  if (!report.splits) return report;

  const Elem a_s = field.pow(a, s);
  const Elem at_zero = field.sub(field.mul(a_s, h_lambda), c);
  const Elem at_minus_a = field.add(field.mul(a_s, h_mu), field.mul(sign_power(field, s), c));
  report.product_of_roots =
      check(product(field, report.roots, field.zero()) == field.div(field.mul(sign_power(field, s), at_zero), lead));
  report.product_of_shifted_roots = check(product(field, report.roots, a) == field.div(field.neg(at_minus_a), lead));

  if (report.in_cell) {
    const Elem t_minus_one = params.T(field.neg(field.one()));
    const Elem denom = params.T(lead);
    report.t_of_roots =
        check(field.pow(mu, s) == field.div(field.mul(field.pow(t_minus_one, s), params.T(at_zero)), denom));
    report.t_of_shifted_roots =
        check(field.pow(lambda, s) == field.div(field.mul(t_minus_one, params.T(at_minus_a)), denom));
  }
  return report;
}

Lemma31Report verify_lemma31(const WanLidlParams& params, Elem a, Elem c, Elem lambda, Elem mu) {
  if (lambda == mu) return verify_lemma31_diagonal(params, a, c, lambda);
  return verify_lemma31_offdiagonal(params, a, c, lambda, mu);
}

}  // namespace wldu

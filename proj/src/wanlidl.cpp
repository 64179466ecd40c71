#include "wldu/wanlidl.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace wldu {

Poly normalize_h(const Poly& h, std::uint64_t s, std::uint64_t d) {
  if (s == 0) throw Error(ErrorCode::InvalidArgument, "s must be at least 1");
  if (d == 0) throw Error(ErrorCode::DNotDivisor, "d must be positive");
  if (h.coeffs().size() <= d) return h;
  const Field& field = h.field();
  std::vector<Elem> folded(d, Elem{0});
  for (std::size_t i = 0; i < h.coeffs().size(); ++i) {
    folded[i % d] = field.add(folded[i % d], h.coeffs()[i]);
  }
  return Poly(field, std::move(folded));
}

WanLidlParams WanLidlParams::create(const Poly& h, std::uint64_t s, std::uint64_t d) {
  if (s == 0) throw Error(ErrorCode::InvalidArgument, "s must be at least 1");
  h.field().require_divisor(d);
  return WanLidlParams(normalize_h(h, s, d), s, d);
}

FunctionTable WanLidlParams::tabulate() const {
  const Field& f = field();
  // h(T(x)) only takes values on H and at 0, so cache h on T's image.
  const std::vector<Elem> group = f.subgroup_H(d_);
  std::vector<std::pair<Elem, Elem>> h_on_group;
  h_on_group.reserve(group.size());
  for (Elem lambda : group) h_on_group.emplace_back(lambda, h_.eval(lambda));
  std::sort(h_on_group.begin(), h_on_group.end());

  std::vector<Elem> values(f.order(), Elem{0});
  for (std::uint64_t x = 1; x < f.order(); ++x) {
    const Elem t = T(Elem{x});
    const auto it = std::lower_bound(h_on_group.begin(), h_on_group.end(), std::make_pair(t, Elem{0}));
    values[x] = f.mul(f.pow(Elem{x}, s_), it->second);
  }
  return FunctionTable(f, std::move(values));
}

std::string_view to_string(WlCondition condition) {
  switch (condition) {
    case WlCondition::WL1: return "WL1";
    case WlCondition::WL2: return "WL2";
    case WlCondition::WL3: return "WL3";
  }
  return "?";
}

PpVerdict wl_is_pp(const WanLidlParams& params) {
  const Field& field = params.field();
  if (std::gcd(params.s(), params.t_exponent()) != 1) return {false, WlCondition::WL1};

  const std::vector<Elem> group = field.subgroup_H(params.d());
  std::vector<Elem> image;
  image.reserve(group.size());
  for (Elem lambda : group) {
    const Elem h_lambda = params.h().eval(lambda);
    if (h_lambda == field.zero()) return {false, WlCondition::WL2};
    image.push_back(field.mul(field.pow(lambda, params.s()), params.T(h_lambda)));
  }
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) return {false, WlCondition::WL3};
  return {true, std::nullopt};
}

BinomialParams BinomialParams::create(const Field& field, std::uint64_t s, Elem b) {
  if (field.order() % 4 != 3) {
    throw Error(ErrorCode::WrongCongruenceClass, "binomial family needs q = 3 mod 4, got q=" + std::to_string(field.order()));
  }
  if (s == 0 || s % 2 != 0) throw Error(ErrorCode::SNotEven, "s must be a positive even integer");
  const Elem checked = field.element(b.value);
  if (checked == field.zero() || checked == field.one() || checked == field.neg(field.one())) {
    throw Error(ErrorCode::InvalidArgument, "b must not be 0, 1 or -1");
  }
  return BinomialParams(field, s, checked);
}

WanLidlParams BinomialParams::to_wanlidl() const {
  return WanLidlParams::create(Poly(field_, {b_, field_.one()}), s_, 2);
}

Elem binomial_eval(const BinomialParams& params, Elem x) {
  const Field& field = params.field();
  const int eta = field.quadratic_character(x);
  const Elem h = field.add(field.from_int(eta), params.b());
  return field.mul(field.pow(x, params.s()), h);
}

FunctionTable binomial_f(const BinomialParams& params) {
  return tabulate(params.field(), [&](Elem x) { return binomial_eval(params, x); });
}

BinomialParams negate_b_equivalent(const BinomialParams& params) {
  return BinomialParams::create(params.field(), params.s(), params.field().neg(params.b()));
}

}  // namespace wldu

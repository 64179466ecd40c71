#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "wldu/ff.hpp"
#include "wldu/poly.hpp"

namespace wldu {

/// Folds every coefficient of x^i with i >= d onto x^(i mod d). Since
/// T(x)^d = 1 for x != 0 and f(0) = 0 whenever s >= 1, the folded h induces
/// the same function x^s h(T(x)).
Poly normalize_h(const Poly& h, std::uint64_t s, std::uint64_t d);

/// f(x) = x^s h(x^((q-1)/d)) with d | q-1 and deg h < d.
class WanLidlParams {
 public:
  /// Validates d | q-1 (DNotDivisor) and s >= 1, then normalizes h.
  static WanLidlParams create(const Poly& h, std::uint64_t s, std::uint64_t d);

  const Field& field() const { return h_.field(); }
  std::uint64_t s() const { return s_; }
  std::uint64_t d() const { return d_; }
  const Poly& h() const { return h_; }

  /// (q-1)/d, the exponent of T.
  std::uint64_t t_exponent() const { return (field().order() - 1) / d_; }

  Elem T(Elem x) const { return field().pow(x, t_exponent()); }
  Elem eval(Elem x) const { return field().mul(field().pow(x, s_), h_.eval(T(x))); }

  FunctionTable tabulate() const;

 private:
  WanLidlParams(Poly h, std::uint64_t s, std::uint64_t d) : h_(std::move(h)), s_(s), d_(d) {}

  Poly h_;
  std::uint64_t s_;
  std::uint64_t d_;
};

inline Elem eval_f(const WanLidlParams& params, Elem x) { return params.eval(x); }

enum class WlCondition { WL1, WL2, WL3 };

std::string_view to_string(WlCondition condition);

struct PpVerdict {
  bool is_pp = false;
  /// First failing condition, checked in the order WL1, WL2, WL3.
  std::optional<WlCondition> failed;

  explicit operator bool() const { return is_pp; }
};

/// The Wan-Lidl criterion:
///   WL1  gcd(s, (q-1)/d) = 1,
///   WL2  h(lambda) != 0 for every lambda in H,
///   WL3  lambda -> lambda^s T(h(lambda)) is injective on H.
PpVerdict wl_is_pp(const WanLidlParams& params);

/// x^s (eta(x) + b) over F_q with q = 3 mod 4, s even and b not in {0, 1, -1}.
class BinomialParams {
 public:
  /// Throws WrongCongruenceClass, SNotEven or InvalidArgument.
  static BinomialParams create(const Field& field, std::uint64_t s, Elem b);

  const Field& field() const { return field_; }
  std::uint64_t s() const { return s_; }
  Elem b() const { return b_; }

  /// The same polynomial as d = 2, h = x + b.
  WanLidlParams to_wanlidl() const;

 private:
  BinomialParams(Field field, std::uint64_t s, Elem b) : field_(std::move(field)), s_(s), b_(b) {}

  Field field_;
  std::uint64_t s_;
  Elem b_;
};

Elem binomial_eval(const BinomialParams& params, Elem x);

/// Value table of x -> x^s (eta(x) + b).
FunctionTable binomial_f(const BinomialParams& params);

/// b -> -b. x^s(eta(x)+b) and x^s(eta(x)-b) are linearly equivalent through
/// f'(x) = -f(-x), so sweeps only visit half of the b range.
BinomialParams negate_b_equivalent(const BinomialParams& params);

}  // namespace wldu

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "wldu/du.hpp"
#include "wldu/ff.hpp"
#include "wldu/wanlidl.hpp"

namespace wldu {

/// d(sd - 1) + 2, valid for every Wan-Lidl polynomial with s > 1.
std::uint64_t bound_general(std::uint64_t s, std::uint64_t d);

/// 4s - 3 for binomial-family permutations with even s.
std::uint64_t bound_binomial_even_s(std::uint64_t s);

/// 2d^2 - 3d/2 for permutations x^2 h(T(x)) with d even and (q-1)/d odd.
std::uint64_t bound_s2_even_d(std::uint64_t d);

/// The fixed bound 4 for x^2(eta(x) +- 3) over q = 3 mod 8.
inline constexpr std::uint64_t kCorollaryB3Bound = 4;

enum class Theorem {
  General,        ///< "1.1": s > 1
  BinomialEvenS,  ///< "1.2": q = 3 mod 4, s even, d = 2, h = x + b, PP
  CorollaryB3,    ///< "1.3": q = 3 mod 8, s = 2, d = 2, h = x +- 3
  QuadraticEvenD, ///< "1.4": s = 2, d even, (q-1)/d odd, PP
};

/// Selector token used on the command line ("1.1" ... "1.4").
std::string_view theorem_id(Theorem theorem);

struct BoundCheck {
  Theorem theorem = Theorem::General;
  bool hypotheses_hold = false;
  /// Bound value; 0 when the hypotheses fail and no value is defined.
  std::uint64_t bound = 0;
  bool holds = true;
  bool tight = false;
};

enum class Verdict { Holds, Violated };

struct BoundCertificate {
  /// One entry per theorem, in declaration order.
  std::vector<BoundCheck> checks;
  std::uint64_t delta = 0;
  bool is_pp = false;
  Verdict verdict = Verdict::Holds;

  /// Checks whose hypotheses hold.
  std::vector<BoundCheck> applicable() const;
  /// Smallest applicable bound, 0 if none.
  std::uint64_t tightest_bound() const;
  bool tight() const;
};

BoundCertificate certify(const WanLidlParams& params, const DuResult& du);
BoundCertificate certify(const BinomialParams& params, const DuResult& du);

struct CorollaryCertificate {
  std::uint64_t q = 0;
  bool plus_is_pp = false;
  bool minus_is_pp = false;
  std::uint64_t plus_delta = 0;
  std::uint64_t minus_delta = 0;

  bool holds() const {
    return plus_is_pp && minus_is_pp && plus_delta <= kCorollaryB3Bound && minus_delta <= kCorollaryB3Bound;
  }
};

/// Builds x^2(eta(x) + 3) and x^2(eta(x) - 3), checks both are permutations
/// and measures their differential uniformity. Requires q = 3 mod 8 and
/// characteristic other than 3 (WrongCongruenceClass otherwise).
CorollaryCertificate corollary_b3_certify(const Field& field);

}  // namespace wldu

#pragma once

#include <string_view>
#include <vector>

#include "wldu/ff.hpp"
#include "wldu/wanlidl.hpp"

namespace wldu {

// Product-of-roots identities for the local pieces of f(x+a) - f(x) - c.
//
// On the set where (T(x+a), T(x)) = (lambda, mu) the difference equation is
// the polynomial
//   g_{lambda,lambda}(x) = ((x+a)^s - x^s) h(lambda) - c          (degree s-1)
//   g_{lambda,mu}(x)     = (x+a)^s h(lambda) - x^s h(mu) - c      (degree s)
// When g has full degree and splits over F_q, comparing g(0) and g(-a) with
// the factored form pins down prod x_i and prod (x_i + a). If in addition every
// root really lies in the (lambda, mu) cell, applying the multiplicative map T
// to those products yields identities in H.

enum class LemmaCase { Diagonal, OffDiagonal };
enum class CheckStatus { Pass, Fail, NotApplicable };

std::string_view to_string(CheckStatus status);
std::string_view to_string(LemmaCase which);

struct Lemma31Report {
  LemmaCase which = LemmaCase::Diagonal;
  /// Coefficients of g, constant term first (untrimmed, size degree + 1).
  std::vector<Elem> g;
  std::size_t expected_degree = 0;
  /// Leading coefficient nonzero, i.e. the degree hypothesis holds.
  bool full_degree = false;
  /// Roots counted with multiplicity cover the full degree.
  bool splits = false;
  /// Roots in ascending order, repeated by multiplicity.
  std::vector<Elem> roots;
  /// Every root x satisfies (T(x+a), T(x)) = (lambda, mu).
  bool in_cell = false;

  CheckStatus product_of_roots = CheckStatus::NotApplicable;
  CheckStatus product_of_shifted_roots = CheckStatus::NotApplicable;
  CheckStatus t_of_roots = CheckStatus::NotApplicable;
  CheckStatus t_of_shifted_roots = CheckStatus::NotApplicable;

  bool applicable() const { return full_degree && splits; }
  bool any_failure() const;
};

/// Diagonal case (lambda, lambda). Needs s >= 2, p not dividing s and
/// h(lambda) != 0 for the degree hypothesis; otherwise everything is
/// NotApplicable. Throws LambdaNotInH.
Lemma31Report verify_lemma31_diagonal(const WanLidlParams& params, Elem a, Elem c, Elem lambda);

/// Off-diagonal case (lambda, mu), lambda != mu. Needs h(lambda) != h(mu).
/// Throws LambdaNotInH or MuEqualsLambdaForCase2.
Lemma31Report verify_lemma31_offdiagonal(const WanLidlParams& params, Elem a, Elem c, Elem lambda, Elem mu);

/// Dispatches on lambda == mu. Throws ZeroDirection for a = 0.
Lemma31Report verify_lemma31(const WanLidlParams& params, Elem a, Elem c, Elem lambda, Elem mu);

}  // namespace wldu

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wldu/ff.hpp"

namespace wldu {

/// Dense polynomial over F_q, coefficient i multiplies x^i. Trailing zeros are
/// trimmed, the zero polynomial has no coefficients, and the degree stays
/// below q.
class Poly {
 public:
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Elem> coeffs);

  /// Parses "c0,c1,...", constant term first, each entry a canonical value
  /// (or any integer for prime fields, reduced mod q).
  static Poly parse(const Field& field, std::string_view text);

  static Poly monomial(const Field& field, Elem coeff, std::size_t exponent);

  const Field& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Elem{0}; }

  /// Horner evaluation.
  Elem eval(Elem x) const;
  Elem operator()(Elem x) const { return eval(x); }

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  Field field_;
  std::vector<Elem> coeffs_;
};

/// The full value table x -> f(x) of a function on F_q, indexed by canonical
/// value. Analysis kernels consume these so that any evaluatable function
/// (dense polynomial, Wan-Lidl form, lambda) goes through one code path.
class FunctionTable {
 public:
  FunctionTable(Field field, std::vector<Elem> values);

  const Field& field() const { return field_; }
  const std::vector<Elem>& values() const { return values_; }
  Elem operator()(Elem x) const { return values_[x.value]; }
  std::uint64_t size() const { return values_.size(); }

 private:
  Field field_;
  std::vector<Elem> values_;
};

template <class F>
FunctionTable tabulate(const Field& field, F&& f) {
  std::vector<Elem> values;
  values.reserve(field.order());
  for (std::uint64_t x = 0; x < field.order(); ++x) values.push_back(f(Elem{x}));
  return FunctionTable(field, std::move(values));
}

inline FunctionTable tabulate(const Poly& f) {
  return tabulate(f.field(), [&](Elem x) { return f.eval(x); });
}

/// True iff f takes q distinct values. O(q) with an occupancy buffer.
bool is_permutation_bruteforce(const FunctionTable& f);

/// Number of distinct values of f.
std::uint64_t image_size(const FunctionTable& f);

}  // namespace wldu

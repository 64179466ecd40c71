#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "wldu/error.hpp"
#include "wldu/numtheory.hpp"

namespace wldu {

/// Canonical representative of a field element. For prime fields this is the
/// residue in [0, q); for extension fields it packs the polynomial-basis
/// coordinates as sum c_i * p^i.
struct Elem {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

struct FieldSpec {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::uint64_t q = 0;
};

enum class FieldMode { PrimeResidue, TableBased };

/// Largest order accepted for extension fields (full log/antilog tables).
inline constexpr std::uint64_t kMaxTableOrder = 1U << 16U;

/// Immutable finite field of odd order q = p^e. Copies share the underlying
/// tables, so a Field can be handed to any number of concurrent workers.
class Field {
 public:
  /// Builds F_{p^e}. Throws NotPrime, EvenCharacteristic or
  /// TooLargeForTableMode.
  static Field make(std::uint64_t p, unsigned e = 1);

  const FieldSpec& spec() const { return data_->spec; }
  std::uint64_t order() const { return data_->spec.q; }
  std::uint64_t characteristic() const { return data_->spec.p; }
  FieldMode mode() const { return data_->mode; }
  bool is_prime_field() const { return data_->mode == FieldMode::PrimeResidue; }

  /// Primitive element, the smallest canonical value generating F_q^*.
  Elem gamma() const { return data_->gamma; }

  /// Irreducible monic modulus (coefficients low degree first, size e+1).
  /// Empty for prime fields.
  std::span<const std::uint64_t> modulus() const { return data_->modulus; }

  /// Distinct primes dividing q-1.
  std::span<const std::uint64_t> group_order_factors() const { return data_->factors; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }

  /// Element with the given canonical value; throws InvalidArgument if >= q.
  Elem element(std::uint64_t canonical) const;

  /// The image of the integer n under Z -> F_q (lands in the prime subfield).
  Elem from_int(std::int64_t n) const;

  Elem add(Elem a, Elem b) const {
    if (is_prime_field()) {
      const std::uint64_t q = order();
      const std::uint64_t s = a.value + b.value;
      return Elem{s >= q ? s - q : s};
    }
    return add_digits(a, b, false);
  }

  Elem sub(Elem a, Elem b) const {
    if (is_prime_field()) {
      return Elem{a.value >= b.value ? a.value - b.value : a.value + order() - b.value};
    }
    return add_digits(a, b, true);
  }

  Elem neg(Elem a) const { return sub(zero(), a); }

  Elem mul(Elem a, Elem b) const {
    if (is_prime_field()) {
      if (data_->word_sized) return Elem{a.value * b.value % order()};
      return Elem{static_cast<std::uint64_t>(static_cast<nt::u128>(a.value) * b.value % order())};
    }
    if (a.value == 0 || b.value == 0) return zero();
    const std::uint64_t n = order() - 1;
    std::uint64_t k = static_cast<std::uint64_t>(data_->log_table[a.value]) + data_->log_table[b.value];
    if (k >= n) k -= n;
    return Elem{data_->exp_table[k]};
  }

  /// Multiplicative inverse; throws DivisionByZero for 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Square-and-multiply. pow(x, 0) = 1 for every x including 0, so that the
  /// constant term of a polynomial evaluates uniformly at x = 0.
  Elem pow(Elem a, std::uint64_t n) const;

  /// Quadratic character eta: 0 at 0, +1 on nonzero squares, -1 otherwise.
  int quadratic_character(Elem x) const {
    if (!data_->eta_table.empty()) return data_->eta_table[x.value];
    return quadratic_character_by_power(x);
  }

  /// Euler's criterion x^((q-1)/2); kept as an independent check of the table.
  int quadratic_character_by_power(Elem x) const;

  /// T(x) = x^((q-1)/d). Throws DNotDivisor unless d | q-1.
  Elem power_map_T(std::uint64_t d, Elem x) const;

  /// H = <gamma^((q-1)/d)> listed as gamma^(k(q-1)/d), k = 0..d-1.
  std::vector<Elem> subgroup_H(std::uint64_t d) const;

  /// Polynomial-basis product reduced by the modulus, without tables. For
  /// prime fields this is ordinary modular multiplication.
  Elem mul_direct(Elem a, Elem b) const;

  /// Throws DNotDivisor unless d >= 1 and d | q-1.
  void require_divisor(std::uint64_t d) const;

  friend bool operator==(const Field& a, const Field& b) { return a.data_ == b.data_ || a.data_->spec.q == b.data_->spec.q; }

 private:
  struct Data {
    FieldSpec spec;
    FieldMode mode = FieldMode::PrimeResidue;
    bool word_sized = false;
    Elem gamma;
    std::vector<std::uint64_t> modulus;
    std::vector<std::uint64_t> factors;
    std::vector<std::uint32_t> exp_table;
    std::vector<std::uint32_t> log_table;
    std::vector<std::int8_t> eta_table;
  };

  explicit Field(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  Elem add_digits(Elem a, Elem b, bool subtract) const;

  std::shared_ptr<const Data> data_;
};

inline Field make_field(std::uint64_t p, unsigned e = 1) { return Field::make(p, e); }

}  // namespace wldu

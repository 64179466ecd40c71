#include "wldu/ff.hpp"

#include <string>

#include "wldu/numtheory.hpp"

namespace wldu {

namespace {

constexpr std::uint64_t kMaxEtaTable = 1U << 24U;

using Coeffs = std::vector<std::uint64_t>;

Coeffs unpack(std::uint64_t value, std::uint64_t p, unsigned e) {
  Coeffs c(e, 0);
  for (unsigned i = 0; i < e; ++i) {
    c[i] = value % p;
    value /= p;
  }
  return c;
}

std::uint64_t pack(const Coeffs& c, std::uint64_t p) {
  std::uint64_t value = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) value = value * p + *it;
  return value;
}

// Remainder of a modulo the monic polynomial m over F_p (both low-first).
Coeffs poly_mod(Coeffs a, const Coeffs& m, std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    const std::uint64_t lead = a[i];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) {
      const std::size_t k = i - dm + j;
      a[k] = (a[k] + p - lead * m[j] % p) % p;
    }
  }
  a.resize(dm);
  return a;
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return out;
}

bool divides_monic(const Coeffs& divisor, const Coeffs& poly, std::uint64_t p) {
  const Coeffs r = poly_mod(poly, divisor, p);
  for (std::uint64_t c : r) {
    if (c != 0) return false;
  }
  return true;
}

// Trial division by every monic polynomial of degree 1..e/2.
bool is_irreducible(const Coeffs& f, std::uint64_t p) {
  const unsigned e = static_cast<unsigned>(f.size() - 1);
  for (unsigned k = 1; k <= e / 2; ++k) {
    const std::uint64_t count = nt::checked_pow(p, k);
    for (std::uint64_t t = 0; t < count; ++t) {
      Coeffs g = unpack(t, p, k);
      g.push_back(1);
      if (divides_monic(g, f, p)) return false;
    }
  }
  return true;
}

Coeffs least_irreducible(std::uint64_t p, unsigned e) {
  const std::uint64_t count = nt::checked_pow(p, e);
  for (std::uint64_t t = 0; t < count; ++t) {
    Coeffs f = unpack(t, p, e);
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

}  // namespace

Field Field::make(std::uint64_t p, unsigned e) {
  if (e == 0) throw Error(ErrorCode::InvalidArgument, "exponent must be positive");
  if (!nt::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
  const std::uint64_t q = nt::checked_pow(p, e);
  if (e > 1 && (q == 0 || q > kMaxTableOrder)) {
    throw Error(ErrorCode::TooLargeForTableMode,
                std::to_string(p) + "^" + std::to_string(e) + " exceeds " + std::to_string(kMaxTableOrder));
  }

  auto data = std::make_shared<Data>();
  data->spec = FieldSpec{p, e, q};
  data->mode = e == 1 ? FieldMode::PrimeResidue : FieldMode::TableBased;
  data->word_sized = q < (1ULL << 32U);
  data->factors = nt::prime_factors(q - 1);
  if (e > 1) data->modulus = least_irreducible(p, e);

  // Build a provisional context so mul_direct/pow are available for the search.
  Field provisional{data};
  auto generates = [&](Elem g) {
    for (std::uint64_t r : data->factors) {
      Elem x = Elem{1};
      Elem base = g;
      for (std::uint64_t n = (q - 1) / r; n != 0; n >>= 1U) {
        if (n & 1U) x = provisional.mul_direct(x, base);
        base = provisional.mul_direct(base, base);
      }
      if (x == Elem{1}) return false;
    }
    return true;
  };
  for (std::uint64_t v = 1; v < q; ++v) {
    if (generates(Elem{v})) {
      data->gamma = Elem{v};
      break;
    }
  }

  if (e > 1) {
    data->exp_table.assign(q - 1, 0);
    data->log_table.assign(q, 0);
    Elem x{1};
    for (std::uint64_t k = 0; k < q - 1; ++k) {
      data->exp_table[k] = static_cast<std::uint32_t>(x.value);
      data->log_table[x.value] = static_cast<std::uint32_t>(k);
      x = provisional.mul_direct(x, data->gamma);
    }
  }

  if (q <= kMaxEtaTable) {
    // Field is now fully usable; mark squares y^2 for y = 1..q-1.
    Field full{data};
    std::vector<std::int8_t> eta(q, -1);
    eta[0] = 0;
    for (std::uint64_t y = 1; y < q; ++y) eta[full.mul(Elem{y}, Elem{y}).value] = 1;
    data->eta_table = std::move(eta);
  }
  return Field{std::move(data)};
}

Elem Field::element(std::uint64_t canonical) const {
  if (canonical >= order()) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(canonical) + " is not below q=" + std::to_string(order()));
  }
  return Elem{canonical};
}

Elem Field::from_int(std::int64_t n) const {
  const auto p = static_cast<std::int64_t>(characteristic());
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return Elem{static_cast<std::uint64_t>(r)};
}

Elem Field::add_digits(Elem a, Elem b, bool subtract) const {
  const std::uint64_t p = characteristic();
  std::uint64_t out = 0;
  std::uint64_t scale = 1;
  std::uint64_t x = a.value, y = b.value;
  for (unsigned i = 0; i < spec().e; ++i) {
    const std::uint64_t da = x % p, db = y % p;
    const std::uint64_t digit = subtract ? (da + p - db) % p : (da + db) % p;
    out += digit * scale;
    scale *= p;
    x /= p;
    y /= p;
  }
  return Elem{out};
}

Elem Field::inv(Elem a) const {
  if (a.value == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (!is_prime_field()) {
    const std::uint64_t n = order() - 1;
    const std::uint64_t k = data_->log_table[a.value];
    return Elem{data_->exp_table[k == 0 ? 0 : n - k]};
  }
  // Extended Euclid on (a, q).
  std::int64_t t = 0, new_t = 1;
  auto r = static_cast<std::int64_t>(order());
  auto new_r = static_cast<std::int64_t>(a.value);
  while (new_r != 0) {
    const std::int64_t quotient = r / new_r;
    std::int64_t tmp = t - quotient * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quotient * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(order());
  return Elem{static_cast<std::uint64_t>(t)};
}

Elem Field::pow(Elem a, std::uint64_t n) const {
  Elem result = one();
  Elem base = a;
  while (n != 0) {
    if (n & 1U) result = mul(result, base);
    base = mul(base, base);
    n >>= 1U;
  }
  return result;
}

int Field::quadratic_character_by_power(Elem x) const {
  if (x.value == 0) return 0;
  return pow(x, (order() - 1) / 2) == one() ? 1 : -1;
}

void Field::require_divisor(std::uint64_t d) const {
  if (d == 0 || (order() - 1) % d != 0) {
    throw Error(ErrorCode::DNotDivisor, std::to_string(d) + " does not divide q-1=" + std::to_string(order() - 1));
  }
}

Elem Field::power_map_T(std::uint64_t d, Elem x) const {
  require_divisor(d);
  return pow(x, (order() - 1) / d);
}

std::vector<Elem> Field::subgroup_H(std::uint64_t d) const {
  require_divisor(d);
  const Elem generator = pow(gamma(), (order() - 1) / d);
  std::vector<Elem> out;
  out.reserve(d);
  Elem x = one();
  for (std::uint64_t k = 0; k < d; ++k) {
    out.push_back(x);
    x = mul(x, generator);
  }
  return out;
}

Elem Field::mul_direct(Elem a, Elem b) const {
  if (is_prime_field()) return Elem{nt::mulmod(a.value, b.value, order())};
  const std::uint64_t p = characteristic();
  const unsigned e = spec().e;
  const Coeffs prod = poly_mul(unpack(a.value, p, e), unpack(b.value, p, e), p);
  return Elem{pack(poly_mod(prod, data_->modulus, p), p)};
}

}  // namespace wldu

#pragma once

#include <cstdint>
#include <vector>

// Integer helpers shared by the field constructor and the sweep driver.
namespace wldu::nt {

__extension__ using u128 = unsigned __int128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in ascending order. n = 0 and n = 1 give {}.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// All primes in [lo, hi], ascending, via a segmented sieve of Eratosthenes.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Returns p^e, or 0 if the result overflows 64 bits.
std::uint64_t checked_pow(std::uint64_t p, unsigned e);

}  // namespace wldu::nt

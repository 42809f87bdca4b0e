#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mlab {

/// Möbius function by trial division.
int mobius(std::int64_t n);

/// All positive divisors of n in ascending order.
std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

bool is_prime(std::uint64_t n);

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// (p, e) with n = p^e, e >= 1, or nullopt when n is not a prime power.
std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t n);

/// Multiplicative order of q modulo k (gcd(q, k) = 1, k >= 1).
std::int64_t multiplicative_order(std::int64_t q, std::int64_t k);

std::int64_t gcd_i64(std::int64_t a, std::int64_t b);

/// d^e, throwing LimitExceeded when the value would exceed `cap`.
std::int64_t checked_pow(std::int64_t d, std::int64_t e, std::int64_t cap);

/// Primes p with lo <= p <= hi, ascending.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

}  // namespace mlab

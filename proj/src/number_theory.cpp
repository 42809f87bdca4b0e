#include "mlab/number_theory.hpp"

#include "mlab/error.hpp"

#include <algorithm>
#include <numeric>

namespace mlab {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "factorize requires n >= 1");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int mobius(std::int64_t n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "mobius requires n >= 1");
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "divisors requires n >= 1");
  std::vector<std::int64_t> small, large;
  for (std::int64_t i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    small.push_back(i);
    if (i != n / i) large.push_back(n / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t multiplicative_order(std::int64_t q, std::int64_t k) {
  if (k == 1) return 1;
  if (std::gcd(q, k) != 1) fail(ErrorKind::InvalidArgument, "multiplicative_order requires gcd(q, k) = 1");
  std::int64_t x = q % k, t = 1;
  while (x != 1) {
    x = x * (q % k) % k;
    ++t;
  }
  return t;
}

std::int64_t checked_pow(std::int64_t d, std::int64_t e, std::int64_t cap) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (r > cap / d) fail(ErrorKind::LimitExceeded, "power exceeds configured cap");
    r *= d;
  }
  if (r > cap) fail(ErrorKind::LimitExceeded, "power exceeds configured cap");
  return r;
}

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = std::max<std::int64_t>(lo, 2); p <= hi; ++p) {
    if (is_prime(static_cast<std::uint64_t>(p))) out.push_back(p);
  }
  return out;
}

}  // namespace mlab

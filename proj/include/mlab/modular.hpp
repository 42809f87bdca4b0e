#pragma once

#include "mlab/cyclotomic.hpp"
#include "mlab/integer.hpp"

#include <cstdint>
#include <vector>

namespace mlab::modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Arithmetic modulo an odd prime q < 2^62 in Montgomery form.
class MontField {
 public:
  explicit MontField(u64 q);

  u64 modulus() const { return q_; }
  u64 one() const { return one_; }

  u64 reduce(u128 t) const {
    const u64 m = static_cast<u64>(t) * qinv_;
    const u64 u = static_cast<u64>((t + static_cast<u128>(m) * q_) >> 64);
    return u >= q_ ? u - q_ : u;
  }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
  u64 add(u64 a, u64 b) const {
    const u64 s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + q_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : q_ - a; }

  u64 from_u64(u64 a) const { return mul(a % q_, r2_); }
  u64 from_i64(std::int64_t a) const;
  u64 from_integer(const Integer& a) const { return from_u64(mod_u64(a, q_)); }
  u64 to_u64(u64 a) const { return reduce(a); }

  u64 pow(u64 a, u64 e) const;
  /// DivisionByZero on zero.
  u64 inv(u64 a) const;

 private:
  u64 q_;
  u64 qinv_;  // -q^{-1} mod 2^64
  u64 r2_;    // 2^128 mod q
  u64 one_;
};

/// Dense polynomial over F_q with Montgomery-form coefficients, no trailing zeros.
using ModPoly = std::vector<u64>;

void trim(ModPoly& f);
ModPoly mul(const MontField& F, const ModPoly& a, const ModPoly& b);
/// Remainder of f modulo g (g nonzero).
ModPoly rem(const MontField& F, ModPoly f, const ModPoly& g);
ModPoly mulmod(const MontField& F, const ModPoly& a, const ModPoly& b, const ModPoly& g);
ModPoly sub(const MontField& F, const ModPoly& a, const ModPoly& b);
ModPoly scale(const MontField& F, const ModPoly& a, u64 s);
ModPoly derivative(const MontField& F, const ModPoly& f);
/// Standard resultant lc(f)^deg g * prod g(roots of f).
u64 resultant(const MontField& F, ModPoly f, ModPoly g);
/// Monic gcd; the zero polynomial when both inputs are zero.
ModPoly gcd_monic(const MontField& F, ModPoly a, ModPoly b);

/// Primes q < 2^62 with q = 1 mod k, descending from the top of the range.
/// The sequence depends only on k, so reconstructions are reproducible.
std::vector<u64> primes_one_mod(std::int64_t k, std::size_t count);

/// A primitive k-th root of unity in Montgomery form (q = 1 mod k).
u64 primitive_root_of_unity(const MontField& F, std::int64_t k);

/// Image of a cyclotomic integer under zeta_k -> omega_pow[1] with omega_pow[t] = omega^t.
u64 evaluate(const MontField& F, const CyclotomicElement& a, const std::vector<u64>& omega_pow);

/// Image of a Z[zeta_k] polynomial under zeta_k -> omega.
ModPoly image(const MontField& F, const CycPoly& f, const std::vector<u64>& omega_pow);
ModPoly image(const MontField& F, const IntPoly& f);

/// Incremental Chinese remaindering with symmetric output.
class Crt {
 public:
  void add(u64 residue, u64 q);
  const Integer& modulus() const { return modulus_; }
  /// The representative in (-M/2, M/2].
  Integer symmetric() const;

 private:
  Integer value_ = 0;
  Integer modulus_ = 1;
};

}  // namespace mlab::modp

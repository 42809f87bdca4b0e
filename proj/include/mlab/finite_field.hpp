#pragma once

#include "mlab/error.hpp"
#include "mlab/integer.hpp"
#include "mlab/poly.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mlab {

/// F_q for a prime q < 2^62; scalars are canonical residues in [0, q).
class PrimeFieldRing {
 public:
  using value_type = std::uint64_t;
  static constexpr bool is_field = true;

  /// BadPrime unless q is prime.
  explicit PrimeFieldRing(std::uint64_t q);

  std::uint64_t modulus() const { return q_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const;
  value_type from_integer(const Integer& v) const { return mod_u64(v, q_); }
  value_type add(value_type a, value_type b) const { return a + b >= q_ ? a + b - q_ : a + b; }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + q_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : q_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % q_);
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  value_type pow(value_type a, std::uint64_t e) const;
  value_type inverse(value_type a) const;
  std::optional<value_type> unit_inverse(value_type a) const {
    if (a == 0) return std::nullopt;
    return inverse(a);
  }
  value_type exact_div(value_type a, value_type b) const { return mul(a, inverse(b)); }

  std::string tag() const { return "PrimeField(" + std::to_string(q_) + ")"; }
  bool operator==(const PrimeFieldRing& o) const { return q_ == o.q_; }

 private:
  std::uint64_t q_;
};

using FpPoly = Poly<PrimeFieldRing>;

/// F_q[x] / (modulus) for a monic irreducible modulus of degree t >= 1.
/// Scalars are coefficient vectors of length exactly t.
class ExtFieldRing {
 public:
  using value_type = std::vector<std::uint64_t>;
  static constexpr bool is_field = true;

  /// The modulus is trusted to be irreducible; callers check it with rabin_irreducible.
  explicit ExtFieldRing(const FpPoly& modulus);

  std::uint64_t characteristic() const { return base_.modulus(); }
  std::size_t degree() const { return t_; }
  const FpPoly& modulus() const { return *modulus_; }
  const PrimeFieldRing& base() const { return base_; }
  /// q^t.
  Integer size() const;

  value_type zero() const { return value_type(t_, 0); }
  value_type one() const;
  value_type from_int(long v) const;
  /// Residue of a polynomial in x (ascending F_q coefficients of any length).
  value_type from_base_poly(const FpPoly& p) const;
  value_type add(const value_type& a, const value_type& b) const;
  value_type sub(const value_type& a, const value_type& b) const;
  value_type neg(const value_type& a) const;
  value_type mul(const value_type& a, const value_type& b) const;
  bool is_zero(const value_type& a) const;
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  value_type inverse(const value_type& a) const;
  std::optional<value_type> unit_inverse(const value_type& a) const {
    if (is_zero(a)) return std::nullopt;
    return inverse(a);
  }
  value_type exact_div(const value_type& a, const value_type& b) const { return mul(a, inverse(b)); }

  std::string tag() const {
    return "ExtField(" + std::to_string(characteristic()) + "," + std::to_string(t_) + ")";
  }
  bool operator==(const ExtFieldRing& o) const;

 private:
  PrimeFieldRing base_;
  std::size_t t_;
  std::shared_ptr<const FpPoly> modulus_;
};

using FqPoly = Poly<ExtFieldRing>;

inline Integer field_size(const PrimeFieldRing& r) { return Integer(static_cast<unsigned long>(r.modulus())); }
inline Integer field_size(const ExtFieldRing& r) { return r.size(); }

/// base^e mod f over a field.
template <class Ring>
Poly<Ring> powmod(Poly<Ring> base, Integer e, const Poly<Ring>& f) {
  const Ring& r = f.ring();
  Poly<Ring> acc = rem(Poly<Ring>::constant(r, r.one()), f);
  base = rem(base, f);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = rem(mul(acc, base, INT64_MAX), f);
    e >>= 1;
    if (e > 0) base = rem(mul(base, base, INT64_MAX), f);
  }
  return acc;
}

std::vector<std::int64_t> prime_factors(std::int64_t n);

/// Rabin's test over a finite field of size Q: x^(Q^n) = x mod f and
/// gcd(x^(Q^(n/r)) - x, f) = 1 for each prime r | n = deg f.
template <class Ring>
bool rabin_irreducible(const Poly<Ring>& f) {
  if (!f.is_monic()) fail(ErrorKind::NonMonic, "rabin_irreducible needs a monic polynomial");
  const long n = f.degree();
  if (n < 1) fail(ErrorKind::InvalidArgument, "rabin_irreducible needs degree >= 1");
  if (n == 1) return true;
  const Ring& r = f.ring();
  const Integer Q = field_size(r);
  const Poly<Ring> x = rem(Poly<Ring>::variable(r), f);

  // frob[i] = x^(Q^i) mod f, computed by repeated Q-th powers.
  std::vector<Poly<Ring>> frob{x};
  for (long i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), Q, f));
  if (!(frob[static_cast<std::size_t>(n)] == x)) return false;
  for (std::int64_t p : prime_factors(n)) {
    auto g = field_gcd_monic(f, sub(frob[static_cast<std::size_t>(n / p)], x));
    if (g.degree() != 0) return false;
  }
  return true;
}

/// All monic irreducible factors of a squarefree f whose factors share degree t
/// (equal-degree factorization), sorted by coefficient vector from the top.
/// Randomness comes from a fixed-seed generator, so the output is reproducible.
std::vector<FpPoly> equal_degree_factors(const FpPoly& f, std::size_t t);

}  // namespace mlab

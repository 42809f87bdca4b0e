#pragma once

#include "mlab/error.hpp"
#include "mlab/integer.hpp"

#include <optional>
#include <string>

namespace mlab {

// A coefficient ring is a small value object describing where polynomial
// coefficients live. Rings compare equal exactly when their coefficients are
// interchangeable; polynomial operations reject mismatched rings.
//
// Required surface:
//   value_type, zero(), one(), from_int(long), add, sub, neg, mul, is_zero,
//   equal, unit_inverse (nullopt when not a unit), tag(), operator==.
// Integral domains additionally provide exact_div(a, b); fields provide
// inverse(a) and set is_field = true.

struct IntegerRing {
  using value_type = Integer;
  static constexpr bool is_field = false;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const { return v; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  void addmul(value_type& acc, const value_type& a, const value_type& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  std::optional<value_type> unit_inverse(const value_type& a) const {
    if (a == 1 || a == -1) return a;
    return std::nullopt;
  }

  value_type exact_div(const value_type& a, const value_type& b) const {
    if (b == 0) fail(ErrorKind::DivisionByZero, "integer division by zero");
    value_type q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }

  std::string tag() const { return "Integer"; }
  bool operator==(const IntegerRing&) const = default;
};

struct RationalRing {
  using value_type = Rational;
  static constexpr bool is_field = true;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const { return v; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  value_type inverse(const value_type& a) const {
    if (a == 0) fail(ErrorKind::DivisionByZero, "rational inverse of zero");
    return 1 / a;
  }
  std::optional<value_type> unit_inverse(const value_type& a) const {
    if (a == 0) return std::nullopt;
    return inverse(a);
  }
  value_type exact_div(const value_type& a, const value_type& b) const { return a * inverse(b); }

  std::string tag() const { return "Rational"; }
  bool operator==(const RationalRing&) const = default;
};

}  // namespace mlab

#pragma once

#include "mlab/integer.hpp"
#include "mlab/poly.hpp"
#include "mlab/rings.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mlab {

/// Phi_k, built by dividing x^k - 1 by Phi_j for every proper divisor j of k.
Poly<IntegerRing> cyclotomic_polynomial(std::int64_t k);

/// Immutable description of Z[zeta_k] = Z[x]/(Phi_k): the modulus and its degree.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> create(std::int64_t k);

  std::int64_t order() const { return order_; }
  std::size_t degree() const { return degree_; }
  const Poly<IntegerRing>& modulus() const { return modulus_; }

  /// Reduces an arbitrary-length coordinate vector modulo Phi_k in place and
  /// resizes it to degree().
  void reduce(std::vector<Integer>& coords) const;

  /// Exponents s in [1, k) with gcd(s, k) = 1, ascending.
  const std::vector<std::int64_t>& units() const { return units_; }

 private:
  explicit CyclotomicField(std::int64_t k);

  std::int64_t order_;
  std::size_t degree_;
  Poly<IntegerRing> modulus_;
  std::vector<long> modulus_small_;  // Phi_k coefficients, all fit in a long for desk-scale k
  std::vector<std::int64_t> units_;
};

using CyclotomicFieldPtr = std::shared_ptr<const CyclotomicField>;

class RationalCyclotomic;

/// Element of Z[zeta_k] in the power basis 1, zeta, ..., zeta^(phi(k)-1).
/// Order 1 encodes a rational integer.
class CyclotomicElement {
 public:
  CyclotomicElement();
  explicit CyclotomicElement(CyclotomicFieldPtr field);
  /// Coordinates of any length; reduced modulo Phi_k.
  CyclotomicElement(CyclotomicFieldPtr field, std::vector<Integer> coords);

  static CyclotomicElement from_integer(CyclotomicFieldPtr field, const Integer& value);
  /// zeta_k^s for any integer s.
  static CyclotomicElement zeta_power(CyclotomicFieldPtr field, std::int64_t s);

  std::int64_t order() const { return field_->order(); }
  const CyclotomicFieldPtr& field() const { return field_; }
  const std::vector<Integer>& coeffs() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational_integer() const;

  /// gcd of all coordinates (0 for the zero element).
  Integer content() const;

  CyclotomicElement operator-() const;
  CyclotomicElement scaled(const Integer& s) const;
  /// Galois image under zeta -> zeta^s, gcd(s, k) = 1.
  CyclotomicElement conjugate(std::int64_t s) const;

  Poly<IntegerRing> representative() const;

  bool operator==(const CyclotomicElement& o) const;

  friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);

  /// acc += a * b without intermediate allocation of a full product element.
  static void addmul(CyclotomicElement& acc, const CyclotomicElement& a, const CyclotomicElement& b);

 private:
  CyclotomicFieldPtr field_;
  std::vector<Integer> coords_;
};

enum class CycOp { Add, Sub, Mul };

CyclotomicElement cyc_arith(const CyclotomicElement& a, const CyclotomicElement& b, CycOp op);

/// Absolute norm N(a) = Res(Phi_k, A) where A is the power-basis representative.
Integer cyc_norm(const CyclotomicElement& a);

/// Product of the non-identity Galois conjugates, so that a * adjugate(a) = N(a).
CyclotomicElement cyc_adjugate(const CyclotomicElement& a);

/// Inverse in Q(zeta_k) by extended gcd of A(x) with Phi_k over Q.
RationalCyclotomic cyc_invert(const CyclotomicElement& a);

/// a / b in Z[zeta_k]; NonZeroRemainder if the quotient is not integral.
CyclotomicElement cyc_exact_div(const CyclotomicElement& a, const CyclotomicElement& b);

std::string to_string(const CyclotomicElement& a, const std::string& symbol = "z");

/// numerator / denominator with denominator >= 1 and no common rational prime.
class RationalCyclotomic {
 public:
  explicit RationalCyclotomic(CyclotomicFieldPtr field);
  RationalCyclotomic(CyclotomicElement numerator, Integer denominator = 1);

  const CyclotomicElement& numerator() const { return numerator_; }
  const Integer& denominator() const { return denominator_; }
  std::int64_t order() const { return numerator_.order(); }

  bool is_zero() const { return numerator_.is_zero(); }
  bool is_one() const { return denominator_ == 1 && numerator_.is_one(); }

  RationalCyclotomic inverse() const;
  RationalCyclotomic operator-() const;
  bool operator==(const RationalCyclotomic& o) const = default;

  friend RationalCyclotomic operator+(const RationalCyclotomic& a, const RationalCyclotomic& b);
  friend RationalCyclotomic operator-(const RationalCyclotomic& a, const RationalCyclotomic& b);
  friend RationalCyclotomic operator*(const RationalCyclotomic& a, const RationalCyclotomic& b);

 private:
  void normalize();

  CyclotomicElement numerator_;
  Integer denominator_;
};

/// Coefficient ring Z[zeta_k].
class CyclotomicRing {
 public:
  using value_type = CyclotomicElement;
  static constexpr bool is_field = false;

  explicit CyclotomicRing(std::int64_t k) : field_(CyclotomicField::create(k)) {}
  explicit CyclotomicRing(CyclotomicFieldPtr field) : field_(std::move(field)) {}

  const CyclotomicFieldPtr& field() const { return field_; }
  std::int64_t order() const { return field_->order(); }

  value_type zero() const { return CyclotomicElement(field_); }
  value_type one() const { return CyclotomicElement::from_integer(field_, 1); }
  value_type from_int(long v) const { return CyclotomicElement::from_integer(field_, v); }
  value_type from_integer(const Integer& v) const { return CyclotomicElement::from_integer(field_, v); }
  value_type zeta(std::int64_t s = 1) const { return CyclotomicElement::zeta_power(field_, s); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  void addmul(value_type& acc, const value_type& a, const value_type& b) const {
    CyclotomicElement::addmul(acc, a, b);
  }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  std::optional<value_type> unit_inverse(const value_type& a) const;
  value_type exact_div(const value_type& a, const value_type& b) const { return cyc_exact_div(a, b); }

  std::string tag() const { return "Cyclotomic(" + std::to_string(order()) + ")"; }
  bool operator==(const CyclotomicRing& o) const { return order() == o.order(); }

 private:
  CyclotomicFieldPtr field_;
};

/// Coefficient field Q(zeta_k).
class RationalCyclotomicRing {
 public:
  using value_type = RationalCyclotomic;
  static constexpr bool is_field = true;

  explicit RationalCyclotomicRing(std::int64_t k) : field_(CyclotomicField::create(k)) {}
  explicit RationalCyclotomicRing(CyclotomicFieldPtr field) : field_(std::move(field)) {}

  const CyclotomicFieldPtr& field() const { return field_; }
  std::int64_t order() const { return field_->order(); }

  value_type zero() const { return RationalCyclotomic(field_); }
  value_type one() const { return RationalCyclotomic(CyclotomicElement::from_integer(field_, 1)); }
  value_type from_int(long v) const { return RationalCyclotomic(CyclotomicElement::from_integer(field_, v)); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  value_type inverse(const value_type& a) const { return a.inverse(); }
  std::optional<value_type> unit_inverse(const value_type& a) const {
    if (a.is_zero()) return std::nullopt;
    return a.inverse();
  }
  value_type exact_div(const value_type& a, const value_type& b) const { return a * b.inverse(); }

  std::string tag() const { return "RationalCyclotomic(" + std::to_string(order()) + ")"; }
  bool operator==(const RationalCyclotomicRing& o) const { return order() == o.order(); }

 private:
  CyclotomicFieldPtr field_;
};

using IntPoly = Poly<IntegerRing>;
using CycPoly = Poly<CyclotomicRing>;

/// Embeds an integer polynomial into Z[zeta_k][c].
CycPoly promote(const IntPoly& f, const CyclotomicRing& ring);

/// Applies zeta -> zeta^s to every coefficient.
CycPoly conjugate(const CycPoly& f, std::int64_t s);

}  // namespace mlab

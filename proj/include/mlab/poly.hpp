#pragma once

#include "mlab/error.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mlab {

inline constexpr std::int64_t kDefaultDegreeCap = 4096;

/// Dense univariate polynomial over a coefficient ring, ascending degree,
/// with no trailing zeros. The zero polynomial has degree -1.
template <class Ring>
class Poly {
 public:
  using Scalar = typename Ring::value_type;

  explicit Poly(Ring ring = Ring{}) : ring_(std::move(ring)) {}
  Poly(Ring ring, std::vector<Scalar> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) { trim(); }

  static Poly constant(Ring ring, Scalar value) { return Poly(std::move(ring), {std::move(value)}); }

  static Poly monomial(Ring ring, Scalar value, std::size_t degree) {
    std::vector<Scalar> c(degree + 1, ring.zero());
    c[degree] = std::move(value);
    return Poly(std::move(ring), std::move(c));
  }

  /// The polynomial variable itself.
  static Poly variable(Ring ring) {
    auto one = ring.one();
    return monomial(std::move(ring), std::move(one), 1);
  }

  const Ring& ring() const { return ring_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Scalar& lead() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && ring_.equal(lead(), ring_.one()); }

  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_.zero(); }

  Scalar evaluate(const Scalar& x) const {
    Scalar acc = ring_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = ring_.add(ring_.mul(acc, x), *it);
    return acc;
  }

  bool operator==(const Poly& o) const {
    if (!(ring_ == o.ring_) || coeffs_.size() != o.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!ring_.equal(coeffs_[i], o.coeffs_[i])) return false;
    }
    return true;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && ring_.is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  Ring ring_;
  std::vector<Scalar> coeffs_;
};

namespace detail {

template <class Ring>
void require_same_ring(const Poly<Ring>& f, const Poly<Ring>& g, const char* op) {
  if (!(f.ring() == g.ring())) {
    fail(ErrorKind::RingMismatch, std::string(op) + ": " + f.ring().tag() + " vs " + g.ring().tag());
  }
}

inline void check_degree_cap(long degree, std::int64_t cap) {
  if (degree > cap) {
    fail(ErrorKind::LimitExceeded,
         "degree " + std::to_string(degree) + " exceeds cap " + std::to_string(cap));
  }
}

template <class Ring>
void addmul_to(const Ring& r, typename Ring::value_type& acc, const typename Ring::value_type& a,
               const typename Ring::value_type& b) {
  if constexpr (requires { r.addmul(acc, a, b); }) {
    r.addmul(acc, a, b);
  } else {
    acc = r.add(acc, r.mul(a, b));
  }
}

template <class Ring, class S = typename Ring::value_type>
void schoolbook_into(const Ring& r, std::span<const S> a, std::span<const S> b, std::span<S> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (r.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) addmul_to(r, out[i + j], a[i], b[j]);
  }
}

inline constexpr std::size_t kKaratsubaThreshold = 32;

/// out += a * b, with out.size() >= a.size() + b.size() - 1.
template <class Ring, class S = typename Ring::value_type>
void karatsuba_into(const Ring& r, std::span<const S> a, std::span<const S> b, std::span<S> out) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return;
  if (b.size() <= kKaratsubaThreshold) {
    schoolbook_into(r, a, b, out);
    return;
  }
  const std::size_t h = (a.size() + 1) / 2;
  if (b.size() <= h) {
    // Unbalanced: slice the longer operand into b-sized chunks.
    for (std::size_t off = 0; off < a.size(); off += b.size()) {
      std::size_t len = std::min(b.size(), a.size() - off);
      karatsuba_into(r, a.subspan(off, len), b, out.subspan(off));
    }
    return;
  }
  auto a0 = a.first(h), a1 = a.subspan(h);
  auto b0 = b.first(h), b1 = b.subspan(h);

  std::vector<S> z0(2 * h - 1, r.zero());
  std::vector<S> z2(a1.size() + b1.size() - 1, r.zero());
  karatsuba_into<Ring, S>(r, a0, b0, z0);
  karatsuba_into<Ring, S>(r, a1, b1, z2);

  std::vector<S> sa(a0.begin(), a0.end()), sb(b0.begin(), b0.end());
  for (std::size_t i = 0; i < a1.size(); ++i) sa[i] = r.add(sa[i], a1[i]);
  for (std::size_t i = 0; i < b1.size(); ++i) sb[i] = r.add(sb[i], b1[i]);
  std::vector<S> z1(2 * h - 1, r.zero());
  karatsuba_into<Ring, S>(r, sa, sb, z1);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = r.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = r.sub(z1[i], z2[i]);

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = r.add(out[i], z0[i]);
  for (std::size_t i = 0; i < z1.size() && h + i < out.size(); ++i) out[h + i] = r.add(out[h + i], z1[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * h + i] = r.add(out[2 * h + i], z2[i]);
}

template <class Ring>
typename Ring::value_type scalar_pow(const Ring& r, typename Ring::value_type base, std::uint64_t e) {
  auto acc = r.one();
  while (e) {
    if (e & 1) acc = r.mul(acc, base);
    e >>= 1;
    if (e) base = r.mul(base, base);
  }
  return acc;
}

}  // namespace detail

template <class Ring>
Poly<Ring> add(const Poly<Ring>& f, const Poly<Ring>& g) {
  detail::require_same_ring(f, g, "add");
  const auto& r = f.ring();
  std::vector<typename Ring::value_type> c(std::max(f.coeffs().size(), g.coeffs().size()), r.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) c[i] = f.coeffs()[i];
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) c[i] = r.add(c[i], g.coeffs()[i]);
  return Poly<Ring>(r, std::move(c));
}

template <class Ring>
Poly<Ring> neg(const Poly<Ring>& f) {
  std::vector<typename Ring::value_type> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(f.ring().neg(x));
  return Poly<Ring>(f.ring(), std::move(c));
}

template <class Ring>
Poly<Ring> sub(const Poly<Ring>& f, const Poly<Ring>& g) {
  detail::require_same_ring(f, g, "sub");
  const auto& r = f.ring();
  std::vector<typename Ring::value_type> c(std::max(f.coeffs().size(), g.coeffs().size()), r.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) c[i] = f.coeffs()[i];
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) c[i] = r.sub(c[i], g.coeffs()[i]);
  return Poly<Ring>(r, std::move(c));
}

/// Exact product; Karatsuba above the threshold, bit-identical to schoolbook.
template <class Ring>
Poly<Ring> mul(const Poly<Ring>& f, const Poly<Ring>& g, std::int64_t degree_cap = kDefaultDegreeCap) {
  detail::require_same_ring(f, g, "mul");
  if (f.is_zero() || g.is_zero()) return Poly<Ring>(f.ring());
  detail::check_degree_cap(f.degree() + g.degree(), degree_cap);
  const auto& r = f.ring();
  using S = typename Ring::value_type;
  std::vector<S> out(f.coeffs().size() + g.coeffs().size() - 1, r.zero());
  detail::karatsuba_into<Ring, S>(r, std::span<const S>(f.coeffs()), std::span<const S>(g.coeffs()), out);
  return Poly<Ring>(r, std::move(out));
}

/// Reference schoolbook product, kept for cross-checking the fast path.
template <class Ring>
Poly<Ring> mul_schoolbook(const Poly<Ring>& f, const Poly<Ring>& g) {
  detail::require_same_ring(f, g, "mul");
  if (f.is_zero() || g.is_zero()) return Poly<Ring>(f.ring());
  const auto& r = f.ring();
  using S = typename Ring::value_type;
  std::vector<S> out(f.coeffs().size() + g.coeffs().size() - 1, r.zero());
  detail::schoolbook_into<Ring, S>(r, std::span<const S>(f.coeffs()), std::span<const S>(g.coeffs()), out);
  return Poly<Ring>(r, std::move(out));
}

template <class Ring>
Poly<Ring> scale(const Poly<Ring>& f, const typename Ring::value_type& s) {
  std::vector<typename Ring::value_type> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(f.ring().mul(x, s));
  return Poly<Ring>(f.ring(), std::move(c));
}

template <class Ring>
Poly<Ring> operator+(const Poly<Ring>& f, const Poly<Ring>& g) { return add(f, g); }
template <class Ring>
Poly<Ring> operator-(const Poly<Ring>& f, const Poly<Ring>& g) { return sub(f, g); }
template <class Ring>
Poly<Ring> operator-(const Poly<Ring>& f) { return neg(f); }
template <class Ring>
Poly<Ring> operator*(const Poly<Ring>& f, const Poly<Ring>& g) { return mul(f, g); }

template <class Ring>
Poly<Ring> pow(const Poly<Ring>& f, std::uint64_t e, std::int64_t degree_cap = kDefaultDegreeCap) {
  if (f.degree() > 0) detail::check_degree_cap(static_cast<long>(e) * f.degree(), degree_cap);
  Poly<Ring> acc = Poly<Ring>::constant(f.ring(), f.ring().one());
  Poly<Ring> base = f;
  while (e) {
    if (e & 1) acc = mul(acc, base, degree_cap);
    e >>= 1;
    if (e) base = mul(base, base, degree_cap);
  }
  return acc;
}

template <class Ring>
Poly<Ring> derivative(const Poly<Ring>& f) {
  const auto& r = f.ring();
  if (f.degree() < 1) return Poly<Ring>(r);
  std::vector<typename Ring::value_type> c;
  c.reserve(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    c.push_back(r.mul(r.from_int(static_cast<long>(i)), f.coeffs()[i]));
  }
  return Poly<Ring>(r, std::move(c));
}

template <class Ring>
struct DivResult {
  Poly<Ring> quotient;
  Poly<Ring> remainder;
};

/// Long division by a divisor whose leading coefficient is a unit.
template <class Ring>
DivResult<Ring> divmod(const Poly<Ring>& f, const Poly<Ring>& g) {
  detail::require_same_ring(f, g, "divmod");
  const auto& r = f.ring();
  if (g.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  auto inv = r.unit_inverse(g.lead());
  if (!inv) fail(ErrorKind::InvalidArgument, "divisor leading coefficient is not a unit");
  const bool monic = g.is_monic();
  if (f.degree() < g.degree()) return {Poly<Ring>(r), f};

  auto rem = f.coeffs();
  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  std::vector<typename Ring::value_type> q(rem.size() - dg, r.zero());
  for (std::size_t i = rem.size(); i-- > dg;) {
    if (r.is_zero(rem[i])) continue;
    auto t = monic ? rem[i] : r.mul(rem[i], *inv);
    const std::size_t shift = i - dg;
    auto mt = r.neg(t);
    for (std::size_t j = 0; j < dg; ++j) detail::addmul_to(r, rem[shift + j], mt, gc[j]);
    rem[i] = r.zero();
    q[shift] = std::move(t);
  }
  rem.resize(dg);
  return {Poly<Ring>(r, std::move(q)), Poly<Ring>(r, std::move(rem))};
}

template <class Ring>
Poly<Ring> rem(const Poly<Ring>& f, const Poly<Ring>& g) { return divmod(f, g).remainder; }

/// f / g, asserting the remainder is zero.
template <class Ring>
Poly<Ring> exact_div(const Poly<Ring>& f, const Poly<Ring>& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) {
    fail(ErrorKind::NonZeroRemainder, "division of degree " + std::to_string(f.degree()) + " by degree " +
                                          std::to_string(g.degree()) + " left a nonzero remainder");
  }
  return q;
}

/// lc(g)^(deg f - deg g + 1) * f mod g, computed without division.
template <class Ring>
Poly<Ring> pseudo_rem(const Poly<Ring>& f, const Poly<Ring>& g) {
  detail::require_same_ring(f, g, "pseudo_rem");
  const auto& r = f.ring();
  if (g.is_zero()) fail(ErrorKind::DivisionByZero, "pseudo-remainder by zero");
  if (f.degree() < g.degree()) return f;
  auto rem = f.coeffs();
  const auto& gc = g.coeffs();
  const auto& lc = g.lead();
  const std::size_t dg = gc.size() - 1;
  // One multiplication by lc(g) per step gives the lc^(deg f - deg g + 1) factor.
  for (std::size_t i = rem.size(); i-- > dg;) {
    auto t = rem[i];
    for (std::size_t j = 0; j < i; ++j) rem[j] = r.mul(rem[j], lc);
    if (!r.is_zero(t)) {
      const std::size_t shift = i - dg;
      auto mt = r.neg(t);
      for (std::size_t j = 0; j < dg; ++j) detail::addmul_to(r, rem[shift + j], mt, gc[j]);
    }
    rem[i] = r.zero();
  }
  rem.resize(dg);
  return Poly<Ring>(r, std::move(rem));
}

/// Sylvester resultant over an integral domain by the subresultant PRS.
/// No monicity requirement; for monic f it equals the product of g over the
/// roots of f.
template <class Ring>
typename Ring::value_type subresultant(Poly<Ring> a, Poly<Ring> b) {
  detail::require_same_ring(a, b, "resultant");
  const Ring r = a.ring();
  using S = typename Ring::value_type;
  if (a.is_zero() || b.is_zero()) return r.zero();
  S sign = r.one();
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) sign = r.neg(sign);
  }
  if (b.degree() == 0) return r.mul(sign, detail::scalar_pow(r, b.lead(), static_cast<std::uint64_t>(a.degree())));

  S g = r.one(), h = r.one();
  while (b.degree() > 0) {
    const long delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) sign = r.neg(sign);
    auto prem = pseudo_rem(a, b);
    a = std::move(b);
    if (prem.is_zero()) return r.zero();
    S divisor = r.mul(g, detail::scalar_pow(r, h, static_cast<std::uint64_t>(delta)));
    std::vector<S> c;
    c.reserve(prem.coeffs().size());
    for (const auto& x : prem.coeffs()) c.push_back(r.exact_div(x, divisor));
    b = Poly<Ring>(r, std::move(c));
    g = a.lead();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = r.exact_div(detail::scalar_pow(r, g, static_cast<std::uint64_t>(delta)),
                      detail::scalar_pow(r, h, static_cast<std::uint64_t>(delta - 1)));
    }
  }
  const long da = a.degree();
  S last = detail::scalar_pow(r, b.lead(), static_cast<std::uint64_t>(da));
  if (da > 1) last = r.exact_div(last, detail::scalar_pow(r, h, static_cast<std::uint64_t>(da - 1)));
  return r.mul(sign, last);
}

/// Res(f, g) = product of g(alpha) over the roots alpha of the monic f.
template <class Ring>
typename Ring::value_type resultant(const Poly<Ring>& f, const Poly<Ring>& g) {
  detail::require_same_ring(f, g, "resultant");
  if (!f.is_monic()) fail(ErrorKind::NonMonicLeft, "resultant requires a monic left argument");
  if (f.degree() == 0) return f.ring().one();
  return subresultant(f, g);
}

/// Euclid over a field; returns the monic gcd (zero only if both inputs are).
template <class Ring>
Poly<Ring> field_gcd_monic(Poly<Ring> a, Poly<Ring> b) {
  static_assert(Ring::is_field);
  detail::require_same_ring(a, b, "gcd");
  while (!b.is_zero()) {
    auto rr = rem(a, b);
    a = std::move(b);
    b = std::move(rr);
  }
  if (a.is_zero()) return a;
  return scale(a, a.ring().inverse(a.lead()));
}

template <class Ring>
struct ExtendedGcd {
  Poly<Ring> gcd;  // monic
  Poly<Ring> s;    // s*a + t*b = gcd
  Poly<Ring> t;
};

template <class Ring>
ExtendedGcd<Ring> field_extended_gcd(const Poly<Ring>& a, const Poly<Ring>& b) {
  static_assert(Ring::is_field);
  detail::require_same_ring(a, b, "extended_gcd");
  const Ring& r = a.ring();
  Poly<Ring> r0 = a, r1 = b;
  Poly<Ring> s0 = Poly<Ring>::constant(r, r.one()), s1(r);
  Poly<Ring> t0(r), t1 = Poly<Ring>::constant(r, r.one());
  while (!r1.is_zero()) {
    auto [q, rr] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rr);
    auto s2 = sub(s0, mul(q, s1, INT64_MAX));
    auto t2 = sub(t0, mul(q, t1, INT64_MAX));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto inv = r.inverse(r0.lead());
  return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

/// Maps coefficients into another ring.
template <class To, class From, class Fn>
Poly<To> map_coeffs(const Poly<From>& f, To ring, Fn&& fn) {
  std::vector<typename To::value_type> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(fn(x));
  return Poly<To>(std::move(ring), std::move(c));
}

}  // namespace mlab

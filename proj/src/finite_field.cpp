#include "mlab/finite_field.hpp"

#include "mlab/number_theory.hpp"

#include <algorithm>
#include <random>

namespace mlab {

PrimeFieldRing::PrimeFieldRing(std::uint64_t q) : q_(q) {
  if (q >= (std::uint64_t{1} << 62) || !is_prime(q)) fail(ErrorKind::BadPrime, std::to_string(q) + " is not a usable prime");
}

PrimeFieldRing::value_type PrimeFieldRing::from_int(long v) const {
  const long r = v % static_cast<long>(q_);
  return static_cast<value_type>(r < 0 ? r + static_cast<long>(q_) : r);
}

PrimeFieldRing::value_type PrimeFieldRing::pow(value_type a, std::uint64_t e) const {
  value_type r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

PrimeFieldRing::value_type PrimeFieldRing::inverse(value_type a) const {
  if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in " + tag());
  return pow(a, q_ - 2);
}

ExtFieldRing::ExtFieldRing(const FpPoly& modulus)
    : base_(modulus.ring()), t_(static_cast<std::size_t>(std::max(0L, modulus.degree()))),
      modulus_(std::make_shared<const FpPoly>(modulus)) {
  if (modulus.degree() < 1 || !modulus.is_monic()) fail(ErrorKind::NonMonic, "extension modulus must be monic of degree >= 1");
}

Integer ExtFieldRing::size() const { return ipow(Integer(static_cast<unsigned long>(characteristic())), t_); }

ExtFieldRing::value_type ExtFieldRing::one() const {
  value_type v(t_, 0);
  v[0] = 1;
  return v;
}

ExtFieldRing::value_type ExtFieldRing::from_int(long v) const {
  value_type out(t_, 0);
  out[0] = base_.from_int(v);
  return out;
}

ExtFieldRing::value_type ExtFieldRing::from_base_poly(const FpPoly& p) const {
  const FpPoly r = rem(p, *modulus_);
  value_type out(t_, 0);
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) out[i] = r.coeffs()[i];
  return out;
}

ExtFieldRing::value_type ExtFieldRing::add(const value_type& a, const value_type& b) const {
  value_type out(t_);
  for (std::size_t i = 0; i < t_; ++i) out[i] = base_.add(a[i], b[i]);
  return out;
}

ExtFieldRing::value_type ExtFieldRing::sub(const value_type& a, const value_type& b) const {
  value_type out(t_);
  for (std::size_t i = 0; i < t_; ++i) out[i] = base_.sub(a[i], b[i]);
  return out;
}

ExtFieldRing::value_type ExtFieldRing::neg(const value_type& a) const {
  value_type out(t_);
  for (std::size_t i = 0; i < t_; ++i) out[i] = base_.neg(a[i]);
  return out;
}

ExtFieldRing::value_type ExtFieldRing::mul(const value_type& a, const value_type& b) const {
  if (t_ == 1) return {base_.mul(a[0], b[0])};
  std::vector<std::uint64_t> prod(2 * t_ - 1, 0);
  for (std::size_t i = 0; i < t_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < t_; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
  }
  const auto& m = modulus_->coeffs();
  for (std::size_t i = prod.size(); i-- > t_;) {
    if (prod[i] == 0) continue;
    const auto c = prod[i];
    for (std::size_t j = 0; j < t_; ++j) prod[i - t_ + j] = base_.sub(prod[i - t_ + j], base_.mul(c, m[j]));
    prod[i] = 0;
  }
  prod.resize(t_);
  return prod;
}

bool ExtFieldRing::is_zero(const value_type& a) const {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t v) { return v == 0; });
}

ExtFieldRing::value_type ExtFieldRing::inverse(const value_type& a) const {
  if (is_zero(a)) fail(ErrorKind::DivisionByZero, "inverse of zero in " + tag());
  const FpPoly pa(base_, a);
  const auto eg = field_extended_gcd(pa, *modulus_);
  if (eg.gcd.degree() != 0) fail(ErrorKind::InvalidArgument, "extension modulus is not irreducible");
  return from_base_poly(eg.s);
}

bool ExtFieldRing::operator==(const ExtFieldRing& o) const {
  return base_ == o.base_ && (modulus_ == o.modulus_ || *modulus_ == *o.modulus_);
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto& [p, e] : factorize(n)) {
    (void)e;
    out.push_back(p);
  }
  return out;
}

namespace {

bool top_down_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (std::size_t i = x.size(); i-- > 0;)
    if (x[i] != y[i]) return x[i] < y[i];
  return false;
}

FpPoly monic(const FpPoly& f) { return scale(f, f.ring().inverse(f.lead())); }

// Splitting polynomial: a^((q^t - 1)/2) - 1 for odd q, the absolute trace
// a + a^2 + ... + a^(2^(t-1)) for q = 2.
FpPoly splitter(const FpPoly& a, const FpPoly& f, std::size_t t) {
  const auto& r = f.ring();
  const std::uint64_t q = r.modulus();
  if (q != 2) {
    Integer e = (ipow(Integer(static_cast<unsigned long>(q)), t) - 1) / 2;
    return sub(powmod(a, e, f), FpPoly::constant(r, 1));
  }
  FpPoly acc = rem(a, f), term = rem(a, f);
  for (std::size_t i = 1; i < t; ++i) {
    term = rem(mul(term, term, INT64_MAX), f);
    acc = add(acc, term);
  }
  return acc;
}

void split(const FpPoly& f, std::size_t t, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (static_cast<std::size_t>(f.degree()) == t) {
    out.push_back(monic(f));
    return;
  }
  const auto& r = f.ring();
  const std::uint64_t q = r.modulus();
  while (true) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(f.degree()));
    for (auto& v : c) v = rng() % q;
    const FpPoly a(r, c);
    if (a.degree() < 1) continue;
    const FpPoly g = field_gcd_monic(f, splitter(a, f, t));
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split(g, t, rng, out);
      split(exact_div(f, g), t, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FpPoly> equal_degree_factors(const FpPoly& f, std::size_t t) {
  if (t == 0 || f.degree() < 1 || f.degree() % static_cast<long>(t) != 0)
    fail(ErrorKind::InvalidArgument, "equal_degree_factors: degree is not a multiple of t");
  std::mt19937_64 rng(0x6d6c6162ULL);
  std::vector<FpPoly> out;
  split(monic(f), t, rng, out);
  std::sort(out.begin(), out.end(), top_down_less);
  return out;
}

}  // namespace mlab

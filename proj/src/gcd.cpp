#include "mlab/gcd.hpp"

namespace mlab {

namespace {

Integer poly_content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Integer poly_content(const CycPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    for (const auto& x : c.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

bool leading_sign_negative(const IntPoly& f) { return f.lead() < 0; }

bool leading_sign_negative(const CycPoly& f) {
  for (auto it = f.lead().coeffs().rbegin(); it != f.lead().coeffs().rend(); ++it) {
    if (*it != 0) return *it < 0;
  }
  return false;
}

template <class P>
P content_stripped_prs(P a, P b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorKind::InvalidArgument, "gcd of two zero polynomials");
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    auto r = primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  Integer g = poly_content(f);
  if (leading_sign_negative(f)) g = -g;
  if (g == 1) return f;
  return map_coeffs(f, f.ring(), [&](const Integer& x) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return q;
  });
}

CycPoly primitive_part(const CycPoly& f) {
  if (f.is_zero()) return f;
  Integer g = poly_content(f);
  if (leading_sign_negative(f)) g = -g;
  if (g == 1) return f;
  return map_coeffs(f, f.ring(), [&](const CyclotomicElement& x) {
    std::vector<Integer> c = x.coeffs();
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return CyclotomicElement(x.field(), std::move(c));
  });
}

Poly<RationalRing> poly_gcd_monic(const IntPoly& f, const IntPoly& g) {
  auto h = content_stripped_prs(f, g);
  RationalRing qq;
  Rational inv = 1 / Rational(h.lead());
  return map_coeffs(h, qq, [&](const Integer& x) -> Rational { return Rational(x) * inv; });
}

Poly<RationalCyclotomicRing> poly_gcd_monic(const CycPoly& f, const CycPoly& g) {
  auto h = content_stripped_prs(f, g);
  RationalCyclotomicRing ring(h.ring().field());
  auto inv = RationalCyclotomic(h.lead()).inverse();
  return map_coeffs(h, ring, [&](const CyclotomicElement& x) { return RationalCyclotomic(x) * inv; });
}

}  // namespace mlab

#pragma once

#include "mlab/cyclotomic.hpp"
#include "mlab/poly.hpp"
#include "mlab/rings.hpp"

namespace mlab {

/// Monic gcd over Q. Intermediate remainders are kept primitive over Z.
Poly<RationalRing> poly_gcd_monic(const IntPoly& f, const IntPoly& g);

/// Monic gcd over Q(zeta_k). Pseudo-remainders are stripped of their
/// rational-integer content between steps.
Poly<RationalCyclotomicRing> poly_gcd_monic(const CycPoly& f, const CycPoly& g);

template <class Ring>
  requires Ring::is_field
Poly<Ring> poly_gcd_monic(const Poly<Ring>& f, const Poly<Ring>& g) {
  if (f.is_zero() && g.is_zero()) fail(ErrorKind::InvalidArgument, "gcd of two zero polynomials");
  return field_gcd_monic(f, g);
}

/// Divides out the gcd of all integer coordinates; sign is normalized so the
/// leading coordinate is positive.
IntPoly primitive_part(const IntPoly& f);
CycPoly primitive_part(const CycPoly& f);

}  // namespace mlab

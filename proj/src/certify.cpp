#include "mlab/certify.hpp"

#include "mlab/norm.hpp"
#include "mlab/number_theory.hpp"

namespace mlab {

namespace {

FpPoly reduce_integer_poly(const IntPoly& f, const PrimeFieldRing& r) {
  std::vector<std::uint64_t> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(r.from_integer(x));
  return FpPoly(r, std::move(c));
}

void check_good_prime(std::int64_t k, std::uint64_t q) {
  if (q < 2 || !is_prime(q)) fail(ErrorKind::BadPrime, std::to_string(q) + " is not prime");
  if (static_cast<std::uint64_t>(k) % q == 0) fail(ErrorKind::BadPrime, std::to_string(q) + " divides " + std::to_string(k));
}

bool in_ramified_prime(const CyclotomicElement& a, std::int64_t p) {
  Integer s = 0;
  for (const auto& c : a.coeffs()) s += c;
  return mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

// Eisenstein at the prime above p of Z[zeta_{p^r}].
bool eisenstein_at_p(const CycPoly& G, std::int64_t p) {
  if (!G.is_monic() || G.degree() < 1) return false;
  for (long i = 0; i < G.degree(); ++i)
    if (!in_ramified_prime(G.coeff(static_cast<std::size_t>(i)), p)) return false;
  Integer n = abs(cyc_norm(G.coeff(0)));
  if (n == 0) return false;
  std::int64_t v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
    n /= static_cast<unsigned long>(p);
    ++v;
  }
  return v == 1;
}

}  // namespace

ResidueField make_residue_field(std::int64_t k, std::uint64_t q) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "cyclotomic order must be >= 1");
  check_good_prime(k, q);
  const PrimeFieldRing fq(q);
  const auto t = static_cast<std::size_t>(multiplicative_order(static_cast<std::int64_t>(q % static_cast<std::uint64_t>(k)), k));
  const FpPoly phi = reduce_integer_poly(cyclotomic_polynomial(k), fq);
  FpPoly modulus = static_cast<long>(t) == phi.degree() ? phi : equal_degree_factors(phi, t).front();
  return ResidueField{k, q, t, std::move(modulus)};
}

bool residue_field_valid(const ResidueField& f) {
  if (f.k < 1 || f.q < 2 || !is_prime(f.q) || static_cast<std::uint64_t>(f.k) % f.q == 0) return false;
  if (!(f.modulus.ring() == PrimeFieldRing(f.q))) return false;
  if (f.modulus.degree() != static_cast<long>(f.t) || !f.modulus.is_monic()) return false;
  if (static_cast<std::int64_t>(f.t) != multiplicative_order(static_cast<std::int64_t>(f.q % static_cast<std::uint64_t>(f.k)), f.k)) return false;
  if (!rabin_irreducible(f.modulus)) return false;
  const FpPoly phi = reduce_integer_poly(cyclotomic_polynomial(f.k), PrimeFieldRing(f.q));
  return rem(phi, f.modulus).is_zero();
}

FqPoly reduce_to_residue(const CycPoly& G, const ResidueField& field) {
  check_good_prime(field.k, field.q);
  if (G.ring().order() != field.k)
    fail(ErrorKind::OrderMismatch, "polynomial over " + G.ring().tag() + ", residue field for order " + std::to_string(field.k));
  const PrimeFieldRing fq(field.q);
  const ExtFieldRing ext = field.ring();
  std::vector<ExtFieldRing::value_type> c;
  c.reserve(G.coeffs().size());
  for (const auto& a : G.coeffs()) {
    std::vector<std::uint64_t> coords;
    for (const auto& x : a.coeffs()) coords.push_back(fq.from_integer(x));
    c.push_back(ext.from_base_poly(FpPoly(fq, std::move(coords))));
  }
  return FqPoly(ext, std::move(c));
}

const char* to_string(CertificateStatus s) { return s == CertificateStatus::Proven ? "Proven" : "Inconclusive"; }
const char* to_string(CertificateKind k) { return k == CertificateKind::Rabin ? "Rabin" : "DegreeBound"; }

CycPoly family_polynomial(FamilyBuilder& builder, const FamilySpec& spec) {
  spec.validate();
  if (spec.is_gleason()) return promote(builder.gleason(spec.d, spec.n), CyclotomicRing(1));
  return builder.misiurewicz(spec);
}

std::vector<long> small_integer_roots(const CycPoly& G, long bound) {
  std::vector<long> out;
  const auto& ring = G.ring();
  for (long r = -bound; r <= bound; ++r) {
    CyclotomicElement acc = ring.zero();
    for (std::size_t i = G.coeffs().size(); i-- > 0;) acc = acc.scaled(r) + G.coeffs()[i];
    if (acc.is_zero()) out.push_back(r);
  }
  return out;
}

IrreducibilityCertificate certify_irreducible(FamilyBuilder& builder, const FamilySpec& spec, std::int64_t q_max) {
  IrreducibilityCertificate cert{spec, CertificateKind::Rabin, CertificateStatus::Inconclusive, std::nullopt, {}, ""};
  const CycPoly G = family_polynomial(builder, spec);
  const std::int64_t k = spec.ring_order();
  if (G.degree() > 1 && !small_integer_roots(G).empty()) {
    cert.note = "integer root found; reducible";
    return cert;
  }
  for (std::int64_t q : primes_in_range(2, q_max)) {
    if ((k * spec.d) % q == 0) continue;
    cert.tried.push_back(static_cast<std::uint64_t>(q));
    ResidueField field = make_residue_field(k, static_cast<std::uint64_t>(q));
    const FqPoly reduced = reduce_to_residue(G, field);
    if (rabin_irreducible(reduced)) {
      cert.status = CertificateStatus::Proven;
      cert.field = std::move(field);
      cert.note = "irreducible modulo a prime above " + std::to_string(q);
      return cert;
    }
  }
  cert.note = "no prime q <= " + std::to_string(q_max) + " gives an irreducible reduction";
  return cert;
}

bool recheck_certificate(const IrreducibilityCertificate& cert, const CycPoly& G) {
  if (cert.status != CertificateStatus::Proven) return false;
  if (cert.kind == CertificateKind::DegreeBound) {
    const auto pp = prime_power(cert.spec.d);
    return pp && cert.spec.n == 1 && eisenstein_at_p(G, pp->first);
  }
  if (!cert.field || !residue_field_valid(*cert.field)) return false;
  if (G.ring().order() != cert.field->k || !G.is_monic()) return false;
  const FqPoly reduced = reduce_to_residue(G, *cert.field);
  return reduced.degree() == G.degree() && rabin_irreducible(reduced);
}

IrreducibilityCertificate certify_degree_bound(FamilyBuilder& builder, const FamilySpec& spec) {
  IrreducibilityCertificate cert{spec, CertificateKind::DegreeBound, CertificateStatus::Inconclusive, std::nullopt, {}, ""};
  spec.validate();
  const auto pp = prime_power(spec.d);
  if (spec.is_gleason() || spec.n != 1 || !pp) {
    cert.note = "needs a Misiurewicz spec with n = 1 and prime-power d";
    return cert;
  }
  const std::int64_t p = pp->first;
  const CycPoly G = builder.misiurewicz(spec);
  const std::int64_t expected_degree = checked_pow(spec.d, spec.m - 1, INT64_MAX) - 1;
  if (G.degree() != expected_degree) {
    cert.note = "degree differs from d^(m-1) - 1";
    return cert;
  }
  OrbitNormEngine engine(builder.orbit(spec.d), spec);
  const NormResult norm = engine.orbit(1);
  if (norm.value != p) {
    cert.note = "norm of a_1 is " + to_decimal(norm.value) + ", not p";
    return cert;
  }
  if (!eisenstein_at_p(G, p)) {
    cert.note = "not Eisenstein at the prime above p";
    return cert;
  }
  cert.status = CertificateStatus::Proven;
  cert.note = "Eisenstein at the prime above " + std::to_string(p) + "; degree " + std::to_string(G.degree());
  return cert;
}

}  // namespace mlab

#pragma once

#include "mlab/cyclotomic.hpp"
#include "mlab/family.hpp"
#include "mlab/finite_field.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mlab {

/// Residue field Z[zeta_k] / Q for a prime Q above q, q not dividing k.
struct ResidueField {
  std::int64_t k = 1;
  std::uint64_t q = 0;
  std::size_t t = 0;  // multiplicative order of q mod k
  FpPoly modulus;     // irreducible factor of Phi_k mod q of degree t

  ExtFieldRing ring() const { return ExtFieldRing(modulus); }
};

/// Chooses the smallest (top-down coefficient order) factor of Phi_k mod q.
/// BadPrime when q is not prime or q | k.
ResidueField make_residue_field(std::int64_t k, std::uint64_t q);

/// Checks every ResidueField invariant from scratch.
bool residue_field_valid(const ResidueField& field);

/// Coefficientwise reduction Z[zeta_k] -> F_{q^t}.
FqPoly reduce_to_residue(const CycPoly& G, const ResidueField& field);

enum class CertificateStatus { Proven, Inconclusive };
enum class CertificateKind { Rabin, DegreeBound };

const char* to_string(CertificateStatus s);
const char* to_string(CertificateKind k);

struct IrreducibilityCertificate {
  FamilySpec spec;
  CertificateKind kind = CertificateKind::Rabin;
  CertificateStatus status = CertificateStatus::Inconclusive;
  std::optional<ResidueField> field;  // set for Proven Rabin certificates
  std::vector<std::uint64_t> tried;   // primes examined, ascending
  std::string note;
};

inline constexpr std::int64_t kDefaultQMax = 500;

/// The polynomial named by spec (Gleason polynomials live in Z[zeta_1] = Z).
CycPoly family_polynomial(FamilyBuilder& builder, const FamilySpec& spec);

/// Reduction modulo good primes q <= q_max (ascending, skipping q | k*d) and
/// Rabin's test in the residue field; the smallest proving q is reported.
IrreducibilityCertificate certify_irreducible(FamilyBuilder& builder, const FamilySpec& spec,
                                              std::int64_t q_max = kDefaultQMax);

/// Re-derives a Proven Rabin certificate from its recorded data alone.
bool recheck_certificate(const IrreducibilityCertificate& cert, const CycPoly& G);

/// n = 1, d = p^e: G is Eisenstein at the unique prime P = (1 - zeta) above p
/// (every non-leading coefficient lies in P, v_P(G(0)) = 1), and the norm
/// identity N(Res(G, a_1)) = p holds. Eisenstein forces one root of G to
/// generate an extension of degree deg G = d^(m-1) - 1 over Q(zeta).
IrreducibilityCertificate certify_degree_bound(FamilyBuilder& builder, const FamilySpec& spec);

/// Integers r with |r| <= bound and G(r) = 0.
std::vector<long> small_integer_roots(const CycPoly& G, long bound = 10);

}  // namespace mlab

#pragma once

#include "mlab/cyclotomic.hpp"
#include "mlab/family.hpp"
#include "mlab/integer.hpp"
#include "mlab/modular.hpp"

#include <cstdint>
#include <vector>

namespace mlab {

/// |N_{Q(zeta)/Q}(Res_c(G, h))| together with the signed norm for debugging.
struct NormResult {
  Integer value;         // absolute norm, >= 0
  bool zero = false;     // G and h share a root
  Integer signed_value;  // norm before taking the absolute value

  static NormResult from_signed(Integer n) {
    NormResult r;
    r.zero = n == 0;
    r.value = abs(n);
    r.signed_value = std::move(n);
    return r;
  }
  bool operator==(const NormResult& o) const { return value == o.value && zero == o.zero; }
};

enum class NormMethod { Auto, Subresultant, Modular };

/// Norm of the resultant of monic G and h, both over the same Z[zeta_k].
/// Subresultant: resultant in Z[zeta_k] by PRS followed by cyc_norm.
/// Modular: residues at every degree-one prime above q = 1 mod k, recombined
/// by CRT against an a-priori bound from a root bound of G and the coefficients of h.
NormResult eval_norm(const CycPoly& G, const CycPoly& h, NormMethod method = NormMethod::Auto);
NormResult eval_norm(const CycPoly& G, const IntPoly& h, NormMethod method = NormMethod::Auto);

/// True iff the norm is exactly 1.
bool is_unit_at_roots(const CycPoly& G, const CycPoly& h, NormMethod method = NormMethod::Auto);
bool is_unit_at_roots(const CycPoly& G, const IntPoly& h, NormMethod method = NormMethod::Auto);

/// v with N = p^v; NotPurePower when N has another prime factor.
std::int64_t prime_power_decompose(const Integer& N, std::int64_t p);

/// Upper bound (in bits) on log2 |N(Res(G, h))| used by the modular path.
std::size_t modular_norm_bound_bits(const CycPoly& G, const CycPoly& h);

/// a_x - zeta_K^t a_y; y = 0 gives a_x alone.
struct OrbitFactor {
  std::int64_t x = 1;
  std::int64_t y = 0;
  std::int64_t t = 0;
};

/// Norms of orbit expressions over the roots of one Gleason or Misiurewicz
/// polynomial G. Every root c0 of G has a bounded critical orbit, so
/// |a_i(c0)| <= 2^(1/(d-1)) for all i; this bounds each factor's norm by
/// (2 * 2^(1/(d-1)))^(deg G * phi(K)) and fixes the number of CRT primes.
class OrbitNormEngine {
 public:
  /// K is the cyclotomic order in which norms are taken; 0 selects the order of
  /// G's own zeta (1 for Gleason polynomials). K must be a multiple of it.
  OrbitNormEngine(OrbitCache& cache, const FamilySpec& spec, std::int64_t K = 0);

  const FamilySpec& spec() const { return spec_; }
  std::int64_t ring_order() const { return K_; }
  const CycPoly& polynomial() const { return G_; }
  std::int64_t degree() const { return G_.degree(); }

  /// h = a_i.
  NormResult orbit(std::int64_t i);
  /// h = a_x - zeta_K^t a_y.
  NormResult difference(std::int64_t x, std::int64_t y, std::int64_t t);
  /// h = product of factors with exponents +1 or -1, evaluated at the roots of G.
  /// Returns nullopt when a denominator factor vanishes at a root of G.
  std::optional<NormResult> quotient(const std::vector<std::pair<OrbitFactor, int>>& factors);
  /// h = G^{zeta'}_{d,j,l} (or G_{d,0,l}); falls back to eval_norm on the explicit
  /// polynomial when the factored form has a vanishing denominator.
  NormResult family(const FamilySpec& target);

 private:
  struct Embedding {
    modp::ModPoly g;
    std::vector<modp::ModPoly> orbit;  // a_i mod (q, g)
    std::vector<modp::u64> omega_pow;  // omega^t for t < K
  };
  struct PrimeData {
    modp::MontField field;
    std::vector<Embedding> embeddings;
  };

  static CycPoly build(OrbitCache& cache, const FamilySpec& spec, const CyclotomicRing& ring);
  void extend_orbit(std::int64_t i);
  Integer factor_norm(const OrbitFactor& f);

  OrbitCache& cache_;
  FamilySpec spec_;
  std::int64_t K_;
  CyclotomicRing ring_;
  CycPoly G_;
  std::size_t bound_bits_;
  std::vector<PrimeData> primes_;
  std::int64_t orbit_len_ = 0;
};

/// Factors describing G^{zeta}_{d,j,l} (or G_{d,0,l}) as orbit expressions with
/// Möbius exponents, zeta mapped into Z[zeta_K].
std::vector<std::pair<OrbitFactor, int>> family_factors(const FamilySpec& spec, std::int64_t K);

}  // namespace mlab

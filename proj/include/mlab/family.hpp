#pragma once

#include "mlab/cyclotomic.hpp"
#include "mlab/poly.hpp"

#include <cstdint>
#include <deque>
#include <memory>
#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace mlab {

/// zeta = zeta_order^power, with order | d, order > 1 and gcd(power, order) = 1.
struct ZetaDescriptor {
  std::int64_t order = 0;
  std::int64_t power = 1;

  auto operator<=>(const ZetaDescriptor&) const = default;
};

/// Names G_{d,0,n} (m = 0, no zeta) or the Misiurewicz polynomial G^zeta_{d,m,n}.
struct FamilySpec {
  std::int64_t d = 2;
  std::int64_t m = 0;
  std::int64_t n = 1;
  std::optional<ZetaDescriptor> zeta;

  /// Throws InvalidSpec when the tuple is not admissible.
  void validate() const;
  bool is_gleason() const { return m == 0; }
  /// Cyclotomic order of the coefficient ring (1 for Gleason polynomials).
  std::int64_t ring_order() const { return zeta ? zeta->order : 1; }
  std::string key() const;

  auto operator<=>(const FamilySpec&) const = default;
};

/// Default root of unity for degree d: the smallest prime order dividing a
/// prime-power d, otherwise order d; power 1 in both cases.
ZetaDescriptor default_zeta(std::int64_t d);

FamilySpec misiurewicz_spec(std::int64_t d, std::int64_t m, std::int64_t n, std::optional<ZetaDescriptor> zeta = {});
FamilySpec gleason_spec(std::int64_t d, std::int64_t n);

/// Memoized critical orbit a_0 = 0, a_i = a_{i-1}^d + c for one degree d.
/// Reads are safe from several threads; new entries are appended under a lock.
class OrbitCache {
 public:
  explicit OrbitCache(std::int64_t d, std::int64_t degree_cap = kDefaultDegreeCap);

  std::int64_t d() const { return d_; }
  std::int64_t degree_cap() const { return degree_cap_; }

  /// a_i; LimitExceeded when d^(i-1) exceeds the degree cap.
  const IntPoly& get(std::int64_t i);

 private:
  std::int64_t d_;
  std::int64_t degree_cap_;
  std::mutex mutex_;
  std::deque<IntPoly> entries_;
};

const IntPoly& critical_orbit_poly(OrbitCache& cache, std::int64_t i);

/// G_{d,0,n}: Möbius product of orbit polynomials, assembled by exact division.
IntPoly gleason_poly(OrbitCache& cache, std::int64_t n);
IntPoly gleason_poly(std::int64_t d, std::int64_t n, std::int64_t degree_cap = kDefaultDegreeCap);

/// G^zeta_{d,m,n} over Z[zeta_k], k = spec.zeta->order.
CycPoly misiurewicz_poly(OrbitCache& cache, const FamilySpec& spec);
CycPoly misiurewicz_poly(const FamilySpec& spec, std::int64_t degree_cap = kDefaultDegreeCap);

/// Same polynomial with coefficients embedded in Z[zeta_K] for a multiple K of
/// the zeta order, so polynomials for different roots of unity can be combined.
CycPoly misiurewicz_poly_in(OrbitCache& cache, const FamilySpec& spec, const CyclotomicRing& ring);

/// Closed-form degree of G^zeta_{d,m,n}.
std::int64_t misiurewicz_degree(std::int64_t d, std::int64_t m, std::int64_t n);

/// Closed-form degree of G_{d,0,n}.
std::int64_t gleason_degree(std::int64_t d, std::int64_t n);

/// Sum over k | n of mu(n/k) d^(k-1); equals deg G / M for the Misiurewicz family.
std::int64_t mobius_power_sum(std::int64_t d, std::int64_t n);

/// H_{d,j,l} = product over w^d = 1, w != 1 of G^w_{d,j,l}, computed in Z[c]
/// from prod_w (X - wY) = (X^d - Y^d) / (X - Y).
IntPoly full_conjugate_product(OrbitCache& cache, std::int64_t j, std::int64_t l);
IntPoly full_conjugate_product(std::int64_t d, std::int64_t j, std::int64_t l,
                               std::int64_t degree_cap = kDefaultDegreeCap);

/// Memoizing front end: one orbit cache per d, constructions keyed by spec.
class FamilyBuilder {
 public:
  explicit FamilyBuilder(std::int64_t degree_cap = kDefaultDegreeCap) : degree_cap_(degree_cap) {}

  std::int64_t degree_cap() const { return degree_cap_; }

  OrbitCache& orbit(std::int64_t d);
  IntPoly gleason(std::int64_t d, std::int64_t n);
  CycPoly misiurewicz(const FamilySpec& spec);

 private:
  std::int64_t degree_cap_;
  std::mutex mutex_;
  std::map<std::int64_t, std::unique_ptr<OrbitCache>> orbits_;
  std::map<FamilySpec, IntPoly> gleason_memo_;
  std::map<FamilySpec, CycPoly> misiurewicz_memo_;
};

}  // namespace mlab

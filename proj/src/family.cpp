#include "mlab/family.hpp"

#include "mlab/number_theory.hpp"

#include <numeric>

namespace mlab {

namespace {

std::int64_t to_i64_or_limit(const Integer& v, const char* what) {
  if (!v.fits_slong_p()) fail(ErrorKind::LimitExceeded, std::string(what) + " does not fit in 64 bits");
  return v.get_si();
}

}  // namespace

void FamilySpec::validate() const {
  auto bad = [this](const std::string& why) { fail(ErrorKind::InvalidSpec, key() + ": " + why); };
  if (d < 2) bad("d must be >= 2");
  if (n < 1) bad("n must be >= 1");
  if (m < 0) bad("m must be >= 0");
  if (m == 0) {
    if (zeta) bad("a Gleason spec (m = 0) carries no root of unity");
    return;
  }
  if (!zeta) bad("a Misiurewicz spec needs a root of unity");
  if (m == 1) bad("m = 1 is outside the Misiurewicz family (m >= 2 required)");
  if (zeta->order <= 1 || d % zeta->order != 0) bad("zeta order must divide d and exceed 1");
  if (std::gcd(zeta->power, zeta->order) != 1) bad("zeta power must be coprime to its order");
}

std::string FamilySpec::key() const {
  std::string s = "d=" + std::to_string(d) + ",m=" + std::to_string(m) + ",n=" + std::to_string(n);
  if (zeta) s += ",k=" + std::to_string(zeta->order) + ",s=" + std::to_string(zeta->power);
  return s;
}

ZetaDescriptor default_zeta(std::int64_t d) {
  if (d < 2) fail(ErrorKind::InvalidSpec, "d must be >= 2");
  if (auto pp = prime_power(d)) return {pp->first, 1};
  return {d, 1};
}

FamilySpec misiurewicz_spec(std::int64_t d, std::int64_t m, std::int64_t n, std::optional<ZetaDescriptor> zeta) {
  FamilySpec s{d, m, n, zeta ? zeta : std::optional<ZetaDescriptor>(default_zeta(d))};
  s.validate();
  return s;
}

FamilySpec gleason_spec(std::int64_t d, std::int64_t n) {
  FamilySpec s{d, 0, n, std::nullopt};
  s.validate();
  return s;
}

OrbitCache::OrbitCache(std::int64_t d, std::int64_t degree_cap) : d_(d), degree_cap_(degree_cap) {
  if (d < 2) fail(ErrorKind::InvalidSpec, "orbit degree d must be >= 2");
  entries_.emplace_back(IntegerRing{});  // a_0 = 0
}

const IntPoly& OrbitCache::get(std::int64_t i) {
  if (i < 0) fail(ErrorKind::InvalidArgument, "orbit index must be >= 0");
  std::lock_guard lock(mutex_);
  if (static_cast<std::size_t>(i) < entries_.size()) return entries_[static_cast<std::size_t>(i)];
  if (i >= 1) checked_pow(d_, i - 1, degree_cap_);
  const IntPoly c = IntPoly::variable(IntegerRing{});
  while (entries_.size() <= static_cast<std::size_t>(i)) {
    entries_.push_back(add(pow(entries_.back(), static_cast<std::uint64_t>(d_), degree_cap_), c));
  }
  return entries_[static_cast<std::size_t>(i)];
}

const IntPoly& critical_orbit_poly(OrbitCache& cache, std::int64_t i) { return cache.get(i); }

IntPoly gleason_poly(OrbitCache& cache, std::int64_t n) {
  gleason_spec(cache.d(), n);
  const auto cap = cache.degree_cap();
  IntegerRing zz;
  IntPoly num = IntPoly::constant(zz, 1), den = IntPoly::constant(zz, 1);
  for (std::int64_t k : divisors(n)) {
    const int mu = mobius(n / k);
    if (mu == 1) num = mul(num, cache.get(k), cap);
    if (mu == -1) den = mul(den, cache.get(k), cap);
  }
  return exact_div(num, den);
}

IntPoly gleason_poly(std::int64_t d, std::int64_t n, std::int64_t degree_cap) {
  OrbitCache cache(d, degree_cap);
  return gleason_poly(cache, n);
}

CycPoly misiurewicz_poly_in(OrbitCache& cache, const FamilySpec& spec, const CyclotomicRing& ring) {
  spec.validate();
  if (spec.is_gleason()) fail(ErrorKind::InvalidSpec, "misiurewicz_poly needs m >= 2");
  if (spec.d != cache.d()) fail(ErrorKind::InvalidArgument, "orbit cache built for a different d");
  const std::int64_t k = spec.zeta->order;
  if (ring.order() % k != 0) fail(ErrorKind::OrderMismatch, "target ring does not contain zeta");
  const auto cap = cache.degree_cap();
  const auto zeta = ring.zeta(spec.zeta->power * (ring.order() / k));
  const auto lift = [&](const IntPoly& p) { return promote(p, ring); };

  CycPoly num = CycPoly::constant(ring, ring.one()), den = CycPoly::constant(ring, ring.one());
  const CycPoly tail = scale(lift(cache.get(spec.m - 1)), zeta);
  for (std::int64_t kk : divisors(spec.n)) {
    const int mu = mobius(spec.n / kk);
    if (mu == 0) continue;
    CycPoly factor = sub(lift(cache.get(spec.m + kk - 1)), tail);
    if (mu == 1) num = mul(num, factor, cap);
    else den = mul(den, factor, cap);
  }
  if ((spec.m - 1) % spec.n == 0) {
    for (std::int64_t kk : divisors(spec.n)) {
      const int mu = mobius(spec.n / kk);
      if (mu == 1) den = mul(den, lift(cache.get(kk)), cap);
      if (mu == -1) num = mul(num, lift(cache.get(kk)), cap);
    }
  }
  CycPoly g = exact_div(num, den);
  if (!g.is_monic()) fail(ErrorKind::NonZeroRemainder, spec.key() + ": construction is not monic");
  return g;
}

CycPoly misiurewicz_poly(OrbitCache& cache, const FamilySpec& spec) {
  spec.validate();
  if (spec.is_gleason()) fail(ErrorKind::InvalidSpec, "misiurewicz_poly needs m >= 2");
  return misiurewicz_poly_in(cache, spec, CyclotomicRing(spec.zeta->order));
}

CycPoly misiurewicz_poly(const FamilySpec& spec, std::int64_t degree_cap) {
  OrbitCache cache(spec.d, degree_cap);
  return misiurewicz_poly(cache, spec);
}

std::int64_t mobius_power_sum(std::int64_t d, std::int64_t n) {
  Integer total = 0;
  for (std::int64_t k : divisors(n)) total += mobius(n / k) * ipow(d, static_cast<unsigned long>(k - 1));
  return to_i64_or_limit(total, "Möbius power sum");
}

std::int64_t gleason_degree(std::int64_t d, std::int64_t n) { return mobius_power_sum(d, n); }

std::int64_t misiurewicz_degree(std::int64_t d, std::int64_t m, std::int64_t n) {
  if (d < 2 || m < 2 || n < 1) fail(ErrorKind::InvalidSpec, "misiurewicz_degree needs d >= 2, m >= 2, n >= 1");
  Integer total = 0;
  for (std::int64_t k : divisors(n)) total += mobius(n / k) * ipow(d, static_cast<unsigned long>(m + k - 2));
  if ((m - 1) % n == 0) {
    for (std::int64_t k : divisors(n)) total -= mobius(n / k) * ipow(d, static_cast<unsigned long>(k - 1));
  }
  return to_i64_or_limit(total, "Misiurewicz degree");
}

IntPoly full_conjugate_product(OrbitCache& cache, std::int64_t j, std::int64_t l) {
  const std::int64_t d = cache.d();
  if (j < 2 || l < 1) fail(ErrorKind::InvalidSpec, "full_conjugate_product needs j >= 2, l >= 1");
  const auto cap = cache.degree_cap();
  IntegerRing zz;
  IntPoly num = IntPoly::constant(zz, 1), den = IntPoly::constant(zz, 1);
  for (std::int64_t k : divisors(l)) {
    const int mu = mobius(l / k);
    if (mu == 0) continue;
    // prod_{w != 1} (a_{j+k-1} - w a_{j-1}) = (a_{j+k} - a_j) / (a_{j+k-1} - a_{j-1})
    IntPoly full = sub(cache.get(j + k), cache.get(j));
    IntPoly linear = sub(cache.get(j + k - 1), cache.get(j - 1));
    if (mu == 1) {
      num = mul(num, full, cap);
      den = mul(den, linear, cap);
    } else {
      num = mul(num, linear, cap);
      den = mul(den, full, cap);
    }
  }
  if ((j - 1) % l == 0) {
    for (std::int64_t k : divisors(l)) {
      const int mu = mobius(l / k);
      if (mu == 0) continue;
      IntPoly power = pow(cache.get(k), static_cast<std::uint64_t>(d - 1), cap);
      if (mu == 1) den = mul(den, power, cap);
      else num = mul(num, power, cap);
    }
  }
  return exact_div(num, den);
}

IntPoly full_conjugate_product(std::int64_t d, std::int64_t j, std::int64_t l, std::int64_t degree_cap) {
  OrbitCache cache(d, degree_cap);
  return full_conjugate_product(cache, j, l);
}

OrbitCache& FamilyBuilder::orbit(std::int64_t d) {
  std::lock_guard lock(mutex_);
  auto& slot = orbits_[d];
  if (!slot) slot = std::make_unique<OrbitCache>(d, degree_cap_);
  return *slot;
}

IntPoly FamilyBuilder::gleason(std::int64_t d, std::int64_t n) {
  const FamilySpec key = gleason_spec(d, n);
  {
    std::lock_guard lock(mutex_);
    if (auto it = gleason_memo_.find(key); it != gleason_memo_.end()) return it->second;
  }
  IntPoly g = gleason_poly(orbit(d), n);
  std::lock_guard lock(mutex_);
  return gleason_memo_.emplace(key, std::move(g)).first->second;
}

CycPoly FamilyBuilder::misiurewicz(const FamilySpec& spec) {
  spec.validate();
  {
    std::lock_guard lock(mutex_);
    if (auto it = misiurewicz_memo_.find(spec); it != misiurewicz_memo_.end()) return it->second;
  }
  CycPoly g = misiurewicz_poly(orbit(spec.d), spec);
  std::lock_guard lock(mutex_);
  return misiurewicz_memo_.emplace(spec, std::move(g)).first->second;
}

}  // namespace mlab

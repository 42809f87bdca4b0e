#include "mlab/norm.hpp"

#include "mlab/error.hpp"
#include "mlab/number_theory.hpp"

#include <algorithm>
#include <cmath>

namespace mlab {

namespace {

constexpr std::size_t kPrimeBits = 61;  // every CRT prime exceeds 2^61
constexpr long kAutoSubresultantWork = 4096;

Integer l1_norm(const CyclotomicElement& a) {
  Integer s = 0;
  for (const auto& c : a.coeffs()) s += abs(c);
  return s;
}

std::size_t primes_for_bits(std::size_t bits) { return bits / kPrimeBits + 2; }

std::vector<modp::u64> omega_powers(const modp::MontField& F, modp::u64 omega, std::size_t count) {
  std::vector<modp::u64> pw(std::max<std::size_t>(count, 1));
  pw[0] = F.one();
  for (std::size_t t = 1; t < pw.size(); ++t) pw[t] = F.mul(pw[t - 1], omega);
  return pw;
}

NormResult eval_norm_subresultant(const CycPoly& G, const CycPoly& h) {
  if (h.is_zero()) return NormResult::from_signed(0);
  return NormResult::from_signed(cyc_norm(resultant(G, h)));
}

NormResult eval_norm_modular(const CycPoly& G, const CycPoly& h) {
  if (h.is_zero()) return NormResult::from_signed(0);
  const std::int64_t k = G.ring().order();
  const auto& field = G.ring().field();
  const std::size_t bits = modular_norm_bound_bits(G, h);
  modp::Crt crt;
  for (modp::u64 q : modp::primes_one_mod(k, primes_for_bits(bits))) {
    modp::MontField F(q);
    const modp::u64 w = modp::primitive_root_of_unity(F, k);
    modp::u64 acc = F.one();
    for (std::int64_t u : field->units()) {
      const auto pw = omega_powers(F, F.pow(w, static_cast<modp::u64>(u)), field->degree());
      acc = F.mul(acc, modp::resultant(F, modp::image(F, G, pw), modp::image(F, h, pw)));
    }
    crt.add(F.to_u64(acc), q);
  }
  return NormResult::from_signed(crt.symmetric());
}

void check_inputs(const CycPoly& G, const CycPoly& h) {
  if (!(G.ring() == h.ring())) fail(ErrorKind::RingMismatch, "eval_norm: G over " + G.ring().tag() + ", h over " + h.ring().tag());
  if (!G.is_monic()) fail(ErrorKind::NonMonicLeft, "eval_norm needs monic G");
}

}  // namespace

std::size_t modular_norm_bound_bits(const CycPoly& G, const CycPoly& h) {
  const long D = G.degree();
  const long phi = static_cast<long>(G.ring().field()->degree());
  if (D <= 0 || h.is_zero()) return 8;
  // Fujiwara: every root of every conjugate of G has |alpha| <= 2 max |g_{D-i}|^(1/i),
  // with the constant term halved; |conjugate coefficient| <= L1 of its coordinates.
  long double log2_root = 0;
  for (long i = 1; i <= D; ++i) {
    const Integer c = l1_norm(G.coeff(static_cast<std::size_t>(D - i)));
    if (c == 0) continue;
    long double lb = static_cast<long double>(bit_length(c));
    if (i == D) lb -= 1;
    log2_root = std::max(log2_root, 1 + lb / static_cast<long double>(i));
  }
  long double per_root = 0;
  for (long i = 0; i <= h.degree(); ++i) {
    const Integer c = l1_norm(h.coeff(static_cast<std::size_t>(i)));
    if (c == 0) continue;
    per_root = std::max(per_root, static_cast<long double>(bit_length(c)) + i * log2_root);
  }
  per_root += std::log2(static_cast<long double>(h.degree() + 1));
  const long double total = per_root * static_cast<long double>(D * phi);
  return static_cast<std::size_t>(std::ceil(total * (1 + 1e-12L))) + 8;
}

NormResult eval_norm(const CycPoly& G, const CycPoly& h, NormMethod method) {
  check_inputs(G, h);
  if (method == NormMethod::Auto) {
    const long work = G.degree() * std::max<long>(h.degree(), 1) * static_cast<long>(G.ring().field()->degree());
    method = work <= kAutoSubresultantWork ? NormMethod::Subresultant : NormMethod::Modular;
  }
  return method == NormMethod::Subresultant ? eval_norm_subresultant(G, h) : eval_norm_modular(G, h);
}

NormResult eval_norm(const CycPoly& G, const IntPoly& h, NormMethod method) {
  return eval_norm(G, promote(h, G.ring()), method);
}

bool is_unit_at_roots(const CycPoly& G, const CycPoly& h, NormMethod method) {
  return eval_norm(G, h, method).value == 1;
}

bool is_unit_at_roots(const CycPoly& G, const IntPoly& h, NormMethod method) {
  return eval_norm(G, h, method).value == 1;
}

std::int64_t prime_power_decompose(const Integer& N, std::int64_t p) {
  if (N < 1) fail(ErrorKind::InvalidArgument, "prime_power_decompose needs N >= 1");
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) fail(ErrorKind::InvalidArgument, "prime_power_decompose needs a prime p");
  Integer r = N;
  std::int64_t v = 0;
  while (mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(p))) {
    r /= static_cast<unsigned long>(p);
    ++v;
  }
  if (r != 1) fail(ErrorKind::NotPurePower, to_decimal(N) + " is not a power of " + std::to_string(p));
  return v;
}

std::vector<std::pair<OrbitFactor, int>> family_factors(const FamilySpec& spec, std::int64_t K) {
  spec.validate();
  std::vector<std::pair<OrbitFactor, int>> out;
  if (spec.is_gleason()) {
    for (std::int64_t k : divisors(spec.n))
      if (int mu = mobius(spec.n / k)) out.push_back({{k, 0, 0}, mu});
    return out;
  }
  const std::int64_t k0 = spec.zeta->order;
  if (K % k0 != 0) fail(ErrorKind::OrderMismatch, "zeta of order " + std::to_string(k0) + " is not in Z[zeta_" + std::to_string(K) + "]");
  const std::int64_t t = spec.zeta->power * (K / k0);
  for (std::int64_t k : divisors(spec.n))
    if (int mu = mobius(spec.n / k)) out.push_back({{spec.m + k - 1, spec.m - 1, t}, mu});
  if ((spec.m - 1) % spec.n == 0) {
    for (std::int64_t k : divisors(spec.n))
      if (int mu = mobius(spec.n / k)) out.push_back({{k, 0, 0}, -mu});
  }
  return out;
}

CycPoly OrbitNormEngine::build(OrbitCache& cache, const FamilySpec& spec, const CyclotomicRing& ring) {
  spec.validate();
  if (spec.d != cache.d()) fail(ErrorKind::InvalidArgument, "orbit cache built for a different d");
  if (ring.order() % spec.ring_order() != 0) fail(ErrorKind::OrderMismatch, "norm ring does not contain zeta");
  return spec.is_gleason() ? promote(gleason_poly(cache, spec.n), ring) : misiurewicz_poly_in(cache, spec, ring);
}

OrbitNormEngine::OrbitNormEngine(OrbitCache& cache, const FamilySpec& spec, std::int64_t K)
    : cache_(cache), spec_(spec), K_(K == 0 ? spec.ring_order() : K), ring_(K_), G_(build(cache, spec, ring_)) {

  const std::size_t phi = ring_.field()->degree();
  const long double log2_factor = 1.0L + 1.0L / static_cast<long double>(spec_.d - 1);
  bound_bits_ = static_cast<std::size_t>(std::ceil(log2_factor * static_cast<long double>(G_.degree()) * phi)) + 8;

  for (modp::u64 q : modp::primes_one_mod(K_, primes_for_bits(bound_bits_))) {
    PrimeData pd{modp::MontField(q), {}};
    const modp::u64 w = modp::primitive_root_of_unity(pd.field, K_);
    for (std::int64_t u : ring_.field()->units()) {
      Embedding e;
      e.omega_pow = omega_powers(pd.field, pd.field.pow(w, static_cast<modp::u64>(u)), static_cast<std::size_t>(K_));
      e.g = modp::image(pd.field, G_, e.omega_pow);
      e.orbit.emplace_back();  // a_0 = 0
      pd.embeddings.push_back(std::move(e));
    }
    primes_.push_back(std::move(pd));
  }
  orbit_len_ = 1;
}

void OrbitNormEngine::extend_orbit(std::int64_t i) {
  for (auto& pd : primes_) {
    const auto& F = pd.field;
    for (auto& e : pd.embeddings) {
      while (static_cast<std::int64_t>(e.orbit.size()) <= i) {
        const modp::ModPoly& prev = e.orbit.back();
        modp::ModPoly next;
        if (!prev.empty()) {
          modp::ModPoly base = prev;
          next = {F.one()};
          for (std::int64_t exp = spec_.d; exp; exp >>= 1) {
            if (exp & 1) next = modp::mulmod(F, next, base, e.g);
            if (exp > 1) base = modp::mulmod(F, base, base, e.g);
          }
        }
        next.resize(std::max<std::size_t>(next.size(), 2), 0);
        next[1] = F.add(next[1], F.one());
        modp::trim(next);
        e.orbit.push_back(modp::rem(F, std::move(next), e.g));
      }
    }
  }
  orbit_len_ = std::max(orbit_len_, i + 1);
}

Integer OrbitNormEngine::factor_norm(const OrbitFactor& f) {
  if (f.x < 0 || f.y < 0) fail(ErrorKind::InvalidArgument, "orbit indices must be >= 0");
  extend_orbit(std::max(f.x, f.y));
  const std::int64_t t = ((f.t % K_) + K_) % K_;
  modp::Crt crt;
  for (auto& pd : primes_) {
    const auto& F = pd.field;
    modp::u64 acc = F.one();
    for (auto& e : pd.embeddings) {
      modp::ModPoly h = e.orbit[static_cast<std::size_t>(f.x)];
      if (f.y != 0) h = modp::sub(F, h, modp::scale(F, e.orbit[static_cast<std::size_t>(f.y)], e.omega_pow[static_cast<std::size_t>(t)]));
      acc = F.mul(acc, modp::resultant(F, e.g, h));
    }
    crt.add(F.to_u64(acc), F.modulus());
  }
  return crt.symmetric();
}

NormResult OrbitNormEngine::orbit(std::int64_t i) { return NormResult::from_signed(factor_norm({i, 0, 0})); }

NormResult OrbitNormEngine::difference(std::int64_t x, std::int64_t y, std::int64_t t) {
  return NormResult::from_signed(factor_norm({x, y, t}));
}

std::optional<NormResult> OrbitNormEngine::quotient(const std::vector<std::pair<OrbitFactor, int>>& factors) {
  Integer num = 1, den = 1;
  for (const auto& [f, e] : factors) {
    if (e != 1 && e != -1) fail(ErrorKind::InvalidArgument, "factor exponents must be +1 or -1");
    const Integer v = factor_norm(f);
    if (e == 1) num *= v;
    else if (v == 0) return std::nullopt;
    else den *= v;
  }
  if (num == 0) return NormResult::from_signed(0);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    fail(ErrorKind::NonZeroRemainder, "factored norm is not integral for " + spec_.key());
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return NormResult::from_signed(q);
}

NormResult OrbitNormEngine::family(const FamilySpec& target) {
  target.validate();
  if (target.d != spec_.d) fail(ErrorKind::InvalidArgument, "target polynomial has a different d");
  if (auto r = quotient(family_factors(target, K_))) return *r;
  return eval_norm(G_, build(cache_, target, ring_), NormMethod::Modular);
}

}  // namespace mlab

#include "mlab/modular.hpp"

#include "mlab/error.hpp"
#include "mlab/number_theory.hpp"

#include <algorithm>
#include <numeric>

namespace mlab::modp {

MontField::MontField(u64 q) : q_(q) {
  if (q < 3 || q % 2 == 0 || q >= (u64{1} << 62)) fail(ErrorKind::BadPrime, "Montgomery modulus must be odd and below 2^62");
  u64 inv = q;  // Newton iteration for q^{-1} mod 2^64
  for (int i = 0; i < 6; ++i) inv *= 2 - q * inv;
  qinv_ = ~inv + 1;
  const u128 r = (static_cast<u128>(1) << 64) % q;
  r2_ = static_cast<u64>((r * r) % q);
  one_ = static_cast<u64>(r);
}

u64 MontField::from_i64(std::int64_t a) const {
  const std::int64_t r = a % static_cast<std::int64_t>(q_);
  return from_u64(static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(q_) : r));
}

u64 MontField::pow(u64 a, u64 e) const {
  u64 r = one_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 MontField::inv(u64 a) const {
  if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero modulo q");
  return pow(a, q_ - 2);
}

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mul(const MontField& F, const ModPoly& a, const ModPoly& b) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

ModPoly rem(const MontField& F, ModPoly f, const ModPoly& g) {
  if (g.empty()) fail(ErrorKind::DivisionByZero, "polynomial remainder by zero modulo q");
  trim(f);
  const std::size_t dg = g.size() - 1;
  if (f.size() <= dg) return f;
  const u64 inv_lc = F.inv(g.back());
  const bool monic = g.back() == F.one();
  for (std::size_t i = f.size(); i-- > dg;) {
    if (f[i] == 0) continue;
    const u64 c = monic ? f[i] : F.mul(f[i], inv_lc);
    const std::size_t shift = i - dg;
    for (std::size_t j = 0; j < dg; ++j) f[shift + j] = F.sub(f[shift + j], F.mul(c, g[j]));
    f[i] = 0;
  }
  f.resize(dg);
  trim(f);
  return f;
}

ModPoly mulmod(const MontField& F, const ModPoly& a, const ModPoly& b, const ModPoly& g) {
  return rem(F, mul(F, a, b), g);
}

ModPoly sub(const MontField& F, const ModPoly& a, const ModPoly& b) {
  ModPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(out);
  return out;
}

ModPoly scale(const MontField& F, const ModPoly& a, u64 s) {
  ModPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.mul(a[i], s);
  trim(out);
  return out;
}

ModPoly derivative(const MontField& F, const ModPoly& f) {
  if (f.size() <= 1) return {};
  ModPoly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = F.mul(f[i], F.from_u64(i));
  trim(out);
  return out;
}

u64 resultant(const MontField& F, ModPoly f, ModPoly g) {
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return 0;
  u64 acc = F.one();
  // res(f, g) = lc(f)^(deg g - deg r) res(f, r) with r = g mod f, and
  // res(f, r) = (-1)^(deg f deg r) res(r, f).
  while (true) {
    const std::size_t df = f.size() - 1;
    const std::size_t dg = g.size() - 1;
    if (df == 0) return F.mul(acc, F.pow(f[0], dg));
    ModPoly r = rem(F, g, f);
    if (r.empty()) return 0;
    const std::size_t dr = r.size() - 1;
    acc = F.mul(acc, F.pow(f.back(), dg - dr));
    if ((df & 1) && (dr & 1)) acc = F.neg(acc);
    g = std::move(f);
    f = std::move(r);
  }
}

ModPoly gcd_monic(const MontField& F, ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = rem(F, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

std::vector<u64> primes_one_mod(std::int64_t k, std::size_t count) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "primes_one_mod needs k >= 1");
  const u64 step = static_cast<u64>(2 * k / std::gcd<std::int64_t>(2, k));  // q odd and q = 1 mod k
  u64 top = (u64{1} << 62) - 1;
  u64 q = top - ((top - 1) % step);
  std::vector<u64> out;
  out.reserve(count);
  while (out.size() < count) {
    if (is_prime(q)) out.push_back(q);
    q -= step;
  }
  return out;
}

u64 primitive_root_of_unity(const MontField& F, std::int64_t k) {
  const u64 q = F.modulus();
  if ((q - 1) % static_cast<u64>(k) != 0) fail(ErrorKind::BadPrime, "q is not 1 mod k");
  const auto factors = factorize(k);
  for (u64 g = 2;; ++g) {
    const u64 w = F.pow(F.from_u64(g), (q - 1) / static_cast<u64>(k));
    bool primitive = true;
    for (const auto& [r, e] : factors) {
      (void)e;
      if (F.pow(w, static_cast<u64>(k / r)) == F.one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) return w;
  }
}

u64 evaluate(const MontField& F, const CyclotomicElement& a, const std::vector<u64>& omega_pow) {
  u64 acc = 0;
  const auto& c = a.coeffs();
  for (std::size_t t = 0; t < c.size(); ++t) {
    if (c[t] == 0) continue;
    acc = F.add(acc, F.mul(F.from_integer(c[t]), omega_pow[t]));
  }
  return acc;
}

ModPoly image(const MontField& F, const CycPoly& f, const std::vector<u64>& omega_pow) {
  ModPoly out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = evaluate(F, f.coeffs()[i], omega_pow);
  trim(out);
  return out;
}

ModPoly image(const MontField& F, const IntPoly& f) {
  ModPoly out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.from_integer(f.coeffs()[i]);
  trim(out);
  return out;
}

void Crt::add(u64 residue, u64 q) {
  // value' = value + modulus * ((residue - value) * modulus^{-1} mod q)
  const u64 v = mod_u64(value_, q);
  const u64 mq = mod_u64(modulus_, q);
  Integer inv;
  mpz_class mq_z(static_cast<unsigned long>(mq)), q_z(static_cast<unsigned long>(q));
  mpz_invert(inv.get_mpz_t(), mq_z.get_mpz_t(), q_z.get_mpz_t());
  const u64 diff = residue >= v ? residue - v : residue + q - v;
  const u64 t = static_cast<u64>((static_cast<u128>(diff) * inv.get_ui()) % q);
  value_ += modulus_ * static_cast<unsigned long>(t);
  modulus_ *= static_cast<unsigned long>(q);
}

Integer Crt::symmetric() const {
  Integer half = modulus_ / 2;
  if (value_ > half) return value_ - modulus_;
  return value_;
}

}  // namespace mlab::modp

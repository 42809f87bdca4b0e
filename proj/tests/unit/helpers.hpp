#pragma once

#include "mlab/cyclotomic.hpp"
#include "mlab/family.hpp"
#include "mlab/poly.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testing {

// Small random generator for property tests; fixed seeds keep failures reproducible.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  }
  bool coin() { return range(0, 1) == 1; }

  mlab::Integer integer(std::int64_t bound) { return mlab::Integer(static_cast<long>(range(-bound, bound))); }

  mlab::IntPoly int_poly(long max_degree, std::int64_t bound, bool monic = false) {
    const long deg = range(0, max_degree);
    std::vector<mlab::Integer> c;
    for (long i = 0; i <= deg; ++i) c.push_back(integer(bound));
    if (monic) c.back() = 1;
    return mlab::IntPoly(mlab::IntegerRing{}, std::move(c));
  }

  mlab::CyclotomicElement cyc(const mlab::CyclotomicRing& ring, std::int64_t bound) {
    std::vector<mlab::Integer> c;
    for (std::size_t i = 0; i < ring.field()->degree(); ++i) c.push_back(integer(bound));
    return mlab::CyclotomicElement(ring.field(), std::move(c));
  }

  mlab::CycPoly cyc_poly(const mlab::CyclotomicRing& ring, long max_degree, std::int64_t bound, bool monic = false) {
    const long deg = range(0, max_degree);
    std::vector<mlab::CyclotomicElement> c;
    for (long i = 0; i <= deg; ++i) c.push_back(cyc(ring, bound));
    if (monic) c.back() = ring.one();
    return mlab::CycPoly(ring, std::move(c));
  }

  // A random admissible Misiurewicz spec with small degree.
  mlab::FamilySpec spec(std::int64_t max_degree) {
    for (;;) {
      const std::int64_t d = range(2, 5);
      const std::int64_t m = range(2, 4);
      const std::int64_t n = range(1, 3);
      if (mlab::misiurewicz_degree(d, m, n) > max_degree) continue;
      std::vector<std::int64_t> ks;
      for (std::int64_t k = 2; k <= d; ++k)
        if (d % k == 0) ks.push_back(k);
      const std::int64_t k = ks[static_cast<std::size_t>(range(0, static_cast<std::int64_t>(ks.size()) - 1))];
      std::int64_t s;
      do s = range(1, k - 1);
      while (std::gcd(s, k) != 1);
      return mlab::misiurewicz_spec(d, m, n, mlab::ZetaDescriptor{k, s});
    }
  }
};

inline mlab::IntPoly ip(std::vector<long> c) {
  std::vector<mlab::Integer> z(c.begin(), c.end());
  return mlab::IntPoly(mlab::IntegerRing{}, std::move(z));
}

inline mlab::CycPoly cp(const mlab::CyclotomicRing& ring, std::vector<long> c) {
  std::vector<mlab::CyclotomicElement> z;
  for (long x : c) z.push_back(ring.from_int(x));
  return mlab::CycPoly(ring, std::move(z));
}

inline mlab::CyclotomicElement ce(const mlab::CyclotomicRing& ring, std::vector<long> c) {
  return mlab::CyclotomicElement(ring.field(), std::vector<mlab::Integer>(c.begin(), c.end()));
}

// Determinant by fraction-free elimination over Q, used as an independent resultant oracle.
inline mlab::Rational determinant(std::vector<std::vector<mlab::Rational>> a) {
  const std::size_t n = a.size();
  mlab::Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const mlab::Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

// Sylvester-matrix resultant of integer polynomials (standard convention).
inline mlab::Integer sylvester_resultant(const mlab::IntPoly& f, const mlab::IntPoly& g) {
  const long m = f.degree(), n = g.degree();
  if (m == 0) return mlab::ipow(f.lead(), static_cast<unsigned long>(n));
  if (n == 0) return mlab::ipow(g.lead(), static_cast<unsigned long>(m));
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<mlab::Rational>> s(size, std::vector<mlab::Rational>(size, 0));
  for (long r = 0; r < n; ++r)
    for (long i = 0; i <= m; ++i) s[r][r + m - i] = f.coeff(static_cast<std::size_t>(i));
  for (long r = 0; r < m; ++r)
    for (long i = 0; i <= n; ++i) s[n + r][r + n - i] = g.coeff(static_cast<std::size_t>(i));
  const mlab::Rational d = determinant(std::move(s));
  return d.get_num();
}

}  // namespace testing

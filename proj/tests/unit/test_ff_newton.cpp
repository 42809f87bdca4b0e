#include "helpers.hpp"

#include "mlab/certify.hpp"
#include "mlab/finite_field.hpp"
#include "mlab/newton.hpp"
#include "mlab/number_theory.hpp"

#include <doctest.h>

using namespace mlab;
using testing::cp;
using testing::Gen;

namespace {

FpPoly fp(std::uint64_t q, std::vector<std::uint64_t> c) { return FpPoly(PrimeFieldRing(q), std::move(c)); }

// Every monic polynomial of degree n over F_q, enumerated by counter.
std::vector<FpPoly> all_monic(std::uint64_t q, long n) {
  std::vector<FpPoly> out;
  std::uint64_t total = 1;
  for (long i = 0; i < n; ++i) total *= q;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::uint64_t> c;
    for (std::uint64_t x = code, i = 0; i < static_cast<std::uint64_t>(n); ++i, x /= q) c.push_back(x % q);
    c.push_back(1);
    out.push_back(fp(q, std::move(c)));
  }
  return out;
}

// Irreducible iff no monic factor of degree 1..n/2 divides f.
bool trial_division_irreducible(const FpPoly& f) {
  const std::uint64_t q = f.ring().modulus();
  for (long t = 1; 2 * t <= f.degree(); ++t)
    for (const auto& g : all_monic(q, t))
      if (rem(f, g).is_zero()) return false;
  return true;
}

std::int64_t gauss_count(std::int64_t q, std::int64_t n) {
  std::int64_t total = 0;
  for (auto d : divisors(n)) total += mobius(n / d) * checked_pow(q, d, INT64_MAX);
  return total / n;
}

std::int64_t naive_valuation(Integer x, std::int64_t p) {
  std::int64_t v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

}  // namespace

TEST_SUITE("finite_field") {
  TEST_CASE("Rabin examples") {
    CHECK(rabin_irreducible(fp(3, {1, 0, 1})));
    CHECK_FALSE(rabin_irreducible(fp(5, {1, 0, 1})));
    CHECK(rabin_irreducible(fp(7, {3, 1})));
    CHECK_THROWS_AS(rabin_irreducible(fp(7, {3, 2})), Error);
    CHECK_THROWS_AS(PrimeFieldRing(9), Error);
  }

  TEST_CASE("property: Rabin agrees with trial division and the Gauss count") {
    for (auto [q, n_max] : std::vector<std::pair<std::uint64_t, long>>{{2, 8}, {3, 5}, {5, 3}}) {
      for (long n = 1; n <= n_max; ++n) {
        std::int64_t count = 0;
        for (const auto& f : all_monic(q, n)) {
          const bool r = rabin_irreducible(f);
          if (n <= 6) CHECK(r == trial_division_irreducible(f));
          count += r;
        }
        CHECK(count == gauss_count(static_cast<std::int64_t>(q), n));
      }
    }
  }

  TEST_CASE("extension field arithmetic") {
    const ExtFieldRing f9(fp(3, {1, 0, 1}));
    CHECK(f9.size() == 9);
    for (std::uint64_t a = 0; a < 3; ++a)
      for (std::uint64_t b = 0; b < 3; ++b) {
        const ExtFieldRing::value_type x{a, b};
        if (f9.is_zero(x)) continue;
        CHECK(f9.mul(x, f9.inverse(x)) == f9.one());
      }
    const ExtFieldRing f4(fp(2, {1, 1, 1}));
    std::int64_t count = 0;
    for (std::uint64_t c0 = 0; c0 < 4; ++c0)
      for (std::uint64_t c1 = 0; c1 < 4; ++c1) {
        auto elt = [&](std::uint64_t v) { return ExtFieldRing::value_type{v & 1, v >> 1}; };
        const FqPoly f(f4, {elt(c0), elt(c1), f4.one()});
        count += rabin_irreducible(f);
      }
    CHECK(count == 6);
  }

  TEST_CASE("equal-degree factorization") {
    for (auto [k, q] : std::vector<std::pair<std::int64_t, std::uint64_t>>{{7, 2}, {13, 3}, {5, 11}, {9, 2}, {11, 3}}) {
      const PrimeFieldRing F(q);
      const IntPoly phi = cyclotomic_polynomial(k);
      std::vector<std::uint64_t> c;
      for (const auto& x : phi.coeffs()) c.push_back(F.from_integer(x));
      const FpPoly f(F, c);
      const auto t = static_cast<std::size_t>(multiplicative_order(static_cast<std::int64_t>(q) % k, k));
      const auto factors = equal_degree_factors(f, t);
      CHECK(factors.size() * t == static_cast<std::size_t>(f.degree()));
      FpPoly prod = FpPoly::constant(F, 1);
      for (const auto& g : factors) {
        CHECK(g.degree() == static_cast<long>(t));
        CHECK(rabin_irreducible(g));
        prod = mul(prod, g);
      }
      CHECK(prod == f);
      CHECK(equal_degree_factors(f, t) == factors);
    }
  }
}

TEST_SUITE("certify") {
  TEST_CASE("residue fields") {
    const auto f43 = make_residue_field(4, 3);
    CHECK(f43.t == 2);
    CHECK(residue_field_valid(f43));
    const auto f25 = make_residue_field(2, 5);
    CHECK(f25.t == 1);
    CHECK(residue_field_valid(f25));
    CHECK_THROWS_AS(make_residue_field(4, 2), Error);
    CHECK_THROWS_AS(make_residue_field(3, 9), Error);
    for (std::int64_t k = 1; k <= 20; ++k)
      for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (static_cast<std::uint64_t>(k) % q == 0) continue;
        CHECK(residue_field_valid(make_residue_field(k, q)));
      }
  }

  TEST_CASE("reduction examples") {
    const CyclotomicRing r2(2);
    const FqPoly a = reduce_to_residue(cp(r2, {2, 1}), make_residue_field(2, 5));
    CHECK(a.degree() == 1);
    CHECK(a.coeff(0) == std::vector<std::uint64_t>{2});
    const FqPoly b = reduce_to_residue(cp(r2, {1, 0, 1}), make_residue_field(2, 3));
    CHECK(rabin_irreducible(b));
    const CyclotomicRing r4(4);
    const CycPoly g(r4, {r4.zeta(), r4.one()});
    const auto field = make_residue_field(4, 3);
    const FqPoly c = reduce_to_residue(g, field);
    CHECK(c.coeff(0) == std::vector<std::uint64_t>{0, 1});
    CHECK_THROWS_AS(reduce_to_residue(g, make_residue_field(2, 3)), Error);
  }

  TEST_CASE("certificate examples") {
    FamilyBuilder b;
    const auto c1 = certify_irreducible(b, misiurewicz_spec(2, 2, 1));
    CHECK(c1.status == CertificateStatus::Proven);
    const auto c2 = certify_irreducible(b, misiurewicz_spec(2, 2, 2));
    REQUIRE(c2.status == CertificateStatus::Proven);
    CHECK(c2.field->q == 3);
    const auto c3 = certify_irreducible(b, misiurewicz_spec(2, 3, 1));
    REQUIRE(c3.status == CertificateStatus::Proven);
    CHECK(c3.field->q <= 50);
    CHECK(recheck_certificate(c3, family_polynomial(b, misiurewicz_spec(2, 3, 1))));
    auto forged = c3;
    forged.field = make_residue_field(2, 7);
    CHECK_FALSE(recheck_certificate(forged, family_polynomial(b, misiurewicz_spec(2, 3, 1))));
    const auto db = certify_degree_bound(b, misiurewicz_spec(3, 3, 1));
    CHECK(db.status == CertificateStatus::Proven);
    CHECK(certify_degree_bound(b, misiurewicz_spec(2, 3, 2)).status == CertificateStatus::Inconclusive);
    CHECK(certify_degree_bound(b, misiurewicz_spec(6, 2, 1)).status == CertificateStatus::Inconclusive);
  }

  TEST_CASE("property: reducible polynomials never reduce to irreducibles") {
    Gen g(61);
    for (int iter = 0; iter < 60; ++iter) {
      const CyclotomicRing r(g.range(1, 6));
      const CycPoly f = g.cyc_poly(r, 3, 4, true), h = g.cyc_poly(r, 3, 4, true);
      if (f.degree() < 1 || h.degree() < 1) continue;
      const CycPoly prod = mul(f, h);
      for (std::uint64_t q : {3u, 5u, 7u, 11u, 13u, 17u}) {
        if (static_cast<std::uint64_t>(r.order()) % q == 0) continue;
        CHECK_FALSE(rabin_irreducible(reduce_to_residue(prod, make_residue_field(r.order(), q))));
      }
    }
  }

  TEST_CASE("small integer roots") {
    const CyclotomicRing r1(1);
    CHECK(small_integer_roots(cp(r1, {-6, -1, 1})) == std::vector<long>{-2, 3});
    CHECK(small_integer_roots(cp(r1, {1, 0, 1})).empty());
  }
}

TEST_SUITE("newton") {
  auto pt = [](std::int64_t x, long y) { return ValuationPoint{x, Rational(y)}; };

  TEST_CASE("hull examples") {
    const auto h = lower_hull({pt(1, 2), pt(2, 1), pt(3, 2), pt(4, 0)});
    CHECK(h.vertices == std::vector<ValuationPoint>{pt(1, 2), pt(2, 1), pt(4, 0)});
    CHECK(h.slopes == std::vector<Slope>{{Rational(-1), 1}, {Rational(-1, 2), 2}});
    const auto single = lower_hull({pt(3, 1)});
    CHECK(single.vertices.size() == 1);
    CHECK(single.slopes.empty());
    CHECK(lower_hull({pt(0, 0), pt(1, 1), pt(2, 2)}).vertices == std::vector<ValuationPoint>{pt(0, 0), pt(2, 2)});
    CHECK_THROWS_AS(lower_hull({}), Error);
    CHECK_THROWS_AS(lower_hull({pt(-1, 0)}), Error);
    CHECK_THROWS_AS(lower_hull({pt(1, 0), pt(1, 2)}), Error);
  }

  TEST_CASE("binomial valuation points") {
    CHECK(binomial_valuation_points(2, 1) == std::vector<ValuationPoint>{pt(1, 1), pt(2, 0)});
    CHECK(binomial_valuation_points(2, 2) == std::vector<ValuationPoint>{pt(1, 2), pt(2, 1), pt(3, 2), pt(4, 0)});
    CHECK(lower_hull(binomial_valuation_points(3, 2)).vertices == std::vector<ValuationPoint>{pt(1, 2), pt(3, 1), pt(9, 0)});
    CHECK_THROWS_AS(binomial_valuation_points(2, 30, 1 << 20), Error);
  }

  TEST_CASE("property: Legendre and binomial valuations against direct factorials") {
    for (std::int64_t p : {2, 3, 5, 7}) {
      Integer fact = 1;
      for (std::int64_t n = 1; n <= 200; ++n) {
        fact *= n;
        CHECK(legendre_valuation(n, p) == naive_valuation(fact, p));
      }
      const std::int64_t N = p * p * p > 400 ? p * p : p * p * p;
      const std::int64_t e = N == p * p ? 2 : 3;
      const auto points = binomial_valuation_points(p, e);
      for (const auto& q : points) {
        Integer c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(q.x));
        CHECK(q.y == naive_valuation(c, p));
      }
    }
  }

  TEST_CASE("property: random hulls are convex and lie below every point") {
    Gen g(71);
    for (int iter = 0; iter < 200; ++iter) {
      std::vector<ValuationPoint> pts;
      std::vector<std::int64_t> xs;
      for (std::int64_t x = 0; x <= 30; ++x)
        if (g.range(0, 2) == 0) xs.push_back(x);
      if (xs.empty()) continue;
      for (auto x : xs) {
        Rational y(g.range(-20, 20), static_cast<unsigned long>(g.range(1, 4)));
        y.canonicalize();
        pts.push_back(ValuationPoint{x, y});
      }
      const auto h = lower_hull(pts);
      CHECK(h.vertices.front().x == xs.front());
      CHECK(h.vertices.back().x == xs.back());
      for (std::size_t i = 1; i < h.slopes.size(); ++i) CHECK(h.slopes[i - 1].slope < h.slopes[i].slope);
      for (const auto& v : h.vertices) CHECK(std::find(pts.begin(), pts.end(), v) != pts.end());
      for (const auto& q : pts) {
        for (std::size_t i = 0; i + 1 < h.vertices.size(); ++i) {
          const auto& a = h.vertices[i];
          const auto& b = h.vertices[i + 1];
          if (q.x < a.x || q.x > b.x) continue;
          const Rational y = a.y + (b.y - a.y) * Rational(q.x - a.x, static_cast<unsigned long>(b.x - a.x));
          CHECK(q.y >= y);
        }
      }
    }
  }
}

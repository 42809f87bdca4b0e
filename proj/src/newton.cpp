#include "mlab/newton.hpp"

#include "mlab/error.hpp"
#include "mlab/number_theory.hpp"

#include <algorithm>

namespace mlab {

namespace {

// Sign of the cross product (b - a) x (c - a).
int turn(const ValuationPoint& a, const ValuationPoint& b, const ValuationPoint& c) {
  const Rational cross = Rational(b.x - a.x) * (c.y - a.y) - (b.y - a.y) * Rational(c.x - a.x);
  return sgn(cross);
}

}  // namespace

NewtonPolygon lower_hull(std::vector<ValuationPoint> points) {
  if (points.empty()) fail(ErrorKind::InvalidArgument, "lower_hull needs at least one point");
  for (auto& p : points) {
    if (p.x < 0) fail(ErrorKind::InvalidArgument, "valuation points need x >= 0");
    p.y.canonicalize();
  }
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].x == points[i - 1].x) fail(ErrorKind::DuplicateAbscissa, "repeated x = " + std::to_string(points[i].x));

  NewtonPolygon poly;
  auto& hull = poly.vertices;
  for (const auto& p : points) {
    while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const std::int64_t dx = hull[i].x - hull[i - 1].x;
    Rational s = (hull[i].y - hull[i - 1].y) / Rational(dx);
    s.canonicalize();
    poly.slopes.push_back({s, dx});
  }
  return poly;
}

std::int64_t legendre_valuation(std::int64_t n, std::int64_t p) {
  if (n < 0 || p < 2) fail(ErrorKind::InvalidArgument, "legendre_valuation needs n >= 0 and p >= 2");
  std::int64_t v = 0;
  for (std::int64_t pk = p; pk <= n; pk *= p) {
    v += n / pk;
    if (pk > n / p) break;
  }
  return v;
}

std::vector<ValuationPoint> binomial_valuation_points(std::int64_t p, std::int64_t e, std::int64_t cap) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) fail(ErrorKind::InvalidArgument, "p must be prime");
  if (e < 1) fail(ErrorKind::InvalidArgument, "e must be >= 1");
  const std::int64_t d = checked_pow(p, e, cap);
  const std::int64_t vd = legendre_valuation(d, p);
  std::vector<ValuationPoint> out;
  out.reserve(static_cast<std::size_t>(d));
  for (std::int64_t i = 1; i <= d; ++i)
    out.push_back({i, Rational(vd - legendre_valuation(i, p) - legendre_valuation(d - i, p))});
  return out;
}

}  // namespace mlab

#pragma once

#include "mlab/integer.hpp"

#include <cstdint>
#include <vector>

namespace mlab {

struct ValuationPoint {
  std::int64_t x = 0;
  Rational y;

  bool operator==(const ValuationPoint& o) const { return x == o.x && y == o.y; }
};

struct Slope {
  Rational slope;
  std::int64_t length = 0;

  bool operator==(const Slope& o) const { return slope == o.slope && length == o.length; }
};

struct NewtonPolygon {
  std::vector<ValuationPoint> vertices;  // strictly increasing x
  std::vector<Slope> slopes;             // strictly increasing
};

/// Lower convex hull by the monotone chain; collinear interior points dropped.
/// InvalidArgument on empty input or negative x, DuplicateAbscissa on repeated x.
NewtonPolygon lower_hull(std::vector<ValuationPoint> points);

inline constexpr std::int64_t kDefaultBinomialCap = 1 << 20;

/// v_p(n!) by Legendre's formula.
std::int64_t legendre_valuation(std::int64_t n, std::int64_t p);

/// (i, v_p(C(p^e, i))) for i = 1..p^e. LimitExceeded when p^e > cap.
std::vector<ValuationPoint> binomial_valuation_points(std::int64_t p, std::int64_t e,
                                                      std::int64_t cap = kDefaultBinomialCap);

}  // namespace mlab

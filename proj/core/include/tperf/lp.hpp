#pragma once

#include <vector>

#include "tperf/geometry.hpp"
#include "tperf/rational.hpp"

namespace tperf {

enum class Sense { Maximize, Minimize };

struct LpResult {
  Rational value;
  QVec point;
  // Optimal dual values, one per constraint row (simplex_max only).
  QVec dual;
};

// max c.x subject to A x <= b, x >= 0. Dense tableau simplex with Bland's
// rule, so the pivot sequence (and the returned basic solution) depends only
// on the input. Throws Infeasible or Unbounded.
LpResult simplex_max(const std::vector<QVec>& a, const QVec& b, const QVec& c);

// Optimizes over an HPolytope. Variables without an explicit nonnegativity
// row are split into positive and negative parts.
LpResult lp_optimize(const HPolytope& p, const QVec& objective, Sense sense);

// Whether x is a convex combination of the given points (exact LP).
bool in_convex_hull(const std::vector<QVec>& points, const QVec& x);

}  // namespace tperf

#pragma once

#include <utility>
#include <vector>

#include <aip/vec.hpp>

namespace aip::internal {

// Orientation predicates with a floating-point filter: evaluated in double
// first, re-evaluated in quad precision when the magnitude is below the
// roundoff bound. Sign is reliable for double inputs.
int orient2d_sign(const double* a, const double* b, const double* c);
double orient2d(const double* a, const double* b, const double* c);
// > 0 when d is on the positive (normal) side of the plane through a,b,c.
double orient3d(const double* a, const double* b, const double* c,
                const double* d);

struct HullFace {
  Vec normal;              // unit outward normal
  double offset = 0.0;     // <normal, x> = offset on the face plane
  std::vector<int> cycle;  // indices into the input point set, CCW outside
};

struct HullResult {
  std::vector<int> extreme;     // indices into the input point set
  std::vector<HullFace> faces;  // cycles reference input indices
  std::vector<int> cycle2d;     // n == 2: full CCW cycle (input indices)
};

// Convex hull with merged coplanar faces; true extreme points only.
// `points` rows are assumed deduplicated. Throws DegenerateInput when the
// cloud is not full-dimensional.
HullResult build_hull(const Mat& points, double scale);

// Deduplicate rows closer than tol; returns kept row indices.
std::vector<int> dedupe_points(const Mat& points, double tol);

}  // namespace aip::internal

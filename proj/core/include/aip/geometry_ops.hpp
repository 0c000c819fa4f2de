#pragma once

#include <aip/hpolytope.hpp>
#include <aip/vpolytope.hpp>

namespace aip {

/// Exact hull reduction of a point cloud (rows). Alias of
/// VPolytope::from_points kept for symmetry with the other operations.
VPolytope reduce(const Mat& points);

/// Exact intersection P cap {<x, u> <= a}. Throws EmptyClip when nothing
/// full-dimensional remains.
VPolytope clip(const VPolytope& body, const HalfSpace& h);

/// Polar with respect to an interior point x: (P - x)^polar + x.
VPolytope polar(const VPolytope& body, const Vec& x);

/// Vertex enumeration of a bounded H-polytope. interior_hint, when given,
/// must be an interior point and skips the Chebyshev-center search.
VPolytope enumerate_vertices(const HPolytope& hrep,
                             const Vec* interior_hint = nullptr);

/// (n-1)-volume of the slice {x in P : <x, u> = t}; 0 outside the support
/// range.
double section_measure(const VPolytope& body, const Vec& u, double t);

/// Largest section measure over t, computed exactly from the piecewise
/// structure (linear pieces for n = 2, quadratic in sqrt for n = 3).
double max_section_measure(const VPolytope& body, const Vec& u);

/// Hausdorff distance between two polytopes of equal dimension; exact.
double hausdorff(const VPolytope& a, const VPolytope& b);

/// Distance from a point to the body (0 inside).
double distance_to_body(const VPolytope& body, const Vec& x);

/// Minkowski gauge inf{t >= 0 : y - x0 in t (P - x0)} for interior x0.
double gauge(const VPolytope& body, const Vec& x0, const Vec& y);

}  // namespace aip

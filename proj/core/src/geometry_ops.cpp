#include <aip/geometry_ops.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <aip/errors.hpp>
#include <aip/lp.hpp>

#include "hull_internal.hpp"

namespace aip {

double unit_ball_volume(int n) {
  return std::pow(3.14159265358979323846, n / 2.0) /
         std::tgamma(n / 2.0 + 1.0);
}

VPolytope reduce(const Mat& points) { return VPolytope::from_points(points); }

VPolytope clip(const VPolytope& body, const HalfSpace& h) {
  if (h.normal.size() != body.dim())
    throw DimensionMismatch("clip: dimension mismatch");
  const int m = body.vertex_count();
  const Vec margins = Vec::Constant(m, h.offset) - body.vertices() * h.normal;
  const double tol = 1e-12 * body.scale();
  if (margins.minCoeff() >= -tol) return body;  // supporting or disjoint plane
  if (margins.maxCoeff() <= tol)
    throw EmptyClip("halfspace removes the whole body");

  std::vector<Vec> pts;
  pts.reserve(static_cast<size_t>(m) + body.edges().size());
  for (int i = 0; i < m; ++i)
    if (margins(i) >= 0) pts.push_back(body.vertex(i));
  for (const auto& [i, j] : body.edges()) {
    const double mi = margins(i), mj = margins(j);
    if ((mi > 0 && mj < 0) || (mi < 0 && mj > 0)) {
      const double s = mi / (mi - mj);
      pts.push_back(body.vertex(i) + s * (body.vertex(j) - body.vertex(i)));
    }
  }
  Mat cloud(static_cast<int>(pts.size()), body.dim());
  for (size_t i = 0; i < pts.size(); ++i)
    cloud.row(static_cast<int>(i)) = pts[i].transpose();
  try {
    return VPolytope::from_points(cloud);
  } catch (const DegenerateInput&) {
    throw EmptyClip("clip left no interior");
  }
}

VPolytope polar(const VPolytope& body, const Vec& x) {
  const double tol = 1e-12 * body.scale();
  if (body.facet_margin(x) <= tol)
    throw CenterOutside("polar center not in the interior");
  const auto& facets = body.facets();
  Mat duals(static_cast<int>(facets.size()), body.dim());
  for (size_t i = 0; i < facets.size(); ++i) {
    const double r = facets[i].offset - facets[i].normal.dot(x);
    duals.row(static_cast<int>(i)) = (facets[i].normal / r + x).transpose();
  }
  return VPolytope::from_points(duals);
}

namespace internal_ops {

VPolytope enumerate_impl(int dim, const std::vector<HalfSpace>& hs,
                         const Vec* hint) {
  if (dim != 2 && dim != 3)
    throw UnsupportedDimension("vertex enumeration needs n in {2,3}");
  if (hs.size() < static_cast<size_t>(dim + 1))
    throw Unbounded("fewer than n+1 halfspaces");

  Vec x0(dim);
  if (hint) {
    x0 = *hint;
  } else {
    std::vector<LinCon> cons;
    cons.reserve(hs.size());
    double bmax = 1.0;
    for (const auto& h : hs) {
      cons.push_back({h.normal, h.offset});
      bmax = std::max(bmax, std::fabs(h.offset));
    }
    auto [center, radius] = chebyshev_center(cons, dim, 1e7 * bmax);
    if (radius <= 1e-12 * bmax)
      throw Empty("halfspace intersection has empty interior");
    x0 = center;
  }
  double rmin = std::numeric_limits<double>::infinity();
  for (const auto& h : hs) rmin = std::min(rmin, h.offset - h.normal.dot(x0));
  if (rmin <= 0) throw Empty("interior point hint is not interior");

  Mat duals(static_cast<int>(hs.size()), dim);
  for (size_t i = 0; i < hs.size(); ++i)
    duals.row(static_cast<int>(i)) =
        (hs[i].normal / (hs[i].offset - hs[i].normal.dot(x0))).transpose();
  VPolytope dual_hull = [&] {
    try {
      return VPolytope::from_points(duals);
    } catch (const DegenerateInput&) {
      throw Unbounded("normals do not span R^n");
    }
  }();
  const double dtol = 1e-12 * dual_hull.scale();
  if (dual_hull.facet_margin(Vec::Zero(dim)) <= dtol)
    throw Unbounded("halfspace intersection is unbounded");

  const auto& dfacets = dual_hull.facets();
  Mat verts(static_cast<int>(dfacets.size()), dim);
  for (size_t i = 0; i < dfacets.size(); ++i)
    verts.row(static_cast<int>(i)) =
        (dfacets[i].normal / dfacets[i].offset + x0).transpose();
  return VPolytope::from_points(verts);
}

}  // namespace internal_ops

VPolytope enumerate_vertices(const HPolytope& hrep, const Vec* interior_hint) {
  return internal_ops::enumerate_impl(hrep.dim(), hrep.halfspaces(),
                                      interior_hint);
}

namespace {

// Crossing points of the boundary with the hyperplane <x, u> = t.
std::vector<Vec> plane_crossings(const VPolytope& body, const Vec& u,
                                 double t) {
  std::vector<Vec> pts;
  const Vec proj = body.vertices() * u;
  const double tol = 1e-13 * body.scale() * std::max(1.0, u.norm());
  for (int i = 0; i < body.vertex_count(); ++i)
    if (std::fabs(proj(i) - t) <= tol) pts.push_back(body.vertex(i));
  for (const auto& [i, j] : body.edges()) {
    const double a = proj(i) - t, b = proj(j) - t;
    if ((a > tol && b < -tol) || (a < -tol && b > tol)) {
      const double s = a / (a - b);
      pts.push_back(body.vertex(i) + s * (body.vertex(j) - body.vertex(i)));
    }
  }
  return pts;
}

}  // namespace

double section_measure(const VPolytope& body, const Vec& u, double t) {
  auto pts = plane_crossings(body, u, t);
  if (pts.size() < 2) return 0.0;
  if (body.dim() == 2) {
    double len = 0;
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        len = std::max(len, (pts[i] - pts[j]).norm());
    return len;
  }
  // n == 3: convex polygon area in the section plane.
  if (pts.size() < 3) return 0.0;
  Eigen::Vector3d n3(u(0), u(1), u(2));
  n3.normalize();
  Eigen::Vector3d ref = std::fabs(n3.x()) < 0.9 ? Eigen::Vector3d::UnitX()
                                                : Eigen::Vector3d::UnitY();
  Eigen::Vector3d e1 = n3.cross(ref).normalized();
  Eigen::Vector3d e2 = n3.cross(e1);
  Mat flat(static_cast<int>(pts.size()), 2);
  for (size_t i = 0; i < pts.size(); ++i) {
    Eigen::Vector3d w(pts[i](0), pts[i](1), pts[i](2));
    flat(static_cast<int>(i), 0) = e1.dot(w);
    flat(static_cast<int>(i), 1) = e2.dot(w);
  }
  // Monotone-chain hull tolerant to collinear input.
  std::vector<int> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (flat(i, 0) != flat(j, 0)) return flat(i, 0) < flat(j, 0);
    return flat(i, 1) < flat(j, 1);
  });
  auto cross = [&](int o, int a, int b) {
    return (flat(a, 0) - flat(o, 0)) * (flat(b, 1) - flat(o, 1)) -
           (flat(a, 1) - flat(o, 1)) * (flat(b, 0) - flat(o, 0));
  };
  std::vector<int> hull(2 * pts.size());
  int k = 0;
  for (int idx = 0; idx < static_cast<int>(order.size()); ++idx) {
    const int i = order[idx];
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], i) <= 0) --k;
    hull[k++] = i;
  }
  const int lower = k + 1;
  for (int idx = static_cast<int>(order.size()) - 2; idx >= 0; --idx) {
    const int i = order[idx];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], i) <= 0) --k;
    hull[k++] = i;
  }
  hull.resize(std::max(0, k - 1));
  if (hull.size() < 3) return 0.0;
  Accum area2 = 0;
  for (size_t i = 1; i + 1 < hull.size(); ++i) {
    area2 += static_cast<Accum>(cross(hull[0], hull[static_cast<int>(i)],
                                      hull[static_cast<int>(i) + 1]));
  }
  return static_cast<double>(area2 / 2);
}

double max_section_measure(const VPolytope& body, const Vec& u) {
  Vec proj = body.vertices() * u;
  std::vector<double> knots(proj.data(), proj.data() + proj.size());
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  double best = 0;
  for (double t : knots) best = std::max(best, section_measure(body, u, t));
  if (body.dim() == 3) {
    // Between knots the area is an exact quadratic in t; probe its vertex.
    for (size_t i = 0; i + 1 < knots.size(); ++i) {
      const double a = knots[i], b = knots[i + 1];
      const double f0 = section_measure(body, u, a);
      const double fm = section_measure(body, u, (a + b) / 2);
      const double f1 = section_measure(body, u, b);
      // Lagrange quadratic through (0, f0), (1/2, fm), (1, f1).
      const double c2 = 2 * f0 - 4 * fm + 2 * f1;
      const double c1 = -3 * f0 + 4 * fm - f1;
      if (std::fabs(c2) > 1e-300) {
        const double s = -c1 / (2 * c2);
        if (s > 0 && s < 1)
          best = std::max(best, section_measure(body, u, a + s * (b - a)));
      }
      best = std::max(best, fm);
    }
  }
  return best;
}

namespace {

double point_segment_distance(const Vec& x, const Vec& a, const Vec& b) {
  const Vec d = b - a;
  const double den = d.squaredNorm();
  if (den <= 0) return (x - a).norm();
  const double s = std::clamp((x - a).dot(d) / den, 0.0, 1.0);
  return (x - a - s * d).norm();
}

}  // namespace

double distance_to_body(const VPolytope& body, const Vec& x) {
  if (body.contains(x, 0.0)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  if (body.dim() == 2) {
    const auto& cyc = body.cycle();
    const int h = static_cast<int>(cyc.size());
    for (int i = 0; i < h; ++i)
      best = std::min(best, point_segment_distance(x, body.vertex(cyc[i]),
                                                   body.vertex(cyc[(i + 1) % h])));
    return best;
  }
  for (const auto& [i, j] : body.edges())
    best = std::min(best, point_segment_distance(x, body.vertex(i), body.vertex(j)));
  for (const auto& f : body.facets()) {
    const double d = f.normal.dot(x) - f.offset;
    if (d <= 0) continue;
    const Vec foot = x - d * f.normal;
    // In-polygon test via the cycle orientation.
    bool inside = true;
    const int len = static_cast<int>(f.cycle.size());
    for (int k = 0; k < len && inside; ++k) {
      const Vec a = body.vertex(f.cycle[k]);
      const Vec b = body.vertex(f.cycle[(k + 1) % len]);
      Eigen::Vector3d e(b(0) - a(0), b(1) - a(1), b(2) - a(2));
      Eigen::Vector3d nn(f.normal(0), f.normal(1), f.normal(2));
      Eigen::Vector3d inward = nn.cross(e);
      Eigen::Vector3d w(foot(0) - a(0), foot(1) - a(1), foot(2) - a(2));
      if (inward.dot(w) < 0) inside = false;
    }
    if (inside) best = std::min(best, d);
  }
  return best;
}

double hausdorff(const VPolytope& a, const VPolytope& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("hausdorff: dimension mismatch");
  double d = 0;
  for (int i = 0; i < a.vertex_count(); ++i)
    d = std::max(d, distance_to_body(b, a.vertex(i)));
  for (int i = 0; i < b.vertex_count(); ++i)
    d = std::max(d, distance_to_body(a, b.vertex(i)));
  return d;
}

double gauge(const VPolytope& body, const Vec& x0, const Vec& y) {
  const double tol = 1e-12 * body.scale();
  if (body.facet_margin(x0) <= tol)
    throw CenterOutside("gauge center not in the interior");
  double g = 0;
  for (const auto& f : body.facets()) {
    const double den = f.offset - f.normal.dot(x0);
    g = std::max(g, f.normal.dot(y - x0) / den);
  }
  return std::max(g, 0.0);
}

}  // namespace aip

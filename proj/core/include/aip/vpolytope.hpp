#pragma once

#include <memory>
#include <utility>
#include <vector>

#include <aip/affine_map.hpp>
#include <aip/errors.hpp>
#include <aip/vec.hpp>

namespace aip {

/// One facet of a polytope: {x : <normal, x> = offset} supporting the body,
/// with <normal, x> <= offset inside. `cycle` lists vertex indices in
/// counter-clockwise order seen from outside (two endpoints when n = 2).
struct Facet {
  Vec normal;
  double offset = 0.0;
  std::vector<int> cycle;
};

/// Convex body given by its extreme points, dimensions 2 and 3.
///
/// Construction reduces the input to extreme points, orders them
/// canonically (lexicographic) and builds the facet structure once; all
/// instances are immutable afterwards, so concurrent reads are safe.
/// Volume, centroid and second moments are accumulated in extended
/// precision at construction.
class VPolytope {
 public:
  /// Hull of a point cloud (rows of `points`). Points closer than
  /// 1e-12 * scale are merged first. Throws DegenerateInput if the affine
  /// rank is below the ambient dimension, UnsupportedDimension unless
  /// n in {2, 3}.
  static VPolytope from_points(const Mat& points);

  int dim() const { return dim_; }
  int vertex_count() const { return static_cast<int>(vertices_.rows()); }
  const Mat& vertices() const { return vertices_; }
  Vec vertex(int i) const { return vertices_.row(i); }

  const std::vector<Facet>& facets() const { return facets_; }
  /// n == 2 only: the full CCW vertex cycle.
  const std::vector<int>& cycle() const { return cycle_; }
  /// Facet indices incident to each vertex.
  const std::vector<std::vector<int>>& vertex_facets() const {
    return vertex_facets_;
  }
  /// Unique edges as index pairs (i < j).
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  double volume() const { return static_cast<double>(volume_hp_); }
  Accum volume_hp() const { return volume_hp_; }
  Vec centroid() const;
  VecA moment1_hp() const { return moment1_hp_; }
  /// Second moment matrix  ∫_K x x^T dx.
  Mat second_moment() const;

  double support(const Vec& u) const;
  /// Index of a vertex attaining the support value in direction u.
  int support_vertex(const Vec& u) const;

  /// Exact maximum pairwise vertex distance (O(V^2); falls back to the
  /// bounding-box diagonal above 4096 vertices).
  double diameter() const;
  /// Bounding-box diagonal; the scale used for relative tolerances.
  double scale() const { return scale_; }

  /// min over facets of (offset - <normal, x>); positive inside.
  double facet_margin(const Vec& x) const;
  bool contains(const Vec& x, double tol = 0.0) const;

  VPolytope transformed(const AffineMap& map) const;
  VPolytope translated(const Vec& t) const;

  bool same_vertices(const VPolytope& other, double tol) const;

 private:
  VPolytope() = default;
  void build_moments();

  int dim_ = 0;
  Mat vertices_;  // canonical order, one row per extreme point
  std::vector<Facet> facets_;
  std::vector<int> cycle_;
  std::vector<std::vector<int>> vertex_facets_;
  std::vector<std::pair<int, int>> edges_;
  Accum volume_hp_ = 0;
  VecA moment1_hp_;
  MatA moment2_hp_;
  double scale_ = 0;
};

/// Affine rank of a point cloud and, when the rank equals the ambient
/// dimension and exactly n+1 points are given, the volume of the simplex
/// they span (hull volume for larger full-rank clouds).
std::pair<int, double> affine_rank(const Mat& points);

}  // namespace aip

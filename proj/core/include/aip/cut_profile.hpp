#pragma once

#include <vector>

#include <aip/vpolytope.hpp>

namespace aip {

/// Directional cut geometry of a fixed body: exact volumes and first
/// moments of slivers {x in P : <x, u> >= t}, accumulated in extended
/// precision around an anchor on the cut plane. Built once per (body,
/// direction); solving for several cut levels then reuses the sorted
/// projections and facet incidence.
class CutProfile {
 public:
  CutProfile(const VPolytope& body, Vec u);

  double tmin() const { return proj_desc_.back(); }
  double tmax() const { return proj_desc_.front(); }

  /// Volume of the sliver above level t.
  Accum cut_volume(double t) const;

  /// Volume and integral of x over the sliver.
  void cut_volume_moment(double t, Accum* volume, VecA* moment) const;

  /// Level t with |cut_volume(t) - target| <= vol_tol_abs, by safeguarded
  /// bisection (regula-falsi accelerated) on the bracket [tmin, tmax].
  double solve_offset(Accum target, Accum vol_tol_abs, int max_iter = 200) const;

 private:
  struct Clipped {
    Accum measure = 0;      // length (n=2) or area (n=3) of the clipped facet
    VecA centroid;          // centroid relative to the anchor
  };
  bool clip_facet(int fi, double t, const VecA& anchor, Clipped* out) const;

  const VPolytope& body_;
  Vec u_;
  int dim_;
  std::vector<int> desc_;          // vertex indices by descending projection
  std::vector<double> proj_desc_;  // matching projection values
  Eigen::VectorXd proj_;           // per-vertex projection
};

}  // namespace aip

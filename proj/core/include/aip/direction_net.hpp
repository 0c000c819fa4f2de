#pragma once

#include <vector>

#include <aip/vec.hpp>

namespace aip {

/// Finite unit-vector net on S^{n-1} with a known covering radius (chord
/// metric). Always contains +-e_i. Uniform angles for n = 2, a Fibonacci
/// lattice for n = 3.
class DirectionNet {
 public:
  static DirectionNet uniform(int dim, int count);

  /// Net refined near `axis`: base net plus a patch of directions covering
  /// the spherical cap {u : angle(u, axis) <= cap_angle} at angular
  /// resolution `resolution`.
  DirectionNet refined(const Vec& axis, double cap_angle,
                       double resolution) const;

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(dirs_.size()); }
  const std::vector<Vec>& directions() const { return dirs_; }
  const Vec& direction(int i) const { return dirs_[i]; }

  /// Covering radius in the chord metric: every u on the sphere is within
  /// arccos(1 - mesh^2/2) of some net vector.
  double mesh() const { return mesh_; }

  /// Push-forward net {T^{-T} u / |T^{-T} u|} used when testing exact
  /// floating-body equivariance.
  DirectionNet transported(const Mat& matrix) const;

 private:
  DirectionNet() = default;
  int dim_ = 0;
  std::vector<Vec> dirs_;
  double mesh_ = 0;
};

}  // namespace aip

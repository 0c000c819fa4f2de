#pragma once

#include <Eigen/Dense>

namespace aip {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Extended-precision scalar used by volume/moment accumulators.
using Accum = long double;

using VecA = Eigen::Matrix<Accum, Eigen::Dynamic, 1>;
using MatA = Eigen::Matrix<Accum, Eigen::Dynamic, Eigen::Dynamic>;

inline Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

inline Vec vec3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

/// Volume of the unit ball B^n.
double unit_ball_volume(int n);

}  // namespace aip

#include <aip/direction_net.hpp>

#include <algorithm>
#include <cmath>

#include <aip/errors.hpp>

namespace aip {

namespace {

constexpr double kPi = 3.14159265358979323846;

double chord(double angle) { return 2.0 * std::sin(angle / 2.0); }

// Conservative covering-angle estimate for a direction list: max over a
// quasi-uniform probe set of the angle to the nearest net vector.
double covering_angle(const std::vector<Vec>& dirs, int dim) {
  const int probes = dim == 2 ? 4096 : 20000;
  double worst = 0;
  for (int i = 0; i < probes; ++i) {
    Vec u(dim);
    if (dim == 2) {
      const double a = 2.0 * kPi * (i + 0.5) / probes;
      u << std::cos(a), std::sin(a);
    } else {
      // Fibonacci probe offset half a step from the lattice used below.
      const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
      const double z = 1.0 - 2.0 * (i + 0.75) / probes;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double a = 2.0 * kPi * (i + 0.25) / golden;
      u << r * std::cos(a), r * std::sin(a), z;
    }
    double best = -1;
    for (const auto& v : dirs) best = std::max(best, u.dot(v));
    worst = std::max(worst, std::acos(std::clamp(best, -1.0, 1.0)));
  }
  return worst * 1.25;
}

}  // namespace

DirectionNet DirectionNet::uniform(int dim, int count) {
  if (dim != 2 && dim != 3)
    throw UnsupportedDimension("direction nets need n in {2,3}");
  if (count < 2 * dim) throw InadmissibleParameters("net too small");
  DirectionNet net;
  net.dim_ = dim;
  if (dim == 2) {
    // Round up to a multiple of 4 so +-e_i are exact lattice points.
    const int m = ((count + 3) / 4) * 4;
    net.dirs_.reserve(m);
    for (int i = 0; i < m; ++i) {
      const double a = 2.0 * kPi * i / m;
      net.dirs_.push_back(vec2(std::cos(a), std::sin(a)));
    }
    net.dirs_[0] = vec2(1, 0);
    net.dirs_[m / 4] = vec2(0, 1);
    net.dirs_[m / 2] = vec2(-1, 0);
    net.dirs_[3 * m / 4] = vec2(0, -1);
    net.mesh_ = chord(kPi / m) * 1.0000001;
  } else {
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    net.dirs_.reserve(count + 6);
    for (int i = 0; i < count; ++i) {
      const double z = 1.0 - 2.0 * (i + 0.5) / count;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double a = 2.0 * kPi * i / golden;
      net.dirs_.push_back(vec3(r * std::cos(a), r * std::sin(a), z));
    }
    for (int k = 0; k < 3; ++k)
      for (int s : {-1, 1}) {
        Vec e = Vec::Zero(3);
        e(k) = s;
        // replace the nearest lattice point to avoid clustering
        int nearest = 0;
        double best = -2;
        for (int i = 0; i < static_cast<int>(net.dirs_.size()); ++i) {
          const double d = net.dirs_[i].dot(e);
          if (d > best) {
            best = d;
            nearest = i;
          }
        }
        net.dirs_[nearest] = e;
      }
    net.mesh_ = chord(covering_angle(net.dirs_, 3));
  }
  return net;
}

DirectionNet DirectionNet::refined(const Vec& axis, double cap_angle,
                                   double resolution) const {
  DirectionNet net = *this;
  Vec ax = axis.normalized();
  if (dim_ == 2) {
    const double base = std::atan2(ax(1), ax(0));
    const int steps = std::max(4, static_cast<int>(std::ceil(cap_angle / resolution)));
    for (int i = -steps; i <= steps; ++i) {
      const double a = base + cap_angle * i / steps;
      net.dirs_.push_back(vec2(std::cos(a), std::sin(a)));
    }
  } else {
    // Fibonacci lattice restricted to the cap around the axis.
    Eigen::Vector3d a3(ax(0), ax(1), ax(2));
    Eigen::Vector3d ref =
        std::fabs(a3.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
    Eigen::Vector3d e1 = a3.cross(ref).normalized();
    Eigen::Vector3d e2 = a3.cross(e1);
    const double cap_solid = 2.0 * kPi * (1.0 - std::cos(cap_angle));
    const int count =
        std::max(16, static_cast<int>(std::ceil(cap_solid / (resolution * resolution))));
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    const double zmin = std::cos(cap_angle);
    for (int i = 0; i < count; ++i) {
      const double z = 1.0 - (1.0 - zmin) * (i + 0.5) / count;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double ang = 2.0 * kPi * i / golden;
      Eigen::Vector3d u =
          z * a3 + r * (std::cos(ang) * e1 + std::sin(ang) * e2);
      net.dirs_.push_back(vec3(u.x(), u.y(), u.z()));
    }
  }
  return net;
}

DirectionNet DirectionNet::transported(const Mat& matrix) const {
  DirectionNet net = *this;
  const Mat mt_inv = matrix.transpose().inverse();
  for (auto& u : net.dirs_) {
    Vec w = mt_inv * u;
    u = w / w.norm();
  }
  net.mesh_ = 0;  // covering radius not tracked through transport
  return net;
}

}  // namespace aip

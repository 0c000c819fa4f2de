// Shared fixture bodies for the test suites.
#pragma once

#include <cmath>
#include <random>

#include <aip/affine_map.hpp>
#include <aip/vpolytope.hpp>

namespace test_bodies {

using aip::AffineMap;
using aip::Mat;
using aip::Vec;
using aip::VPolytope;

inline VPolytope unit_square() {
  Mat pts(4, 2);
  pts << 0, 0, 1, 0, 0, 1, 1, 1;
  return VPolytope::from_points(pts);
}

inline VPolytope centered_square() {
  Mat pts(4, 2);
  pts << -1, -1, 1, -1, -1, 1, 1, 1;
  return VPolytope::from_points(pts);
}

inline VPolytope unit_cube() {
  Mat pts(8, 3);
  int r = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) pts.row(r++) << i, j, k;
  return VPolytope::from_points(pts);
}

/// The triangle conv((-1,-sqrt3), (-1,sqrt3), (2,0)); equilateral with the
/// unit disk as its inscribed disk.
inline VPolytope equilateral_triangle() {
  Mat pts(3, 2);
  pts << -1, -std::sqrt(3.0), -1, std::sqrt(3.0), 2, 0;
  return VPolytope::from_points(pts);
}

inline VPolytope disk(int sides, double radius = 1.0) {
  Mat pts(sides, 2);
  for (int i = 0; i < sides; ++i) {
    const double a = 2 * M_PI * i / sides;
    pts.row(i) << radius * std::cos(a), radius * std::sin(a);
  }
  return VPolytope::from_points(pts);
}

inline VPolytope ball3(int count, double radius = 1.0) {
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  Mat pts(count, 3);
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double a = 2 * M_PI * i / golden;
    pts.row(i) << radius * r * std::cos(a), radius * r * std::sin(a), radius * z;
  }
  return VPolytope::from_points(pts);
}

/// Hull of k uniform points in the unit ball, k in [n+2, 40].
inline VPolytope random_hull(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kd(n + 2, 40);
  std::normal_distribution<double> gauss(0, 1);
  std::uniform_real_distribution<double> unif(0, 1);
  for (;;) {
    const int k = kd(rng);
    Mat pts(k, n);
    for (int i = 0; i < k; ++i) {
      Vec u(n);
      for (int j = 0; j < n; ++j) u(j) = gauss(rng);
      u.normalize();
      pts.row(i) = (std::pow(unif(rng), 1.0 / n) * u).transpose();
    }
    try {
      return VPolytope::from_points(pts);
    } catch (const aip::DegenerateInput&) {
      continue;
    }
  }
}

/// Random nonsingular affine map with condition number <= cond_cap.
inline AffineMap random_affine(int n, std::mt19937_64& rng, double cond_cap) {
  std::normal_distribution<double> gauss(0, 1);
  for (;;) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = gauss(rng);
    Vec t(n);
    for (int i = 0; i < n; ++i) t(i) = gauss(rng);
    try {
      AffineMap map(m, t);
      if (map.condition() <= cond_cap) return map;
    } catch (const aip::SingularMap&) {
    }
  }
}

/// Centrally symmetric random hull: conv({±x_i}) + center.
inline VPolytope random_symmetric_hull(int n, std::mt19937_64& rng,
                                       Vec* center_out = nullptr) {
  std::uniform_int_distribution<int> kd(n + 2, 20);
  std::normal_distribution<double> gauss(0, 1);
  for (;;) {
    const int k = kd(rng);
    Vec c(n);
    for (int j = 0; j < n; ++j) c(j) = gauss(rng);
    Mat pts(2 * k, n);
    for (int i = 0; i < k; ++i) {
      Vec x(n);
      for (int j = 0; j < n; ++j) x(j) = gauss(rng);
      pts.row(2 * i) = (c + x).transpose();
      pts.row(2 * i + 1) = (c - x).transpose();
    }
    try {
      auto body = VPolytope::from_points(pts);
      if (center_out) *center_out = c;
      return body;
    } catch (const aip::DegenerateInput&) {
      continue;
    }
  }
}

}  // namespace test_bodies

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <aip/geometry_ops.hpp>
#include <aip/hpolytope.hpp>
#include <aip/lp.hpp>
#include <aip/vpolytope.hpp>

#include "test_bodies.hpp"

using namespace aip;

TEST_CASE("reduce drops interior and mid-edge points") {
  Mat pts(5, 2);
  pts << 0, 0, 1, 0, 0, 1, 1, 1, 0.5, 0.5;
  auto sq = VPolytope::from_points(pts);
  CHECK(sq.vertex_count() == 4);
  CHECK(sq.volume() == doctest::Approx(1.0).epsilon(1e-12));

  Mat tri(3, 2);
  tri << -1, -std::sqrt(3.0), -1, std::sqrt(3.0), 2, 0;
  auto t = VPolytope::from_points(tri);
  CHECK(t.vertex_count() == 3);
}

TEST_CASE("reduce keeps exactly the boundary net of a disk cloud") {
  // 32 points on the circle plus 100 random interior points; the extreme
  // set must be exactly the 32 net points (brute-force oracle: a point is
  // extreme iff outside the hull of the others, checked by support gap).
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Mat pts(132, 2);
  for (int i = 0; i < 32; ++i) {
    const double a = 2 * M_PI * i / 32;
    pts.row(i) << std::cos(a), std::sin(a);
  }
  int k = 32;
  while (k < 132) {
    const double x = unif(rng), y = unif(rng);
    if (x * x + y * y < 0.9) {
      pts.row(k) << x, y;
      ++k;
    }
  }
  auto body = VPolytope::from_points(pts);
  REQUIRE(body.vertex_count() == 32);
  for (int i = 0; i < 32; ++i) {
    bool found = false;
    for (int j = 0; j < 32; ++j)
      if ((body.vertex(j).transpose() - pts.row(i)).norm() < 1e-14) found = true;
    CHECK(found);
  }
}

TEST_CASE("volume matches closed forms") {
  CHECK(test_bodies::unit_square().volume() == doctest::Approx(1.0).epsilon(1e-12));

  Mat s(4, 3);
  s << 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1;
  CHECK(VPolytope::from_points(s).volume() ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  auto tri = test_bodies::equilateral_triangle();
  // shoelace oracle
  const double shoelace =
      0.5 * std::fabs((-1) * (std::sqrt(3.0) - 0) + (-1) * (0 - (-std::sqrt(3.0))) +
                      2 * (-std::sqrt(3.0) - std::sqrt(3.0)));
  CHECK(tri.volume() == doctest::Approx(shoelace).epsilon(1e-12));
  CHECK(tri.volume() == doctest::Approx(3.0 * std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("centroid matches closed forms and decompositions") {
  auto sq = test_bodies::unit_square();
  CHECK((sq.centroid() - vec2(0.5, 0.5)).norm() < 1e-12);

  auto tri = test_bodies::equilateral_triangle();
  CHECK(tri.centroid().norm() < 1e-12);

  // Pentagon = unit square + triangle((1,0),(1,1),(2,0.5)); area-weighted
  // centroid oracle.
  Mat pts(5, 2);
  pts << 0, 0, 1, 0, 0, 1, 1, 1, 2, 0.5;
  auto pent = VPolytope::from_points(pts);
  const double at = 0.5;  // triangle area
  Vec oracle = (1.0 * vec2(0.5, 0.5) + at * vec2((1 + 1 + 2) / 3.0, 0.5)) / (1.0 + at);
  CHECK(pent.volume() == doctest::Approx(1.5).epsilon(1e-12));
  CHECK((pent.centroid() - oracle).norm() < 1e-12);
}

TEST_CASE("clip volumes and supporting-plane edge case") {
  auto sq = test_bodies::unit_square();
  auto rect = clip(sq, HalfSpace(vec2(1, 0), 0.75));
  CHECK(rect.volume() == doctest::Approx(0.75).epsilon(1e-12));

  auto tri = test_bodies::equilateral_triangle();
  auto same = clip(tri, HalfSpace(vec2(1, 0), 2.0));  // through vertex (2,0)
  CHECK(same.vertex_count() == 3);
  CHECK(same.volume() == doctest::Approx(tri.volume()).epsilon(1e-12));

  auto cube = test_bodies::unit_cube();
  const double r3 = 1.0 / std::sqrt(3.0);
  auto cut = clip(cube, HalfSpace(vec3(r3, r3, r3), 2 * r3));
  // corner-simplex oracle: cut off simplex of volume 1/6 at (1,1,1)
  CHECK(cut.volume() == doctest::Approx(5.0 / 6.0).epsilon(1e-10));

  CHECK_THROWS_AS(clip(sq, HalfSpace(vec2(1, 0), -0.5)), EmptyClip);

  // clip + opposite clip partitions the volume
  auto other = clip(sq, HalfSpace(vec2(-1, 0), -0.75));
  CHECK(rect.volume() + other.volume() ==
        doctest::Approx(sq.volume()).epsilon(1e-9));
}

TEST_CASE("polar duality") {
  auto sq = test_bodies::centered_square();  // [-1,1]^2
  auto cross = polar(sq, vec2(0, 0));
  CHECK(cross.vertex_count() == 4);
  CHECK(cross.volume() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(cross.support(vec2(1, 0)) == doctest::Approx(1.0));

  auto back = polar(cross, vec2(0, 0));
  CHECK(hausdorff(back, sq) < 1e-12);

  // Equilateral triangle about 0: polar vertices are facet normals (all
  // facets at distance 1).
  auto tri = test_bodies::equilateral_triangle();
  auto ptri = polar(tri, vec2(0, 0));
  CHECK(ptri.vertex_count() == 3);
  for (const auto& f : tri.facets()) {
    CHECK(f.offset == doctest::Approx(1.0).epsilon(1e-12));
    bool found = false;
    for (int i = 0; i < 3; ++i)
      if ((ptri.vertex(i) - f.normal).norm() < 1e-12) found = true;
    CHECK(found);
  }

  CHECK_THROWS_AS(polar(sq, vec2(2, 0)), CenterOutside);
}

TEST_CASE("vertex enumeration of H-polytopes") {
  std::vector<HalfSpace> hs;
  hs.emplace_back(vec2(1, 0), 1);
  hs.emplace_back(vec2(-1, 0), 1);
  hs.emplace_back(vec2(0, 1), 1);
  hs.emplace_back(vec2(0, -1), 1);
  auto sq = enumerate_vertices(HPolytope(2, hs));
  CHECK(sq.vertex_count() == 4);
  CHECK(sq.volume() == doctest::Approx(4.0).epsilon(1e-12));

  // redundant halfspace changes nothing
  hs.emplace_back(vec2(1, 0), 2);
  auto sq2 = enumerate_vertices(HPolytope(2, hs));
  CHECK(sq2.same_vertices(sq, 1e-12));

  // Triangle from its 3 facet halfspaces; pairwise line-intersection oracle.
  auto tri = test_bodies::equilateral_triangle();
  std::vector<HalfSpace> ths;
  for (const auto& f : tri.facets()) ths.emplace_back(f.normal, f.offset);
  auto tri2 = enumerate_vertices(HPolytope(2, ths));
  CHECK(tri2.same_vertices(tri, 1e-10));

  // Unbounded and empty inputs are rejected.
  std::vector<HalfSpace> open;
  open.emplace_back(vec2(1, 0), 1);
  open.emplace_back(vec2(0, 1), 1);
  open.emplace_back(vec2(-1, 0), 1);
  CHECK_THROWS_AS(HPolytope(2, open), Unbounded);
  std::vector<HalfSpace> none;
  none.emplace_back(vec2(1, 0), -1);
  none.emplace_back(vec2(-1, 0), -1);
  none.emplace_back(vec2(0, 1), 1);
  none.emplace_back(vec2(0, -1), 1);
  CHECK_THROWS_AS(HPolytope(2, none), Empty);
}

TEST_CASE("support function") {
  auto sq = test_bodies::centered_square();
  CHECK(sq.support(vec2(1, 0)) == doctest::Approx(1.0));
  auto tri = test_bodies::equilateral_triangle();
  CHECK(tri.support(vec2(-1, 0)) == doctest::Approx(1.0));

  // rotation equivariance h_{TP}(u) = h_P(T^{-1} u)
  const double a = 0.7;
  Mat rot(2, 2);
  rot << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  auto rtri = tri.transformed(AffineMap(rot, Vec::Zero(2)));
  Vec u = vec2(0.3, -0.9).normalized();
  CHECK(rtri.support(u) == doctest::Approx(tri.support(rot.transpose() * u)).epsilon(1e-12));
}

TEST_CASE("hausdorff distance") {
  auto sq = test_bodies::unit_square();
  CHECK(hausdorff(sq, sq) == 0.0);
  auto moved = sq.translated(vec2(3, 0));
  CHECK(hausdorff(sq, moved) == doctest::Approx(3.0).epsilon(1e-12));

  auto disk = test_bodies::disk(64);
  auto disk2 = disk.transformed(AffineMap::scaling(2, 2.0));
  CHECK(hausdorff(disk, disk2) == doctest::Approx(1.0).epsilon(2e-3));
}

TEST_CASE("gauge") {
  auto disk = test_bodies::disk(1024);
  CHECK(gauge(disk, vec2(0, 0), vec2(0.5, 0)) == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(gauge(disk, vec2(0, 0), disk.vertex(0)) == doctest::Approx(1.0).epsilon(1e-12));

  auto sq = test_bodies::centered_square();
  CHECK(gauge(sq, vec2(0, 0), vec2(2, 2)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(gauge(sq, vec2(0, 0), vec2(0, 0)) == 0.0);
  CHECK_THROWS_AS(gauge(sq, vec2(1.5, 0), vec2(0, 0)), CenterOutside);

  // gauge <= 1 iff inside
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unif(-2, 2);
  for (int i = 0; i < 200; ++i) {
    Vec y = vec2(unif(rng), unif(rng));
    const bool in = sq.contains(y, 1e-12);
    const double g = gauge(sq, vec2(0, 0), y);
    CHECK(in == (g <= 1 + 1e-10));
  }
}

TEST_CASE("section measure") {
  auto sq = test_bodies::unit_square();
  CHECK(section_measure(sq, vec2(1, 0), 0.5) == doctest::Approx(1.0));
  auto cube = test_bodies::unit_cube();
  CHECK(section_measure(cube, vec3(1, 0, 0), 0.5) == doctest::Approx(1.0));
  auto tri = test_bodies::equilateral_triangle();
  // linear-interpolation chord oracle at x = 0
  CHECK(section_measure(tri, vec2(1, 0), 0.0) ==
        doctest::Approx(4.0 * std::sqrt(3.0) / 3.0).epsilon(1e-12));
  CHECK(section_measure(tri, vec2(1, 0), 5.0) == 0.0);
}

TEST_CASE("affine images") {
  auto sq = test_bodies::unit_square();
  auto same = sq.transformed(AffineMap::identity(2));
  CHECK(same.same_vertices(sq, 0));

  Vec t = vec2(0.3, -0.7);
  auto shifted = sq.transformed(AffineMap::translation(t));
  CHECK((shifted.centroid() - sq.centroid() - t).norm() < 1e-12);

  auto doubled = sq.transformed(AffineMap::scaling(2, 2.0));
  CHECK(doubled.volume() == doctest::Approx(4.0 * sq.volume()).epsilon(1e-12));

  Mat sing = Mat::Zero(2, 2);
  CHECK_THROWS_AS(AffineMap(sing, Vec::Zero(2)), SingularMap);
}

TEST_CASE("affine rank and simplex volume") {
  Mat pts(3, 2);
  pts << 0, 0, 1, 0, 0, 1;
  auto [r, v] = affine_rank(pts);
  CHECK(r == 2);
  CHECK(v == doctest::Approx(0.5).epsilon(1e-12));

  Mat line(3, 2);
  line << 0, 0, 1, 1, 2, 2;
  auto [r2, v2] = affine_rank(line);
  CHECK(r2 == 1);
  CHECK(v2 == 0.0);
}

TEST_CASE("degenerate input is rejected") {
  Mat line(4, 2);
  line << 0, 0, 1, 0, 2, 0, 3, 0;
  CHECK_THROWS_AS(VPolytope::from_points(line), DegenerateInput);

  Mat plane(5, 3);
  plane << 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 0, 0.3, 0.4, 0;
  CHECK_THROWS_AS(VPolytope::from_points(plane), DegenerateInput);
}

TEST_CASE("property: primitive equivariance under random affine maps") {
  std::mt19937_64 rng(42);
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto body = test_bodies::random_hull(n, rng);
      auto map = test_bodies::random_affine(n, rng, 10.0);
      auto image = body.transformed(map);
      CHECK(image.volume() ==
            doctest::Approx(std::fabs(map.det()) * body.volume()).epsilon(1e-8));
      const double diam = image.diameter();
      CHECK((image.centroid() - map.apply(body.centroid())).norm() <=
            1e-8 * diam);
    }
  }
}

TEST_CASE("property: bipolarity at the centroid") {
  std::mt19937_64 rng(11);
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto body = test_bodies::random_hull(n, rng);
      const Vec g = body.centroid();
      auto back = polar(polar(body, g), g);
      CHECK(hausdorff(back, body) < 1e-7);
    }
  }
}

TEST_CASE("property: Brunn-Minkowski section concavity") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unif(-1, 1);
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto body = test_bodies::random_hull(n, rng);
      Vec u(n);
      for (int k = 0; k < n; ++k) u(k) = unif(rng);
      u.normalize();
      const double lo = -body.support(-u), hi = body.support(u);
      for (int s = 1; s < 8; ++s) {
        const double t0 = lo + (hi - lo) * s / 16.0;
        const double t1 = lo + (hi - lo) * (s + 6) / 16.0;
        const double tm = (t0 + t1) / 2;
        const double p = 1.0 / (n - 1);
        const double f0 = std::pow(section_measure(body, u, t0), p);
        const double f1 = std::pow(section_measure(body, u, t1), p);
        const double fm = std::pow(section_measure(body, u, tm), p);
        CHECK(fm >= (f0 + f1) / 2 - 1e-8);
      }
    }
  }
}

TEST_CASE("property: centered inradius lower bound") {
  // K inside D*ball with |K| >= d forces an inscribed ball of radius
  // d / ((n+1) D^{n-1} |B^{n-1}|) around the centroid.
  std::mt19937_64 rng(31);
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto body = test_bodies::random_hull(n, rng);
      double D = 0;
      for (int i = 0; i < body.vertex_count(); ++i)
        D = std::max(D, body.vertex(i).norm());
      const double d = body.volume();
      const double bound =
          d / ((n + 1) * std::pow(D, n - 1) * unit_ball_volume(n - 1));
      const double inr = body.facet_margin(body.centroid());
      CHECK(inr >= bound - 1e-12);
    }
  }
}

TEST_CASE("seidel lp basics") {
  // maximize x + y over the unit square
  std::vector<LinCon> cons;
  cons.push_back({vec2(1, 0), 1});
  cons.push_back({vec2(0, 1), 1});
  cons.push_back({vec2(-1, 0), 0});
  cons.push_back({vec2(0, -1), 0});
  auto sol = seidel_lp(vec2(1, 1), cons, 1e6);
  REQUIRE(sol.has_value());
  CHECK((*sol - vec2(1, 1)).norm() < 1e-9);

  auto [c, r] = chebyshev_center(cons, 2, 1e6);
  CHECK(r == doctest::Approx(0.5).epsilon(1e-9));
  CHECK((c - vec2(0.5, 0.5)).norm() < 1e-8);
}

#include "hull_internal.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>

#include <aip/errors.hpp>

namespace aip::internal {

namespace {

using Quad = __float128;

inline Quad q(double x) { return static_cast<Quad>(x); }

}  // namespace

double orient2d(const double* a, const double* b, const double* c) {
  const double acx = a[0] - c[0], acy = a[1] - c[1];
  const double bcx = b[0] - c[0], bcy = b[1] - c[1];
  const double det = acx * bcy - acy * bcx;
  const double mag = std::fabs(acx * bcy) + std::fabs(acy * bcx);
  // 2^-50 absorbs the subtraction roundoff of the entries.
  if (std::fabs(det) > mag * 8.9e-16) return det;
  const Quad qdet = (q(a[0]) - q(c[0])) * (q(b[1]) - q(c[1])) -
                    (q(a[1]) - q(c[1])) * (q(b[0]) - q(c[0]));
  if (qdet > 0) return std::max(det, 1e-300);
  if (qdet < 0) return std::min(det, -1e-300);
  return 0.0;
}

int orient2d_sign(const double* a, const double* b, const double* c) {
  const double v = orient2d(a, b, c);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

double orient3d(const double* a, const double* b, const double* c,
                const double* d) {
  // det(b-a, c-a, d-a) = <(b-a)x(c-a), d-a>; positive when d lies on the
  // normal side of the CCW triangle (a,b,c).
  const double ux = b[0] - a[0], uy = b[1] - a[1], uz = b[2] - a[2];
  const double vx = c[0] - a[0], vy = c[1] - a[1], vz = c[2] - a[2];
  const double wx = d[0] - a[0], wy = d[1] - a[1], wz = d[2] - a[2];
  const double t1 = (uy * vz - uz * vy) * wx;
  const double t2 = (uz * vx - ux * vz) * wy;
  const double t3 = (ux * vy - uy * vx) * wz;
  const double det = t1 + t2 + t3;
  const double mag = std::fabs(t1) + std::fabs(t2) + std::fabs(t3);
  if (std::fabs(det) > mag * 4.0e-15) return det;
  const Quad qux = q(b[0]) - q(a[0]), quy = q(b[1]) - q(a[1]),
             quz = q(b[2]) - q(a[2]);
  const Quad qvx = q(c[0]) - q(a[0]), qvy = q(c[1]) - q(a[1]),
             qvz = q(c[2]) - q(a[2]);
  const Quad qwx = q(d[0]) - q(a[0]), qwy = q(d[1]) - q(a[1]),
             qwz = q(d[2]) - q(a[2]);
  const Quad qdet = (quy * qvz - quz * qvy) * qwx +
                    (quz * qvx - qux * qvz) * qwy +
                    (qux * qvy - quy * qvx) * qwz;
  if (qdet > 0) return std::max(det, 1e-300);
  if (qdet < 0) return std::min(det, -1e-300);
  return 0.0;
}

std::vector<int> dedupe_points(const Mat& points, double tol) {
  const int m = static_cast<int>(points.rows());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  const int d = static_cast<int>(points.cols());
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    for (int k = 0; k < d; ++k) {
      if (points(i, k) != points(j, k)) return points(i, k) < points(j, k);
    }
    return i < j;
  });
  std::vector<int> kept;
  kept.reserve(m);
  for (int idx = 0; idx < m; ++idx) {
    const int i = order[idx];
    bool dup = false;
    // Scan back while the leading coordinate is within tol.
    for (int jdx = static_cast<int>(kept.size()) - 1; jdx >= 0; --jdx) {
      const int j = kept[jdx];
      if (points(i, 0) - points(j, 0) > tol) break;
      if ((points.row(i) - points.row(j)).norm() <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

namespace {

// ---------------------------------------------------------------------------
// 2D: monotone chain + near-collinear pruning.
// ---------------------------------------------------------------------------

std::vector<int> hull2d_cycle(const Mat& pts, double scale) {
  const int m = static_cast<int>(pts.rows());
  if (m < 3) throw DegenerateInput("point cloud has affine rank < 2");
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (pts(i, 0) != pts(j, 0)) return pts(i, 0) < pts(j, 0);
    return pts(i, 1) < pts(j, 1);
  });

  auto cross = [&](int o, int a, int b) {
    double po[2] = {pts(o, 0), pts(o, 1)};
    double pa[2] = {pts(a, 0), pts(a, 1)};
    double pb[2] = {pts(b, 0), pts(b, 1)};
    return orient2d(pa, pb, po);  // >0 when o->a->b turns left
  };

  std::vector<int> hull(2 * m);
  int k = 0;
  for (int idx = 0; idx < m; ++idx) {
    const int i = order[idx];
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], i) <= 0) --k;
    hull[k++] = i;
  }
  const int lower = k + 1;
  for (int idx = m - 2; idx >= 0; --idx) {
    const int i = order[idx];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], i) <= 0) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);  // last point equals the first
  if (static_cast<int>(hull.size()) < 3)
    throw DegenerateInput("point cloud has affine rank < 2");

  // Drop vertices within merge distance of the neighboring chord; such
  // points are extreme only below the degeneracy tolerance.
  const double dist_tol = 1e-12 * scale;
  bool changed = true;
  while (changed && hull.size() > 3) {
    changed = false;
    std::vector<int> next;
    next.reserve(hull.size());
    const int h = static_cast<int>(hull.size());
    for (int j = 0; j < h; ++j) {
      const int ia = hull[(j + h - 1) % h], iv = hull[j], ib = hull[(j + 1) % h];
      double pa[2] = {pts(ia, 0), pts(ia, 1)};
      double pv[2] = {pts(iv, 0), pts(iv, 1)};
      double pb[2] = {pts(ib, 0), pts(ib, 1)};
      // Twice the area of the corner triangle; positive at a CCW corner.
      const double area2 = orient2d(pa, pv, pb);
      const double len = std::hypot(pb[0] - pa[0], pb[1] - pa[1]);
      if (area2 <= dist_tol * len) {
        changed = true;
        continue;
      }
      next.push_back(iv);
    }
    hull = std::move(next);
    if (static_cast<int>(hull.size()) < 3)
      throw DegenerateInput("point cloud has affine rank < 2");
  }
  return hull;  // CCW
}

HullResult build_hull_2d(const Mat& pts, double scale) {
  HullResult out;
  out.cycle2d = hull2d_cycle(pts, scale);
  out.extreme = out.cycle2d;
  const int h = static_cast<int>(out.cycle2d.size());
  out.faces.reserve(h);
  for (int j = 0; j < h; ++j) {
    const int a = out.cycle2d[j], b = out.cycle2d[(j + 1) % h];
    Vec dir = (pts.row(b) - pts.row(a)).transpose();
    Vec n(2);
    n << dir(1), -dir(0);  // outward for a CCW cycle
    n.normalize();
    HullFace f;
    f.normal = n;
    f.offset = n.dot(pts.row(a));
    f.cycle = {a, b};
    out.faces.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// 3D: randomized incremental hull with conflict lists, then coplanar-face
// merging. Points in the coplanar band of a face are kept aside and fed to
// the per-face 2D hull so corner points of flat faces are never lost.
// ---------------------------------------------------------------------------

struct Tri {
  int a = -1, b = -1, c = -1;
  int nab = -1, nbc = -1, nca = -1;  // neighbor across each edge
  bool alive = false;
  double nx = 0, ny = 0, nz = 0, off = 0;  // scaled outward normal
  double area2 = 0;                        // twice the triangle area
  std::vector<int> conflicts;              // strictly visible points
  std::vector<int> coplanar;               // points in the plane band
};

class Hull3D {
 public:
  Hull3D(const Mat& pts, double scale) : pts_(pts), scale_(scale) {
    dist_tol_ = 1e-12 * scale_;
    coords_.resize(pts_.rows());
    for (int i = 0; i < pts_.rows(); ++i)
      coords_[i] = {pts_(i, 0), pts_(i, 1), pts_(i, 2)};
  }

  void run() {
    const int m = static_cast<int>(pts_.rows());
    init_simplex();
    std::vector<int> insertion(m);
    std::iota(insertion.begin(), insertion.end(), 0);
    std::mt19937_64 rng(0x2545F4914F6CDD1DULL);
    std::shuffle(insertion.begin(), insertion.end(), rng);
    for (int i : insertion) assign_point(i);
    // Process faces until no strict conflicts remain.
    bool progress = true;
    while (progress) {
      progress = false;
      for (size_t f = 0; f < tris_.size(); ++f) {
        if (!tris_[f].alive || tris_[f].conflicts.empty()) continue;
        const int p = furthest_conflict(static_cast<int>(f));
        add_point(p, static_cast<int>(f));
        progress = true;
        break;
      }
    }
  }

  const std::vector<Tri>& tris() const { return tris_; }
  const Mat& pts() const { return pts_; }
  double dist_tol() const { return dist_tol_; }

 private:
  const double* row(int i) const { return coords_[i].data(); }

  void plane_of(Tri& t) const {
    const auto* A = row(t.a);
    const auto* B = row(t.b);
    const auto* C = row(t.c);
    const double ux = B[0] - A[0], uy = B[1] - A[1], uz = B[2] - A[2];
    const double vx = C[0] - A[0], vy = C[1] - A[1], vz = C[2] - A[2];
    t.nx = uy * vz - uz * vy;
    t.ny = uz * vx - ux * vz;
    t.nz = ux * vy - uy * vx;
    t.area2 = std::sqrt(t.nx * t.nx + t.ny * t.ny + t.nz * t.nz);
    t.off = t.nx * A[0] + t.ny * A[1] + t.nz * A[2];
  }

  // Signed distance * (2 area) of point p above the face plane.
  double raw_height(const Tri& t, int p) const {
    return orient3d(row(t.a), row(t.b), row(t.c), row(p));
  }

  void init_simplex() {
    const int m = static_cast<int>(pts_.rows());
    if (m < 4) throw DegenerateInput("need at least 4 points in R^3");
    // Spread-out initial tetrahedron: a far pair, then the point furthest
    // from their line, then the point furthest from that plane.
    int i0 = 0, i1 = 0;
    double best;
    {
      int lo = 0, hi = 0;
      for (int i = 1; i < m; ++i) {
        if (pts_(i, 0) < pts_(lo, 0)) lo = i;
        if (pts_(i, 0) > pts_(hi, 0)) hi = i;
      }
      i0 = lo;
      i1 = hi;
      best = (pts_.row(hi) - pts_.row(lo)).norm();
      for (int i = 0; i < m; ++i) {
        const double d0 = (pts_.row(i) - pts_.row(i0)).norm();
        const double d1 = (pts_.row(i) - pts_.row(i1)).norm();
        if (d0 > best) {
          best = d0;
          i1 = i;
        } else if (d1 > best) {
          best = d1;
          i0 = i;
        }
      }
    }
    if (best <= dist_tol_) throw DegenerateInput("point cloud degenerate");
    Eigen::Vector3d p0 = pts_.row(i0), p1 = pts_.row(i1);
    Eigen::Vector3d dir = (p1 - p0).normalized();
    int i2 = -1;
    double bd = dist_tol_;
    for (int i = 0; i < m; ++i) {
      Eigen::Vector3d w = pts_.row(i).transpose() - p0;
      const double d = (w - dir * dir.dot(w)).norm();
      if (d > bd) {
        bd = d;
        i2 = i;
      }
    }
    if (i2 < 0) throw DegenerateInput("point cloud has affine rank < 3");
    int i3 = -1;
    double bh = 0;
    for (int i = 0; i < m; ++i) {
      const double h = std::fabs(orient3d(row(i0), row(i1), row(i2), row(i)));
      if (h > bh) {
        bh = h;
        i3 = i;
      }
    }
    Eigen::Vector3d p2 = pts_.row(i2);
    const double area2 =
        ((p1 - p0).cross(p2 - p0)).norm();
    if (i3 < 0 || bh <= dist_tol_ * area2)
      throw DegenerateInput("point cloud has affine rank < 3");

    if (orient3d(row(i0), row(i1), row(i2), row(i3)) > 0) std::swap(i1, i2);
    const int f0 = new_tri(i0, i1, i2);
    const int f1 = new_tri(i0, i2, i3);
    const int f2 = new_tri(i0, i3, i1);
    const int f3 = new_tri(i1, i3, i2);
    link(f0, f1, f2, f3);
  }

  int new_tri(int a, int b, int c) {
    Tri t;
    t.a = a;
    t.b = b;
    t.c = c;
    t.alive = true;
    plane_of(t);
    tris_.push_back(std::move(t));
    return static_cast<int>(tris_.size()) - 1;
  }

  static bool shares_edge(const Tri& t, int u, int v, int* which) {
    const std::array<std::pair<int, int>, 3> es = {
        std::pair{t.a, t.b}, std::pair{t.b, t.c}, std::pair{t.c, t.a}};
    for (int e = 0; e < 3; ++e) {
      if ((es[e].first == v && es[e].second == u)) {
        *which = e;
        return true;
      }
    }
    return false;
  }

  void link(int f0, int f1, int f2, int f3) {
    const std::array<int, 4> fs = {f0, f1, f2, f3};
    for (int x : fs)
      for (int y : fs) {
        if (x == y) continue;
        wire(x, y);
      }
  }

  void wire(int x, int y) {
    Tri& tx = tris_[x];
    const std::array<std::pair<int, int>, 3> es = {
        std::pair{tx.a, tx.b}, std::pair{tx.b, tx.c}, std::pair{tx.c, tx.a}};
    for (int e = 0; e < 3; ++e) {
      int which = 0;
      if (shares_edge(tris_[y], es[e].first, es[e].second, &which)) {
        if (e == 0) tx.nab = y;
        if (e == 1) tx.nbc = y;
        if (e == 2) tx.nca = y;
      }
    }
  }

  void assign_point(int p) {
    // Attach to the first face that strictly sees p; stash coplanar band
    // points with the face of largest height.
    int band_face = -1;
    double band_h = -1e300;
    for (size_t f = 0; f < tris_.size(); ++f) {
      Tri& t = tris_[f];
      if (!t.alive) continue;
      if (p == t.a || p == t.b || p == t.c) return;
      const double h = raw_height(t, p);
      if (h > dist_tol_ * t.area2) {
        t.conflicts.push_back(p);
        return;
      }
      if (h > band_h) {
        band_h = h;
        band_face = static_cast<int>(f);
      }
    }
    if (band_face >= 0 && tris_[band_face].area2 > 0 &&
        band_h >= -dist_tol_ * tris_[band_face].area2)
      tris_[band_face].coplanar.push_back(p);
  }

  int furthest_conflict(int f) const {
    const Tri& t = tris_[f];
    int best = t.conflicts.front();
    double bh = -1e300;
    for (int p : t.conflicts) {
      const double h = raw_height(t, p);
      if (h > bh || (h == bh && p < best)) {
        bh = h;
        best = p;
      }
    }
    return best;
  }

  void add_point(int p, int seed_face) {
    // All faces exactly above which p lies (BFS from the seed). Exact
    // positivity keeps the surface convex; borderline points never get
    // here (they are parked in coplanar bands at assignment).
    std::vector<int> visible;
    std::vector<char> mark(tris_.size(), 0);
    std::deque<int> queue;
    queue.push_back(seed_face);
    mark[seed_face] = 1;
    while (!queue.empty()) {
      const int f = queue.front();
      queue.pop_front();
      Tri& t = tris_[f];
      if (!t.alive) continue;
      if (raw_height(t, p) <= 0) continue;
      visible.push_back(f);
      for (int nb : {t.nab, t.nbc, t.nca}) {
        if (nb >= 0 && !mark[nb]) {
          mark[nb] = 1;
          queue.push_back(nb);
        }
      }
    }
    if (visible.empty()) return;
    std::vector<char> vis(tris_.size(), 0);
    for (int f : visible) vis[f] = 1;

    // Horizon: directed edges of visible faces whose neighbor survives.
    struct HEdge {
      int u, v, outside;
    };
    std::vector<HEdge> horizon;
    for (int f : visible) {
      const Tri& t = tris_[f];
      const std::array<std::tuple<int, int, int>, 3> es = {
          std::tuple{t.a, t.b, t.nab}, std::tuple{t.b, t.c, t.nbc},
          std::tuple{t.c, t.a, t.nca}};
      for (const auto& [u, v, nb] : es) {
        if (nb < 0 || !vis[nb]) horizon.push_back({u, v, nb});
      }
    }

    // Collect orphaned points before killing faces.
    std::vector<int> orphans;
    for (int f : visible) {
      Tri& t = tris_[f];
      orphans.insert(orphans.end(), t.conflicts.begin(), t.conflicts.end());
      orphans.insert(orphans.end(), t.coplanar.begin(), t.coplanar.end());
      t.conflicts.clear();
      t.coplanar.clear();
      t.alive = false;
    }
    std::sort(orphans.begin(), orphans.end());
    orphans.erase(std::unique(orphans.begin(), orphans.end()), orphans.end());

    // One fan triangle per horizon edge; handles multi-cycle horizons.
    std::vector<int> fresh;
    fresh.reserve(horizon.size());
    for (const auto& e : horizon) {
      const int f = new_tri(e.u, e.v, p);
      fresh.push_back(f);
      if (e.outside >= 0) {
        wire(f, e.outside);
        wire(e.outside, f);
      }
    }
    for (size_t i = 0; i < fresh.size(); ++i)
      for (size_t j = 0; j < fresh.size(); ++j)
        if (i != j) wire(fresh[i], fresh[j]);

    for (int q : orphans) {
      if (q == p) continue;
      reassign(q, fresh);
    }
  }

  void reassign(int p, const std::vector<int>& candidates) {
    int band_face = -1;
    double band_h = -1e300;
    for (int f : candidates) {
      Tri& t = tris_[f];
      if (!t.alive) continue;
      if (p == t.a || p == t.b || p == t.c) return;
      const double h = raw_height(t, p);
      if (h > dist_tol_ * t.area2) {
        t.conflicts.push_back(p);
        return;
      }
      if (h > band_h) {
        band_h = h;
        band_face = f;
      }
    }
    // Interior relative to the new fan; re-test against all faces (rare).
    for (size_t f = 0; f < tris_.size(); ++f) {
      Tri& t = tris_[f];
      if (!t.alive) continue;
      const double h = raw_height(t, p);
      if (h > dist_tol_ * t.area2) {
        t.conflicts.push_back(p);
        return;
      }
      if (h > band_h) {
        band_h = h;
        band_face = static_cast<int>(f);
      }
    }
    if (band_face >= 0 && tris_[band_face].area2 > 0 &&
        band_h >= -dist_tol_ * tris_[band_face].area2)
      tris_[band_face].coplanar.push_back(p);
  }

  const Mat& pts_;
  double scale_;
  double dist_tol_;
  std::vector<std::array<double, 3>> coords_;
  std::vector<Tri> tris_;
};

HullResult build_hull_3d(const Mat& pts, double scale) {
  Hull3D hull(pts, scale);
  hull.run();
  const auto& tris = hull.tris();
  const double dist_tol = hull.dist_tol();

  // Group triangles into planar faces (BFS over shared edges).
  std::vector<int> alive_ids;
  for (size_t f = 0; f < tris.size(); ++f)
    if (tris[f].alive) alive_ids.push_back(static_cast<int>(f));
  std::vector<int> group(tris.size(), -1);
  std::vector<std::vector<int>> groups;
  for (int f : alive_ids) {
    if (group[f] >= 0) continue;
    if (tris[f].area2 <= 0) {  // degenerate sliver; vertices live elsewhere
      group[f] = -2;
      continue;
    }
    const int gid = static_cast<int>(groups.size());
    groups.emplace_back();
    std::deque<int> queue{f};
    group[f] = gid;
    Eigen::Vector3d n0(tris[f].nx, tris[f].ny, tris[f].nz);
    n0.normalize();
    const double off0 = n0.dot(pts.row(tris[f].a));
    while (!queue.empty()) {
      const int g = queue.front();
      queue.pop_front();
      groups[gid].push_back(g);
      for (int nb : {tris[g].nab, tris[g].nbc, tris[g].nca}) {
        if (nb < 0 || !tris[nb].alive || group[nb] != -1) continue;
        bool coplanar = true;
        for (int v : {tris[nb].a, tris[nb].b, tris[nb].c}) {
          const double d = n0.dot(pts.row(v)) - off0;
          if (std::fabs(d) > dist_tol) {
            coplanar = false;
            break;
          }
        }
        if (coplanar) {
          group[nb] = gid;
          queue.push_back(nb);
        }
      }
    }
  }

  HullResult out;
  std::vector<char> is_extreme(pts.rows(), 0);
  for (const auto& g : groups) {
    // Normal summed over the group (Newell style) for stability.
    Eigen::Vector3d n = Eigen::Vector3d::Zero();
    for (int f : g) n += Eigen::Vector3d(tris[f].nx, tris[f].ny, tris[f].nz);
    if (n.norm() <= 0) continue;
    n.normalize();
    // Candidate points: triangle corners plus the coplanar bands.
    std::vector<int> cand;
    for (int f : g) {
      cand.push_back(tris[f].a);
      cand.push_back(tris[f].b);
      cand.push_back(tris[f].c);
      cand.insert(cand.end(), tris[f].coplanar.begin(),
                  tris[f].coplanar.end());
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    double off = -std::numeric_limits<double>::infinity();
    for (int f : g) off = std::max(off, n.dot(pts.row(tris[f].a)));
    // Keep only candidates truly in the face band (coplanar stash may hold
    // points belonging to an adjacent group).
    std::vector<int> in_band;
    for (int p : cand)
      if (std::fabs(n.dot(pts.row(p)) - off) <= 4.0 * dist_tol)
        in_band.push_back(p);

    // In-plane frame and 2D hull.
    Eigen::Vector3d ref = std::fabs(n.x()) < 0.9 ? Eigen::Vector3d::UnitX()
                                                 : Eigen::Vector3d::UnitY();
    Eigen::Vector3d e1 = n.cross(ref).normalized();
    Eigen::Vector3d e2 = n.cross(e1);
    Mat flat(static_cast<int>(in_band.size()), 2);
    for (size_t i = 0; i < in_band.size(); ++i) {
      Eigen::Vector3d w = pts.row(in_band[i]);
      flat(static_cast<int>(i), 0) = e1.dot(w);
      flat(static_cast<int>(i), 1) = e2.dot(w);
    }
    if (in_band.size() < 3) continue;
    std::vector<int> cyc;
    if (in_band.size() == 3) {
      cyc = {0, 1, 2};
      double pa[2] = {flat(0, 0), flat(0, 1)};
      double pb[2] = {flat(1, 0), flat(1, 1)};
      double pc[2] = {flat(2, 0), flat(2, 1)};
      if (orient2d(pa, pb, pc) < 0) std::swap(cyc[1], cyc[2]);
    } else {
      try {
        cyc = hull2d_cycle(flat, scale);
      } catch (const DegenerateInput&) {
        continue;  // flat sliver group
      }
    }
    // hull2d_cycle returns CCW in the (e1, e2) frame; flip so the cycle is
    // CCW when viewed from the outward normal side (n = e1 x e2 ... e1 x e2
    // = -n with the frame above, so reverse).
    if (e1.cross(e2).dot(n) < 0) std::reverse(cyc.begin(), cyc.end());

    HullFace face;
    face.normal = Vec(3);
    face.normal << n.x(), n.y(), n.z();
    face.offset = off;
    for (int ci : cyc) {
      face.cycle.push_back(in_band[ci]);
      is_extreme[in_band[ci]] = 1;
    }
    out.faces.push_back(std::move(face));
  }
  for (int i = 0; i < static_cast<int>(pts.rows()); ++i)
    if (is_extreme[i]) out.extreme.push_back(i);
  if (out.extreme.size() < 4)
    throw DegenerateInput("hull collapsed to fewer than 4 vertices");
  return out;
}

}  // namespace

HullResult build_hull(const Mat& points, double scale) {
  const int d = static_cast<int>(points.cols());
  if (d == 2) return build_hull_2d(points, scale);
  if (d == 3) return build_hull_3d(points, scale);
  throw UnsupportedDimension("exact hull implemented for n in {2,3}, got n=" +
                             std::to_string(d));
}

}  // namespace aip::internal

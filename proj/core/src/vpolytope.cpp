#include <aip/vpolytope.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "hull_internal.hpp"

namespace aip {

namespace {

double cloud_scale(const Mat& pts) {
  Vec lo = pts.colwise().minCoeff();
  Vec hi = pts.colwise().maxCoeff();
  const double s = (hi - lo).norm();
  return s > 0 ? s : 1.0;
}

}  // namespace

VPolytope VPolytope::from_points(const Mat& points) {
  const int d = static_cast<int>(points.cols());
  if (d != 2 && d != 3)
    throw UnsupportedDimension("VPolytope supports n in {2,3}, got n=" +
                               std::to_string(d));
  if (points.rows() < d + 1)
    throw DegenerateInput("need at least n+1 points");
  const double scale = cloud_scale(points);
  const auto kept = internal::dedupe_points(points, 1e-12 * scale);
  Mat pts(static_cast<int>(kept.size()), d);
  for (size_t i = 0; i < kept.size(); ++i) pts.row(static_cast<int>(i)) = points.row(kept[i]);
  if (pts.rows() < d + 1) throw DegenerateInput("need at least n+1 distinct points");

  auto hull = internal::build_hull(pts, scale);

  // Canonical lexicographic vertex order.
  std::vector<int> order = hull.extreme;
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    for (int k = 0; k < d; ++k)
      if (pts(i, k) != pts(j, k)) return pts(i, k) < pts(j, k);
    return false;
  });
  std::map<int, int> remap;
  for (size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<int>(i);

  VPolytope body;
  body.dim_ = d;
  body.vertices_.resize(static_cast<int>(order.size()), d);
  for (size_t i = 0; i < order.size(); ++i)
    body.vertices_.row(static_cast<int>(i)) = pts.row(order[i]);
  body.scale_ = cloud_scale(body.vertices_);

  body.facets_.reserve(hull.faces.size());
  for (auto& f : hull.faces) {
    Facet fc;
    fc.normal = f.normal;
    fc.offset = f.offset;
    fc.cycle.reserve(f.cycle.size());
    for (int v : f.cycle) fc.cycle.push_back(remap.at(v));
    // Deterministic start: rotate so the smallest index leads.
    if (!fc.cycle.empty()) {
      auto it = std::min_element(fc.cycle.begin(), fc.cycle.end());
      std::rotate(fc.cycle.begin(), it, fc.cycle.end());
    }
    body.facets_.push_back(std::move(fc));
  }
  std::sort(body.facets_.begin(), body.facets_.end(),
            [](const Facet& a, const Facet& b) { return a.cycle < b.cycle; });

  if (d == 2) {
    body.cycle_.reserve(hull.cycle2d.size());
    for (int v : hull.cycle2d) body.cycle_.push_back(remap.at(v));
    auto it = std::min_element(body.cycle_.begin(), body.cycle_.end());
    std::rotate(body.cycle_.begin(), it, body.cycle_.end());
  }

  body.vertex_facets_.assign(body.vertices_.rows(), {});
  std::map<std::pair<int, int>, int> edge_seen;
  for (size_t fi = 0; fi < body.facets_.size(); ++fi) {
    const auto& cyc = body.facets_[fi].cycle;
    const size_t len = cyc.size();
    for (size_t j = 0; j < len; ++j) {
      body.vertex_facets_[cyc[j]].push_back(static_cast<int>(fi));
      if (d == 3 || j + 1 < len) {
        int u = cyc[j], v = cyc[(j + 1) % len];
        if (u > v) std::swap(u, v);
        edge_seen[{u, v}]++;
      }
    }
  }
  body.edges_.reserve(edge_seen.size());
  for (const auto& [e, cnt] : edge_seen) body.edges_.push_back(e);

  body.build_moments();
  if (!(body.volume_hp_ > 0))
    throw DegenerateInput("hull has zero volume");
  return body;
}

void VPolytope::build_moments() {
  const int n = dim_;
  VecA apex = VecA::Zero(n);
  for (int i = 0; i < vertices_.rows(); ++i)
    apex += vertices_.row(i).transpose().cast<Accum>();
  apex /= static_cast<Accum>(vertices_.rows());

  Accum vol = 0;
  VecA m1 = VecA::Zero(n);
  MatA m2 = MatA::Zero(n, n);

  // Fan of simplices: apex x (facet triangulated from its first vertex).
  for (const auto& f : facets_) {
    const auto& cyc = f.cycle;
    const int tri_count = static_cast<int>(cyc.size()) - (n - 1);
    for (int t = 0; t < tri_count; ++t) {
      std::vector<VecA> w;
      w.reserve(n + 1);
      w.push_back(apex);
      w.push_back(vertices_.row(cyc[0]).transpose().cast<Accum>());
      if (n == 2) {
        w.push_back(vertices_.row(cyc[1]).transpose().cast<Accum>());
      } else {
        w[1] = vertices_.row(cyc[0]).transpose().cast<Accum>();
        w.push_back(vertices_.row(cyc[t + 1]).transpose().cast<Accum>());
        w.push_back(vertices_.row(cyc[t + 2]).transpose().cast<Accum>());
      }
      MatA ed(n, n);
      for (int k = 0; k < n; ++k) ed.col(k) = w[k + 1] - w[0];
      Accum det;
      if (n == 2) {
        det = ed(0, 0) * ed(1, 1) - ed(0, 1) * ed(1, 0);
      } else {
        det = ed(0, 0) * (ed(1, 1) * ed(2, 2) - ed(1, 2) * ed(2, 1)) -
              ed(0, 1) * (ed(1, 0) * ed(2, 2) - ed(1, 2) * ed(2, 0)) +
              ed(0, 2) * (ed(1, 0) * ed(2, 1) - ed(1, 1) * ed(2, 0));
      }
      const Accum sv = std::abs(det) / static_cast<Accum>(n == 2 ? 2 : 6);
      if (sv == 0) continue;
      vol += sv;
      VecA wsum = VecA::Zero(n);
      for (const auto& x : w) wsum += x;
      m1 += sv * wsum / static_cast<Accum>(n + 1);
      MatA acc = wsum * wsum.transpose();
      for (const auto& x : w) acc += x * x.transpose();
      m2 += sv * acc / static_cast<Accum>((n + 1) * (n + 2));
    }
  }
  volume_hp_ = vol;
  moment1_hp_ = m1;
  moment2_hp_ = m2;
}

Vec VPolytope::centroid() const {
  return (moment1_hp_ / volume_hp_).cast<double>();
}

Mat VPolytope::second_moment() const { return moment2_hp_.cast<double>(); }

double VPolytope::support(const Vec& u) const {
  return (vertices_ * u).maxCoeff();
}

int VPolytope::support_vertex(const Vec& u) const {
  int idx = 0;
  (vertices_ * u).maxCoeff(&idx);
  return idx;
}

double VPolytope::diameter() const {
  const int m = vertex_count();
  if (m > 4096) return scale_;
  double best = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      best = std::max(best, (vertices_.row(i) - vertices_.row(j)).norm());
  return best;
}

double VPolytope::facet_margin(const Vec& x) const {
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& f : facets_)
    margin = std::min(margin, f.offset - f.normal.dot(x));
  return margin;
}

bool VPolytope::contains(const Vec& x, double tol) const {
  return facet_margin(x) >= -tol;
}

VPolytope VPolytope::transformed(const AffineMap& map) const {
  Mat pts(vertices_.rows(), dim_);
  for (int i = 0; i < vertices_.rows(); ++i)
    pts.row(i) = map.apply(vertices_.row(i)).transpose();
  return from_points(pts);
}

VPolytope VPolytope::translated(const Vec& t) const {
  Mat pts = vertices_;
  pts.rowwise() += t.transpose();
  return from_points(pts);
}

bool VPolytope::same_vertices(const VPolytope& other, double tol) const {
  if (dim_ != other.dim_ || vertices_.rows() != other.vertices_.rows())
    return false;
  // One-to-one nearest matching; robust to reordering from tiny
  // coordinate perturbations.
  std::vector<char> used(other.vertices_.rows(), 0);
  for (int i = 0; i < vertices_.rows(); ++i) {
    bool matched = false;
    for (int j = 0; j < other.vertices_.rows() && !matched; ++j) {
      if (used[j]) continue;
      if ((vertices_.row(i) - other.vertices_.row(j)).norm() <= tol) {
        used[j] = 1;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

std::pair<int, double> affine_rank(const Mat& points) {
  const int m = static_cast<int>(points.rows());
  const int d = static_cast<int>(points.cols());
  if (m == 0) return {-1, 0.0};
  if (m == 1) return {0, 0.0};
  const double scale = std::max(cloud_scale(points), 1e-300);
  const double tol = 1e-10 * scale;

  // Greedy orthogonalization of difference vectors.
  std::vector<Vec> basis;
  const Vec p0 = points.row(0);
  for (int i = 1; i < m && static_cast<int>(basis.size()) < d; ++i) {
    Vec w = points.row(i).transpose() - p0;
    for (const auto& b : basis) w -= b * b.dot(w);
    if (w.norm() > tol) basis.push_back(w.normalized());
  }
  const int rank = static_cast<int>(basis.size());
  double vol = 0.0;
  if (rank == d) {
    if (m == d + 1) {
      Mat ed(d, d);
      for (int k = 0; k < d; ++k)
        ed.col(k) = points.row(k + 1).transpose() - p0;
      double fact = 1;
      for (int k = 2; k <= d; ++k) fact *= k;
      vol = std::fabs(ed.determinant()) / fact;
    } else {
      vol = VPolytope::from_points(points).volume();
    }
  }
  return {rank, vol};
}

}  // namespace aip

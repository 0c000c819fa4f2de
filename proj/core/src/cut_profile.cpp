#include <aip/cut_profile.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

#include <aip/errors.hpp>

namespace aip {

namespace {

using LD = long double;

struct P3 {
  LD x[3];
};

}  // namespace

CutProfile::CutProfile(const VPolytope& body, Vec u) : body_(body), u_(std::move(u)) {
  dim_ = body_.dim();
  if (u_.size() != dim_) throw DimensionMismatch("cut direction dimension");
  const double len = u_.norm();
  if (!(len > 0)) throw InadmissibleParameters("zero cut direction");
  u_ /= len;
  proj_ = body_.vertices() * u_;
  desc_.resize(body_.vertex_count());
  std::iota(desc_.begin(), desc_.end(), 0);
  std::sort(desc_.begin(), desc_.end(), [&](int i, int j) {
    if (proj_(i) != proj_(j)) return proj_(i) > proj_(j);
    return i < j;
  });
  proj_desc_.resize(desc_.size());
  for (size_t k = 0; k < desc_.size(); ++k) proj_desc_[k] = proj_(desc_[k]);
}

// proj_desc_ is descending; count of entries with value > t.
static int suffix_count(const std::vector<double>& desc_vals, double t) {
  int lo = 0, hi = static_cast<int>(desc_vals.size());
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (desc_vals[mid] > t)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

bool CutProfile::clip_facet(int fi, double t, const VecA& anchor,
                            Clipped* out) const {
  const Facet& f = body_.facets()[fi];
  const int n = dim_;
  const int len = static_cast<int>(f.cycle.size());

  // Relative projections of the cycle vertices (long double).
  thread_local std::vector<LD> pr;
  thread_local std::vector<P3> rel;
  pr.resize(len);
  rel.resize(len);
  for (int k = 0; k < len; ++k) {
    const int v = f.cycle[k];
    LD dot = 0;
    for (int j = 0; j < n; ++j) {
      const LD c = static_cast<LD>(body_.vertices()(v, j)) - anchor(j);
      rel[k].x[j] = c;
      dot += c * static_cast<LD>(u_(j));
    }
    pr[k] = dot;
  }

  if (n == 2) {
    // Facet is the segment cycle[0] -> cycle[1].
    LD a[2] = {rel[0].x[0], rel[0].x[1]};
    LD b[2] = {rel[1].x[0], rel[1].x[1]};
    LD pa = pr[0], pb = pr[1];
    if (pa < pb) {
      std::swap(a[0], b[0]);
      std::swap(a[1], b[1]);
      std::swap(pa, pb);
    }
    if (pa <= 0) return false;  // fully below
    if (pb < 0) {
      const LD s = pa / (pa - pb);
      b[0] = a[0] + s * (b[0] - a[0]);
      b[1] = a[1] + s * (b[1] - a[1]);
    }
    const LD dx = a[0] - b[0], dy = a[1] - b[1];
    out->measure = std::sqrt(static_cast<LD>(dx * dx + dy * dy));
    out->centroid.resize(2);
    out->centroid(0) = (a[0] + b[0]) / 2;
    out->centroid(1) = (a[1] + b[1]) / 2;
    return out->measure > 0;
  }

  // n == 3: clip the cycle polygon against {pr >= 0}.
  thread_local std::vector<P3> poly;
  poly.clear();
  for (int k = 0; k < len; ++k) {
    const int k1 = (k + 1) % len;
    const bool in0 = pr[k] >= 0, in1 = pr[k1] >= 0;
    if (in0) poly.push_back(rel[k]);
    if (in0 != in1) {
      const LD s = pr[k] / (pr[k] - pr[k1]);
      P3 q;
      for (int j = 0; j < 3; ++j)
        q.x[j] = rel[k].x[j] + s * (rel[k1].x[j] - rel[k].x[j]);
      poly.push_back(q);
    }
  }
  if (poly.size() < 3) return false;
  // Area and centroid of the planar polygon (fan from poly[0]).
  LD area2 = 0;
  LD cx = 0, cy = 0, cz = 0;
  for (size_t k = 1; k + 1 < poly.size(); ++k) {
    const LD ux = poly[k].x[0] - poly[0].x[0], uy = poly[k].x[1] - poly[0].x[1],
             uz = poly[k].x[2] - poly[0].x[2];
    const LD vx = poly[k + 1].x[0] - poly[0].x[0],
             vy = poly[k + 1].x[1] - poly[0].x[1],
             vz = poly[k + 1].x[2] - poly[0].x[2];
    const LD nx = uy * vz - uz * vy;
    const LD ny = uz * vx - ux * vz;
    const LD nz = ux * vy - uy * vx;
    LD tri2 = std::sqrt(nx * nx + ny * ny + nz * nz);
    // Sign against the facet normal keeps degenerate backfolds harmless.
    const LD sgn = nx * static_cast<LD>(f.normal(0)) +
                   ny * static_cast<LD>(f.normal(1)) +
                   nz * static_cast<LD>(f.normal(2));
    if (sgn < 0) tri2 = -tri2;
    area2 += tri2;
    const LD gx = (poly[0].x[0] + poly[k].x[0] + poly[k + 1].x[0]) / 3;
    const LD gy = (poly[0].x[1] + poly[k].x[1] + poly[k + 1].x[1]) / 3;
    const LD gz = (poly[0].x[2] + poly[k].x[2] + poly[k + 1].x[2]) / 3;
    cx += tri2 * gx;
    cy += tri2 * gy;
    cz += tri2 * gz;
  }
  if (!(area2 > 0)) return false;
  out->measure = area2 / 2;
  out->centroid.resize(3);
  out->centroid(0) = cx / area2;
  out->centroid(1) = cy / area2;
  out->centroid(2) = cz / area2;
  return true;
}

void CutProfile::cut_volume_moment(double t, Accum* volume, VecA* moment) const {
  const int n = dim_;
  *volume = 0;
  if (moment) *moment = VecA::Zero(n);
  if (desc_.empty() || t >= proj_desc_.front()) return;
  if (t <= proj_desc_.back()) {
    *volume = body_.volume_hp();
    if (moment) *moment = body_.moment1_hp();
    return;
  }
  const int count = suffix_count(proj_desc_, t);

  // Anchor on the cut plane near the sliver.
  VecA anchor(n);
  const int top = desc_.front();
  for (int j = 0; j < n; ++j)
    anchor(j) = static_cast<Accum>(body_.vertices()(top, j)) -
                static_cast<Accum>(proj_(top) - t) * static_cast<Accum>(u_(j));

  // Facets incident to the suffix.
  thread_local std::vector<int> touched;
  touched.clear();
  for (int k = 0; k < count; ++k)
    for (int fi : body_.vertex_facets()[desc_[k]]) touched.push_back(fi);
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

  // Signed cone decomposition from the anchor; the cut face itself has
  // zero height and drops out.
  Accum vol = 0;
  VecA mom = VecA::Zero(n);
  Clipped piece;
  for (int fi : touched) {
    if (!clip_facet(fi, t, anchor, &piece)) continue;
    const Facet& f = body_.facets()[fi];
    Accum d = static_cast<Accum>(f.offset);
    for (int j = 0; j < n; ++j)
      d -= static_cast<Accum>(f.normal(j)) * anchor(j);
    const Accum cone = d * piece.measure / n;
    vol += cone;
    if (moment) mom += cone * (static_cast<Accum>(n) / (n + 1)) * piece.centroid;
  }
  *volume = vol;
  if (moment) *moment = mom + vol * anchor;
}

Accum CutProfile::cut_volume(double t) const {
  Accum v = 0;
  cut_volume_moment(t, &v, nullptr);
  return v;
}

double CutProfile::solve_offset(Accum target, Accum vol_tol_abs,
                                int max_iter) const {
  double lo = proj_desc_.back(), hi = proj_desc_.front();
  Accum vlo = body_.volume_hp(), vhi = 0;
  if (target >= vlo) return lo;
  if (target <= 0) return hi;
  double t = (lo + hi) / 2;
  for (int it = 0; it < max_iter; ++it) {
    // Regula-falsi proposal, safeguarded by bisection.
    double prop = (it % 3 == 2)
                      ? (lo + hi) / 2
                      : lo + static_cast<double>((vlo - target) / (vlo - vhi)) *
                                 (hi - lo);
    if (!(prop > lo && prop < hi)) prop = (lo + hi) / 2;
    t = prop;
    const Accum v = cut_volume(t);
    if (std::abs(v - target) <= vol_tol_abs) return t;
    if (v > target) {
      lo = t;
      vlo = v;
    } else {
      hi = t;
      vhi = v;
    }
    if (hi - lo <= 1e-16 * std::max(std::fabs(hi), std::fabs(lo)) + 5e-308)
      return (lo + hi) / 2;
  }
  return t;
}

}  // namespace aip

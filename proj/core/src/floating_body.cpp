#include <aip/floating_body.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include <aip/cut_profile.hpp>
#include <aip/errors.hpp>
#include <aip/geometry_ops.hpp>
#include <aip/hpolytope.hpp>
#include <aip/parallel.hpp>

namespace aip {

namespace internal_ops {
VPolytope enumerate_impl(int dim, const std::vector<HalfSpace>& hs,
                         const Vec* hint);
}

double delta_sup(int n) { return std::pow(n / (n + 1.0), n); }

namespace {

void check_vol_tol(double vol_tol) {
  if (!(vol_tol > 0) || vol_tol > 1e-6)
    throw InadmissibleParameters("vol_tol must lie in (0, 1e-6]");
}

}  // namespace

double cut_offset(const VPolytope& body, const Vec& u, double delta,
                  double vol_tol) {
  if (!(delta > 0) || !(delta < 1))
    throw InadmissibleParameters("cut depth must lie in (0,1)");
  check_vol_tol(vol_tol);
  CutProfile profile(body, u);
  const Accum target = static_cast<Accum>(delta) * body.volume_hp();
  return profile.solve_offset(target, static_cast<Accum>(vol_tol) * body.volume_hp());
}

std::vector<VPolytope> floating_family(const VPolytope& body,
                                       const DirectionNet& net,
                                       const std::vector<double>& deltas,
                                       double vol_tol) {
  check_vol_tol(vol_tol);
  const double sup = delta_sup(body.dim());
  for (double d : deltas)
    if (!(d > 0) || !(d < sup))
      throw InadmissibleParameters("cut depth outside (0, (n/(n+1))^n)");
  if (net.dim() != body.dim())
    throw DimensionMismatch("direction net dimension");

  const int dirs = net.size();
  const int nd = static_cast<int>(deltas.size());
  const Accum tol_abs = static_cast<Accum>(vol_tol) * body.volume_hp();
  std::vector<double> offsets(static_cast<size_t>(dirs) * nd);
  parallel_for(0, dirs, [&](int i) {
    CutProfile profile(body, net.direction(i));
    for (int k = 0; k < nd; ++k) {
      const Accum target = static_cast<Accum>(deltas[k]) * body.volume_hp();
      offsets[static_cast<size_t>(i) * nd + k] =
          profile.solve_offset(target, tol_abs);
    }
  });

  const Vec g = body.centroid();
  std::vector<VPolytope> out;
  out.reserve(nd);
  for (int k = 0; k < nd; ++k) {
    std::vector<HalfSpace> cuts;
    cuts.reserve(dirs);
    double margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < dirs; ++i) {
      const double a = offsets[static_cast<size_t>(i) * nd + k];
      margin = std::min(margin, a - net.direction(i).dot(g));
      cuts.emplace_back(net.direction(i), a);
    }
    if (!(margin > 0))
      throw EmptyFloatingBody(
          "floating body lost its interior (cut depth too large or net too coarse)");
    try {
      out.push_back(internal_ops::enumerate_impl(body.dim(), cuts, &g));
    } catch (const Error&) {
      throw EmptyFloatingBody("floating body lost its interior");
    }
  }
  return out;
}

VPolytope floating_body(const VPolytope& body, const FloatingParams& params) {
  return floating_family(body, params.net, {params.delta}, params.vol_tol)
      .front();
}

Vec wet_centroid(const VPolytope& body, const VPolytope& inner,
                 double vol_tol) {
  const Accum wet = body.volume_hp() - inner.volume_hp();
  if (wet <= 10 * static_cast<Accum>(vol_tol) * body.volume_hp())
    throw DegenerateDifference(
        "wet part too small relative to the cut-volume tolerance");
  const VecA m = body.moment1_hp() - inner.moment1_hp();
  return (m / wet).cast<double>();
}

Vec floating_centroid(const VPolytope& body, const FloatingParams& params) {
  auto inner = floating_body(body, params);
  return wet_centroid(body, inner, params.vol_tol);
}

double net_containment_slack(const VPolytope& body, const DirectionNet& net) {
  // For x in the net intersection and u* the separating direction of the
  // true body, the nearest net direction u gives
  //   dist(x, K) <= <x, u* - u> + (h(u) - h(u*)) <= mesh (|x - g| + R_g),
  // and |x - g| <= R_g / (1 - mesh) for admissible cuts.
  const Vec g = body.centroid();
  double radius = 0;
  for (int i = 0; i < body.vertex_count(); ++i)
    radius = std::max(radius, (body.vertex(i) - g).norm());
  const double m = net.mesh();
  if (!(m > 0) || m >= 0.5) return 0.25 * radius;  // transported/unknown mesh
  return m * radius * (1.0 / (1.0 - m) + 1.0);
}

double asa_constant(int n) {
  return 2.0 * std::pow(unit_ball_volume(n - 1) / (n + 1), 2.0 / (n + 1));
}

namespace {

double asa_value(const VPolytope& body, const VPolytope& inner, double delta) {
  const int n = body.dim();
  const Accum wet = body.volume_hp() - inner.volume_hp();
  const double scaled = std::pow(
      delta * static_cast<double>(body.volume_hp()), 2.0 / (n + 1));
  return asa_constant(n) * static_cast<double>(wet) / scaled;
}

}  // namespace

double asa_functional(const VPolytope& body, double delta,
                      const DirectionNet& net, double vol_tol) {
  auto inner = floating_family(body, net, {delta}, vol_tol).front();
  return asa_value(body, inner, delta);
}

AsaEstimate asa_limit(const VPolytope& body, const std::vector<double>& deltas,
                      const DirectionNet& net, double vol_tol,
                      int model_order) {
  if (deltas.size() < 4)
    throw InadmissibleParameters("need at least 4 grid points");
  for (size_t i = 1; i < deltas.size(); ++i)
    if (!(deltas[i] < deltas[i - 1]))
      throw InadmissibleParameters("delta grid must be strictly decreasing");
  auto inners = floating_family(body, net, deltas, vol_tol);

  AsaEstimate est;
  est.deltas = deltas;
  est.values.reserve(deltas.size());
  for (size_t k = 0; k < deltas.size(); ++k)
    est.values.push_back(asa_value(body, inners[k], deltas[k]));

  // Richardson table in the delta^{q} scale, q = 2/(n+1).
  const double q = 2.0 / (body.dim() + 1);
  std::vector<double> row = est.values;
  std::vector<double> ds = deltas;
  const int depth = std::min<int>(model_order, static_cast<int>(row.size()) - 1);
  for (int level = 1; level <= depth; ++level) {
    std::vector<double> next(row.size() - 1);
    for (size_t k = 0; k + 1 < row.size(); ++k) {
      const double r = std::pow(ds[k + 1] / ds[k], q * level);
      next[k] = (row[k + 1] - r * row[k]) / (1.0 - r);
    }
    row = std::move(next);
    ds.erase(ds.begin());
  }
  est.extrapolated = row.back();
  return est;
}

std::pair<double, double> cut_section_inequality(const VPolytope& body,
                                                 const Vec& u, double delta,
                                                 double vol_tol) {
  if (!(delta > 0) || !(delta < 0.5))
    throw InadmissibleParameters("cut depth must lie in (0, 1/2)");
  const double a = cut_offset(body, u, delta, vol_tol);
  const int n = body.dim();
  const double lhs = section_measure(body, u, a);
  const double rhs =
      std::pow(delta, (n - 1.0) / n) * max_section_measure(body, u);
  return {lhs, rhs};
}

}  // namespace aip

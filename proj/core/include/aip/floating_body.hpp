#pragma once

#include <utility>
#include <vector>

#include <aip/direction_net.hpp>
#include <aip/vpolytope.hpp>

namespace aip {

/// Upper end of the admissible cut-depth range: (n/(n+1))^n. Below it the
/// centroid stays interior to the floating body.
double delta_sup(int n);

/// Parameters for floating-body computations.
struct FloatingParams {
  double delta = 0.05;
  DirectionNet net;
  double vol_tol = 1e-9;  // relative cut-volume tolerance, in (0, 1e-6]
};

/// The level t at which {<x,u> >= t} cuts off exactly delta*vol(P), within
/// vol_tol*vol(P). Monotone decreasing in delta.
double cut_offset(const VPolytope& body, const Vec& u, double delta,
                  double vol_tol = 1e-9);

/// Net floating body: vertex enumeration of the intersection of the cut
/// halfspaces {<x,u> <= a_delta(u)} over the net directions.
VPolytope floating_body(const VPolytope& body, const FloatingParams& params);

/// Floating bodies of one polytope for several cut depths; per-direction
/// profiles are shared, so this is much cheaper than repeated calls.
std::vector<VPolytope> floating_family(const VPolytope& body,
                                       const DirectionNet& net,
                                       const std::vector<double>& deltas,
                                       double vol_tol);

/// Centroid of the wet part P \ inner computed from the moment identity
/// |K| g(K) = |K_d| g(K_d) + |K \ K_d| g(K \ K_d). Throws
/// DegenerateDifference when |K| - |K_d| <= 10 * vol_tol * |K|.
Vec wet_centroid(const VPolytope& body, const VPolytope& inner,
                 double vol_tol);

/// g(P \ P_delta), the floating centroid.
Vec floating_centroid(const VPolytope& body, const FloatingParams& params);

/// Outward slack of the net intersection against the true body: any point
/// of the net floating body lies within this distance of the body. Scales
/// with the net covering radius and the body's circumradius about its
/// centroid.
double net_containment_slack(const VPolytope& body, const DirectionNet& net);

/// c_n = 2 (|B^{n-1}| / (n+1))^{2/(n+1)}, the constant in the affine
/// surface area limit of the wet-part volume.
double asa_constant(int n);

/// c_n (|K| - |K_delta|) / (delta |K|)^{2/(n+1)}.
double asa_functional(const VPolytope& body, double delta,
                      const DirectionNet& net, double vol_tol = 1e-9);

/// Functional values over a decreasing delta grid plus the Richardson
/// extrapolation in the delta^{2/(n+1)} scale.
struct AsaEstimate {
  std::vector<double> deltas;  // strictly decreasing
  std::vector<double> values;
  double extrapolated = 0;
};

AsaEstimate asa_limit(const VPolytope& body, const std::vector<double>& deltas,
                      const DirectionNet& net, double vol_tol = 1e-9,
                      int model_order = 2);

/// Section value f(a_delta(u)) and the lower bound
/// delta^{(n-1)/n} * max_t f(t) it must dominate.
std::pair<double, double> cut_section_inequality(const VPolytope& body,
                                                 const Vec& u, double delta,
                                                 double vol_tol = 1e-9);

}  // namespace aip

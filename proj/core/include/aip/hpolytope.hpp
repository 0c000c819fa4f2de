#pragma once

#include <vector>

#include <aip/vec.hpp>

namespace aip {

class VPolytope;

/// Halfspace {x : <normal, x> <= offset} with a unit normal (within 1e-12).
struct HalfSpace {
  HalfSpace(Vec n, double a);
  Vec normal;
  double offset;
};

/// Convex body as a bounded halfspace intersection. Construction verifies
/// boundedness and a nonempty interior by enumerating the vertices.
class HPolytope {
 public:
  HPolytope(int dim, std::vector<HalfSpace> halfspaces);

  int dim() const { return dim_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }

 private:
  int dim_;
  std::vector<HalfSpace> halfspaces_;
};

/// H-representation of a V-polytope (exact facet enumeration, n in {2,3}).
HPolytope to_hrep(const VPolytope& body);

}  // namespace aip

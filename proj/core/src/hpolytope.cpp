#include <aip/hpolytope.hpp>

#include <cmath>

#include <aip/errors.hpp>
#include <aip/vpolytope.hpp>

namespace aip {

namespace internal_ops {
VPolytope enumerate_impl(int dim, const std::vector<HalfSpace>& hs,
                         const Vec* hint);
}

HalfSpace::HalfSpace(Vec n, double a) : normal(std::move(n)), offset(a) {
  const double len = normal.norm();
  if (std::fabs(len - 1.0) > 1e-12)
    throw InadmissibleParameters("halfspace normal must be unit (|u|=1 within 1e-12)");
  normal /= len;
}

HPolytope::HPolytope(int dim, std::vector<HalfSpace> halfspaces)
    : dim_(dim), halfspaces_(std::move(halfspaces)) {
  if (dim_ != 2 && dim_ != 3)
    throw UnsupportedDimension("HPolytope supports n in {2,3}");
  for (const auto& h : halfspaces_)
    if (h.normal.size() != dim_)
      throw DimensionMismatch("halfspace dimension mismatch");
  // Boundedness / interior check by vertex enumeration.
  internal_ops::enumerate_impl(dim_, halfspaces_, nullptr);
}

HPolytope to_hrep(const VPolytope& body) {
  std::vector<HalfSpace> hs;
  hs.reserve(body.facets().size());
  for (const auto& f : body.facets()) hs.emplace_back(f.normal, f.offset);
  return HPolytope(body.dim(), std::move(hs));
}

}  // namespace aip

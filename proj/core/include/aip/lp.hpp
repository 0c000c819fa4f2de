#pragma once

#include <optional>
#include <vector>

#include <aip/vec.hpp>

namespace aip {

/// Linear constraint <a, x> <= b.
struct LinCon {
  Vec a;
  double b = 0;
};

/// Seidel's randomized incremental LP for dimension <= 4:
/// maximize <c, x> subject to the constraints and |x_j| <= box.
/// Deterministic (fixed shuffle seed). Returns nullopt when infeasible.
std::optional<Vec> seidel_lp(const Vec& c, const std::vector<LinCon>& cons,
                             double box);

/// Chebyshev center of {x : <u_i, x> <= b_i} with unit u_i: the (center,
/// radius) of the largest inscribed ball. radius < 0 means empty interior.
std::pair<Vec, double> chebyshev_center(const std::vector<LinCon>& cons,
                                        int dim, double box);

}  // namespace aip

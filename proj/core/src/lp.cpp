#include <aip/lp.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <aip/errors.hpp>

namespace aip {

namespace {

// Recursive Seidel step. `cons` is the shuffled constraint list; the box is
// encoded as explicit constraints appended by the caller.
std::optional<Vec> seidel_rec(const Vec& c, std::vector<LinCon> cons,
                              double box) {
  const int d = static_cast<int>(c.size());
  if (d == 1) {
    double lo = -box, hi = box;
    for (const auto& con : cons) {
      const double a = con.a(0);
      if (std::fabs(a) < 1e-300) {
        if (con.b < -1e-12) return std::nullopt;
        continue;
      }
      if (a > 0)
        hi = std::min(hi, con.b / a);
      else
        lo = std::max(lo, con.b / a);
    }
    if (lo > hi + 1e-12) return std::nullopt;
    Vec x(1);
    x(0) = c(0) >= 0 ? hi : lo;
    return x;
  }

  Vec x(d);
  for (int j = 0; j < d; ++j) x(j) = c(j) >= 0 ? box : -box;

  std::vector<LinCon> active;
  active.reserve(cons.size());
  for (const auto& con : cons) {
    if (con.a.dot(x) <= con.b + 1e-12 * (1.0 + std::fabs(con.b))) {
      active.push_back(con);
      continue;
    }
    // Optimum lies on the hyperplane <a, x> = b: eliminate the variable of
    // largest |a_j|.
    int piv = 0;
    con.a.cwiseAbs().maxCoeff(&piv);
    const double apiv = con.a(piv);
    if (std::fabs(apiv) < 1e-300) return std::nullopt;

    auto reduce_vec = [&](const Vec& v, double coef) {
      Vec r(d - 1);
      int k = 0;
      for (int j = 0; j < d; ++j) {
        if (j == piv) continue;
        r(k++) = v(j) - coef * con.a(j);
      }
      return r;
    };
    // x_piv = (b - sum_{j != piv} a_j x_j) / a_piv
    Vec c_red = reduce_vec(c, c(piv) / apiv);
    std::vector<LinCon> cons_red;
    cons_red.reserve(active.size() + 2 * d);
    for (const auto& pc : active) {
      LinCon rc;
      rc.a = reduce_vec(pc.a, pc.a(piv) / apiv);
      rc.b = pc.b - pc.a(piv) * con.b / apiv;
      cons_red.push_back(std::move(rc));
    }
    // Box constraints on the eliminated variable.
    for (double s : {1.0, -1.0}) {
      Vec e = Vec::Zero(d);
      e(piv) = s;
      LinCon rc;
      rc.a = reduce_vec(e, s / apiv);
      rc.b = box - s * con.b / apiv;
      cons_red.push_back(std::move(rc));
    }
    auto sub = seidel_rec(c_red, std::move(cons_red), box);
    if (!sub) return std::nullopt;
    int k = 0;
    double acc = con.b;
    for (int j = 0; j < d; ++j) {
      if (j == piv) continue;
      x(j) = (*sub)(k++);
      acc -= con.a(j) * x(j);
    }
    x(piv) = acc / apiv;
    active.push_back(con);
  }
  return x;
}

}  // namespace

std::optional<Vec> seidel_lp(const Vec& c, const std::vector<LinCon>& cons,
                             double box) {
  const int d = static_cast<int>(c.size());
  if (d < 1 || d > 4) throw UnsupportedDimension("seidel_lp: dim must be <= 4");
  std::vector<LinCon> shuffled = cons;
  std::mt19937_64 rng(0x9E3779B97F4A7C15ULL);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  return seidel_rec(c, std::move(shuffled), box);
}

std::pair<Vec, double> chebyshev_center(const std::vector<LinCon>& cons,
                                        int dim, double box) {
  // Variables (x, t): maximize t with <u_i, x> + t <= b_i.
  Vec c = Vec::Zero(dim + 1);
  c(dim) = 1.0;
  std::vector<LinCon> lifted;
  lifted.reserve(cons.size());
  for (const auto& con : cons) {
    LinCon lc;
    lc.a = Vec(dim + 1);
    lc.a.head(dim) = con.a;
    lc.a(dim) = 1.0;
    lc.b = con.b;
    lifted.push_back(std::move(lc));
  }
  auto sol = seidel_lp(c, lifted, box);
  if (!sol) return {Vec::Zero(dim), -1.0};
  return {sol->head(dim), (*sol)(dim)};
}

}  // namespace aip

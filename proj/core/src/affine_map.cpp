#include <aip/affine_map.hpp>

#include <cmath>

#include <aip/errors.hpp>

namespace aip {

AffineMap::AffineMap(Mat matrix, Vec translation)
    : matrix_(std::move(matrix)), translation_(std::move(translation)) {
  if (matrix_.rows() != matrix_.cols() ||
      matrix_.rows() != translation_.size())
    throw DimensionMismatch("affine map shape mismatch");
  det_ = matrix_.determinant();
  if (!(std::fabs(det_) > 1e-10))
    throw SingularMap("|det M| <= 1e-10");
  if (!std::isfinite(condition()))
    throw SingularMap("condition number not finite");
}

AffineMap AffineMap::identity(int dim) {
  return AffineMap(Mat::Identity(dim, dim), Vec::Zero(dim));
}

AffineMap AffineMap::translation(const Vec& t) {
  return AffineMap(Mat::Identity(t.size(), t.size()), t);
}

AffineMap AffineMap::scaling(int dim, double factor) {
  return AffineMap(Mat::Identity(dim, dim) * factor, Vec::Zero(dim));
}

AffineMap AffineMap::inverse() const {
  Mat inv = matrix_.inverse();
  return AffineMap(inv, -(inv * translation_));
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  return AffineMap(matrix_ * inner.matrix_,
                   matrix_ * inner.translation_ + translation_);
}

double AffineMap::condition() const {
  Eigen::JacobiSVD<Mat> svd(matrix_);
  const auto& s = svd.singularValues();
  return s(0) / s(s.size() - 1);
}

}  // namespace aip

#pragma once

#include <aip/vec.hpp>

namespace aip {

/// Invertible affine transform x -> Mx + t.
///
/// Construction rejects maps with |det M| <= 1e-10 or a non-finite
/// condition number.
class AffineMap {
 public:
  AffineMap(Mat matrix, Vec translation);

  static AffineMap identity(int dim);
  static AffineMap translation(const Vec& t);
  static AffineMap scaling(int dim, double factor);

  const Mat& matrix() const { return matrix_; }
  const Vec& translation() const { return translation_; }
  int dim() const { return static_cast<int>(translation_.size()); }

  Vec apply(const Vec& x) const { return matrix_ * x + translation_; }
  Vec operator()(const Vec& x) const { return apply(x); }

  AffineMap inverse() const;
  AffineMap compose(const AffineMap& inner) const;  // this ∘ inner

  double det() const { return det_; }
  double condition() const;

 private:
  Mat matrix_;
  Vec translation_;
  double det_;
};

}  // namespace aip

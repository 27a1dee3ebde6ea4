#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "probrob/rng.hpp"

namespace probrob {

enum class ShapeKind { kVector, kRealMatrix, kComplexMatrix };

/// How a flat coordinate vector maps onto an uncertainty.  Matrices are stored
/// row-major; complex entries as interleaved (re, im) pairs, so a complex
/// m x p block has dimension 2mp.
struct Shape {
  ShapeKind kind = ShapeKind::kVector;
  std::size_t rows = 0;
  std::size_t cols = 1;

  static Shape vector(std::size_t d) { return {ShapeKind::kVector, d, 1}; }
  static Shape real_matrix(std::size_t m, std::size_t p) { return {ShapeKind::kRealMatrix, m, p}; }
  static Shape complex_matrix(std::size_t m, std::size_t p) {
    return {ShapeKind::kComplexMatrix, m, p};
  }

  std::size_t dimension() const noexcept {
    return kind == ShapeKind::kComplexMatrix ? 2 * rows * cols : rows * cols;
  }

  friend bool operator==(const Shape&, const Shape&) = default;
};

/// Norms on the coordinate vector.  L2 on a matrix block is its Frobenius norm.
enum class NormKind { kL1, kL2, kLinf };

std::string_view to_string(NormKind kind);
NormKind parse_norm(std::string_view name);

/// A realization of the uncertainty.
class UncertaintyInstance {
 public:
  UncertaintyInstance(Shape shape, std::vector<double> coords);

  const Shape& shape() const noexcept { return shape_; }
  std::size_t dimension() const noexcept { return coords_.size(); }
  std::span<const double> coords() const noexcept { return coords_; }

  Eigen::MatrixXd as_real_matrix() const;
  Eigen::MatrixXcd as_complex_matrix() const;

 private:
  Shape shape_;
  std::vector<double> coords_;
};

double norm(std::span<const double> coords, NormKind kind);
double norm(const UncertaintyInstance& delta, NormKind kind);

/// A point on the unit sphere {x : ||x|| = 1} of the chosen norm.
class DirectionSample {
 public:
  DirectionSample(UncertaintyInstance instance, NormKind norm);

  const UncertaintyInstance& instance() const noexcept { return instance_; }
  NormKind norm_kind() const noexcept { return norm_; }

 private:
  UncertaintyInstance instance_;
  NormKind norm_;
};

/// Draws U from the cone measure of the unit sphere: the law of V / ||V|| with
/// V uniform in the unit ball.
DirectionSample sample_surface(const Shape& shape, NormKind kind, SeededStream& rng);
DirectionSample sample_surface(std::size_t d, NormKind kind, SeededStream& rng);

/// U * rho.
UncertaintyInstance scale(const DirectionSample& direction, double rho);

}  // namespace probrob

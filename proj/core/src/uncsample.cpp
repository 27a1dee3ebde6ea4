#include "probrob/uncsample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "probrob/error.hpp"

namespace probrob {

std::string_view to_string(NormKind kind) {
  switch (kind) {
    case NormKind::kL1: return "l1";
    case NormKind::kL2: return "l2";
    case NormKind::kLinf: return "linf";
  }
  return "unknown";
}

NormKind parse_norm(std::string_view name) {
  if (name == "l1" || name == "L1") return NormKind::kL1;
  if (name == "l2" || name == "L2" || name == "fro" || name == "frobenius") return NormKind::kL2;
  if (name == "linf" || name == "Linf" || name == "inf") return NormKind::kLinf;
  raise(ErrorKind::kInvalidArgument, "unknown norm '" + std::string(name) + "'");
}

UncertaintyInstance::UncertaintyInstance(Shape shape, std::vector<double> coords)
    : shape_(shape), coords_(std::move(coords)) {
  if (coords_.empty()) raise(ErrorKind::kInvalidInstance, "empty coordinate vector");
  if (coords_.size() != shape_.dimension()) {
    raise(ErrorKind::kInvalidInstance, "shape implies d=" + std::to_string(shape_.dimension()) +
                                           " but " + std::to_string(coords_.size()) +
                                           " coordinates were given");
  }
}

Eigen::MatrixXd UncertaintyInstance::as_real_matrix() const {
  if (shape_.kind == ShapeKind::kComplexMatrix) {
    raise(ErrorKind::kDimensionMismatch, "complex block requested as real matrix");
  }
  Eigen::MatrixXd out(shape_.rows, shape_.cols);
  for (std::size_t r = 0; r < shape_.rows; ++r)
    for (std::size_t c = 0; c < shape_.cols; ++c) out(r, c) = coords_[r * shape_.cols + c];
  return out;
}

Eigen::MatrixXcd UncertaintyInstance::as_complex_matrix() const {
  Eigen::MatrixXcd out(shape_.rows, shape_.cols);
  const bool interleaved = shape_.kind == ShapeKind::kComplexMatrix;
  for (std::size_t r = 0; r < shape_.rows; ++r) {
    for (std::size_t c = 0; c < shape_.cols; ++c) {
      const std::size_t k = r * shape_.cols + c;
      out(r, c) = interleaved ? std::complex<double>(coords_[2 * k], coords_[2 * k + 1])
                              : std::complex<double>(coords_[k], 0.0);
    }
  }
  return out;
}

double norm(std::span<const double> coords, NormKind kind) {
  if (coords.empty()) raise(ErrorKind::kInvalidInstance, "norm of empty coordinate vector");
  switch (kind) {
    case NormKind::kL1: {
      double s = 0.0;
      for (double x : coords) s += std::abs(x);
      return s;
    }
    case NormKind::kL2: {
      // Scaled accumulation keeps the result finite for huge or tiny entries.
      double scale = 0.0;
      for (double x : coords) scale = std::max(scale, std::abs(x));
      if (scale == 0.0) return 0.0;
      double s = 0.0;
      for (double x : coords) {
        const double y = x / scale;
        s += y * y;
      }
      return scale * std::sqrt(s);
    }
    case NormKind::kLinf: {
      double m = 0.0;
      for (double x : coords) m = std::max(m, std::abs(x));
      return m;
    }
  }
  raise(ErrorKind::kInvalidArgument, "unknown norm kind");
}

double norm(const UncertaintyInstance& delta, NormKind kind) { return norm(delta.coords(), kind); }

DirectionSample::DirectionSample(UncertaintyInstance instance, NormKind norm_kind)
    : instance_(std::move(instance)), norm_(norm_kind) {
  const double n = norm(instance_, norm_);
  if (std::abs(n - 1.0) > 1e-12) {
    raise(ErrorKind::kInvalidInstance, "direction sample has norm " + std::to_string(n));
  }
}

namespace {

void normalize(std::vector<double>& v, NormKind kind) {
  const double n = norm(v, kind);
  for (double& x : v) x /= n;
}

}  // namespace

DirectionSample sample_surface(const Shape& shape, NormKind kind, SeededStream& rng) {
  const std::size_t d = shape.dimension();
  if (d == 0) raise(ErrorKind::kInvalidDimension, "cannot sample a 0-dimensional sphere");

  std::vector<double> v(d);
  switch (kind) {
    case NormKind::kL2: {
      double n = 0.0;
      do {
        for (double& x : v) x = rng.normal();
        n = norm(v, NormKind::kL2);
      } while (n == 0.0);
      normalize(v, kind);
      break;
    }
    case NormKind::kLinf: {
      // The cone measure of the cube puts equal mass on each of the 2d faces
      // and is uniform within a face.
      const std::uint64_t face = rng.below(2 * d);
      for (double& x : v) x = rng.uniform(-1.0, 1.0);
      v[face / 2] = (face % 2 == 0) ? 1.0 : -1.0;
      break;
    }
    case NormKind::kL1: {
      // Normalized i.i.d. exponentials are uniform on the simplex; random
      // signs pick the orthant.
      for (double& x : v) {
        const double e = rng.exponential();
        x = (rng.next_u64() >> 63) ? -e : e;
      }
      normalize(v, kind);
      break;
    }
  }
  return DirectionSample(UncertaintyInstance(shape, std::move(v)), kind);
}

DirectionSample sample_surface(std::size_t d, NormKind kind, SeededStream& rng) {
  return sample_surface(Shape::vector(d), kind, rng);
}

UncertaintyInstance scale(const DirectionSample& direction, double rho) {
  if (!(rho >= 0.0)) raise(ErrorKind::kInvalidRadius, "negative radius " + std::to_string(rho));
  const auto coords = direction.instance().coords();
  std::vector<double> out(coords.begin(), coords.end());
  for (double& x : out) x *= rho;
  return UncertaintyInstance(direction.instance().shape(), std::move(out));
}

}  // namespace probrob

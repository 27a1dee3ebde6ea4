#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace probrob {

enum class GridScheme { kUniform, kGeometric };

std::string_view to_string(GridScheme scheme);
GridScheme parse_scheme(std::string_view name);

/// Grid indices are 1-based throughout (1..m), matching the segment tables.
using GridIndex = std::size_t;

/// Radii a/lambda = r_1 < ... < r_m = a.
class RadiusGrid {
 public:
  RadiusGrid(GridScheme scheme, double lambda, double a, std::size_t m);

  GridScheme scheme() const noexcept { return scheme_; }
  double lambda() const noexcept { return lambda_; }
  double a() const noexcept { return a_; }
  std::size_t size() const noexcept { return radii_.size(); }
  const std::vector<double>& radii() const noexcept { return radii_; }

  /// r_i for 1 <= i <= m.
  double radius(GridIndex i) const { return radii_.at(i - 1); }
  double first() const noexcept { return radii_.front(); }
  double last() const noexcept { return radii_.back(); }

 private:
  GridScheme scheme_;
  double lambda_;
  double a_;
  std::vector<double> radii_;
};

RadiusGrid build_grid(GridScheme scheme, double lambda, double a, std::size_t m);

/// Smallest j with r_j >= R, computed in O(1) from the closed-form inverse of
/// the gridding and then corrected against the neighbouring knots so that it
/// agrees exactly with a linear scan.
GridIndex locate(const RadiusGrid& grid, double radius);

/// Number of grid points that keeps linear interpolation of the robustness
/// curve within eps of the true curve on every cell.
std::size_t choose_m(GridScheme scheme, double lambda, double eps);

/// Expected number of indicator evaluations per direction for radial sampling
/// on the grid; strictly below 1 + ln(lambda).
double predict_meq(GridScheme scheme, double lambda, std::size_t m);

/// Grid size needed by direct gridding of the classical (uniform-ball)
/// measure: smallest integer m >= 1 + 2 (lambda - 1) d / eps.
std::size_t baseline_m_bound(double lambda, std::size_t d, double eps);

/// Reuse bound on equivalent grid points for the classical measure, 1 + d ln(lambda).
double baseline_meq_bound(double lambda, std::size_t d);

}  // namespace probrob

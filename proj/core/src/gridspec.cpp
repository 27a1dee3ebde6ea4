#include "probrob/gridspec.hpp"

#include <cmath>
#include <string>

#include "probrob/error.hpp"

namespace probrob {

std::string_view to_string(GridScheme scheme) {
  return scheme == GridScheme::kUniform ? "uniform" : "geometric";
}

GridScheme parse_scheme(std::string_view name) {
  if (name == "uniform") return GridScheme::kUniform;
  if (name == "geometric") return GridScheme::kGeometric;
  raise(ErrorKind::kInvalidArgument, "unknown grid scheme '" + std::string(name) + "'");
}

namespace {

void check_lambda(double lambda) {
  if (!(lambda > 1.0) || !std::isfinite(lambda)) {
    raise(ErrorKind::kInvalidGrid, "lambda must be > 1, got " + std::to_string(lambda));
  }
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    raise(ErrorKind::kInvalidTolerance, "tolerance must lie in (0,1), got " + std::to_string(eps));
  }
}

}  // namespace

RadiusGrid::RadiusGrid(GridScheme scheme, double lambda, double a, std::size_t m)
    : scheme_(scheme), lambda_(lambda), a_(a) {
  check_lambda(lambda);
  if (!(a > 0.0) || !std::isfinite(a)) {
    raise(ErrorKind::kInvalidGrid, "a must be > 0, got " + std::to_string(a));
  }
  if (m < 2) raise(ErrorKind::kInvalidGrid, "m must be >= 2, got " + std::to_string(m));

  radii_.resize(m);
  const double lo = a / lambda;
  const double steps = static_cast<double>(m - 1);
  if (scheme == GridScheme::kUniform) {
    const double h = (a - lo) / steps;
    for (std::size_t i = 0; i < m; ++i) radii_[i] = lo + static_cast<double>(i) * h;
  } else {
    const double log_lambda = std::log(lambda);
    for (std::size_t i = 0; i < m; ++i) {
      radii_[i] = a * std::exp(-log_lambda * static_cast<double>(m - 1 - i) / steps);
    }
  }
  radii_.front() = lo;
  radii_.back() = a;
  for (std::size_t i = 1; i < m; ++i) {
    if (!(radii_[i] > radii_[i - 1])) {
      raise(ErrorKind::kInvalidGrid, "grid is not strictly increasing in floating point");
    }
  }
}

RadiusGrid build_grid(GridScheme scheme, double lambda, double a, std::size_t m) {
  return RadiusGrid(scheme, lambda, a, m);
}

GridIndex locate(const RadiusGrid& grid, double radius) {
  const auto& r = grid.radii();
  const std::size_t m = r.size();
  if (!(radius >= 0.0) || radius > r.back()) {
    raise(ErrorKind::kOutOfRange, "radius " + std::to_string(radius) + " outside [0, " +
                                      std::to_string(r.back()) + "]");
  }
  if (radius <= r.front()) return 1;

  double estimate;
  if (grid.scheme() == GridScheme::kUniform) {
    const double h = (grid.a() - r.front()) / static_cast<double>(m - 1);
    estimate = 1.0 + std::ceil((radius - r.front()) / h);
  } else {
    estimate = 1.0 + std::ceil(static_cast<double>(m - 1) *
                               (1.0 + std::log(radius / grid.a()) / std::log(grid.lambda())));
  }
  if (!(estimate >= 1.0)) estimate = 1.0;
  if (estimate > static_cast<double>(m)) estimate = static_cast<double>(m);
  auto j = static_cast<GridIndex>(estimate);

  // Rounding in the closed form can land one knot off at cell boundaries.
  while (j > 1 && r[j - 2] >= radius) --j;
  while (j < m && r[j - 1] < radius) ++j;
  return j;
}

std::size_t choose_m(GridScheme scheme, double lambda, double eps) {
  check_eps(eps);
  check_lambda(lambda);
  const double cells = scheme == GridScheme::kUniform
                           ? 2.0 * (lambda - 1.0) / eps
                           : std::log(lambda) / std::log1p(eps / 2.0);
  return 2 + static_cast<std::size_t>(std::floor(cells));
}

double predict_meq(GridScheme scheme, double lambda, std::size_t m) {
  check_lambda(lambda);
  if (m < 2) raise(ErrorKind::kInvalidGrid, "m must be >= 2");
  const double steps = static_cast<double>(m - 1);
  if (scheme == GridScheme::kGeometric) {
    return 1.0 - steps * std::expm1(-std::log(lambda) / steps);
  }
  // m - sum(1 - 1/(c + i)) rewritten as 1 + sum 1/(c + i).
  const double c = steps / (lambda - 1.0);
  double sum = 0.0;
  for (std::size_t i = m - 1; i >= 1; --i) sum += 1.0 / (c + static_cast<double>(i));
  return 1.0 + sum;
}

std::size_t baseline_m_bound(double lambda, std::size_t d, double eps) {
  check_eps(eps);
  check_lambda(lambda);
  if (d < 1) raise(ErrorKind::kInvalidDimension, "d must be >= 1");
  const double bound = 1.0 + 2.0 * (lambda - 1.0) * static_cast<double>(d) / eps;
  // Values within floating-point noise of an integer are taken as that integer.
  const double nearest = std::round(bound);
  if (std::abs(bound - nearest) <= 1e-9 * bound) return static_cast<std::size_t>(nearest);
  return static_cast<std::size_t>(std::ceil(bound));
}

double baseline_meq_bound(double lambda, std::size_t d) {
  check_lambda(lambda);
  return 1.0 + static_cast<double>(d) * std::log(lambda);
}

}  // namespace probrob

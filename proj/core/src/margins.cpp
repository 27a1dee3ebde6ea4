#include "probrob/margins.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "probrob/error.hpp"

namespace probrob {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // 1 / golden ratio

struct Extremum {
  double x;
  double value;
};

/// Golden-section search for the maximum of f on [lo, hi].
template <class F>
Extremum golden_maximize(F&& f, double lo, double hi, double abs_tol) {
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > abs_tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? Extremum{x1, f1} : Extremum{x2, f2};
}

double second_singular_value(const Eigen::MatrixXd& m) {
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
  return sv.size() >= 2 ? sv(1) : 0.0;
}

Eigen::MatrixXd real_block(const Eigen::MatrixXd& re, const Eigen::MatrixXd& im, double gamma) {
  const auto p = re.rows();
  const auto q = re.cols();
  Eigen::MatrixXd block(2 * p, 2 * q);
  block << re, -gamma * im, im / gamma, re;
  return block;
}

void require_nominal(const LtiPlant& plant, const PoleRegion& region) {
  if (!all_in_region(eigenvalues(plant.a()), region, 0.0)) {
    raise(ErrorKind::kPrecondition, "nominal system has poles outside the region");
  }
}

/// Boundary parameters: the requested grid plus points aligned with the
/// nominal poles, which is where resonance peaks sit.
std::vector<double> boundary_parameters(const LtiPlant& plant, const PoleRegion& region,
                                        const MarginOptions& options) {
  const std::size_t count = std::max<std::size_t>(options.grid_points, 2);
  std::vector<double> params;
  params.reserve(count + plant.states() + 1);
  const ComplexVector poles = eigenvalues(plant.a());
  if (region.kind() == PoleRegion::Kind::kHalfPlane) {
    params.push_back(0.0);
    const double log_lo = std::log(options.omega_min);
    const double log_hi = std::log(options.omega_max);
    for (std::size_t k = 0; k < count; ++k) {
      const double u = static_cast<double>(k) / static_cast<double>(count - 1);
      params.push_back(std::exp(log_lo + u * (log_hi - log_lo)));
    }
    for (Eigen::Index i = 0; i < poles.size(); ++i) {
      if (poles[i].imag() > 0.0) params.push_back(poles[i].imag());
    }
  } else {
    for (std::size_t k = 0; k < count; ++k) {
      params.push_back(std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(count - 1));
    }
    for (Eigen::Index i = 0; i < poles.size(); ++i) {
      const double angle = std::arg(poles[i]);
      if (angle > 0.0) params.push_back(angle);
    }
  }
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());
  return params;
}

/// sup of f over the boundary parameters, refined by golden section in the
/// cells adjacent to the best sample.
template <class F>
Extremum boundary_supremum(F&& f, const std::vector<double>& params) {
  std::size_t best = 0;
  double best_value = -1.0;
  for (std::size_t k = 0; k < params.size(); ++k) {
    const double v = f(params[k]);
    if (v > best_value) {
      best_value = v;
      best = k;
    }
  }
  Extremum result{params[best], best_value};
  const double lo = params[best > 0 ? best - 1 : 0];
  const double hi = params[std::min(best + 1, params.size() - 1)];
  if (hi > lo) {
    const Extremum refined = golden_maximize(f, lo, hi, 1e-10 * std::max(1.0, hi));
    if (refined.value > result.value) result = refined;
  }
  return result;
}

}  // namespace

double max_singular_value(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}

std::pair<double, double> real_mu_bound(const Eigen::MatrixXcd& m, const MarginOptions& options) {
  const Eigen::MatrixXd re = m.real();
  const Eigen::MatrixXd im = m.imag();
  const double scale = std::max(re.norm(), im.norm());
  if (scale == 0.0) return {0.0, 1.0};
  if (im.norm() <= 1e-14 * scale) {
    return {second_singular_value(real_block(re, im, 1.0)), 1.0};
  }
  auto objective = [&](double log_gamma) {
    return -second_singular_value(real_block(re, im, std::exp(log_gamma)));
  };
  const double log_lo = std::log(options.gamma_min);
  const Extremum best = golden_maximize(objective, log_lo, 0.0, options.gamma_rel_tol);
  double value = -best.value;
  double gamma = std::exp(best.x);
  for (double endpoint : {0.0, log_lo}) {
    const double v = -objective(endpoint);
    if (v < value) {
      value = v;
      gamma = std::exp(endpoint);
    }
  }
  return {value, gamma};
}

MarginResult complex_margin(const LtiPlant& plant, const PoleRegion& region,
                            const MarginOptions& options) {
  require_nominal(plant, region);
  auto gain = [&](double t) {
    return max_singular_value(plant.frequency_response(region.boundary_point(t)));
  };
  const Extremum sup = boundary_supremum(gain, boundary_parameters(plant, region, options));
  if (!(sup.value > 0.0)) raise(ErrorKind::kPrecondition, "M(s) vanishes on the boundary");
  return MarginResult{1.0 / sup.value, MarginKind::kComplex, sup.x, 1.0};
}

MarginResult real_margin(const LtiPlant& plant, const PoleRegion& region,
                         const MarginOptions& options) {
  require_nominal(plant, region);
  auto bound = [&](double t) {
    return real_mu_bound(plant.frequency_response(region.boundary_point(t)), options).first;
  };
  const Extremum sup = boundary_supremum(bound, boundary_parameters(plant, region, options));
  if (!(sup.value > 0.0)) {
    raise(ErrorKind::kPrecondition, "no real perturbation reaches the boundary");
  }
  const double gamma =
      real_mu_bound(plant.frequency_response(region.boundary_point(sup.x)), options).second;
  // The bound never exceeds sigma_max pointwise, but the two suprema are
  // located by separate searches; keep r_R >= r_C exact.
  const double complex_value = complex_margin(plant, region, options).value;
  return MarginResult{std::max(1.0 / sup.value, complex_value), MarginKind::kReal, sup.x, gamma};
}

}  // namespace probrob

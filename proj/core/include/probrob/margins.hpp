#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "probrob/lti.hpp"

namespace probrob {

enum class MarginKind { kComplex, kReal };

struct MarginResult {
  double value = 0.0;
  MarginKind kind = MarginKind::kComplex;
  /// Boundary parameter of the worst point: omega for the half-plane
  /// (s = sigma_max + j omega), angle for the disk.
  double frequency_at_sup = 0.0;
  /// Minimizing scaling of the real-margin block matrix; 1 for complex margins.
  double gamma_at_inf = 1.0;
};

struct MarginOptions {
  /// Boundary samples before refinement.
  std::size_t grid_points = 2048;
  /// Frequency band swept for half-plane regions, rad/s.
  double omega_min = 1e-3;
  double omega_max = 1e3;
  /// Lower end of the gamma search interval.
  double gamma_min = 1e-6;
  double gamma_rel_tol = 1e-8;
};

/// Largest singular value.
double max_singular_value(const Eigen::MatrixXcd& m);

/// inf over gamma in [gamma_min, 1] of the second largest singular value of
/// [[Re M, -gamma Im M], [Im M / gamma, Re M]], by golden-section search on
/// log gamma.  Returns (value, gamma).
std::pair<double, double> real_mu_bound(const Eigen::MatrixXcd& m,
                                        const MarginOptions& options = {});

/// 1 / sup over the region boundary of sigma_max(M(s)).
MarginResult complex_margin(const LtiPlant& plant, const PoleRegion& region,
                            const MarginOptions& options = {});

/// 1 / sup over the boundary of the real-structured bound above.
MarginResult real_margin(const LtiPlant& plant, const PoleRegion& region,
                         const MarginOptions& options = {});

}  // namespace probrob

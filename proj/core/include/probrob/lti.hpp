#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace probrob {

/// Admissible pole locations.  Membership is strict and a point closer than
/// `boundary_band` to the boundary counts as outside.
class PoleRegion {
 public:
  enum class Kind { kHalfPlane, kDisk };

  static PoleRegion half_plane(double sigma_max = 0.0);
  static PoleRegion disk(double rho_max = 1.0);

  Kind kind() const noexcept { return kind_; }
  double sigma_max() const noexcept { return bound_; }
  double rho_max() const noexcept { return bound_; }

  bool contains(std::complex<double> s, double boundary_band = 1e-9) const noexcept;
  /// Signed distance to the boundary, positive inside.
  double interior_distance(std::complex<double> s) const noexcept;
  /// Boundary point for a parameter: sigma_max + j*t for the half-plane,
  /// rho_max * exp(j*t) for the disk.
  std::complex<double> boundary_point(double t) const noexcept;

 private:
  PoleRegion(Kind kind, double bound) : kind_(kind), bound_(bound) {}

  Kind kind_;
  double bound_;
};

using ComplexVector = Eigen::VectorXcd;

ComplexVector eigenvalues(const Eigen::MatrixXd& a);
ComplexVector eigenvalues(const Eigen::MatrixXcd& a);

bool all_in_region(const ComplexVector& poles, const PoleRegion& region,
                   double boundary_band = 1e-9) noexcept;

/// M(s) = C (sI - A)^{-1} B in an M-Delta loop; the perturbed state matrix is
/// A + B Delta C.
class LtiPlant {
 public:
  LtiPlant(Eigen::MatrixXd a, Eigen::MatrixXd b, Eigen::MatrixXd c);

  const Eigen::MatrixXd& a() const noexcept { return a_; }
  const Eigen::MatrixXd& b() const noexcept { return b_; }
  const Eigen::MatrixXd& c() const noexcept { return c_; }
  std::size_t states() const noexcept { return static_cast<std::size_t>(a_.rows()); }
  /// Delta is delta_rows() x delta_cols() = (inputs of B) x (outputs of C).
  std::size_t delta_rows() const noexcept { return static_cast<std::size_t>(b_.cols()); }
  std::size_t delta_cols() const noexcept { return static_cast<std::size_t>(c_.rows()); }

  Eigen::MatrixXcd frequency_response(std::complex<double> s) const;

 private:
  Eigen::MatrixXd a_, b_, c_;
};

/// Rational transfer function; coefficients are highest power first.
struct TransferFunction {
  std::vector<double> num;
  std::vector<double> den;

  std::complex<double> operator()(std::complex<double> s) const;
};

std::vector<double> poly_mul(const std::vector<double>& p, const std::vector<double>& q);
std::vector<double> poly_add(const std::vector<double>& p, const std::vector<double>& q);
/// Roots via the companion matrix.
ComplexVector poly_roots(const std::vector<double>& p);

/// L / (1 + L) for an open loop L = num/den.
TransferFunction unity_feedback(const TransferFunction& open_loop);

/// Single-input single-output state space x' = Ax + Bu, y = Cx + Du.
struct StateSpace {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::RowVectorXd c;
  double d = 0.0;
};

/// Controllable canonical realization of a proper transfer function.
StateSpace to_state_space(const TransferFunction& tf);

struct StepMetrics {
  double final_value = 0.0;
  double rise_time = 0.0;      ///< 10% -> 90% of the final value.
  double settling_time = 0.0;  ///< Last time outside the +/-2% band.
  double overshoot = 0.0;      ///< (peak - final) / final, floored at 0.
};

/// Unit-step response on [0, horizon] with `steps` exact zero-order-hold
/// steps; crossing times are linearly interpolated between samples.  The
/// final value is the DC gain.  The system must be asymptotically stable.
StepMetrics step_metrics(const StateSpace& sys, double horizon, std::size_t steps);

}  // namespace probrob

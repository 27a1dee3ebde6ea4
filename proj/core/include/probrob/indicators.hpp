#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "probrob/lti.hpp"
#include "probrob/uncsample.hpp"

namespace probrob {

/// Robustness requirement I(Delta) in {0, 1}.  Indicators are immutable and
/// may be evaluated concurrently from several threads.
class Indicator {
 public:
  using Predicate = std::function<bool(const UncertaintyInstance&)>;

  Indicator(Predicate predicate, std::string description);

  /// 1 if the requirement holds for delta, 0 otherwise.
  int operator()(const UncertaintyInstance& delta) const;

  const std::string& description() const noexcept { return description_; }

 private:
  std::shared_ptr<const Predicate> predicate_;
  std::string description_;
};

/// 1 iff every eigenvalue of A + B Delta C lies in the region.  Delta may be a
/// real or complex (delta_rows x delta_cols) block, or a vector with that many
/// entries read row-major.
Indicator region_stability(const LtiPlant& plant, const PoleRegion& region);

/// 1 iff A0 + sum_l q_l A_l has all eigenvalues in the region.
Indicator affine_stability(Eigen::MatrixXd nominal, std::vector<Eigen::MatrixXd> terms,
                           const PoleRegion& region);

/// Concentric-layer example: with r_l = l / layers, the requirement fails
/// exactly for ||Delta|| in [r_{i-1}, r_i) or [r_{j-1}, 1).
struct LayeredExample {
  std::size_t layers;
  std::size_t i;
  std::size_t j;

  LayeredExample(std::size_t layers, std::size_t i, std::size_t j);

  bool satisfied(double radius) const noexcept;
  /// Success probability on the sphere of the given radius (0 or 1).
  double phi(double radius) const noexcept;
  /// Closed-form new measure for radius rho > 0 (U on the sphere, R uniform
  /// on [0, rho]).
  double scriptp(double rho) const noexcept;
  /// Closed-form classical measure for Delta uniform in the ball of radius
  /// rho in dimension d.
  double bbp(double rho, std::size_t d) const noexcept;
  /// Radii where phi jumps.
  std::vector<double> discontinuities() const;
};

Indicator layered_oracle(std::size_t layers, std::size_t i, std::size_t j,
                         NormKind norm = NormKind::kL2);

/// A(q) = -10 I + (sum_l q_l sqrt(l)) W with W the all-ones k x k matrix.
/// Its eigenvalues are -10 (multiplicity k-1) and -10 + k sum_l q_l sqrt(l),
/// so Hurwitz stability reduces to k sum_l q_l sqrt(l) < 10.
Indicator rank_one_oracle(std::size_t k);

/// Nominal matrix and per-coordinate terms of the same family, for the
/// eigenvalue path.
struct AffineFamily {
  Eigen::MatrixXd nominal;
  std::vector<Eigen::MatrixXd> terms;
};
AffineFamily rank_one_family(std::size_t k);

/// Closed loop transfer function assembled for an uncertainty instance.
using LoopBuilder = std::function<TransferFunction(const UncertaintyInstance&)>;

/// Unity feedback of the lead compensator (s+2)/(s+10) around
/// 800(1 + 0.1 d1) / (s (s + 4 + 0.2 d2)(s + 6 + 0.3 d3)).
LoopBuilder servo_loop();

/// 1 iff all closed-loop poles lie in the region.
Indicator loop_stability(LoopBuilder loop, const PoleRegion& region);

struct StepLimits {
  double rise_max;
  double settle_max;
  double overshoot_max;
};

/// 0 if the closed loop is not asymptotically stable; otherwise 1 iff the
/// unit-step rise time, settling time and overshoot are all within limits.
/// The response is simulated on [0, 5 settle_max] with 2000 exact steps.
Indicator step_spec(LoopBuilder loop, StepLimits limits);

}  // namespace probrob

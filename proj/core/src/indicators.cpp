#include "probrob/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "probrob/error.hpp"

namespace probrob {

Indicator::Indicator(Predicate predicate, std::string description)
    : predicate_(std::make_shared<const Predicate>(std::move(predicate))),
      description_(std::move(description)) {
  if (!*predicate_) raise(ErrorKind::kInvalidArgument, "indicator without a predicate");
}

int Indicator::operator()(const UncertaintyInstance& delta) const {
  return (*predicate_)(delta) ? 1 : 0;
}

namespace {

Eigen::MatrixXcd complex_block(const UncertaintyInstance& delta, std::size_t rows,
                               std::size_t cols) {
  const Shape& s = delta.shape();
  const bool as_vector = s.kind == ShapeKind::kVector && s.rows == rows * cols;
  const bool as_block = s.kind != ShapeKind::kVector && s.rows == rows && s.cols == cols;
  if (!as_vector && !as_block) {
    raise(ErrorKind::kDimensionMismatch, "uncertainty shape does not match a " +
                                             std::to_string(rows) + "x" + std::to_string(cols) +
                                             " block");
  }
  if (as_vector) {
    Eigen::MatrixXcd out(rows, cols);
    const auto q = delta.coords();
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) out(r, c) = q[r * cols + c];
    return out;
  }
  return delta.as_complex_matrix();
}

}  // namespace

Indicator region_stability(const LtiPlant& plant, const PoleRegion& region) {
  auto predicate = [plant, region](const UncertaintyInstance& delta) {
    if (delta.shape().kind == ShapeKind::kComplexMatrix) {
      const Eigen::MatrixXcd block =
          complex_block(delta, plant.delta_rows(), plant.delta_cols());
      const Eigen::MatrixXcd closed = plant.a().cast<std::complex<double>>() +
                                      plant.b().cast<std::complex<double>>() * block *
                                          plant.c().cast<std::complex<double>>();
      return all_in_region(eigenvalues(closed), region);
    }
    const Eigen::MatrixXd block =
        complex_block(delta, plant.delta_rows(), plant.delta_cols()).real();
    const Eigen::MatrixXd closed = plant.a() + plant.b() * block * plant.c();
    return all_in_region(eigenvalues(closed), region);
  };
  return Indicator(std::move(predicate), "poles of A + B*Delta*C in region");
}

Indicator affine_stability(Eigen::MatrixXd nominal, std::vector<Eigen::MatrixXd> terms,
                           const PoleRegion& region) {
  for (const auto& t : terms) {
    if (t.rows() != nominal.rows() || t.cols() != nominal.cols()) {
      raise(ErrorKind::kDimensionMismatch, "affine term size differs from nominal matrix");
    }
  }
  auto predicate = [nominal = std::move(nominal), terms = std::move(terms),
                    region](const UncertaintyInstance& delta) {
    const auto q = delta.coords();
    if (q.size() != terms.size()) {
      raise(ErrorKind::kDimensionMismatch, "expected " + std::to_string(terms.size()) +
                                               " parameters, got " + std::to_string(q.size()));
    }
    Eigen::MatrixXd a = nominal;
    for (std::size_t l = 0; l < q.size(); ++l) a += q[l] * terms[l];
    return all_in_region(eigenvalues(a), region);
  };
  return Indicator(std::move(predicate), "poles of A0 + sum q_l A_l in region");
}

LayeredExample::LayeredExample(std::size_t layers_, std::size_t i_, std::size_t j_)
    : layers(layers_), i(i_), j(j_) {
  if (!(2 <= i + 1 && i + 1 < j && j < layers)) {
    raise(ErrorKind::kInvalidArgument, "layered example needs 2 <= i+1 < j < layers");
  }
}

bool LayeredExample::satisfied(double radius) const noexcept {
  const double n = static_cast<double>(layers);
  const double inner_lo = static_cast<double>(i - 1) / n;
  const double inner_hi = static_cast<double>(i) / n;
  const double outer_lo = static_cast<double>(j - 1) / n;
  if (radius >= inner_lo && radius < inner_hi) return false;
  if (radius >= outer_lo && radius < 1.0) return false;
  return true;
}

double LayeredExample::phi(double radius) const noexcept { return satisfied(radius) ? 1.0 : 0.0; }

double LayeredExample::scriptp(double rho) const noexcept {
  const double n = static_cast<double>(layers);
  const double inner_lo = static_cast<double>(i - 1) / n;
  const double inner_hi = static_cast<double>(i) / n;
  const double outer_lo = static_cast<double>(j - 1) / n;
  const double good = std::min(rho, inner_lo) +
                      std::max(0.0, std::min(rho, outer_lo) - inner_hi) +
                      std::max(0.0, rho - 1.0);
  return good / rho;
}

double LayeredExample::bbp(double rho, std::size_t d) const noexcept {
  const double n = static_cast<double>(layers);
  const double dd = static_cast<double>(d);
  auto frac = [&](double r) { return std::pow(std::min(r, rho) / rho, dd); };
  const double inner_lo = static_cast<double>(i - 1) / n;
  const double inner_hi = static_cast<double>(i) / n;
  const double outer_lo = static_cast<double>(j - 1) / n;
  double good = frac(inner_lo);
  if (rho > inner_hi) good += frac(outer_lo) - frac(inner_hi);
  if (rho > 1.0) good += 1.0 - frac(1.0);
  return std::clamp(good, 0.0, 1.0);
}

std::vector<double> LayeredExample::discontinuities() const {
  const double n = static_cast<double>(layers);
  return {static_cast<double>(i - 1) / n, static_cast<double>(i) / n,
          static_cast<double>(j - 1) / n, 1.0};
}

Indicator layered_oracle(std::size_t layers, std::size_t i, std::size_t j, NormKind norm_kind) {
  LayeredExample example(layers, i, j);
  auto predicate = [example, norm_kind](const UncertaintyInstance& delta) {
    return example.satisfied(norm(delta, norm_kind));
  };
  return Indicator(std::move(predicate), "layered example (" + std::to_string(layers) + ", " +
                                             std::to_string(i) + ", " + std::to_string(j) + ")");
}

Indicator rank_one_oracle(std::size_t k) {
  if (k < 1) raise(ErrorKind::kInvalidArgument, "k must be >= 1");
  auto predicate = [k](const UncertaintyInstance& delta) {
    const auto q = delta.coords();
    if (q.size() != k * k) {
      raise(ErrorKind::kDimensionMismatch,
            "rank-one system of size " + std::to_string(k) + " needs " +
                std::to_string(k * k) + " parameters, got " + std::to_string(q.size()));
    }
    double s = 0.0;
    for (std::size_t l = 0; l < q.size(); ++l) s += q[l] * std::sqrt(static_cast<double>(l + 1));
    return static_cast<double>(k) * s < 10.0;
  };
  return Indicator(std::move(predicate), "rank-one system k=" + std::to_string(k));
}

AffineFamily rank_one_family(std::size_t k) {
  if (k < 1) raise(ErrorKind::kInvalidArgument, "k must be >= 1");
  AffineFamily family;
  family.nominal = -10.0 * Eigen::MatrixXd::Identity(k, k);
  const Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(k, k);
  family.terms.reserve(k * k);
  for (std::size_t l = 1; l <= k * k; ++l) {
    family.terms.push_back(std::sqrt(static_cast<double>(l)) * ones);
  }
  return family;
}

LoopBuilder servo_loop() {
  return [](const UncertaintyInstance& delta) {
    const auto q = delta.coords();
    if (q.size() != 3) {
      raise(ErrorKind::kDimensionMismatch, "servo loop needs 3 parameters, got " +
                                               std::to_string(q.size()));
    }
    const std::vector<double> compensator_num{1.0, 2.0};
    const std::vector<double> compensator_den{1.0, 10.0};
    const std::vector<double> plant_num{800.0 * (1.0 + 0.1 * q[0])};
    const std::vector<double> plant_den =
        poly_mul(poly_mul({1.0, 0.0}, {1.0, 4.0 + 0.2 * q[1]}), {1.0, 6.0 + 0.3 * q[2]});
    const TransferFunction open_loop{poly_mul(compensator_num, plant_num),
                                     poly_mul(compensator_den, plant_den)};
    return unity_feedback(open_loop);
  };
}

Indicator loop_stability(LoopBuilder loop, const PoleRegion& region) {
  auto predicate = [loop = std::move(loop), region](const UncertaintyInstance& delta) {
    return all_in_region(poly_roots(loop(delta).den), region);
  };
  return Indicator(std::move(predicate), "closed-loop poles in region");
}

Indicator step_spec(LoopBuilder loop, StepLimits limits) {
  if (!(limits.rise_max > 0.0 && limits.settle_max > 0.0 && limits.overshoot_max >= 0.0)) {
    raise(ErrorKind::kInvalidArgument, "step limits must be positive");
  }
  auto predicate = [loop = std::move(loop), limits](const UncertaintyInstance& delta) {
    const TransferFunction closed = loop(delta);
    if (!all_in_region(poly_roots(closed.den), PoleRegion::half_plane(0.0))) return false;
    const StepMetrics metrics =
        step_metrics(to_state_space(closed), 5.0 * limits.settle_max, 2000);
    return metrics.rise_time <= limits.rise_max && metrics.settling_time <= limits.settle_max &&
           metrics.overshoot <= limits.overshoot_max;
  };
  return Indicator(std::move(predicate), "step response rise/settle/overshoot limits");
}

}  // namespace probrob

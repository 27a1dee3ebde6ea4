#include "probrob/lti.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "probrob/error.hpp"

namespace probrob {

PoleRegion PoleRegion::half_plane(double sigma_max) {
  if (!std::isfinite(sigma_max)) raise(ErrorKind::kInvalidArgument, "sigma_max must be finite");
  return PoleRegion(Kind::kHalfPlane, sigma_max);
}

PoleRegion PoleRegion::disk(double rho_max) {
  if (!(rho_max > 0.0) || !std::isfinite(rho_max)) {
    raise(ErrorKind::kInvalidArgument, "rho_max must be > 0");
  }
  return PoleRegion(Kind::kDisk, rho_max);
}

double PoleRegion::interior_distance(std::complex<double> s) const noexcept {
  return kind_ == Kind::kHalfPlane ? bound_ - s.real() : bound_ - std::abs(s);
}

bool PoleRegion::contains(std::complex<double> s, double boundary_band) const noexcept {
  return interior_distance(s) > boundary_band;
}

std::complex<double> PoleRegion::boundary_point(double t) const noexcept {
  if (kind_ == Kind::kHalfPlane) return {bound_, t};
  return std::polar(bound_, t);
}

ComplexVector eigenvalues(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) raise(ErrorKind::kDimensionMismatch, "eigenvalues of non-square matrix");
  if (a.rows() == 0) return {};
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    raise(ErrorKind::kPrecondition, "eigenvalue iteration did not converge");
  }
  return solver.eigenvalues();
}

ComplexVector eigenvalues(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) raise(ErrorKind::kDimensionMismatch, "eigenvalues of non-square matrix");
  if (a.rows() == 0) return {};
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    raise(ErrorKind::kPrecondition, "eigenvalue iteration did not converge");
  }
  return solver.eigenvalues();
}

bool all_in_region(const ComplexVector& poles, const PoleRegion& region,
                   double boundary_band) noexcept {
  for (Eigen::Index i = 0; i < poles.size(); ++i) {
    if (!region.contains(poles[i], boundary_band)) return false;
  }
  return true;
}

LtiPlant::LtiPlant(Eigen::MatrixXd a, Eigen::MatrixXd b, Eigen::MatrixXd c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.rows() == 0 || a_.rows() != a_.cols()) {
    raise(ErrorKind::kDimensionMismatch, "A must be square and non-empty");
  }
  if (b_.rows() != a_.rows() || b_.cols() == 0) {
    raise(ErrorKind::kDimensionMismatch, "B must have as many rows as A");
  }
  if (c_.cols() != a_.cols() || c_.rows() == 0) {
    raise(ErrorKind::kDimensionMismatch, "C must have as many columns as A");
  }
}

Eigen::MatrixXcd LtiPlant::frequency_response(std::complex<double> s) const {
  Eigen::MatrixXcd resolvent = -a_.cast<std::complex<double>>();
  resolvent.diagonal().array() += s;
  const Eigen::MatrixXcd x = resolvent.partialPivLu().solve(b_.cast<std::complex<double>>());
  return c_.cast<std::complex<double>>() * x;
}

std::complex<double> TransferFunction::operator()(std::complex<double> s) const {
  auto horner = [s](const std::vector<double>& p) {
    std::complex<double> acc = 0.0;
    for (double coeff : p) acc = acc * s + coeff;
    return acc;
  };
  return horner(num) / horner(den);
}

std::vector<double> poly_mul(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.empty() || q.empty()) return {};
  std::vector<double> out(p.size() + q.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

std::vector<double> poly_add(const std::vector<double>& p, const std::vector<double>& q) {
  std::vector<double> out(std::max(p.size(), q.size()), 0.0);
  const std::size_t op = out.size() - p.size();
  const std::size_t oq = out.size() - q.size();
  for (std::size_t i = 0; i < p.size(); ++i) out[op + i] += p[i];
  for (std::size_t i = 0; i < q.size(); ++i) out[oq + i] += q[i];
  return out;
}

namespace {

std::vector<double> trim_leading_zeros(std::vector<double> p) {
  auto first = std::find_if(p.begin(), p.end(), [](double c) { return c != 0.0; });
  p.erase(p.begin(), first);
  return p;
}

}  // namespace

ComplexVector poly_roots(const std::vector<double>& poly) {
  const auto p = trim_leading_zeros(poly);
  if (p.empty()) raise(ErrorKind::kInvalidArgument, "roots of the zero polynomial");
  const std::size_t n = p.size() - 1;
  if (n == 0) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t j = 0; j < n; ++j) companion(0, j) = -p[j + 1] / p[0];
  for (std::size_t i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  return eigenvalues(companion);
}

TransferFunction unity_feedback(const TransferFunction& open_loop) {
  return {open_loop.num, poly_add(open_loop.den, open_loop.num)};
}

StateSpace to_state_space(const TransferFunction& tf) {
  const auto den = trim_leading_zeros(tf.den);
  auto num = trim_leading_zeros(tf.num);
  if (den.size() < 2) raise(ErrorKind::kInvalidArgument, "transfer function needs a pole");
  if (num.size() > den.size()) raise(ErrorKind::kInvalidArgument, "improper transfer function");
  if (num.empty()) num = {0.0};

  const std::size_t n = den.size() - 1;
  const double lead = den[0];
  std::vector<double> a(n), b(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) a[i] = den[i + 1] / lead;
  for (std::size_t i = 0; i < num.size(); ++i) b[n + 1 - num.size() + i] = num[i] / lead;

  StateSpace ss;
  ss.a = Eigen::MatrixXd::Zero(n, n);
  ss.b = Eigen::VectorXd::Zero(n);
  ss.c = Eigen::RowVectorXd::Zero(n);
  ss.d = b[0];
  for (std::size_t j = 0; j < n; ++j) ss.a(0, j) = -a[j];
  for (std::size_t i = 1; i < n; ++i) ss.a(i, i - 1) = 1.0;
  ss.b(0) = 1.0;
  for (std::size_t j = 0; j < n; ++j) ss.c(j) = b[j + 1] - b[0] * a[j];
  return ss;
}

StepMetrics step_metrics(const StateSpace& sys, double horizon, std::size_t steps) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (!(horizon > 0.0) || steps < 2) raise(ErrorKind::kInvalidArgument, "bad step horizon");
  const auto n = sys.a.rows();
  const double dt = horizon / static_cast<double>(steps);

  Eigen::MatrixXd augmented = Eigen::MatrixXd::Zero(n + 1, n + 1);
  augmented.topLeftCorner(n, n) = sys.a * dt;
  augmented.topRightCorner(n, 1) = sys.b * dt;
  const Eigen::MatrixXd phi = augmented.exp();
  const Eigen::MatrixXd ad = phi.topLeftCorner(n, n);
  const Eigen::VectorXd bd = phi.topRightCorner(n, 1);

  StepMetrics out;
  out.final_value = sys.d - (sys.c * sys.a.partialPivLu().solve(sys.b))(0);
  if (out.final_value == 0.0 || !std::isfinite(out.final_value)) {
    out.rise_time = out.settling_time = out.overshoot = kInf;
    return out;
  }

  // Normalized response z = y / y_final.
  std::vector<double> z(steps + 1);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  for (std::size_t k = 0; k <= steps; ++k) {
    z[k] = (sys.c.dot(x) + sys.d) / out.final_value;
    x = ad * x + bd;
  }

  auto first_crossing = [&](double level) {
    if (z[0] >= level) return 0.0;
    for (std::size_t k = 1; k <= steps; ++k) {
      if (z[k] >= level) {
        const double frac = (level - z[k - 1]) / (z[k] - z[k - 1]);
        return (static_cast<double>(k - 1) + frac) * dt;
      }
    }
    return kInf;
  };
  const double t10 = first_crossing(0.1);
  const double t90 = first_crossing(0.9);
  out.rise_time = std::isfinite(t90) ? t90 - t10 : kInf;

  constexpr double kBand = 0.02;
  std::size_t last_out = steps + 1;
  for (std::size_t k = steps + 1; k-- > 0;) {
    if (std::abs(z[k] - 1.0) > kBand) {
      last_out = k;
      break;
    }
  }
  if (last_out == steps + 1) {
    out.settling_time = 0.0;
  } else if (last_out == steps) {
    out.settling_time = kInf;
  } else {
    const double e0 = std::abs(z[last_out] - 1.0);
    const double e1 = std::abs(z[last_out + 1] - 1.0);
    const double frac = (e0 - kBand) / (e0 - e1);
    out.settling_time = (static_cast<double>(last_out) + frac) * dt;
  }

  const double peak = *std::max_element(z.begin(), z.end());
  out.overshoot = std::max(0.0, peak - 1.0);
  return out;
}

}  // namespace probrob

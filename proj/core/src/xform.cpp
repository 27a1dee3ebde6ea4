#include "probrob/xform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "probrob/error.hpp"

namespace probrob {

void CurveGrid::validate() const {
  if (n < 1) raise(ErrorKind::kInvalidDimension, "transform dimension n must be >= 1");
  if (radii.empty()) raise(ErrorKind::kInvalidArgument, "empty curve grid");
  if (radii.size() != values.size()) {
    raise(ErrorKind::kInvalidArgument, "curve grid radii and values differ in length");
  }
  if (!(radii.front() > 0.0)) raise(ErrorKind::kInvalidArgument, "curve radii must be positive");
  for (std::size_t k = 1; k < radii.size(); ++k) {
    if (!(radii[k] > radii[k - 1])) {
      raise(ErrorKind::kInvalidArgument, "curve radii must be strictly increasing");
    }
  }
}

namespace {

double clamp_recorded(double raw, TransformDiagnostics* diagnostics) {
  if (diagnostics != nullptr) {
    diagnostics->min_raw = std::min(diagnostics->min_raw, raw);
    diagnostics->max_raw = std::max(diagnostics->max_raw, raw);
  }
  return std::clamp(raw, 0.0, 1.0);
}

}  // namespace

CurveGrid bbp_from_scriptp(const CurveGrid& scriptp, const TransformOptions& options,
                           TransformDiagnostics* diagnostics) {
  scriptp.validate();
  const std::size_t count = scriptp.radii.size();
  const double n = static_cast<double>(scriptp.n);
  const auto& rho = scriptp.radii;
  const auto& p = scriptp.values;

  CurveGrid out{rho, std::vector<double>(count), scriptp.n};
  // Constant head: on [0, rho_1] both measures equal P(rho_1).
  double prev_raw = p[0];
  out.values[0] = clamp_recorded(prev_raw, diagnostics);

  for (std::size_t k = 0; k + 1 < count; ++k) {
    const double r = rho[k];
    const double beta = rho[k + 1];
    const double log_t = std::log(r / beta);
    const double t_n = std::exp(n * log_t);
    const double one_minus_t_n = -std::expm1(n * log_t);

    double cell = 0.0;
    if (scriptp.n > 1) {
      if (options.cell_model == CellModel::kStep) {
        cell = (n - 1.0) * p[k] * one_minus_t_n;
      } else {
        const double mass_lo = r * p[k];
        const double slope = (beta * p[k + 1] - mass_lo) / (beta - r);
        const double one_minus_t_n1 = -std::expm1((n - 1.0) * log_t);
        cell = n * (mass_lo - slope * r) * one_minus_t_n1 / beta +
               (n - 1.0) * slope * one_minus_t_n;
      }
    }
    const double raw = n * p[k + 1] - t_n * (n * p[k] - prev_raw) - cell;
    // The recursion carries the unclamped value; clamping is output only.
    prev_raw = raw;
    out.values[k + 1] = clamp_recorded(raw, diagnostics);
  }
  return out;
}

CurveGrid scriptp_from_bbp(const CurveGrid& bbp, TransformDiagnostics* diagnostics) {
  bbp.validate();
  const std::size_t count = bbp.radii.size();
  const double n = static_cast<double>(bbp.n);
  const auto& rho = bbp.radii;
  const auto& b = bbp.values;

  CurveGrid out{rho, std::vector<double>(count), bbp.n};
  if (bbp.n == 1) {
    for (std::size_t k = 0; k < count; ++k) out.values[k] = clamp_recorded(b[k], diagnostics);
    return out;
  }
  // Same cell model as the forward map: phi is constant on each (r, beta],
  // so beta^n P_bb grows by c (beta^n - r^n) and beta P grows by c (beta - r).
  double prev_raw = b[0];
  out.values[0] = clamp_recorded(prev_raw, diagnostics);
  for (std::size_t k = 0; k + 1 < count; ++k) {
    const double r = rho[k];
    const double beta = rho[k + 1];
    const double log_t = std::log(r / beta);
    const double t_n = std::exp(n * log_t);
    const double one_minus_t_n = -std::expm1(n * log_t);
    const double c = (b[k + 1] - t_n * b[k]) / one_minus_t_n;
    const double raw = (r * prev_raw + c * (beta - r)) / beta;
    prev_raw = raw;
    out.values[k + 1] = clamp_recorded(raw, diagnostics);
  }
  return out;
}

namespace {

/// Sub-interval endpoints of [lo, hi] split at the given interior points.
std::vector<double> breakpoints(double lo, double hi, std::vector<double> interior) {
  std::vector<double> pts{lo};
  std::sort(interior.begin(), interior.end());
  for (double x : interior) {
    if (x > pts.back() && x < hi) pts.push_back(x);
  }
  pts.push_back(hi);
  return pts;
}

template <class F>
double integrate_pieces(F&& f, const std::vector<double>& pts) {
  using boost::math::quadrature::gauss_kronrod;
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    if (pts[k + 1] > pts[k]) {
      // Boost compares an unscaled error estimate against a tolerance scaled
      // by the interval length, so short pieces never converge and recurse
      // to full depth.  Integrating over [0, 1] keeps the two comparable.
      const double lo = pts[k], len = pts[k + 1] - pts[k];
      total += len * gauss_kronrod<double, 15>::integrate(
                         [&](double t) { return f(lo + t * len); }, 0.0, 1.0, 20, 1e-12);
    }
  }
  return total;
}

double checked_phi(const PhiFunction& phi, double rho) {
  const double v = phi.eval(rho);
  if (!(v >= 0.0 && v <= 1.0)) {
    raise(ErrorKind::kCorruptedInput, "phi(" + std::to_string(rho) + ") = " + std::to_string(v) +
                                          " outside [0,1]");
  }
  return v;
}

}  // namespace

double scriptp_from_phi(const PhiFunction& phi, double r) {
  if (!(r > 0.0)) raise(ErrorKind::kInvalidRadius, "radius must be > 0");
  if (!phi.eval) raise(ErrorKind::kInvalidArgument, "phi has no evaluator");
  const auto pts = breakpoints(0.0, r, phi.discontinuities);
  const double integral =
      integrate_pieces([&](double rho) { return checked_phi(phi, rho); }, pts);
  return std::clamp(integral / r, 0.0, 1.0);
}

double bbp_from_phi(const PhiFunction& phi, double r, std::size_t n) {
  if (!(r > 0.0)) raise(ErrorKind::kInvalidRadius, "radius must be > 0");
  if (n < 1) raise(ErrorKind::kInvalidDimension, "n must be >= 1");
  if (!phi.eval) raise(ErrorKind::kInvalidArgument, "phi has no evaluator");
  const double nn = static_cast<double>(n);
  std::vector<double> interior;
  for (double x : phi.discontinuities) {
    if (x > 0.0 && x < r) interior.push_back(std::pow(x / r, nn));
  }
  const auto pts = breakpoints(0.0, 1.0, std::move(interior));
  const double integral = integrate_pieces(
      [&](double v) { return checked_phi(phi, r * std::pow(v, 1.0 / nn)); }, pts);
  return std::clamp(integral, 0.0, 1.0);
}

}  // namespace probrob

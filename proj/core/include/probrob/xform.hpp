#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

namespace probrob {

/// phi(rho) = Pr{ I(rho U) = 1 }, the success probability on the sphere of
/// radius rho.  Declared jump locations let quadrature split the range.
struct PhiFunction {
  std::function<double(double)> eval;
  std::vector<double> discontinuities;
};

/// A robustness curve sampled at increasing radii, for a d = n dimensional
/// uncertainty.  Below the first knot the curve is taken to be constant.
struct CurveGrid {
  std::vector<double> radii;
  std::vector<double> values;
  std::size_t n = 1;

  void validate() const;
};

/// How the new measure is represented inside a knot interval when it is
/// integrated against rho^{n-1}.
enum class CellModel {
  /// rho * P(rho) linear between knots, i.e. phi constant per cell.  Exact
  /// when the jumps of phi fall on knots.
  kLinearMass,
  /// P(rho) held at its left-knot value.
  kStep,
};

struct TransformOptions {
  CellModel cell_model = CellModel::kLinearMass;
};

/// Extremes of the recursion output before it is clamped to [0, 1].
struct TransformDiagnostics {
  double min_raw = std::numeric_limits<double>::infinity();
  double max_raw = -std::numeric_limits<double>::infinity();
};

/// Classical measure from the new one, by the stable forward recursion
///   B(r+h) = n P(r+h) - (r/(r+h))^n [n P(r) - B(r)]
///            - n(n-1)/(r+h)^n * int_r^{r+h} P(rho) rho^{n-1} drho.
CurveGrid bbp_from_scriptp(const CurveGrid& scriptp, const TransformOptions& options = {},
                           TransformDiagnostics* diagnostics = nullptr);

/// New measure from the classical one,
///   P(r+h) = B(r+h)/n + r/(r+h) [P(r) - B(r)/n] + (n-1)/n * 1/(r+h) int_r^{r+h} B,
/// with trapezoid cells for the last integral.
CurveGrid scriptp_from_bbp(const CurveGrid& bbp, TransformDiagnostics* diagnostics = nullptr);

/// (1/r) int_0^r phi.
double scriptp_from_phi(const PhiFunction& phi, double r);

/// (n / r^n) int_0^r phi(rho) rho^{n-1} drho, integrated in v = (rho/r)^n so
/// the weight never underflows.
double bbp_from_phi(const PhiFunction& phi, double r, std::size_t n);

}  // namespace probrob

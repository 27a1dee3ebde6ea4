#pragma once

// Independent oracles for the margin computations, shared by the unit tests
// and the acceptance runner.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "probrob/margins.hpp"
#include "probrob/rng.hpp"

namespace margin_oracles {

using namespace probrob;
using cd = std::complex<double>;

inline LtiPlant scalar_plant(double a, double gain) {
  return LtiPlant(Eigen::MatrixXd::Constant(1, 1, a), Eigen::MatrixXd::Constant(1, 1, gain),
                  Eigen::MatrixXd::Ones(1, 1));
}

// Random plant with 1..5 states and 1..3 inputs/outputs, shifted or scaled
// into the region.
inline LtiPlant random_plant(SeededStream& rng, const PoleRegion& region) {
  const auto n = static_cast<Eigen::Index>(1 + rng.below(5));
  const auto m = static_cast<Eigen::Index>(1 + rng.below(3));
  const auto p = static_cast<Eigen::Index>(1 + rng.below(3));
  Eigen::MatrixXd a(n, n), b(n, m), c(p, n);
  for (auto* mat : {&a, &b, &c})
    for (Eigen::Index i = 0; i < mat->size(); ++i) mat->data()[i] = rng.normal();
  const auto poles = eigenvalues(a);
  if (region.kind() == PoleRegion::Kind::kHalfPlane) {
    double worst = -1e300;
    for (Eigen::Index i = 0; i < poles.size(); ++i) worst = std::max(worst, poles[i].real());
    a -= (worst + 0.05 + rng.uniform()) * Eigen::MatrixXd::Identity(n, n);
  } else {
    double radius = 0;
    for (Eigen::Index i = 0; i < poles.size(); ++i) radius = std::max(radius, std::abs(poles[i]));
    a *= (0.3 + 0.65 * rng.uniform()) / radius;
  }
  return LtiPlant(a, b, c);
}

// Largest singular value through the Hermitian eigenproblem of M^H M, a
// route independent of the SVD used by the library.
inline double sigma_max_by_gram(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

inline std::vector<double> dense_boundary(const PoleRegion& region) {
  std::vector<double> t;
  if (region.kind() == PoleRegion::Kind::kHalfPlane) {
    for (int k = 0; k <= 40000; ++k) t.push_back(std::pow(10.0, -4.0 + 8.0 * k / 40000.0));
    for (int k = 0; k <= 20000; ++k) t.push_back(50.0 * k / 20000.0);
  } else {
    for (int k = 0; k <= 60000; ++k) t.push_back(std::numbers::pi * k / 60000.0);
  }
  return t;
}

// Rank-one perturbation placing an eigenvalue at s: with M(s) = U S V^H,
// Delta = v1 u1^H / sigma1 gives M(s) Delta u1 = u1.
inline Eigen::MatrixXcd destabilizer(const LtiPlant& plant, cd s) {
  const Eigen::MatrixXcd m = plant.frequency_response(s);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixV().col(0) * svd.matrixU().col(0).adjoint() / svd.singularValues()(0);
}

inline bool destabilized(const LtiPlant& plant, const PoleRegion& region, const Eigen::MatrixXcd& delta) {
  const Eigen::MatrixXcd closed = plant.a().cast<cd>() +
                                  plant.b().cast<cd>() * delta * plant.c().cast<cd>();
  const auto poles = eigenvalues(closed);
  for (Eigen::Index i = 0; i < poles.size(); ++i) {
    if (region.interior_distance(poles[i]) <= 1e-7 * (1 + std::abs(poles[i]))) return true;
  }
  return false;
}

// Brute-force complex margin: bisection on r for the existence of a
// destabilizing rank-one Delta with norm <= r at some dense boundary point.
inline double brute_force_complex_margin(const LtiPlant& plant, const PoleRegion& region) {
  const auto ts = dense_boundary(region);
  std::vector<double> gains;
  gains.reserve(ts.size());
  for (double t : ts) gains.push_back(sigma_max_by_gram(plant.frequency_response(region.boundary_point(t))));
  auto exists = [&](double r) {
    for (std::size_t k = 0; k < ts.size(); ++k) {
      if (r * gains[k] >= 1.0) return true;
    }
    return false;
  };
  double lo = 0.0, hi = 1.0;
  while (!exists(hi)) hi *= 2.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (exists(mid) ? hi : lo) = mid;
  }
  return hi;
}

// Worst dense boundary point and the rank-one perturbation that puts a pole
// there.  A certificate exists at radius r when that perturbation is no
// larger than r.
inline bool certificate_found(const LtiPlant& plant, const PoleRegion& region, double r) {
  cd worst = region.boundary_point(0.0);
  double peak = -1.0;
  for (double t : dense_boundary(region)) {
    const cd s = region.boundary_point(t);
    const double g = sigma_max_by_gram(plant.frequency_response(s));
    if (g > peak) {
      peak = g;
      worst = s;
    }
  }
  const Eigen::MatrixXcd delta = destabilizer(plant, worst);
  return max_singular_value(delta) <= r && destabilized(plant, region, delta);
}

}  // namespace margin_oracles

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "probrob/error.hpp"
#include "probrob/indicators.hpp"
#include "probrob/rng.hpp"
#include "probrob/xform.hpp"

using namespace probrob;

namespace {

std::vector<double> knots(std::size_t count, double top = 1.0) {
  std::vector<double> r(count);
  for (std::size_t k = 0; k < count; ++k) r[k] = top * static_cast<double>(k + 1) / count;
  return r;
}

CurveGrid tabulate(const std::vector<double>& radii, std::size_t n,
                   const std::function<double(double)>& f) {
  CurveGrid c{radii, {}, n};
  for (double r : radii) c.values.push_back(f(r));
  return c;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

PhiFunction step_phi(double edge) {
  return {[edge](double r) { return r <= edge ? 1.0 : 0.0; }, {edge}};
}

// Random piecewise-constant phi with up to 20 pieces whose jumps sit on knots.
PhiFunction random_phi(SeededStream& rng, const std::vector<double>& radii) {
  const std::size_t pieces = 1 + rng.below(20);
  std::vector<double> edges;
  for (std::size_t p = 1; p < pieces; ++p) edges.push_back(radii[rng.below(radii.size() - 1)]);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<double> levels(edges.size() + 1);
  for (double& v : levels) v = rng.below(4) == 0 ? std::round(rng.uniform()) : rng.uniform();
  return {[edges, levels](double r) {
            const auto idx = std::upper_bound(edges.begin(), edges.end(), r) - edges.begin();
            return levels[static_cast<std::size_t>(idx)];
          },
          edges};
}

PhiFunction layered_phi() {
  const LayeredExample ex(20, 11, 19);
  return {[ex](double r) { return ex.phi(r); }, ex.discontinuities()};
}

}  // namespace

TEST(PhiCurves, ScriptPFromPhiExamples) {
  EXPECT_NEAR(scriptp_from_phi(step_phi(0.5), 1.0), 0.5, 1e-12);
  const PhiFunction one{[](double) { return 1.0; }, {}};
  for (double r : {0.01, 0.5, 3.0}) EXPECT_NEAR(scriptp_from_phi(one, r), 1.0, 1e-12);
  EXPECT_NEAR(scriptp_from_phi(layered_phi(), 0.95), 17.0 / 19.0, 1e-10);
  EXPECT_THROW((void)scriptp_from_phi(one, 0.0), Error);
}

TEST(PhiCurves, BbPFromPhiExamples) {
  EXPECT_NEAR(bbp_from_phi(step_phi(0.5), 1.0, 2), 0.25, 1e-12);
  const PhiFunction one{[](double) { return 1.0; }, {}};
  EXPECT_NEAR(bbp_from_phi(one, 0.7, 100), 1.0, 1e-12);
  const double expected = std::pow(10.0 / 11.0, 50);
  EXPECT_NEAR(bbp_from_phi(layered_phi(), 0.55, 50), expected, 1e-10 * expected);
  EXPECT_NEAR(expected, 0.00852, 5e-5);
  EXPECT_THROW((void)bbp_from_phi(one, -1.0, 2), Error);
  EXPECT_THROW((void)bbp_from_phi(one, 1.0, 0), Error);
}

TEST(PhiCurves, PhiOutsideUnitIntervalRejected) {
  const PhiFunction bad{[](double) { return 1.5; }, {}};
  try {
    (void)scriptp_from_phi(bad, 1.0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCorruptedInput);
  }
}

TEST(PhiCurves, LayeredClosedFormsAgree) {
  const LayeredExample ex(20, 11, 19);
  const auto phi = layered_phi();
  for (double r : {0.1, 0.45, 0.5, 0.52, 0.55, 0.7, 0.9, 0.97, 1.0}) {
    EXPECT_NEAR(scriptp_from_phi(phi, r), ex.scriptp(r), 1e-12) << r;
    for (std::size_t n : {1u, 2u, 10u, 50u}) {
      EXPECT_NEAR(bbp_from_phi(phi, r, n), ex.bbp(r, n), 1e-12) << r << " " << n;
    }
  }
}

TEST(Transform, ConstantsAreFixedPoints) {
  const auto radii = knots(500);
  for (std::size_t n : {1u, 2u, 10u, 50u, 100u}) {
    for (double c : {0.0, 0.3, 1.0}) {
      const auto curve = tabulate(radii, n, [c](double) { return c; });
      const auto b = bbp_from_scriptp(curve);
      const auto s = scriptp_from_bbp(curve);
      for (std::size_t k = 0; k < radii.size(); ++k) {
        ASSERT_NEAR(b.values[k], c, 1e-12);
        ASSERT_NEAR(s.values[k], c, 1e-12);
      }
    }
  }
}

TEST(Transform, ReciprocalCurveExample) {
  // P(r) = min(1, 0.5 / r) is the new measure of phi = 1 on [0, 0.5]; the
  // classical measure is min(1, (0.5 / r)^n).
  const auto radii = knots(2000);
  const std::size_t n = 50;
  const auto p = tabulate(radii, n, [](double r) { return std::min(1.0, 0.5 / r); });
  const auto b = bbp_from_scriptp(p);
  EXPECT_NEAR(b.values.back(), std::pow(0.5, 50), 1e-13);
  const auto bb = tabulate(radii, n, [](double r) { return std::min(1.0, std::pow(0.5 / r, 50)); });
  const auto s = scriptp_from_bbp(bb);
  EXPECT_NEAR(s.values.back(), 0.5, 1e-4);
}

TEST(Transform, StepCellModelIsCoarser) {
  const auto radii = knots(2000);
  const auto p = tabulate(radii, 50, [](double r) { return std::min(1.0, 0.5 / r); });
  const auto exact = tabulate(radii, 50, [](double r) { return std::min(1.0, std::pow(0.5 / r, 50)); });
  const double linear = max_abs_diff(bbp_from_scriptp(p).values, exact.values);
  const double step =
      max_abs_diff(bbp_from_scriptp(p, {.cell_model = CellModel::kStep}).values, exact.values);
  EXPECT_LT(linear, 1e-10);
  EXPECT_GT(step, 1e-3);
}

TEST(Transform, OneDimensionIsIdentity) {
  SeededStream rng(5, 0);
  const auto radii = knots(300);
  for (int t = 0; t < 20; ++t) {
    const auto phi = random_phi(rng, radii);
    const auto p = tabulate(radii, 1, [&](double r) { return scriptp_from_phi(phi, r); });
    EXPECT_EQ(bbp_from_scriptp(p).values, p.values);
    EXPECT_EQ(scriptp_from_bbp(p).values, p.values);
  }
}

TEST(Transform, MatchesPhiCurvesOnRandomFamily) {
  SeededStream rng(7, 0);
  const auto radii = knots(2000);
  for (std::size_t n : {1u, 2u, 10u, 50u, 100u}) {
    for (int t = 0; t < 6; ++t) {
      const auto phi = random_phi(rng, radii);
      const auto p = tabulate(radii, n, [&](double r) { return scriptp_from_phi(phi, r); });
      const auto b = tabulate(radii, n, [&](double r) { return bbp_from_phi(phi, r, n); });
      TransformDiagnostics forward, backward;
      const auto b_hat = bbp_from_scriptp(p, {}, &forward);
      const auto p_hat = scriptp_from_bbp(b, &backward);
      EXPECT_LE(max_abs_diff(b_hat.values, b.values), 1e-3) << "n=" << n << " t=" << t;
      EXPECT_LE(max_abs_diff(p_hat.values, p.values), 1e-3) << "n=" << n << " t=" << t;
      EXPECT_GE(forward.min_raw, -1e-9);
      EXPECT_LE(forward.max_raw, 1 + 1e-9);
      EXPECT_GE(backward.min_raw, -1e-9);
      EXPECT_LE(backward.max_raw, 1 + 1e-9);
    }
  }
}

TEST(Transform, LayeredRoundTrip) {
  const LayeredExample ex(20, 11, 19);
  const auto radii = knots(2000);
  const auto p = tabulate(radii, 50, [&](double r) { return ex.scriptp(r); });
  const auto b = bbp_from_scriptp(p);
  const auto exact = tabulate(radii, 50, [&](double r) { return ex.bbp(r, 50); });
  EXPECT_LE(max_abs_diff(b.values, exact.values), 0.01);
  EXPECT_LE(max_abs_diff(scriptp_from_bbp(b).values, p.values), 1e-3);
  // The knot at 0.55 is index 1099.
  EXPECT_NEAR(b.values[1099], std::pow(10.0 / 11.0, 50), 1e-4);
}

TEST(Transform, Validation) {
  EXPECT_THROW(bbp_from_scriptp(CurveGrid{{}, {}, 2}), Error);
  EXPECT_THROW(bbp_from_scriptp(CurveGrid{{0.5, 1.0}, {1.0}, 2}), Error);
  EXPECT_THROW(bbp_from_scriptp(CurveGrid{{0.5, 1.0}, {1.0, 1.0}, 0}), Error);
  EXPECT_THROW(scriptp_from_bbp(CurveGrid{{1.0, 0.5}, {1.0, 1.0}, 3}), Error);
}

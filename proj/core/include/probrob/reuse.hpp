#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "probrob/gridspec.hpp"
#include "probrob/indicators.hpp"
#include "probrob/rng.hpp"
#include "probrob/segfun.hpp"
#include "probrob/uncsample.hpp"

namespace probrob {

/// Indicator values along one direction for every grid index, with the
/// number of indicator evaluations it took.
struct RadialSampleRun {
  std::size_t direction_index = 0;
  SegFun segments;
  std::size_t simulations_used = 0;
};

/// Supplies R ~ Uniform[0, r_p] given r_p.
using RadiusSource = std::function<double(double)>;

/// Backward sweep over the grid: starting at p = m draw R on [0, r_p],
/// evaluate I(U R), assign the result to every index j..p with
/// j = locate(R), and continue from p = j - 1 until p = 0.  Index i ends up
/// with a value I(U R_i) where R_i is Uniform[0, r_i].
RadialSampleRun radial_sampling(const DirectionSample& direction, const RadiusGrid& grid,
                                const Indicator& indicator, SeededStream& rng);
RadialSampleRun radial_sampling(const DirectionSample& direction, const RadiusGrid& grid,
                                const Indicator& indicator, const RadiusSource& draw_radius);

/// What is being sampled: the uncertainty layout, its norm and the
/// requirement.
struct SamplingProblem {
  Shape shape;
  NormKind norm = NormKind::kL2;
  Indicator indicator;
};

/// Generates direction k: surface draw from stream (seed, 2k), radii from
/// stream (seed, 2k + 1).
RadialSampleRun sample_direction(const SamplingProblem& problem, const RadiusGrid& grid,
                                 std::uint64_t seed, std::size_t k);

struct ComplexityReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t total_simulations = 0;
  double measured_meq = 0.0;
  double simulations_stddev = 0.0;  ///< Sample std of per-direction evaluations.
  double mean_leaf_rows = 0.0;      ///< L, mean row count of the per-direction tables.
  std::uint64_t merge_row_visits = 0;
  double predicted_meq = 0.0;
  double predicted_speedup = 0.0;
  std::vector<std::size_t> decomposition;  ///< Ascending powers of two summing to n.
};

struct ReuseResult {
  SegFun counts;  ///< f_H(i) = number of directions with I = 1 at index i.
  ComplexityReport report;
};

struct ReuseOptions {
  /// 0 picks hardware concurrency.  Results do not depend on this value.
  std::size_t threads = 1;
};

/// Sequential merging H <- Merge(D^k, H), k = 1..N.
ReuseResult ssra(std::size_t n, const RadiusGrid& grid, const SamplingProblem& problem,
                 std::uint64_t seed, const ReuseOptions& options = {});

/// Hierarchical merging: N is split into powers of two, each group reduced by
/// a balanced binary tree, and the group results folded smallest first.
ReuseResult hsra(std::size_t n, const RadiusGrid& grid, const SamplingProblem& problem,
                 std::uint64_t seed, const ReuseOptions& options = {});

/// N = N_1 + ... + N_tau with N_l = 2^{p_l} ascending.
std::vector<std::size_t> binary_decomposition(std::size_t n);

/// Row-visit model of sequential merging, L (N + 2)(N - 1) / 2.
double sequential_merge_cost(std::size_t n, double mean_rows);
/// Upper bound on hierarchical merging cost,
/// L [sum N_l log2 N_l + sum (tau - l + 1) N_l - N_1].
double hierarchical_merge_bound(std::size_t n, double mean_rows);
/// Upsilon(N) = (N + 2)(N - 1) / (2 log2 N), with Upsilon(1) = 1.
double predicted_speedup(std::size_t n);
/// Ratio of the two cost models above (independent of L).  For N = 2^p it is
/// (N + 2)(N - 1) / (2 N p), i.e. Upsilon(N) / N.
double model_cost_ratio(std::size_t n);

/// Smallest N with N > ln(2/delta) / (2 eps^2).
std::size_t chernoff_n(double eps, double delta);

enum class CurveKind { kScriptP, kBbP };

/// Estimates at the grid radii with their running infimum.
class RobustnessCurve {
 public:
  RobustnessCurve(RadiusGrid grid, CurveKind kind, std::vector<double> values, std::size_t n);

  const RadiusGrid& grid() const noexcept { return grid_; }
  CurveKind kind() const noexcept { return kind_; }
  const std::vector<double>& values() const noexcept { return values_; }
  const std::vector<double>& inf_values() const noexcept { return inf_values_; }
  std::size_t sample_size() const noexcept { return n_; }

 private:
  RadiusGrid grid_;
  CurveKind kind_;
  std::vector<double> values_;
  std::vector<double> inf_values_;
  std::size_t n_;
};

std::vector<double> running_infimum(const std::vector<double>& values);

/// values[i] = f_H(i) / N.
RobustnessCurve estimate_curve(const SegFun& counts, std::size_t n, const RadiusGrid& grid);

/// Linear interpolation between neighbouring grid radii.
double interpolate(const RobustnessCurve& curve, double r);

}  // namespace probrob

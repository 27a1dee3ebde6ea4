#include "probrob/reuse.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <string>

#include "parallel.hpp"
#include "probrob/error.hpp"

namespace probrob {

namespace {

int evaluate_with_context(const Indicator& indicator, const DirectionSample& direction,
                          double radius, std::size_t direction_index) {
  try {
    return indicator(scale(direction, radius));
  } catch (const std::exception& e) {
    raise(ErrorKind::kIndicatorFailure, "direction " + std::to_string(direction_index) +
                                            ", radius " + std::to_string(radius) + ": " +
                                            e.what());
  }
}

RadialSampleRun sweep(const DirectionSample& direction, const RadiusGrid& grid,
                      const Indicator& indicator, const RadiusSource& draw_radius,
                      std::size_t direction_index) {
  const std::size_t m = grid.size();
  // Rows are produced from the top index down, so they are collected in
  // descending order and reversed at the end.
  std::vector<Segment> rows;
  std::size_t simulations = 0;
  std::size_t p = m;
  while (p > 0) {
    const double r_p = grid.radius(p);
    const double radius = draw_radius(r_p);
    if (!(radius >= 0.0 && radius <= r_p)) {
      raise(ErrorKind::kOutOfRange, "radius source returned " + std::to_string(radius) +
                                        " outside [0, " + std::to_string(r_p) + "]");
    }
    const auto value = static_cast<std::uint64_t>(
        evaluate_with_context(indicator, direction, radius, direction_index));
    ++simulations;
    const GridIndex j = locate(grid, radius);
    if (!rows.empty() && rows.back().value == value) {
      rows.back().lo = j;
    } else {
      rows.push_back({j, p, value});
    }
    p = j - 1;
  }
  std::reverse(rows.begin(), rows.end());
  return RadialSampleRun{direction_index, SegFun(m, std::move(rows)), simulations};
}

/// A merged block of consecutive directions.
struct Partial {
  SegFun counts;
  MergeCostCounter cost;
  std::uint64_t simulations = 0;
  std::uint64_t simulations_sq = 0;
  std::uint64_t leaf_rows = 0;
};

Partial leaf(const SamplingProblem& problem, const RadiusGrid& grid, std::uint64_t seed,
             std::size_t k) {
  RadialSampleRun run = sample_direction(problem, grid, seed, k);
  const std::uint64_t sims = run.simulations_used;
  const std::uint64_t rows = run.segments.row_count();
  return Partial{std::move(run.segments), {}, sims, sims * sims, rows};
}

Partial combine(Partial left, const Partial& right) {
  MergeCostCounter cost = left.cost;
  cost += right.cost;
  SegFun merged = merge(left.counts, right.counts, cost);
  return Partial{std::move(merged), cost, left.simulations + right.simulations,
                 left.simulations_sq + right.simulations_sq, left.leaf_rows + right.leaf_rows};
}

/// Balanced binary reduction of directions [first, first + count), count a
/// power of two, done sequentially with a stack of partial subtrees.
Partial reduce_block(const SamplingProblem& problem, const RadiusGrid& grid, std::uint64_t seed,
                     std::size_t first, std::size_t count) {
  std::vector<std::pair<unsigned, Partial>> stack;
  for (std::size_t k = first; k < first + count; ++k) {
    Partial node = leaf(problem, grid, seed, k);
    unsigned level = 0;
    while (!stack.empty() && stack.back().first == level) {
      node = combine(std::move(stack.back().second), node);
      stack.pop_back();
      ++level;
    }
    stack.emplace_back(level, std::move(node));
  }
  return std::move(stack.back().second);
}

/// Successive binary merging of a group of 2^p directions.  The group is cut
/// into aligned subtrees that are reduced concurrently; the subtree roots are
/// then merged along the same tree, so the merge structure (and the cost
/// count) is identical for every thread count.
Partial successive_binary_merge(const SamplingProblem& problem, const RadiusGrid& grid,
                                std::uint64_t seed, std::size_t first, std::size_t count,
                                std::size_t threads) {
  std::size_t subtrees = std::min(std::bit_ceil(std::max<std::size_t>(threads, 1)), count);
  const std::size_t width = count / subtrees;
  std::vector<std::optional<Partial>> roots(subtrees);
  detail::parallel_for(subtrees, threads, [&](std::size_t t) {
    roots[t] = reduce_block(problem, grid, seed, first + t * width, width);
  });
  while (roots.size() > 1) {
    std::vector<std::optional<Partial>> next;
    next.reserve(roots.size() / 2);
    for (std::size_t t = 0; t + 1 < roots.size(); t += 2) {
      next.emplace(next.end(), combine(std::move(*roots[t]), *roots[t + 1]));
    }
    roots = std::move(next);
  }
  return std::move(*roots.front());
}

ReuseResult finish(Partial total, std::size_t n, const RadiusGrid& grid) {
  ComplexityReport report;
  report.n = n;
  report.m = grid.size();
  report.total_simulations = total.simulations;
  const double nn = static_cast<double>(n);
  report.measured_meq = static_cast<double>(total.simulations) / nn;
  if (n > 1) {
    const double mean = report.measured_meq;
    const double var =
        (static_cast<double>(total.simulations_sq) - nn * mean * mean) / (nn - 1.0);
    report.simulations_stddev = std::sqrt(std::max(0.0, var));
  }
  report.mean_leaf_rows = static_cast<double>(total.leaf_rows) / nn;
  report.merge_row_visits = total.cost.row_visits;
  report.predicted_meq = predict_meq(grid.scheme(), grid.lambda(), grid.size());
  report.predicted_speedup = predicted_speedup(n);
  report.decomposition = binary_decomposition(n);
  return ReuseResult{std::move(total.counts), std::move(report)};
}

void check_n(std::size_t n) {
  if (n < 1) raise(ErrorKind::kInvalidArgument, "sample size N must be >= 1");
}

}  // namespace

RadialSampleRun radial_sampling(const DirectionSample& direction, const RadiusGrid& grid,
                                const Indicator& indicator, SeededStream& rng) {
  return sweep(direction, grid, indicator, [&rng](double r_p) { return rng.uniform() * r_p; },
               0);
}

RadialSampleRun radial_sampling(const DirectionSample& direction, const RadiusGrid& grid,
                                const Indicator& indicator, const RadiusSource& draw_radius) {
  return sweep(direction, grid, indicator, draw_radius, 0);
}

RadialSampleRun sample_direction(const SamplingProblem& problem, const RadiusGrid& grid,
                                 std::uint64_t seed, std::size_t k) {
  SeededStream surface_rng(seed, 2 * static_cast<std::uint64_t>(k));
  SeededStream radial_rng(seed, 2 * static_cast<std::uint64_t>(k) + 1);
  const DirectionSample direction = sample_surface(problem.shape, problem.norm, surface_rng);
  return sweep(direction, grid, problem.indicator,
               [&radial_rng](double r_p) { return radial_rng.uniform() * r_p; }, k);
}

ReuseResult ssra(std::size_t n, const RadiusGrid& grid, const SamplingProblem& problem,
                 std::uint64_t seed, const ReuseOptions& options) {
  check_n(n);
  // Leaves are generated in parallel chunks; the fold itself is sequential.
  constexpr std::size_t kChunk = 4096;
  std::optional<Partial> h;
  for (std::size_t base = 0; base < n; base += kChunk) {
    const std::size_t count = std::min(kChunk, n - base);
    std::vector<std::optional<Partial>> leaves(count);
    detail::parallel_for(count, options.threads, [&](std::size_t t) {
      leaves[t] = leaf(problem, grid, seed, base + t);
    });
    for (auto& d : leaves) {
      if (!h) {
        h = std::move(*d);
      } else {
        // H <- Merge(D, H)
        MergeCostCounter cost = h->cost;
        SegFun merged = merge(d->counts, h->counts, cost);
        h = Partial{std::move(merged), cost, h->simulations + d->simulations,
                    h->simulations_sq + d->simulations_sq, h->leaf_rows + d->leaf_rows};
      }
    }
  }
  return finish(std::move(*h), n, grid);
}

ReuseResult hsra(std::size_t n, const RadiusGrid& grid, const SamplingProblem& problem,
                 std::uint64_t seed, const ReuseOptions& options) {
  check_n(n);
  const std::size_t threads = detail::resolve_threads(options.threads);
  std::optional<Partial> h;
  std::size_t first = 0;
  for (std::size_t group : binary_decomposition(n)) {
    Partial m_l = successive_binary_merge(problem, grid, seed, first, group, threads);
    first += group;
    if (!h) {
      h = std::move(m_l);
    } else {
      h = combine(std::move(*h), m_l);  // H <- Merge(H, M_l)
    }
  }
  return finish(std::move(*h), n, grid);
}

std::vector<std::size_t> binary_decomposition(std::size_t n) {
  std::vector<std::size_t> parts;
  for (std::size_t bit = 1; bit != 0 && bit <= n; bit <<= 1) {
    if (n & bit) parts.push_back(bit);
  }
  return parts;
}

double sequential_merge_cost(std::size_t n, double mean_rows) {
  const double nn = static_cast<double>(n);
  return mean_rows * (nn + 2.0) * (nn - 1.0) / 2.0;
}

double hierarchical_merge_bound(std::size_t n, double mean_rows) {
  const auto parts = binary_decomposition(n);
  if (parts.empty()) return 0.0;
  const double tau = static_cast<double>(parts.size());
  double sum = 0.0;
  for (std::size_t l = 0; l < parts.size(); ++l) {
    const double nl = static_cast<double>(parts[l]);
    sum += nl * std::log2(nl) + (tau - static_cast<double>(l)) * nl;
  }
  sum -= static_cast<double>(parts.front());
  return mean_rows * sum;
}

double predicted_speedup(std::size_t n) {
  if (n <= 1) return 1.0;
  const double nn = static_cast<double>(n);
  return (nn + 2.0) * (nn - 1.0) / (2.0 * std::log2(nn));
}

double model_cost_ratio(std::size_t n) {
  const double bound = hierarchical_merge_bound(n, 1.0);
  if (bound <= 0.0) return 1.0;
  return sequential_merge_cost(n, 1.0) / bound;
}

std::size_t chernoff_n(double eps, double delta) {
  if (!(eps > 0.0 && eps < 1.0) || !(delta > 0.0 && delta < 1.0)) {
    raise(ErrorKind::kInvalidTolerance, "eps and delta must lie in (0,1)");
  }
  const double bound = std::log(2.0 / delta) / (2.0 * eps * eps);
  return static_cast<std::size_t>(std::floor(bound)) + 1;
}

std::vector<double> running_infimum(const std::vector<double>& values) {
  std::vector<double> out(values.size());
  double running = 1.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    running = (i == 0) ? values[0] : std::min(running, values[i]);
    out[i] = running;
  }
  return out;
}

RobustnessCurve::RobustnessCurve(RadiusGrid grid, CurveKind kind, std::vector<double> values,
                                 std::size_t n)
    : grid_(std::move(grid)), kind_(kind), values_(std::move(values)), n_(n) {
  if (values_.size() != grid_.size()) {
    raise(ErrorKind::kIncompatibleDomain, "curve has " + std::to_string(values_.size()) +
                                              " values for " + std::to_string(grid_.size()) +
                                              " grid points");
  }
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      raise(ErrorKind::kCorruptedInput, "curve value " + std::to_string(v) + " outside [0,1]");
    }
  }
  inf_values_ = running_infimum(values_);
}

RobustnessCurve estimate_curve(const SegFun& counts, std::size_t n, const RadiusGrid& grid) {
  check_n(n);
  if (counts.domain_size() != grid.size()) {
    raise(ErrorKind::kIncompatibleDomain, "count table and grid sizes differ");
  }
  std::vector<double> values(grid.size());
  const double nn = static_cast<double>(n);
  for (const Segment& s : counts.rows()) {
    if (s.value > n) {
      raise(ErrorKind::kCorruptedInput, "count " + std::to_string(s.value) +
                                            " exceeds sample size " + std::to_string(n));
    }
    std::fill(values.begin() + (s.lo - 1), values.begin() + s.hi,
              static_cast<double>(s.value) / nn);
  }
  return RobustnessCurve(grid, CurveKind::kScriptP, std::move(values), n);
}

double interpolate(const RobustnessCurve& curve, double r) {
  const auto& radii = curve.grid().radii();
  const auto& v = curve.values();
  if (!(r >= radii.front() && r <= radii.back())) {
    raise(ErrorKind::kOutOfRange, "radius " + std::to_string(r) + " outside grid span");
  }
  const auto it = std::lower_bound(radii.begin(), radii.end(), r);
  const auto i = static_cast<std::size_t>(it - radii.begin());
  if (radii[i] == r) return v[i];
  const double lo = radii[i - 1];
  const double hi = radii[i];
  return ((r - lo) * v[i] + (hi - r) * v[i - 1]) / (hi - lo);
}

}  // namespace probrob

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace probrob {

/// One row [lo, hi, value]: f(i) = value for lo <= i <= hi.
struct Segment {
  std::size_t lo;
  std::size_t hi;
  std::uint64_t value;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Counts rows consumed by merges.  Each task keeps its own counter; counters
/// are combined with += at join points.
struct MergeCostCounter {
  std::uint64_t row_visits = 0;

  MergeCostCounter& operator+=(const MergeCostCounter& other) noexcept {
    row_visits += other.row_visits;
    return *this;
  }
};

/// Run-length encoded step function over the grid indices 1..m with
/// non-negative integer values.  Rows are sorted, contiguous, cover [1, m]
/// exactly and are maximal (adjacent values differ).
class SegFun {
 public:
  /// Validates the canonical-encoding invariants.
  SegFun(std::size_t m, std::vector<Segment> rows);

  /// f == value on all of [1, m].
  static SegFun constant(std::size_t m, std::uint64_t value);
  /// Run-length encodes values[0..m-1] (value of index i at values[i-1]).
  static SegFun from_values(const std::vector<std::uint64_t>& values);

  std::size_t domain_size() const noexcept { return m_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  const std::vector<Segment>& rows() const noexcept { return rows_; }

  /// f(i), by binary search over rows.
  std::uint64_t eval(std::size_t i) const;
  /// Dense decode: element i-1 holds f(i).
  std::vector<std::uint64_t> values() const;

  friend bool operator==(const SegFun&, const SegFun&) = default;

 private:
  struct Unchecked {};
  SegFun(Unchecked, std::size_t m, std::vector<Segment> rows) noexcept
      : m_(m), rows_(std::move(rows)) {}

  friend SegFun merge(const SegFun&, const SegFun&, MergeCostCounter&);

  std::size_t m_;
  std::vector<Segment> rows_;
};

/// Pointwise sum f_M(i) = f_D(i) + f_H(i) by a two-pointer sweep, coalescing
/// equal neighbours.  Adds rowcount(D) + rowcount(H) to the counter.
SegFun merge(const SegFun& d, const SegFun& h, MergeCostCounter& cost);

}  // namespace probrob

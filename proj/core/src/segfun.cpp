#include "probrob/segfun.hpp"

#include <algorithm>
#include <string>

#include "probrob/error.hpp"

namespace probrob {

SegFun::SegFun(std::size_t m, std::vector<Segment> rows) : m_(m), rows_(std::move(rows)) {
  if (m_ == 0) raise(ErrorKind::kInvalidArgument, "segmented function over empty domain");
  if (rows_.empty() || rows_.front().lo != 1 || rows_.back().hi != m_) {
    raise(ErrorKind::kInvalidArgument, "rows must cover [1, " + std::to_string(m_) + "]");
  }
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    if (rows_[t].lo > rows_[t].hi) raise(ErrorKind::kInvalidArgument, "row with lo > hi");
    if (t > 0) {
      if (rows_[t].lo != rows_[t - 1].hi + 1) {
        raise(ErrorKind::kInvalidArgument, "rows are not contiguous");
      }
      if (rows_[t].value == rows_[t - 1].value) {
        raise(ErrorKind::kInvalidArgument, "adjacent rows share a value (not maximal)");
      }
    }
  }
}

SegFun SegFun::constant(std::size_t m, std::uint64_t value) {
  return SegFun(m, {Segment{1, m, value}});
}

SegFun SegFun::from_values(const std::vector<std::uint64_t>& values) {
  if (values.empty()) raise(ErrorKind::kInvalidArgument, "segmented function over empty domain");
  std::vector<Segment> rows;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!rows.empty() && rows.back().value == values[i]) {
      rows.back().hi = i + 1;
    } else {
      rows.push_back({i + 1, i + 1, values[i]});
    }
  }
  return SegFun(Unchecked{}, values.size(), std::move(rows));
}

std::uint64_t SegFun::eval(std::size_t i) const {
  if (i < 1 || i > m_) {
    raise(ErrorKind::kIndexError,
          "index " + std::to_string(i) + " outside [1, " + std::to_string(m_) + "]");
  }
  const auto it = std::partition_point(rows_.begin(), rows_.end(),
                                       [i](const Segment& s) { return s.hi < i; });
  return it->value;
}

std::vector<std::uint64_t> SegFun::values() const {
  std::vector<std::uint64_t> out(m_);
  for (const auto& s : rows_) std::fill(out.begin() + (s.lo - 1), out.begin() + s.hi, s.value);
  return out;
}

SegFun merge(const SegFun& d, const SegFun& h, MergeCostCounter& cost) {
  if (d.domain_size() != h.domain_size()) {
    raise(ErrorKind::kIncompatibleDomain, "merging functions over [1," +
                                              std::to_string(d.domain_size()) + "] and [1," +
                                              std::to_string(h.domain_size()) + "]");
  }
  const auto& a = d.rows();
  const auto& b = h.rows();
  cost.row_visits += a.size() + b.size();

  std::vector<Segment> out;
  out.reserve(a.size() + b.size());
  std::size_t ia = 0, ib = 0;
  std::size_t lo = 1;
  while (ia < a.size() && ib < b.size()) {
    const std::size_t hi = std::min(a[ia].hi, b[ib].hi);
    const std::uint64_t value = a[ia].value + b[ib].value;
    if (!out.empty() && out.back().value == value) {
      out.back().hi = hi;
    } else {
      out.push_back({lo, hi, value});
    }
    lo = hi + 1;
    if (a[ia].hi == hi) ++ia;
    if (b[ib].hi == hi) ++ib;
  }
  return SegFun(SegFun::Unchecked{}, d.domain_size(), std::move(out));
}

}  // namespace probrob

// Serial reference implementations.  They compose the public partition and
// leading-term API directly and are kept for cross-checking the kernels.

#include "cascade/census.hpp"
#include "cascade/leading.hpp"
#include "census_internal.hpp"

namespace cascade::serial {

CensusReport oracle_full(const Rank& rank) {
  CensusReport report = detail::empty_full_report(rank);
  const auto points = trapezoid_points(rank);
  for (PartitionEnumerator e(points, rank.k + 2); !e.done(); e.next()) {
    const ColoredPartition pi = e.current();
    ++report.partitions;
    const Count n_pi = n_count(pi, rank);
    if (n_pi == 0) continue;
    report.total += n_pi;
    const auto support = pi.support();
    if (const auto t = classify_support(support)) {
      report.n_by_type[*t] += n_pi;
    } else {
      report.n_unclassified += n_pi;
    }
    report.n_by_degree[pi.degree(rank)] += n_pi;
    report.n_by_shape[shape_of(pi, rank)] += n_pi;
  }
  return report;
}

std::map<SupportType, Count> count_supports(const Region& region, int max_size) {
  std::map<SupportType, Count> counts;
  const int size = region.size();
  std::vector<int> pick;
  std::vector<ArrayPoint> points;
  auto rec = [&](auto&& self, int start) -> void {
    if (pick.size() >= 2) {
      points.clear();
      for (int i : pick) points.push_back(region.point(i));
      if (const auto t = classify_support(points)) ++counts[*t];
    }
    if (static_cast<int>(pick.size()) == max_size) return;
    for (int i = start; i < size; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return counts;
}

}  // namespace cascade::serial

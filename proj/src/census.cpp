#include "cascade/census.hpp"

#include <omp.h>

#include <algorithm>
#include <array>

#include "cascade/closed_forms.hpp"
#include "cascade/leading.hpp"
#include "census_internal.hpp"

namespace cascade {

std::optional<SupportType> classify_support(std::span<const ArrayPoint> support) {
  std::vector<ArrayPoint> pts(support.begin(), support.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return detail::classify(
      static_cast<int>(pts.size()),
      [&](int i, int j) {
        return leq(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]);
      },
      [&](int i) { return pts[static_cast<std::size_t>(i)].row; });
}

std::optional<SupportType> classify_indices(const Region& region, std::span<const int> indices) {
  return detail::classify(
      static_cast<int>(indices.size()),
      [&](int i, int j) {
        return region.leq(indices[static_cast<std::size_t>(i)], indices[static_cast<std::size_t>(j)]);
      },
      [&](int i) { return region.point(indices[static_cast<std::size_t>(i)]).row; });
}

std::vector<Shape> all_shapes(int length, int max_degree) {
  std::vector<Shape> out;
  std::vector<int> current;
  // Non-increasing absolute degrees.
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      std::vector<int> degrees;
      for (int a : current) degrees.push_back(-a);
      out.push_back(Shape::from_degrees(std::move(degrees)));
      return;
    }
    for (int a = cap; a >= 1; --a) {
      current.push_back(a);
      self(self, remaining - 1, a);
      current.pop_back();
    }
  };
  rec(rec, length, max_degree);
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

CensusReport empty_full_report(const Rank& rank) {
  CensusReport report;
  report.rank = rank;
  const int length = rank.k + 2;
  for (const auto& t : types_for_level(rank.k)) report.n_by_type[t] = 0;
  for (int m = -3 * length; m <= -length; ++m) report.n_by_degree[m] = 0;
  for (auto& shape : all_shapes(length, 3)) report.n_by_shape[shape] = 0;
  return report;
}

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

}  // namespace detail

namespace {

struct FullAccumulator {
  std::map<SupportType, Count> by_type;
  Count unclassified = 0;
  std::vector<Count> by_degree;  // indexed by -|pi|
  std::vector<Count> by_shape;   // indexed by (#deg -2) * (L+1) + (#deg -3)
  Count total = 0;
  Count partitions = 0;

  explicit FullAccumulator(int length)
      : by_degree(static_cast<std::size_t>(3 * length + 1), 0),
        by_shape(static_cast<std::size_t>((length + 1) * (length + 1)), 0) {}

  void merge(const FullAccumulator& o) {
    for (const auto& [t, c] : o.by_type) by_type[t] += c;
    unclassified += o.unclassified;
    for (std::size_t i = 0; i < by_degree.size(); ++i) by_degree[i] += o.by_degree[i];
    for (std::size_t i = 0; i < by_shape.size(); ++i) by_shape[i] += o.by_shape[i];
    total += o.total;
    partitions += o.partitions;
  }
};

// Visits all non-decreasing index sequences of `length` starting with `first`.
void full_kernel(const Region& region, int length, int first, FullAccumulator& acc) {
  const int size = region.size();
  std::array<int, 16> distinct{};
  std::array<int, 16> mult{};
  std::vector<int> idx(static_cast<std::size_t>(length), first);
  while (true) {
    // distinct points and multiplicities
    int m = 0;
    for (int i = 0; i < length; ++i) {
      if (m > 0 && distinct[static_cast<std::size_t>(m - 1)] == idx[static_cast<std::size_t>(i)]) {
        ++mult[static_cast<std::size_t>(m - 1)];
      } else {
        distinct[static_cast<std::size_t>(m)] = idx[static_cast<std::size_t>(i)];
        mult[static_cast<std::size_t>(m)] = 1;
        ++m;
      }
    }
    // removing one part leaves a chain iff every incomparable pair involves
    // the removed point and that point had multiplicity one
    int incomparable = 0;
    std::array<int, 16> touches{};
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (!region.comparable(distinct[static_cast<std::size_t>(i)],
                               distinct[static_cast<std::size_t>(j)])) {
          ++incomparable;
          ++touches[static_cast<std::size_t>(i)];
          ++touches[static_cast<std::size_t>(j)];
        }
      }
    }
    int embeddings = 0;
    for (int v = 0; v < m; ++v) {
      const bool gone = mult[static_cast<std::size_t>(v)] == 1;
      if (incomparable == 0 || (gone && touches[static_cast<std::size_t>(v)] == incomparable)) {
        ++embeddings;
      }
    }
    ++acc.partitions;
    const int n_pi = std::max(embeddings - 1, 0);
    if (n_pi > 0) {
      acc.total += n_pi;
      const auto type = classify_indices(region, std::span<const int>(distinct.data(), static_cast<std::size_t>(m)));
      if (type) {
        acc.by_type[*type] += n_pi;
      } else {
        acc.unclassified += n_pi;
      }
      int degree = 0;
      std::array<int, 4> per_degree{};
      for (int i = 0; i < length; ++i) {
        const int d = region.degree(idx[static_cast<std::size_t>(i)]);
        degree += d;
        ++per_degree[static_cast<std::size_t>(-d)];
      }
      acc.by_degree[static_cast<std::size_t>(-degree)] += n_pi;
      acc.by_shape[static_cast<std::size_t>(per_degree[2] * (length + 1) + per_degree[3])] += n_pi;
    }
    // next sequence with idx[0] pinned
    int pos = length - 1;
    while (pos >= 1 && idx[static_cast<std::size_t>(pos)] == size - 1) --pos;
    if (pos < 1) break;
    const int v = idx[static_cast<std::size_t>(pos)] + 1;
    std::fill(idx.begin() + pos, idx.end(), v);
  }
}

void support_walk(const Region& region, const std::vector<int>& order, std::vector<int>& set,
                  int last_pos, int incomparable, int max_size,
                  std::map<SupportType, Count>& counts) {
  if (set.size() >= 2) {
    if (const auto t = classify_indices(region, set)) ++counts[*t];
  }
  if (static_cast<int>(set.size()) == max_size) return;
  const int size = region.size();
  for (int pos = last_pos + 1; pos < size; ++pos) {
    const int p = order[static_cast<std::size_t>(pos)];
    int added = incomparable;
    for (int x : set) {
      if (!region.comparable(x, p) && ++added > 1) break;
    }
    if (added > 1) continue;
    set.push_back(p);
    support_walk(region, order, set, pos, added, max_size, counts);
    set.pop_back();
  }
}

}  // namespace

CensusReport oracle_full(const Rank& rank, const OracleOptions& options) {
  if (rank.n > options.full_cap) {
    throw OracleCapError("oracle_full capped: n=" + std::to_string(rank.n) + " exceeds cap " +
                         std::to_string(options.full_cap));
  }
  const Region region = Region::trapezoid(rank);
  const int length = rank.k + 2;
  if (length > 16) throw std::invalid_argument("oracle_full supports k <= 14");
  FullAccumulator acc(length);

#pragma omp parallel num_threads(detail::resolve_threads(options.threads))
  {
    FullAccumulator local(length);
#pragma omp for schedule(dynamic, 1) nowait
    for (int first = 0; first < region.size(); ++first) full_kernel(region, length, first, local);
#pragma omp critical(cascade_full_merge)
    acc.merge(local);
  }

  CensusReport report = detail::empty_full_report(rank);
  for (const auto& [t, c] : acc.by_type) report.n_by_type[t] += c;
  report.n_unclassified = acc.unclassified;
  for (auto& [m, c] : report.n_by_degree) c = acc.by_degree[static_cast<std::size_t>(-m)];
  for (auto& [shape, c] : report.n_by_shape) {
    const auto twos = std::count(shape.parts.begin(), shape.parts.end(), -2);
    const auto threes = std::count(shape.parts.begin(), shape.parts.end(), -3);
    c = acc.by_shape[static_cast<std::size_t>(twos * (length + 1) + threes)];
  }
  report.total = acc.total;
  report.partitions = acc.partitions;
  return report;
}

std::map<SupportType, Count> count_supports(const Region& region, int max_size, int threads) {
  std::vector<int> order(static_cast<std::size_t>(region.size()));
  for (int i = 0; i < region.size(); ++i) order[static_cast<std::size_t>(i)] = i;
  // top rows first: every set is visited once, in row-descending order
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return region.point(a).row > region.point(b).row;
  });

  std::map<SupportType, Count> counts;
#pragma omp parallel num_threads(detail::resolve_threads(threads))
  {
    std::map<SupportType, Count> local;
    std::vector<int> set;
#pragma omp for schedule(dynamic, 1) nowait
    for (int first = 0; first < region.size(); ++first) {
      set.assign(1, order[static_cast<std::size_t>(first)]);
      support_walk(region, order, set, first, 0, max_size, local);
    }
#pragma omp critical(cascade_support_merge)
    for (const auto& [t, c] : local) counts[t] += c;
  }
  return counts;
}

namespace {

Count lookup(const std::map<SupportType, Count>& counts, const SupportType& t) {
  const auto it = counts.find(t);
  return it == counts.end() ? 0 : it->second;
}

}  // namespace

Count oracle_supports(const Rank& rank, const SupportType& t, int threads) {
  return lookup(count_supports(Region::trapezoid(rank), t.size(), threads), t);
}

Count oracle_flipped(const Rank& rank, const SupportType& t, int threads) {
  return lookup(count_supports(Region::flipped_trapezoid(rank), t.size(), threads), t);
}

ExactInt n_by_type_from_supports(const Rank& rank, const SupportType& t, int threads) {
  return n_per_support(rank.k, t) * ExactInt{oracle_supports(rank, t, threads)};
}

CensusReport supports_report(const Rank& rank, int threads) {
  CensusReport report;
  report.rank = rank;
  const auto counts = count_supports(Region::trapezoid(rank), rank.k + 2, threads);
  ExactInt total{0};
  for (const auto& t : types_for_level(rank.k)) {
    const Count sigma = lookup(counts, t);
    const ExactInt n = n_per_support(rank.k, t) * ExactInt{sigma};
    report.sigma[t] = sigma;
    report.n_by_type[t] = detail::to_count(n);
    total += n;
  }
  report.total = detail::to_count(total);
  return report;
}

EmbeddingProfile embedding_profiles(const Rank& rank) {
  const auto points = trapezoid_points(rank);
  EmbeddingProfile out;
  for (PartitionEnumerator e(points, rank.k + 2); !e.done(); e.next()) {
    const ColoredPartition pi = e.current();
    ++out[pi.support()][static_cast<int>(embeddings(pi, rank).size())];
  }
  return out;
}

}  // namespace cascade

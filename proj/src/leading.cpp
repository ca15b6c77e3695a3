#include "cascade/leading.hpp"

#include <algorithm>

namespace cascade {

bool is_chain(std::span<const ArrayPoint> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j] || !comparable(points[i], points[j])) return false;
    }
  }
  return true;
}

bool is_leading_term(const ColoredPartition& rho, const Rank& rank) {
  if (rho.length() != rank.k + 1) return false;
  const auto support = rho.support();
  return is_chain(support);
}

namespace {

// Visits every chain of `region` as a list of indices, top point first.
template <typename Visit>
void walk_chains(const Region& region, int max_size, std::vector<int>& chain, Visit&& visit) {
  visit(chain);
  if (static_cast<int>(chain.size()) == max_size) return;
  const int last = chain.back();
  for (int next = 0; next < region.size(); ++next) {
    if (next != last && region.leq(next, last)) {
      chain.push_back(next);
      walk_chains(region, max_size, chain, visit);
      chain.pop_back();
    }
  }
}

// Chains top-down: rows strictly descending, so the top point is visited from
// the highest row first to keep a row-descending order overall.
template <typename Visit>
void for_each_chain(const Region& region, int max_size, Visit&& visit) {
  std::vector<int> order(static_cast<std::size_t>(region.size()));
  for (int i = 0; i < region.size(); ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return region.point(a).row > region.point(b).row;
  });
  std::vector<int> chain;
  for (int top : order) {
    chain.assign(1, top);
    walk_chains(region, max_size, chain, visit);
  }
}

void compositions(int total, int parts, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int first = 1; first <= total - parts + 1; ++first) {
    current.push_back(first);
    compositions(total - first, parts - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<ColoredPartition> enumerate_leading_terms(const Rank& rank, const Region& region) {
  const int length = rank.k + 1;
  std::vector<std::vector<std::vector<int>>> by_size(static_cast<std::size_t>(length + 1));
  for (int r = 1; r <= length; ++r) {
    std::vector<int> scratch;
    compositions(length, r, scratch, by_size[static_cast<std::size_t>(r)]);
  }
  std::vector<ColoredPartition> out;
  for_each_chain(region, length, [&](const std::vector<int>& chain) {
    for (const auto& comp : by_size[chain.size()]) {
      ColoredPartition rho;
      for (std::size_t i = 0; i < chain.size(); ++i) rho.add(region.point(chain[i]), comp[i]);
      out.push_back(std::move(rho));
    }
  });
  return out;
}

std::vector<long long> count_chains(const Region& region, int max_size) {
  std::vector<long long> counts(static_cast<std::size_t>(max_size + 1), 0);
  if (max_size < 1) return counts;
  for_each_chain(region, max_size,
                 [&](const std::vector<int>& chain) { ++counts[chain.size()]; });
  return counts;
}

std::vector<ColoredPartition> embeddings(const ColoredPartition& pi, const Rank& rank) {
  std::vector<ColoredPartition> out;
  for (auto& rho : sub_multisets(pi, rank.k + 1)) {
    if (is_leading_term(rho, rank)) out.push_back(std::move(rho));
  }
  return out;
}

long long n_count(const ColoredPartition& pi, const Rank& rank) {
  const auto e = static_cast<long long>(embeddings(pi, rank).size());
  return std::max(e - 1, 0LL);
}

}  // namespace cascade

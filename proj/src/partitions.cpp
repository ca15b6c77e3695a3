#include "cascade/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cascade {

int Shape::degree() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Shape::key() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += '+';
    out += std::to_string(-parts[i]);
  }
  return out;
}

Shape Shape::from_degrees(std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end());
  return Shape{std::move(degrees)};
}

ColoredPartition::ColoredPartition(std::initializer_list<std::pair<const ArrayPoint, int>> parts) {
  for (const auto& [p, m] : parts) add(p, m);
}

ColoredPartition::ColoredPartition(Parts parts) {
  for (const auto& [p, m] : parts) add(p, m);
}

void ColoredPartition::add(const ArrayPoint& p, int m) {
  if (m <= 0) throw std::invalid_argument("multiplicity must be positive");
  parts_[p] += m;
}

int ColoredPartition::multiplicity(const ArrayPoint& p) const {
  const auto it = parts_.find(p);
  return it == parts_.end() ? 0 : it->second;
}

int ColoredPartition::length() const {
  int total = 0;
  for (const auto& [p, m] : parts_) total += m;
  return total;
}

int ColoredPartition::degree(const Rank& rank) const {
  int total = 0;
  for (const auto& [p, m] : parts_) total += m * degree_of(rank, p);
  return total;
}

std::vector<ArrayPoint> ColoredPartition::support() const {
  std::vector<ArrayPoint> out;
  out.reserve(parts_.size());
  for (const auto& [p, m] : parts_) out.push_back(p);
  return out;
}

std::vector<ArrayPoint> ColoredPartition::sequence() const {
  std::vector<ArrayPoint> out;
  for (const auto& [p, m] : parts_) out.insert(out.end(), static_cast<std::size_t>(m), p);
  return out;
}

std::string ColoredPartition::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [p, m] : parts_) {
    if (!first) out += ' ';
    first = false;
    out += cascade::to_string(p);
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out + "}";
}

bool divides(const ColoredPartition& rho, const ColoredPartition& pi) {
  for (const auto& [p, m] : rho.parts()) {
    if (pi.multiplicity(p) < m) return false;
  }
  return true;
}

namespace {

void collect_sub_multisets(const std::vector<std::pair<ArrayPoint, int>>& items, std::size_t pos,
                           int remaining, ColoredPartition::Parts& current,
                           std::vector<ColoredPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (pos == items.size()) return;
  const auto& [p, m] = items[pos];
  for (int take = std::min(m, remaining); take >= 0; --take) {
    if (take > 0) current[p] = take;
    collect_sub_multisets(items, pos + 1, remaining - take, current, out);
    if (take > 0) current.erase(p);
  }
}

}  // namespace

std::vector<ColoredPartition> sub_multisets(const ColoredPartition& pi, int length) {
  std::vector<ColoredPartition> out;
  if (length < 0 || length > pi.length()) return out;
  const std::vector<std::pair<ArrayPoint, int>> items(pi.parts().begin(), pi.parts().end());
  ColoredPartition::Parts current;
  collect_sub_multisets(items, 0, length, current, out);
  return out;
}

Shape shape_of(const ColoredPartition& pi, const Rank& rank) {
  std::vector<int> degrees;
  for (const auto& [p, m] : pi.parts()) degrees.insert(degrees.end(), m, degree_of(rank, p));
  return Shape::from_degrees(std::move(degrees));
}

PartitionEnumerator::PartitionEnumerator(std::span<const ArrayPoint> region, int length)
    : region_(region) {
  if (length < 0) throw std::invalid_argument("partition length must be >= 0");
  indices_.assign(static_cast<std::size_t>(length), 0);
  done_ = length > 0 && region.empty();
}

PartitionEnumerator PartitionEnumerator::with_first(std::span<const ArrayPoint> region, int length,
                                                    int first) {
  PartitionEnumerator e(region, length);
  if (length == 0 || first < 0 || first >= static_cast<int>(region.size())) {
    e.done_ = true;
    return e;
  }
  std::fill(e.indices_.begin(), e.indices_.end(), first);
  e.pinned_first_ = first;
  return e;
}

ColoredPartition PartitionEnumerator::current() const {
  ColoredPartition pi;
  for (int i : indices_) pi.add(region_[static_cast<std::size_t>(i)]);
  return pi;
}

void PartitionEnumerator::next() {
  if (done_) return;
  const int top = static_cast<int>(region_.size()) - 1;
  const std::size_t lowest = pinned_first_ >= 0 ? 1 : 0;
  for (std::size_t pos = indices_.size(); pos-- > lowest;) {
    if (indices_[pos] < top) {
      const int v = indices_[pos] + 1;
      std::fill(indices_.begin() + static_cast<std::ptrdiff_t>(pos), indices_.end(), v);
      return;
    }
  }
  done_ = true;
}

std::vector<ColoredPartition> enumerate_partitions(std::span<const ArrayPoint> region,
                                                   int length) {
  std::vector<ColoredPartition> out;
  for (PartitionEnumerator e(region, length); !e.done(); e.next()) out.push_back(e.current());
  return out;
}

std::strong_ordering compare(const ColoredPartition& a, const ColoredPartition& b,
                             const Rank& rank) {
  if (auto c = b.length() <=> a.length(); c != 0) return c;
  if (auto c = a.degree(rank) <=> b.degree(rank); c != 0) return c;
  const auto sa = a.sequence();
  const auto sb = b.sequence();
  return std::lexicographical_compare_three_way(sa.begin(), sa.end(), sb.begin(), sb.end());
}

}  // namespace cascade

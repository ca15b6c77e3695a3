#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cascade/geometry.hpp"

namespace cascade {

/// Ordinary partition obtained from the degrees of the parts.  Stored as the
/// multiset of (negative) degrees sorted by descending absolute value.
struct Shape {
  std::vector<int> parts;

  int size() const { return static_cast<int>(parts.size()); }
  int degree() const;
  /// "3+2+1+1" style key (absolute degrees, descending).
  std::string key() const;
  static Shape from_degrees(std::vector<int> degrees);

  friend auto operator<=>(const Shape&, const Shape&) = default;
};

/// Finite multiset of array points.  Multiplicities are always positive;
/// the empty partition is the unit.
class ColoredPartition {
 public:
  using Parts = std::map<ArrayPoint, int>;

  ColoredPartition() = default;
  ColoredPartition(std::initializer_list<std::pair<const ArrayPoint, int>> parts);
  explicit ColoredPartition(Parts parts);

  /// Adds `m` copies of `p`; m must be positive.
  void add(const ArrayPoint& p, int m = 1);

  int multiplicity(const ArrayPoint& p) const;
  const Parts& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  /// l(pi): number of parts counted with multiplicity.
  int length() const;
  /// |pi|: sum of part degrees.
  int degree(const Rank& rank) const;
  std::vector<ArrayPoint> support() const;
  /// Parts expanded with multiplicity in row-major order.
  std::vector<ArrayPoint> sequence() const;

  std::string to_string() const;

  friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;

 private:
  Parts parts_;
};

/// rho(a) <= pi(a) for every point a.
bool divides(const ColoredPartition& rho, const ColoredPartition& pi);

/// Every sub-multiset of `pi` of length `length`, each once; empty if out of range.
std::vector<ColoredPartition> sub_multisets(const ColoredPartition& pi, int length);

Shape shape_of(const ColoredPartition& pi, const Rank& rank);

/// Stars-and-bars walk over the multisets of size L drawn from `region`,
/// lexicographic in the index sequence (row-major point order, then multiplicity).
class PartitionEnumerator {
 public:
  PartitionEnumerator(std::span<const ArrayPoint> region, int length);

  /// Restricts the walk to multisets whose smallest point index is `first`.
  static PartitionEnumerator with_first(std::span<const ArrayPoint> region, int length, int first);

  bool done() const { return done_; }
  /// Current multiset as a non-decreasing sequence of region indices.
  std::span<const int> indices() const { return indices_; }
  ColoredPartition current() const;
  void next();

 private:
  std::span<const ArrayPoint> region_;
  std::vector<int> indices_;
  int pinned_first_ = -1;
  bool done_ = false;
};

std::vector<ColoredPartition> enumerate_partitions(std::span<const ArrayPoint> region, int length);

/// Deterministic total order: longer partitions first, then lower degree,
/// then lexicographic on the expanded row-major part sequence.
std::strong_ordering compare(const ColoredPartition& a, const ColoredPartition& b,
                             const Rank& rank);

}  // namespace cascade

#pragma once

// The array of negative root vectors of C_n^(1): an infinite strip of
// triangles, one per degree -d, laid out on integer (row, col) positions
// with rows 1..2n+1 numbered bottom-up.  Odd d gives an upright triangle,
// even d an inverted one, and the pattern repeats every two triangles with
// a horizontal shift of 2n.  Triangles d = 1, 2, 3 tile the trapezoid T.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cascade {

/// Rank of C_n together with the level k.
struct Rank {
  int n = 1;
  int k = 2;

  Rank() = default;
  explicit Rank(int n_, int k_ = 2) : n(n_), k(k_) {
    if (n < 1) throw std::invalid_argument("rank n must be >= 1, got " + std::to_string(n));
    if (k < 1) throw std::invalid_argument("level k must be >= 1, got " + std::to_string(k));
  }

  /// dim sp_{2n} = n(2n+1); also the point count of one triangle.
  int dim() const { return n * (2 * n + 1); }
  int rows() const { return 2 * n + 1; }

  friend bool operator==(const Rank&, const Rank&) = default;
};

/// A position of the array in global coordinates.  Inside the trapezoid
/// T these are exactly the trapezoid coordinates: row in [1, 2n+1], col in
/// [1, 4n+1-row].  Ordering is row-major, bottom row first.
struct ArrayPoint {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const ArrayPoint&, const ArrayPoint&) = default;
};

using TrapezoidPoint = ArrayPoint;

std::string to_string(const ArrayPoint& p);

/// A point addressed by its triangle B (x) t^{-d} and local coordinates.
struct StripPoint {
  int d = 1;
  int local_row = 1;
  int local_col = 1;

  friend constexpr auto operator<=>(const StripPoint&, const StripPoint&) = default;
};

/// Weight label eps_first + eps_second; a negative value -a stands for -eps_a.
struct RootLabel {
  int first = 0;
  int second = 0;

  bool is_cartan() const { return first == -second; }
  friend constexpr auto operator<=>(const RootLabel&, const RootLabel&) = default;
};

/// "a,b" with negative indices written as "-a".
std::string to_string(const RootLabel& label);

bool in_trapezoid(const Rank& rank, const ArrayPoint& p);

/// All trapezoid points in row-major order (bottom row first); 3n(2n+1) of them.
std::vector<TrapezoidPoint> trapezoid_points(const Rank& rank);

/// Cone order: a is below b and inside the cone spanned downward from b.
constexpr bool leq(const ArrayPoint& a, const ArrayPoint& b) {
  return a.row <= b.row && b.col <= a.col && a.col <= b.col + (b.row - a.row);
}

constexpr bool comparable(const ArrayPoint& a, const ArrayPoint& b) {
  return leq(a, b) || leq(b, a);
}

/// Trapezoid points on `row` lying in the cone below `b`.
/// Throws std::out_of_range("row out of range") unless 1 <= row <= 2n+1;
/// rows above b give an empty section.
std::vector<TrapezoidPoint> cone_section(const Rank& rank, const TrapezoidPoint& b, int row);

bool is_valid(const Rank& rank, const StripPoint& p);

/// Global position of a strip point.  Throws std::invalid_argument on bad local coordinates.
ArrayPoint strip_global(const Rank& rank, const StripPoint& p);

/// Inverse of strip_global.  Throws std::invalid_argument if `p` is not an array position.
StripPoint strip_local(const Rank& rank, const ArrayPoint& p);

constexpr int degree_of(const StripPoint& p) { return -p.d; }

/// Degree of the triangle containing a global position.
int degree_of(const Rank& rank, const ArrayPoint& p);

/// Root-vector label of a local position (same for every triangle).
RootLabel root_label(const Rank& rank, int local_row, int local_col);

/// A finite set of array points with the cone order tabulated for fast
/// index-based queries.  Points are stored in row-major order.
class Region {
 public:
  /// Triangles d = 1, 2, 3: the trapezoid T with its long base down.
  static Region trapezoid(const Rank& rank);
  /// Triangles d = 2, 3, 4: the trapezoid T' with its long base up.
  static Region flipped_trapezoid(const Rank& rank);
  /// Union of the triangles first_d .. last_d of the strip.
  static Region triangles(const Rank& rank, int first_d, int last_d);

  const Rank& rank() const { return rank_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<ArrayPoint>& points() const { return points_; }
  const ArrayPoint& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
  int degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }

  bool leq(int a, int b) const { return leq_[index(a, b)] != 0; }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  /// Index of a point, or -1 if it is not in the region.
  int index_of(const ArrayPoint& p) const;

 private:
  Region(const Rank& rank, std::vector<ArrayPoint> points);
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * points_.size() + static_cast<std::size_t>(b);
  }

  Rank rank_;
  std::vector<ArrayPoint> points_;
  std::vector<int> degrees_;
  std::vector<std::uint8_t> leq_;
  int min_col_ = 0;
  int width_ = 0;
  std::vector<int> lookup_;
};

}  // namespace cascade

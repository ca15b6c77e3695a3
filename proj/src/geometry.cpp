#include "cascade/geometry.hpp"

#include <algorithm>

namespace cascade {

std::string to_string(const ArrayPoint& p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

std::string to_string(const RootLabel& label) {
  return std::to_string(label.first) + "," + std::to_string(label.second);
}

bool in_trapezoid(const Rank& rank, const ArrayPoint& p) {
  return p.row >= 1 && p.row <= rank.rows() && p.col >= 1 && p.col <= 4 * rank.n + 1 - p.row;
}

std::vector<TrapezoidPoint> trapezoid_points(const Rank& rank) {
  std::vector<TrapezoidPoint> out;
  out.reserve(static_cast<std::size_t>(3 * rank.dim()));
  for (int i = 1; i <= rank.rows(); ++i) {
    for (int j = 1; j <= 4 * rank.n + 1 - i; ++j) out.push_back({i, j});
  }
  return out;
}

std::vector<TrapezoidPoint> cone_section(const Rank& rank, const TrapezoidPoint& b, int row) {
  if (row < 1 || row > rank.rows()) throw std::out_of_range("row out of range");
  std::vector<TrapezoidPoint> out;
  if (row > b.row) return out;
  const int lo = std::max(1, b.col);
  const int hi = std::min(4 * rank.n + 1 - row, b.col + (b.row - row));
  for (int j = lo; j <= hi; ++j) out.push_back({row, j});
  return out;
}

bool is_valid(const Rank& rank, const StripPoint& p) {
  const int two_n = 2 * rank.n;
  return p.d >= 1 && p.local_row >= 1 && p.local_row <= two_n && p.local_col >= 1 &&
         p.local_col <= two_n + 1 - p.local_row;
}

ArrayPoint strip_global(const Rank& rank, const StripPoint& p) {
  if (!is_valid(rank, p)) throw std::invalid_argument("invalid strip point");
  const int two_n = 2 * rank.n;
  if (p.d % 2 == 1) {
    const int t = (p.d - 1) / 2;
    return {p.local_row, p.local_col + two_n * t};
  }
  const int t = (p.d - 2) / 2;
  return {two_n + 2 - p.local_row, p.local_col + p.local_row - 1 + two_n * t};
}

StripPoint strip_local(const Rank& rank, const ArrayPoint& p) {
  const int two_n = 2 * rank.n;
  if (p.row < 1 || p.row > two_n + 1 || p.col < 1) {
    throw std::invalid_argument("not an array position: " + to_string(p));
  }
  const int t = (p.col - 1) / two_n;
  const int offset = (p.col - 1) % two_n + 1;
  if (offset <= two_n + 1 - p.row) return {2 * t + 1, p.row, offset};
  const int local_row = two_n + 2 - p.row;
  return {2 * t + 2, local_row, offset - local_row + 1};
}

int degree_of(const Rank& rank, const ArrayPoint& p) { return degree_of(strip_local(rank, p)); }

RootLabel root_label(const Rank& rank, int local_row, int local_col) {
  const int two_n = 2 * rank.n;
  if (local_row < 1 || local_row > two_n || local_col < 1 || local_col > two_n + 1 - local_row) {
    throw std::invalid_argument("root_label: local coordinates out of range");
  }
  // s = (+1, ..., +n, -n, ..., -1), 1-based
  auto signed_index = [n = rank.n](int pos) { return pos <= n ? pos : -(2 * n + 1 - pos); };
  return {signed_index(local_col), signed_index(local_col + local_row - 1)};
}

Region::Region(const Rank& rank, std::vector<ArrayPoint> points)
    : rank_(rank), points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  const std::size_t count = points_.size();
  degrees_.reserve(count);
  for (const auto& p : points_) degrees_.push_back(degree_of(rank_, p));

  leq_.assign(count * count, 0);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      leq_[a * count + b] = cascade::leq(points_[a], points_[b]) ? 1 : 0;
    }
  }

  if (!points_.empty()) {
    const auto [lo, hi] = std::minmax_element(
        points_.begin(), points_.end(), [](const auto& x, const auto& y) { return x.col < y.col; });
    min_col_ = lo->col;
    width_ = hi->col - lo->col + 1;
    lookup_.assign(static_cast<std::size_t>(rank_.rows() * width_), -1);
    for (std::size_t i = 0; i < count; ++i) {
      const auto& p = points_[i];
      lookup_[static_cast<std::size_t>((p.row - 1) * width_ + (p.col - min_col_))] =
          static_cast<int>(i);
    }
  }
}

int Region::index_of(const ArrayPoint& p) const {
  if (p.row < 1 || p.row > rank_.rows() || p.col < min_col_ || p.col >= min_col_ + width_) {
    return -1;
  }
  return lookup_[static_cast<std::size_t>((p.row - 1) * width_ + (p.col - min_col_))];
}

Region Region::triangles(const Rank& rank, int first_d, int last_d) {
  if (first_d < 1 || last_d < first_d) throw std::invalid_argument("invalid triangle range");
  std::vector<ArrayPoint> pts;
  const int two_n = 2 * rank.n;
  for (int d = first_d; d <= last_d; ++d) {
    for (int lr = 1; lr <= two_n; ++lr) {
      for (int lc = 1; lc <= two_n + 1 - lr; ++lc) pts.push_back(strip_global(rank, {d, lr, lc}));
    }
  }
  return Region(rank, std::move(pts));
}

Region Region::trapezoid(const Rank& rank) { return triangles(rank, 1, 3); }

Region Region::flipped_trapezoid(const Rank& rank) { return triangles(rank, 2, 4); }

}  // namespace cascade

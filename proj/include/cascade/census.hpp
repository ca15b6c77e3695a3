#pragma once

// Exhaustive counting over the trapezoid, independent of the closed forms.
//
//   oracle_full      every partition of length k+2 supported in T, summing N(pi)
//   oracle_supports  every support set of each type, by a pruned walk of T
//   oracle_flipped   the same walk on the trapezoid T' with its long base up
//
// The kernels here are OpenMP-parallel over the first point of the
// enumeration; `cascade::serial` keeps straightforward reference versions
// built on the generic partition API for testing.

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cascade/exact_int.hpp"
#include "cascade/geometry.hpp"
#include "cascade/partitions.hpp"
#include "cascade/support_type.hpp"

namespace cascade {

using Count = long long;

/// Raised when a full-oracle run exceeds the configured rank cap.
class OracleCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Classification over an abstract point set of size m: leq(i, j) and
// row(i) address its elements by position.
template <typename Leq, typename Row>
std::optional<SupportType> classify(int m, const Leq& leq, const Row& row) {
  if (m < 1) return std::nullopt;
  int b = -1;
  int c = -1;
  int incomparable = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (!leq(i, j) && !leq(j, i)) {
        if (++incomparable > 1) return std::nullopt;
        b = i;
        c = j;
      }
    }
  }
  if (incomparable == 0) {
    if (m >= 2) return SupportType::a(m);
    return std::nullopt;
  }
  int above = 0;
  int below = 0;
  for (int x = 0; x < m; ++x) {
    if (x == b || x == c) continue;
    if (leq(b, x) && leq(c, x)) {
      ++above;
    } else if (leq(x, b) && leq(x, c)) {
      ++below;
    } else {
      return std::nullopt;
    }
  }
  const Delta delta = row(b) == row(c) ? Delta::SameRow : Delta::DiffRow;
  if (above > 0 && below == 0) return SupportType::b(above, delta);
  if (above == 0 && below > 0) return SupportType::c(delta, below);
  if (above > 0 && below > 0) return SupportType::d(above, delta, below);
  return std::nullopt;
}

}  // namespace detail

/// Classification of a support set (duplicates ignored); nullopt for sets of
/// no listed type, including single points and lone incomparable pairs.
std::optional<SupportType> classify_support(std::span<const ArrayPoint> support);

/// Same classification for region indices.
std::optional<SupportType> classify_indices(const Region& region, std::span<const int> indices);

struct CensusReport {
  Rank rank;
  /// Support sets per type in T.
  std::map<SupportType, Count> sigma;
  /// Sum of N(pi) per support type.
  std::map<SupportType, Count> n_by_type;
  /// Sum of N(pi) over partitions whose support has no type; must be 0.
  Count n_unclassified = 0;
  /// Sum of N(pi) per degree |pi|, every degree of a length-(k+2) partition of T present.
  std::map<int, Count> n_by_degree;
  /// Sum of N(pi) per shape, every shape over degrees -1..-3 present.
  std::map<Shape, Count> n_by_shape;
  Count total = 0;
  /// Number of partitions visited (0 for support-only reports).
  Count partitions = 0;

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

struct OracleOptions {
  /// 0 means the OpenMP default.
  int threads = 0;
  /// Largest n accepted by oracle_full.
  int full_cap = 4;
};

/// Every partition of length k+2 supported in T.  Fills n_by_type,
/// n_unclassified, n_by_degree, n_by_shape, total and partitions.
/// Throws OracleCapError("oracle_full capped ...") if n > full_cap.
CensusReport oracle_full(const Rank& rank, const OracleOptions& options = {});

/// Support-set counts per type for all sets of size <= max_size in `region`.
std::map<SupportType, Count> count_supports(const Region& region, int max_size, int threads = 0);

/// Sigma_T(t) by walking T.
Count oracle_supports(const Rank& rank, const SupportType& t, int threads = 0);

/// Sigma_{T'}(t) on the trapezoid with its long base up.
Count oracle_flipped(const Rank& rank, const SupportType& t, int threads = 0);

/// n_per_support(k, t) * oracle_supports(rank, t).
ExactInt n_by_type_from_supports(const Rank& rank, const SupportType& t, int threads = 0);

/// Support-based report for the level-k types: sigma, n_by_type and total;
/// degree and shape tables stay empty.
CensusReport supports_report(const Rank& rank, int threads = 0);

/// Embedding-count profile of every support in T:
/// support (row-major point list) -> {#E(pi) -> number of length-(k+2) partitions}.
using EmbeddingProfile = std::map<std::vector<ArrayPoint>, std::map<int, Count>>;
EmbeddingProfile embedding_profiles(const Rank& rank);

/// Every shape of `length` parts over degrees -1..-max_degree, sorted.
std::vector<Shape> all_shapes(int length, int max_degree);

namespace serial {

/// Reference oracle_full: generic enumerator, sub_multisets and classify_support.
CensusReport oracle_full(const Rank& rank);

/// Reference support counts: every subset of size 2..max_size, classified directly.
std::map<SupportType, Count> count_supports(const Region& region, int max_size);

}  // namespace serial

}  // namespace cascade

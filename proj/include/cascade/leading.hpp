#pragma once

// Leading terms of the level-k relations are the partitions of length k+1
// whose support is a zig-zag downward line, i.e. a chain a_1 > ... > a_r
// of the cone order.  E(pi) collects the leading terms dividing pi and
// N(pi) = max(#E(pi) - 1, 0).

#include <span>
#include <vector>

#include "cascade/geometry.hpp"
#include "cascade/partitions.hpp"

namespace cascade {

/// Pairwise comparable under the cone order (distinct points, so rows differ).
bool is_chain(std::span<const ArrayPoint> points);

bool is_leading_term(const ColoredPartition& rho, const Rank& rank);

/// Every leading term supported in `region`: chains of size r <= k+1 in
/// row-descending order, each with its compositions m_1 + ... + m_r = k+1
/// in lexicographic order.
std::vector<ColoredPartition> enumerate_leading_terms(const Rank& rank, const Region& region);

/// Counts chains of each size 1..max_size in `region` (index r holds size r).
std::vector<long long> count_chains(const Region& region, int max_size);

/// E(pi), in the order produced by sub_multisets.
std::vector<ColoredPartition> embeddings(const ColoredPartition& pi, const Rank& rank);

/// N(pi).
long long n_count(const ColoredPartition& pi, const Rank& rank);

}  // namespace cascade

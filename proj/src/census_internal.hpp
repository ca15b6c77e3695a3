#pragma once

#include "cascade/census.hpp"

namespace cascade::detail {

/// Full-oracle report with every type, degree and shape key present at 0.
CensusReport empty_full_report(const Rank& rank);

int resolve_threads(int threads);

inline Count to_count(ExactInt v) {
  const auto c = v.to_int64();
  if (!c) throw OverflowError("count exceeds 64 bits: " + v.to_string());
  return *c;
}

}  // namespace cascade::detail

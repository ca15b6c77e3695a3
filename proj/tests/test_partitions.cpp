#include <doctest.h>

#include <set>

#include "cascade/closed_forms.hpp"
#include "cascade/partitions.hpp"

using namespace cascade;

namespace {

const ArrayPoint x{1, 1};
const ArrayPoint y{1, 2};
const ArrayPoint z{2, 1};

}  // namespace

TEST_CASE("divides") {
  CHECK(divides(ColoredPartition{{x, 1}}, ColoredPartition{{x, 2}, {y, 1}}));
  CHECK_FALSE(divides(ColoredPartition{{x, 3}}, ColoredPartition{{x, 2}, {y, 2}}));
  CHECK(divides(ColoredPartition{}, ColoredPartition{{x, 2}}));
  CHECK(divides(ColoredPartition{}, ColoredPartition{}));
}

TEST_CASE("partition basics") {
  ColoredPartition pi{{x, 2}, {z, 1}};
  CHECK(pi.length() == 3);
  CHECK(pi.multiplicity(x) == 2);
  CHECK(pi.multiplicity(y) == 0);
  CHECK(pi.support() == std::vector<ArrayPoint>{x, z});
  CHECK(pi.sequence() == std::vector<ArrayPoint>{x, x, z});
  CHECK_THROWS(pi.add(y, 0));
  pi.add(x);
  CHECK(pi.multiplicity(x) == 3);
  CHECK(ColoredPartition{}.empty());
  CHECK(ColoredPartition{}.length() == 0);
}

TEST_CASE("sub_multisets") {
  const auto two = sub_multisets(ColoredPartition{{x, 2}, {y, 1}}, 2);
  CHECK(two.size() == 2);
  const ColoredPartition pi{{x, 1}, {y, 1}, {z, 2}};
  const auto three = sub_multisets(pi, 3);
  CHECK(three.size() == 3);
  std::set<std::string> keys;
  for (const auto& s : three) keys.insert(s.to_string());
  CHECK(keys.size() == 3);
  CHECK(keys.count(ColoredPartition{{x, 1}, {z, 2}}.to_string()) == 1);
  const auto unit = sub_multisets(pi, 0);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].empty());
  CHECK(sub_multisets(pi, 5).empty());

  // |sub_multisets| is the coefficient of z^L in prod (1 + ... + z^m)
  const ColoredPartition big{{x, 3}, {y, 2}, {z, 1}, {{3, 1}, 2}};
  std::vector<long long> poly{1};
  for (const auto& [p, m] : big.parts()) {
    std::vector<long long> next(poly.size() + static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      for (int j = 0; j <= m; ++j) next[i + static_cast<std::size_t>(j)] += poly[i];
    }
    poly = next;
  }
  for (int len = 0; len <= big.length(); ++len) {
    CHECK(static_cast<long long>(sub_multisets(big, len).size()) == poly[static_cast<std::size_t>(len)]);
    for (const auto& s : sub_multisets(big, len)) CHECK(divides(s, big));
  }
}

TEST_CASE("shapes") {
  const Rank rank(1);
  // degrees -3, -3, -2: the third triangle starts at column 3 for n = 1
  const ArrayPoint d3a{1, 3};
  const ArrayPoint d3b{1, 4};
  const ArrayPoint d2{2, 2};
  REQUIRE(degree_of(rank, d3a) == -3);
  REQUIRE(degree_of(rank, d3b) == -3);
  REQUIRE(degree_of(rank, d2) == -2);
  const Shape s = shape_of(ColoredPartition{{d3a, 1}, {d3b, 1}, {d2, 1}}, rank);
  CHECK(s.parts == std::vector<int>{-3, -3, -2});
  CHECK(s.key() == "3+3+2");
  CHECK(s.degree() == -8);
  CHECK(shape_of(ColoredPartition{{d3b, 1}, {d2, 1}, {d3a, 1}}, rank) == s);
  CHECK(shape_of(ColoredPartition{}, rank).parts.empty());
  const Shape ones = shape_of(ColoredPartition{{{1, 1}, 4}}, rank);
  CHECK(ones.key() == "1+1+1+1");
  CHECK(ones.degree() == -4);
  CHECK(Shape::from_degrees({-1, -3, -2, -1}).key() == "3+2+1+1");
}

TEST_CASE("enumerator counts") {
  const std::vector<ArrayPoint> three{{1, 1}, {1, 2}, {2, 1}};
  CHECK(enumerate_partitions(three, 4).size() == 15);
  const auto t1 = trapezoid_points(Rank(1));
  CHECK(enumerate_partitions(t1, 4).size() == 495);
  const auto t2 = trapezoid_points(Rank(2));
  long long count = 0;
  for (PartitionEnumerator e(t2, 4); !e.done(); e.next()) ++count;
  CHECK(count == 40920);

  // no duplicates, binomial counts, and pinned-first slices partition the space
  for (std::size_t size = 1; size <= 12; size += 3) {
    const std::vector<ArrayPoint> region(t2.begin(), t2.begin() + static_cast<long>(size));
    for (int len = 1; len <= 5; ++len) {
      std::set<std::string> seen;
      for (const auto& p : enumerate_partitions(region, len)) {
        CHECK(p.length() == len);
        seen.insert(p.to_string());
      }
      const ExactInt expected = binomial(static_cast<long long>(size) + len - 1, len);
      CHECK(ExactInt{static_cast<long long>(seen.size())} == expected);
      long long sliced = 0;
      for (int first = 0; first < static_cast<int>(size); ++first) {
        for (auto e = PartitionEnumerator::with_first(region, len, first); !e.done(); e.next()) {
          CHECK(e.indices()[0] == first);
          ++sliced;
        }
      }
      CHECK(ExactInt{sliced} == expected);
    }
  }
}

TEST_CASE("partition order") {
  const Rank rank(1);
  const ColoredPartition five{{{1, 1}, 5}};
  const ColoredPartition four{{{1, 4}, 4}};
  CHECK(compare(five, four, rank) == std::strong_ordering::less);
  CHECK(compare(four, five, rank) == std::strong_ordering::greater);
  CHECK(compare(four, four, rank) == std::strong_ordering::equal);
  // equal length; degree -9 before -8
  const ColoredPartition m9{{{1, 3}, 3}};      // 3 * -3
  const ColoredPartition m8{{{1, 3}, 2}, {{2, 2}, 1}};  // -3 -3 -2
  REQUIRE(m9.degree(rank) == -9);
  REQUIRE(m8.degree(rank) == -8);
  CHECK(compare(m9, m8, rank) == std::strong_ordering::less);

  const auto all = enumerate_partitions(trapezoid_points(rank), 2);
  std::vector<ColoredPartition> sample(all.begin(), all.begin() + 30);
  sample.push_back(five);
  sample.push_back(m8);
  for (const auto& a : sample) {
    for (const auto& b : sample) {
      const auto ab = compare(a, b, rank);
      CHECK((ab < 0) == (compare(b, a, rank) > 0));
      CHECK((ab == 0) == (a == b));
      if (a.length() > b.length()) CHECK(ab < 0);
      if (a.length() == b.length() && a.degree(rank) < b.degree(rank)) CHECK(ab < 0);
      for (const auto& c : sample) {
        if (ab < 0 && compare(b, c, rank) < 0) CHECK(compare(a, c, rank) < 0);
      }
    }
  }
}

#include <doctest.h>

#include <set>

#include "cascade/census.hpp"
#include "cascade/support_type.hpp"

using namespace cascade;

TEST_CASE("type keys round-trip in a fixed order") {
  const auto types = types_for_level(2);
  std::vector<std::string> keys;
  for (const auto& t : types) {
    keys.push_back(t.key());
    CHECK(SupportType::parse(t.key()) == t);
  }
  CHECK(keys == std::vector<std::string>{"A2", "A3", "A4", "B1|", "B2|", "B1||", "B2||", "C|1",
                                         "C|2", "C||1", "C||2", "D1|1", "D1||1"});
  CHECK_FALSE(SupportType::parse("A1").has_value());
  CHECK_FALSE(SupportType::parse("B1").has_value());
  CHECK_FALSE(SupportType::parse("Q2").has_value());
  CHECK_FALSE(SupportType::parse("D1|").has_value());
}

TEST_CASE("type parameters") {
  CHECK(SupportType::a(3).size() == 3);
  CHECK(SupportType::b(2, Delta::DiffRow).size() == 4);
  CHECK(SupportType::d(1, Delta::SameRow, 1).size() == 4);
  CHECK(SupportType::b(1, Delta::SameRow).mirrored() == SupportType::c(Delta::SameRow, 1));
  CHECK(SupportType::d(2, Delta::DiffRow, 1).mirrored() == SupportType::d(1, Delta::DiffRow, 2));
  CHECK(SupportType::a(4).mirrored() == SupportType::a(4));
  CHECK_THROWS_AS(SupportType::a(1), std::invalid_argument);
  CHECK_THROWS_AS(SupportType::b(0, Delta::SameRow), std::invalid_argument);
  CHECK_THROWS_AS(SupportType::d(0, Delta::SameRow, 1), std::invalid_argument);
  for (int k = 1; k <= 4; ++k) {
    std::set<SupportType> unique;
    for (const auto& t : types_for_level(k)) {
      CHECK(t.size() <= k + 2);
      CHECK(t.size() >= 2);
      unique.insert(t);
    }
    CHECK(unique.size() == types_for_level(k).size());
  }
}

TEST_CASE("classification examples") {
  const std::vector<ArrayPoint> b{{2, 1}, {1, 1}, {1, 2}};
  const std::vector<ArrayPoint> c{{2, 1}, {2, 2}, {1, 2}};
  const std::vector<ArrayPoint> d{{3, 1}, {2, 1}, {2, 2}, {1, 2}};
  CHECK(classify_support(b) == SupportType::b(1, Delta::SameRow));
  CHECK(classify_support(c) == SupportType::c(Delta::SameRow, 1));
  CHECK(classify_support(d) == SupportType::d(1, Delta::SameRow, 1));
  const std::vector<ArrayPoint> chain{{1, 1}, {2, 1}, {3, 1}};
  CHECK(classify_support(chain) == SupportType::a(3));
  const std::vector<ArrayPoint> single{{1, 1}};
  CHECK_FALSE(classify_support(single).has_value());
  const std::vector<ArrayPoint> pair{{1, 1}, {1, 2}};
  CHECK_FALSE(classify_support(pair).has_value());
  const std::vector<ArrayPoint> antichain{{1, 1}, {1, 2}, {1, 3}};
  CHECK_FALSE(classify_support(antichain).has_value());
  // diff-row incomparable pair: (2,1) and (1,3) for n = 1
  REQUIRE_FALSE(comparable({2, 1}, {1, 3}));
  const std::vector<ArrayPoint> b_diff{{3, 1}, {2, 1}, {1, 3}};
  CHECK(classify_support(b_diff) == SupportType::b(1, Delta::DiffRow));
  // duplicates are ignored
  const std::vector<ArrayPoint> dup{{2, 1}, {1, 1}, {1, 2}, {1, 1}};
  CHECK(classify_support(dup) == SupportType::b(1, Delta::SameRow));
}

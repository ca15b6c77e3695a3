#include <doctest.h>

#include "cascade/census.hpp"
#include "cascade/closed_forms.hpp"
#include "cascade/leading.hpp"

using namespace cascade;

TEST_CASE("chains") {
  const std::vector<ArrayPoint> a{{2, 1}, {1, 1}};
  const std::vector<ArrayPoint> b{{1, 1}, {1, 2}};
  const std::vector<ArrayPoint> c{{3, 1}, {2, 2}, {1, 2}};
  CHECK(is_chain(a));
  CHECK_FALSE(is_chain(b));
  CHECK(is_chain(c));
  CHECK(is_chain(std::vector<ArrayPoint>{}));
}

TEST_CASE("leading terms") {
  const Rank rank(1);
  CHECK(is_leading_term(ColoredPartition{{{2, 1}, 2}, {{1, 1}, 1}}, rank));
  CHECK_FALSE(is_leading_term(ColoredPartition{{{1, 1}, 1}, {{1, 2}, 1}, {{2, 1}, 1}}, rank));
  CHECK_FALSE(is_leading_term(ColoredPartition{{{2, 1}, 2}}, rank));

  const Region t = Region::trapezoid(rank);
  const auto terms = enumerate_leading_terms(rank, t);
  long long by_size[4] = {0, 0, 0, 0};
  for (const auto& rho : terms) {
    CHECK(is_leading_term(rho, rank));
    ++by_size[rho.support().size()];
  }
  CHECK(by_size[1] == 9);
  CHECK(by_size[2] == 16 * 2);
  const auto chains = count_chains(t, 3);
  CHECK(chains[1] == 9);
  CHECK(chains[2] == 16);
  CHECK(by_size[3] == chains[3]);

  // every chain-supported multiset of length k+1 appears exactly once
  long long expected = 0;
  for (PartitionEnumerator e(t.points(), 3); !e.done(); e.next()) {
    expected += is_leading_term(e.current(), rank) ? 1 : 0;
  }
  CHECK(static_cast<long long>(terms.size()) == expected);
}

TEST_CASE("embeddings and N") {
  const Rank rank(1);
  const ArrayPoint x{1, 1};
  const ArrayPoint y{1, 2};
  const ArrayPoint z{2, 1};
  const ColoredPartition pi{{x, 1}, {y, 1}, {z, 2}};
  const auto e = embeddings(pi, rank);
  REQUIRE(e.size() == 2);
  CHECK(n_count(pi, rank) == 1);
  CHECK(embeddings(ColoredPartition{{x, 4}}, rank).size() == 1);
  CHECK(n_count(ColoredPartition{{x, 4}}, rank) == 0);
  CHECK(embeddings(ColoredPartition{{x, 2}, {y, 2}}, rank).empty());

  const Rank r2(2);
  const ColoredPartition chain4{{{1, 1}, 1}, {{2, 1}, 1}, {{3, 1}, 1}, {{4, 1}, 1}};
  REQUIRE(is_chain(chain4.support()));
  CHECK(n_count(chain4, r2) == 3);
}

TEST_CASE("chain supports of size r carry r embeddings for every composition") {
  for (int n = 1; n <= 2; ++n) {
    const Rank rank(n);
    for (PartitionEnumerator e(trapezoid_points(rank), 4); !e.done(); e.next()) {
      const ColoredPartition pi = e.current();
      const auto support = pi.support();
      if (!is_chain(support)) continue;
      CHECK(embeddings(pi, rank).size() == support.size());
    }
  }
}

TEST_CASE("divisibility is monotone for embeddings") {
  const Rank rank(1);
  const Region t = Region::trapezoid(rank);
  int checked = 0;
  for (PartitionEnumerator e(t.points(), 4); !e.done(); e.next()) {
    const ColoredPartition pi = e.current();
    const auto small = embeddings(pi, rank);
    for (const auto& p : t.points()) {
      ColoredPartition bigger = pi;
      bigger.add(p);
      const auto large = embeddings(bigger, rank);
      for (const auto& rho : small) {
        CHECK(std::find(large.begin(), large.end(), rho) != large.end());
      }
      ++checked;
    }
  }
  CHECK(checked == 495 * 9);
}

TEST_CASE("every multi-embedding support has a type (n <= 3)") {
  for (int n = 1; n <= 3; ++n) {
    const Rank rank(n);
    const auto report = serial::oracle_full(rank);
    CHECK(report.n_unclassified == 0);
  }
}

#include <doctest.h>

#include "cascade/census.hpp"
#include "cascade/closed_forms.hpp"

using namespace cascade;

namespace {

ExactInt weyl(int n, std::vector<int> leading) {
  leading.resize(static_cast<std::size_t>(n), 0);
  return weyl_dim(Rank(n), leading);
}

}  // namespace

TEST_CASE("binomials") {
  CHECK(binomial(10, 7) == ExactInt{120});
  CHECK(binomial(1, 2) == ExactInt{0});
  CHECK(binomial(24, 7) == ExactInt{346104});
  CHECK(binomial(5, -1) == ExactInt{0});
  CHECK(binomial(0, 0) == ExactInt{1});
  CHECK(binomial(-1, 0) == ExactInt{0});
  CHECK(binomial(100, 50).to_string() == "100891344545564193334812497256");
}

TEST_CASE("per-support coefficients") {
  CHECK(n_per_support(2, SupportType::a(2)) == ExactInt{3});
  CHECK(n_per_support(2, SupportType::a(3)) == ExactInt{6});
  CHECK(n_per_support(2, SupportType::a(4)) == ExactInt{3});
  CHECK(n_per_support(2, SupportType::b(2, Delta::DiffRow)) == ExactInt{1});
  CHECK(n_per_support(2, SupportType::d(1, Delta::DiffRow, 1)) == ExactInt{1});
  CHECK(n_per_support(3, SupportType::b(1, Delta::SameRow)) == ExactInt{1});
  CHECK(n_per_support(3, SupportType::b(2, Delta::SameRow)) == ExactInt{2});
}

TEST_CASE("nested sums at small n") {
  const Rank r1(1);
  CHECK(sigma_closed(r1, SupportType::a(2)) == ExactInt{16});
  CHECK(sigma_closed(r1, SupportType::a(3)) == ExactInt{8});
  CHECK(sigma_closed(r1, SupportType::a(4)) == ExactInt{0});
  CHECK(sigma_closed(r1, SupportType::d(1, Delta::SameRow, 1)) == ExactInt{2});
  CHECK(sigma_closed(r1, SupportType::b(2, Delta::DiffRow)) == ExactInt{0});
  CHECK(sigma_closed(r1, SupportType::b(1, Delta::SameRow)) == ExactInt{11});
}

TEST_CASE("published polynomials") {
  const Rank r1(1);
  CHECK(n_t_polynomial_value(r1, SupportType::a(4)) == ExactInt{0});
  CHECK(n_t_polynomial_value(r1, SupportType::a(2)) == ExactInt{48});
  ExactInt sum{0};
  for (const auto& t : types_for_level(2)) sum += n_t_polynomial_value(r1, t);
  CHECK(sum == ExactInt{126});
  // types that cannot occur in three rows vanish
  CHECK(n_t_polynomial_value(r1, SupportType::b(2, Delta::DiffRow)) == ExactInt{0});
  CHECK(n_t_polynomial_value(r1, SupportType::c(Delta::DiffRow, 2)) == ExactInt{0});
  CHECK(n_t_polynomial_value(r1, SupportType::d(1, Delta::DiffRow, 1)) == ExactInt{0});
  CHECK_THROWS_AS(n_t_polynomial(SupportType::a(5)), std::invalid_argument);
  CHECK_THROWS_AS(n_t_polynomial_value(Rank(1, 3), SupportType::a(2)), std::invalid_argument);
  for (const auto& t : types_for_level(2)) CHECK(n_t_polynomial(t).degree() <= 8);
}

TEST_CASE("a polynomial that does not divide exactly is a transcription fault") {
  const RationalPoly p({1, 0}, 2, "n/2");
  CHECK(p.evaluate(ExactInt{4}) == ExactInt{2});
  CHECK_THROWS_AS(p.evaluate(ExactInt{3}), TranscriptionFault);
}

TEST_CASE("closed sums, polynomials and the total agree for n in 1..12") {
  for (int n = 1; n <= 12; ++n) {
    const Rank rank(n);
    ExactInt sum{0};
    for (const auto& t : types_for_level(2)) {
      const ExactInt value = n_t_polynomial_value(rank, t);
      CHECK(n_per_support(2, t) * sigma_closed(rank, t) == value);
      sum += value;
    }
    CHECK(sum == n_t_total(rank));
  }
}

TEST_CASE("closed sums match the support walk for n in 1..4") {
  for (int n = 1; n <= 4; ++n) {
    const Rank rank(n);
    const auto walk = count_supports(Region::trapezoid(rank), 4);
    for (const auto& t : types_for_level(2)) {
      const auto it = walk.find(t);
      CHECK(sigma_closed(rank, t) == ExactInt{it == walk.end() ? 0 : it->second});
    }
  }
}

TEST_CASE("totals") {
  CHECK(n_t_total(Rank(1)) == ExactInt{126});
  CHECK(n_t_total(Rank(2)) == ExactInt{3990});
  CHECK(n_t_total(Rank(3)) == ExactInt{40194});
  CHECK(n_t_total(Rank(9)) == ExactInt{53905698});
}

TEST_CASE("Weyl dimensions") {
  CHECK(weyl(3, {2}) == ExactInt{21});
  CHECK(weyl(2, {6}) == ExactInt{84});
  CHECK(weyl(2, {7, 1}) == ExactInt{231});
  CHECK(weyl(1, {0}) == ExactInt{1});
  CHECK(weyl(2, {1, 1}) == ExactInt{5});
  CHECK(weyl(2, {1}) == ExactInt{4});
  CHECK_THROWS_AS(weyl_dim(Rank(2), std::vector<int>{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(weyl_dim(Rank(2), std::vector<int>{1}), std::invalid_argument);

  CHECK(dim_s_theta(Rank(3), 1) == ExactInt{21});
  CHECK(dim_s_theta(Rank(2), 3) == ExactInt{84});
  CHECK(dim_s_theta(Rank(5), 0) == ExactInt{1});
  CHECK(dim_4theta_minus_alpha(Rank(1)) == ExactInt{0});
  CHECK(dim_4theta_minus_alpha(Rank(2)) == ExactInt{231});
  CHECK(dim_4theta_minus_alpha(Rank(3)) == ExactInt{3003});
  for (int n = 1; n <= 10; ++n) {
    for (int s = 0; s <= 4; ++s) CHECK(weyl(n, {2 * s}) == dim_s_theta(Rank(n), s));
    if (n >= 2) CHECK(weyl(n, {7, 1}) == dim_4theta_minus_alpha(Rank(n)));
  }
}

TEST_CASE("dim Q_4 and the equivalent identity") {
  CHECK(dim_q4(Rank(1)) == ExactInt{16});
  CHECK(dim_q4(Rank(2)) == ExactInt{480});
  CHECK(dim_q4(Rank(3)) == ExactInt{4752});
  for (int n = 1; n <= 20; ++n) CHECK(dim_q4(Rank(n)) == ExactInt{2LL * n} * binomial(2LL * n + 6, 7));
  for (int n = 1; n <= 100; ++n) CHECK(equivalence_identity(Rank(n)));
}

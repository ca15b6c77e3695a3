#include <doctest.h>

#include <limits>

#include "cascade/exact_int.hpp"

using cascade::ExactInt;

TEST_CASE("arithmetic and printing") {
  CHECK((ExactInt{7} * ExactInt{-6}).to_string() == "-42");
  CHECK((ExactInt{0}).to_string() == "0");
  CHECK(ExactInt{10} / ExactInt{5} == ExactInt{2});
  CHECK(ExactInt{-7} % ExactInt{3} == ExactInt{-1});
  const ExactInt big = ExactInt{std::numeric_limits<long long>::max()} * ExactInt{1000};
  CHECK(big.to_string() == "9223372036854775807000");
  CHECK_FALSE(big.to_int64().has_value());
  CHECK(ExactInt::parse(big.to_string()) == big);
  CHECK(ExactInt::parse("-123") == ExactInt{-123});
  CHECK_FALSE(ExactInt::parse("12a").has_value());
  CHECK_FALSE(ExactInt::parse("").has_value());
}

TEST_CASE("overflow is detected") {
  const ExactInt huge = ExactInt::from_raw(std::numeric_limits<cascade::int128_t>::max());
  CHECK_THROWS_AS(huge + ExactInt{1}, cascade::OverflowError);
  CHECK_THROWS_AS(huge * ExactInt{2}, cascade::OverflowError);
  CHECK_THROWS_AS(-huge - ExactInt{2}, cascade::OverflowError);
}

TEST_CASE("inexact division is rejected") {
  CHECK(ExactInt::divide_exact(ExactInt{12}, ExactInt{4}, "t") == ExactInt{3});
  CHECK_THROWS_AS(ExactInt::divide_exact(ExactInt{13}, ExactInt{4}, "t"),
                  cascade::InexactDivisionError);
  CHECK_THROWS(ExactInt::divide_exact(ExactInt{1}, ExactInt{0}, "t"));
}

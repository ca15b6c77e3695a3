#include "cascade/exact_int.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace cascade {

namespace {

constexpr int128_t kMin = static_cast<int128_t>(static_cast<unsigned __int128>(1) << 127);

}  // namespace

ExactInt operator/(ExactInt a, ExactInt b) {
  if (b.v_ == 0) throw std::domain_error("ExactInt division by zero");
  if (a.v_ == kMin && b.v_ == -1) throw OverflowError("ExactInt overflow in /");
  return ExactInt::from_raw(a.v_ / b.v_);
}

ExactInt operator%(ExactInt a, ExactInt b) {
  if (b.v_ == 0) throw std::domain_error("ExactInt division by zero");
  if (b.v_ == -1) return ExactInt{0};
  return ExactInt::from_raw(a.v_ % b.v_);
}

ExactInt ExactInt::divide_exact(ExactInt num, ExactInt den, std::string_view what) {
  if (den == ExactInt{0}) throw std::domain_error("division by zero in " + std::string(what));
  if (num % den != ExactInt{0}) {
    throw InexactDivisionError("inexact division in " + std::string(what) + ": " +
                               num.to_string() + " / " + den.to_string());
  }
  return num / den;
}

std::optional<std::int64_t> ExactInt::to_int64() const {
  if (v_ < std::numeric_limits<std::int64_t>::min() ||
      v_ > std::numeric_limits<std::int64_t>::max()) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(v_);
}

std::string ExactInt::to_string() const {
  if (v_ == 0) return "0";
  // Work in the negative range so kMin needs no special case.
  int128_t x = v_ > 0 ? -v_ : v_;
  std::string digits;
  while (x != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
    x /= 10;
  }
  if (v_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::optional<ExactInt> ExactInt::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) return std::nullopt;
  ExactInt acc{0};
  try {
    for (; i < text.size(); ++i) {
      const char c = text[i];
      if (c < '0' || c > '9') return std::nullopt;
      acc = acc * ExactInt{10};
      acc = negative ? acc - ExactInt{c - '0'} : acc + ExactInt{c - '0'};
    }
  } catch (const OverflowError&) {
    return std::nullopt;
  }
  return acc;
}

ExactInt gcd(ExactInt a, ExactInt b) {
  if (a < ExactInt{0}) a = -a;
  if (b < ExactInt{0}) b = -b;
  while (b != ExactInt{0}) {
    ExactInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::ostream& operator<<(std::ostream& os, ExactInt v) { return os << v.to_string(); }

}  // namespace cascade

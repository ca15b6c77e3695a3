#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cascade {

__extension__ typedef __int128 int128_t;

/// Raised when an exact computation would leave the 127-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Raised when a division that must be exact leaves a remainder.
class InexactDivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Signed 128-bit integer whose arithmetic throws instead of wrapping.
class ExactInt {
 public:
  constexpr ExactInt() = default;
  constexpr ExactInt(long long v) : v_(v) {}  // NOLINT: implicit by intent

  static constexpr ExactInt from_raw(int128_t v) {
    ExactInt r;
    r.v_ = v;
    return r;
  }

  constexpr int128_t raw() const { return v_; }

  friend ExactInt operator+(ExactInt a, ExactInt b) {
    int128_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("ExactInt overflow in +");
    return from_raw(r);
  }
  friend ExactInt operator-(ExactInt a, ExactInt b) {
    int128_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("ExactInt overflow in -");
    return from_raw(r);
  }
  friend ExactInt operator*(ExactInt a, ExactInt b) {
    int128_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("ExactInt overflow in *");
    return from_raw(r);
  }
  ExactInt operator-() const { return ExactInt{0} - *this; }

  ExactInt& operator+=(ExactInt o) { return *this = *this + o; }
  ExactInt& operator-=(ExactInt o) { return *this = *this - o; }
  ExactInt& operator*=(ExactInt o) { return *this = *this * o; }

  friend constexpr bool operator==(ExactInt a, ExactInt b) { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(ExactInt a, ExactInt b) {
    return a.v_ <=> b.v_;
  }

  /// Division that must leave no remainder; `what` names the formula in the diagnostic.
  static ExactInt divide_exact(ExactInt num, ExactInt den, std::string_view what);

  /// Floor-free truncating division and remainder, for gcd reductions.
  friend ExactInt operator/(ExactInt a, ExactInt b);
  friend ExactInt operator%(ExactInt a, ExactInt b);

  std::optional<std::int64_t> to_int64() const;
  std::string to_string() const;

  static std::optional<ExactInt> parse(std::string_view text);

 private:
  int128_t v_ = 0;
};

ExactInt gcd(ExactInt a, ExactInt b);

std::ostream& operator<<(std::ostream& os, ExactInt v);

}  // namespace cascade

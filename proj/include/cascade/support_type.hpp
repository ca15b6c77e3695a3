#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cascade {

/// Whether the unique incomparable pair {b, c} of a support shares a row ("|") or not ("||").
enum class Delta { SameRow, DiffRow };

/// Classification tag of supports admitting at least two embeddings:
///   A(r)       chain of r >= 2 points
///   B(r, d)    chain of r points above an incomparable pair
///   C(d, r)    incomparable pair above a chain of r points
///   D(r, d, s) r points above the pair, s points below it
class SupportType {
 public:
  enum class Kind { A, B, C, D };

  static SupportType a(int r);
  static SupportType b(int r, Delta delta);
  static SupportType c(Delta delta, int r);
  static SupportType d(int r, Delta delta, int s);

  Kind kind() const { return kind_; }
  Delta delta() const { return delta_; }
  /// Chain points above the pair; for A the chain size.
  int above() const { return above_; }
  /// Chain points below the pair.
  int below() const { return below_; }
  /// Number of points in a support of this type.
  int size() const;

  /// Same type read in the order-reversed trapezoid: B <-> C, D(r,s) -> D(s,r).
  SupportType mirrored() const;

  /// Stable key: "A2", "B1|", "C||2", "D1|1", ...
  std::string key() const;
  static std::optional<SupportType> parse(std::string_view key);

  friend auto operator<=>(const SupportType&, const SupportType&) = default;

 private:
  SupportType(Kind kind, Delta delta, int above, int below)
      : kind_(kind), delta_(delta), above_(above), below_(below) {}

  // Member order fixes the report order: A2 A3 A4 B1| B2| B1|| B2|| C|1 ...
  Kind kind_;
  Delta delta_;
  int above_;
  int below_;
};

/// Support types carrying N > 0 at level k (those with support size <= k+2),
/// in key order.  For k = 2 these are the thirteen types of the N_T sum.
std::vector<SupportType> types_for_level(int k);

}  // namespace cascade

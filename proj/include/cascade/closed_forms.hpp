#pragma once

// Exact evaluation of the closed counting formulas for the trapezoid T and
// of the dimension formulas they are compared against.  Every division is
// checked exact and every operation overflow-checked.

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cascade/exact_int.hpp"
#include "cascade/geometry.hpp"
#include "cascade/support_type.hpp"

namespace cascade {

/// Raised when a printed polynomial does not divide exactly at an integer point.
class TranscriptionFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the two evaluations of dim Q_4 disagree.
class IdentityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// C(a, b), zero when b < 0, b > a or a < 0.
ExactInt binomial(long long a, long long b);

/// Total N(pi) carried by one support of type t, so that N_T(t) = n_per_support * Sigma_T(t):
///   A(r): (r-1) C(k+1, r-1);  B(r): C(k-1, r-1);  C(r): C(k-1, r-1);  D(r,s): C(k-1, r+s-1).
ExactInt n_per_support(int k, const SupportType& t);

/// Integer polynomial over a single positive denominator.
class RationalPoly {
 public:
  /// Coefficients from the highest power down to the constant term, as printed.
  RationalPoly(std::vector<long long> descending, long long denominator, std::string name);

  int degree() const { return static_cast<int>(ascending_.size()) - 1; }
  const std::string& name() const { return name_; }
  ExactInt denominator() const { return denominator_; }
  ExactInt numerator(ExactInt n) const;
  /// Throws TranscriptionFault("polynomial transcription fault ...") on a nonzero remainder.
  ExactInt evaluate(ExactInt n) const;

 private:
  std::vector<ExactInt> ascending_;
  ExactInt denominator_;
  std::string name_;
};

/// The published N_T(t) polynomial of a level-2 type; throws std::invalid_argument for other types.
const RationalPoly& n_t_polynomial(const SupportType& t);

/// N_T(t) at rank n from the published polynomial.
ExactInt n_t_polynomial_value(const Rank& rank, const SupportType& t);

/// Sigma_T(t) from the nested sums, with the printed summation bounds.
/// Types outside the printed families (e.g. D with r+s outside its range)
/// still evaluate the literal sum; empty ranges contribute 0.
ExactInt sigma_closed(const Rank& rank, const SupportType& t);

/// 7(10n-1)/4 * C(2n+6, 7).
ExactInt n_t_total(const Rank& rank);

/// Weyl dimension of the sp_{2n} module with highest weight `lambda` in
/// epsilon coordinates (weakly decreasing, nonnegative).  Throws
/// std::invalid_argument if lambda is not dominant or has the wrong length.
ExactInt weyl_dim(const Rank& rank, std::span<const int> lambda);

/// dim L(s theta) = C(2n+2s-1, 2s).
ExactInt dim_s_theta(const Rank& rank, int s);

/// dim L(4 theta - alpha_1) = (2n+7)(n-1)/4 * C(2n+5, 6).
ExactInt dim_4theta_minus_alpha(const Rank& rank);

/// dim L(3 theta) + dim L(4 theta) + dim L(4 theta - alpha_1), checked
/// against 2n C(2n+6, 7); throws IdentityViolation on disagreement.
ExactInt dim_q4(const Rank& rank);

/// 9 * 2n C(2n+6,7) - 2 dim L(4 theta) == 7(10n-1)/4 C(2n+6,7).
bool equivalence_identity(const Rank& rank);

}  // namespace cascade

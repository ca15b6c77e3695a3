#include "cascade/closed_forms.hpp"

#include <algorithm>
#include <map>

namespace cascade {

ExactInt binomial(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return ExactInt{0};
  b = std::min(b, a - b);
  ExactInt result{1};
  // result = C(a-b+i, i) after step i, so each division is exact.
  for (long long i = 1; i <= b; ++i) {
    result = ExactInt::divide_exact(result * ExactInt{a - b + i}, ExactInt{i}, "binomial");
  }
  return result;
}

ExactInt n_per_support(int k, const SupportType& t) {
  if (k < 1) throw std::invalid_argument("level k must be >= 1");
  switch (t.kind()) {
    case SupportType::Kind::A:
      return ExactInt{t.above() - 1} * binomial(k + 1, t.above() - 1);
    case SupportType::Kind::B:
      return binomial(k - 1, t.above() - 1);
    case SupportType::Kind::C:
      return binomial(k - 1, t.below() - 1);
    case SupportType::Kind::D:
      return binomial(k - 1, t.above() + t.below() - 1);
  }
  return ExactInt{0};
}

RationalPoly::RationalPoly(std::vector<long long> descending, long long denominator,
                           std::string name)
    : denominator_(denominator), name_(std::move(name)) {
  if (denominator <= 0) throw std::invalid_argument("denominator must be positive");
  if (descending.empty()) descending.push_back(0);
  for (auto it = descending.rbegin(); it != descending.rend(); ++it) ascending_.emplace_back(*it);
}

ExactInt RationalPoly::numerator(ExactInt n) const {
  ExactInt acc{0};
  for (auto it = ascending_.rbegin(); it != ascending_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

ExactInt RationalPoly::evaluate(ExactInt n) const {
  const ExactInt num = numerator(n);
  if (num % denominator_ != ExactInt{0}) {
    throw TranscriptionFault("polynomial transcription fault: " + name_ + " at n=" +
                             n.to_string() + " gives " + num.to_string() + "/" +
                             denominator_.to_string());
  }
  return num / denominator_;
}

namespace {

using Kind = SupportType::Kind;

// Coefficients exactly as published, highest power first.  The A4
// numerator has no n^5 term.
const std::map<SupportType, RationalPoly>& polynomial_table() {
  static const std::map<SupportType, RationalPoly> table = [] {
    std::map<SupportType, RationalPoly> t;
    auto put = [&t](SupportType type, std::vector<long long> c, long long den) {
      t.emplace(type, RationalPoly(std::move(c), den, "N_T(" + type.key() + ")"));
    };
    const Delta same = Delta::SameRow;
    const Delta diff = Delta::DiffRow;
    put(SupportType::a(4), {48, 672, 2296, 0, -4613, 798, 1009, -210, 0}, 280);
    put(SupportType::a(3), {56, 420, 590, -225, -151, 30, 0}, 15);
    put(SupportType::a(2), {20, 60, 19, -3, 0}, 2);
    put(SupportType::b(2, same), {128, 952, 1652, 490, -553, -182, 33, 0}, 630);
    put(SupportType::b(1, same), {48, 140, 120, 25, -3, 0}, 30);
    put(SupportType::b(2, diff), {144, 992, 840, -1456, -1239, 518, 255, -54, 0}, 1260);
    put(SupportType::b(1, diff), {56, 132, 50, -45, -16, 3, 0}, 45);
    put(SupportType::c(same, 2), {16, 112, 160, -20, -101, -2, 15, 0}, 90);
    put(SupportType::c(same, 1), {8, 20, 10, -5, -3, 0}, 6);
    put(SupportType::c(diff, 2), {32, 208, 112, -392, -182, 217, 38, -33, 0}, 315);
    put(SupportType::c(diff, 1), {16, 32, 0, -20, -1, 3, 0}, 15);
    put(SupportType::d(1, same, 1), {256, 1512, 2884, 1575, -686, -567, 66, 0}, 2520);
    put(SupportType::d(1, diff, 1), {72, 368, 448, -322, -707, -28, 187, -18, 0}, 1260);
    return t;
  }();
  return table;
}

// Sum over i_p = lo(p) .. prev-1 of (prev - i_p + 1) * [next level], down to
// level r, where tail(i_r) closes the product.  Empty ranges give 0.
template <typename Lo, typename Tail>
ExactInt descend(int prev, int p, int r, const Lo& lo, const Tail& tail) {
  if (p > r) return tail(prev);
  ExactInt sum{0};
  for (int i = lo(p); i <= prev - 1; ++i) {
    sum += ExactInt{prev - i + 1} * descend(i, p + 1, r, lo, tail);
  }
  return sum;
}

// Sum over i_1 = lo1 .. hi1 of weight(i_1) * descend(i_1, 2, ...).
template <typename Weight, typename Lo, typename Tail>
ExactInt chain_sum(int lo1, int hi1, const Weight& weight, int r, const Lo& lo, const Tail& tail) {
  ExactInt sum{0};
  for (int i = lo1; i <= hi1; ++i) sum += weight(i) * descend(i, 2, r, lo, tail);
  return sum;
}

ExactInt one(int) { return ExactInt{1}; }

ExactInt sigma_chain(int n, int r) {
  return chain_sum(
      r, 2 * n + 1, [n](int i) { return ExactInt{4 * n + 1 - i}; }, r,
      [r](int p) { return r - p + 1; }, one);
}

// Chain of r points above the line l + d, closed by the count of positions of
// the apex x of the pair in the cone below a_r.
// `lo(p)` is the printed lower bound of the p-th row index.
template <typename Lo>
ExactInt upper_chain(int n, int r, int l, int d, const Lo& lo) {
  return chain_sum(
      lo(1), 2 * n + 1, [n](int i) { return ExactInt{4 * n + 1 - i}; }, r, lo,
      [l, d](int ir) { return ExactInt{ir - l - d + 1}; });
}

// Chain of r points below row `apex_row`, whose first point sits in the cone of the apex y.
ExactInt lower_chain(int r, int apex_row) {
  return chain_sum(
      r, apex_row, [apex_row](int i) { return ExactInt{apex_row - i + 1}; }, r,
      [r](int p) { return r - p + 1; }, one);
}

ExactInt sigma_b_same(int n, int r) {
  ExactInt sum{0};
  for (int d = 1; d <= 2 * n + 1 - r; ++d) {
    for (int l = 1; l <= 2 * n + 2 - d - r; ++l) {
      sum += upper_chain(n, r, l, d, [=](int p) { return l + d + r - p; });
    }
  }
  return sum;
}

ExactInt sigma_c_same(int n, int r) {
  ExactInt sum{0};
  for (int d = 1; d <= 2 * n + 1 - r; ++d) {
    for (int l = d + r; l <= 2 * n + 1; ++l) {
      sum += ExactInt{4 * n + 1 - l - d} * lower_chain(r, l - d);
    }
  }
  return sum;
}

ExactInt sigma_d_same(int n, int r, int s) {
  ExactInt sum{0};
  for (int d = 1; d <= (2 * n + 2 - r - s) / 2; ++d) {
    for (int l = s + d; l <= 2 * n + 2 - r - d; ++l) {
      sum += upper_chain(n, r, l, d, [=](int p) { return l + d - r + p; }) * lower_chain(s, l - d);
    }
  }
  return sum;
}

ExactInt sigma_b_diff(int n, int r) {
  ExactInt sum{0};
  for (int d = 1; d <= 2 * n - r; ++d) {
    for (int h = 1; h <= 2 * n + 1 - d - r; ++h) {
      for (int l = h + 1; l <= 2 * n + 2 - d - r; ++l) {
        sum += upper_chain(n, r, l, d, [=](int p) { return l + d + r - p; });
      }
    }
  }
  return ExactInt{2} * sum;
}

ExactInt sigma_c_diff(int n, int r) {
  ExactInt sum{0};
  for (int d = 1; d <= 2 * n - r; ++d) {
    for (int h = 1; h <= 2 * n + 1 - d - r; ++h) {
      for (int l = d + h + r; l <= 2 * n + 1; ++l) {
        sum += ExactInt{4 * n + 1 - l - d} * lower_chain(r, l - d - h);
      }
    }
  }
  return ExactInt{2} * sum;
}

ExactInt sigma_d_diff(int n, int r, int s) {
  ExactInt sum{0};
  for (int d = 1; d <= (2 * n + 1 - r - s) / 2; ++d) {
    for (int h = 1; h <= 2 * n + 2 - 2 * d - r - s; ++h) {
      for (int l = s + d + h; l <= 2 * n + 2 - r - d; ++l) {
        sum += upper_chain(n, r, l, d, [=](int p) { return l - r + d + p; }) *
               lower_chain(s, l - d - h);
      }
    }
  }
  return ExactInt{2} * sum;
}

}  // namespace

const RationalPoly& n_t_polynomial(const SupportType& t) {
  const auto& table = polynomial_table();
  const auto it = table.find(t);
  if (it == table.end()) throw std::invalid_argument("no published N_T polynomial for " + t.key());
  return it->second;
}

ExactInt n_t_polynomial_value(const Rank& rank, const SupportType& t) {
  if (rank.k != 2) throw std::invalid_argument("N_T polynomials are for level k = 2");
  return n_t_polynomial(t).evaluate(ExactInt{rank.n});
}

ExactInt sigma_closed(const Rank& rank, const SupportType& t) {
  const int n = rank.n;
  const bool same = t.delta() == Delta::SameRow;
  switch (t.kind()) {
    case Kind::A:
      return sigma_chain(n, t.above());
    case Kind::B:
      return same ? sigma_b_same(n, t.above()) : sigma_b_diff(n, t.above());
    case Kind::C:
      return same ? sigma_c_same(n, t.below()) : sigma_c_diff(n, t.below());
    case Kind::D:
      return same ? sigma_d_same(n, t.above(), t.below())
                  : sigma_d_diff(n, t.above(), t.below());
  }
  return ExactInt{0};
}

ExactInt n_t_total(const Rank& rank) {
  if (rank.k != 2) throw std::invalid_argument("n_t_total is for level k = 2");
  const ExactInt n{rank.n};
  return ExactInt::divide_exact(ExactInt{7} * (ExactInt{10} * n - ExactInt{1}) *
                                    binomial(2LL * rank.n + 6, 7),
                                ExactInt{4}, "n_t_total");
}

ExactInt weyl_dim(const Rank& rank, std::span<const int> lambda) {
  const int n = rank.n;
  if (static_cast<int>(lambda.size()) != n) {
    throw std::invalid_argument("weyl_dim: weight must have n coordinates");
  }
  for (int i = 0; i < n; ++i) {
    if (lambda[static_cast<std::size_t>(i)] < 0 ||
        (i + 1 < n && lambda[static_cast<std::size_t>(i)] < lambda[static_cast<std::size_t>(i + 1)])) {
      throw std::invalid_argument("weyl_dim: weight is not dominant");
    }
  }
  // rho = (n, n-1, ..., 1); positive roots e_i - e_j, e_i + e_j (i < j), 2 e_i.
  std::vector<long long> shifted(static_cast<std::size_t>(n));
  std::vector<long long> rho(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rho[static_cast<std::size_t>(i)] = n - i;
    shifted[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + n - i;
  }
  ExactInt num{1};
  ExactInt den{1};
  auto factor = [&](long long top, long long bottom) {
    num *= ExactInt{top};
    den *= ExactInt{bottom};
    const ExactInt g = gcd(num, den);
    num = num / g;
    den = den / g;
  };
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    for (std::size_t j = i + 1; j < shifted.size(); ++j) {
      factor(shifted[i] - shifted[j], rho[i] - rho[j]);
      factor(shifted[i] + shifted[j], rho[i] + rho[j]);
    }
    factor(2 * shifted[i], 2 * rho[i]);
  }
  return ExactInt::divide_exact(num, den, "weyl_dim");
}

ExactInt dim_s_theta(const Rank& rank, int s) {
  if (s < 0) throw std::invalid_argument("dim_s_theta: s must be >= 0");
  return binomial(2LL * rank.n + 2LL * s - 1, 2LL * s);
}

ExactInt dim_4theta_minus_alpha(const Rank& rank) {
  const ExactInt n{rank.n};
  return ExactInt::divide_exact((ExactInt{2} * n + ExactInt{7}) * (n - ExactInt{1}) *
                                    binomial(2LL * rank.n + 5, 6),
                                ExactInt{4}, "dim_4theta_minus_alpha");
}

ExactInt dim_q4(const Rank& rank) {
  const ExactInt sum = dim_s_theta(rank, 3) + dim_s_theta(rank, 4) + dim_4theta_minus_alpha(rank);
  const ExactInt closed = ExactInt{2LL * rank.n} * binomial(2LL * rank.n + 6, 7);
  if (sum != closed) {
    throw IdentityViolation("dim Q_4 identity violated at n=" + std::to_string(rank.n) + ": " +
                            sum.to_string() + " != " + closed.to_string());
  }
  return sum;
}

bool equivalence_identity(const Rank& rank) {
  const ExactInt q4 = ExactInt{2LL * rank.n} * binomial(2LL * rank.n + 6, 7);
  return ExactInt{9} * q4 - ExactInt{2} * dim_s_theta(rank, 4) == n_t_total(rank);
}

}  // namespace cascade

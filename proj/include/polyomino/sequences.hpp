#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polyomino/count_table.hpp"
#include "polyomino/numeric.hpp"

namespace polyomino {

// Q(n) = P(n) - sum_{i=1}^{n-1} Q(i) P(n-i), Q(0) = 1: the number of
// polyominoes that are not a concatenation, recovered from P through
// P(n) = sum_{i=1}^{n} Q(i) P(n-i).
// Throws Error("negative-Q") when the input is not a polyomino-like table.
CountTable derive_q(const CountTable& p);

// Inverse of derive_q: P(n) = sum_{i=1}^{n} Q(i) P(n-i), P(0) = 1.
CountTable compose_from_q(const CountTable& q);

// Outcome of a monotonicity scan. `ties` lists every n where two
// consecutive ratios are equal; `violations` lists every n where the
// required inequality fails (for a strict check, ties are violations too).
struct MonotonicityCheck {
  bool holds = true;
  std::vector<int> ties;
  std::vector<int> violations;
};

// P(n)/P(n-1) < P(n+1)/P(n) for 2 <= n <= max_n - 1, strictly.
// Entries are indexed by the middle n. Throws Error("insufficient") if
// max_n < 2.
MonotonicityCheck ratios_increasing(const CountTable& p);

// Q(n)/P(n) >= Q(n+1)/P(n+1) for 1 <= n <= max_n - 1; ties allowed.
// Entries are indexed by the first n. Uses min(max_n) of the two tables.
MonotonicityCheck ratios_decreasing_qp(const CountTable& p, const CountTable& q);

// First pair (l, m), l <= m, l + m <= max_n, with P(l + m) < P(l) P(m).
std::optional<std::pair<int, int>> find_supermultiplicativity_violation(const CountTable& p);

struct SplitBound {
  int ell = 0;
  bool ok = false;
};

// Over (n-1)/4 <= l <= (3n+1)/4, picks the smallest l maximizing
// P(l) P(n-l) and tests P(n) <= 4 n^3 P(l) P(n-l).
// Throws Error("range") unless 2 <= n <= max_n.
SplitBound check_split_bound(const CountTable& p, int n);

// P(max_n) / P(max_n - 1). Throws Error("insufficient") if max_n < 2.
Rational lambda_lower(const CountTable& p);

// The majorizing sequence
//   U(n) = P(n)                                         for n <= n0,
//   U(n) = 1/(1-R) (sum_{i=1}^{n0} Q(i) U(n-i)
//                   + R sum_{i=n0+1}^{n-1} U(i) U(n-i))  for n > n0,
// with R = Q(n0)/P(n0).
//
// Storage: write R = r/s in lowest terms and t = s - r. Then U(n) =
// V(n) / t^e(n) with V(n) an integer and e(n) = max(0, n - n0), because
// each step divides by t once and the bilinear terms carry at most
// e(i) + e(n-i) <= n - 2 n0 factors. Denominators therefore grow by one
// factor of t per step, about 107 bits per step for the 56-value table.
class USequence {
 public:
  int n0() const { return n0_; }
  const Rational& r() const { return r_; }
  int max_n() const { return static_cast<int>(scaled_.size()) - 1; }

  // Exact U(n); throws Error("range") outside 0..max_n.
  Rational value(int n) const;

 private:
  friend USequence compute_u(const CountTable&, const CountTable&, int, int);
  friend Rational u_growth_ratio(const USequence&, int);

  int exponent(int n) const { return n > n0_ ? n - n0_ : 0; }

  int n0_ = 0;
  Rational r_;
  BigInt t_;
  std::vector<BigInt> scaled_;
};

inline constexpr int kDefaultUMax = 2000;

// Errors: "range" (n0 or n_max out of bounds, n_max > kDefaultUMax),
// "divergent-prefactor" (R >= 1).
USequence compute_u(const CountTable& p, const CountTable& q, int n0, int n_max);

// U(n) / U(n-1). Throws Error("range") unless 1 <= n <= U.max_n().
Rational u_growth_ratio(const USequence& u, int n);

}  // namespace polyomino

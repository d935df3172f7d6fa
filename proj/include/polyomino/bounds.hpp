#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polyomino/count_table.hpp"
#include "polyomino/numeric.hpp"

// Conditional growth-constant bounds from the generating function of the
// majorizing sequence U(n).
//
// f(x) = sum U(n) x^n satisfies R f^2 + (g(x) - 2) f + 1 = 0 with
//   g(x) = sum_{i=0}^{n0} (Q(i) - R P(i)) x^i,
// so f is real wherever (g(x) - 2)^2 >= 4R. When Q/P is non-increasing up
// to n0 every coefficient of g is >= 0, g is non-decreasing on [0, inf) and
// g(-x) <= g(x); then g(theta) <= 2 - 2 sqrt(R) keeps the discriminant
// nonnegative on all of [-theta, theta], the radius of convergence is at
// least theta, and the growth rate of U (hence of P, if Q/P keeps
// decreasing) is at most 1/theta.
namespace polyomino {

// Q(n0)/P(n0). Throws Error("range") when n0 is outside either table.
Rational r_value(const CountTable& p, const CountTable& q, int n0);

struct GPolynomial {
  int n0 = 0;
  Rational r;
  std::vector<Rational> coefficients;  // index i = 0..n0
  bool nonnegative = false;            // every coefficient >= 0

  // Horner evaluation, exact.
  Rational evaluate(const Rational& x) const;
};

GPolynomial build_g(const CountTable& p, const CountTable& q, int n0);

// g(x) <= 2 and (2 - g(x))^2 >= 4R, i.e. g(x) <= 2 - 2 sqrt(R) without
// the square root. Throws Error("domain") for x < 0.
bool delta_nonneg(const GPolynomial& g, const Rational& x);

// Largest k / 10^digits with delta_nonneg true, as a decimal string with
// exactly `digits` places. Binary search on k; valid because the predicate
// holds on an initial segment of [0, inf) when g has nonnegative
// coefficients.
// Errors: "range" (digits outside 1..12), "unsupported" (a negative
// coefficient), "no-theta" (false already at 10^-digits), "unbounded"
// (true everywhere, as for a constant g).
std::string find_theta(const GPolynomial& g, int digits);

// 1/theta rounded up to `digits` places. Errors: "domain" for theta <= 0,
// "malformed" for a bad decimal.
std::string lambda_upper(std::string_view theta, int digits);

struct BoundReport {
  int n0 = 0;
  Rational r;
  std::string theta;
  int digits = 0;
  std::string lambda_upper;  // rounded up: still an upper bound
  std::string lambda_lower;  // P(n0)/P(n0-1) rounded down
  Rational lambda_lower_exact;
  std::string upper_assumes = "Q/P decreasing";
  std::string lower_assumes = "P ratio increasing";
};

// The full pipeline at cutoff n0 and theta resolution `digits`. The lambda
// strings carry digits - 1 places (4 for the default 5), matching the
// significant digits of theta.
BoundReport compute_bound_report(const CountTable& p, int n0, int digits);

std::string bound_report_json(const BoundReport& report);

}  // namespace polyomino

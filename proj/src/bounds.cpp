#include "polyomino/bounds.hpp"

#include <algorithm>

#include <json.hpp>

#include "polyomino/error.hpp"
#include "polyomino/sequences.hpp"

namespace polyomino {

namespace {

BigInt pow10(int places) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, static_cast<unsigned long>(places));
  return result;
}

std::string format_grid_point(const BigInt& k, int digits) {
  return decimal_floor(Rational(k, pow10(digits)), digits);
}

}  // namespace

Rational r_value(const CountTable& p, const CountTable& q, int n0) {
  if (n0 < 0 || n0 > p.max_n() || n0 > q.max_n()) {
    throw Error("range", "n0 = " + std::to_string(n0) + " is outside the tables");
  }
  if (p[n0] == 0) throw Error("range", "P(n0) is zero");
  Rational r(q[n0], p[n0]);
  r.canonicalize();
  return r;
}

Rational GPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

GPolynomial build_g(const CountTable& p, const CountTable& q, int n0) {
  GPolynomial g;
  g.n0 = n0;
  g.r = r_value(p, q, n0);
  g.coefficients.reserve(static_cast<std::size_t>(n0) + 1);
  for (int i = 0; i <= n0; ++i) g.coefficients.emplace_back(q[i] - g.r * p[i]);
  g.nonnegative = std::all_of(g.coefficients.begin(), g.coefficients.end(),
                              [](const Rational& c) { return c >= 0; });
  return g;
}

bool delta_nonneg(const GPolynomial& g, const Rational& x) {
  if (x < 0) throw Error("domain", "the discriminant test takes x >= 0");
  const Rational value = g.evaluate(x);
  if (value > 2) return false;
  const Rational gap = 2 - value;
  return gap * gap >= 4 * g.r;
}

std::string find_theta(const GPolynomial& g, int digits) {
  if (digits < 1 || digits > 12) {
    throw Error("range", "digits must lie in 1..12, got " + std::to_string(digits));
  }
  if (!g.nonnegative) {
    throw Error("unsupported", "g has a negative coefficient; Q/P is not non-increasing to n0");
  }
  if (g.r >= 1) throw Error("no-theta", "R >= 1 leaves no positive radius");

  const BigInt scale = pow10(digits);
  auto holds = [&](const BigInt& k) { return delta_nonneg(g, Rational(k, scale)); };

  BigInt lo = 1;
  if (!holds(lo)) {
    throw Error("no-theta", "the discriminant is already negative at 10^-" + std::to_string(digits));
  }
  // Grow until the predicate fails; g is a polynomial with a positive
  // non-constant term, so it eventually exceeds 2.
  const BigInt ceiling = pow10(digits + 6);
  BigInt hi = 2;
  while (holds(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > ceiling) throw Error("unbounded", "the discriminant stays nonnegative");
  }
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (holds(mid)) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return format_grid_point(lo, digits);
}

std::string lambda_upper(std::string_view theta, int digits) {
  const Rational value = parse_decimal(theta);
  if (value <= 0) throw Error("domain", "theta must be positive");
  return decimal_ceil(Rational(1 / value), digits);
}

BoundReport compute_bound_report(const CountTable& p, int n0, int digits) {
  if (n0 < 2 || n0 > p.max_n()) {
    throw Error("range", "n0 = " + std::to_string(n0) + " must lie in 2.." + std::to_string(p.max_n()));
  }
  const CountTable prefix = p.truncated(n0);
  const CountTable q = derive_q(prefix);
  const GPolynomial g = build_g(prefix, q, n0);

  BoundReport report;
  report.n0 = n0;
  report.r = g.r;
  report.digits = digits;
  report.theta = find_theta(g, digits);
  const int places = std::max(1, digits - 1);
  report.lambda_upper = lambda_upper(report.theta, places);
  report.lambda_lower_exact = lambda_lower(prefix);
  report.lambda_lower = decimal_floor(report.lambda_lower_exact, places);
  return report;
}

std::string bound_report_json(const BoundReport& report) {
  nlohmann::ordered_json doc;
  doc["n0"] = report.n0;
  doc["R"] = fraction_string(report.r);
  doc["theta"] = report.theta;
  doc["digits"] = report.digits;
  doc["lambda_upper"] = report.lambda_upper;
  doc["lambda_lower"] = report.lambda_lower;
  doc["assumes"] = {{"upper", report.upper_assumes}, {"lower", report.lower_assumes}};
  return doc.dump();
}

}  // namespace polyomino

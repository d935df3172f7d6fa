#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "polyomino/bounds.hpp"
#include "polyomino/error.hpp"
#include "polyomino/sequences.hpp"

using namespace polyomino;

namespace {

CountTable table(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) out.emplace_back(v);
  return CountTable(std::move(out), Origin::ingested);
}

std::string error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

const CountTable& published() {
  static const CountTable t = oracle::published_table();
  return t;
}

const GPolynomial& published_g() {
  static const GPolynomial g = build_g(published(), derive_q(published()), 56);
  return g;
}

Rational decimal(long numerator, long denominator) {
  Rational out(numerator, denominator);
  out.canonicalize();
  return out;
}

}  // namespace

TEST_CASE("r_value") {
  const CountTable p = table({1, 1, 2, 6, 16});
  const CountTable q = derive_q(p);
  CHECK(r_value(p, q, 4) == Rational(5, 16));
  CHECK(r_value(p, q, 1) == 1);
  const Rational r = r_value(published(), derive_q(published()), 56);
  CHECK(r > 0);
  CHECK(r < 1);
  CHECK(error_code([&] { r_value(p, q, 5); }) == "range");
}

TEST_CASE("g coefficients") {
  const GPolynomial& g = published_g();
  REQUIRE(g.coefficients.size() == 57);
  CHECK(g.coefficients[0] == 1 - g.r);
  CHECK(g.coefficients[56] == 0);
  CHECK(g.nonnegative);
  for (const Rational& c : g.coefficients) CHECK(c >= 0);

  // Q/P rises at n = 3 here, so some coefficient goes negative.
  const CountTable p = table({1, 1, 2, 7});
  const GPolynomial bad = build_g(p, derive_q(p), 2);
  CHECK(bad.coefficients[0] == 1 - bad.r);
  CHECK(bad.coefficients[2] == 0);
  const GPolynomial bad3 = build_g(p, derive_q(p), 3);
  CHECK_FALSE(bad3.nonnegative);
}

TEST_CASE("g invariants hold for every cutoff") {
  const CountTable q = derive_q(published());
  for (int n0 = 1; n0 <= 56; ++n0) {
    const GPolynomial g = build_g(published(), q, n0);
    REQUIRE(g.coefficients.front() == 1 - g.r);
    REQUIRE(g.coefficients.back() == 0);
  }
}

TEST_CASE("Horner and term-by-term evaluation agree exactly") {
  const GPolynomial& g = published_g();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational x = decimal(static_cast<long>(rng() % 100000), 100000 + static_cast<long>(rng() % 7));
    Rational sum = 0;
    Rational power = 1;
    for (const Rational& c : g.coefficients) {
      sum += c * power;
      power *= x;
    }
    REQUIRE(g.evaluate(x) == sum);
  }
}

TEST_CASE("delta_nonneg boundary") {
  const GPolynomial& g = published_g();
  CHECK(delta_nonneg(g, 0));
  CHECK(delta_nonneg(g, decimal(24307, 100000)));
  CHECK_FALSE(delta_nonneg(g, decimal(24308, 100000)));
  CHECK(delta_nonneg(g, decimal(2, 10)));
  CHECK_FALSE(delta_nonneg(g, decimal(3, 10)));
  CHECK(error_code([&] { delta_nonneg(g, decimal(-1, 10)); }) == "domain");
}

TEST_CASE("delta_nonneg is monotone on random pairs") {
  const GPolynomial& g = published_g();
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    long a = static_cast<long>(rng() % 60000);
    long b = static_cast<long>(rng() % 60000);
    if (a > b) std::swap(a, b);
    // Concentrate half the trials near the boundary.
    if (trial % 2 == 0) {
      a = 24000 + a % 600;
      b = std::max(a, 24000 + b % 600);
    }
    if (delta_nonneg(g, decimal(b, 100000))) REQUIRE(delta_nonneg(g, decimal(a, 100000)));
  }
}

TEST_CASE("square-root-free predicate agrees with 300-bit floating point") {
  std::mt19937_64 rng(17);
  const mpf_class tolerance("1e-60", 300);
  int decided = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Rational r = decimal(static_cast<long>(rng() % 1000000), 1000000);
    const Rational gx = decimal(static_cast<long>(rng() % 3000000), 1000000);
    const bool exact = gx <= 2 && (2 - gx) * (2 - gx) >= 4 * r;
    mpf_class r_f(r, 300);
    mpf_class g_f(gx, 300);
    mpf_class bound = 2 - 2 * sqrt(r_f);
    mpf_class gap = bound - g_f;
    if (abs(gap) < tolerance) continue;
    ++decided;
    REQUIRE(exact == (gap > 0));
  }
  CHECK(decided > 1900);
}

TEST_CASE("delta_nonneg agrees with floating point on the data near the boundary") {
  const GPolynomial& g = published_g();
  mpf_class r_f(g.r, 400);
  const mpf_class bound = 2 - 2 * sqrt(r_f);
  for (long k = 24300; k <= 24315; ++k) {
    const Rational x = decimal(k, 100000);
    const mpf_class g_f(g.evaluate(x), 400);
    CHECK(delta_nonneg(g, x) == (g_f <= bound));
  }
}

TEST_CASE("find_theta at several resolutions") {
  const GPolynomial& g = published_g();
  const char* expected[] = {"0.2", "0.24", "0.243", "0.2430", "0.24307", "0.243070", "0.2430704"};
  for (int digits = 1; digits <= 7; ++digits) {
    const std::string theta = find_theta(g, digits);
    CHECK(theta == expected[digits - 1]);
    const Rational value = parse_decimal(theta);
    Rational step(1);
    for (int i = 0; i < digits; ++i) step /= 10;
    CHECK(delta_nonneg(g, value));
    CHECK_FALSE(delta_nonneg(g, value + step));
    if (digits > 1) CHECK(value >= parse_decimal(expected[digits - 2]) - step * 10);
  }
}

TEST_CASE("find_theta errors") {
  const GPolynomial& g = published_g();
  CHECK(error_code([&] { find_theta(g, 0); }) == "range");
  CHECK(error_code([&] { find_theta(g, 13); }) == "range");

  const CountTable p = table({1, 1, 2, 7});
  CHECK(error_code([&] { find_theta(build_g(p, derive_q(p), 3), 5); }) == "unsupported");
  CHECK(error_code([&] { find_theta(build_g(p, derive_q(p), 1), 5); }) == "no-theta");

  GPolynomial constant;
  constant.r = Rational(1, 100);
  constant.coefficients = {Rational(99, 100)};
  constant.nonnegative = true;
  CHECK(error_code([&] { find_theta(constant, 3); }) == "unbounded");
}

TEST_CASE("lambda_upper rounds up") {
  CHECK(lambda_upper("0.24307", 4) == "4.1141");
  CHECK(lambda_upper("0.25", 4) == "4.0000");
  CHECK(lambda_upper("0.5", 4) == "2.0000");
  CHECK(lambda_upper("0.3", 2) == "3.34");
  CHECK(error_code([] { lambda_upper("0", 4); }) == "domain");
  CHECK(error_code([] { lambda_upper("0.x", 4); }) == "malformed");
  CHECK(parse_decimal(lambda_upper("0.24307", 4)) >= 1 / parse_decimal("0.24307"));
}

TEST_CASE("bound report") {
  const BoundReport report = compute_bound_report(published(), 56, 5);
  CHECK(report.theta == "0.24307");
  CHECK(report.lambda_upper == "4.1141");
  CHECK(report.lambda_lower == "3.9909");
  CHECK(report.lambda_lower_exact == lambda_lower(published()));
  CHECK(parse_decimal(report.lambda_lower) <= report.lambda_lower_exact);
  const std::string json = bound_report_json(report);
  CHECK(json.find(R"("theta":"0.24307")") != std::string::npos);
  CHECK(json.find(R"("lambda_upper":"4.1141")") != std::string::npos);
  CHECK(json.find(R"("assumes":{"upper":"Q/P decreasing","lower":"P ratio increasing"})") !=
        std::string::npos);
}

#include "polyomino/sequences.hpp"

#include <algorithm>
#include <string>

#include "polyomino/error.hpp"

namespace polyomino {

namespace {

void require_max_n(const CountTable& table, int at_least, const char* what) {
  if (table.max_n() < at_least) {
    throw Error("insufficient", std::string(what) + " needs max_n >= " + std::to_string(at_least) +
                                    ", got " + std::to_string(table.max_n()));
  }
}

}  // namespace

CountTable derive_q(const CountTable& p) {
  std::vector<BigInt> q(static_cast<std::size_t>(p.max_n()) + 1);
  q[0] = 1;
  for (int n = 1; n <= p.max_n(); ++n) {
    BigInt value = p[n];
    for (int i = 1; i < n; ++i) value -= q[static_cast<std::size_t>(i)] * p[n - i];
    if (value < 0) {
      throw Error("negative-Q", "Q(" + std::to_string(n) + ") = " + value.get_str() +
                                    "; the input is not a polyomino count table");
    }
    q[static_cast<std::size_t>(n)] = std::move(value);
  }
  return CountTable(std::move(q), Origin::derived);
}

CountTable compose_from_q(const CountTable& q) {
  std::vector<BigInt> p(static_cast<std::size_t>(q.max_n()) + 1);
  p[0] = 1;
  for (int n = 1; n <= q.max_n(); ++n) {
    BigInt value = 0;
    for (int i = 1; i <= n; ++i) value += q[i] * p[static_cast<std::size_t>(n - i)];
    p[static_cast<std::size_t>(n)] = std::move(value);
  }
  return CountTable(std::move(p), Origin::derived);
}

MonotonicityCheck ratios_increasing(const CountTable& p) {
  require_max_n(p, 2, "the ratio check");
  MonotonicityCheck check;
  for (int n = 2; n < p.max_n(); ++n) {
    // P(n)/P(n-1) < P(n+1)/P(n)  <=>  P(n)^2 < P(n+1) P(n-1)
    const int order = cmp(BigInt(p[n] * p[n]), BigInt(p[n + 1] * p[n - 1]));
    if (order == 0) check.ties.push_back(n);
    if (order >= 0) check.violations.push_back(n);
  }
  check.holds = check.violations.empty();
  return check;
}

MonotonicityCheck ratios_decreasing_qp(const CountTable& p, const CountTable& q) {
  require_max_n(p, 2, "the Q/P check");
  require_max_n(q, 2, "the Q/P check");
  const int top = std::min(p.max_n(), q.max_n());
  MonotonicityCheck check;
  for (int n = 1; n < top; ++n) {
    // Q(n)/P(n) >= Q(n+1)/P(n+1)  <=>  Q(n) P(n+1) >= Q(n+1) P(n)
    const int order = cmp(BigInt(q[n] * p[n + 1]), BigInt(q[n + 1] * p[n]));
    if (order == 0) check.ties.push_back(n);
    if (order < 0) check.violations.push_back(n);
  }
  check.holds = check.violations.empty();
  return check;
}

std::optional<std::pair<int, int>> find_supermultiplicativity_violation(const CountTable& p) {
  for (int total = 2; total <= p.max_n(); ++total) {
    for (int l = 1; 2 * l <= total; ++l) {
      if (p[total] < p[l] * p[total - l]) return std::pair{l, total - l};
    }
  }
  return std::nullopt;
}

SplitBound check_split_bound(const CountTable& p, int n) {
  if (n < 2 || n > p.max_n()) {
    throw Error("range", "n = " + std::to_string(n) + " outside 2.." + std::to_string(p.max_n()));
  }
  SplitBound result;
  BigInt best = -1;
  for (int l = 1; l < n; ++l) {
    if (4 * l < n - 1 || 4 * l > 3 * n + 1) continue;
    BigInt product = p[l] * p[n - l];
    if (product > best) {
      best = std::move(product);
      result.ell = l;
    }
  }
  const BigInt n_big = n;
  result.ok = p[n] <= 4 * n_big * n_big * n_big * best;
  return result;
}

Rational lambda_lower(const CountTable& p) {
  require_max_n(p, 2, "the lower bound");
  const int n = p.max_n();
  if (p[n - 1] == 0) throw Error("insufficient", "P(max_n - 1) is zero");
  Rational ratio(p[n], p[n - 1]);
  ratio.canonicalize();
  return ratio;
}

Rational USequence::value(int n) const {
  if (n < 0 || n > max_n()) {
    throw Error("range", "U(" + std::to_string(n) + ") not computed; max_n = " +
                             std::to_string(max_n()));
  }
  BigInt denominator;
  mpz_pow_ui(denominator.get_mpz_t(), t_.get_mpz_t(), static_cast<unsigned long>(exponent(n)));
  Rational result(scaled_[static_cast<std::size_t>(n)], denominator);
  result.canonicalize();
  return result;
}

USequence compute_u(const CountTable& p, const CountTable& q, int n0, int n_max) {
  if (n0 < 1 || n0 > p.max_n() || n0 > q.max_n()) {
    throw Error("range", "n0 = " + std::to_string(n0) + " must lie in 1..min(max_n)");
  }
  if (n_max < n0 || n_max > kDefaultUMax) {
    throw Error("range", "n_max = " + std::to_string(n_max) + " must lie in n0.." +
                             std::to_string(kDefaultUMax));
  }
  if (p[n0] == 0) throw Error("range", "P(n0) is zero");

  USequence u;
  u.n0_ = n0;
  u.r_ = Rational(q[n0], p[n0]);
  u.r_.canonicalize();
  if (u.r_ >= 1) {
    throw Error("divergent-prefactor", "R = " + fraction_string(u.r_) + " is not below 1");
  }
  const BigInt& r = u.r_.get_num();
  const BigInt& s = u.r_.get_den();
  u.t_ = s - r;

  std::vector<BigInt> powers(static_cast<std::size_t>(std::max(n_max - n0, n0)) + 1);
  powers[0] = 1;
  for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * u.t_;

  auto& v = u.scaled_;
  v.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n0; ++n) v.push_back(p[n]);

  for (int n = n0 + 1; n <= n_max; ++n) {
    const int e = n - n0;
    auto vat = [&](int k) -> const BigInt& { return v[static_cast<std::size_t>(k)]; };
    auto pw = [&](int k) -> const BigInt& { return powers[static_cast<std::size_t>(k)]; };

    // Linear part: Q(i) U(n-i) rescaled to t^(e-1).
    BigInt linear = 0;
    for (int i = 1; i <= n0; ++i) {
      if (q[i] == 0) continue;
      linear += q[i] * vat(n - i) * pw(e - 1 - u.exponent(n - i));
    }

    // Bilinear part: U(i) U(n-i) for n0 < i < n, rescaled to t^(e-1).
    // Terms with n-i <= n0 carry t^(n-i-1); terms with both indices above
    // n0 all carry t^(n0-1) and pair up symmetrically.
    BigInt bilinear = 0;
    for (int i = std::max(n0 + 1, n - n0); i < n; ++i) {
      bilinear += vat(i) * vat(n - i) * pw(n - i - 1);
    }
    BigInt paired = 0;
    for (int i = n0 + 1; 2 * i <= n && n - i > n0; ++i) {
      BigInt product = vat(i) * vat(n - i);
      if (2 * i == n) {
        paired += product;
      } else {
        paired += 2 * product;
      }
    }
    if (paired != 0) bilinear += paired * pw(n0 - 1);

    v.push_back(s * linear + r * bilinear);
  }
  return u;
}

Rational u_growth_ratio(const USequence& u, int n) {
  if (n < 1 || n > u.max_n()) {
    throw Error("range", "ratio index " + std::to_string(n) + " outside 1.." +
                             std::to_string(u.max_n()));
  }
  const auto& v = u.scaled_;
  BigInt denominator = v[static_cast<std::size_t>(n - 1)];
  if (u.exponent(n) > u.exponent(n - 1)) denominator *= u.t_;
  Rational ratio(v[static_cast<std::size_t>(n)], denominator);
  ratio.canonicalize();
  return ratio;
}

}  // namespace polyomino

#pragma once

// Test-only generators and brute-force oracles. Nothing here calls into the
// library's series or graded-ring code.

#include <cstdint>
#include <random>
#include <vector>

#include "chern/exact_rational.hpp"
#include "chern/polynomial.hpp"
#include "chern/series.hpp"

namespace chern::testing {

inline ExactRational random_rational(std::mt19937 &rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  return ExactRational(BigInt(num(rng)), BigInt(den(rng)));
}

inline TruncatedSeries<ExactRational> random_series(std::mt19937 &rng, long order,
                                                    bool zero_constant = false) {
  std::vector<ExactRational> c;
  for (long i = 0; i <= order; ++i)
    c.push_back(random_rational(rng));
  if (zero_constant)
    c[0] = ExactRational(0);
  return {c, order};
}

inline IntPoly random_int_poly(std::mt19937 &rng, int max_degree, const char *var = "s") {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-20, 20);
  std::vector<BigInt> c(deg(rng) + 1);
  for (auto &x : c)
    x = coef(rng);
  return IntPoly(c, var);
}

/// binom(n, k) by Pascal's triangle in int64.
inline std::int64_t pascal(int n, int k) {
  std::vector<std::vector<std::int64_t>> t(n + 1);
  for (int i = 0; i <= n; ++i) {
    t[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j)
      t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return (k < 0 || k > n) ? 0 : t[n][k];
}

/// gamma_k = sum_{i<=k} binom(n+1, i) (-d)^(k-i): the coefficients of
/// (1+h)^(n+1) (1 - dh + d^2h^2 - ...), expanded by hand.
inline std::vector<std::int64_t> adjunction_gammas(int n, std::int64_t d) {
  std::vector<std::int64_t> g;
  for (int k = 0; k < n; ++k) {
    std::int64_t acc = 0, p = 1;
    for (int i = k; i >= 0; --i) {
      acc += pascal(n + 1, i) * p;
      p *= -d;
    }
    g.push_back(acc);
  }
  return g;
}

/// E_n(d) straight from the alternating binomial sum, in int64.
inline std::int64_t euler_value(int n, std::int64_t d) {
  std::int64_t acc = 0;
  for (int k = 0; k < n; ++k) {
    std::int64_t p = 1;
    for (int i = 0; i < n - k; ++i)
      p *= -d;
    acc -= pascal(n + 1, k) * p;
  }
  return acc;
}

/// chi_y of a smooth degree-d surface in P^3 from its Hodge numbers:
/// p_g = binom(d-1, 3), h11 = chi - 2 - 2 p_g.
inline std::vector<std::int64_t> surface_chi_y(std::int64_t d) {
  std::int64_t pg = (d - 1) * (d - 2) * (d - 3) / 6;
  std::int64_t chi = d * (d * d - 4 * d + 6);
  std::int64_t h11 = chi - 2 - 2 * pg;
  return {1 + pg, -h11, 1 + pg};
}

} // namespace chern::testing

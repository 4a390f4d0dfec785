#pragma once

#include <string>
#include <vector>

#include "chern/bivariate.hpp"
#include "chern/graded_class.hpp"
#include "chern/partition.hpp"
#include "chern/polynomial.hpp"
#include "chern/series.hpp"

namespace chern {

/// The polynomial E_n(t) whose value at d is the Euler characteristic of a
/// smooth degree-d hypersurface in P^n.
struct EulerPolynomial {
  unsigned n = 0;
  IntPoly poly;

  BigInt operator()(const BigInt &d) const { return poly.evaluate(d); }
};

namespace detail {

inline void require_dimension(unsigned n) {
  if (n < 1)
    throw domain_error("ambient dimension n must be >= 1");
}

inline void require_degree(const BigInt &d) {
  if (d < 1)
    throw domain_error("hypersurface degree d must be >= 1, got " + d.str());
}

} // namespace detail

/// E_n(t) = -sum_{k=0}^{n-1} binom(n+1, k) (-t)^(n-k).
inline EulerPolynomial euler_polynomial(unsigned n) {
  detail::require_dimension(n);
  std::vector<BigInt> c(n + 1);
  for (unsigned k = 0; k < n; ++k) {
    unsigned e = n - k;
    BigInt term = binomial(n + 1, k);
    c[e] = (e % 2 == 0) ? BigInt(-term) : term;
  }
  return {n, IntPoly(std::move(c), "t")};
}

/// Drops the terms of degree <= 1 and divides what is left by -t:
/// a_m t^m + ... + a_0  ->  -(a_m t^(m-1) + ... + a_2 t).
template <class R> DensePolynomial<R> theta(const DensePolynomial<R> &p) {
  const auto &c = p.coefficients();
  std::vector<R> out(c.size() > 1 ? c.size() - 1 : 0);
  for (std::size_t i = 2; i < c.size(); ++i)
    out[i - 1] = -c[i];
  return DensePolynomial<R>(std::move(out), p.variable_name());
}

template <class R> DensePolynomial<R> theta_power(DensePolynomial<R> p, unsigned k) {
  for (unsigned i = 0; i < k; ++i)
    p = theta(p);
  return p;
}

/// theta^k E_n(t).
inline IntPoly theta_euler(unsigned n, unsigned k) { return theta_power(euler_polynomial(n).poly, k); }

/// sum_{j=1}^n (theta^(n-j) E_n)(t) s^j; [s^j] at t = d times H^j is the
/// pushforward of c_{j-1}(X) to P^n.
inline BivariatePolynomial chern_poly(unsigned n) {
  detail::require_dimension(n);
  std::vector<IntPoly> s_coeffs(n + 1);
  IntPoly e = euler_polynomial(n).poly;
  for (unsigned j = n; j >= 1; --j) {
    s_coeffs[j] = e;
    e = theta(e);
  }
  return BivariatePolynomial::from_s_coefficients(s_coeffs);
}

/// Z[H]/(H^(n+1)).
inline TablePtr projective_table(unsigned n) { return make_table({{"H", 1}}, n); }

/// Q[h]/(h^n), the hypersurface side with h = H restricted to X.
inline TablePtr hypersurface_table(unsigned n) { return make_table({{"h", 1}}, n - 1); }

/// The chern_poly evaluated at (s, t) = (H, d) in Z[H]/(H^(n+1)).
inline GradedClass<BigInt> pushforward_class(unsigned n, const BigInt &d) {
  detail::require_degree(d);
  BivariatePolynomial c = chern_poly(n);
  TablePtr table = projective_table(n);
  GradedClass<BigInt> out = GradedClass<BigInt>::zero(table);
  for (unsigned j = 1; j <= n; ++j)
    out = out + GradedClass<BigInt>::monomial(table, {j}, c.s_coefficient(j).evaluate(d));
  return out;
}

/// Chern classes of a smooth degree-d hypersurface X in P^n from adjunction:
/// c(TX) = (1+h)^(n+1) / (1+dh) in Q[h]/(h^n), c_k(X) = gamma[k] h^k.
struct ChernData {
  unsigned n = 0;
  BigInt d;
  std::vector<BigInt> gamma;

  /// Degree of c_k(X) pushed into P^n, as a multiple of H^(k+1).
  BigInt pushforward_coefficient(unsigned k) const { return gamma.at(k) * d; }

  /// int_X c_{j1} ... c_{jm} with int h^(n-1) = d.
  BigInt chern_number(const Partition &p) const {
    if (p.sum() != n - 1)
      throw domain_error("partition " + p.key() + " does not sum to n-1 = " + std::to_string(n - 1));
    BigInt r = d;
    for (unsigned j : p.parts())
      r *= gamma.at(j);
    return r;
  }
};

inline ChernData chern_oracle(unsigned n, const BigInt &d) {
  detail::require_dimension(n);
  detail::require_degree(d);
  long order = static_cast<long>(n) - 1;
  std::vector<ExactRational> top(n + 2), bottom{ExactRational(1), ExactRational(d)};
  for (unsigned k = 0; k <= n + 1; ++k)
    top[k] = ExactRational(binomial(n + 1, k));
  auto c = series_div(TruncatedSeries<ExactRational>(top, order),
                      TruncatedSeries<ExactRational>(bottom, order));
  ChernData out{n, d, {}};
  for (long k = 0; k <= order; ++k) {
    if (!c[k].is_integer())
      throw internal_error("non-integral Chern class coefficient " + c[k].to_string());
    out.gamma.push_back(c[k].numerator());
  }
  return out;
}

/// int_X c_{j1}(X) ... c_{jm}(X), i.e. d * prod_i (theta^(n-(j_i+1)) E_n)(d) / d.
inline BigInt chern_number(unsigned n, const BigInt &d, const Partition &p) {
  detail::require_dimension(n);
  detail::require_degree(d);
  if (p.sum() != n - 1)
    throw domain_error("partition " + p.key() + " does not sum to n-1 = " + std::to_string(n - 1));
  BigInt r = d;
  for (unsigned j : p.parts()) {
    BigInt pushed = theta_euler(n, n - (j + 1)).evaluate(d);
    if (pushed % d != 0)
      throw internal_error("pushforward of c_" + std::to_string(j) + " is not divisible by d");
    r *= pushed / d;
  }
  return r;
}

/// The unnormalized product prod_i (theta^(n-(j_i+1)) E_n)(d) of pushforwards;
/// equals d^(m-1) * chern_number for m parts.
inline BigInt corollary_product(unsigned n, const BigInt &d, const Partition &p) {
  detail::require_dimension(n);
  detail::require_degree(d);
  if (p.sum() != n - 1)
    throw domain_error("partition " + p.key() + " does not sum to n-1 = " + std::to_string(n - 1));
  BigInt r = 1;
  for (unsigned j : p.parts())
    r *= theta_euler(n, n - (j + 1)).evaluate(d);
  return r;
}

/// s^n chern_poly(1/s, t) = sum_{j=1}^n (theta^(n-j) E_n)(t) s^(n-j).
inline BivariatePolynomial dual_chern_poly(unsigned n) {
  detail::require_dimension(n);
  std::vector<IntPoly> s_coeffs(n);
  IntPoly e = euler_polynomial(n).poly;
  for (unsigned i = 0; i < n; ++i) {
    s_coeffs[i] = e;
    e = theta(e);
  }
  return BivariatePolynomial::from_s_coefficients(s_coeffs);
}

/// (s * D(-s-1, t) + D(0, t)) / (s + 1) for D = dual_chern_poly(n); the
/// coefficient of (-s)^r at t = d is the Euler characteristic of the r-fold
/// general hyperplane section.
inline BivariatePolynomial section_euler_poly(unsigned n) {
  using SPoly = DensePolynomial<IntPoly>;
  SPoly dual = dual_chern_poly(n).nested();
  SPoly minus_s_minus_1({IntPoly(-1), IntPoly(-1)}, "s");
  SPoly numerator = dual.compose(minus_s_minus_1).shift(1) + SPoly::constant(dual.coefficient(0), "s");
  SPoly s_plus_1({IntPoly(1), IntPoly(1)}, "s");
  try {
    return BivariatePolynomial::from_nested(poly_divide_exact(numerator, s_plus_1));
  } catch (const domain_error &e) {
    throw internal_error(std::string("section polynomial numerator not divisible by s+1: ") +
                         e.what());
  }
}

/// chi_r = (-1)^r [s^r] section_euler_poly(n)(s, d), r = 0..n-1.
inline std::vector<BigInt> section_euler_values(unsigned n, const BigInt &d) {
  detail::require_degree(d);
  IntPoly at_d = section_euler_poly(n).evaluate_t(d);
  std::vector<BigInt> out;
  for (unsigned r = 0; r < n; ++r)
    out.push_back(r % 2 == 0 ? at_d.coefficient(r) : BigInt(-at_d.coefficient(r)));
  return out;
}

struct HodgePair {
  BigInt h03;
  BigInt h12;

  friend bool operator==(const HodgePair &, const HodgePair &) = default;
};

/// h^{0,3} and h^{1,2} of a smooth degree-d threefold in P^4:
/// h03 = 1 - c1c2/24, h12 = c1c2/24 - (E_4(d) - 2)/2.
inline HodgePair hodge_numbers_threefold(const BigInt &d) {
  detail::require_degree(d);
  ExactRational c1c2(chern_number(4, d, Partition({1, 2})));
  ExactRational chi(euler_polynomial(4)(d));
  ExactRational h03 = ExactRational(1) - c1c2 / ExactRational(24);
  ExactRational h12 = c1c2 / ExactRational(24) - (chi - ExactRational(2)) / ExactRational(2);
  if (!h03.is_integer() || !h12.is_integer() || h03 < ExactRational(0) || h12 < ExactRational(0))
    throw internal_error("Hodge numbers are not nonnegative integers: h03 = " + h03.to_string() +
                         ", h12 = " + h12.to_string());
  return {h03.numerator(), h12.numerator()};
}

} // namespace chern

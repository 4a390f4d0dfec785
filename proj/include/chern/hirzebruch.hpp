#pragma once

#include <string>
#include <vector>

#include "chern/euler_hypersurface.hpp"
#include "chern/graded_class.hpp"
#include "chern/param_rational.hpp"
#include "chern/series.hpp"

namespace chern {

/// Coefficients in Q(y) tensor Q[h]/(h^n).
using HClass = GradedClass<ParamRational>;
using HSeries = TruncatedSeries<HClass>;

namespace detail {

inline void require_hirzebruch_dimension(unsigned n) {
  if (n < 2)
    throw domain_error("the Hirzebruch class needs n >= 2 (positive-dimensional X)");
}

inline ParamRational lift(const BigInt &x) { return ParamRational(ExactRational(x)); }

inline ParamRational one_plus_y() { return ParamRational(1) + ParamRational::y(); }

} // namespace detail

/// C(s) = sum_k (-1)^k c_k(X) s^k with c_k(X) = gamma_k h^k, known to s^(n-1).
inline HSeries chern_series(unsigned n, const BigInt &d) {
  detail::require_hirzebruch_dimension(n);
  ChernData data = chern_oracle(n, d);
  TablePtr table = hypersurface_table(n);
  std::vector<HClass> c;
  for (unsigned k = 0; k < n; ++k) {
    BigInt g = (k % 2 == 0) ? data.gamma[k] : BigInt(-data.gamma[k]);
    c.push_back(HClass::monomial(table, {k}, detail::lift(g)));
  }
  return HSeries(std::move(c), static_cast<long>(n) - 1);
}

/// Builds chern_poly(n) at (-sH, d), factors it as (-dH s) * C~(s) with C~
/// of constant term 1, and returns C~ read on X (H -> h).
inline HSeries chern_series_from_pushforward(unsigned n, const BigInt &d) {
  detail::require_hirzebruch_dimension(n);
  detail::require_degree(d);
  BivariatePolynomial poly = chern_poly(n);
  TablePtr ambient = projective_table(n);
  TablePtr on_x = hypersurface_table(n);

  std::vector<GradedClass<BigInt>> substituted(n + 1, GradedClass<BigInt>::zero(ambient));
  for (unsigned j = 1; j <= n; ++j) {
    BigInt e = poly.s_coefficient(j).evaluate(d);
    substituted[j] = GradedClass<BigInt>::monomial(ambient, {j}, (j % 2 == 0) ? e : BigInt(-e));
  }
  if (!substituted[0].is_zero())
    throw internal_error("pushforward Chern polynomial has a nonzero constant term");

  GradedClass<BigInt> factor = GradedClass<BigInt>::monomial(ambient, {1}, BigInt(-d));
  std::vector<HClass> reduced;
  for (unsigned j = 1; j <= n; ++j) {
    GradedClass<BigInt> quotient = GradedClass<BigInt>::zero(ambient);
    for (const auto &[e, c] : substituted[j].terms()) {
      if (e[0] == 0 || c % d != 0)
        throw internal_error("coefficient of s^" + std::to_string(j) + " is not divisible by -dH");
      quotient = quotient + GradedClass<BigInt>::monomial(ambient, {e[0] - 1}, BigInt(-(c / d)));
    }
    if (!(factor * quotient == substituted[j]))
      throw internal_error("factorization by -dH failed at s^" + std::to_string(j));
    HClass lifted = HClass::zero(on_x);
    GradedClass<BigInt> on_hypersurface = relabel(quotient, on_x);
    for (const auto &[e, c] : on_hypersurface.terms())
      lifted = lifted + HClass::monomial(on_x, e, detail::lift(c));
    reduced.push_back(std::move(lifted));
  }
  if (!(reduced[0] == HClass::constant(on_x, ParamRational(1))))
    throw internal_error("reduced Chern series does not start with 1");
  return HSeries(std::move(reduced), static_cast<long>(n) - 1);
}

/// s / (1 - e^(-s)) = 1 + s/2 + s^2/12 - s^4/720 + ...
inline TruncatedSeries<ExactRational> todd_series(long order) {
  auto e = exp_linear(ExactRational(-1), order + 1);
  TruncatedSeries<ExactRational> one({ExactRational(1)}, order + 1);
  auto denom = (one - e).unshift(1);
  return series_div(TruncatedSeries<ExactRational>({ExactRational(1)}, order), denom);
}

/// Q(s) = s (1 + y e^(-s)) / (1 - e^(-s)); Q(0) = 1 + y.
inline TruncatedSeries<ParamRational> q_series(long order) {
  if (order < 1)
    throw domain_error("q_series order must be >= 1");
  auto todd = todd_series(order);
  auto emin = exp_linear(ExactRational(-1), order);
  std::vector<ParamRational> t, f;
  for (long i = 0; i <= order; ++i) {
    t.emplace_back(todd[i]);
    f.push_back(ParamRational::y() * ParamRational(emin[i]));
  }
  f[0] = f[0] + ParamRational(1);
  return TruncatedSeries<ParamRational>(t, order) * TruncatedSeries<ParamRational>(f, order);
}

/// Degree-(n-1) part of the unnormalized motivic Hirzebruch class of a smooth
/// degree-d hypersurface in P^n; `by_h_power[j]` is the y-polynomial
/// multiplying h^j.
struct HirzebruchClass {
  unsigned n = 0;
  BigInt d;
  std::vector<RatPoly> by_h_power;
};

/// (1+y)^k [s^k] exp( log(Q/(1+y)) (.) (-s C'/C) ), k = n - 1, where (.) is
/// the Hadamard product. The 1/k! d^k/ds^k at s = 0 is coefficient extraction.
inline HirzebruchClass hirzebruch_class(unsigned n, const BigInt &d) {
  detail::require_hirzebruch_dimension(n);
  detail::require_degree(d);
  long k = static_cast<long>(n) - 1;

  ParamRational inv_unit = ParamRational(1) / detail::one_plus_y();
  auto q = q_series(k);
  std::vector<ParamRational> normalized;
  for (const auto &c : q.coefficients())
    normalized.push_back(inv_unit * c);
  auto log_q = series_log(TruncatedSeries<ParamRational>(normalized, k));

  HSeries c = chern_series(n, d);
  HSeries log_derivative = series_div(-series_derivative(c).shift(1), c);
  HSeries e = series_exp(hadamard(log_q, log_derivative));

  ParamRational prefactor(1);
  for (long i = 0; i < k; ++i)
    prefactor = prefactor * detail::one_plus_y();
  HClass top = prefactor * e[k];

  HirzebruchClass out{n, d, std::vector<RatPoly>(n, RatPoly({}, "y"))};
  for (const auto &[exps, coeff] : top.terms()) {
    if (!coeff.is_polynomial())
      throw internal_error("Hirzebruch coefficient of h^" + std::to_string(exps.at(0)) +
                           " has denominator " + coeff.denominator().to_string());
    out.by_h_power.at(exps.at(0)) = coeff.as_polynomial();
  }
  return out;
}

/// Integer polynomial sum_p chi(X, Omega^p) y^p.
struct ChiYGenus {
  IntPoly poly;

  BigInt at(long long y) const { return poly.evaluate(BigInt(y)); }
  friend bool operator==(const ChiYGenus &, const ChiYGenus &) = default;
};

namespace detail {

inline ChiYGenus integral_chi_y(const RatPoly &p, const char *what) {
  std::vector<BigInt> c;
  for (const auto &q : p.coefficients()) {
    if (!q.is_integer())
      throw internal_error(std::string(what) + ": non-integral chi_y coefficient " + q.to_string());
    c.push_back(q.numerator());
  }
  return {IntPoly(std::move(c), "y")};
}

} // namespace detail

/// d times the h^(n-1) coefficient of hirzebruch_class (int_X h^(n-1) = d).
inline ChiYGenus chi_y(unsigned n, const BigInt &d) {
  HirzebruchClass t = hirzebruch_class(n, d);
  return detail::integral_chi_y(ExactRational(d) * t.by_h_power.at(n - 1), "chi_y");
}

/// Classical route: [H^n] R(H)^(n+1) / R(dH) * dH in Q[y][H]/(H^(n+1)) with
/// R(x) = x(1+y)/(1 - e^(-x(1+y))) - xy.
inline ChiYGenus chi_y_oracle(unsigned n, const BigInt &d) {
  detail::require_hirzebruch_dimension(n);
  detail::require_degree(d);
  long order = static_cast<long>(n);
  auto todd = todd_series(order);
  RatPoly one_plus_y({ExactRational(1), ExactRational(1)}, "y");
  RatPoly y = RatPoly::variable("y");

  std::vector<RatPoly> r, r_d;
  RatPoly power = RatPoly::constant(ExactRational(1), "y");
  ExactRational d_power(1);
  for (long m = 0; m <= order; ++m) {
    RatPoly coeff = todd[m] * power;
    if (m == 1)
      coeff -= y;
    r.push_back(coeff);
    r_d.push_back(d_power * coeff);
    power = power * one_plus_y;
    d_power = d_power * ExactRational(d);
  }
  TruncatedSeries<RatPoly> rs(r, order), rds(r_d, order);
  TruncatedSeries<RatPoly> numerator({RatPoly::constant(ExactRational(1), "y")}, order);
  for (unsigned i = 0; i <= n; ++i)
    numerator = numerator * rs;
  auto integrand = series_div(numerator, rds).shift(1);
  return detail::integral_chi_y(ExactRational(d) * integrand[n], "chi_y_oracle");
}

} // namespace chern

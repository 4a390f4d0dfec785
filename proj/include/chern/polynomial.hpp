#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "chern/ring_traits.hpp"

namespace chern {

/// Univariate polynomial over an exact commutative ring R, stored densely in
/// ascending degree. The zero polynomial has no coefficients and no stored
/// coefficient is ever trailing-zero. The variable name only affects display.
template <class R> class DensePolynomial {
public:
  using coefficient_type = R;

  DensePolynomial() = default;
  explicit DensePolynomial(long long c) : coeffs_{R(c)} { trim(); }
  explicit DensePolynomial(std::vector<R> coeffs, std::string var = "t")
      : coeffs_(std::move(coeffs)), var_(std::move(var)) {
    trim();
  }

  static DensePolynomial constant(R c, std::string var = "t") {
    return DensePolynomial(std::vector<R>{std::move(c)}, std::move(var));
  }
  static DensePolynomial monomial(R c, std::size_t degree, std::string var = "t") {
    std::vector<R> v(degree + 1);
    v[degree] = std::move(c);
    return DensePolynomial(std::move(v), std::move(var));
  }
  /// The polynomial `var`.
  static DensePolynomial variable(std::string var = "t") { return monomial(R{1}, 1, std::move(var)); }

  const std::vector<R> &coefficients() const { return coeffs_; }
  const std::string &variable_name() const { return var_; }
  DensePolynomial with_variable(std::string var) const {
    DensePolynomial p = *this;
    p.var_ = std::move(var);
    return p;
  }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  R coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R{}; }
  const R &leading_coefficient() const { return coeffs_.back(); }

  DensePolynomial operator-() const {
    DensePolynomial r = *this;
    for (auto &c : r.coeffs_)
      c = -c;
    return r;
  }
  DensePolynomial &operator+=(const DensePolynomial &o) {
    if (o.coeffs_.size() > coeffs_.size())
      coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  DensePolynomial &operator-=(const DensePolynomial &o) { return *this += -o; }
  DensePolynomial &operator*=(const DensePolynomial &o) { return *this = *this * o; }

  friend DensePolynomial operator+(DensePolynomial a, const DensePolynomial &b) { return a += b; }
  friend DensePolynomial operator-(DensePolynomial a, const DensePolynomial &b) { return a -= b; }
  friend DensePolynomial operator*(const DensePolynomial &a, const DensePolynomial &b) {
    if (a.is_zero() || b.is_zero())
      return DensePolynomial({}, a.var_);
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (chern::is_zero(a.coeffs_[i]))
        continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return DensePolynomial(std::move(out), a.var_);
  }
  friend DensePolynomial operator*(const R &c, DensePolynomial p) {
    for (auto &x : p.coeffs_)
      x = c * x;
    p.trim();
    return p;
  }

  friend bool operator==(const DensePolynomial &a, const DensePolynomial &b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Multiplies by var^k.
  DensePolynomial shift(std::size_t k) const {
    if (is_zero())
      return *this;
    std::vector<R> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return DensePolynomial(std::move(v), var_);
  }

  DensePolynomial derivative() const {
    std::vector<R> v;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      v.push_back(R(static_cast<long long>(i)) * coeffs_[i]);
    return DensePolynomial(std::move(v), var_);
  }

  /// Horner evaluation at a point of the coefficient ring.
  R evaluate(const R &x) const {
    R acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  /// p(q(var)).
  DensePolynomial compose(const DensePolynomial &q) const {
    DensePolynomial acc({}, q.var_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * q + DensePolynomial::constant(*it, q.var_);
    return acc;
  }

  template <class F> auto map_coefficients(F &&f, std::string var) const {
    using S = std::decay_t<decltype(f(std::declval<const R &>()))>;
    std::vector<S> v;
    v.reserve(coeffs_.size());
    for (const auto &c : coeffs_)
      v.push_back(f(c));
    return DensePolynomial<S>(std::move(v), std::move(var));
  }

  /// Ascending degree by default ("10t - 10t^2 + 5t^3 - t^4"); `descending`
  /// gives the conventional highest-degree-first order.
  std::string to_string(bool descending = false) const;

  friend std::ostream &operator<<(std::ostream &os, const DensePolynomial &p) {
    return os << p.to_string();
  }

private:
  void trim() {
    while (!coeffs_.empty() && chern::is_zero(coeffs_.back()))
      coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
  std::string var_ = "t";
};

namespace detail {

inline std::string power_of(const std::string &var, std::size_t k) {
  if (k == 0)
    return "";
  if (k == 1)
    return var;
  return var + "^" + std::to_string(k);
}

} // namespace detail

template <class R> std::string DensePolynomial<R>::to_string(bool descending) const {
  if (is_zero())
    return "0";
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!chern::is_zero(coeffs_[i]))
      order.push_back(i);
  if (descending)
    std::reverse(order.begin(), order.end());

  std::string out;
  bool first = true;
  for (std::size_t i : order) {
    const R &c = coeffs_[i];
    std::string mono = detail::power_of(var_, i);
    if constexpr (ring_traits<R>::is_scalar) {
      bool neg = ring_traits<R>::is_negative(c);
      R mag = neg ? R(-c) : c;
      std::string body = ring_traits<R>::to_string(mag);
      if (!mono.empty() && mag == R{1})
        body.clear();
      if (!mono.empty() && body.find('/') != std::string::npos)
        body = "(" + body + ")";
      if (first)
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      out += body + mono;
    } else {
      if (!first)
        out += " + ";
      std::string body = ring_traits<R>::to_string(c);
      if (!mono.empty() && body == "1")
        body.clear();
      else if (!mono.empty())
        body = "(" + body + ")";
      out += body + mono;
    }
    first = false;
  }
  return out;
}

/// Quotient and remainder of long division. Each step divides the current
/// leading coefficient by lc(den) exactly; the loop stops at the first step
/// where that fails, leaving the partial remainder.
template <class R>
std::pair<DensePolynomial<R>, DensePolynomial<R>> poly_divmod(const DensePolynomial<R> &num,
                                                              const DensePolynomial<R> &den) {
  if (den.is_zero())
    throw domain_error("polynomial division by zero");
  const std::string &var = num.is_zero() ? den.variable_name() : num.variable_name();
  std::vector<R> quot(num.degree() >= den.degree() ? num.degree() - den.degree() + 1 : 0);
  DensePolynomial<R> rem = num;
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    auto q = ring_traits<R>::divide_exact(rem.leading_coefficient(), den.leading_coefficient());
    if (!q)
      break;
    std::size_t shift = static_cast<std::size_t>(rem.degree() - den.degree());
    quot[shift] = *q;
    long before = rem.degree();
    rem -= DensePolynomial<R>::monomial(*q, shift, var) * den;
    if (rem.degree() >= before)
      throw internal_error("polynomial division did not cancel the leading term");
  }
  return {DensePolynomial<R>(std::move(quot), var), rem.with_variable(var)};
}

/// Exact quotient num/den. A nonzero remainder is rejected and reported.
template <class R>
DensePolynomial<R> poly_divide_exact(const DensePolynomial<R> &num, const DensePolynomial<R> &den) {
  auto [q, r] = poly_divmod(num, den);
  if (!r.is_zero())
    throw domain_error("inexact polynomial division: (" + num.to_string() + ") / (" +
                       den.to_string() + ") leaves remainder " + r.to_string());
  return q;
}

/// Monic gcd over a field coefficient ring.
template <class R>
DensePolynomial<R> poly_gcd(DensePolynomial<R> a, DensePolynomial<R> b) {
  while (!b.is_zero()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero())
    return a;
  auto inv = inverse(a.leading_coefficient());
  if (!inv)
    throw domain_error("poly_gcd requires a field of coefficients");
  return *inv * a;
}

template <class R> struct ring_traits<DensePolynomial<R>> {
  static constexpr bool is_scalar = false;
  static bool is_zero(const DensePolynomial<R> &p) { return p.is_zero(); }
  static DensePolynomial<R> scale(const DensePolynomial<R> &p, const ExactRational &q) {
    std::vector<R> v;
    for (const auto &c : p.coefficients())
      v.push_back(ring_traits<R>::scale(c, q));
    return DensePolynomial<R>(std::move(v), p.variable_name());
  }
  static std::optional<DensePolynomial<R>> divide_exact(const DensePolynomial<R> &a,
                                                         const DensePolynomial<R> &b) {
    if (b.is_zero())
      return std::nullopt;
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero())
      return std::nullopt;
    return q;
  }
  static std::string to_string(const DensePolynomial<R> &p) { return p.to_string(); }
};

using IntPoly = DensePolynomial<BigInt>;
using RatPoly = DensePolynomial<ExactRational>;

} // namespace chern

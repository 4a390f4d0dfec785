#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "chern/polynomial.hpp"

namespace chern {

/// Formal power series in s over R, known modulo s^(order+1). Binary
/// operations keep the smaller order; an order of -1 carries no information.
template <class R> class TruncatedSeries {
public:
  using coefficient_type = R;

  TruncatedSeries() = default;
  TruncatedSeries(std::vector<R> coeffs, long order) : order_(order) {
    if (order < -1)
      throw domain_error("series order must be >= -1");
    coeffs.resize(static_cast<std::size_t>(order + 1));
    coeffs_ = std::move(coeffs);
  }
  static TruncatedSeries from_polynomial(const DensePolynomial<R> &p, long order) {
    return TruncatedSeries(p.coefficients(), order);
  }

  long order() const { return order_; }
  const std::vector<R> &coefficients() const { return coeffs_; }
  const R &operator[](std::size_t i) const {
    if (static_cast<long>(i) > order_)
      throw domain_error("coefficient " + std::to_string(i) + " is beyond the series order " +
                         std::to_string(order_));
    return coeffs_[i];
  }

  TruncatedSeries truncate(long order) const {
    return TruncatedSeries(coeffs_, std::min(order, order_));
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto &c : r.coeffs_)
      c = -c;
    return r;
  }
  friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b) {
    long o = std::min(a.order_, b.order_);
    std::vector<R> v(static_cast<std::size_t>(o + 1));
    for (long i = 0; i <= o; ++i)
      v[i] = a.coeffs_[i] + b.coeffs_[i];
    return TruncatedSeries(std::move(v), o);
  }
  friend TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b) {
    return a + (-b);
  }
  friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) {
    long o = std::min(a.order_, b.order_);
    std::vector<R> v(static_cast<std::size_t>(o + 1));
    for (long i = 0; i <= o; ++i) {
      if (is_zero(a.coeffs_[i]))
        continue;
      for (long j = 0; i + j <= o; ++j)
        v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return TruncatedSeries(std::move(v), o);
  }
  friend TruncatedSeries operator*(const R &c, TruncatedSeries f) {
    for (auto &x : f.coeffs_)
      x = c * x;
    return f;
  }

  /// Multiplies by s^k; the result is known to order + k.
  TruncatedSeries shift(std::size_t k) const {
    std::vector<R> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return TruncatedSeries(std::move(v), order_ + static_cast<long>(k));
  }
  /// Divides by s^k; the first k coefficients must vanish.
  TruncatedSeries unshift(std::size_t k) const {
    for (std::size_t i = 0; i < k && static_cast<long>(i) <= order_; ++i)
      if (!is_zero(coeffs_[i]))
        throw domain_error("series is not divisible by s^" + std::to_string(k));
    std::vector<R> v;
    for (std::size_t i = k; i < coeffs_.size(); ++i)
      v.push_back(coeffs_[i]);
    return TruncatedSeries(std::move(v), std::max<long>(order_ - static_cast<long>(k), -1));
  }

  friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    std::string body = DensePolynomial<R>(coeffs_, "s").to_string();
    return body + " + O(s^" + std::to_string(order_ + 1) + ")";
  }

  friend std::ostream &operator<<(std::ostream &os, const TruncatedSeries &f) {
    return os << f.to_string();
  }

private:
  std::vector<R> coeffs_;
  long order_ = -1;
};

/// Termwise derivative; the result is known to one order less.
template <class R> TruncatedSeries<R> series_derivative(const TruncatedSeries<R> &f) {
  std::vector<R> v;
  for (long i = 1; i <= f.order(); ++i)
    v.push_back(R(static_cast<long long>(i)) * f[i]);
  return TruncatedSeries<R>(std::move(v), std::max<long>(f.order() - 1, -1));
}

/// f/g; the constant term of g must be invertible.
template <class R>
TruncatedSeries<R> series_div(const TruncatedSeries<R> &f, const TruncatedSeries<R> &g) {
  long o = std::min(f.order(), g.order());
  if (o < 0)
    return TruncatedSeries<R>({}, o);
  auto inv = inverse(g[0]);
  if (!inv)
    throw domain_error("series_div: constant term " + to_display(g[0]) +
                       " of the divisor is not invertible");
  std::vector<R> h(static_cast<std::size_t>(o + 1));
  for (long m = 0; m <= o; ++m) {
    R acc = f[m];
    for (long j = 1; j <= m; ++j)
      acc = acc - g[j] * h[m - j];
    h[m] = *inv * acc;
  }
  return TruncatedSeries<R>(std::move(h), o);
}

/// exp(f) for f with zero constant term.
template <class R> TruncatedSeries<R> series_exp(const TruncatedSeries<R> &f) {
  long o = f.order();
  if (o < 0)
    return f;
  if (!is_zero(f[0]))
    throw domain_error("series_exp: constant term must be zero, got " + to_display(f[0]));
  std::vector<R> e(static_cast<std::size_t>(o + 1));
  e[0] = R{1};
  for (long m = 1; m <= o; ++m) {
    R acc{};
    for (long j = 1; j <= m; ++j)
      if (!is_zero(f[j]))
        acc = acc + R(static_cast<long long>(j)) * f[j] * e[m - j];
    e[m] = ring_traits<R>::scale(acc, ExactRational(1, m));
  }
  return TruncatedSeries<R>(std::move(e), o);
}

/// log(f) for f with constant term 1.
template <class R> TruncatedSeries<R> series_log(const TruncatedSeries<R> &f) {
  long o = f.order();
  if (o < 0)
    return f;
  if (!(f[0] == R{1}))
    throw domain_error("series_log: constant term must be 1, got " + to_display(f[0]));
  std::vector<R> l(static_cast<std::size_t>(o + 1));
  for (long m = 1; m <= o; ++m) {
    R acc{};
    for (long j = 1; j < m; ++j)
      if (!is_zero(l[j]))
        acc = acc + R(static_cast<long long>(j)) * l[j] * f[m - j];
    l[m] = f[m] - ring_traits<R>::scale(acc, ExactRational(1, m));
  }
  return TruncatedSeries<R>(std::move(l), o);
}

/// Coefficientwise product sum a_i b_i s^i. The two coefficient rings may
/// differ as long as a_i * b_i is defined.
template <class A, class B>
auto hadamard(const TruncatedSeries<A> &f, const TruncatedSeries<B> &g) {
  using C = std::decay_t<decltype(std::declval<const A &>() * std::declval<const B &>())>;
  long o = std::min(f.order(), g.order());
  std::vector<C> v;
  for (long i = 0; i <= o; ++i)
    v.push_back(f[i] * g[i]);
  return TruncatedSeries<C>(std::move(v), o);
}

/// Coefficients of exp(c*s) to the given order, over any ring containing Q.
template <class R> TruncatedSeries<R> exp_linear(const R &c, long order) {
  std::vector<R> v(static_cast<std::size_t>(order + 1), R{});
  if (order >= 1)
    v[1] = c;
  return series_exp(TruncatedSeries<R>(std::move(v), order));
}

} // namespace chern

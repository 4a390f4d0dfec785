#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "chern/polynomial.hpp"

namespace chern {

/// Rational function in one parameter y over Q, kept as a reduced fraction
/// with a monic denominator so that equal values have equal representations.
class ParamRational {
public:
  ParamRational() : den_(RatPoly::constant(ExactRational(1), "y")) {}
  explicit ParamRational(long long c) : ParamRational(ExactRational(c)) {}
  explicit ParamRational(const ExactRational &c)
      : num_(RatPoly::constant(c, "y")), den_(RatPoly::constant(ExactRational(1), "y")) {}
  explicit ParamRational(const RatPoly &p) : ParamRational(p, RatPoly::constant(ExactRational(1))) {}
  ParamRational(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
      throw domain_error("rational function with zero denominator");
    normalize();
  }

  /// The parameter y itself.
  static ParamRational y() { return ParamRational(RatPoly::variable("y")); }

  const RatPoly &numerator() const { return num_; }
  const RatPoly &denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// The polynomial value; only valid when is_polynomial().
  RatPoly as_polynomial() const {
    if (!is_polynomial())
      throw domain_error("not a polynomial in y: denominator " + den_.to_string());
    return num_;
  }

  ParamRational operator-() const {
    ParamRational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend ParamRational operator+(const ParamRational &a, const ParamRational &b) {
    if (a.den_ == b.den_)
      return ParamRational(a.num_ + b.num_, a.den_);
    return ParamRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend ParamRational operator-(const ParamRational &a, const ParamRational &b) { return a + (-b); }
  friend ParamRational operator*(const ParamRational &a, const ParamRational &b) {
    if (a.is_zero() || b.is_zero())
      return ParamRational();
    return ParamRational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend ParamRational operator/(const ParamRational &a, const ParamRational &b) {
    if (b.is_zero())
      throw domain_error("rational function division by zero");
    return ParamRational(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const ParamRational &a, const ParamRational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Value at y = point; the denominator must not vanish there.
  ExactRational evaluate(const ExactRational &point) const {
    ExactRational d = den_.evaluate(point);
    if (d.is_zero())
      throw domain_error("rational function has a pole at y = " + point.to_string());
    return num_.evaluate(point) / d;
  }

  std::string to_string() const {
    if (is_polynomial())
      return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

  friend std::ostream &operator<<(std::ostream &os, const ParamRational &x) {
    return os << x.to_string();
  }

private:
  void normalize() {
    num_ = num_.with_variable("y");
    den_ = den_.with_variable("y");
    if (num_.is_zero()) {
      den_ = RatPoly::constant(ExactRational(1), "y");
      return;
    }
    RatPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = poly_divide_exact(num_, g);
      den_ = poly_divide_exact(den_, g);
    }
    ExactRational lc = den_.leading_coefficient();
    if (!(lc == ExactRational(1))) {
      ExactRational inv = ExactRational(1) / lc;
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  RatPoly num_;
  RatPoly den_;
};

template <> struct ring_traits<ParamRational> {
  static constexpr bool is_scalar = false;
  static bool is_zero(const ParamRational &x) { return x.is_zero(); }
  static ParamRational scale(const ParamRational &x, const ExactRational &q) {
    return ParamRational(q) * x;
  }
  static std::optional<ParamRational> divide_exact(const ParamRational &a, const ParamRational &b) {
    if (b.is_zero())
      return std::nullopt;
    return a / b;
  }
  static std::string to_string(const ParamRational &x) { return x.to_string(); }
};

} // namespace chern

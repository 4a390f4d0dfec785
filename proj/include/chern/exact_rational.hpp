#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "chern/errors.hpp"

namespace chern {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  if (s.empty())
    throw domain_error("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    throw domain_error("malformed integer literal '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9')
      throw domain_error("malformed integer literal '" + s + "'");
  BigInt v(s.substr(i));
  return s[0] == '-' ? BigInt(-v) : v;
}

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
class ExactRational {
public:
  ExactRational() = default;
  ExactRational(long long v) : num_(v), den_(1) {} // NOLINT(implicit)
  ExactRational(const BigInt &v) : num_(v), den_(1) {} // NOLINT(implicit)
  ExactRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0)
      throw domain_error("rational with zero denominator");
    normalize();
  }

  const BigInt &numerator() const { return num_; }
  const BigInt &denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  ExactRational operator-() const {
    ExactRational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  ExactRational &operator+=(const ExactRational &o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  ExactRational &operator-=(const ExactRational &o) { return *this += -o; }
  ExactRational &operator*=(const ExactRational &o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  ExactRational &operator/=(const ExactRational &o) {
    if (o.num_ == 0)
      throw domain_error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend ExactRational operator+(ExactRational a, const ExactRational &b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational &b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational &b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational &b) { return a /= b; }

  friend bool operator==(const ExactRational &a, const ExactRational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRational &a, const ExactRational &b) {
    BigInt l = a.num_ * b.den_, r = b.num_ * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
  }
  /// Accepts "p" or "p/q".
  static ExactRational parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
      return ExactRational(parse_bigint(text));
    return ExactRational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
  }

  friend std::ostream &operator<<(std::ostream &os, const ExactRational &q) {
    return os << q.to_string();
  }

private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_{0};
  BigInt den_{1};
};

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n)
    return 0;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

inline BigInt pow(const BigInt &b, unsigned e) { return boost::multiprecision::pow(b, e); }

} // namespace chern

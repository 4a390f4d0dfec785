#pragma once

#include <optional>
#include <string>

#include "chern/exact_rational.hpp"

namespace chern {

// Coefficient-ring interface used by the polynomial and series templates.
// Every ring's default-constructed value is its zero and R{1} its identity.
template <class R> struct ring_traits;

template <> struct ring_traits<BigInt> {
  static constexpr bool is_scalar = true;
  static bool is_zero(const BigInt &x) { return x == 0; }
  static bool is_negative(const BigInt &x) { return x < 0; }
  static BigInt scale(const BigInt &x, const ExactRational &q) {
    BigInt p = x * q.numerator();
    if (p % q.denominator() != 0)
      throw domain_error("integer scaled by " + q.to_string() + " is not integral");
    return p / q.denominator();
  }
  static std::optional<BigInt> divide_exact(const BigInt &a, const BigInt &b) {
    if (b == 0 || a % b != 0)
      return std::nullopt;
    return BigInt(a / b);
  }
  static std::string to_string(const BigInt &x) { return x.str(); }
};

template <> struct ring_traits<ExactRational> {
  static constexpr bool is_scalar = true;
  static bool is_zero(const ExactRational &x) { return x.is_zero(); }
  static bool is_negative(const ExactRational &x) { return x < ExactRational(0); }
  static ExactRational scale(const ExactRational &x, const ExactRational &q) { return x * q; }
  static std::optional<ExactRational> divide_exact(const ExactRational &a, const ExactRational &b) {
    if (b.is_zero())
      return std::nullopt;
    return a / b;
  }
  static std::string to_string(const ExactRational &x) { return x.to_string(); }
};

template <class R> bool is_zero(const R &x) { return ring_traits<R>::is_zero(x); }

template <class R> std::optional<R> inverse(const R &x) {
  return ring_traits<R>::divide_exact(R{1}, x);
}

template <class R> std::string to_display(const R &x) { return ring_traits<R>::to_string(x); }

} // namespace chern

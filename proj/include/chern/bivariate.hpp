#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "chern/polynomial.hpp"

namespace chern {

/// Integer polynomial in s and t, stored sparsely as (exp_s, exp_t) -> coeff
/// with no zero entries.
class BivariatePolynomial {
public:
  using Key = std::pair<unsigned, unsigned>;

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::map<Key, BigInt> terms) {
    for (auto &[k, c] : terms)
      if (c != 0)
        terms_.emplace(k, std::move(c));
  }

  /// Builds sum_j coeffs[j](t) s^j.
  static BivariatePolynomial from_s_coefficients(const std::vector<IntPoly> &coeffs) {
    BivariatePolynomial b;
    for (unsigned j = 0; j < coeffs.size(); ++j)
      for (unsigned i = 0; i < coeffs[j].coefficients().size(); ++i)
        if (coeffs[j].coefficients()[i] != 0)
          b.terms_[{j, i}] = coeffs[j].coefficients()[i];
    return b;
  }
  static BivariatePolynomial from_nested(const DensePolynomial<IntPoly> &p) {
    return from_s_coefficients(p.coefficients());
  }

  const std::map<Key, BigInt> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  long degree_in_s() const {
    long d = -1;
    for (const auto &[k, c] : terms_)
      d = std::max<long>(d, k.first);
    return d;
  }

  BigInt coefficient(unsigned s_exp, unsigned t_exp) const {
    auto it = terms_.find({s_exp, t_exp});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// [s^j] as a polynomial in t.
  IntPoly s_coefficient(unsigned j) const {
    std::vector<BigInt> v;
    for (const auto &[k, c] : terms_)
      if (k.first == j) {
        if (v.size() <= k.second)
          v.resize(k.second + 1);
        v[k.second] = c;
      }
    return IntPoly(std::move(v), "t");
  }

  /// As a polynomial in s with coefficients in Z[t].
  DensePolynomial<IntPoly> nested() const {
    std::vector<IntPoly> v(static_cast<std::size_t>(degree_in_s() + 1));
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = s_coefficient(static_cast<unsigned>(j));
    return DensePolynomial<IntPoly>(std::move(v), "s");
  }

  /// Substitutes t = value, leaving a polynomial in s.
  IntPoly evaluate_t(const BigInt &value) const {
    std::vector<BigInt> v(static_cast<std::size_t>(degree_in_s() + 1));
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = s_coefficient(static_cast<unsigned>(j)).evaluate(value);
    return IntPoly(std::move(v), "s");
  }

  friend bool operator==(const BivariatePolynomial &, const BivariatePolynomial &) = default;

  /// "(10t - 10t^2) + (-6t)s + ..." grouped by ascending power of s.
  std::string to_string(bool descending = false) const {
    return nested().to_string(descending);
  }

  friend std::ostream &operator<<(std::ostream &os, const BivariatePolynomial &b) {
    return os << b.to_string();
  }

private:
  std::map<Key, BigInt> terms_;
};

} // namespace chern

#pragma once

#include <string>
#include <vector>

#include "chern/euler_hypersurface.hpp"
#include "chern/graded_class.hpp"
#include "chern/polynomial.hpp"

namespace chern {

using ChowClass = GradedClass<BigInt>;
/// Polynomial in s with Chow-ring coefficients.
using ChowPolynomial = DensePolynomial<ChowClass>;

/// Free model of A_*M for a smooth n-dimensional M: generators c1..cn
/// (weight i) and the hypersurface class X (weight 1), truncated above
/// weight n. An identity proved here holds for every such M.
class AmbientRing {
public:
  explicit AmbientRing(unsigned n) : n_(n) {
    detail::require_dimension(n);
    std::vector<std::pair<std::string, unsigned>> gens;
    for (unsigned i = 1; i <= n; ++i)
      gens.emplace_back("c" + std::to_string(i), i);
    gens.emplace_back("X", 1);
    table_ = make_table(std::move(gens), n);
  }

  unsigned dimension() const { return n_; }
  const TablePtr &table() const { return table_; }

  /// c_i(M), with c_0 = 1 and c_i = 0 for i > n.
  ChowClass chern(unsigned i) const {
    if (i == 0)
      return ChowClass::constant(table_, 1);
    if (i > n_)
      return ChowClass::zero(table_);
    return ChowClass::generator(table_, i - 1);
  }
  ChowClass hypersurface() const { return ChowClass::generator(table_, n_); }
  ChowClass one() const { return chern(0); }

private:
  unsigned n_;
  TablePtr table_;
};

/// s(X, M) = X / (1 + X) = sum_{j>=1} (-1)^(j-1) X^j.
inline ChowClass segre_class(const AmbientRing &ring) {
  ChowClass x = ring.hypersurface(), power = x, out = ChowClass::zero(ring.table());
  for (unsigned j = 1; j <= ring.dimension(); ++j) {
    out = (j % 2 == 1) ? out + power : out - power;
    power = power * x;
  }
  return out;
}

/// c(TM) s(X, M).
inline ChowClass fulton_class(const AmbientRing &ring) {
  ChowClass total = ring.one();
  for (unsigned i = 1; i <= ring.dimension(); ++i)
    total = total + ring.chern(i);
  return total * segre_class(ring);
}

/// c_{n-1} s - c_{n-2} s^2 + ... + (-1)^n c_1 s^(n-1) + (-1)^(n+1) s^n.
inline ChowPolynomial general_euler_poly(const AmbientRing &ring) {
  unsigned n = ring.dimension();
  std::vector<ChowClass> coeffs(n + 1, ChowClass::zero(ring.table()));
  for (unsigned j = 1; j <= n; ++j)
    coeffs[j] = (j % 2 == 1) ? ring.chern(n - j) : -ring.chern(n - j);
  return ChowPolynomial(std::move(coeffs), "s");
}

/// (theta^j E_n)(X); by the theorem this is the weight-(n-j) Fulton class.
inline ChowClass theta_ladder(const AmbientRing &ring, unsigned j) {
  return theta_power(general_euler_poly(ring), j).evaluate(ring.hypersurface());
}

/// True iff sum_{j=0}^{n-1} (theta^j E_n)(X) equals the Fulton class exactly.
inline bool verify_identity(const AmbientRing &ring) {
  ChowClass lhs = ChowClass::zero(ring.table());
  ChowPolynomial e = general_euler_poly(ring);
  for (unsigned j = 0; j < ring.dimension(); ++j) {
    lhs = lhs + e.evaluate(ring.hypersurface());
    e = theta(e);
  }
  return lhs == fulton_class(ring);
}

inline bool verify_identity(unsigned n) { return verify_identity(AmbientRing(n)); }

/// Fulton class with M = P^n: c_i -> binom(n+1, i) H^i and X -> d H.
inline ChowClass specialize_to_projective(const AmbientRing &ring, const BigInt &d) {
  detail::require_degree(d);
  unsigned n = ring.dimension();
  TablePtr target = projective_table(n);
  std::vector<ChowClass> images;
  for (unsigned i = 1; i <= n; ++i)
    images.push_back(ChowClass::monomial(target, {i}, binomial(n + 1, i)));
  images.push_back(ChowClass::monomial(target, {1}, d));
  return substitute(fulton_class(ring), images);
}

inline ChowClass specialize_to_projective(unsigned n, const BigInt &d) {
  return specialize_to_projective(AmbientRing(n), d);
}

} // namespace chern

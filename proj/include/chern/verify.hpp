#pragma once

#include <cstddef>
#include <string>

#include "chern/euler_hypersurface.hpp"
#include "chern/fulton_general.hpp"
#include "chern/hirzebruch.hpp"

namespace chern {

/// Tally of one exhaustive sweep; keeps the first mismatch for reporting.
struct SweepResult {
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string first_failure;

  bool ok() const { return passed == total; }
  void record(bool good, const std::string &what) {
    ++total;
    if (good)
      ++passed;
    else if (first_failure.empty())
      first_failure = what;
  }
};

struct SweepBounds {
  unsigned n_max = 8;
  unsigned d_max = 10;
};

namespace detail {

inline std::string cell(unsigned n, unsigned d) {
  return "n=" + std::to_string(n) + " d=" + std::to_string(d);
}

} // namespace detail

/// The Fulton identity and the per-weight ladder, symbolically, n = 1..n_max.
inline SweepResult sweep_fulton_identity(const SweepBounds &b) {
  SweepResult r;
  for (unsigned n = 1; n <= b.n_max; ++n) {
    AmbientRing ring(n);
    bool good = verify_identity(ring);
    ChowClass fulton = fulton_class(ring);
    for (unsigned j = 0; j < n && good; ++j)
      good = theta_ladder(ring, j) == fulton.component(n - j);
    r.record(good, "n=" + std::to_string(n));
  }
  return r;
}

/// Fulton class specialized to P^n equals the pushforward Chern polynomial.
inline SweepResult sweep_fulton_specialization(const SweepBounds &b) {
  SweepResult r;
  for (unsigned n = 1; n <= b.n_max; ++n) {
    AmbientRing ring(n);
    for (unsigned d = 1; d <= b.d_max; ++d)
      r.record(specialize_to_projective(ring, d) == pushforward_class(n, d), detail::cell(n, d));
  }
  return r;
}

/// (theta^(n-(k+1)) E_n)(d) = gamma_k d against the adjunction oracle.
inline SweepResult sweep_theorem_oracle(const SweepBounds &b) {
  SweepResult r;
  for (unsigned n = 1; n <= b.n_max; ++n)
    for (unsigned d = 1; d <= b.d_max; ++d) {
      ChernData data = chern_oracle(n, d);
      bool good = true;
      for (unsigned k = 0; k < n; ++k)
        good = good && theta_euler(n, n - (k + 1)).evaluate(d) == data.pushforward_coefficient(k);
      r.record(good, detail::cell(n, d));
    }
  return r;
}

/// chern_number against the oracle and corollary_product = d^(m-1) chern_number.
inline SweepResult sweep_chern_normalization(const SweepBounds &b) {
  SweepResult r;
  for (unsigned n = 1; n <= b.n_max; ++n)
    for (unsigned d = 1; d <= b.d_max; ++d) {
      ChernData data = chern_oracle(n, d);
      bool good = true;
      for (const Partition &p : partitions_of(n - 1)) {
        BigInt c = chern_number(n, d, p);
        good = good && c == data.chern_number(p) &&
               corollary_product(n, d, p) == pow(BigInt(d), unsigned(p.size() - 1)) * c;
      }
      r.record(good, detail::cell(n, d));
    }
  return r;
}

/// (-1)^r [s^r] e_n(s, t) = E_{n-r}(t) as polynomials.
inline SweepResult sweep_section_identity(const SweepBounds &b) {
  SweepResult r;
  for (unsigned n = 2; n <= b.n_max; ++n) {
    BivariatePolynomial e = section_euler_poly(n);
    bool good = e.s_coefficient(0) == euler_polynomial(n).poly;
    for (unsigned k = 1; k < n; ++k) {
      IntPoly c = e.s_coefficient(k);
      good = good && (k % 2 == 0 ? c : -c) == euler_polynomial(n - k).poly;
    }
    r.record(good, "n=" + std::to_string(n));
  }
  return r;
}

/// chi_y via the Hadamard formula against the classical genus, plus
/// chi_{-1} = E_n(d) and Serre symmetry.
inline SweepResult sweep_chi_y_oracle(const SweepBounds &b) {
  SweepResult r;
  for (unsigned n = 2; n <= b.n_max; ++n)
    for (unsigned d = 1; d <= b.d_max; ++d) {
      ChiYGenus path = chi_y(n, d), oracle = chi_y_oracle(n, d);
      bool good = path == oracle && path.at(-1) == euler_polynomial(n)(d);
      unsigned dim = n - 1;
      for (unsigned p = 0; p <= dim && good; ++p) {
        BigInt lhs = path.poly.coefficient(p), rhs = path.poly.coefficient(dim - p);
        good = lhs == (dim % 2 == 0 ? rhs : BigInt(-rhs));
      }
      r.record(good, detail::cell(n, d));
    }
  return r;
}

} // namespace chern

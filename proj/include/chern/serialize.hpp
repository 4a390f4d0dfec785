#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "chern/bivariate.hpp"
#include "chern/polynomial.hpp"

namespace chern {

/// Insertion-ordered JSON, so emitted records keep a fixed key order.
using Json = nlohmann::ordered_json;

// Integers serialize as JSON numbers when they fit in int64 and as decimal
// strings otherwise; rationals that are not integers as "p/q" strings.
// Polynomials serialize as ascending-degree coefficient arrays.

inline Json to_json_value(const BigInt &x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline Json to_json_value(const ExactRational &q) {
  if (q.is_integer())
    return to_json_value(q.numerator());
  return q.to_string();
}

template <class R> Json to_json_value(const DensePolynomial<R> &p) {
  Json arr = Json::array();
  for (const auto &c : p.coefficients())
    arr.push_back(to_json_value(c));
  return arr;
}

/// [[t-coefficients of s^0], [t-coefficients of s^1], ...].
inline Json to_json_value(const BivariatePolynomial &b) {
  Json arr = Json::array();
  for (long j = 0; j <= b.degree_in_s(); ++j)
    arr.push_back(to_json_value(b.s_coefficient(static_cast<unsigned>(j))));
  return arr;
}

inline BigInt bigint_from_json(const Json &j) {
  if (j.is_number_integer())
    return BigInt(j.get<std::int64_t>());
  if (j.is_string())
    return parse_bigint(j.get<std::string>());
  throw domain_error("expected an integer, got " + j.dump());
}

inline ExactRational rational_from_json(const Json &j) {
  if (j.is_string())
    return ExactRational::parse(j.get<std::string>());
  return ExactRational(bigint_from_json(j));
}

inline IntPoly int_poly_from_json(const Json &j, std::string var = "t") {
  if (!j.is_array())
    throw domain_error("expected a coefficient array, got " + j.dump());
  std::vector<BigInt> c;
  for (const auto &x : j)
    c.push_back(bigint_from_json(x));
  return IntPoly(std::move(c), std::move(var));
}

inline RatPoly rat_poly_from_json(const Json &j, std::string var = "t") {
  if (!j.is_array())
    throw domain_error("expected a coefficient array, got " + j.dump());
  std::vector<ExactRational> c;
  for (const auto &x : j)
    c.push_back(rational_from_json(x));
  return RatPoly(std::move(c), std::move(var));
}

inline BivariatePolynomial bivariate_from_json(const Json &j) {
  if (!j.is_array())
    throw domain_error("expected an array of coefficient arrays, got " + j.dump());
  std::vector<IntPoly> rows;
  for (const auto &row : j)
    rows.push_back(int_poly_from_json(row));
  return BivariatePolynomial::from_s_coefficients(rows);
}

} // namespace chern

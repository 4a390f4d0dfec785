#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <ostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chern/ring_traits.hpp"

namespace chern {

/// Generators of a weighted polynomial ring together with the weight above
/// which monomials vanish.
struct GeneratorTable {
  std::vector<std::string> names;
  std::vector<unsigned> weights;
  unsigned truncation = 0;

  friend bool operator==(const GeneratorTable &, const GeneratorTable &) = default;

  std::size_t size() const { return names.size(); }
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

inline TablePtr make_table(std::vector<std::pair<std::string, unsigned>> gens, unsigned truncation) {
  auto t = std::make_shared<GeneratorTable>();
  for (auto &[name, w] : gens) {
    if (w == 0)
      throw domain_error("generator '" + name + "' must have positive weight");
    t->names.push_back(std::move(name));
    t->weights.push_back(w);
  }
  t->truncation = truncation;
  return t;
}

/// Element of a weighted polynomial ring modulo all monomials of total weight
/// above the table's truncation (a stand-in for a Chow ring).
///
/// A class with no table is a bare scalar; it combines with any tabled class
/// by promotion. This lets `GradedClass<C>{}` and `GradedClass<C>(1)` serve as
/// the universal zero and one.
template <class C> class GradedClass {
public:
  using Exponents = std::vector<unsigned>;
  using coefficient_type = C;

  GradedClass() = default;
  explicit GradedClass(long long c) {
    if (c != 0)
      terms_.emplace(Exponents{}, C(c));
  }

  static GradedClass scalar(C c) {
    GradedClass g;
    if (!chern::is_zero(c))
      g.terms_.emplace(Exponents{}, std::move(c));
    return g;
  }
  static GradedClass constant(TablePtr table, C c) {
    GradedClass g;
    g.table_ = std::move(table);
    if (!chern::is_zero(c))
      g.terms_.emplace(Exponents(g.table_->size(), 0), std::move(c));
    return g;
  }
  static GradedClass zero(TablePtr table) {
    GradedClass g;
    g.table_ = std::move(table);
    return g;
  }
  /// coeff * (product of generators^exps), dropped if over the truncation.
  static GradedClass monomial(TablePtr table, Exponents exps, C coeff = C(1)) {
    if (exps.size() != table->size())
      throw domain_error("exponent vector does not match the generator table");
    GradedClass g = zero(std::move(table));
    if (g.weight_of(exps) <= g.table_->truncation && !chern::is_zero(coeff))
      g.terms_.emplace(std::move(exps), std::move(coeff));
    return g;
  }
  static GradedClass generator(TablePtr table, std::size_t index) {
    Exponents e(table->size(), 0);
    e.at(index) = 1;
    return monomial(std::move(table), std::move(e));
  }

  const TablePtr &table() const { return table_; }
  const std::map<Exponents, C> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  unsigned weight_of(const Exponents &e) const {
    unsigned w = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      w += e[i] * table_->weights[i];
    return w;
  }

  C coefficient(const Exponents &e) const {
    if (!table_)
      return e.empty() || std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; })
                 ? constant_term()
                 : C{};
    auto it = terms_.find(e);
    return it == terms_.end() ? C{} : it->second;
  }
  C constant_term() const {
    for (const auto &[e, c] : terms_)
      if (std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; }))
        return c;
    return C{};
  }

  /// Terms of total weight exactly w.
  GradedClass component(unsigned w) const {
    GradedClass g = *this;
    std::erase_if(g.terms_, [&](const auto &kv) { return weight(kv.first) != w; });
    return g;
  }

  GradedClass operator-() const {
    GradedClass g = *this;
    for (auto &[e, c] : g.terms_)
      c = -c;
    return g;
  }
  friend GradedClass operator+(const GradedClass &a, const GradedClass &b) {
    TablePtr t = unify(a, b);
    GradedClass r = a.lifted(t);
    for (auto &[e, c] : b.lifted(t).terms_) {
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(e, c);
      } else {
        it->second = it->second + c;
        if (chern::is_zero(it->second))
          r.terms_.erase(it);
      }
    }
    return r;
  }
  friend GradedClass operator-(const GradedClass &a, const GradedClass &b) { return a + (-b); }
  friend GradedClass operator*(const GradedClass &a, const GradedClass &b) {
    TablePtr t = unify(a, b);
    GradedClass la = a.lifted(t), lb = b.lifted(t);
    GradedClass r = zero(t);
    for (const auto &[ea, ca] : la.terms_)
      for (const auto &[eb, cb] : lb.terms_) {
        Exponents e = ea;
        for (std::size_t i = 0; i < e.size(); ++i)
          e[i] += eb[i];
        if (t && r.weight_of(e) > t->truncation)
          continue;
        C prod = ca * cb;
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
          if (!chern::is_zero(prod))
            r.terms_.emplace(std::move(e), std::move(prod));
        } else {
          it->second = it->second + prod;
          if (chern::is_zero(it->second))
            r.terms_.erase(it);
        }
      }
    return r;
  }
  friend GradedClass operator*(const C &c, const GradedClass &g) {
    GradedClass r = g;
    for (auto &[e, x] : r.terms_)
      x = c * x;
    std::erase_if(r.terms_, [](const auto &kv) { return chern::is_zero(kv.second); });
    return r;
  }

  friend bool operator==(const GradedClass &a, const GradedClass &b) {
    if (a.table_ && b.table_ && !(*a.table_ == *b.table_))
      return false;
    TablePtr t = a.table_ ? a.table_ : b.table_;
    return a.lifted(t).terms_ == b.lifted(t).terms_;
  }

  /// Monomials by ascending weight, e.g. "X + c1*X - X^2".
  std::string to_string() const;

  friend std::ostream &operator<<(std::ostream &os, const GradedClass &g) {
    return os << g.to_string();
  }

private:
  unsigned weight(const Exponents &e) const { return table_ ? weight_of(e) : 0; }

  static TablePtr unify(const GradedClass &a, const GradedClass &b) {
    if (a.table_ && b.table_) {
      if (a.table_ != b.table_ && !(*a.table_ == *b.table_))
        throw domain_error("graded classes over different generator tables");
      return a.table_;
    }
    return a.table_ ? a.table_ : b.table_;
  }

  GradedClass lifted(const TablePtr &t) const {
    if (table_ || !t)
      return *this;
    GradedClass g = zero(t);
    for (const auto &[e, c] : terms_)
      g.terms_.emplace(Exponents(t->size(), 0), c);
    return g;
  }

  TablePtr table_;
  std::map<Exponents, C> terms_;
};

template <class C> std::string GradedClass<C>::to_string() const {
  if (terms_.empty())
    return "0";
  std::vector<std::pair<unsigned, const Exponents *>> order;
  for (const auto &[e, c] : terms_)
    order.emplace_back(weight(e), &e);
  std::stable_sort(order.begin(), order.end(), [](const auto &x, const auto &y) {
    return x.first != y.first ? x.first < y.first : *x.second > *y.second;
  });
  std::string out;
  bool first = true;
  for (const auto &[w, ep] : order) {
    const Exponents &e = *ep;
    const C &c = terms_.at(e);
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      if (!mono.empty())
        mono += "*";
      mono += table_->names[i];
      if (e[i] > 1)
        mono += "^" + std::to_string(e[i]);
    }
    std::string coeff;
    bool neg = false;
    if constexpr (ring_traits<C>::is_scalar) {
      neg = ring_traits<C>::is_negative(c);
      C mag = neg ? C(-c) : c;
      coeff = (mag == C(1) && !mono.empty()) ? "" : ring_traits<C>::to_string(mag);
    } else {
      coeff = ring_traits<C>::to_string(c);
      if (coeff == "1" && !mono.empty())
        coeff.clear();
      else if (coeff.find(' ') != std::string::npos)
        coeff = "(" + coeff + ")";
    }
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += coeff;
    if (!coeff.empty() && !mono.empty())
      out += "*";
    out += mono;
    first = false;
  }
  return out;
}

template <class C> struct ring_traits<GradedClass<C>> {
  static constexpr bool is_scalar = false;
  static bool is_zero(const GradedClass<C> &g) { return g.is_zero(); }
  static GradedClass<C> scale(const GradedClass<C> &g, const ExactRational &q) {
    GradedClass<C> r = GradedClass<C>::zero(g.table());
    for (const auto &[e, c] : g.terms())
      r = r + (g.table() ? GradedClass<C>::monomial(g.table(), e, ring_traits<C>::scale(c, q))
                         : GradedClass<C>::scalar(ring_traits<C>::scale(c, q)));
    return r;
  }
  /// a/b when b's constant term is a unit of C (b = unit + nilpotent);
  /// no other divisions are attempted.
  static std::optional<GradedClass<C>> divide_exact(const GradedClass<C> &a,
                                                     const GradedClass<C> &b) {
    auto inv0 = inverse(b.constant_term());
    if (!inv0)
      return std::nullopt;
    GradedClass<C> unit = GradedClass<C>::scalar(*inv0);
    GradedClass<C> nil = GradedClass<C>(1) - unit * b; // nilpotent part, up to sign
    GradedClass<C> acc(1), power(1);
    unsigned steps = b.table() ? b.table()->truncation : 0;
    for (unsigned i = 0; i < steps; ++i) {
      power = power * nil;
      if (power.is_zero())
        break;
      acc = acc + power;
    }
    return a * (acc * unit);
  }
  static std::string to_string(const GradedClass<C> &g) { return g.to_string(); }
};

/// The ring homomorphism sending generator i of x's table to images[i].
template <class C>
GradedClass<C> substitute(const GradedClass<C> &x, const std::vector<GradedClass<C>> &images) {
  if (!x.table())
    return x;
  if (images.size() != x.table()->size())
    throw domain_error("substitution needs one image per generator");
  GradedClass<C> out;
  for (const auto &[e, c] : x.terms()) {
    GradedClass<C> term = GradedClass<C>::scalar(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k)
        term = term * images[i];
    out = out + term;
  }
  return out;
}

/// Reads x's monomials in another table with the same number of generators,
/// dropping those over the new truncation.
template <class C> GradedClass<C> relabel(const GradedClass<C> &x, const TablePtr &table) {
  GradedClass<C> out = GradedClass<C>::zero(table);
  for (const auto &[e, c] : x.terms()) {
    auto full = e.empty() ? typename GradedClass<C>::Exponents(table->size(), 0) : e;
    out = out + GradedClass<C>::monomial(table, full, c);
  }
  return out;
}

} // namespace chern

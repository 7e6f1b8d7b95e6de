#pragma once

#include "ahs/error.hpp"
#include "ahs/graded_lie.hpp"
#include "ahs/rational.hpp"
#include "ahs/sparse_vector.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ahs {

/// Exponent vector over the coordinates x^1..x^n.
using Monomial = std::vector<std::uint8_t>;

inline int degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const LieVec& v) { return v.empty(); }

/// Polynomial germ at o truncated at total degree `order`: only terms of
/// degree <= order are meaningful, everything above is discarded.
template <class Coeff>
class Jet {
 public:
  using Terms = std::map<Monomial, Coeff>;

  Jet() = default;
  Jet(int vars, int order) : vars_(vars), order_(order) {}

  int vars() const { return vars_; }
  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const Monomial& m, const Coeff& c) {
    if (is_zero(c) || degree(m) > order_) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  Coeff at_origin() const { return coefficient(Monomial(vars_, 0)); }

  /// Smallest degree with a nonzero term; order + 1 for the zero jet.
  int lowest_degree() const {
    int low = order_ + 1;
    for (const auto& [m, c] : terms_) low = std::min(low, degree(m));
    return low;
  }

  Jet truncated(int k) const {
    Jet out(vars_, std::min(order_, k));
    for (const auto& [m, c] : terms_)
      if (degree(m) <= out.order_) out.terms_.emplace(m, c);
    return out;
  }

  /// d/dx^i; the result is known one degree less.
  Jet derivative(int i) const {
    if (order_ == 0) throw Error(ErrorKind::OrderExhausted, "cannot differentiate an order-0 jet");
    Jet out(vars_, order_ - 1);
    for (const auto& [m, c] : terms_) {
      if (m[i] == 0) continue;
      Monomial d = m;
      --d[i];
      Coeff v = c;
      v *= Rational(m[i]);
      out.add(d, v);
    }
    return out;
  }

  Jet& operator+=(const Jet& o) { return combine(o, Rational(1)); }
  Jet& operator-=(const Jet& o) { return combine(o, Rational(-1)); }
  Jet& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Rational& s, Jet a) { return a *= s; }
  friend bool operator==(const Jet& a, const Jet& b) {
    return a.vars_ == b.vars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

 private:
  Jet& combine(const Jet& o, const Rational& sign) {
    if (o.order_ < order_) *this = truncated(o.order_);
    for (const auto& [m, c] : o.terms_) {
      Coeff v = c;
      v *= sign;
      add(m, v);
    }
    return *this;
  }

  int vars_ = 0;
  int order_ = 0;
  Terms terms_;
};

using ScalarJet = Jet<Rational>;
using LieJet = Jet<LieVec>;

inline Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.size(); ++i) m[i] += b[i];
  return m;
}

/// f * s with op on coefficients, keeping degrees <= order; terms of s are bucketed by degree.
template <class FCoeff, class Coeff, class Op>
Jet<Coeff> product_up_to(const Jet<FCoeff>& f, const Jet<Coeff>& s, int order, const Op& op) {
  order = std::min({order, f.order(), s.order()});
  Jet<Coeff> out(s.vars(), order);
  if (order < 0) return out;
  std::vector<std::vector<const std::pair<const Monomial, Coeff>*>> by_degree(order + 1);
  for (const auto& t : s.terms()) {
    const int d = degree(t.first);
    if (d <= order) by_degree[d].push_back(&t);
  }
  for (const auto& [mf, cf] : f.terms()) {
    const int df = degree(mf);
    for (int d = 0; d + df <= order; ++d)
      for (const auto* t : by_degree[d]) out.add(multiply(mf, t->first), op(cf, t->second));
  }
  return out;
}

/// Product of a scalar germ with a scalar or Lie-valued germ.
template <class Coeff>
Jet<Coeff> operator*(const ScalarJet& f, const Jet<Coeff>& s) {
  return product_up_to(f, s, s.order(), [](const Rational& x, const Coeff& y) {
    Coeff v = y;
    v *= x;
    return v;
  });
}

/// Pointwise Lie bracket of two germs, optionally cut at a lower order.
inline LieJet bracket(const GradedLieAlgebra& alg, const LieJet& a, const LieJet& b,
                      int order = std::numeric_limits<int>::max()) {
  return product_up_to(a, b, order, [&](const LieVec& x, const LieVec& y) { return bracket(alg, x, y); });
}

inline std::string format_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    out += "x" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace ahs

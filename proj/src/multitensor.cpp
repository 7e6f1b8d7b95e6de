#include "ahs/multitensor.hpp"

#include "ahs/error.hpp"

#include <algorithm>

namespace ahs {

namespace {

Rational falling(int t, int m) {
  Rational r = 1;
  for (int i = 0; i < m; ++i) r *= t - i;
  return r;
}

Rational factorial(int n) { return falling(n, n); }

/// d^w x^t as (coefficient, residual monomial); coefficient 0 if it vanishes.
std::pair<Rational, MultiIndex> differentiate(const MultiIndex& t, const MultiIndex& w, int n) {
  auto te = exponents(t, n);
  const auto we = exponents(w, n);
  Rational c = 1;
  for (int i = 0; i < n; ++i) {
    if (we[i] > te[i]) return {Rational(0), {}};
    c *= falling(te[i], we[i]);
    te[i] -= we[i];
  }
  return {c, from_exponents(te)};
}

void check_pair(int dim_t, int deg_t, const SymTensor& w) {
  if (w.variance != Variance::Vector)
    throw Error(ErrorKind::DimensionMismatch, "second argument of contract must be a vector tensor");
  if (w.dim != dim_t) throw Error(ErrorKind::DimensionMismatch, "tensor dimensions differ");
  if (w.degree > deg_t) throw Error(ErrorKind::DimensionMismatch, "too many slots to contract");
}

}  // namespace

void SymTensor::add(MultiIndex m, const Rational& c) {
  if (c == 0) return;
  std::sort(m.begin(), m.end());
  auto& slot = coeffs[m];
  slot += c;
  if (slot == 0) coeffs.erase(m);
}

void MixedTensor::add(MultiIndex m, int slot, const Rational& c) {
  if (c == 0) return;
  std::sort(m.begin(), m.end());
  const auto key = std::make_pair(std::move(m), slot);
  auto& v = coeffs[key];
  v += c;
  if (v == 0) coeffs.erase(key);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

std::vector<MultiIndex> sym_basis(int k, int n) {
  std::vector<MultiIndex> out;
  MultiIndex cur(k, 0);
  if (k == 0) return {MultiIndex{}};
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == n - 1) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int i = pos + 1; i < k; ++i) cur[i] = cur[pos];
  }
  return out;
}

std::size_t sym_rank(const MultiIndex& m, int n) {
  // Count the multisets that precede m lexicographically.
  const int k = static_cast<int>(m.size());
  std::size_t rank = 0;
  int lo = 0;
  for (int pos = 0; pos < k; ++pos) {
    for (int v = lo; v < m[pos]; ++v) rank += binomial(n - v + k - pos - 2, k - pos - 1);
    lo = m[pos];
  }
  return rank;
}

MultiIndex from_exponents(const std::vector<int>& e) {
  MultiIndex m;
  for (int i = 0; i < static_cast<int>(e.size()); ++i) m.insert(m.end(), e[i], i);
  return m;
}

std::vector<int> exponents(const MultiIndex& m, int n) {
  std::vector<int> e(n, 0);
  for (int i : m) ++e[i];
  return e;
}

std::string format_monomial(const MultiIndex& m, const std::string& symbol) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    out += symbol + std::to_string(m[i] + 1);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

SymTensor contract(const SymTensor& t, const SymTensor& w) {
  if (t.variance != Variance::Dual)
    throw Error(ErrorKind::DimensionMismatch, "first argument of contract must be a dual tensor");
  check_pair(t.dim, t.degree, w);
  SymTensor out{t.degree - w.degree, t.dim, Variance::Dual, {}};
  const Rational norm = factorial(t.degree - w.degree) / factorial(t.degree);
  for (const auto& [wm, wc] : w.coeffs)
    for (const auto& [tm, tc] : t.coeffs) {
      auto [c, rest] = differentiate(tm, wm, t.dim);
      if (c != 0) out.add(std::move(rest), norm * wc * tc * c);
    }
  return out;
}

MixedTensor contract(const MixedTensor& t, const SymTensor& w) {
  check_pair(t.dim, t.sym_degree, w);
  MixedTensor out{t.sym_degree - w.degree, t.dim, {}};
  const Rational norm = factorial(t.sym_degree - w.degree) / factorial(t.sym_degree);
  for (const auto& [wm, wc] : w.coeffs)
    for (const auto& [key, tc] : t.coeffs) {
      auto [c, rest] = differentiate(key.first, wm, t.dim);
      if (c != 0) out.add(std::move(rest), key.second, norm * wc * tc * c);
    }
  return out;
}

Rational evaluate(const SymTensor& t, const RationalVector& v) {
  Rational total = 0;
  for (const auto& [m, c] : t.coeffs) {
    Rational term = c;
    for (int i : m) term *= v(i);
    total += term;
  }
  return total;
}

RationalMatrix bilinear_form(const SymTensor& t) {
  if (t.degree != 2) throw Error(ErrorKind::DimensionMismatch, "bilinear form needs degree 2");
  RationalMatrix q = RationalMatrix::Zero(t.dim, t.dim);
  for (const auto& [m, c] : t.coeffs) {
    if (m[0] == m[1]) {
      q(m[0], m[0]) = c;
    } else {
      q(m[0], m[1]) = c / 2;
      q(m[1], m[0]) = c / 2;
    }
  }
  return q;
}

RationalMatrix bilinear_form(const MixedTensor& t) {
  if (t.sym_degree != 1) throw Error(ErrorKind::DimensionMismatch, "bilinear form needs degree 1 + 1");
  RationalMatrix q = RationalMatrix::Zero(t.dim, t.dim);
  for (const auto& [key, c] : t.coeffs) q(key.first[0], key.second) = c;
  return q;
}

SparseVec<Rational> coordinates(const SymTensor& t) {
  SparseVec<Rational> v;
  for (const auto& [m, c] : t.coeffs) v.add(static_cast<int>(sym_rank(m, t.dim)), c);
  return v;
}

SparseVec<Rational> coordinates(const MixedTensor& t) {
  SparseVec<Rational> v;
  for (const auto& [key, c] : t.coeffs)
    v.add(static_cast<int>(sym_rank(key.first, t.dim)) * t.dim + key.second, c);
  return v;
}

}  // namespace ahs

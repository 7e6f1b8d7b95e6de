#include "ahs/error.hpp"
#include "ahs/multitensor.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace ahs;

namespace {

Rational fact(int k) {
  Rational r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

/// Full polarization T(v_1, ..., v_d) by inclusion-exclusion over subsets,
/// using only polynomial evaluation of T.
Rational polarized(const SymTensor& t, const std::vector<RationalVector>& vs) {
  const int d = static_cast<int>(vs.size());
  Rational total = 0;
  for (int mask = 1; mask < (1 << d); ++mask) {
    RationalVector s = RationalVector::Zero(t.dim);
    int count = 0;
    for (int i = 0; i < d; ++i)
      if (mask & (1 << i)) {
        s += vs[i];
        ++count;
      }
    const Rational v = evaluate(t, s);
    total += ((d - count) % 2 == 0) ? v : Rational(-v);
  }
  return total / fact(d);
}

RationalVector unit(int n, int i) {
  RationalVector v = RationalVector::Zero(n);
  v(i) = 1;
  return v;
}

SymTensor random_dual(int degree, int n, std::mt19937_64& rng) {
  SymTensor t{degree, n, Variance::Dual, {}};
  for (const auto& m : sym_basis(degree, n)) t.add(m, Rational(static_cast<long>(rng() % 7) - 3));
  return t;
}

SymTensor vector_monomial(const MultiIndex& m, int n) {
  SymTensor w{static_cast<int>(m.size()), n, Variance::Vector, {}};
  w.add(m, 1);
  return w;
}

}  // namespace

TEST_CASE("symmetric bases", "[multitensor]") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= 5; ++k) {
      const auto basis = sym_basis(k, n);
      CHECK(basis.size() == binomial(n + k - 1, k));
      for (std::size_t i = 0; i < basis.size(); ++i) REQUIRE(sym_rank(basis[i], n) == i);
      CHECK(std::is_sorted(basis.begin(), basis.end()));
    }
  CHECK(binomial(19, 4) == 3876);
  CHECK(from_exponents({2, 0, 1}) == MultiIndex{0, 0, 2});
  CHECK(exponents({0, 0, 2}, 3) == std::vector<int>{2, 0, 1});
  CHECK(format_monomial({0, 0, 1}, "e") == "e1^2e2");
}

TEST_CASE("contract equals the polarized form", "[multitensor]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int d = 3 + static_cast<int>(rng() % 3);
    const int p = 1 + static_cast<int>(rng() % (d - 1));
    const SymTensor t = random_dual(d, n, rng);
    MultiIndex m;
    for (int i = 0; i < p; ++i) m.push_back(static_cast<int>(rng() % n));
    std::sort(m.begin(), m.end());
    const SymTensor r = contract(t, vector_monomial(m, n));
    REQUIRE(r.degree == d - p);
    RationalVector x(n);
    for (int i = 0; i < n; ++i) x(i) = Rational(static_cast<long>(rng() % 5) - 2, 1 + static_cast<long>(rng() % 2));
    std::vector<RationalVector> args;
    for (int i : m) args.push_back(unit(n, i));
    for (int i = p; i < d; ++i) args.push_back(x);
    CHECK(evaluate(r, x) == polarized(t, args));
  }
}

TEST_CASE("mixed contraction keeps the free slot", "[multitensor]") {
  MixedTensor t{3, 2, {}};
  t.add({0, 0, 1}, 1, 6);
  const MixedTensor r = contract(t, vector_monomial({0, 1}, 2));
  // d^2/dx1 dx2 (6 x1^2 x2) = 12 x1, times 1!/3!
  REQUIRE(r.coeffs.size() == 1);
  CHECK(r.coeffs.begin()->first == std::make_pair(MultiIndex{0}, 1));
  CHECK(r.coeffs.begin()->second == 2);
  const RationalMatrix q = bilinear_form(r);
  CHECK(q(0, 1) == 2);
  CHECK(q(1, 0) == 0);
}

TEST_CASE("bilinear form reproduces the quadratic polynomial", "[multitensor]") {
  std::mt19937_64 rng(3);
  const SymTensor t = random_dual(2, 4, rng);
  const RationalMatrix q = bilinear_form(t);
  CHECK(q == RationalMatrix(q.transpose()));
  RationalVector v(4);
  v << 1, -2, Rational(1, 3), 5;
  CHECK(Rational((v.transpose() * q * v)(0, 0)) == evaluate(t, v));
}

TEST_CASE("explicit images of the degree-6 witness", "[multitensor]") {
  // T = x1^4 x2^2 on K^2; derived by hand from the normalisation 2!/6!.
  SymTensor t{6, 2, Variance::Dual, {}};
  t.add({0, 0, 0, 0, 1, 1}, 1);
  const SymTensor a = contract(t, vector_monomial({0, 0, 1, 1}, 2));
  CHECK(a.coeffs == std::map<MultiIndex, Rational>{{{0, 0}, Rational(1, 15)}});
  const SymTensor b = contract(t, vector_monomial({0, 0, 0, 0}, 2));
  CHECK(b.coeffs == std::map<MultiIndex, Rational>{{{1, 1}, Rational(1, 15)}});
  const SymTensor c = contract(t, vector_monomial({0, 0, 0, 1}, 2));
  CHECK(c.coeffs == std::map<MultiIndex, Rational>{{{0, 1}, Rational(2, 15)}});
  CHECK(contract(t, vector_monomial({1, 1, 1, 1}, 2)).coeffs.empty());
}

TEST_CASE("contract rejects mismatched arguments", "[multitensor]") {
  SymTensor t{3, 2, Variance::Dual, {}};
  t.add({0, 1, 1}, 1);
  auto mismatch = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind() == ErrorKind::DimensionMismatch;
    }
    return false;
  };
  CHECK(mismatch([&] { contract(t, vector_monomial({0}, 3)); }));
  CHECK(mismatch([&] { contract(t, vector_monomial({0, 0, 1, 1}, 2)); }));
  SymTensor dual_w{1, 2, Variance::Dual, {}};
  CHECK(mismatch([&] { contract(t, dual_w); }));
  CHECK(mismatch([&] { bilinear_form(t); }));
}

TEST_CASE("coordinates index residual tensors", "[multitensor]") {
  SymTensor s{2, 3, Variance::Dual, {}};
  s.add({1, 2}, 5);
  CHECK(coordinates(s) == SparseVec<Rational>{{4, 5}});
  MixedTensor m{1, 3, {}};
  m.add({2}, 1, 7);
  CHECK(coordinates(m) == SparseVec<Rational>{{7, 7}});
}

#pragma once

#include "ahs/rational.hpp"
#include "ahs/sparse_vector.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ahs {

/// Sorted multiset of 0-based coordinate indices; e.g. {0,0,1} is e_1^2 e_2.
using MultiIndex = std::vector<int>;

enum class Variance { Vector, Dual };

/// Element of S^k V (Vector) or S^k V* (Dual), keyed by monomial.
///
/// A dual tensor with coefficients t_m is the polynomial sum_m t_m x^m on V.
/// A vector tensor e^m is the symmetrization of the corresponding tensor
/// product of basis vectors.
struct SymTensor {
  int degree = 0;
  int dim = 0;
  Variance variance = Variance::Dual;
  std::map<MultiIndex, Rational> coeffs;

  void add(MultiIndex m, const Rational& c);
};

/// Element of S^k V* (x) V*, keyed by (monomial, free slot).
struct MixedTensor {
  int sym_degree = 0;
  int dim = 0;
  std::map<std::pair<MultiIndex, int>, Rational> coeffs;

  void add(MultiIndex m, int slot, const Rational& c);
};

std::uint64_t binomial(int n, int k);

/// All size-k multisets over {0..n-1}, lexicographic. Count C(n+k-1, k).
std::vector<MultiIndex> sym_basis(int k, int n);

/// Position of m in sym_basis(m.size(), n).
std::size_t sym_rank(const MultiIndex& m, int n);

/// Monomial from an exponent list, e.g. {2,0,1} -> {0,0,2}.
MultiIndex from_exponents(const std::vector<int>& exponents);
std::vector<int> exponents(const MultiIndex& m, int n);

std::string format_monomial(const MultiIndex& m, const std::string& symbol);

/// Plugs W into the first deg(W) slots of the symmetric multilinear form of T:
/// contract(T, e^m) = ((d - p)! / d!) * d^m T as a polynomial. Throws
/// DimensionMismatch on dimension or variance mismatch.
SymTensor contract(const SymTensor& t, const SymTensor& w);
MixedTensor contract(const MixedTensor& t, const SymTensor& w);

/// Value of the polynomial of a dual tensor at v.
Rational evaluate(const SymTensor& t, const RationalVector& v);

/// Symmetric matrix q with q(v, v) equal to the quadratic polynomial t.
RationalMatrix bilinear_form(const SymTensor& t);
/// q(a, b): coefficient of x_a in front of the free slot b.
RationalMatrix bilinear_form(const MixedTensor& t);

/// Coordinates of a residual tensor for span tracking: position in
/// sym_basis for SymTensor, a * dim + b for a degree-1 MixedTensor.
SparseVec<Rational> coordinates(const SymTensor& t);
SparseVec<Rational> coordinates(const MixedTensor& t);

}  // namespace ahs

#pragma once

#include "ahs/echelon.hpp"
#include "ahs/root_system.hpp"
#include "ahs/sparse_vector.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ahs {

enum class GenKind { Cartan, PosRoot, NegRoot };

/// Basis element: h_i (Cartan), e_beta (PosRoot) or f_beta = e_{-beta} (NegRoot).
/// `index` is the Cartan node (0-based) or the positive-root index.
struct Generator {
  GenKind kind;
  int index;
};

/// g = g_{-1} + g_0 + g_1 in a Chevalley basis. Basis order: h_1..h_r, then
/// e_beta for positive roots in root order, then f_beta in the same order.
/// Structure constants are integers.
class GradedLieAlgebra {
 public:
  using Terms = std::vector<std::pair<int, std::int64_t>>;

  const RootSystem& roots() const { return rs_; }
  int node() const { return node_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int rank() const { return rs_.rank(); }
  const Generator& generator(int i) const { return basis_[i]; }
  int grade(int i) const { return grade_[i]; }

  /// Basis indices of grade g, in basis order.
  const std::vector<int>& basis_of_grade(int g) const { return by_grade_[g + 1]; }
  int dim_of_grade(int g) const { return static_cast<int>(basis_of_grade(g).size()); }

  int cartan_index(int node0) const { return node0; }
  int pos_index(int root) const { return rank() + root; }
  int neg_index(int root) const { return rank() + rs_.num_positive() + root; }
  /// Basis index of the root vector for rs.roots[r] (positive or negative).
  int root_vector_index(int r) const {
    return r < rs_.num_positive() ? pos_index(r) : neg_index(r - rs_.num_positive());
  }
  /// Root index (into rs.roots) of a root-vector basis element, -1 for Cartan.
  int root_of(int i) const;

  /// [x_i, x_j] as integer combination of basis elements.
  const Terms& structure(int i, int j) const { return table_[i * dim() + j]; }

  /// Killing form on basis elements, trace(ad x_i ad x_j).
  std::int64_t killing_basis(int i, int j) const { return gram_[i * dim() + j]; }

  std::string basis_name(int i) const;

  /// Copy with one structure constant c_{ij}^k shifted by delta (only the
  /// (i, j) entry, so antisymmetry breaks as well). Negative controls only.
  GradedLieAlgebra with_perturbed_constant(int i, int j, int k, std::int64_t delta) const;

 private:
  friend GradedLieAlgebra build_algebra(const RootSystem& rs, int node);
  void compute_gram();

  RootSystem rs_;
  int node_ = 0;
  std::vector<Generator> basis_;
  std::vector<int> grade_;
  std::vector<std::vector<int>> by_grade_;
  std::vector<Terms> table_;
  std::vector<std::int64_t> gram_;
};

/// Throws NoOneGrading when rs has no |1|-grading at all, InvalidNode when
/// `node` (1-based) is not one of them.
GradedLieAlgebra build_algebra(const RootSystem& rs, int node);

/// Chevalley structure constant N_{a,b} for root indices a, b (0 when a+b is
/// not a root). Signs follow the extraspecial-pair convention over the root order.
class ChevalleyConstants {
 public:
  explicit ChevalleyConstants(const RootSystem& rs);
  std::int64_t operator()(int a, int b) const { return table_[a * size_ + b]; }

 private:
  int size_;
  std::vector<std::int64_t> table_;
};

LieVec basis_vector(int i);

LieVec bracket(const GradedLieAlgebra& alg, const LieVec& a, const LieVec& b);
Rational killing(const GradedLieAlgebra& alg, const LieVec& a, const LieVec& b);
/// trace(ad a o ad b) evaluated by applying both adjoint maps to every basis
/// vector. Independent of the cached Gram matrix.
Rational killing_trace(const GradedLieAlgebra& alg, const LieVec& a, const LieVec& b);

/// Grade of a nonzero homogeneous vector, nullopt when mixed or zero.
std::optional<int> pure_grade(const GradedLieAlgebra& alg, const LieVec& v);

/// Cartan element E with [E, x] = grade(x) x.
LieVec grading_element(const GradedLieAlgebra& alg);
/// Span of [g_0, g_0].
Subspace semisimple_part(const GradedLieAlgebra& alg);
/// Span of the grade-0 basis.
Subspace degree_zero(const GradedLieAlgebra& alg);

/// Default basis X_gamma of g_{-1}: the grade -1 root vectors in basis order.
std::vector<LieVec> default_g_minus_basis(const GradedLieAlgebra& alg);
/// Z_i in g_1 with killing(Z_i, X_j) = delta_ij. Throws SingularPairing.
std::vector<LieVec> dual_basis_g1(const GradedLieAlgebra& alg, const std::vector<LieVec>& basis_x);

struct SimpleIdeal {
  /// Dynkin nodes (1-based) of the component.
  std::vector<int> nodes;
  Subspace space;
};

/// Simple ideals of g_0^ss, one per connected component of the Dynkin
/// diagram with the crossed node removed.
std::vector<SimpleIdeal> simple_ideals(const GradedLieAlgebra& alg);

/// [A, v] for A of pure grade 0. Throws GradeError otherwise.
LieVec act_bullet(const GradedLieAlgebra& alg, const LieVec& a, const LieVec& v);

/// Smallest g_0-invariant subspace containing v.
Subspace g0_orbit_span(const GradedLieAlgebra& alg, const LieVec& v);

/// Number of basis triples violating Jacobi. With `samples` = 0 every
/// triple is checked, otherwise `samples` pseudo-random triples from `seed`.
std::size_t jacobi_violations(const GradedLieAlgebra& alg, std::size_t samples = 0,
                              std::uint64_t seed = 1);

/// Number of basis pairs with [x_i, x_j] != -[x_j, x_i].
std::size_t antisymmetry_violations(const GradedLieAlgebra& alg);

/// Number of basis pairs whose bracket leaves g_{i+j} (g_k = 0 for |k| > 1).
std::size_t grading_violations(const GradedLieAlgebra& alg);

/// Number of basis triples with killing([x,y],z) != killing(x,[y,z]); all
/// triples when `samples` = 0.
std::size_t killing_invariance_violations(const GradedLieAlgebra& alg, std::size_t samples,
                                          std::uint64_t seed = 1);

/// Rank of the Killing pairing matrix between g_1 and g_{-1}.
int g1_pairing_rank(const GradedLieAlgebra& alg);

}  // namespace ahs

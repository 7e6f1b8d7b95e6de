#pragma once

#include "ahs/holonomy.hpp"
#include "ahs/jet.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace ahs {

/// Value bundle of a germ: g_-1 (tangent), g_0 (endomorphisms) or g_1
/// (cotangent, identified with g_-1* through the Killing form).
enum class Fiber { Tangent, Endomorphism, Cotangent };

int fiber_grade(Fiber f);
const char* to_string(Fiber f);

struct JetPoly {
  Fiber fiber = Fiber::Tangent;
  LieJet jet;
};

/// Germ with `slots` extra g_-1 arguments (cotangent factors). Components are
/// indexed by the slot arguments with slot 1 most significant.
struct TensorField {
  Fiber fiber = Fiber::Tangent;
  int slots = 0;
  int n = 0;
  std::vector<LieJet> components;

  int order() const;
  const LieJet& at(const std::vector<int>& args) const;
};

/// Constant values of a TensorField at o, same indexing.
struct ValueTensor {
  Fiber fiber = Fiber::Tangent;
  int slots = 0;
  int n = 0;
  std::vector<LieVec> values;

  const LieVec& at(const std::vector<int>& args) const;
  friend bool operator==(const ValueTensor&, const ValueTensor&) = default;
};

std::size_t flat_index(const std::vector<int>& args, int n);
std::vector<int> unflatten(std::size_t index, int slots, int n);

/// Exponential coordinates x^a on g_-1 around o; the flat connection is
/// coordinate differentiation and its Rho tensor vanishes.
class ModelChart {
 public:
  ModelChart(const GradedLieAlgebra& alg, int order);

  const GradedLieAlgebra& algebra() const { return frame_.algebra(); }
  const Frame& frame() const { return frame_; }
  int n() const { return frame_.n(); }
  int order() const { return order_; }

  JetPoly constant(Fiber fiber, const LieVec& v) const;
  /// The coordinate field d/dx^a, i.e. the constant X_a.
  JetPoly coordinate_field(int a) const;
  /// x^a as a scalar germ.
  ScalarJet coordinate(int a) const;
  /// Components xi^a of a tangent germ: killing(Z_a, xi).
  std::vector<ScalarJet> components(const JetPoly& tangent) const;

 private:
  Frame frame_;
  int order_;
};

JetPoly flat_nabla(const JetPoly& s, int i);
/// sum_a xi^a d_a s
JetPoly flat_nabla_along(const ModelChart& chart, const JetPoly& s, const JetPoly& xi);
/// Coordinate Lie bracket of vector fields.
JetPoly lie_bracket(const ModelChart& chart, const JetPoly& xi, const JetPoly& eta);

/// g_0-valued connection form A(xi) = [Upsilon, xi]. Throws FiberMismatch.
JetPoly connection_form(const ModelChart& chart, const JetPoly& upsilon, const JetPoly& xi);

/// Modified connection nabla_xi s + [[Upsilon, xi], s]. Throws FiberMismatch.
JetPoly hat_nabla(const ModelChart& chart, const JetPoly& upsilon, const JetPoly& s,
                  const JetPoly& xi);

/// Rho tensor of the modified connection, one slot:
/// P^(X_a) = P(X_a) + d_a Upsilon + 1/2 [Upsilon, [X_a, Upsilon]].
TensorField hat_rho(const ModelChart& chart, const JetPoly& upsilon,
                    const TensorField* base = nullptr);

/// nabla^_xi nabla^_eta zeta - nabla^_eta nabla^_xi zeta - nabla^_[xi,eta] zeta.
JetPoly hat_curvature_direct(const ModelChart& chart, const JetPoly& upsilon, const JetPoly& xi,
                             const JetPoly& eta, const JetPoly& zeta);

/// g_0-valued curvature R^(a, b) = d_a A_b - d_b A_a + [A_a, A_b].
TensorField curvature_form(const ModelChart& chart, const JetPoly& upsilon);
/// (dP)(a, b) = [P(X_a), X_b] - [P(X_b), X_a] on a one-slot g_1 field.
TensorField rho_curvature(const ModelChart& chart, const TensorField& rho);

/// Argument tuples visited by an identity check: every tuple when there are
/// at most `budget` of them (or budget is 0), otherwise `budget` tuples drawn
/// uniformly with mt19937_64(seed), in draw order.
struct TupleSample {
  std::size_t budget = 0;
  std::uint64_t seed = 1;
};

std::vector<std::vector<int>> sample_tuples(int n, int slots, const TupleSample& sample);

struct CurvatureMismatch {
  int a, b, c;
  std::string monomial;
  LieVec direct, identity;
};

struct CurvatureDiff {
  bool pass = true;
  int compared_order = 0;
  std::size_t coefficients_compared = 0;
  std::size_t tuples_checked = 0, tuples_total = 0;
  std::vector<CurvatureMismatch> mismatches;
};

/// Compares hat_curvature_direct(X_a, X_b) X_c with [dP^(X_a, X_b), X_c]
/// for the sampled coordinate triples, coefficient by coefficient up to the
/// common order. Needs order >= 3.
CurvatureDiff check_curvature_identity(const ModelChart& chart, const JetPoly& upsilon,
                                       const TupleSample& sample = {});

/// nabla^ T with the new derivative slot first:
/// (nabla^T)(c, s..) = d_c T(s..) + [A_c, T(s..)] - sum_slot T(.., [A_c, X_s], ..).
TensorField covariant_derivative(const ModelChart& chart, const JetPoly& upsilon,
                                 const TensorField& t);
/// The part of covariant_derivative with first argument c.
TensorField covariant_derivative_slice(const ModelChart& chart, const JetPoly& upsilon,
                                       const TensorField& t, int c);

/// (nabla^)^k T at o; T is truncated to order k first. Throws OrderExhausted.
ValueTensor iterated_hat_nabla_at_o(const ModelChart& chart, const JetPoly& upsilon,
                                    const TensorField& t, int k);

/// d_{c1} .. d_{cm} Upsilon at o as an m-slot tensor.
ValueTensor flat_derivatives_at_o(const JetPoly& field, int m);

/// (id (x) d) on the last slot: V(.., a) -> [V(.., a), X_b] - [V(.., b), X_a].
ValueTensor apply_del_last(const ModelChart& chart, const ValueTensor& v);

bool symmetric_in_first(const ValueTensor& v, int m);

/// Deterministic random g_1-valued polynomial with degrees in
/// [min_deg, max_deg]. Monomials run in graded-lexicographic order and for
/// each the g_1 basis in basis order; one 64-bit draw r of mt19937_64(seed)
/// per pair gives coefficient 0 when r is even, else ((r >> 1) % 7) - 3.
JetPoly random_upsilon(const ModelChart& chart, std::uint64_t seed, int min_deg, int max_deg);

/// Upsilon whose 5-jet at o is the degree-5 witness tensor:
/// general: (1/120) sum_{i,j} x_i^3 x_j^2 Z_i;
/// exact: d of (1/720) sum_{i<j} x_i^4 x_j^2.
JetPoly theorem_upsilon(const ModelChart& chart, bool exact_weyl);

/// Components of (nabla^)^m T for m <= k, evaluated on demand and memoised
/// by argument tuple (c_m, .., c_1, slots of T). Level m is kept to order
/// k - m, enough for values at o of level k. Thread safe.
class CovariantDerivativeCache {
 public:
  CovariantDerivativeCache(const ModelChart& chart, const JetPoly& upsilon, const TensorField& base,
                           int k);
  /// References stay valid for the lifetime of the cache.
  const LieJet& get(const std::vector<int>& args);
  LieVec at_o(const std::vector<int>& args) { return get(args).at_origin(); }

 private:
  const ModelChart& chart_;
  int k_, n_;
  TensorField base_;
  std::vector<LieJet> a_;
  // gamma_[c][s][b]: component b of [A_c, X_s]
  std::vector<std::vector<std::vector<ScalarJet>>> gamma_;
  std::map<std::vector<int>, LieJet> memo_;
  std::mutex mutex_;
};

/// d_{args} field at o for one argument tuple.
LieVec flat_derivative_at_o(const JetPoly& field, const std::vector<int>& args);

struct RhoJetCheck {
  int k = 0;
  bool lower_jet_vanishes = false;  ///< j^{k-1} P^(o) = 0
  bool matches_flat = false;        ///< nabla^^k P^(o) = nabla^{k+1} Upsilon(o)
  bool symmetric = false;           ///< symmetric in the first k+1 slots
  std::size_t tuples_checked = 0, tuples_total = 0;
  bool pass = false;
};

/// Runs the three checks on random_upsilon(seed, k + 1, min(k + 2, order));
/// the last two on the sampled (k+1)-tuples.
RhoJetCheck rho_jet_check(const ModelChart& chart, std::uint64_t seed, int k,
                          const TupleSample& sample = {});

struct TupleCheck {
  bool pass = true;
  std::size_t tuples_checked = 0, tuples_total = 0;
};

/// nabla^^k R^(o) == (id (x) d)(nabla^^k P^(o)) on the sampled (k+2)-tuples.
TupleCheck curvature_derivative_check(const ModelChart& chart, const JetPoly& upsilon, int k,
                                      const TupleSample& sample = {});

struct JetSpanReport {
  Certificate cert;
  int algebraic_dim = 0;
  bool agree = false;
  bool pass = false;
};

/// Spans the values of nabla^^4 R^(o) for theorem_upsilon and compares the
/// dimension with theorem_certify.
JetSpanReport holonomy_span_jets(const GradedLieAlgebra& alg, bool exact_weyl, int order = 8,
                                 const SpanOptions& options = {});

}  // namespace ahs

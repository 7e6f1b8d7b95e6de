#pragma once

#include "ahs/echelon.hpp"
#include "ahs/graded_lie.hpp"
#include "ahs/multitensor.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ahs {

/// Dual bases X_a of g_{-1} and Z_a of g_1 (killing(Z_a, X_b) = delta_ab),
/// the grading element, and the two certification targets.
class Frame {
 public:
  explicit Frame(const GradedLieAlgebra& alg);

  const GradedLieAlgebra& algebra() const { return *alg_; }
  int n() const { return static_cast<int>(x_.size()); }
  const LieVec& x(int a) const { return x_[a]; }
  const LieVec& z(int a) const { return z_[a]; }
  const LieVec& grading_element() const { return e_; }
  const Subspace& g0() const { return g0_; }
  const Subspace& g0ss() const { return g0ss_; }

  /// Coordinates of X in g_{-1}: killing(Z_a, X).
  std::vector<Rational> coords_minus(const LieVec& x) const;

 private:
  const GradedLieAlgebra* alg_;
  std::vector<LieVec> x_, z_;
  LieVec e_;
  Subspace g0_, g0ss_;
};

/// Linear map P: g_{-1} -> g_1 stored as matrix(a, b) = killing(P(X_a), X_b),
/// i.e. P(X_a) = sum_b matrix(a, b) Z_b.
struct RhoCandidate {
  RationalMatrix matrix;
  bool symmetric = false;

  static RhoCandidate zero(int n);
  static RhoCandidate from_matrix(RationalMatrix m);
  /// Z_i Z_j in S^2 g_1 as X -> (Z_i B(Z_j, X) + Z_j B(Z_i, X)) / 2.
  static RhoCandidate symmetric_product(int n, int i, int j);
  /// Z_i (x) Z_j as X -> Z_i B(Z_j, X).
  static RhoCandidate tensor_product(int n, int i, int j);
};

LieVec apply(const Frame& frame, const RhoCandidate& p, const LieVec& x);

/// dP(X, Y) = [P(X), Y] - [P(Y), X]. Throws GradeError unless X, Y lie in g_{-1}.
LieVec del_op(const Frame& frame, const RhoCandidate& p, const LieVec& x, const LieVec& y);

struct Certificate {
  std::string name;
  std::string target_name;
  int target_dim = 0;
  int achieved_dim = 0;
  /// Descriptor of each generator that raised the dimension, in order.
  std::vector<std::string> witnesses;
  std::size_t generators_consumed = 0;
  /// Every generated value lay in the target.
  bool contained = true;
  bool pass = false;
  double seconds = 0;
};

/// A batch of generators evaluated together (one Rho candidate, all pairs).
struct GeneratorBlock {
  std::vector<LieVec> values;
  std::vector<std::string> descriptors;
};

struct SpanOptions {
  int parallel = 1;
  bool early_exit = true;
  /// Called after every merged block with (generators consumed, current dim).
  std::function<void(std::size_t, int)> progress;
};

/// Feeds blocks 0..count-1 into a SpanTracker over g until its dimension
/// reaches target_dim (when early_exit is set). With parallel > 1 blocks are
/// evaluated in rounds of `parallel` and merged in block order, so the result
/// only depends on the options.
Certificate span_certify(const std::string& name, const std::string& target_name, int target_dim,
                         int ambient, std::size_t block_count,
                         const std::function<GeneratorBlock(std::size_t)>& block,
                         const std::function<bool(const LieVec&)>& in_target,
                         const SpanOptions& options);

Certificate lemma1_certify(const Frame& frame, bool symmetric, const SpanOptions& options = {});

struct CenterWitness {
  Rational pairing;       ///< killing(P(X), Y)
  Rational value;         ///< killing(dP(X, Y), E)
  bool independent = false;
  bool p_of_y_zero = false;
  bool pass = false;
};

/// X = X_1, Y = X_2, P = Z_2 (x) Z_1 (so P(X) = Z_2, P(Y) = 0). Needs n > 1.
CenterWitness lemma1_center_witness(const Frame& frame);
/// killing(dP(X_1, X_2), E) for a caller-supplied candidate.
Rational center_value(const Frame& frame, const RhoCandidate& p);

struct IdealWitness {
  std::vector<int> ideal_nodes;
  int alpha_node = 0;
  int beta_node = 0;
  std::string alpha_plus_beta;
  Rational coeff_e_beta;  ///< component on the root vector of beta
  Rational coeff_f_beta;  ///< component on the root vector of -beta
  Rational killing_with_e;
  LieVec value;
  bool pass = false;
};

/// P = Z_alpha^2 + Z_{alpha+beta}^2 with beta the smallest simple root of the
/// ideal adjacent to the crossed node. Throws NoAdjacentRoot.
IdealWitness lemma1_ideal_witness(const Frame& frame, const SimpleIdeal& ideal);

/// sum_{i<j} x_i^4 x_j^2 in S^6 V*.
SymTensor lemma2_symmetric_element(int n);
/// sum_{i,j} x_i^3 x_j^2 (x) x_i in S^5 V* (x) V* (i = j included).
MixedTensor lemma2_mixed_element(int n);

struct PreimageCheck {
  std::string description;
  bool pass = false;
};

struct Lemma2Report {
  Certificate cert;
  bool dense = false;
  std::vector<PreimageCheck> checks;
  bool pass = false;
};

/// Rank of W -> contract(T, W) on S^4, streamed through a SpanTracker, or by
/// dense elimination when n <= 8.
Lemma2Report lemma2_certify(int n, bool symmetric);
/// Exact rank of the full matrix of W -> contract(T, W). No early exit.
int lemma2_dense_rank(int n, bool symmetric);

/// Rho candidate P_W = contract(T, W) read as a map g_{-1} -> g_1.
RhoCandidate theorem_candidate(const SymTensor& t, const MixedTensor& mixed, bool exact_weyl,
                               const SymTensor& w);

Certificate theorem_certify(const Frame& frame, bool exact_weyl, const SpanOptions& options = {});

}  // namespace ahs

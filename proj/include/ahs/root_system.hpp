#pragma once

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ahs {

/// Dynkin types. Only A-E7 carry |1|-gradings; E8, F4 and G2 are buildable so
/// that their lack of a |1|-grading can be checked.
enum class Series { A, B, C, D, E6, E7, E8, F4, G2 };

struct SeriesLabel {
  Series series;
  int rank;
};

std::string to_string(Series s);
std::string to_string(const SeriesLabel& label);
Series parse_series(const std::string& name);

/// Smallest rank accepted for a series (Bourbaki diagrams stay well defined
/// down to these ranks). Fixed-rank series return their rank.
int min_rank(Series s);
bool has_fixed_rank(Series s);

/// Throws InvalidRank when the rank is outside the series bounds.
void validate(const SeriesLabel& label);

/// Root in the simple-root basis.
struct Root {
  Eigen::VectorXi coords;
  bool is_positive = true;

  int height() const { return coords.sum(); }
};

struct RootSystem {
  SeriesLabel label;
  /// Kac convention: cartan(i, j) = alpha_j(h_i) = 2 (a_i, a_j) / (a_i, a_i).
  Eigen::MatrixXi cartan;
  /// Symmetric invariant form on simple roots, short roots of length^2 2.
  Eigen::MatrixXi form;
  /// Positive roots (height, then descending lexicographic coordinates), then
  /// their negatives in the same order. The first `rank` entries are the
  /// simple roots in node order.
  std::vector<Root> roots;

  int rank() const { return static_cast<int>(cartan.rows()); }
  int num_positive() const { return static_cast<int>(roots.size()) / 2; }
  /// Index of the root with these coordinates, if any.
  std::optional<int> find(const Eigen::VectorXi& coords) const;
  /// Index of -roots[i].
  int negative_of(int i) const;
  int highest_root() const;
  /// (x, y) for root-lattice vectors in simple-root coordinates.
  int inner(const Eigen::VectorXi& x, const Eigen::VectorXi& y) const;
  /// <v, alpha_i^vee>
  int coroot_pairing(const Eigen::VectorXi& v, int i) const;
  /// Dynkin adjacency of simple roots (0-based node indices).
  bool adjacent(int i, int j) const { return i != j && form(i, j) != 0; }

 private:
  friend RootSystem build_root_system(const SeriesLabel&);
  std::map<std::vector<int>, int> index_;
};

/// Full root set by closure of the simple roots under simple reflections.
RootSystem build_root_system(const SeriesLabel& label);

/// Coefficient of the crossed simple root (1-based node) in r.
int alpha_grade(const Root& r, int node);

/// Nodes (1-based) whose crossed grading is a |1|-grading, i.e. where the
/// highest root has coefficient 1.
std::vector<int> valid_one_gradings(const RootSystem& rs);

/// Classical root count per series, used as an external reference.
int classical_root_count(const SeriesLabel& label);

/// Catalog row of the classification of |1|-graded simple algebras.
struct GradingRow {
  std::string g;
  std::string g0;
  std::string g_minus;
  /// Table formula for dim g_{-1}.
  int table_dim_g_minus = 0;
  /// Whether (series, rank, node) falls inside the table's stated rank range.
  bool in_table_range = true;
};

/// Throws InvalidNode when node is not a |1|-grading node.
GradingRow grading_row(const SeriesLabel& label, int node);

}  // namespace ahs

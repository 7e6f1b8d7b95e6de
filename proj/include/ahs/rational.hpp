#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ahs {

/// Exact rational scalar. Expression templates are off so `auto` is safe.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;

inline std::string to_string(const Rational& q) { return q.str(); }

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Reduced row echelon form computed in place with exact pivoting on the
/// first nonzero entry. Returns the pivot columns.
template <class Scalar>
std::vector<Eigen::Index> row_reduce(DenseMatrix<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pick = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pick = r;
        break;
      }
    }
    if (pick < 0) continue;
    m.row(row).swap(m.row(pick));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar f = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Scalar>
Eigen::Index exact_rank(DenseMatrix<Scalar> m) {
  return static_cast<Eigen::Index>(row_reduce(m).size());
}

/// Inverse of a square matrix, or nullopt when singular.
template <class Scalar>
std::optional<DenseMatrix<Scalar>> exact_inverse(const DenseMatrix<Scalar>& a) {
  const Eigen::Index n = a.rows();
  DenseMatrix<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = DenseMatrix<Scalar>::Identity(n, n);
  const auto pivots = row_reduce(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots.back() >= n) return std::nullopt;
  return DenseMatrix<Scalar>(aug.rightCols(n));
}

/// Solves a x = b for square nonsingular a.
template <class Scalar>
std::optional<DenseVector<Scalar>> exact_solve(const DenseMatrix<Scalar>& a,
                                               const DenseVector<Scalar>& b) {
  auto inv = exact_inverse(a);
  if (!inv) return std::nullopt;
  return DenseVector<Scalar>(*inv * b);
}

}  // namespace ahs

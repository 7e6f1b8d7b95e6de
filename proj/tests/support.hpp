#pragma once

#include "ahs/graded_lie.hpp"
#include "ahs/holonomy.hpp"
#include "ahs/jet_weyl.hpp"

#include <random>
#include <vector>

namespace ahs::test {

inline GradedLieAlgebra make(Series s, int rank, int node) {
  return build_algebra(build_root_system({s, rank}), node);
}

struct Case {
  Series series;
  int rank;
  int node;
};

/// Every algebra with dim g <= 150 listed for the structure suite.
inline std::vector<Case> structure_cases() {
  std::vector<Case> out;
  for (int r = 2; r <= 5; ++r)
    for (int node = 1; node <= r; ++node) out.push_back({Series::A, r, node});
  for (int r = 2; r <= 4; ++r) out.push_back({Series::B, r, 1});
  for (int r = 3; r <= 4; ++r) out.push_back({Series::C, r, r});
  for (int r = 4; r <= 5; ++r) {
    out.push_back({Series::D, r, 1});
    out.push_back({Series::D, r, r});
  }
  out.push_back({Series::E6, 6, 1});
  return out;
}

inline Rational small_rational(std::mt19937_64& rng) {
  const auto num = static_cast<long>(rng() % 9) - 4;
  const auto den = static_cast<long>(rng() % 3) + 1;
  return Rational(num, den);
}

inline RationalMatrix random_matrix(int n, std::mt19937_64& rng, bool symmetric) {
  RationalMatrix m(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m(a, b) = small_rational(rng);
  if (symmetric) m = (m + RationalMatrix(m.transpose())) * Rational(1, 2);
  return m;
}

inline LieVec random_in_grade(const GradedLieAlgebra& alg, int grade, std::mt19937_64& rng) {
  LieVec v;
  for (int i : alg.basis_of_grade(grade)) v.add(i, small_rational(rng));
  return v;
}

}  // namespace ahs::test

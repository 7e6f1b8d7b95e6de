#include "support.hpp"

#include "ahs/error.hpp"

#include <catch_amalgamated.hpp>

using namespace ahs;
using ahs::test::make;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidConfig;
}

/// Largest k with b - k a in the root system, by direct search.
int string_length_below(const RootSystem& rs, int a, int b) {
  int k = 0;
  Eigen::VectorXi v = rs.roots[b].coords;
  while (rs.find(v - rs.roots[a].coords)) {
    v -= rs.roots[a].coords;
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("sl(3) with node 1", "[gradedlie]") {
  const auto alg = make(Series::A, 2, 1);
  CHECK(alg.dim() == 8);
  CHECK(alg.dim_of_grade(-1) == 2);
  CHECK(alg.dim_of_grade(0) == 4);
  CHECK(alg.dim_of_grade(1) == 2);
  // Killing form of sl(3) is 6 tr(xy); tr(E_12 E_21) = 1
  const int e1 = alg.pos_index(0), f1 = alg.neg_index(0);
  CHECK(alg.killing_basis(e1, f1) == 6);
  const LieVec e = grading_element(alg);
  CHECK(e == LieVec{{0, Rational(2, 3)}, {1, Rational(1, 3)}});
}

TEST_CASE("structure identities hold exactly on the suite algebras", "[gradedlie]") {
  for (const auto& c : test::structure_cases()) {
    const auto alg = make(c.series, c.rank, c.node);
    INFO(to_string(SeriesLabel{c.series, c.rank}) << " node " << c.node);
    CHECK(antisymmetry_violations(alg) == 0);
    CHECK(grading_violations(alg) == 0);
    CHECK(jacobi_violations(alg) == 0);
    CHECK(g1_pairing_rank(alg) == alg.dim_of_grade(1));
  }
}

TEST_CASE("cached Killing Gram matrix equals the trace oracle", "[gradedlie]") {
  for (auto [s, r, node] : std::vector<std::tuple<Series, int, int>>{
           {Series::A, 2, 1}, {Series::B, 3, 1}, {Series::C, 3, 3}, {Series::D, 4, 4}}) {
    const auto alg = make(s, r, node);
    for (int i = 0; i < alg.dim(); ++i)
      for (int j = i; j < alg.dim(); ++j)
        REQUIRE(Rational(alg.killing_basis(i, j)) ==
                killing_trace(alg, basis_vector(i), basis_vector(j)));
  }
}

TEST_CASE("Killing invariance over all basis triples", "[gradedlie]") {
  CHECK(killing_invariance_violations(make(Series::B, 2, 1), 0) == 0);
  CHECK(killing_invariance_violations(make(Series::A, 3, 2), 0) == 0);
}

TEST_CASE("Chevalley constants are +-(p+1)", "[gradedlie]") {
  for (auto [s, r, node] : std::vector<std::tuple<Series, int, int>>{
           {Series::B, 3, 1}, {Series::C, 3, 3}, {Series::E6, 6, 1}}) {
    const auto alg = make(s, r, node);
    const auto& rs = alg.roots();
    for (int a = 0; a < static_cast<int>(rs.roots.size()); ++a)
      for (int b = 0; b < static_cast<int>(rs.roots.size()); ++b) {
        const auto sum = rs.find(rs.roots[a].coords + rs.roots[b].coords);
        const auto& t = alg.structure(alg.root_vector_index(a), alg.root_vector_index(b));
        if (!sum) {
          if (a != rs.negative_of(b)) CHECK(t.empty());
          continue;
        }
        REQUIRE(t.size() == 1);
        CHECK(t[0].first == alg.root_vector_index(*sum));
        CHECK(std::abs(t[0].second) == string_length_below(rs, a, b) + 1);
      }
  }
}

TEST_CASE("grading element acts by the grade", "[gradedlie]") {
  for (const auto& c : test::structure_cases()) {
    const auto alg = make(c.series, c.rank, c.node);
    const LieVec e = grading_element(alg);
    for (int i = 0; i < alg.dim(); ++i)
      REQUIRE(bracket(alg, e, basis_vector(i)) == Rational(alg.grade(i)) * basis_vector(i));
  }
}

TEST_CASE("g0 dimensions for type A", "[gradedlie]") {
  for (int n = 2; n <= 5; ++n)
    for (int p = 1; p <= n; ++p) {
      const int q = n + 1 - p;
      const auto alg = make(Series::A, n, p);
      CHECK(alg.dim_of_grade(-1) == p * q);
      CHECK(degree_zero(alg).dim() == p * p + q * q - 1);
      CHECK(semisimple_part(alg).dim() == p * p + q * q - 2);
    }
}

TEST_CASE("simple ideals follow the Dynkin components", "[gradedlie]") {
  const auto a3 = make(Series::A, 3, 2);
  const auto ideals = simple_ideals(a3);
  REQUIRE(ideals.size() == 2);
  CHECK(ideals[0].nodes == std::vector<int>{1});
  CHECK(ideals[1].nodes == std::vector<int>{3});
  CHECK(ideals[0].space.dim() == 3);
  const auto d4 = make(Series::D, 4, 1);
  const auto d4i = simple_ideals(d4);
  REQUIRE(d4i.size() == 1);
  CHECK(d4i[0].space.dim() == 15);  // so(6)
  const auto e6 = make(Series::E6, 6, 1);
  REQUIRE(simple_ideals(e6).size() == 1);
  CHECK(simple_ideals(e6)[0].space.dim() == 45);  // so(10)
}

TEST_CASE("dual basis of g1", "[gradedlie]") {
  const auto alg = make(Series::C, 3, 3);
  const auto x = default_g_minus_basis(alg);
  const auto z = dual_basis_g1(alg, x);
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      CHECK(killing(alg, z[i], x[j]) == (i == j ? 1 : 0));
  std::vector<LieVec> degenerate = x;
  degenerate[1] = degenerate[0];
  CHECK(kind_of([&] { dual_basis_g1(alg, degenerate); }) == ErrorKind::SingularPairing);
}

TEST_CASE("g0 action and orbits", "[gradedlie]") {
  const auto alg = make(Series::A, 3, 2);
  const LieVec x = basis_vector(alg.basis_of_grade(-1)[0]);
  CHECK(kind_of([&] { act_bullet(alg, x, x); }) == ErrorKind::GradeError);
  const auto ideals = simple_ideals(alg);
  const LieVec e1 = basis_vector(alg.pos_index(0));
  CHECK(g0_orbit_span(alg, e1) == ideals[0].space);
  CHECK(g0_orbit_span(alg, x).dim() == alg.dim_of_grade(-1));
}

TEST_CASE("construction errors", "[gradedlie]") {
  CHECK(kind_of([] { make(Series::E8, 8, 1); }) == ErrorKind::NoOneGrading);
  CHECK(kind_of([] { make(Series::G2, 2, 1); }) == ErrorKind::NoOneGrading);
  CHECK(kind_of([] { make(Series::B, 3, 3); }) == ErrorKind::InvalidNode);
}

TEST_CASE("a perturbed constant is detected", "[gradedlie]") {
  const auto alg = make(Series::A, 2, 1);
  const auto bad = alg.with_perturbed_constant(alg.pos_index(0), alg.neg_index(1), alg.pos_index(0), 1);
  CHECK(antisymmetry_violations(bad) > 0);
  CHECK(jacobi_violations(bad) > 0);
}

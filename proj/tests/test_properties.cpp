#include "properties.hpp"

#include <catch_amalgamated.hpp>

using namespace ahs;
using ahs::test::make;

TEST_CASE("modified connection is torsion free", "[properties]") {
  CHECK(test::torsion_free(make(Series::A, 2, 1), {1, 2, 3}));
  CHECK(test::torsion_free(make(Series::C, 3, 3), {7}, 4));
}

TEST_CASE("del_op is antisymmetric and lands in g0", "[properties]") {
  CHECK(test::del_op_antisymmetric(make(Series::A, 2, 1), 20, 1));
  CHECK(test::del_op_antisymmetric(make(Series::D, 4, 4), 10, 2));
  CHECK(test::del_op_antisymmetric(make(Series::E6, 6, 1), 3, 3));
}

TEST_CASE("symmetric candidates are orthogonal to E", "[properties]") {
  CHECK(test::symmetric_image_orthogonal(make(Series::A, 2, 1), 20, 4));
  CHECK(test::symmetric_image_orthogonal(make(Series::B, 3, 1), 10, 5));
  CHECK(test::symmetric_image_orthogonal(make(Series::A, 4, 2), 10, 6));
}

TEST_CASE("spans do not depend on generator order", "[properties]") {
  CHECK(test::span_order_independent(make(Series::A, 2, 1), 5, 9));
  CHECK(test::span_order_independent(make(Series::A, 3, 2), 2, 10));
}

TEST_CASE("early exit agrees with brute force", "[properties]") {
  CHECK(test::brute_force_matches(make(Series::A, 2, 1)));
  CHECK(test::brute_force_matches(make(Series::A, 3, 1)));
}

#include "ahs/error.hpp"
#include "ahs/rational.hpp"
#include "ahs/root_system.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace ahs;

namespace {

// Root counts and Cartan determinants from the classification tables.
int expected_roots(Series s, int n) {
  switch (s) {
    case Series::A: return n * (n + 1);
    case Series::B:
    case Series::C: return 2 * n * n;
    case Series::D: return 2 * n * (n - 1);
    case Series::E6: return 72;
    case Series::E7: return 126;
    case Series::E8: return 240;
    case Series::F4: return 48;
    case Series::G2: return 12;
  }
  return -1;
}

int expected_det(Series s, int n) {
  switch (s) {
    case Series::A: return n + 1;
    case Series::B:
    case Series::C: return 2;
    case Series::D: return 4;
    case Series::E6: return 3;
    case Series::E7: return 2;
    default: return 1;
  }
}

std::vector<SeriesLabel> labels() {
  std::vector<SeriesLabel> out;
  for (int n = 2; n <= 7; ++n) out.push_back({Series::A, n});
  for (int n = 2; n <= 6; ++n) out.push_back({Series::B, n});
  for (int n = 2; n <= 6; ++n) out.push_back({Series::C, n});
  for (int n = 3; n <= 7; ++n) out.push_back({Series::D, n});
  for (auto s : {Series::E6, Series::E7, Series::E8, Series::F4, Series::G2})
    out.push_back({s, min_rank(s)});
  return out;
}

}  // namespace

TEST_CASE("root counts match the classification", "[rootsystem]") {
  for (const auto& label : labels()) {
    const RootSystem rs = build_root_system(label);
    INFO(to_string(label));
    CHECK(static_cast<int>(rs.roots.size()) == expected_roots(label.series, label.rank));
  }
}

TEST_CASE("Cartan determinants", "[rootsystem]") {
  for (const auto& label : labels()) {
    const RootSystem rs = build_root_system(label);
    RationalMatrix m(rs.rank(), rs.rank());
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) m(i, j) = rs.cartan(i, j);
    // determinant as product of pivots of an exact elimination
    Rational det = 1;
    RationalMatrix a = m;
    for (int c = 0; c < a.rows(); ++c) {
      int p = c;
      while (a(p, c) == 0) ++p;
      if (p != c) {
        a.row(p).swap(a.row(c));
        det = -det;
      }
      det *= a(c, c);
      for (int r = c + 1; r < a.rows(); ++r) {
        const Rational f = a(r, c) / a(c, c);
        for (int k = c; k < a.cols(); ++k) a(r, k) -= f * a(c, k);
      }
    }
    INFO(to_string(label));
    CHECK(det == expected_det(label.series, label.rank));
  }
}

TEST_CASE("Cartan convention: entry (i,j) is alpha_j(h_i)", "[rootsystem]") {
  const RootSystem b2 = build_root_system({Series::B, 2});
  CHECK(b2.cartan(0, 1) == -1);
  CHECK(b2.cartan(1, 0) == -2);
  const RootSystem c2 = build_root_system({Series::C, 2});
  CHECK(c2.cartan(0, 1) == -2);
  CHECK(c2.cartan(1, 0) == -1);
}

TEST_CASE("root order: simple roots first, heights non-decreasing", "[rootsystem]") {
  for (const auto& label : labels()) {
    const RootSystem rs = build_root_system(label);
    for (int i = 0; i < rs.rank(); ++i) {
      CHECK(rs.roots[i].height() == 1);
      CHECK(rs.roots[i].coords(i) == 1);
    }
    for (int i = 1; i < rs.num_positive(); ++i)
      CHECK(rs.roots[i - 1].height() <= rs.roots[i].height());
    for (int i = 0; i < rs.num_positive(); ++i) {
      CHECK(rs.roots[i].is_positive);
      CHECK(rs.roots[rs.negative_of(i)].coords == -rs.roots[i].coords);
    }
  }
}

TEST_CASE("simple reflections permute the roots", "[rootsystem]") {
  for (const auto& label : labels()) {
    const RootSystem rs = build_root_system(label);
    for (int i = 0; i < rs.rank(); ++i) {
      std::set<int> image;
      for (const auto& r : rs.roots) {
        const Eigen::VectorXi s = r.coords - rs.coroot_pairing(r.coords, i) * rs.roots[i].coords;
        const auto idx = rs.find(s);
        REQUIRE(idx.has_value());
        image.insert(*idx);
      }
      CHECK(image.size() == rs.roots.size());
    }
  }
}

TEST_CASE("highest roots of the exceptional types", "[rootsystem]") {
  auto highest = [](Series s) {
    const RootSystem rs = build_root_system({s, min_rank(s)});
    const auto& c = rs.roots[rs.highest_root()].coords;
    return std::vector<int>(c.data(), c.data() + c.size());
  };
  CHECK(highest(Series::E6) == std::vector<int>{1, 2, 2, 3, 2, 1});
  CHECK(highest(Series::E7) == std::vector<int>{2, 2, 3, 4, 3, 2, 1});
  CHECK(highest(Series::E8) == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(highest(Series::F4) == std::vector<int>{2, 3, 4, 2});
  CHECK(highest(Series::G2) == std::vector<int>{3, 2});
}

TEST_CASE("|1|-grading nodes", "[rootsystem]") {
  auto nodes = [](Series s, int r) { return valid_one_gradings(build_root_system({s, r})); };
  CHECK(nodes(Series::A, 3) == std::vector<int>{1, 2, 3});
  CHECK(nodes(Series::B, 4) == std::vector<int>{1});
  CHECK(nodes(Series::C, 4) == std::vector<int>{4});
  CHECK(nodes(Series::D, 5) == std::vector<int>{1, 4, 5});
  CHECK(nodes(Series::E6, 6) == std::vector<int>{1, 6});
  CHECK(nodes(Series::E7, 7) == std::vector<int>{7});
  CHECK(nodes(Series::E8, 8).empty());
  CHECK(nodes(Series::F4, 4).empty());
  CHECK(nodes(Series::G2, 2).empty());
}

TEST_CASE("alpha_grade reads the crossed coefficient", "[rootsystem]") {
  const RootSystem rs = build_root_system({Series::A, 2});
  const auto& top = rs.roots[rs.highest_root()];
  CHECK(alpha_grade(top, 1) == 1);
  CHECK(alpha_grade(rs.roots[rs.negative_of(rs.highest_root())], 2) == -1);
}

TEST_CASE("catalog rows", "[rootsystem]") {
  CHECK(grading_row({Series::C, 3}, 3).g_minus == "S^2 K^3");
  CHECK(grading_row({Series::C, 3}, 3).table_dim_g_minus == 6);
  CHECK(grading_row({Series::A, 3}, 2).g_minus == "K^2* (x) K^2");
  CHECK(grading_row({Series::D, 4}, 4).g_minus == "Lambda^2 K^4");
  CHECK(grading_row({Series::E7, 7}, 7).table_dim_g_minus == 27);
  CHECK_FALSE(grading_row({Series::C, 2}, 2).in_table_range);
  CHECK_THROWS_MATCHES(grading_row({Series::B, 3}, 2), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == ErrorKind::InvalidNode;
                       }));
}

TEST_CASE("rank validation and series parsing", "[rootsystem]") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidConfig;
  };
  CHECK(kind_of([] { validate({Series::A, 1}); }) == ErrorKind::InvalidRank);
  CHECK(kind_of([] { validate({Series::E6, 5}); }) == ErrorKind::InvalidRank);
  CHECK_NOTHROW(validate({Series::D, 4}));
  CHECK_THROWS_AS(parse_series("H4"), Error);
  CHECK(parse_series("E7") == Series::E7);
}

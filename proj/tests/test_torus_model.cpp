#include <complex>
#include <numeric>

#include <catch_amalgamated.hpp>

#include "eqt/torus_model.hpp"

using eqt::AnglePoint;
using eqt::GridPoint;
using eqt::Partition;

namespace {
constexpr double tol = 1e-12;
}

TEST_CASE("build_sn_action sizes and labels") {
  auto a14 = eqt::build_sn_action(1, 4);
  CHECK(a14.num_points() == 4);
  CHECK(a14.order() == 1);

  auto a23 = eqt::build_sn_action(2, 3);
  CHECK(a23.num_points() == 9);
  CHECK(a23.order() == 2);
  CHECK(a23.labels()[0] == Partition({1, 1}));
  CHECK(a23.labels()[1] == Partition({2}));

  auto a32 = eqt::build_sn_action(3, 2);
  CHECK(a32.num_points() == 8);
  CHECK(a32.order() == 6);

  CHECK_THROWS_AS(eqt::build_sn_action(0, 2), eqt::domain_error);
  CHECK_THROWS_AS(eqt::build_sn_action(30, 2), eqt::resource_error);
  CHECK_THROWS_AS(eqt::build_sn_action(3, 2, 7), eqt::resource_error);
}

TEST_CASE("verify_counts examples") {
  auto r32 = eqt::verify_counts(3, 2);
  CHECK(r32.ok);
  CHECK(r32.total == 10);
  REQUIRE(r32.classes.size() == 3);
  CHECK(r32.classes[0].partition == Partition({3}));
  CHECK(r32.classes[0].oracle == 2);
  CHECK(r32.classes[1].partition == Partition({2, 1}));
  CHECK(r32.classes[1].oracle == 4);
  CHECK(r32.classes[2].partition == Partition({1, 1, 1}));
  CHECK(r32.classes[2].oracle == 4);

  auto r23 = eqt::verify_counts(2, 3);
  CHECK(r23.ok);
  CHECK(r23.total == 9);
  CHECK(r23.classes[0].oracle == 3);
  CHECK(r23.classes[1].oracle == 6);

  for (int m = 1; m <= 4; ++m) {
    auto r = eqt::verify_counts(1, m);
    CHECK(r.ok);
    CHECK(r.total == static_cast<std::uint64_t>(m));
  }
}

TEST_CASE("verify_counts JSON schema") {
  auto j = eqt::to_json(eqt::verify_counts(3, 2));
  CHECK(j.dump() ==
        R"({"n":3,"m":2,"classes":[)"
        R"({"partition":[3],"oracle":2,"symbolic":2},)"
        R"({"partition":[2,1],"oracle":4,"symbolic":4},)"
        R"({"partition":[1,1,1],"oracle":4,"symbolic":4}],)"
        R"("total":10,"ok":true})");
}

TEST_CASE("diagonal_rotate examples") {
  GridPoint p{3, {0, 1, 2}};
  CHECK(eqt::diagonal_rotate(p, 1).coords == std::vector<int>{1, 2, 0});
  CHECK(eqt::diagonal_rotate(p, 0) == p);
  CHECK(eqt::diagonal_rotate(p, -1).coords == std::vector<int>{2, 0, 1});

  AnglePoint q{{0.25, 0.5}};
  auto r = eqt::diagonal_rotate(q, 0.75);
  CHECK(r.coords[0] == Catch::Approx(0.0).margin(tol));
  CHECK(r.coords[1] == Catch::Approx(0.25).margin(tol));
}

TEST_CASE("diagonal rotation commutes with coordinate permutations") {
  int n = 3, m = 4;
  auto a = eqt::build_sn_action(n, m);
  for (int g = 0; g < a.order(); ++g)
    for (int x = 0; x < a.num_points(); ++x)
      for (int t = 0; t < m; ++t) {
        GridPoint p = eqt::detail::grid_point(x, n, m);
        int rotated_then_moved =
            a.point_perm(g)[eqt::detail::grid_index(eqt::diagonal_rotate(p, t))];
        GridPoint moved = eqt::detail::grid_point(a.point_perm(g)[x], n, m);
        CHECK(rotated_then_moved ==
              eqt::detail::grid_index(eqt::diagonal_rotate(moved, t)));
      }
}

TEST_CASE("diagonal rotation preserves each fixed-point set") {
  int n = 3, m = 3;
  auto a = eqt::build_sn_action(n, m);
  for (int g = 0; g < a.order(); ++g) {
    auto fixed = eqt::fixed_points(g, a);
    for (int t = 0; t < m; ++t) {
      std::vector<int> image;
      for (int x : fixed)
        image.push_back(eqt::detail::grid_index(
            eqt::diagonal_rotate(eqt::detail::grid_point(x, n, m), t)));
      std::sort(image.begin(), image.end());
      CHECK(image == fixed);
    }
  }
}

TEST_CASE("retract examples") {
  auto p = eqt::retract({{2.0, 0.0}});
  CHECK(p.coords[0] == Catch::Approx(0.0).margin(tol));

  auto q = eqt::retract({{0.0, 3.0}});
  CHECK(q.coords[0] == Catch::Approx(0.25).margin(tol));

  auto r = eqt::retract({{-5.0, 0.0}, {1.0, 1.0}});
  CHECK(r.coords[0] == Catch::Approx(0.5).margin(tol));
  CHECK(r.coords[1] == Catch::Approx(0.125).margin(tol));

  CHECK_THROWS_AS(eqt::retract({{0.0, 0.0}}), eqt::domain_error);
}

TEST_CASE("retract is idempotent") {
  eqt::ComplexTorusPoint z{{3.0, -4.0}, {-1.0, 1.0}, {0.0, -2.5}};
  auto once = eqt::retract(z);
  eqt::ComplexTorusPoint unit;
  for (double a : once.coords) unit.push_back(std::polar(1.0, 2.0 * std::numbers::pi * a));
  auto twice = eqt::retract(unit);
  for (std::size_t i = 0; i < once.coords.size(); ++i)
    CHECK(twice.coords[i] == Catch::Approx(once.coords[i]).margin(tol));
}

#include <catch_amalgamated.hpp>

#include "eqt/bernstein.hpp"
#include "oracles.hpp"

using eqt::BernsteinShape;
using eqt::ShapeEntry;

TEST_CASE("make_shape validation and examples") {
  CHECK_THROWS_AS(eqt::make_shape({}), eqt::domain_error);
  CHECK_THROWS_AS(eqt::make_shape({{"a", 1, 1}, {"a", 1, 2}}),
                  eqt::domain_error);
  CHECK_THROWS_AS(eqt::make_shape({{"a", 0, 1}}), eqt::domain_error);
  CHECK_THROWS_AS(eqt::make_shape({{"a", 1, 0}}), eqt::domain_error);

  CHECK(eqt::make_shape({{"s", 2, 1}}).n() == 2);
  CHECK(eqt::make_shape({{"s", 1, 3}}).n() == 3);
  CHECK(eqt::make_shape({{"s1", 1, 2}, {"s2", 1, 1}}).n() == 3);
}

TEST_CASE("invariants examples") {
  auto i1 = eqt::invariants(eqt::make_shape({{"s", 2, 1}}));
  CHECK(i1.exponents == std::vector<int>{1});
  CHECK(i1.d == 1);
  CHECK(i1.weyl_factors == std::vector<int>{1});

  auto i2 = eqt::invariants(eqt::make_shape({{"s1", 1, 2}, {"s2", 1, 1}}));
  CHECK(i2.exponents == std::vector<int>{2, 1});
  CHECK(i2.d == 3);
  CHECK(i2.weyl_factors == std::vector<int>{2, 1});

  auto i3 = eqt::invariants(eqt::make_shape({{"s", 1, 5}}));
  CHECK(i3.exponents == std::vector<int>{5});
  CHECK(i3.d == 5);
}

TEST_CASE("morita_equivalent examples") {
  auto s1 = eqt::make_shape({{"s", 2, 2}, {"t", 1, 1}});  // n=5
  auto s2 = eqt::make_shape({{"s", 1, 2}, {"t", 3, 1}});  // n=5
  CHECK(eqt::morita_equivalent(s1, s2));

  auto s3 = eqt::make_shape({{"s", 1, 2}});
  auto s4 = eqt::make_shape({{"s1", 1, 1}, {"s2", 1, 1}});
  CHECK_FALSE(eqt::morita_equivalent(s3, s4));

  CHECK(eqt::morita_equivalent(s1, s1));
}

TEST_CASE("tempered_decomposition examples") {
  for (int n = 1; n <= 6; ++n)
    CHECK(eqt::tempered_decomposition(eqt::make_shape({{"s", 1, n}})) ==
          eqt::decomposition(n));

  auto flat = eqt::tempered_decomposition(
      eqt::make_shape({{"s1", 1, 1}, {"s2", 1, 1}}));
  REQUIRE(flat.components.size() == 1);
  CHECK(eqt::render_text(flat.components[0].descriptor) == "T x T");

  auto d = eqt::tempered_decomposition(
      eqt::make_shape({{"s1", 2, 2}, {"s2", 1, 1}}));
  REQUIRE(d.components.size() == 2);
  CHECK(eqt::render_text(d.components[0].descriptor) == "T x T");
  CHECK(eqt::render_text(d.components[1].descriptor) == "Sym^2(T) x T");
  CHECK(d.torus_dimension == 3);
}

TEST_CASE("component count is the product of partition counts") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& s : eqt::enumerate_shapes(n)) {
      std::uint64_t expected = 1;
      for (int e : eqt::invariants(s).exponents)
        expected *= oracles::partition_count(e);
      CHECK(eqt::tempered_decomposition(s).components.size() == expected);
    }
}

TEST_CASE("enumerate_shapes examples") {
  CHECK_THROWS_AS(eqt::enumerate_shapes(0), eqt::domain_error);
  CHECK(eqt::enumerate_shapes(1).size() == 1);
  CHECK(eqt::enumerate_shapes(2).size() == 3);
  CHECK(eqt::enumerate_shapes(3).size() == 5);
}

TEST_CASE("enumerate_shapes matches the pair-multiset oracle") {
  for (int n = 1; n <= 8; ++n) {
    auto shapes = eqt::enumerate_shapes(n);
    CHECK(shapes.size() == oracles::pair_multiset_count(n));
    for (const auto& s : shapes) {
      CHECK(s.n() == n);
      int total = 0;
      for (const auto& e : s.entries()) total += e.block_size * e.exponent;
      CHECK(total == n);
    }
  }
}

TEST_CASE("morita equivalence is an equivalence relation") {
  for (int n = 1; n <= 6; ++n) {
    auto shapes = eqt::enumerate_shapes(n);
    for (const auto& a : shapes) {
      CHECK(eqt::morita_equivalent(a, a));
      for (const auto& b : shapes) {
        CHECK(eqt::morita_equivalent(a, b) == eqt::morita_equivalent(b, a));
        if (!eqt::morita_equivalent(a, b)) continue;
        CHECK(eqt::tempered_decomposition(a) == eqt::tempered_decomposition(b));
        for (const auto& c : shapes)
          if (eqt::morita_equivalent(b, c))
            CHECK(eqt::morita_equivalent(a, c));
      }
    }
  }
}

TEST_CASE("parse_shape grammar") {
  auto s = eqt::parse_shape("2:2;1:1");
  CHECK(s.n() == 5);
  REQUIRE(s.entries().size() == 2);
  CHECK(s.entries()[0].block_size == 2);
  CHECK(s.entries()[0].exponent == 2);
  CHECK(s.entries()[1].block_size == 1);
  CHECK(s.entries()[1].exponent == 1);

  // canonical order sorts by (m desc, e desc)
  auto t = eqt::parse_shape("1:1;2:2");
  CHECK(t.entries()[0].block_size == 2);

  CHECK_THROWS_AS(eqt::parse_shape(""), eqt::domain_error);
  CHECK_THROWS_AS(eqt::parse_shape("2"), eqt::domain_error);
  CHECK_THROWS_AS(eqt::parse_shape("a:b"), eqt::domain_error);
  CHECK_THROWS_AS(eqt::parse_shape("0:1"), eqt::domain_error);
}

TEST_CASE("shape JSON schema") {
  auto j = eqt::to_json(eqt::make_shape({{"s1", 2, 2}, {"s2", 1, 1}}));
  CHECK(j.dump() ==
        R"({"n":5,"entries":[{"m":2,"e":2},{"m":1,"e":1}],)"
        R"("exponents":[2,1],"d":3,"weyl":[2,1]})");
}

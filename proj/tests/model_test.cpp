#include "doctest.h"
#include "overhang/model.hpp"

using namespace overhang;

TEST_CASE("harmonic stack geometry") {
  Stack s = make_harmonic(4);
  REQUIRE(s.size() == 4);
  REQUIRE(s.has_exact());
  // Overhang is H_4 / 2 = 25/24.
  CHECK(overhang_exact(s) == Rational(25, 24));
  CHECK(overhang::overhang(s) == doctest::Approx(25.0 / 24.0));
  validate_geometry(s);

  auto cs = contacts(s);
  REQUIRE(cs.size() == 4);  // three block contacts plus the table
  int table = 0;
  for (const auto& c : cs) {
    if (c.lower == kTable) {
      ++table;
      CHECK(c.upper == 0);
      CHECK(*c.a_exact == Rational(1, 8) - 1);
      CHECK(*c.b_exact == Rational(0));
    } else {
      // One block per level, consecutive levels.
      CHECK(s.blocks[c.upper].level == s.blocks[c.lower].level + 1);
      // The upper block protrudes by 1/(2i), i its index from the top.
      CHECK(*c.b_exact - *c.a_exact ==
            1 - Rational(1, 2 * (3 - s.blocks[c.lower].level)));
    }
  }
  CHECK(table == 1);
}

TEST_CASE("overlap and floating blocks are rejected") {
  Stack s;
  s.blocks.emplace_back(0.0, 0);
  s.blocks.emplace_back(0.5, 0);
  CHECK_THROWS_AS(validate_geometry(s), InvalidGeometry);

  Stack f;
  f.blocks.emplace_back(-1.0, 0);
  f.blocks.emplace_back(1.5, 1);
  CHECK_THROWS_AS(validate_geometry(f), InvalidGeometry);

  // Touching blocks (gap exactly 0) are fine.
  Stack t;
  t.blocks.emplace_back(Rational(0), 0);
  t.blocks.emplace_back(Rational(1), 0);
  validate_geometry(t);

  // A block exactly flush with its supporter's edge does not rest on it.
  Stack e;
  e.blocks.emplace_back(Rational(-1), 0);
  e.blocks.emplace_back(Rational(0), 1);
  CHECK_THROWS_AS(validate_geometry(e), InvalidGeometry);
}

TEST_CASE("point weight validation") {
  Stack s;
  s.blocks.emplace_back(-0.5, 0);
  s.weights.emplace_back(0, 0.25, 1.5);
  validate_geometry(s);

  s.weights.emplace_back(0, 0.75, 1.0);  // beyond the right edge (0.5)
  CHECK_THROWS_AS(validate_geometry(s), InvalidGeometry);
  s.weights.pop_back();
  s.weights.emplace_back(0, 0.0, -1.0);
  CHECK_THROWS_AS(validate_geometry(s), InvalidGeometry);
  s.weights.pop_back();
  s.weights.emplace_back(3, 0.0, 1.0);
  CHECK_THROWS_AS(validate_geometry(s), InvalidGeometry);
}

TEST_CASE("table contact exists only for blocks crossing x = 0") {
  Stack s;
  s.blocks.emplace_back(Rational(0), 0);  // right of the edge: no contact
  auto cs = contacts(s);
  CHECK(cs.empty());

  s.blocks[0] = Block(Rational(-1, 4), 0);
  cs = contacts(s);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].lower == kTable);
  CHECK(cs[0].a == doctest::Approx(-0.25));
  CHECK(cs[0].b == doctest::Approx(0.0));
}

TEST_CASE("support partition of a spinal stack") {
  Stack s = make_harmonic(5);
  auto part = support_partition(s);
  CHECK(part.principal == 4);  // topmost block sticks out furthest
  CHECK(part.support.size() == 5);
  CHECK(part.balancing.empty());
  CHECK(is_spinal(s));
}

TEST_CASE("support partition separates balancing blocks") {
  // Two blocks side by side on the table, one on top bridging them; the
  // principal path reaches only the right-hand supporter.
  Stack s;
  s.blocks.emplace_back(Rational(-3, 2), 0);
  s.blocks.emplace_back(Rational(-1, 4), 0);
  s.blocks.emplace_back(Rational(-3, 4), 1);
  auto part = support_partition(s);
  CHECK(part.principal == 1);
  CHECK(part.support == std::vector<int>{1});
  CHECK(part.balancing == std::vector<int>{0, 2});
  // Trivially spinal: the support chain stops at the level-0 principal.
  CHECK(is_spinal(s));
}

TEST_CASE("a forked support chain is not spinal") {
  // Top block rests on a bridge resting on two table blocks, so level 0
  // contributes two support blocks.
  Stack s;
  s.blocks.emplace_back(Rational(-3, 2), 0);
  s.blocks.emplace_back(Rational(-1, 2), 0);
  s.blocks.emplace_back(Rational(-1), 1);
  s.blocks.emplace_back(Rational(-3, 10), 2);
  auto part = support_partition(s);
  CHECK(part.principal == 3);
  CHECK(part.support.size() == 4);
  CHECK_FALSE(is_spinal(s));
}

TEST_CASE("triangles and diamonds have the advertised shapes") {
  Stack t = make_inverted_triangle(3);
  CHECK(t.size() == 6);
  CHECK(overhang_exact(t) == Rational(3, 2));
  validate_geometry(t);

  Stack d = make_diamond(4);
  CHECK(d.size() == 16);
  CHECK(overhang_exact(d) == Rational(2));
  validate_geometry(d);
  // The rightmost chain of a diamond is a spine of half-offsets.
  CHECK(is_spinal(d));
}

TEST_CASE("translate shifts exact and float coordinates together") {
  Stack s = make_harmonic(3);
  Rational before = overhang_exact(s);
  s.translate(Rational(-1, 3));
  CHECK(overhang_exact(s) == before - Rational(1, 3));
  CHECK(s.has_exact());

  s.translate(0.25);  // float shift drops exactness
  CHECK_FALSE(s.has_exact());
}

TEST_CASE("total weight includes point weights") {
  Stack s = make_harmonic(2);
  CHECK(s.total_weight() == doctest::Approx(2.0));
  s.weights.emplace_back(1, s.blocks[1].x + 0.5, 2.5);
  CHECK(s.total_weight() == doctest::Approx(4.5));
}

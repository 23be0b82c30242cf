#include <doctest.h>

#include "agw/array.hpp"
#include "agw/error.hpp"

using namespace agw;

namespace {

Symbol s(std::string_view t) { return Symbol::intern(t); }

Array1D cells(std::vector<std::pair<Position, Symbol>> c) { return Array1D::from_cells(c); }

}  // namespace

TEST_CASE("compact literal with gaps") {
  const Array1D a = parse_array("a a # # # a # a");
  CHECK(a == cells({{0, s("a")}, {1, s("a")}, {5, s("a")}, {7, s("a")}}));
  CHECK(a.size() == 4);
  CHECK(render_array(a) == "a a # # # a # a");
}

TEST_CASE("positioned literal is canonicalized") {
  CHECK(parse_array("@-2 a @-1 a @3 a @5 a") == parse_array("a a # # # a # a"));
}

TEST_CASE("empty literal") {
  const Array1D a = parse_array("");
  CHECK(a.empty());
  CHECK(render_array(a).empty());
  CHECK(parse_array("   ").empty());
}

TEST_CASE("render gap-free array") {
  CHECK(render_array(cells({{0, s("L")}, {1, s("E")}, {2, s("S!")}, {3, s("E")}, {4, s("R")}})) == "L E S! E R");
}

TEST_CASE("malformed literals") {
  CHECK_THROWS_AS(parse_array("a @2 b"), ParseError);
  CHECK_THROWS_AS(parse_array("@1 a @1 b"), ParseError);
  CHECK_THROWS_AS(parse_array("a$"), ParseError);
  CHECK_THROWS_AS(parse_array("@x a"), ParseError);
}

TEST_CASE("normalize") {
  CHECK(normalize(cells({{3, s("a")}, {4, s("b")}})) == cells({{0, s("a")}, {1, s("b")}}));
  CHECK(normalize(cells({{0, s("a")}})) == cells({{0, s("a")}}));
  CHECK(normalize(Array1D{}).empty());
}

TEST_CASE("translate keeps coordinates") {
  CHECK(translate(cells({{0, s("a")}}), 5) == cells({{5, s("a")}}));
  CHECK(translate(Array1D{}, -3).empty());
  const Array1D t = translate(cells({{0, s("a")}, {2, s("b")}}), -2);
  CHECK(t == cells({{-2, s("a")}, {0, s("b")}}));
  CHECK_FALSE(t.is_canonical());
}

TEST_CASE("equivalence up to translation") {
  CHECK(equivalent(cells({{0, s("a")}}), cells({{7, s("a")}})));
  CHECK_FALSE(equivalent(cells({{0, s("a")}}), cells({{0, s("b")}})));
  CHECK(equivalent(cells({{0, s("a")}, {1, s("b")}}), cells({{4, s("a")}, {5, s("b")}})));
}

TEST_CASE("shape metrics") {
  const ShapeMetrics m = shape_of(parse_array("a a # # # a # a"));
  CHECK(m.size == 4);
  CHECK(m.extent == 7);
  const ShapeMetrics one = shape_of(parse_array("x"));
  CHECK(one.size == 1);
  CHECK(one.extent == 0);
  CHECK_FALSE(shape_of(Array1D{}).min_pos.has_value());
  CHECK(shape_equal(parse_array("a b"), parse_array("c d")));
  CHECK_FALSE(shape_equal(parse_array("a b"), parse_array("c # d")));
}

TEST_CASE("symbol tokens") {
  CHECK(Symbol::is_valid_token("S"));
  CHECK(Symbol::is_valid_token("a'!"));
  CHECK(Symbol::is_valid_token("[E.q0.E.E]"));
  CHECK_FALSE(Symbol::is_valid_token("a!'"));
  CHECK_FALSE(Symbol::is_valid_token("[a.b.c]"));
  CHECK(s("#").is_blank());
  CHECK(s("E!").is_barred());
  CHECK(s("[L'.qf'.E.a]").is_composite());
  CHECK(s("a") == s("a"));
}

#include <doctest.h>

#include "agw/error.hpp"
#include "agw/rule.hpp"

using namespace agw;

namespace {

Symbol s(std::string_view t) { return Symbol::intern(t); }

}  // namespace

TEST_CASE("rule norms") {
  CHECK(rule_norm(parse_rule("ins sel{0=E} put{1=E}")) == 1);
  CHECK(rule_norm(parse_rule("del sel{} rem{0=E}")) == 0);
  CHECK(rule_norm(parse_rule("del sel{0=A,1=[A.q.X.D]} rem{2=D}")) == 2);
}

TEST_CASE("match sites") {
  const Array1D line = parse_array("E S! E");
  CHECK(match_sites(parse_rule("ins sel{0=E} put{1=E}"), line) == std::vector<Position>{2});
  CHECK(match_sites(parse_rule("del sel{-1=#} rem{0=a}"), parse_array("a b")) == std::vector<Position>{0});
  CHECK(match_sites(parse_rule("ins sel{0=Z} put{1=Z}"), parse_array("a b")).empty());
}

TEST_CASE("context-free anchors stay finite") {
  const Rule r = parse_rule("ins sel{} put{0=F}");
  const auto sites = match_sites(r, parse_array("a # b"));
  CHECK(sites == std::vector<Position>{-1, 1, 3});
  CHECK(match_sites(r, Array1D{}) == std::vector<Position>{0});
  CHECK(match_sites(parse_rule("del sel{} rem{0=a}"), parse_array("a b a")) == std::vector<Position>{0, 2});
}

TEST_CASE("apply at an anchor") {
  CHECK(render_array(apply_at(parse_rule("ins sel{0=E} put{1=E}"), parse_array("E S! E"), 2)) == "E S! E E");
  CHECK(render_array(apply_at(parse_rule("del sel{-1=#} rem{0=a}"), parse_array("a b"), 0)) == "b");
  CHECK(render_array(apply_at(parse_rule("cls lhs{0=S,1=#} rhs{0=a,1=S}"), parse_array("S"), 0)) == "a S");
  CHECK(render_array(apply_at(parse_rule("ins sel{0=a} put{-1=b}"), parse_array("a"), 0)) == "b a");
  CHECK_THROWS_AS(apply_at(parse_rule("ins sel{0=E} put{1=E}"), parse_array("E S! E"), 0), ContractError);
}

TEST_CASE("string operations as array rules") {
  const auto one = string_ops_to_rules({s("a")});
  CHECK(one.size() == 4);
  for (const auto& r : one) CHECK(r.norm() == 1);
  CHECK(string_ops_to_rules({s("a"), s("b")}).size() == 12);
  const Rule left_delete = parse_rule("del sel{-1=#} rem{0=a}");
  CHECK(std::find(one.begin(), one.end(), left_delete) != one.end());
  CHECK(apply_at(left_delete, parse_array("a"), 0).empty());
}

TEST_CASE("rule text round trip") {
  for (const char* text : {"ins sel{0=E} put{1=E}", "del sel{-1=#} rem{0=a}", "cls lhs{0=S,1=#} rhs{0=a,1=S}",
                           "lbl: ins sel{} put{0=F}", "del sel{0=A,1=B} rem{2=C,3=D}"}) {
    CAPTURE(text);
    CHECK(parse_rule(text).to_text() == text);
  }
}

TEST_CASE("rejected rules") {
  CHECK_THROWS_AS(parse_rule("ins sel{0=a} put{0=b}"), ValidationError);
  CHECK_THROWS_AS(parse_rule("ins sel{0=a} put{1=#}"), ParseError);
  CHECK_THROWS_AS(parse_rule("cls lhs{0=a} rhs{1=b}"), ValidationError);
  CHECK_THROWS_AS(parse_rule("ins sel{0=a,0=b} put{1=c}"), ValidationError);
  CHECK_THROWS(parse_rule("swap sel{0=a} put{1=b}"));
  CHECK_THROWS(parse_rule("ins sel{0=a put{1=b}"));
}

TEST_CASE("rule set matches rule by rule") {
  std::vector<Rule> rules{parse_rule("ins sel{0=E} put{1=E}"), parse_rule("ins sel{0=E} put{-1=L}"),
                          parse_rule("del sel{} rem{0=S!}"), parse_rule("ins sel{} put{0=F}")};
  const RuleSet set(rules);
  const Array1D a = parse_array("E S! # E");
  std::vector<std::pair<std::size_t, Position>> via_set, direct;
  set.for_each_match(a, [&](std::size_t r, Position v) { via_set.push_back({r, v}); });
  for (std::size_t r = 0; r < rules.size(); ++r)
    for (Position v : rules[r].match_sites(a)) direct.push_back({r, v});
  std::sort(via_set.begin(), via_set.end());
  CHECK(via_set == direct);
  CHECK(set.any_match(a));
  CHECK_FALSE(RuleSet({parse_rule("ins sel{0=Z} put{1=Z}")}).any_match(a));
}

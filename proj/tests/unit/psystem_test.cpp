#include <doctest.h>

#include "agw/error.hpp"
#include "agw/psystem.hpp"
#include "agw/textio.hpp"

using namespace agw;

namespace {

const char* kBranching = R"(format: agw/1
membranes: [0 [1] [2]]
init: 0
alphabet: a b c
terminals: a b c
axiom: a
rule @0 ins sel{0=a} put{1=b} -> in
rule @1 ins sel{0=b} put{1=c} -> out
)";

std::vector<std::string> texts(const std::vector<Array1D>& arrays) {
  std::vector<std::string> out;
  for (const auto& a : arrays) out.push_back(render_array(a));
  return out;
}

}  // namespace

TEST_CASE("membrane trees") {
  const MembraneTree t = MembraneTree::parse("[0 [1] [2]]");
  CHECK(t.size() == 3);
  CHECK(t.label(0) == "0");
  CHECK(t.children(0) == std::vector<std::size_t>{1, 2});
  CHECK(t.height() == 1);
  CHECK(MembraneTree::parse("[0]").height() == 0);
  CHECK(MembraneTree::parse("[0 [1] [2] [3]]").children(0).size() == 3);
  CHECK(MembraneTree::parse("[0 [I1 [I2]] [F1 [F2]]]").height() == 2);
  CHECK(MembraneTree::parse("[0 [I1 [I2]] [F1 [F2]]]").to_text() == "[0 [I1 [I2]] [F1 [F2]]]");
  CHECK_THROWS_AS(MembraneTree::parse("[0 [1 [2"), ParseError);
  CHECK_THROWS_AS(MembraneTree::parse("[0 [1] [1]]"), ParseError);
  CHECK_THROWS_AS(MembraneTree::parse("[0] [1]"), ParseError);
}

TEST_CASE("routing by target") {
  const PSystem p = parse_psystem(kBranching);
  const auto next = psystem_successors(p, {parse_array("a"), 0});
  REQUIRE(next.size() == 2);
  CHECK(next[0].membrane == 1);
  CHECK(next[1].membrane == 2);
  CHECK(render_array(next[0].array) == "a b");
  const auto back = psystem_successors(p, {parse_array("a b"), 1});
  REQUIRE(back.size() == 1);
  CHECK(back[0].membrane == 0);
  CHECK(render_array(back[0].array) == "a b c");
}

TEST_CASE("out from the skin discards") {
  const PSystem p = parse_psystem(R"(format: agw/1
membranes: [0]
init: 0
alphabet: a b
terminals: a b
axiom: a
rule @0 ins sel{0=a} put{1=b} -> out
)");
  CHECK(psystem_successors(p, {parse_array("a"), 0}).empty());
  CHECK_FALSE(is_halting(p, {parse_array("a"), 0}));
  const PsRun run = run_t_bounded(p, Budget{});
  CHECK(run.lang.arrays.empty());
  CHECK(run.halting.empty());
}

TEST_CASE("halting configurations and results") {
  const PsRun run = run_t_bounded(parse_psystem(kBranching), Budget{});
  CHECK(texts(run.lang.arrays) == std::vector<std::string>{"a b", "a b c"});
  REQUIRE(run.halting.size() == 2);
  CHECK(run.halting[0].membrane == "0");
  CHECK(run.halting[1].membrane == "2");
  CHECK(run.halting[0].terminal);
  CHECK(run.lang.complete);
}

TEST_CASE("non-terminal halting is reported but not a result") {
  const PSystem p = parse_psystem(R"(format: agw/1
membranes: [0 [1]]
init: 0
alphabet: a X
terminals: a
axiom: a
rule @0 ins sel{0=a} put{1=X} -> in(1)
)");
  Budget everything;
  everything.prune_dead = false;
  const PsRun run = run_t_bounded(p, everything);
  CHECK(run.lang.arrays.empty());
  REQUIRE(run.halting.size() == 1);
  CHECK(run.halting[0].membrane == "1");
  CHECK_FALSE(run.halting[0].terminal);
  CHECK_FALSE(is_simple(p));

  // X can never leave membrane 1, so pruning skips that configuration
  const PsRun pruned = run_t_bounded(p, Budget{});
  CHECK(pruned.lang.arrays.empty());
  CHECK(pruned.halting.empty());
  CHECK(pruned.lang.pruned == 1);
}

TEST_CASE("simplicity and height") {
  const PSystem p = parse_psystem(kBranching);
  CHECK(is_simple(p));
  CHECK(tree_height(p) == 1);
}

TEST_CASE("single membrane wrapper") {
  const Grammar g = parse_grammar(read_text_file(std::string(AGW_TEST_DATA) + "/gline.agw"));
  const PSystem p = single_membrane(g);
  CHECK(p.tree().size() == 1);
  CHECK(is_simple(p));
  Budget b;
  b.max_cells = 7;
  CHECK(serialize_lang(run_t_bounded(p, b).lang) == serialize_lang(language(g, Mode::t, b)));
}

TEST_CASE("file round trip") {
  const PSystem p = parse_psystem(kBranching);
  CHECK(serialize_psystem(parse_psystem(serialize_psystem(p))) == serialize_psystem(p));
}

TEST_CASE("invalid systems") {
  auto with_rule = [](const std::string& rule) {
    return std::string("format: agw/1\nmembranes: [0 [1]]\ninit: 0\nalphabet: a\nterminals: a\naxiom: a\n") + rule +
           "\n";
  };
  CHECK_THROWS(parse_psystem(with_rule("rule @9 ins sel{0=a} put{1=a} -> here")));
  CHECK_THROWS(parse_psystem(with_rule("rule @1 ins sel{0=a} put{1=a} -> in")));
  CHECK_THROWS(parse_psystem(with_rule("rule @1 ins sel{0=a} put{1=a} -> in(0)")));
  CHECK_THROWS(parse_psystem(with_rule("rule @0 ins sel{0=a} put{1=a} -> sideways")));
  CHECK_NOTHROW(parse_psystem(with_rule("rule @0 ins sel{0=a} put{1=a} -> in(1)")));
}

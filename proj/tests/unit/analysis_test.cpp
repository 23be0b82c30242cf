#include <doctest.h>

#include "agw/analysis.hpp"
#include "agw/constructions.hpp"
#include "agw/psystem.hpp"
#include "agw/textio.hpp"

using namespace agw;

namespace {

std::string data(const char* name) { return read_text_file(std::string(AGW_TEST_DATA) + "/" + name); }

Grammar grammar(const std::string& rules) {
  return parse_grammar("format: agw/1\nalphabet: S X a\nterminals: a\naxiom: S\n" + rules);
}

}  // namespace

TEST_CASE("a symbol nothing removes is doomed") {
  const Grammar g = grammar("rule cls lhs{0=S} rhs{0=a}\nrule ins sel{0=a} put{1=X}\n");
  const DeadStateFilter t(g, true), star(g, false);
  CHECK(t.dead(parse_array("a X"), 0));
  CHECK(star.dead(parse_array("a X"), 0));
  CHECK_FALSE(t.dead(parse_array("S"), 0));
  CHECK_FALSE(t.dead(parse_array("a"), 0));
}

TEST_CASE("a removable symbol is not doomed") {
  const Grammar g = grammar("rule ins sel{0=S} put{1=X}\nrule del sel{} rem{0=X}\nrule cls lhs{0=S} rhs{0=a}\n");
  CHECK_FALSE(DeadStateFilter(g, true).dead(parse_array("S X"), 0));
}

TEST_CASE("t-mode needs a membrane that can halt") {
  // X can be deleted, but only while F keeps being inserted everywhere
  const Grammar g = grammar("rule ins sel{} put{0=S}\nrule del sel{} rem{0=X}\n");
  CHECK(DeadStateFilter(g, true).dead(parse_array("X"), 0));
  CHECK_FALSE(DeadStateFilter(g, false).dead(parse_array("X"), 0));
}

TEST_CASE("rules producing doomed symbols do not rescue others") {
  // deleting X always brings in Y, which can never go away
  const Grammar g = parse_grammar(
      "format: agw/1\nalphabet: X Y a\nterminals: a\naxiom: X\nrule ins sel{0=X} put{1=Y}\nrule del sel{1=Y} rem{0=X}\n");
  const DeadStateFilter f(g, true);
  CHECK(f.dead(parse_array("Y"), 0));
  CHECK_FALSE(f.dead(parse_array("X"), 0));  // X alone halts, it is just not a result
}

TEST_CASE("membranes are analysed separately") {
  const PSystem p = parse_psystem(R"(format: agw/1
membranes: [0 [1]]
init: 0
alphabet: a X
terminals: a
axiom: a
rule @0 del sel{} rem{0=X} -> here
rule @0 ins sel{0=a} put{1=X} -> in
)");
  const DeadStateFilter f(p, true);
  CHECK_FALSE(f.dead(parse_array("a X"), 0));
  CHECK(f.dead(parse_array("a X"), 1));
}

TEST_CASE("compiled systems keep the trap symbol doomed") {
  const DeadStateFilter pcp(compile_pcp(parse_pcp(data("ab.pcp"))), true);
  CHECK(pcp.dead(parse_array("L L' a F"), 0));
  CHECK(pcp.doomed_pairs() > 0);
  const DeadStateFilter tm(compile_tm_to_grammar(parse_tm(data("write_a.tm"))), true);
  CHECK(tm.dead(parse_array("L E R F"), 0));
}

TEST_CASE("pruning does not change compiled results") {
  const PSystem p = compile_arba_to_psystem(parse_grammar(data("s_to_a.agw")));
  Budget b;
  b.max_cells = 6;
  b.max_extent = 7;
  Budget raw = b;
  raw.prune_dead = false;
  const PsRun with = run_t_bounded(p, b), without = run_t_bounded(p, raw);
  CHECK(serialize_lang(with.lang) == serialize_lang(without.lang));
  CHECK(with.lang.states < without.lang.states);
  CHECK(with.lang.pruned > 0);
  CHECK(without.lang.pruned == 0);
}

#include <doctest.h>

#include "agw/error.hpp"
#include "agw/oracles.hpp"
#include "agw/textio.hpp"

using namespace agw;

namespace {

std::string data(const char* name) { return read_text_file(std::string(AGW_TEST_DATA) + "/" + name); }

std::vector<std::string> texts(const std::vector<Array1D>& arrays) {
  std::vector<std::string> out;
  for (const auto& a : arrays) out.push_back(render_array(a));
  return out;
}

LangResult result(std::vector<const char*> arrays, bool complete = true, std::uint64_t cap = 16) {
  LangResult r;
  for (const char* a : arrays) r.arrays.push_back(parse_array(a));
  r.complete = complete;
  r.cell_cap = cap;
  return r;
}

TuringMachine machine(const std::string& delta) {
  return parse_tm("format: agw/1\nstates: q0 q1 qf\ntape: E a\ninput: a\nblank: E\ninit: q0\nfinal: qf\n" + delta);
}

Budget cells(std::uint64_t n) {
  Budget b;
  b.max_cells = n;
  return b;
}

}  // namespace

TEST_CASE("pcp brute force") {
  const auto ab = pcp_solutions(parse_pcp(data("ab.pcp")), 4);
  REQUIRE(ab.size() == 1);
  CHECK(ab[0].indices == std::vector<std::size_t>{1, 2});
  CHECK(ab[0].word == "aab");
  CHECK(pcp_solutions(parse_pcp(data("nosol.pcp")), 8).empty());
  const auto same = pcp_solutions(parse_pcp(data("same.pcp")), 1);
  REQUIRE(same.size() == 1);
  CHECK(same[0].indices == std::vector<std::size_t>{1});
  CHECK(same[0].word == "a");
}

TEST_CASE("pcp language includes repeated solutions") {
  const LangResult r = pcp_language(parse_pcp(data("ab.pcp")), cells(16));
  CHECK(texts(r.arrays) == std::vector<std::string>{"L L' a a' a a' b b' R R'", "L L' a a' a a' b b' a a' a a' b b' R R'"});
  CHECK(r.complete);
  CHECK(pcp_language(parse_pcp(data("nosol.pcp")), cells(16)).arrays.empty());
}

TEST_CASE("machine oracle") {
  CHECK(texts(tm_generate(parse_tm(data("write_a.tm")), Budget{}).arrays) == std::vector<std::string>{"a"});
  CHECK(texts(tm_generate(parse_tm(data("write_ab.tm")), Budget{}).arrays) == std::vector<std::string>{"a b"});

  const LangResult blank = tm_generate(machine("delta: q0 E -> qf E R\n"), Budget{});
  REQUIRE(blank.arrays.size() == 1);
  CHECK(blank.arrays[0].empty());

  const LangResult never = tm_generate(machine("delta: q0 E -> q1 a R\ndelta: q1 E -> q0 E L\n"), Budget{});
  CHECK(never.arrays.empty());
  CHECK(never.complete);
  CHECK_FALSE(never.step_cut.has_value());
}

TEST_CASE("machine oracle keeps only input tapes") {
  const TuringMachine m = parse_tm(
      "format: agw/1\nstates: q0 qf\ntape: E a x\ninput: a\nblank: E\ninit: q0\nfinal: qf\n"
      "delta: q0 E -> qf x R\ndelta: q0 E -> qf a R\n");
  CHECK(texts(tm_generate(m, Budget{}).arrays) == std::vector<std::string>{"a"});
}

TEST_CASE("machine oracle under a step cap") {
  Budget b;
  b.max_steps = 1;
  const LangResult r = tm_generate(parse_tm(data("write_a.tm")), b);
  CHECK(r.arrays.empty());
  CHECK(r.step_cut.has_value());
}

TEST_CASE("classical grammar oracle") {
  CHECK(texts(arba_language(parse_grammar(data("s_to_a.agw")), Budget{}).arrays) == std::vector<std::string>{"a"});
  CHECK(texts(arba_language(parse_grammar(data("right_aa.agw")), cells(3)).arrays) ==
        std::vector<std::string>{"a", "a a", "a a a"});
  CHECK(texts(arba_language(parse_grammar(data("left_bs.agw")), cells(3)).arrays) ==
        std::vector<std::string>{"a", "a b", "a b b"});
  const Grammar stuck =
      parse_grammar("format: agw/1\nalphabet: S X a\nterminals: a\naxiom: S\nrule cls lhs{0=S} rhs{0=X}\n");
  const LangResult none = arba_language(stuck, Budget{});
  CHECK(none.arrays.empty());
  CHECK(none.complete);
  CHECK_THROWS_AS(arba_language(parse_grammar(data("gline.agw")), Budget{}), ValidationError);
}

TEST_CASE("language comparison") {
  const auto equal = compare_languages(result({"a"}), result({"a"}), 5);
  CHECK(equal.verdict == EquivalenceReport::Verdict::equal);
  CHECK(texts(equal.both) == std::vector<std::string>{"a"});

  const auto differ = compare_languages(result({"a"}), result({"a", "b"}), 5);
  CHECK(differ.verdict == EquivalenceReport::Verdict::differ);
  CHECK(texts(differ.right_only) == std::vector<std::string>{"b"});
  CHECK(differ.left_only.empty());

  const auto truncated = compare_languages(result({"a"}, false), result({"a"}), 5);
  CHECK(truncated.verdict == EquivalenceReport::Verdict::inconclusive);
}

TEST_CASE("comparison region and conclusiveness") {
  // arrays beyond the region are ignored
  CHECK(compare_languages(result({"a", "a a a"}), result({"a"}), 2).verdict == EquivalenceReport::Verdict::equal);
  // a cap below the region is not conclusive
  CHECK(compare_languages(result({"a"}, true, 1), result({"a"}), 2).verdict ==
        EquivalenceReport::Verdict::inconclusive);
  // an array missing from a conclusive side is a difference even if the
  // other side is truncated
  CHECK(compare_languages(result({"a", "b"}, false), result({"a"}), 2).verdict ==
        EquivalenceReport::Verdict::differ);
  // but not when only the truncated side lacks it
  CHECK(compare_languages(result({"a"}, false), result({"a", "b"}), 2).verdict ==
        EquivalenceReport::Verdict::inconclusive);
  LangResult cut = result({"a"});
  cut.step_cut = "max_steps reached (3)";
  CHECK(compare_languages(cut, result({"a"}), 2).verdict == EquivalenceReport::Verdict::inconclusive);
}

TEST_CASE("report text") {
  const auto rep = compare_languages(result({"a", "c"}), result({"a", "b"}), 5);
  CHECK(serialize_report(rep) ==
        "verdict: DIFFER\nregion: 5\nnote: left: complete\nnote: right: complete\nboth: a\nleft_only: c\n"
        "right_only: b\n");
  CHECK(verdict_name(EquivalenceReport::Verdict::inconclusive) == "INCONCLUSIVE");
}

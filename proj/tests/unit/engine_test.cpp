#include <doctest.h>

#include <set>

#include "agw/engine.hpp"
#include "agw/error.hpp"
#include "agw/textio.hpp"

using namespace agw;

namespace {

Grammar load(const char* name) { return parse_grammar(read_text_file(std::string(AGW_TEST_DATA) + "/" + name)); }

std::vector<std::string> texts(const std::vector<Array1D>& arrays) {
  std::vector<std::string> out;
  for (const auto& a : arrays) out.push_back(render_array(a));
  return out;
}

Budget cells(std::uint64_t n) {
  Budget b;
  b.max_cells = n;
  return b;
}

// L E^n S! E^m R for n, m >= 1 and n + m <= k
std::set<std::string> closed_lines(int k) {
  std::set<std::string> out;
  for (int n = 1; n < k; ++n)
    for (int m = 1; n + m <= k; ++m) {
      std::string t = "L";
      for (int i = 0; i < n; ++i) t += " E";
      t += " S!";
      for (int i = 0; i < m; ++i) t += " E";
      out.insert(t + " R");
    }
  return out;
}

}  // namespace

TEST_CASE("one derivation step") {
  const Grammar g = load("gline.agw");
  CHECK(texts(successors(g, g.axiom())) ==
        std::vector<std::string>{"E E S! E", "E S! E E", "E S! E R", "L E S! E"});
  CHECK(successors(g, parse_array("L E S! E R")).empty());
  const Grammar bare({Symbol::intern("a")}, {Symbol::intern("a")}, parse_array("a"), {});
  CHECK(successors(bare, parse_array("a a")).empty());
}

TEST_CASE("halting") {
  const Grammar g = load("gline.agw");
  CHECK(is_halting(g, parse_array("L E S! E R")));
  CHECK_FALSE(is_halting(g, parse_array("E S! E")));
  CHECK(is_halting(load("empty.agw"), parse_array("a b")));
}

TEST_CASE("reach under step caps") {
  const Grammar g = load("gline.agw");
  Budget one;
  one.max_steps = 1;
  const LangResult r = reach(g, one);
  CHECK(texts(r.arrays) == std::vector<std::string>{"E E S! E", "E S! E", "E S! E E", "E S! E R", "L E S! E"});
  CHECK(r.complete);
  CHECK(r.step_cut.has_value());
  Budget none;
  none.max_steps = 0;
  CHECK(texts(reach(g, none).arrays) == std::vector<std::string>{"E S! E"});
  const LangResult bare = reach(load("empty.agw"), Budget{});
  CHECK(bare.arrays.size() == 1);
  CHECK(bare.complete);
  CHECK_FALSE(bare.step_cut.has_value());
}

TEST_CASE("t-mode language of the line grammar") {
  const LangResult r = language(load("gline.agw"), Mode::t, cells(8));
  const auto got = texts(r.arrays);
  CHECK(std::set<std::string>(got.begin(), got.end()) == closed_lines(5));
  CHECK(got.size() == 10);
  CHECK(r.complete);
  CHECK(r.excluded > 0);
}

TEST_CASE("star-mode language includes open lines") {
  const LangResult r = language(load("gline.agw"), Mode::star, cells(5));
  const auto got = texts(r.arrays);
  CHECK(std::count(got.begin(), got.end(), "E S! E R") == 1);
  CHECK(std::count(got.begin(), got.end(), "L E S! E") == 1);
}

TEST_CASE("t-mode results are reachable and halting") {
  const Grammar g = load("gline.agw");
  const auto t = language(g, Mode::t, cells(7));
  const auto all = texts(reach(g, cells(7)).arrays);
  for (const auto& a : t.arrays) {
    CHECK(is_halting(g, a));
    CHECK(std::count(all.begin(), all.end(), render_array(a)) == 1);
  }
}

TEST_CASE("result cap truncates") {
  Budget b = cells(8);
  b.max_results = 3;
  const LangResult r = language(load("gline.agw"), Mode::t, b);
  CHECK(r.arrays.size() == 3);
  CHECK_FALSE(r.complete);
  CHECK(r.truncation.has_value());
}

TEST_CASE("budget needs a finite cap") {
  Budget b;
  b.max_steps = b.max_cells = b.max_extent = b.max_results = Budget::kUnlimited;
  CHECK_THROWS_AS(language(load("gline.agw"), Mode::t, b), ValidationError);
}

TEST_CASE("serialized language") {
  const LangResult r = language(load("gline.agw"), Mode::t, cells(6));
  CHECK(serialize_lang(r) == "L E E S! E R\nL E S! E E R\nL E S! E R\ncomplete: true\n");
}

TEST_CASE("grammar file round trip") {
  const Grammar g = load("gline.agw");
  const Grammar back = parse_grammar(serialize_grammar(g));
  CHECK(serialize_grammar(back) == serialize_grammar(g));
  CHECK(back.rules().size() == 4);
}

TEST_CASE("grammar file errors") {
  CHECK_THROWS_AS(parse_grammar("alphabet: a\n"), ParseError);
  CHECK_THROWS_AS(parse_grammar("format: agw/2\n"), ParseError);
  CHECK_THROWS(parse_grammar("format: agw/1\nalphabet: a\nterminals: b\naxiom: a\n"));
  CHECK_THROWS(parse_grammar("format: agw/1\nalphabet: a\nterminals: a\naxiom: a\nrule ins sel{0=z} put{1=a}\n"));
}

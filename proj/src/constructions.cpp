#include "agw/constructions.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <unordered_set>

#include "agw/error.hpp"
#include "agw/textio.hpp"

namespace agw {

namespace {

using Cells = std::vector<PatternCell>;

Symbol sym(std::string_view t) { return Symbol::intern(t); }

Symbol primed(Symbol s) { return sym(std::string(s.token()) + "'"); }
Symbol barred(Symbol s) { return sym(std::string(s.token()) + "!"); }

Rule ins(Cells sel, Cells put) { return Rule::insertion(std::move(sel), std::move(put)); }
Rule del(Cells sel, Cells rem) { return Rule::deletion(std::move(sel), std::move(rem)); }

// Keeps the first occurrence of each rule.
template <typename T, typename Eq>
void dedupe(std::vector<T>& items, Eq eq) {
  std::vector<T> out;
  for (auto& x : items)
    if (std::none_of(out.begin(), out.end(), [&](const T& y) { return eq(x, y); })) out.push_back(std::move(x));
  items = std::move(out);
}

void check_fresh(const std::unordered_set<Symbol>& taken, Symbol s, std::string_view what) {
  if (taken.count(s))
    throw ValidationError("generated " + std::string(what) + " '" + std::string(s.token()) +
                          "' collides with an input symbol");
}

}  // namespace

// ---------------------------------------------------------------- PCP

std::vector<Symbol> PCPInstance::letters() const {
  std::vector<Symbol> out;
  for (const auto* side : {&u, &v})
    for (const auto& w : *side)
      for (char c : w) out.push_back(sym(std::string(1, c)));
  return sorted_symbols(std::move(out));
}

void PCPInstance::validate() const {
  if (u.empty()) throw ValidationError("PCP instance has no pairs");
  if (u.size() != v.size()) throw ValidationError("PCP instance: u and v differ in length");
  for (const auto* side : {&u, &v})
    for (const auto& w : *side) {
      if (w.empty()) throw ValidationError("PCP instance: empty string");
      for (char c : w) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
        if (!ok) throw ValidationError("PCP instance: invalid letter '" + std::string(1, c) + "'");
        if (c == 'L' || c == 'R' || c == 'F')
          throw ValidationError("PCP instance: letter '" + std::string(1, c) + "' is reserved");
      }
    }
}

PCPInstance parse_pcp(std::string_view text) {
  PCPInstance inst;
  for (const auto& line : content_lines(text)) {
    auto words = split_words(line.text);
    if (words.size() != 2) throw ParseError("expected '<u> <v>'", line.number);
    inst.u.emplace_back(words[0]);
    inst.v.emplace_back(words[1]);
  }
  try {
    inst.validate();
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  return inst;
}

std::string serialize_pcp(const PCPInstance& inst) {
  std::string out(kFormatHeader);
  out += '\n';
  for (std::size_t i = 0; i < inst.size(); ++i) out += inst.u[i] + ' ' + inst.v[i] + '\n';
  return out;
}

PSystem compile_pcp(const PCPInstance& inst) {
  inst.validate();
  const std::size_t n = inst.size();
  const Symbol L = sym("L"), Lp = sym("L'"), R = sym("R"), Rp = sym("R'"), F = sym("F"), blank = Symbol::blank();
  const auto T = inst.letters();

  std::vector<Symbol> alphabet{F, L, R, Lp, Rp};
  for (Symbol a : T) {
    alphabet.push_back(a);
    alphabet.push_back(primed(a));
  }
  std::vector<Symbol> terminals;
  for (Symbol s : alphabet)
    if (s != F) terminals.push_back(s);

  std::string tree = "[0";
  for (std::size_t i = 1; i <= n + 1; ++i) tree += " [" + std::to_string(i) + "]";
  tree += "]";

  std::vector<Symbol> anchors{L};
  anchors.insert(anchors.end(), T.begin(), T.end());

  std::vector<TargetedRule> rules;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::string mem = std::to_string(i);
    std::vector<Symbol> u, v;
    for (char c : inst.u[i - 1]) u.push_back(sym(std::string(1, c)));
    for (char c : inst.v[i - 1]) v.push_back(sym(std::string(1, c)));

    // t = length of the primed (resp. present) selector prefix over j = 0..|w|
    for (Symbol x : anchors)
      for (std::size_t t = (x == L ? 1 : 0); t <= u.size() + 1; ++t) {
        Cells sel{{0, x}}, put;
        for (std::size_t j = 0; j <= u.size(); ++j) {
          const Symbol letter = j == 0 ? x : u[j - 1];
          sel.push_back({static_cast<Position>(2 * j + 1), j < t ? primed(letter) : blank});
          if (j > 0) put.push_back({static_cast<Position>(2 * j), letter});
        }
        rules.push_back({"0", ins(std::move(sel), std::move(put)), Target::in_label(mem)});
      }
    for (Symbol x : anchors)
      for (std::size_t t = (x == L ? 1 : 0); t <= v.size() + 1; ++t) {
        Cells sel{{1, primed(x)}}, put;
        for (std::size_t j = 0; j <= v.size(); ++j) {
          const Symbol letter = j == 0 ? x : v[j - 1];
          sel.push_back({static_cast<Position>(2 * j), j < t ? letter : blank});
          if (j > 0) put.push_back({static_cast<Position>(2 * j + 1), primed(letter)});
        }
        rules.push_back({mem, ins(std::move(sel), std::move(put)), Target::out()});
      }
  }

  // Stall traps. The second group of each pair covers the states in which
  // the first group cannot fire (the unprimed sequence ahead in membrane i,
  // the primed one level or ahead in the skin).
  auto trap = [&](const std::string& mem, Symbol x) {
    rules.push_back({mem, ins({{0, x}, {1, blank}}, {{2, F}}), Target::here()});
  };
  std::vector<Symbol> unprimed(T), primed_side;
  for (Symbol a : T) primed_side.push_back(primed(a));
  primed_side.push_back(Lp);
  for (Symbol x : unprimed) trap("0", x);
  trap("0", F);
  for (Symbol x : primed_side) trap("0", x);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::string mem = std::to_string(i);
    for (Symbol x : primed_side) trap(mem, x);
    trap(mem, F);
    for (Symbol x : unprimed) trap(mem, x);
  }

  for (Symbol a : T)
    rules.push_back(
        {"0", ins({{0, a}, {1, primed(a)}}, {{2, R}, {3, Rp}}), Target::in_label(std::to_string(n + 1))});

  return PSystem(alphabet, terminals, MembraneTree::parse(tree), std::move(rules), "0",
                 Array1D::from_row(0, {L, Lp}));
}

// --------------------------------------------------------------- ARBA

namespace {

struct SourceRule {
  Symbol a, d, b, c;  // d, c blank for A -> B
  int v = 0;          // 0 for A -> B
};

std::optional<SourceRule> classify(const Rule& r, const std::unordered_set<Symbol>& nonterminals,
                                   std::string& problem) {
  if (r.kind() != RuleKind::classical) {
    problem = "not a classical rule";
    return std::nullopt;
  }
  const auto& lhs = r.selector();
  const auto& rhs = r.payload();
  auto find = [](const Cells& cells, Position o) {
    for (const auto& c : cells)
      if (c.offset == o) return std::optional<Symbol>(c.entry);
    return std::optional<Symbol>();
  };
  auto a = find(lhs, 0);
  if (!a) {
    problem = "window does not contain offset 0";
    return std::nullopt;
  }
  if (!nonterminals.count(*a)) {
    problem = "cell 0 of the left side is not a non-terminal";
    return std::nullopt;
  }
  SourceRule s;
  s.a = *a;
  s.b = *find(rhs, 0);
  if (lhs.size() == 1) return s;
  if (lhs.size() != 2) {
    problem = "window has more than two cells";
    return std::nullopt;
  }
  const Position other = lhs[0].offset == 0 ? lhs[1].offset : lhs[0].offset;
  if (other != 1 && other != -1) {
    problem = "cells are not adjacent";
    return std::nullopt;
  }
  s.v = static_cast<int>(other);
  s.d = *find(lhs, other);
  s.c = *find(rhs, other);
  if (s.b.is_blank() || s.c.is_blank()) {
    problem = "right side of a two-cell rule contains a blank";
    return std::nullopt;
  }
  return s;
}

}  // namespace

NormalFormReport check_normal_form(const Grammar& g) {
  NormalFormReport rep;
  auto fail = [&](std::string p) {
    rep.accepted = false;
    rep.problems.push_back(std::move(p));
  };
  std::unordered_set<Symbol> nonterminals;
  for (Symbol s : g.alphabet())
    if (!g.is_terminal(s)) nonterminals.insert(s);
  for (Symbol s : g.alphabet())
    if (s.is_barred() || s.is_composite())
      fail("symbol '" + std::string(s.token()) + "' is barred or composite");
  if (g.axiom().size() != 1 || !nonterminals.count(g.axiom().at(0)))
    fail("axiom must be a single non-terminal cell");
  for (const auto& r : g.rules()) {
    std::string problem;
    if (!classify(r, nonterminals, problem)) fail("rule '" + r.to_text() + "': " + problem);
  }
  return rep;
}

std::string MarkedRule::to_text() const {
  return label + ": " + std::string(a.token()) + "! (" + (v > 0 ? "+1" : "-1") + ") " + std::string(d.token()) +
         " -> " + std::string(b.token()) + " (" + (v > 0 ? "+1" : "-1") + ") " + std::string(c.token()) + "!";
}

std::vector<MarkedRule> prepare_marked_rules(const Grammar& g) {
  auto rep = check_normal_form(g);
  if (!rep.accepted) {
    std::string msg = "grammar is not in normal form:";
    for (const auto& p : rep.problems) msg += "\n  " + p;
    throw ValidationError(msg);
  }
  const Symbol E = sym("E");
  for (Symbol s : g.alphabet())
    if (s == E) throw ValidationError("source alphabet must not contain 'E'");
  std::unordered_set<Symbol> nonterminals;
  for (Symbol s : g.alphabet())
    if (!g.is_terminal(s)) nonterminals.insert(s);

  std::vector<Symbol> x = g.alphabet();
  x.push_back(E);
  x = sorted_symbols(std::move(x));
  auto fill = [&](Symbol s) { return s.is_blank() ? E : s; };

  std::vector<MarkedRule> out;
  for (const auto& r : g.rules()) {
    std::string problem;
    auto s = *classify(r, nonterminals, problem);
    if (s.v == 0) {
      for (int v : {1, -1})
        for (Symbol d : x) out.push_back({"", s.a, d, fill(s.b), d, v});
    } else {
      out.push_back({"", s.a, fill(s.d), s.b, s.c, s.v});
    }
  }
  for (int v : {1, -1})
    for (Symbol a : x)
      for (Symbol c : x) out.push_back({"", a, c, a, c, v});

  auto key = [](const MarkedRule& m) {
    return std::tuple(std::string(m.a.token()), -m.v, std::string(m.d.token()), std::string(m.b.token()),
                      std::string(m.c.token()));
  };
  std::sort(out.begin(), out.end(), [&](const auto& p, const auto& q) { return key(p) < key(q); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  const std::size_t width = std::to_string(out.empty() ? 0 : out.size() - 1).size();
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::string idx = std::to_string(i);
    out[i].label = "r" + std::string(width - idx.size(), '0') + idx;
  }
  return out;
}

namespace {

// D!^(l): base of D, "_<label>", D's primes, then the bar.
Symbol labelled_bar(Symbol d, const std::string& label) {
  std::string_view t = d.token();
  auto p = t.find('\'');
  std::string base(t.substr(0, p));
  std::string primes(p == std::string_view::npos ? std::string_view{} : t.substr(p));
  return sym(base + "_" + label + primes + "!");
}

}  // namespace

PSystem compile_arba_to_psystem(const Grammar& g) {
  const auto marked = prepare_marked_rules(g);
  const Symbol E = sym("E"), Ebar = barred(E), L = sym("L"), R = sym("R"), F = sym("F");

  std::unordered_set<Symbol> taken(g.alphabet().begin(), g.alphabet().end());
  std::vector<Symbol> alphabet = g.alphabet();
  for (Symbol s : {E, L, R, F}) {
    check_fresh(taken, s, "symbol");
    alphabet.push_back(s);
  }
  std::vector<Symbol> x = g.alphabet();
  x.push_back(E);
  for (Symbol s : x) alphabet.push_back(barred(s));

  std::string tree = "[0 [I1 [I2]]";
  for (const auto& m : marked) tree += " [" + m.label + "_1 [" + m.label + "_2]]";
  tree += " [F1 [F2]]]";

  std::vector<TargetedRule> rules;
  auto add = [&](const std::string& mem, Rule r, Target t) { rules.push_back({mem, std::move(r), std::move(t)}); };

  add("I2", ins({{0, E}}, {{1, E}}), Target::here());
  add("I2", ins({{0, E}}, {{-1, E}}), Target::here());
  add("I2", ins({{0, E}}, {{-1, L}}), Target::out());
  add("I1", ins({{0, E}}, {{1, R}}), Target::out());

  for (const auto& m : marked) {
    const std::string l1 = m.label + "_1", l2 = m.label + "_2";
    const Symbol K = sym("K_" + m.label), dl = labelled_bar(m.d, m.label);
    const Symbol abar = barred(m.a), cbar = barred(m.c);
    const Position v = m.v;
    check_fresh(taken, K, "symbol");
    check_fresh(taken, dl, "symbol");
    alphabet.push_back(K);
    alphabet.push_back(dl);
    add("0", ins({{0, R}}, {{1, K}}), Target::in());
    add(l1, del({{0, abar}}, {{v, m.d}}), Target::in());
    add(l2, ins({{0, abar}}, {{v, dl}}), Target::out());
    add(l1, del({{0, dl}}, {{-v, abar}}), Target::out());
    add("0", ins({{0, dl}}, {{-v, m.b}}), Target::in());
    add(l1, del({{0, m.b}}, {{v, dl}}), Target::in());
    add(l2, del({{0, R}}, {{1, K}}), Target::out());
    add(l1, ins({{0, m.b}}, {{v, cbar}}), Target::out());
  }

  std::vector<std::string> trapped{"I1", "I2"};
  for (const auto& m : marked) {
    trapped.push_back(m.label + "_1");
    trapped.push_back(m.label + "_2");
  }
  for (const auto& mem : trapped) {
    add(mem, ins({{0, L}}, {{-1, F}}), Target::out());
    add(mem, ins({{0, F}}, {{-1, F}}), Target::out());
  }
  add("0", ins({{0, F}}, {{-1, F}}), Target::in());

  add("0", del({}, {{0, R}}), Target::in());
  for (Symbol s : {E, Ebar, L}) add("F1", del({}, {{0, s}}), Target::here());
  alphabet = sorted_symbols(std::move(alphabet));
  for (Symbol s : alphabet)
    if (!g.is_terminal(s) && s != E && s != Ebar && s != L) add("F1", del({}, {{0, s}}), Target::in());
  add("F2", ins({}, {{0, F}}), Target::out());

  return PSystem(alphabet, g.terminals(), MembraneTree::parse(tree), std::move(rules), "I2",
                 Array1D::from_row(0, {E, barred(g.axiom().at(0)), E}));
}

// ----------------------------------------------------------------- TM

namespace {

bool plain_token(std::string_view t) { return Symbol::is_valid_token(t) && t.find_first_of("!#[") == t.npos; }

}  // namespace

void TuringMachine::validate() const {
  std::set<std::string> q(states.begin(), states.end());
  if (q.size() != states.size()) throw ValidationError("duplicate state");
  for (const auto& s : states)
    if (!plain_token(s)) throw ValidationError("invalid state name '" + s + "'");
  if (!q.count(initial)) throw ValidationError("initial state '" + initial + "' is not a state");
  if (!q.count(final_state)) throw ValidationError("final state '" + final_state + "' is not a state");
  if (q.count(final_state + "'")) throw ValidationError("state '" + final_state + "'' is reserved");
  std::unordered_set<Symbol> v(tape.begin(), tape.end());
  for (Symbol s : tape)
    if (!plain_token(s.token())) throw ValidationError("invalid tape symbol '" + std::string(s.token()) + "'");
  if (!v.count(blank)) throw ValidationError("blank symbol is not in the tape alphabet");
  for (Symbol s : input) {
    if (!v.count(s)) throw ValidationError("input symbol '" + std::string(s.token()) + "' is not a tape symbol");
    if (s == blank) throw ValidationError("the blank symbol cannot be an input symbol");
  }
  for (const char* r : {"L", "R", "F", "L'", "R'"})
    if (v.count(sym(r))) throw ValidationError(std::string("tape symbol '") + r + "' is reserved");
  if (v.count(primed(blank)))
    throw ValidationError("tape symbol '" + std::string(primed(blank).token()) + "' is reserved");
  for (const auto& t : delta) {
    if (!q.count(t.from) || !q.count(t.to)) throw ValidationError("transition uses an unknown state");
    if (!v.count(t.read) || !v.count(t.write)) throw ValidationError("transition uses an unknown tape symbol");
    if (t.move != 'L' && t.move != 'R') throw ValidationError("move must be L or R");
    if (t.from == final_state) throw ValidationError("final state '" + final_state + "' has outgoing transitions");
  }
}

TuringMachine parse_tm(std::string_view text) {
  TuringMachine m;
  std::set<std::string> seen;
  for (const auto& line : content_lines(text)) {
    try {
      auto [key, value] = split_key(line.text);
      const std::string k(key);
      if (k != "delta" && !k.empty() && !seen.insert(k).second) throw ParseError("duplicate '" + k + ":'");
      auto words = split_words(value);
      auto one = [&]() -> std::string {
        if (words.size() != 1) throw ParseError("'" + k + ":' takes one name");
        return std::string(words[0]);
      };
      if (k == "states") {
        for (auto w : words) m.states.emplace_back(w);
      } else if (k == "tape") {
        m.tape = parse_symbol_list(value);
      } else if (k == "input") {
        m.input = parse_symbol_list(value);
      } else if (k == "blank") {
        m.blank = sym(one());
      } else if (k == "init") {
        m.initial = one();
      } else if (k == "final") {
        m.final_state = one();
      } else if (k == "delta") {
        if (words.size() != 6 || words[2] != "->" || (words[5] != "L" && words[5] != "R"))
          throw ParseError("expected 'delta: q X -> p Y L|R'");
        m.delta.push_back({std::string(words[0]), sym(words[1]), std::string(words[3]), sym(words[4]), words[5][0]});
      } else {
        throw ParseError("unexpected line '" + std::string(line.text) + "'");
      }
    } catch (const ParseError& e) {
      if (e.line() > 0) throw;
      throw ParseError(e.what(), line.number);
    }
  }
  for (const char* k : {"states", "tape", "input", "blank", "init", "final"})
    if (!seen.count(k)) throw ParseError(std::string("TM file lacks '") + k + ":'");
  m.tape = sorted_symbols(std::move(m.tape));
  m.input = sorted_symbols(std::move(m.input));
  try {
    m.validate();
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  return m;
}

Grammar compile_tm_to_grammar(const TuringMachine& m) {
  m.validate();
  const Symbol E = m.blank, Ep = primed(E), L = sym("L"), R = sym("R"), Lp = sym("L'"), Rp = sym("R'"),
               F = sym("F");
  const std::string qf = m.final_state, qfp = m.final_state + "'";
  const std::vector<Symbol> V = sorted_symbols(m.tape);

  auto comp = [](Symbol a, const std::string& q, Symbol x, Symbol d) {
    return sym("[" + std::string(a.token()) + "." + q + "." + std::string(x.token()) + "." + std::string(d.token()) +
               "]");
  };
  auto mangle = [](std::string_view t) {
    std::string out;
    for (char c : t) out += c == '\'' ? std::string("_p") : std::string(1, c);
    return out;
  };
  std::unordered_set<Symbol> taken(V.begin(), V.end());
  for (Symbol s : {L, R, Lp, Rp, Ep, F}) taken.insert(s);
  std::set<std::string> carriers;
  auto carrier = [&](char side, const std::string& q, Symbol x) {
    Symbol k = sym(std::string("C") + side + "_" + mangle(q) + "_" + mangle(x.token()));
    check_fresh(taken, k, "carrier");
    carriers.insert(std::string(k.token()));
    return k;
  };

  std::vector<Symbol> VR(V), VL(V), T(m.input), sweepA(m.input);
  VR.push_back(R);
  VL.push_back(L);
  sweepA.push_back(Lp);
  sweepA.push_back(Ep);
  auto arange = [&](const std::string& q) -> const std::vector<Symbol>& { return q == qfp ? sweepA : VL; };

  std::vector<Transition> moves = m.delta;
  for (Symbol x : V) moves.push_back({qf, x, qf, x, 'L'});
  for (Symbol a : T) moves.push_back({qfp, a, qfp, a, 'R'});
  moves.push_back({qfp, E, qfp, Ep, 'R'});

  std::vector<Rule> rules;
  for (const auto& t : moves) {
    if (t.move == 'R') {
      for (Symbol a : arange(t.from))
        for (Symbol d : V) {
          const Symbol c = comp(a, t.from, t.read, d);
          rules.push_back(del({{0, a}, {1, c}}, {{2, d}}));
          for (Symbol cc : VR) {
            const Symbol n = comp(t.write, t.to, d, cc);
            rules.push_back(ins({{0, c}, {2, cc}}, {{1, n}}));
            rules.push_back(del({{1, n}, {2, cc}}, {{0, c}}));
            rules.push_back(ins({{1, n}, {2, cc}}, {{0, t.write}}));
          }
        }
    } else {
      for (Symbol a : V)
        for (Symbol d : VR) {
          const Symbol c = comp(a, t.from, t.read, d);
          rules.push_back(del({{1, c}, {2, d}}, {{0, a}}));
          for (Symbol cc : VL) {
            const Symbol n = comp(cc, t.to, a, t.write);
            rules.push_back(ins({{0, cc}, {2, c}}, {{1, n}}));
            rules.push_back(del({{0, cc}, {1, n}}, {{2, c}}));
            rules.push_back(ins({{0, cc}, {1, n}}, {{2, t.write}}));
          }
        }
    }
  }

  // Workspace extension. The composite's neighbour fields always name the
  // physical neighbours, so growing the workspace replaces the composite
  // through a carrier that remembers state and scanned symbol.
  std::vector<std::string> all_states = m.states;
  std::vector<std::string> right_states = m.states;
  right_states.push_back(qfp);
  for (const auto& q : right_states)
    for (Symbol x : V) {
      const Symbol k = carrier('r', q, x);
      for (Symbol a : arange(q)) {
        const Symbol c = comp(a, q, x, R), c2 = comp(a, q, x, E);
        rules.push_back(ins({{0, c}, {1, R}}, {{2, R}}));
        rules.push_back(del({{0, c}, {2, R}}, {{1, R}}));
        rules.push_back(ins({{0, c}, {2, R}}, {{1, k}}));
        rules.push_back(del({{1, k}, {2, R}}, {{0, c}}));
        rules.push_back(ins({{0, a}, {2, k}}, {{1, c2}}));
        rules.push_back(del({{0, c2}, {2, R}}, {{1, k}}));
        rules.push_back(ins({{0, c2}, {2, R}}, {{1, E}}));
      }
    }
  for (const auto& q : all_states)
    for (Symbol x : V) {
      const Symbol k = carrier('l', q, x);
      for (Symbol d : VR) {
        const Symbol c = comp(L, q, x, d), c2 = comp(E, q, x, d);
        rules.push_back(ins({{1, L}, {2, c}}, {{0, L}}));
        rules.push_back(del({{0, L}, {2, c}}, {{1, L}}));
        rules.push_back(ins({{0, L}, {2, c}}, {{1, k}}));
        rules.push_back(del({{0, L}, {1, k}}, {{2, c}}));
        rules.push_back(ins({{0, k}, {2, d}}, {{1, c2}}));
        rules.push_back(del({{0, L}, {2, c2}}, {{1, k}}));
        rules.push_back(ins({{0, L}, {2, c2}}, {{1, E}}));
      }
    }

  // Final procedure: q_f reaches L, L becomes L', the head turns into q_f'.
  for (Symbol x : V)
    for (Symbol d : VR) {
      const Symbol c = comp(L, qf, x, d), n = comp(Lp, qfp, E, x);
      rules.push_back(ins({{1, L}, {2, c}}, {{0, Lp}}));
      rules.push_back(del({{0, Lp}, {2, c}}, {{1, L}}));
      rules.push_back(ins({{0, Lp}, {2, c}}, {{1, n}}));
      rules.push_back(del({{0, Lp}, {1, n}}, {{2, c}}));
      rules.push_back(ins({{0, Lp}, {1, n}}, {{2, x}}));
    }
  for (Symbol a : sweepA) {
    const Symbol c = comp(a, qfp, E, R);
    rules.push_back(ins({{0, c}, {1, R}}, {{2, Rp}}));
    // Deleting R needs the left neighbour in place, or a pending write
    // from the last move could be skipped.
    rules.push_back(del({{0, a}, {1, c}}, {{2, R}}));
    rules.push_back(ins({{0, c}, {2, Rp}}, {{1, Ep}}));
    rules.push_back(del({{1, Ep}, {2, Rp}}, {{0, c}}));
  }
  rules.push_back(ins({{1, Ep}, {2, Rp}}, {{0, Ep}}));
  rules.push_back(del({{0, Ep}, {1, Ep}}, {{2, Rp}}));
  rules.push_back(del({}, {{0, Ep}}));
  rules.push_back(del({}, {{0, Lp}}));

  rules.push_back(ins({{0, R}}, {{1, F}}));
  rules.push_back(ins({{0, Rp}}, {{1, F}}));
  rules.push_back(ins({{0, F}}, {{1, F}}));

  dedupe(rules, [](const Rule& a, const Rule& b) { return a == b; });
  for (const auto& r : rules)
    if (r.norm() > 2) throw ContractError("emitted rule of norm > 2: " + r.to_text());

  std::vector<Symbol> alphabet(V);
  for (Symbol s : {L, R, Lp, Rp, Ep, F}) alphabet.push_back(s);
  for (const auto& r : rules)
    for (Symbol s : r.symbols()) alphabet.push_back(s);
  const Array1D axiom = Array1D::from_row(0, {L, E, comp(E, m.initial, E, E), E, R});
  return Grammar(std::move(alphabet), m.input, axiom, std::move(rules));
}

// ------------------------------------------------------------- audits

Audit audit(const Grammar& g) {
  Audit a;
  a.rules = g.rules().size();
  for (const auto& r : g.rules()) {
    a.max_norm = std::max(a.max_norm, r.norm());
    if (r.kind() != RuleKind::insertion) a.insertion_only = false;
  }
  return a;
}

Audit audit(const PSystem& p) {
  Audit a;
  a.rules = p.rules().size();
  for (const auto& r : p.rules()) {
    a.max_norm = std::max(a.max_norm, r.rule.norm());
    if (r.rule.kind() != RuleKind::insertion) a.insertion_only = false;
  }
  a.height = tree_height(p);
  a.simple = is_simple(p);
  return a;
}

std::string describe_audit(const Audit& a, bool psystem) {
  std::string out = "rules: " + std::to_string(a.rules) + "\nmax_norm: " + std::to_string(a.max_norm) +
                    "\ninsertion_only: " + (a.insertion_only ? "true" : "false") + '\n';
  if (psystem) {
    out += "tree_height: " + std::to_string(a.height) + '\n';
    out += std::string("simple: ") + (a.simple ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace agw

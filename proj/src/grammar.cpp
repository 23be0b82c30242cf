#include "agw/grammar.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>

#include "agw/error.hpp"
#include "agw/textio.hpp"

namespace agw {

std::vector<Symbol> sorted_symbols(std::vector<Symbol> symbols) {
  symbols.erase(std::remove(symbols.begin(), symbols.end(), Symbol::blank()), symbols.end());
  std::sort(symbols.begin(), symbols.end(), SymbolTextLess{});
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  return symbols;
}

Grammar::Grammar(std::vector<Symbol> alphabet, std::vector<Symbol> terminals, Array1D axiom, std::vector<Rule> rules)
    : alphabet_(sorted_symbols(std::move(alphabet))),
      terminals_(sorted_symbols(std::move(terminals))),
      axiom_(axiom.normalized()) {
  std::unordered_set<Symbol> in_v(alphabet_.begin(), alphabet_.end());
  for (Symbol t : terminals_) {
    if (!in_v.count(t)) throw ValidationError("terminal '" + std::string(t.token()) + "' is not in the alphabet");
    if (t.id() >= terminal_by_id_.size()) terminal_by_id_.resize(t.id() + 1, false);
    terminal_by_id_[t.id()] = true;
  }
  for (const auto& [pos, sym] : axiom_.cells())
    if (!in_v.count(sym)) throw ValidationError("axiom symbol '" + std::string(sym.token()) + "' is not in the alphabet");
  for (const auto& r : rules)
    for (Symbol s : r.symbols())
      if (!in_v.count(s))
        throw ValidationError("rule '" + r.to_text() + "' uses symbol '" + std::string(s.token()) +
                              "' outside the alphabet");
  rule_set_ = RuleSet(std::move(rules));
}

bool Grammar::is_terminal(Symbol s) const noexcept {
  return s.id() < terminal_by_id_.size() && terminal_by_id_[s.id()];
}

bool Grammar::is_terminal_array(const Array1D& a) const noexcept {
  for (Symbol s : a.row())
    if (!s.is_blank() && !is_terminal(s)) return false;
  return true;
}

Grammar parse_grammar(std::string_view text) {
  std::optional<std::vector<Symbol>> alphabet, terminals;
  std::optional<Array1D> axiom;
  std::vector<Rule> rules;

  for (const auto& line : content_lines(text)) {
    try {
      auto [key, value] = split_key(line.text);
      if (key == "alphabet") {
        if (alphabet) throw ParseError("duplicate 'alphabet:'");
        alphabet = parse_symbol_list(value);
      } else if (key == "terminals") {
        if (terminals) throw ParseError("duplicate 'terminals:'");
        terminals = parse_symbol_list(value);
      } else if (key == "axiom") {
        if (axiom) throw ParseError("duplicate 'axiom:'");
        axiom = parse_array(value);
      } else if (key.empty() && line.text.substr(0, 5) == "rule ") {
        rules.push_back(parse_rule(line.text.substr(5)));
      } else if (key == "membranes") {
        throw ParseError("this is a P-system file, not a grammar file");
      } else {
        throw ParseError("unexpected line '" + std::string(line.text) + "'");
      }
    } catch (const ParseError& e) {
      if (e.line() > 0) throw;
      throw ParseError(e.what(), line.number);
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line.number);
    }
  }
  if (!alphabet) throw ParseError("grammar file lacks 'alphabet:'");
  if (!terminals) throw ParseError("grammar file lacks 'terminals:'");
  if (!axiom) throw ParseError("grammar file lacks 'axiom:'");
  return Grammar(std::move(*alphabet), std::move(*terminals), std::move(*axiom), std::move(rules));
}

std::string serialize_grammar(const Grammar& g) {
  std::string out;
  out += kFormatHeader;
  out += '\n';
  out += "alphabet: " + join_symbols(g.alphabet()) + '\n';
  out += "terminals: " + join_symbols(g.terminals()) + '\n';
  out += g.axiom().empty() ? std::string("axiom:\n") : "axiom: " + render_array(g.axiom()) + '\n';
  for (const auto& r : g.rules()) out += "rule " + r.to_text() + '\n';
  return out;
}

}  // namespace agw

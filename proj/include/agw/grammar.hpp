#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "agw/array.hpp"
#include "agw/rule.hpp"

namespace agw {

/// A sequential array grammar (V, T, axiom, P).
///
/// The alphabet is kept sorted by token text. Construction validates that
/// T and every symbol of the axiom and of the rules belong to V.
class Grammar {
public:
  Grammar(std::vector<Symbol> alphabet, std::vector<Symbol> terminals, Array1D axiom, std::vector<Rule> rules);

  const std::vector<Symbol>& alphabet() const noexcept { return alphabet_; }
  const std::vector<Symbol>& terminals() const noexcept { return terminals_; }
  const Array1D& axiom() const noexcept { return axiom_; }
  const std::vector<Rule>& rules() const noexcept { return rule_set_.rules(); }
  const RuleSet& rule_set() const noexcept { return rule_set_; }

  bool is_terminal(Symbol s) const noexcept;
  /// True iff every occupied cell holds a terminal.
  bool is_terminal_array(const Array1D& a) const noexcept;

private:
  std::vector<Symbol> alphabet_;
  std::vector<Symbol> terminals_;
  std::vector<bool> terminal_by_id_;
  Array1D axiom_;
  RuleSet rule_set_;
};

/// Sorted, de-duplicated copy (by token text) with the blank removed.
std::vector<Symbol> sorted_symbols(std::vector<Symbol> symbols);

/// Grammar file:
///   format: agw/1
///   alphabet: <tokens>
///   terminals: <tokens>
///   axiom: <array literal>
///   rule [<label>:] ins|del|cls ...
Grammar parse_grammar(std::string_view text);
std::string serialize_grammar(const Grammar& g);

}  // namespace agw

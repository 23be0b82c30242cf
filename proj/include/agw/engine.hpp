#pragma once

#include <vector>

#include "agw/grammar.hpp"
#include "agw/search.hpp"

namespace agw {

enum class Mode {
  star,  ///< every reachable terminal array
  t,     ///< reachable terminal arrays to which no rule applies
};

/// One derivation step: every array obtained by applying one rule at one
/// anchor, canonical and sorted by rendered text.
std::vector<Array1D> successors(const Grammar& g, const Array1D& a);

bool is_halting(const Grammar& g, const Array1D& a);

/// Arrays derivable from the axiom within the budget (terminal or not).
LangResult reach(const Grammar& g, const Budget& b, unsigned jobs = 1);

LangResult language(const Grammar& g, Mode mode, const Budget& b, unsigned jobs = 1);

}  // namespace agw

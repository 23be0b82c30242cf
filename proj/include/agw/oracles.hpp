#pragma once

#include <string>
#include <vector>

#include "agw/constructions.hpp"
#include "agw/search.hpp"

namespace agw {

struct PcpSolution {
  std::vector<std::size_t> indices;  ///< 1-based
  std::string word;
};

/// Primitive solutions with at most max_indices indices: sequences whose
/// two concatenations agree while no proper prefix does. Every other
/// solution is a concatenation of these. Ordered by length, then
/// lexicographically.
std::vector<PcpSolution> pcp_solutions(const PCPInstance& inst, std::size_t max_indices);

/// { L L' h(w) R R' } over solution words w whose image fits in
/// b.max_cells cells, i.e. |w| <= (max_cells - 4) / 2.
LangResult pcp_language(const PCPInstance& inst, const Budget& b);

/// Tapes of halting runs from the empty tape, as arrays (blank cells
/// absent), keeping only tapes whose non-blank cells are input symbols.
/// max_cells caps non-blank cells, max_extent caps the span of tape and
/// head, max_steps caps run length.
LangResult tm_generate(const TuringMachine& m, const Budget& b);

/// *-mode language of a grammar of classical rules, computed directly.
LangResult arba_language(const Grammar& g, const Budget& b);

struct EquivalenceReport {
  enum class Verdict { equal, differ, inconclusive };
  Verdict verdict = Verdict::equal;
  std::uint64_t region = 0;
  std::vector<Array1D> left_only, right_only, both;
  std::vector<std::string> notes;
};

/// Compares the parts of two results with at most `region` cells.
///
/// A side is conclusive when it is complete and was computed with a cell
/// cap of at least `region`. An array found on one side only is a
/// difference if the other side is conclusive; the verdict is EQUAL when
/// there are no such arrays and both sides are conclusive.
EquivalenceReport compare_languages(const LangResult& left, const LangResult& right, std::uint64_t region);

std::string verdict_name(EquivalenceReport::Verdict v);
/// `verdict:` line, then notes, then sorted `both:` / `left_only:` /
/// `right_only:` lines.
std::string serialize_report(const EquivalenceReport& r);

}  // namespace agw

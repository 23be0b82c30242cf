#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "agw/grammar.hpp"
#include "agw/psystem.hpp"

namespace agw {

// ---------------------------------------------------------------- PCP

/// A Post Correspondence instance; letters are single-character tokens.
struct PCPInstance {
  std::vector<std::string> u;
  std::vector<std::string> v;

  std::size_t size() const noexcept { return u.size(); }
  /// Letters used by u and v, sorted.
  std::vector<Symbol> letters() const;
  void validate() const;
};

/// PCP file: header, then one `<u_i> <v_i>` line per pair.
PCPInstance parse_pcp(std::string_view text);
std::string serialize_pcp(const PCPInstance& inst);

/// Insertion-only P system of tree height 1 whose halting results are
/// L L' h(w) R R' for the solution words w, where h(a) = a a'.
PSystem compile_pcp(const PCPInstance& inst);

// --------------------------------------------------------------- ARBA

struct NormalFormReport {
  bool accepted = true;
  std::vector<std::string> problems;
};

/// Checks that every rule is A -> B or A v D -> B v C with |v| = 1 (cell
/// 0 carries A), and that the axiom is one non-terminal cell.
NormalFormReport check_normal_form(const Grammar& g);

/// l: A! v D -> B v C!, stored unbarred.
struct MarkedRule {
  std::string label;
  Symbol a, d, b, c;
  int v = 1;

  std::string to_text() const;
  friend bool operator==(const MarkedRule&, const MarkedRule&) = default;
};

/// Blank replaced by E, A -> B expanded over neighbours, bar-move rules
/// added; labels r<index> in sorted order. Throws ValidationError when
/// the normal form check fails.
std::vector<MarkedRule> prepare_marked_rules(const Grammar& g);

/// Simple P system of tree height 2 with insertion and deletion rules of
/// norm at most 1 whose t-language equals the *-language of g.
PSystem compile_arba_to_psystem(const Grammar& g);

// ----------------------------------------------------------------- TM

struct Transition {
  std::string from;
  Symbol read;
  std::string to;
  Symbol write;
  char move = 'R';  ///< 'L' or 'R'
};

struct TuringMachine {
  std::vector<std::string> states;
  std::vector<Symbol> tape;    ///< V, includes the blank
  std::vector<Symbol> input;   ///< T
  Symbol blank;                ///< E
  std::string initial;
  std::string final_state;
  std::vector<Transition> delta;

  void validate() const;
};

/// TM file:
///   states: q0 q1 qf
///   tape: E a
///   input: a
///   blank: E
///   init: q0
///   final: qf
///   delta: q0 E -> q1 a R
TuringMachine parse_tm(std::string_view text);

/// Insertion/deletion grammar of norm at most 2 whose t-language is the
/// set of terminal tapes the machine can halt with.
Grammar compile_tm_to_grammar(const TuringMachine& m);

// ------------------------------------------------------------- audits

struct Audit {
  std::size_t rules = 0;
  std::int64_t max_norm = 0;
  bool insertion_only = true;
  std::size_t height = 0;  ///< P systems only
  bool simple = true;      ///< P systems only
};

Audit audit(const Grammar& g);
Audit audit(const PSystem& p);
std::string describe_audit(const Audit& a, bool psystem);

}  // namespace agw

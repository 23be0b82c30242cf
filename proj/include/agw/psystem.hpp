#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agw/array.hpp"
#include "agw/engine.hpp"
#include "agw/grammar.hpp"
#include "agw/rule.hpp"
#include "agw/search.hpp"

namespace agw {

/// Membrane structure: a rooted tree with unique labels. Nodes are stored
/// in pre-order, so node 0 is the skin.
class MembraneTree {
public:
  /// Parses nested brackets, e.g. `[0 [I1 [I2]] [F1 [F2]]]`.
  static MembraneTree parse(std::string_view text);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t node) const { return labels_[node]; }
  std::optional<std::size_t> find(std::string_view label) const;
  std::optional<std::size_t> parent(std::size_t node) const;
  const std::vector<std::size_t>& children(std::size_t node) const { return children_[node]; }

  /// Edge count from the skin to the deepest node.
  std::size_t height() const;
  std::string to_text() const;

private:
  std::vector<std::string> labels_;
  std::vector<std::optional<std::size_t>> parent_;
  std::vector<std::vector<std::size_t>> children_;
};

struct Target {
  enum class Kind { here, out, in, in_label };
  Kind kind = Kind::here;
  std::string label;  ///< only for in_label

  static Target here() { return {Kind::here, {}}; }
  static Target out() { return {Kind::out, {}}; }
  static Target in() { return {Kind::in, {}}; }
  static Target in_label(std::string l) { return {Kind::in_label, std::move(l)}; }

  std::string to_text() const;
};

struct TargetedRule {
  std::string membrane;
  Rule rule;
  Target target;
};

/// A sequential P system: one array object moving through the membrane
/// tree. Construction validates membranes, targets and the alphabet.
class PSystem {
public:
  PSystem(std::vector<Symbol> alphabet, std::vector<Symbol> terminals, MembraneTree tree,
          std::vector<TargetedRule> rules, std::string initial, Array1D axiom);

  const std::vector<Symbol>& alphabet() const noexcept { return alphabet_; }
  const std::vector<Symbol>& terminals() const noexcept { return terminals_; }
  const MembraneTree& tree() const noexcept { return tree_; }
  const std::vector<TargetedRule>& rules() const noexcept { return rules_; }
  const std::string& initial_label() const noexcept { return initial_; }
  std::size_t initial() const noexcept { return initial_node_; }
  const Array1D& axiom() const noexcept { return axiom_; }

  bool is_terminal_array(const Array1D& a) const noexcept;

  struct Compiled {
    RuleSet rules;
    std::vector<Target> targets;
    std::vector<std::size_t> in_label_nodes;  // parallel to targets
  };
  const Compiled& membrane_rules(std::size_t node) const { return compiled_[node]; }

private:
  std::vector<Symbol> alphabet_;
  std::vector<Symbol> terminals_;
  std::vector<bool> terminal_by_id_;
  MembraneTree tree_;
  std::vector<TargetedRule> rules_;
  std::string initial_;
  std::size_t initial_node_ = 0;
  Array1D axiom_;
  std::vector<Compiled> compiled_;
};

struct Configuration {
  Array1D array;
  std::uint32_t membrane = 0;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& c) const noexcept { return c.array.hash() * 31 + c.membrane; }
};

/// Every configuration reachable in one step, sorted (membrane, array text).
/// A rule targeting `out` from the skin discards the object.
std::vector<Configuration> psystem_successors(const PSystem& p, const Configuration& c);

/// True iff no rule of the current membrane applies.
bool is_halting(const PSystem& p, const Configuration& c);

struct HaltingConfiguration {
  std::string membrane;
  Array1D array;
  bool terminal = false;
};

struct PsRun {
  LangResult lang;
  /// Every halting configuration met, sorted; non-terminal ones are
  /// reported here but are not results. With Budget::prune_dead,
  /// configurations that cannot yield a result are never met.
  std::vector<HaltingConfiguration> halting;
};

PsRun run_t_bounded(const PSystem& p, const Budget& b, unsigned jobs = 1);

std::size_t tree_height(const PSystem& p);
/// True iff no rule uses an in(<label>) target.
bool is_simple(const PSystem& p);

/// P-system file:
///   format: agw/1
///   membranes: [0 [1] [2]]
///   init: 0
///   alphabet: <tokens>
///   terminals: <tokens>
///   axiom: <array literal>
///   rule @<membrane> [<label>:] ins|del|cls ... -> here|out|in|in(<label>)
PSystem parse_psystem(std::string_view text);
std::string serialize_psystem(const PSystem& p);

/// Wraps a grammar into a one-membrane system whose rules all target here.
PSystem single_membrane(const Grammar& g);

}  // namespace agw

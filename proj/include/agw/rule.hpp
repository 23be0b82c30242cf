#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "agw/array.hpp"

namespace agw {

enum class RuleKind { insertion, deletion, classical };

/// One cell of a rule pattern. A blank entry is an explicit requirement
/// that the position be unoccupied.
struct PatternCell {
  Position offset = 0;
  Symbol entry;

  friend bool operator==(const PatternCell&, const PatternCell&) = default;
};

/// An array rewriting rule in one of three forms.
///
///   insertion  in the context of `selector`, write `payload` into
///              positions that are all unoccupied
///   deletion   in the context of `selector`, erase `payload`, whose
///              symbols must be present
///   classical  `selector` (left side) and `payload` (right side) are
///              defined over the same window; the window is overwritten
///
/// Cells are kept sorted by offset. Rules are immutable values.
class Rule {
public:
  static Rule insertion(std::vector<PatternCell> selector, std::vector<PatternCell> payload,
                        std::string label = {});
  static Rule deletion(std::vector<PatternCell> selector, std::vector<PatternCell> payload,
                       std::string label = {});
  static Rule classical(std::vector<PatternCell> lhs, std::vector<PatternCell> rhs, std::string label = {});

  RuleKind kind() const noexcept { return kind_; }
  const std::vector<PatternCell>& selector() const noexcept { return selector_; }
  const std::vector<PatternCell>& payload() const noexcept { return payload_; }
  const std::string& label() const noexcept { return label_; }

  /// Max pairwise distance over all pattern offsets (0 for one offset).
  std::int64_t norm() const noexcept { return max_offset_ - min_offset_; }
  Position min_offset() const noexcept { return min_offset_; }
  Position max_offset() const noexcept { return max_offset_; }

  /// True when the rule does not require any symbol to be present, so its
  /// anchors are drawn from a bounded window around the array.
  bool context_free_anchor() const noexcept { return requirements_.empty(); }

  /// Every anchor v at which the rule applies, ascending.
  std::vector<Position> match_sites(const Array1D& a) const;
  bool applies_at(const Array1D& a, Position v) const;
  /// Applies at `v` and returns the canonical result. Throws ContractError
  /// when the rule does not apply at `v`.
  Array1D apply_at(const Array1D& a, Position v) const;
  /// Same as apply_at but keeps the caller's coordinates.
  Array1D apply_in_place(const Array1D& a, Position v) const;

  /// Symbol-requiring cells (offset, symbol) used for anchoring.
  const std::vector<PatternCell>& requirements() const noexcept { return requirements_; }

  /// The window of anchors tried for context-free-anchored rules.
  std::pair<Position, Position> anchor_window(const Array1D& a) const;

  /// Every non-blank symbol mentioned by the rule.
  std::vector<Symbol> symbols() const;

  /// `ins sel{..} put{..}` / `del sel{..} rem{..}` / `cls lhs{..} rhs{..}`,
  /// with the label prefix when present.
  std::string to_text() const;

  friend bool operator==(const Rule& a, const Rule& b) {
    return a.kind_ == b.kind_ && a.selector_ == b.selector_ && a.payload_ == b.payload_ && a.label_ == b.label_;
  }

private:
  Rule() = default;
  void finish();

  RuleKind kind_ = RuleKind::insertion;
  std::vector<PatternCell> selector_;
  std::vector<PatternCell> payload_;
  std::string label_;
  std::vector<PatternCell> requirements_;
  std::vector<Position> blank_offsets_;
  Position min_offset_ = 0;
  Position max_offset_ = 0;
};

/// Parses the rule body (`ins ...`, `del ...`, `cls ...`), optionally
/// preceded by `<label>:`. Throws ParseError / ValidationError.
Rule parse_rule(std::string_view text);

std::int64_t rule_norm(const Rule& r);
std::vector<Position> match_sites(const Rule& r, const Array1D& a);
Array1D apply_at(const Rule& r, const Array1D& a, Position v);

/// The array rules corresponding to left/right insertion and deletion of
/// single symbols over `alphabet`: for a, b in the alphabet, right-insert
/// sel{0=b} put{1=a}, left-insert sel{0=b} put{-1=a}; for a, right-delete
/// sel{1=#} rem{0=a} and left-delete sel{-1=#} rem{0=a}.
std::vector<Rule> string_ops_to_rules(const std::vector<Symbol>& alphabet);

/// A rule list with an index from symbols to the rules anchored on them.
/// Matching through the index gives exactly the anchors of
/// Rule::match_sites, rule by rule.
class RuleSet {
public:
  RuleSet() = default;
  explicit RuleSet(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const noexcept { return rules_; }
  std::size_t size() const noexcept { return rules_.size(); }

  /// Calls `fn(rule_index, anchor)` for every applicable (rule, anchor).
  template <typename Fn>
  void for_each_match(const Array1D& a, Fn&& fn) const;

  /// True iff some rule applies somewhere.
  bool any_match(const Array1D& a) const;

private:
  struct Keyed {
    std::uint32_t rule;
    Position offset;
  };
  std::vector<Rule> rules_;
  std::vector<std::vector<Keyed>> by_symbol_;  // indexed by Symbol::id()
  std::vector<std::uint32_t> unkeyed_;
};

template <typename Fn>
void RuleSet::for_each_match(const Array1D& a, Fn&& fn) const {
  const auto row = a.row();
  for (std::size_t i = 0; i < row.size(); ++i) {
    const auto id = row[i].id();
    if (id == 0 || id >= by_symbol_.size()) continue;
    const Position pos = a.min_pos() + static_cast<Position>(i);
    for (const Keyed& k : by_symbol_[id]) {
      const Position v = pos - k.offset;
      if (rules_[k.rule].applies_at(a, v)) fn(static_cast<std::size_t>(k.rule), v);
    }
  }
  for (std::uint32_t r : unkeyed_) {
    auto [lo, hi] = rules_[r].anchor_window(a);
    for (Position v = lo; v <= hi; ++v)
      if (rules_[r].applies_at(a, v)) fn(static_cast<std::size_t>(r), v);
  }
}

}  // namespace agw

#pragma once

#include <cstddef>
#include <vector>

#include "agw/array.hpp"

namespace agw {

class Grammar;
class PSystem;

/// Static dead-state detection.
///
/// For a non-terminal X and a membrane m, X is doomed in m when no
/// computation starting in m with X present can reach a configuration in
/// which X is absent and the membrane can still yield a result. The check
/// runs on an abstraction that keeps only the membrane and whether X is
/// present, so every concrete step has an abstract counterpart and the
/// verdict is sound. Rules that insert a symbol already known to be doomed
/// at their destination are dropped, and the analysis is repeated until
/// nothing changes.
///
/// With `halting_results` a result needs a membrane that can halt, i.e.
/// one without a rule applicable to every array (an insertion with no
/// symbol requirement).
class DeadStateFilter {
public:
  DeadStateFilter() = default;
  DeadStateFilter(const PSystem& p, bool halting_results);
  DeadStateFilter(const Grammar& g, bool halting_results);

  /// True when `a` in `membrane` holds a doomed symbol.
  bool dead(const Array1D& a, std::size_t membrane) const noexcept {
    if (membrane >= doomed_.size()) return false;
    const auto& d = doomed_[membrane];
    for (Symbol s : a.row())
      if (s.id() < d.size() && d[s.id()]) return true;
    return false;
  }

  /// Number of (membrane, symbol) pairs found doomed.
  std::size_t doomed_pairs() const noexcept;

private:
  std::vector<std::vector<bool>> doomed_;  // [membrane][symbol id]
};

}  // namespace agw

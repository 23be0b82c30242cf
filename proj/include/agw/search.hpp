#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "agw/array.hpp"

namespace agw {

/// Caps for bounded enumeration.
///
/// max_cells, max_extent and max_steps delimit the explored region: states
/// outside it are left out without making a result incomplete. Excluded
/// states are counted, and a step cutoff is recorded in
/// LangResult::step_cut because later derivations may still reach small
/// arrays. Only max_results truncates a search and clears
/// LangResult::complete.
struct Budget {
  static constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

  std::uint64_t max_steps = 10000;
  std::uint64_t max_cells = 16;
  std::uint64_t max_extent = 64;
  std::uint64_t max_results = 10000;
  /// Drop successors that provably cannot lead to a result (see
  /// DeadStateFilter). Never changes the arrays found.
  bool prune_dead = true;

  /// Throws ValidationError unless at least one cap is finite.
  void validate() const;

  bool admits(const Array1D& a) const noexcept {
    if (a.size() > max_cells) return false;
    if (!a.empty() && static_cast<std::uint64_t>(a.max_pos() - a.min_pos()) > max_extent) return false;
    return true;
  }
};

/// Outcome of a bounded enumeration.
struct LangResult {
  /// Canonical arrays, de-duplicated, sorted by rendered text.
  std::vector<Array1D> arrays;
  /// True iff the region fixed by the cell, extent and step caps was
  /// explored exhaustively (the result cap did not cut the search short).
  bool complete = true;
  /// The max_cells cap the result was computed under.
  std::uint64_t cell_cap = Budget::kUnlimited;
  std::uint64_t states = 0;
  /// Successors dropped for leaving the cell/extent region.
  std::uint64_t excluded = 0;
  /// Successors dropped as dead ends.
  std::uint64_t pruned = 0;
  std::optional<std::string> first_excluded;
  /// Why complete is false.
  std::optional<std::string> truncation;
  /// Set when the step cap left states unexplored.
  std::optional<std::string> step_cut;
};

/// Sorts by rendered text and removes duplicates.
void sort_arrays(std::vector<Array1D>& arrays);

/// `lang` output: one rendered array per line, then `complete: true|false`.
std::string serialize_lang(const LangResult& r);

/// Longer report used by `lang --verbose` and `run-ps`.
std::string describe_search(const LangResult& r);

namespace detail {

template <typename State>
struct Expansion {
  std::vector<State> next;
  bool halting = false;
  std::uint64_t pruned = 0;
};

/// Removes dead successors after halting has been decided.
template <typename State, typename Dead>
void drop_dead(Expansion<State>& e, Dead&& dead) {
  const auto before = e.next.size();
  std::erase_if(e.next, dead);
  e.pruned += before - e.next.size();
}

struct SearchStats {
  bool complete = true;
  std::uint64_t states = 0;
  std::uint64_t excluded = 0;
  std::uint64_t pruned = 0;
  std::optional<std::string> first_excluded;
  std::optional<std::string> truncation;
  std::optional<std::string> step_cut;
};

/// Breadth-first exploration shared by grammars and P systems.
///
///   expand(s)     -> Expansion<State>, all successors before any cap
///   array_of(s)   -> const Array1D&, the array checked against caps
///   describe(s)   -> std::string, used for pruning reports
///   visit(s, exp) -> bool, true when s contributes a result
///
/// With jobs > 1 successor computation runs on worker threads, one block
/// of the frontier at a time; merging into the visited set and all
/// callbacks stay on the calling thread in frontier order, so the outcome
/// does not depend on `jobs`.
template <typename State, typename Hash, typename Expand, typename ArrayOf, typename Describe, typename Visit>
SearchStats breadth_first(const State& start, const Budget& budget, unsigned jobs, Expand&& expand,
                          ArrayOf&& array_of, Describe&& describe, Visit&& visit) {
  constexpr std::size_t kBlock = 2048;
  SearchStats stats;
  if (!budget.admits(array_of(start))) {
    stats.excluded = 1;
    stats.first_excluded = describe(start);
    return stats;
  }

  std::unordered_set<State, Hash> visited;
  visited.insert(start);
  std::vector<State> frontier{start};
  std::uint64_t results = 0;
  std::vector<Expansion<State>> block;

  for (std::uint64_t depth = 0; !frontier.empty(); ++depth) {
    std::vector<State> next;
    for (std::size_t base = 0; base < frontier.size(); base += kBlock) {
      const std::size_t count = std::min(kBlock, frontier.size() - base);
      block.assign(count, {});
      if (jobs <= 1 || count < 64) {
        for (std::size_t i = 0; i < count; ++i) block[i] = expand(frontier[base + i]);
      } else {
        std::atomic<std::size_t> cursor{0};
        auto worker = [&] {
          for (std::size_t i = cursor++; i < count; i = cursor++) block[i] = expand(frontier[base + i]);
        };
        std::vector<std::thread> pool;
        const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(count));
        for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
      }

      for (std::size_t i = 0; i < count; ++i) {
        const State& s = frontier[base + i];
        ++stats.states;
        stats.pruned += block[i].pruned;
        if (visit(s, block[i]) && ++results >= budget.max_results) {
          const bool more = base + i + 1 < frontier.size() || !next.empty() ||
                            std::any_of(block[i].next.begin(), block[i].next.end(),
                                        [&](const State& t) { return !visited.count(t); });
          if (more) {
            stats.complete = false;
            stats.truncation = "max_results reached (" + std::to_string(budget.max_results) + ")";
          }
          return stats;
        }
        for (State& t : block[i].next) {
          if (!budget.admits(array_of(t))) {
            if (!stats.first_excluded) stats.first_excluded = describe(t);
            ++stats.excluded;
            continue;
          }
          if (depth >= budget.max_steps) {
            if (!stats.step_cut && !visited.count(t))
              stats.step_cut = "max_steps reached (" + std::to_string(budget.max_steps) + "); first unexplored: " +
                               describe(t);
            continue;
          }
          if (visited.insert(t).second) next.push_back(std::move(t));
        }
      }
    }
    frontier = std::move(next);
  }
  return stats;
}

}  // namespace detail
}  // namespace agw

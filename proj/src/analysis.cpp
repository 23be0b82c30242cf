#include "agw/analysis.hpp"

#include <algorithm>
#include <map>

#include "agw/grammar.hpp"
#include "agw/psystem.hpp"

namespace agw {

namespace {

// A rule seen only through the symbols it needs, adds and removes.
struct AbstractRule {
  std::size_t from = 0;
  std::vector<std::size_t> to;
  std::vector<std::uint32_t> needs, adds, removes;
  bool always_applies = false;
};

bool has(const std::vector<std::uint32_t>& v, std::uint32_t id) { return std::find(v.begin(), v.end(), id) != v.end(); }

void add_unique(std::vector<std::uint32_t>& v, Symbol s) {
  if (!s.is_blank() && !has(v, s.id())) v.push_back(s.id());
}

AbstractRule abstract(const Rule& r, std::size_t from, std::vector<std::size_t> to) {
  AbstractRule a;
  a.from = from;
  a.to = std::move(to);
  a.always_applies = r.context_free_anchor();
  for (const auto& c : r.selector()) add_unique(a.needs, c.entry);
  switch (r.kind()) {
    case RuleKind::insertion:
      for (const auto& c : r.payload()) add_unique(a.adds, c.entry);
      break;
    case RuleKind::deletion:
      for (const auto& c : r.payload()) {
        add_unique(a.needs, c.entry);
        add_unique(a.removes, c.entry);
      }
      break;
    case RuleKind::classical: {
      std::map<Position, std::pair<Symbol, Symbol>> window;
      for (const auto& c : r.selector()) window[c.offset].first = c.entry;
      for (const auto& c : r.payload()) window[c.offset].second = c.entry;
      for (const auto& [pos, lr] : window) {
        if (lr.first == lr.second) continue;
        add_unique(a.removes, lr.first);
        add_unique(a.adds, lr.second);
      }
      break;
    }
  }
  return a;
}

std::vector<std::vector<bool>> solve(const std::vector<AbstractRule>& rules, std::size_t membranes,
                                     const std::vector<Symbol>& nonterminals, bool halting_results) {
  std::uint32_t width = 1;
  for (Symbol s : nonterminals) width = std::max(width, s.id() + 1);
  std::vector<std::vector<bool>> doomed(membranes, std::vector<bool>(width, false));

  std::vector<bool> busy(membranes, false);
  for (const auto& r : rules)
    if (r.always_applies) busy[r.from] = true;

  auto blocked = [&](const AbstractRule& r, std::size_t target) {
    return std::any_of(r.adds.begin(), r.adds.end(), [&](std::uint32_t y) { return y < width && doomed[target][y]; });
  };

  // Node (m, present) is m * 2 + present.
  std::vector<std::vector<std::size_t>> back(membranes * 2);
  std::vector<bool> live(membranes * 2);
  std::vector<std::size_t> queue;
  for (bool changed = true; changed;) {
    changed = false;
    for (Symbol x : nonterminals) {
      const std::uint32_t id = x.id();
      for (auto& b : back) b.clear();
      for (const auto& r : rules) {
        const bool needs_x = has(r.needs, id), adds_x = has(r.adds, id), removes_x = has(r.removes, id);
        for (int present = needs_x ? 1 : 0; present <= 1; ++present) {
          for (std::size_t t : r.to) {
            if (blocked(r, t)) continue;
            const std::size_t src = r.from * 2 + present;
            if (adds_x) {
              back[t * 2 + 1].push_back(src);
            } else if (removes_x && present) {
              back[t * 2].push_back(src);
              back[t * 2 + 1].push_back(src);
            } else {
              back[t * 2 + present].push_back(src);
            }
          }
        }
      }
      std::fill(live.begin(), live.end(), false);
      queue.clear();
      for (std::size_t m = 0; m < membranes; ++m)
        if (!halting_results || !busy[m]) {
          live[m * 2] = true;
          queue.push_back(m * 2);
        }
      while (!queue.empty()) {
        const std::size_t n = queue.back();
        queue.pop_back();
        for (std::size_t p : back[n])
          if (!live[p]) {
            live[p] = true;
            queue.push_back(p);
          }
      }
      for (std::size_t m = 0; m < membranes; ++m)
        if (!live[m * 2 + 1] && !doomed[m][id]) {
          doomed[m][id] = true;
          changed = true;
        }
    }
  }
  return doomed;
}

std::vector<Symbol> nonterminals_of(const std::vector<Symbol>& alphabet, const std::vector<Symbol>& terminals) {
  std::vector<Symbol> out;
  for (Symbol s : alphabet)
    if (std::find(terminals.begin(), terminals.end(), s) == terminals.end()) out.push_back(s);
  return out;
}

}  // namespace

DeadStateFilter::DeadStateFilter(const PSystem& p, bool halting_results) {
  std::vector<AbstractRule> rules;
  const MembraneTree& tree = p.tree();
  for (std::size_t m = 0; m < tree.size(); ++m) {
    const auto& mr = p.membrane_rules(m);
    const auto& rs = mr.rules.rules();
    for (std::size_t i = 0; i < rs.size(); ++i) {
      std::vector<std::size_t> to;
      switch (mr.targets[i].kind) {
        case Target::Kind::here: to = {m}; break;
        case Target::Kind::out:
          if (auto parent = tree.parent(m)) to = {*parent};
          break;
        case Target::Kind::in: to = tree.children(m); break;
        case Target::Kind::in_label: to = {mr.in_label_nodes[i]}; break;
      }
      rules.push_back(abstract(rs[i], m, std::move(to)));
    }
  }
  doomed_ = solve(rules, tree.size(), nonterminals_of(p.alphabet(), p.terminals()), halting_results);
}

DeadStateFilter::DeadStateFilter(const Grammar& g, bool halting_results) {
  std::vector<AbstractRule> rules;
  for (const Rule& r : g.rules()) rules.push_back(abstract(r, 0, {0}));
  doomed_ = solve(rules, 1, nonterminals_of(g.alphabet(), g.terminals()), halting_results);
}

std::size_t DeadStateFilter::doomed_pairs() const noexcept {
  std::size_t n = 0;
  for (const auto& row : doomed_) n += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
  return n;
}

}  // namespace agw

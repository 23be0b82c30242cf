#include "agw/oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "agw/error.hpp"

namespace agw {

// Nothing here calls Rule::apply_at, RuleSet or the search template: the
// oracles must not share rewriting code with what they validate.

std::vector<PcpSolution> pcp_solutions(const PCPInstance& inst, std::size_t max_indices) {
  inst.validate();
  std::vector<PcpSolution> out;
  struct Node {
    std::vector<std::size_t> seq;
    std::string u, v;
  };
  std::vector<Node> level{Node{}};
  for (std::size_t len = 1; len <= max_indices && !level.empty(); ++len) {
    std::vector<Node> next;
    for (const auto& node : level)
      for (std::size_t i = 0; i < inst.size(); ++i) {
        Node n{node.seq, node.u + inst.u[i], node.v + inst.v[i]};
        n.seq.push_back(i + 1);
        const std::size_t k = std::min(n.u.size(), n.v.size());
        if (n.u.compare(0, k, n.v, 0, k) != 0) continue;
        if (n.u == n.v) {
          out.push_back({n.seq, n.u});
          continue;
        }
        next.push_back(std::move(n));
      }
    level = std::move(next);
  }
  for (const auto& s : out) {
    std::string u, v;
    for (auto i : s.indices) {
      u += inst.u[i - 1];
      v += inst.v[i - 1];
    }
    if (u != v || u != s.word) throw ContractError("pcp_solutions: unsound prefix pruning");
  }
  return out;
}

LangResult pcp_language(const PCPInstance& inst, const Budget& b) {
  b.validate();
  inst.validate();
  LangResult res;
  res.cell_cap = b.max_cells;
  const std::uint64_t max_word = b.max_cells < 4 ? 0 : (b.max_cells - 4) / 2;
  std::set<std::string> words;
  std::deque<std::pair<std::pair<std::string, std::string>, std::uint64_t>> queue{{{"", ""}, 0}};
  while (!queue.empty()) {
    auto [uv, depth] = queue.front();
    queue.pop_front();
    ++res.states;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      std::string u = uv.first + inst.u[i], v = uv.second + inst.v[i];
      if (u.size() > max_word || v.size() > max_word) {
        ++res.excluded;
        continue;
      }
      const std::size_t k = std::min(u.size(), v.size());
      if (u.compare(0, k, v, 0, k) != 0) continue;
      if (depth >= b.max_steps) {
        res.step_cut = "max_steps reached (" + std::to_string(b.max_steps) + ")";
        continue;
      }
      if (u == v) words.insert(u);
      queue.push_back({{std::move(u), std::move(v)}, depth + 1});
    }
  }
  for (const auto& w : words) {
    std::vector<Symbol> row{Symbol::intern("L"), Symbol::intern("L'")};
    for (char c : w) {
      row.push_back(Symbol::intern(std::string(1, c)));
      row.push_back(Symbol::intern(std::string(1, c) + "'"));
    }
    row.push_back(Symbol::intern("R"));
    row.push_back(Symbol::intern("R'"));
    res.arrays.push_back(Array1D::from_row(0, std::move(row)));
  }
  sort_arrays(res.arrays);
  if (res.arrays.size() > b.max_results) {
    res.arrays.resize(b.max_results);
    res.complete = false;
    res.truncation = "max_results reached (" + std::to_string(b.max_results) + ")";
  }
  return res;
}

namespace {

// Sorted (position, symbol) list with no blanks.
using Tape = std::vector<std::pair<Position, Symbol>>;

Symbol tape_at(const Tape& t, Position p) {
  auto it = std::lower_bound(t.begin(), t.end(), p, [](const auto& c, Position x) { return c.first < x; });
  return it != t.end() && it->first == p ? it->second : Symbol::blank();
}

void tape_set(Tape& t, Position p, Symbol s) {
  auto it = std::lower_bound(t.begin(), t.end(), p, [](const auto& c, Position x) { return c.first < x; });
  const bool present = it != t.end() && it->first == p;
  if (s.is_blank()) {
    if (present) t.erase(it);
  } else if (present) {
    it->second = s;
  } else {
    t.insert(it, {p, s});
  }
}

struct TapeLess {
  bool operator()(const Tape& a, const Tape& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
      return x.first != y.first ? x.first < y.first : x.second.id() < y.second.id();
    });
  }
};

std::string tape_key(const Tape& t) {
  std::string k;
  const Position base = t.empty() ? 0 : t.front().first;
  for (const auto& [p, s] : t) k += std::to_string(p - base) + ":" + std::to_string(s.id()) + ";";
  return k;
}

void note_excluded(LangResult& res, const std::string& what) {
  if (!res.first_excluded) res.first_excluded = what;
  ++res.excluded;
}

std::string tape_text(const Tape& t) {
  if (t.empty()) return "";
  return render_array(Array1D::from_cells(t));
}

}  // namespace

LangResult tm_generate(const TuringMachine& m, const Budget& b) {
  b.validate();
  m.validate();
  LangResult res;
  res.cell_cap = b.max_cells;
  std::set<Symbol, SymbolTextLess> inputs(m.input.begin(), m.input.end());

  struct Config {
    std::string state;
    Position head;
    Tape tape;  // non-blank cells only
  };
  auto key = [](const Config& c) {
    const Position base = c.tape.empty() ? c.head : std::min(c.head, c.tape.front().first);
    return c.state + "|" + std::to_string(c.head - base) + "|" + tape_key(c.tape) + "|" +
           std::to_string(c.tape.empty() ? 0 : c.tape.front().first - base);
  };
  auto within = [&](const Config& c) {
    if (c.tape.size() > b.max_cells) return false;
    Position lo = c.head, hi = c.head;
    if (!c.tape.empty()) {
      lo = std::min(lo, c.tape.front().first);
      hi = std::max(hi, c.tape.back().first);
    }
    return static_cast<std::uint64_t>(hi - lo) <= b.max_extent;
  };

  std::map<std::pair<std::string, std::uint32_t>, std::vector<const Transition*>> delta;
  for (const auto& t : m.delta) delta[{t.from, t.read.id()}].push_back(&t);

  std::set<std::string> seen;
  std::set<std::string> results;
  std::vector<Config> frontier{Config{m.initial, 0, {}}};
  seen.insert(key(frontier.front()));
  bool stop = false;
  for (std::uint64_t depth = 0; !frontier.empty() && !stop; ++depth) {
    std::vector<Config> next;
    for (const auto& c : frontier) {
      if (stop) break;
      ++res.states;
      if (c.state == m.final_state) {
        bool terminal = true;
        Tape cells;
        for (const auto& [p, s] : c.tape) {
          if (s == m.blank) continue;
          if (!inputs.count(s)) terminal = false;
          cells.push_back({p, s});
        }
        if (terminal && results.insert(tape_text(cells)).second) {
          res.arrays.push_back(cells.empty() ? Array1D{} : Array1D::from_cells(cells));
          if (res.arrays.size() >= b.max_results) {
            res.complete = false;
            res.truncation = "max_results reached (" + std::to_string(b.max_results) + ")";
            stop = true;
            break;
          }
        }
        continue;
      }
      Symbol read = tape_at(c.tape, c.head);
      if (read.is_blank()) read = m.blank;
      auto it = delta.find({c.state, read.id()});
      if (it == delta.end()) continue;
      for (const Transition* t : it->second) {
        Config n{t->to, c.head + (t->move == 'R' ? 1 : -1), c.tape};
        tape_set(n.tape, c.head, t->write == m.blank ? Symbol::blank() : t->write);
        if (!within(n)) {
          note_excluded(res, n.state + " @" + std::to_string(n.head) + " [" + tape_text(n.tape) + "]");
          continue;
        }
        auto k = key(n);
        if (seen.count(k)) continue;
        if (depth >= b.max_steps) {
          res.step_cut = "max_steps reached (" + std::to_string(b.max_steps) + ")";
          continue;
        }
        seen.insert(std::move(k));
        next.push_back(std::move(n));
      }
    }
    frontier = std::move(next);
  }
  sort_arrays(res.arrays);
  return res;
}

LangResult arba_language(const Grammar& g, const Budget& b) {
  b.validate();
  LangResult res;
  res.cell_cap = b.max_cells;
  std::set<Symbol, SymbolTextLess> terminals(g.terminals().begin(), g.terminals().end());

  struct Classical {
    std::vector<std::pair<Position, Symbol>> lhs, rhs;
  };
  std::vector<Classical> rules;
  for (const auto& r : g.rules()) {
    if (r.kind() != RuleKind::classical)
      throw ValidationError("arba oracle: rule '" + r.to_text() + "' is not classical");
    Classical c;
    for (const auto& cell : r.selector()) c.lhs.push_back({cell.offset, cell.entry});
    for (const auto& cell : r.payload()) c.rhs.push_back({cell.offset, cell.entry});
    rules.push_back(std::move(c));
  }

  auto normalize_tape = [](Tape t) {
    if (!t.empty()) {
      const Position base = t.front().first;
      for (auto& c : t) c.first -= base;
    }
    return t;
  };
  auto within = [&](const Tape& t) {
    if (t.size() > b.max_cells) return false;
    return t.empty() || static_cast<std::uint64_t>(t.back().first - t.front().first) <= b.max_extent;
  };
  auto anchors = [](const Classical& r, const Tape& t) {
    std::set<Position> out;
    Position lo = 0, hi = 0;
    for (const auto& [o, s] : r.lhs) {
      lo = std::min(lo, o);
      hi = std::max(hi, o);
    }
    auto req = std::find_if(r.lhs.begin(), r.lhs.end(), [](const auto& c) { return !c.second.is_blank(); });
    if (req != r.lhs.end()) {
      for (const auto& [p, s] : t)
        if (s == req->second) out.insert(p - req->first);
    } else if (t.empty()) {
      out.insert(-lo);
    } else {
      for (Position v = t.front().first - 1 - hi; v <= t.back().first + 1 - lo; ++v) out.insert(v);
    }
    return out;
  };

  std::set<Tape, TapeLess> seen;
  Tape start;
  for (const auto& c : g.axiom().cells()) start.push_back(c);
  start = normalize_tape(std::move(start));
  if (!within(start)) {
    note_excluded(res, tape_text(start));
    return res;
  }
  seen.insert(start);
  std::vector<Tape> frontier{start};
  std::set<Tape, TapeLess> found;
  for (std::uint64_t depth = 0; !frontier.empty(); ++depth) {
    std::vector<Tape> next;
    for (const auto& t : frontier) {
      ++res.states;
      if (std::all_of(t.begin(), t.end(), [&](const auto& c) { return terminals.count(c.second) > 0; })) {
        found.insert(t);
        if (found.size() >= b.max_results) {
          res.complete = false;
          res.truncation = "max_results reached (" + std::to_string(b.max_results) + ")";
          next.clear();
          break;
        }
      }
      for (const auto& r : rules)
        for (Position v : anchors(r, t)) {
          bool ok = true;
          for (const auto& [o, s] : r.lhs)
            if (tape_at(t, v + o) != s) {
              ok = false;
              break;
            }
          if (!ok) continue;
          Tape n = t;
          for (const auto& [o, s] : r.rhs) tape_set(n, v + o, s);
          n = normalize_tape(std::move(n));
          if (!within(n)) {
            note_excluded(res, tape_text(n));
            continue;
          }
          if (seen.count(n)) continue;
          if (depth >= b.max_steps) {
            res.step_cut = "max_steps reached (" + std::to_string(b.max_steps) + ")";
            continue;
          }
          seen.insert(n);
          next.push_back(std::move(n));
        }
    }
    frontier = std::move(next);
  }
  for (const auto& t : found) res.arrays.push_back(t.empty() ? Array1D{} : Array1D::from_cells(t));
  sort_arrays(res.arrays);
  return res;
}

EquivalenceReport compare_languages(const LangResult& left, const LangResult& right, std::uint64_t region) {
  EquivalenceReport rep;
  rep.region = region;
  auto restrict = [&](const LangResult& r) {
    std::map<std::string, Array1D> out;
    for (const auto& a : r.arrays)
      if (a.size() <= region) out.emplace(render_array(a), a);
    return out;
  };
  auto l = restrict(left), r = restrict(right);
  for (const auto& [k, a] : l) (r.count(k) ? rep.both : rep.left_only).push_back(a);
  for (const auto& [k, a] : r)
    if (!l.count(k)) rep.right_only.push_back(a);

  auto conclusive = [&](const LangResult& side, const char* name) {
    bool ok = true;
    if (!side.complete) {
      ok = false;
      rep.notes.push_back(std::string(name) + ": truncated (" + side.truncation.value_or("incomplete") + ")");
    }
    if (side.step_cut) {
      ok = false;
      rep.notes.push_back(std::string(name) + ": step cap cut the search (" + *side.step_cut + ")");
    }
    if (side.cell_cap < region) {
      ok = false;
      rep.notes.push_back(std::string(name) + ": cell cap " + std::to_string(side.cell_cap) + " is below the region");
    }
    if (ok) rep.notes.push_back(std::string(name) + ": complete");
    return ok;
  };
  const bool lc = conclusive(left, "left"), rc = conclusive(right, "right");
  // right_only arrays are missing from the left side, and vice versa
  const bool differ = (!rep.right_only.empty() && lc) || (!rep.left_only.empty() && rc);
  if (differ)
    rep.verdict = EquivalenceReport::Verdict::differ;
  else if (rep.left_only.empty() && rep.right_only.empty() && lc && rc)
    rep.verdict = EquivalenceReport::Verdict::equal;
  else
    rep.verdict = EquivalenceReport::Verdict::inconclusive;
  return rep;
}

std::string verdict_name(EquivalenceReport::Verdict v) {
  switch (v) {
    case EquivalenceReport::Verdict::equal: return "EQUAL";
    case EquivalenceReport::Verdict::differ: return "DIFFER";
    case EquivalenceReport::Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return {};
}

std::string serialize_report(const EquivalenceReport& r) {
  std::string out = "verdict: " + verdict_name(r.verdict) + '\n';
  out += "region: " + std::to_string(r.region) + '\n';
  for (const auto& n : r.notes) out += "note: " + n + '\n';
  auto lines = [&](const char* tag, const std::vector<Array1D>& arrays) {
    for (const auto& a : arrays) {
      const std::string text = render_array(a);
      out += text.empty() ? std::string(tag) + ":\n" : std::string(tag) + ": " + text + '\n';
    }
  };
  lines("both", r.both);
  lines("left_only", r.left_only);
  lines("right_only", r.right_only);
  return out;
}

}  // namespace agw

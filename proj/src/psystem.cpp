#include "agw/psystem.hpp"

#include <algorithm>
#include <unordered_set>

#include "agw/analysis.hpp"
#include "agw/error.hpp"
#include "agw/grammar.hpp"
#include "agw/textio.hpp"

namespace agw {

namespace {

bool is_label_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

void check_label(std::string_view l) {
  if (l.empty() || !std::all_of(l.begin(), l.end(), is_label_char))
    throw ParseError("invalid membrane label '" + std::string(l) + "'");
}

}  // namespace

MembraneTree MembraneTree::parse(std::string_view text) {
  MembraneTree t;
  std::vector<std::size_t> stack;
  std::size_t i = 0;
  bool closed_root = false;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (closed_root) throw ParseError("membrane structure: text after the skin's closing bracket");
    if (text[i] == '[') {
      ++i;
      skip_ws();
      std::size_t j = i;
      while (j < text.size() && is_label_char(text[j])) ++j;
      std::string label(text.substr(i, j - i));
      if (label.empty()) throw ParseError("membrane structure: '[' without a label");
      if (t.find(label)) throw ParseError("membrane structure: duplicate label '" + label + "'");
      const std::size_t node = t.labels_.size();
      t.labels_.push_back(label);
      t.children_.emplace_back();
      if (stack.empty()) {
        if (node != 0) throw ParseError("membrane structure: more than one outermost membrane");
        t.parent_.push_back(std::nullopt);
      } else {
        t.parent_.push_back(stack.back());
        t.children_[stack.back()].push_back(node);
      }
      stack.push_back(node);
      i = j;
    } else if (text[i] == ']') {
      if (stack.empty()) throw ParseError("membrane structure: unbalanced ']'");
      stack.pop_back();
      ++i;
      if (stack.empty()) closed_root = true;
    } else {
      throw ParseError("membrane structure: unexpected character '" + std::string(1, text[i]) + "'");
    }
    skip_ws();
  }
  if (t.labels_.empty()) throw ParseError("membrane structure is empty");
  if (!stack.empty()) throw ParseError("membrane structure: unbalanced '['");
  return t;
}

std::optional<std::size_t> MembraneTree::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> MembraneTree::parent(std::size_t node) const { return parent_[node]; }

std::size_t MembraneTree::height() const {
  std::vector<std::size_t> depth(labels_.size(), 0);
  std::size_t h = 0;
  // pre-order: a parent always precedes its children
  for (std::size_t i = 1; i < labels_.size(); ++i) {
    depth[i] = depth[*parent_[i]] + 1;
    h = std::max(h, depth[i]);
  }
  return h;
}

std::string MembraneTree::to_text() const {
  std::string out;
  auto emit = [&](auto&& self, std::size_t n) -> void {
    out += '[';
    out += labels_[n];
    for (std::size_t c : children_[n]) {
      out += ' ';
      self(self, c);
    }
    out += ']';
  };
  emit(emit, 0);
  return out;
}

std::string Target::to_text() const {
  switch (kind) {
    case Kind::here: return "here";
    case Kind::out: return "out";
    case Kind::in: return "in";
    case Kind::in_label: return "in(" + label + ")";
  }
  return {};
}

PSystem::PSystem(std::vector<Symbol> alphabet, std::vector<Symbol> terminals, MembraneTree tree,
                 std::vector<TargetedRule> rules, std::string initial, Array1D axiom)
    : alphabet_(sorted_symbols(std::move(alphabet))),
      terminals_(sorted_symbols(std::move(terminals))),
      tree_(std::move(tree)),
      rules_(std::move(rules)),
      initial_(std::move(initial)),
      axiom_(axiom.normalized()) {
  std::unordered_set<Symbol> in_v(alphabet_.begin(), alphabet_.end());
  for (Symbol t : terminals_) {
    if (!in_v.count(t)) throw ValidationError("terminal '" + std::string(t.token()) + "' is not in the alphabet");
    if (t.id() >= terminal_by_id_.size()) terminal_by_id_.resize(t.id() + 1, false);
    terminal_by_id_[t.id()] = true;
  }
  for (const auto& [pos, sym] : axiom_.cells())
    if (!in_v.count(sym)) throw ValidationError("axiom symbol '" + std::string(sym.token()) + "' is not in the alphabet");
  auto init = tree_.find(initial_);
  if (!init) throw ValidationError("unknown initial membrane '" + initial_ + "'");
  initial_node_ = *init;

  std::vector<std::vector<Rule>> per(tree_.size());
  compiled_.resize(tree_.size());
  for (const auto& tr : rules_) {
    auto m = tree_.find(tr.membrane);
    if (!m) throw ValidationError("rule '" + tr.rule.to_text() + "' names unknown membrane '" + tr.membrane + "'");
    for (Symbol s : tr.rule.symbols())
      if (!in_v.count(s))
        throw ValidationError("rule '" + tr.rule.to_text() + "' uses symbol '" + std::string(s.token()) +
                              "' outside the alphabet");
    std::size_t in_node = 0;
    if (tr.target.kind == Target::Kind::in && tree_.children(*m).empty())
      throw ValidationError("rule '" + tr.rule.to_text() + "' targets in, but membrane '" + tr.membrane +
                            "' has no children");
    if (tr.target.kind == Target::Kind::in_label) {
      auto c = tree_.find(tr.target.label);
      if (!c || tree_.parent(*c) != m)
        throw ValidationError("target in(" + tr.target.label + ") is not a child of membrane '" + tr.membrane + "'");
      in_node = *c;
    }
    per[*m].push_back(tr.rule);
    compiled_[*m].targets.push_back(tr.target);
    compiled_[*m].in_label_nodes.push_back(in_node);
  }
  for (std::size_t m = 0; m < tree_.size(); ++m) compiled_[m].rules = RuleSet(std::move(per[m]));
}

bool PSystem::is_terminal_array(const Array1D& a) const noexcept {
  for (Symbol s : a.row())
    if (!s.is_blank() && !(s.id() < terminal_by_id_.size() && terminal_by_id_[s.id()])) return false;
  return true;
}

namespace {

detail::Expansion<Configuration> expand(const PSystem& p, const Configuration& c) {
  detail::Expansion<Configuration> e;
  const auto& mr = p.membrane_rules(c.membrane);
  const auto& rules = mr.rules.rules();
  bool any = false;
  mr.rules.for_each_match(c.array, [&](std::size_t r, Position v) {
    any = true;
    const Target& t = mr.targets[r];
    switch (t.kind) {
      case Target::Kind::here:
        e.next.push_back({rules[r].apply_at(c.array, v), c.membrane});
        break;
      case Target::Kind::out:
        if (auto parent = p.tree().parent(c.membrane))
          e.next.push_back({rules[r].apply_at(c.array, v), static_cast<std::uint32_t>(*parent)});
        break;
      case Target::Kind::in: {
        Array1D next = rules[r].apply_at(c.array, v);
        for (std::size_t ch : p.tree().children(c.membrane))
          e.next.push_back({next, static_cast<std::uint32_t>(ch)});
        break;
      }
      case Target::Kind::in_label:
        e.next.push_back({rules[r].apply_at(c.array, v), static_cast<std::uint32_t>(mr.in_label_nodes[r])});
        break;
    }
  });
  e.halting = !any;
  return e;
}

std::string describe(const PSystem& p, const Configuration& c) {
  return "(" + render_array(c.array) + ", " + p.tree().label(c.membrane) + ")";
}

}  // namespace

std::vector<Configuration> psystem_successors(const PSystem& p, const Configuration& c) {
  auto next = expand(p, c).next;
  std::vector<std::pair<std::pair<std::uint32_t, std::string>, Configuration>> keyed;
  for (auto& n : next) keyed.push_back({{n.membrane, render_array(n.array)}, std::move(n)});
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
              keyed.end());
  next.clear();
  for (auto& [k, n] : keyed) next.push_back(std::move(n));
  return next;
}

bool is_halting(const PSystem& p, const Configuration& c) {
  return !p.membrane_rules(c.membrane).rules.any_match(c.array);
}

PsRun run_t_bounded(const PSystem& p, const Budget& b, unsigned jobs) {
  b.validate();
  PsRun out;
  out.lang.cell_cap = b.max_cells;
  const Configuration start{p.axiom(), static_cast<std::uint32_t>(p.initial())};
  const DeadStateFilter filter = b.prune_dead ? DeadStateFilter(p, true) : DeadStateFilter{};
  auto stats = detail::breadth_first<Configuration, ConfigurationHash>(
      start, b, jobs,
      [&](const Configuration& c) {
        auto e = expand(p, c);
        detail::drop_dead(e, [&](const Configuration& n) { return filter.dead(n.array, n.membrane); });
        return e;
      },
      [](const Configuration& c) -> const Array1D& { return c.array; },
      [&](const Configuration& c) { return describe(p, c); },
      [&](const Configuration& c, const detail::Expansion<Configuration>& e) {
        if (!e.halting) return false;
        const bool terminal = p.is_terminal_array(c.array);
        out.halting.push_back({p.tree().label(c.membrane), c.array, terminal});
        if (!terminal) return false;
        out.lang.arrays.push_back(c.array);
        return true;
      });
  sort_arrays(out.lang.arrays);
  std::sort(out.halting.begin(), out.halting.end(), [](const auto& x, const auto& y) {
    return std::pair(x.membrane, render_array(x.array)) < std::pair(y.membrane, render_array(y.array));
  });
  out.lang.complete = stats.complete;
  out.lang.states = stats.states;
  out.lang.excluded = stats.excluded;
  out.lang.pruned = stats.pruned;
  out.lang.first_excluded = std::move(stats.first_excluded);
  out.lang.truncation = std::move(stats.truncation);
  out.lang.step_cut = std::move(stats.step_cut);
  return out;
}

std::size_t tree_height(const PSystem& p) { return p.tree().height(); }

bool is_simple(const PSystem& p) {
  return std::none_of(p.rules().begin(), p.rules().end(),
                      [](const TargetedRule& r) { return r.target.kind == Target::Kind::in_label; });
}

namespace {

Target parse_target(std::string_view t) {
  t = trim(t);
  if (t == "here") return Target::here();
  if (t == "out") return Target::out();
  if (t == "in") return Target::in();
  if (t.size() > 4 && t.substr(0, 3) == "in(" && t.back() == ')') {
    auto l = trim(t.substr(3, t.size() - 4));
    check_label(l);
    return Target::in_label(std::string(l));
  }
  throw ParseError("unknown target '" + std::string(t) + "' (expected here, out, in or in(<label>))");
}

}  // namespace

PSystem parse_psystem(std::string_view text) {
  std::optional<MembraneTree> tree;
  std::optional<std::string> init;
  std::optional<std::vector<Symbol>> alphabet, terminals;
  std::optional<Array1D> axiom;
  std::vector<TargetedRule> rules;
  std::vector<int> rule_lines;

  for (const auto& line : content_lines(text)) {
    try {
      auto [key, value] = split_key(line.text);
      if (key == "membranes") {
        if (tree) throw ParseError("duplicate 'membranes:'");
        tree = MembraneTree::parse(value);
      } else if (key == "init") {
        if (init) throw ParseError("duplicate 'init:'");
        check_label(value);
        init = std::string(value);
      } else if (key == "alphabet") {
        if (alphabet) throw ParseError("duplicate 'alphabet:'");
        alphabet = parse_symbol_list(value);
      } else if (key == "terminals") {
        if (terminals) throw ParseError("duplicate 'terminals:'");
        terminals = parse_symbol_list(value);
      } else if (key == "axiom") {
        if (axiom) throw ParseError("duplicate 'axiom:'");
        axiom = parse_array(value);
      } else if (key.empty() && line.text.substr(0, 5) == "rule ") {
        auto body = trim(line.text.substr(5));
        if (body.empty() || body.front() != '@') throw ParseError("P-system rule must start with '@<membrane>'");
        auto sp = body.find_first_of(" \t");
        if (sp == std::string_view::npos) throw ParseError("P-system rule lacks a body");
        auto membrane = body.substr(1, sp - 1);
        check_label(membrane);
        body = trim(body.substr(sp));
        auto arrow = body.rfind("->");
        if (arrow == std::string_view::npos) throw ParseError("P-system rule lacks '-> <target>'");
        Target target = parse_target(body.substr(arrow + 2));
        rules.push_back({std::string(membrane), parse_rule(trim(body.substr(0, arrow))), std::move(target)});
        rule_lines.push_back(line.number);
      } else {
        throw ParseError("unexpected line '" + std::string(line.text) + "'");
      }
    } catch (const ParseError& e) {
      if (e.line() > 0) throw;
      throw ParseError(e.what(), line.number);
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line.number);
    }
  }
  if (!tree) throw ParseError("P-system file lacks 'membranes:'");
  if (!init) throw ParseError("P-system file lacks 'init:'");
  if (!alphabet) throw ParseError("P-system file lacks 'alphabet:'");
  if (!terminals) throw ParseError("P-system file lacks 'terminals:'");
  if (!axiom) throw ParseError("P-system file lacks 'axiom:'");
  try {
    return PSystem(std::move(*alphabet), std::move(*terminals), std::move(*tree), std::move(rules), std::move(*init),
                   std::move(*axiom));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_psystem(const PSystem& p) {
  std::string out;
  out += kFormatHeader;
  out += '\n';
  out += "membranes: " + p.tree().to_text() + '\n';
  out += "init: " + p.initial_label() + '\n';
  out += "alphabet: " + join_symbols(p.alphabet()) + '\n';
  out += "terminals: " + join_symbols(p.terminals()) + '\n';
  out += p.axiom().empty() ? std::string("axiom:\n") : "axiom: " + render_array(p.axiom()) + '\n';
  for (const auto& r : p.rules())
    out += "rule @" + r.membrane + ' ' + r.rule.to_text() + " -> " + r.target.to_text() + '\n';
  return out;
}

PSystem single_membrane(const Grammar& g) {
  std::vector<TargetedRule> rules;
  for (const auto& r : g.rules()) rules.push_back({"0", r, Target::here()});
  return PSystem(g.alphabet(), g.terminals(), MembraneTree::parse("[0]"), std::move(rules), "0", g.axiom());
}

}  // namespace agw
